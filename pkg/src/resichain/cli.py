"""Command line front end.

One binary, subcommand style. Chain data flows as JSON on stdin/stdout
so commands pipe: `resichain make com:1,1 | resichain check`. Exit codes:
0 success, 1 domain error (structured JSON on stdout), 2 usage error.
"""

from __future__ import annotations

import argparse
import itertools
import json
import os
import random
import sys
from concurrent.futures import ProcessPoolExecutor
from functools import partial

from . import zchain
from .amalgamation import (
    AmalgamResult,
    BoundExhausted,
    Refuted,
    Span,
    amalgamate_components,
    find_amalgam,
    span_from_json,
    verify_amalgam,
)
from .chain import (
    ELL,
    LEFT,
    R,
    RIGHT,
    STAR,
    FiniteChain,
    chain_from_json,
    derived,
    enumerate_chains,
    iso_equal,
    predicates,
    residual,
    signature_hex,
)
from .classification import (
    ChainClass,
    ap_verdict,
    class_members,
    hs_closure,
    parse_class,
    sig_in_class,
)
from .constructors import com, go, nested_sum
from .decomposition import count_chains, decompose, recompose
from .errors import ResichainError
from .morphisms import (
    ChainMap,
    congruence_from_kernel,
    congruences,
    enumerate_embeddings,
    enumerate_homomorphisms,
    is_homomorphism,
    quotient,
)
from .pointed import (
    condition_of,
    cross_embedding_count,
    partition as pointed_partition,
    pointed_from_json,
)
from .words import is_minimal, parse_word, preorder_leq
from .zchain import as_leq, as_mult, as_residual, as_unary, generated_reach, parse_element


def _read_json(path):
    if path is None or path == "-":
        return json.load(sys.stdin)
    with open(path, "r", encoding="utf-8") as fh:
        return json.load(fh)


def _usage_error(msg: str):
    """Argument-level mistakes exit 2, like argparse does."""
    print(msg, file=sys.stderr)
    raise SystemExit(2)


def _emit(obj, args) -> None:
    if getattr(args, "format", "json") == "table":
        _emit_table(obj)
    else:
        print(json.dumps(obj))


def _emit_table(obj, indent: str = "") -> None:
    if isinstance(obj, dict):
        for k, v in obj.items():
            if isinstance(v, (dict, list)):
                print(f"{indent}{k}:")
                _emit_table(v, indent + "  ")
            else:
                print(f"{indent}{k}: {v}")
    elif isinstance(obj, list):
        for v in obj:
            _emit_table(v, indent)
    else:
        print(f"{indent}{obj}")


def _load_chain(path) -> FiniteChain:
    return chain_from_json(_read_json(path))


def _element(chain: FiniteChain, name: str) -> int:
    try:
        return chain.index_of_label(name)
    except (KeyError, ValueError):
        pass
    try:
        idx = int(name)
    except ValueError:
        _usage_error(f"unknown element {name!r}")
    if not 0 <= idx < chain.size:
        _usage_error(f"element index {idx} out of range")
    return idx


def parse_make_spec(spec: str) -> FiniteChain:
    """go:N, com:M,N, or sum:PART+PART+... with parts in the same syntax."""
    if spec.startswith("sum:"):
        parts = [parse_make_spec(p) for p in spec[4:].split("+")]
        chain, _ = nested_sum(parts)
        return chain
    if spec.startswith("go:"):
        return go(int(spec[3:]))
    if spec.startswith("com:"):
        m, n = spec[4:].split(",")
        return com(int(m), int(n))
    _usage_error(f"unrecognized constructor spec {spec!r}")


def cmd_make(args) -> int:
    _emit(parse_make_spec(args.spec).to_json(), args)
    return 0


def cmd_show(args) -> int:
    c = _load_chain(args.file)
    if args.json or args.format == "json":
        print(json.dumps(c.to_json()))
        return 0
    print(" < ".join(c.label(x) for x in c.elements()))
    print(f"size {c.size}, unit {c.label(c.unit)}, signature {signature_hex(c)}")
    width = max(len(c.label(x)) for x in c.elements()) + 1
    header = " " * width + "".join(c.label(y).rjust(width) for y in c.elements())
    print(header)
    for x in c.elements():
        row = c.label(x).rjust(width)
        row += "".join(c.label(c.mul(x, y)).rjust(width) for y in c.elements())
        print(row)
    return 0


def cmd_check(args) -> int:
    c = _load_chain(args.file)
    _emit(predicates(c).as_dict(), args)
    return 0


def cmd_residual(args) -> int:
    c = _load_chain(args.file)
    x, y = _element(c, args.x), _element(c, args.y)
    z = residual(c, x, y, args.side)
    _emit({"x": c.label(x), "y": c.label(y), "side": args.side, "result": c.label(z)}, args)
    return 0


def cmd_decompose(args) -> int:
    c = _load_chain(args.file)
    sig = decompose(c)
    out = sig.to_json()
    out["text"] = sig.text()
    if args.format == "table":
        print(sig.text())
    else:
        _emit(out, args)
    return 0


def cmd_embed(args) -> int:
    a, b = _load_chain(args.a), _load_chain(args.b)
    maps = enumerate_embeddings(a, b)
    _emit({"count": len(maps), "maps": [m.to_json() for m in maps]}, args)
    return 0


def cmd_homs(args) -> int:
    a, b = _load_chain(args.a), _load_chain(args.b)
    maps = enumerate_homomorphisms(a, b)
    _emit({"count": len(maps), "maps": [m.to_json() for m in maps]}, args)
    return 0


def cmd_congruences(args) -> int:
    c = _load_chain(args.file)
    out = []
    for cong in congruences(c):
        out.append(
            {
                "kernel": [c.label(cong.kernel_class[0]), c.label(cong.kernel_class[-1])],
                "blocks": [[c.label(x) for x in blk] for blk in cong.blocks],
            }
        )
    _emit({"count": len(out), "congruences": out}, args)
    return 0


def cmd_quotient(args) -> int:
    c = _load_chain(args.file)
    lo_name, hi_name = args.kernel.split(",")
    lo, hi = _element(c, lo_name), _element(c, hi_name)
    if lo > hi:
        lo, hi = hi, lo
    try:
        cong = congruence_from_kernel(c, range(lo, hi + 1))
    except ValueError as exc:
        print(json.dumps({"error": "InvalidKernel", "detail": str(exc)}))
        return 1
    q, _ = quotient(c, cong)
    _emit(q.to_json(), args)
    return 0


def cmd_enumerate(args) -> int:
    filters = []
    if args.commutative:
        filters.append("commutative")
    if args.idempotent:
        filters.append("idempotent")
    if args.star_involutive:
        filters.append("star_involutive")
    chains = list(enumerate_chains(args.size, filters=tuple(filters)))
    if args.admissible:
        chains = [c for c in chains if predicates(c).admissible]
    if args.format == "table":
        print(f"count: {len(chains)}")
    else:
        _emit(
            {"size": args.size, "count": len(chains), "chains": [c.to_json() for c in chains]},
            args,
        )
    return 0


def cmd_amalgamate(args) -> int:
    span = span_from_json(_read_json(args.span))
    bound = args.bound if args.bound else span.B.size + span.C.size
    if args.construct:
        res = amalgamate_components(span)
        ok = verify_amalgam(span, res)
        out = res.to_json()
        out["verified"] = ok
        _emit({"found": True, **out}, args)
        return 0
    if args.cls:
        cls = parse_class(args.cls)

        def membership(d: FiniteChain) -> bool:
            p = predicates(d)
            return p.commutative and p.idempotent and sig_in_class(decompose(d), cls)

        candidates = class_members(cls, max_size=bound)
        complete = cls.is_finite and bound >= cls.max_member_size
    else:
        membership = None
        candidates = None
        complete = False
    res = find_amalgam(
        span,
        membership or (lambda d: True),
        bound,
        one_sided=args.one_sided,
        complete=complete,
        candidates=candidates,
    )
    if isinstance(res, AmalgamResult):
        _emit({"found": True, **res.to_json()}, args)
    elif isinstance(res, Refuted):
        _emit({"found": False, "refuted": True, "checked": res.checked}, args)
    else:
        _emit({"found": False, "refuted": False, "size_bound": res.size_bound}, args)
    return 0


def _load_generators(path):
    data = _read_json(path)
    if isinstance(data, dict):
        data = data.get("generators", [])
    return [chain_from_json(d) for d in data]


def cmd_classify(args) -> int:
    K = hs_closure(_load_generators(args.generators))
    verdict = ap_verdict(K)
    if hasattr(verdict, "canonical"):
        _emit({"class": verdict.canonical.text(), "ap": True}, args)
    else:
        out = {"class": None, "ap": False, "audit": [v.as_dict() for v in verdict.audit]}
        if verdict.witness is not None:
            out["witness"] = verdict.witness.to_json()
        _emit(out, args)
    return 0


def cmd_ap(args) -> int:
    if args.cls:
        cls = parse_class(args.cls)
        _emit({"ap": True, "class": cls.text()}, args)
        return 0
    if not args.generators:
        _usage_error("ap needs a generators file or --class")
    K = hs_closure(_load_generators(args.generators))
    _emit(ap_verdict(K).as_dict(), args)
    return 0


def cmd_words(args) -> int:
    if args.op == "leq":
        if args.w2 is None:
            _usage_error("words leq needs two words")
        w1, w2 = parse_word(args.w1), parse_word(args.w2)
        _emit(
            {"op": "leq", "w1": w1.text(), "w2": w2.text(), "holds": preorder_leq(w1, w2)},
            args,
        )
        return 0
    if args.op == "minimal":
        w = parse_word(args.w1)
        out = {"op": "minimal", "word": w.text()}
        out.update(is_minimal(w).to_json())
        _emit(out, args)
        return 0
    _usage_error(f"unknown words operation {args.op!r}")


def cmd_asop(args) -> int:
    spec = parse_word(args.set)
    op = args.op
    operands = [parse_element(t) for t in args.elements]
    if op == "mul":
        result = as_mult(spec, operands[0], operands[1]).text()
    elif op == "residual":
        result = as_residual(spec, operands[0], operands[1], args.side).text()
    elif op == "unary":
        result = as_unary(spec, operands[0], args.which).text()
    elif op == "leq":
        result = as_leq(operands[0], operands[1])
    elif op == "reach":
        reach = generated_reach(spec, operands[0], args.depth)
        result = [el.text() for el in sorted(reach, key=zchain._order_key)]
    else:
        _usage_error(f"unknown operation {op!r}")
    _emit({"result": result}, args)
    return 0


def cmd_pcondition(args) -> int:
    p = pointed_from_json(_read_json(args.file))
    _emit({"condition": condition_of(p)}, args)
    return 0


def cmd_ppartition(args) -> int:
    names = sorted(n for n in os.listdir(args.dir) if n.endswith(".json"))
    pool = []
    for name in names:
        with open(os.path.join(args.dir, name), "r", encoding="utf-8") as fh:
            pool.append((name, pointed_from_json(json.load(fh))))
    buckets = {c: [] for c in ("1a", "1b", "1c", "2a", "2b", "2c")}
    for name, p in pool:
        buckets[condition_of(p)].append(name)
    crossings = cross_embedding_count([p for _, p in pool])
    _emit({"buckets": buckets, "cross_embeddings": crossings}, args)
    return 0


# ---------------------------------------------------------------------------
# verification suites


def _criterion_embedding(h: ChainMap) -> bool:
    a, b = h.domain, h.codomain
    if not (h.is_injective() and h.is_order_preserving()):
        return False
    if h.image[a.unit] != b.unit:
        return False
    for x in a.elements():
        if derived(b, h.image[x], ELL) != h.image[derived(a, x, ELL)]:
            return False
        if derived(b, h.image[x], R) != h.image[derived(a, x, R)]:
            return False
    return True


def _definitional_embedding(h: ChainMap) -> bool:
    return h.is_injective() and is_homomorphism(h)


def _idempotent_pool(max_size: int) -> list:
    out = []
    for n in range(1, max_size + 1):
        out.extend(enumerate_chains(n, filters=("idempotent",)))
    return out


def _emb_criterion_worker(na: int, max_size: int):
    checked, failures = 0, []
    domains = list(enumerate_chains(na, filters=("idempotent",)))
    codomains = _idempotent_pool(max_size)
    for a in domains:
        for b in codomains:
            if b.size < a.size:
                continue
            for image in itertools.permutations(b.elements(), a.size):
                h = ChainMap(a, b, tuple(image))
                checked += 1
                if _criterion_embedding(h) != _definitional_embedding(h):
                    failures.append(
                        f"criterion mismatch: {signature_hex(a)}->{signature_hex(b)} {image}"
                    )
    return checked, failures


def suite_embedding_criterion(max_size: int, seed: int, jobs: int):
    worker = partial(_emb_criterion_worker, max_size=max_size)
    return _merge(_pmap(worker, list(range(1, max_size + 1)), jobs))


def _closed_forms_worker(n: int):
    checked, failures = 0, []
    for c in enumerate_chains(n, filters=("commutative", "idempotent")):
        for x in c.elements():
            xr = derived(c, x, R)
            xl = derived(c, x, ELL)
            for y in c.elements():
                expect_l = max(xr, y) if x <= y else min(xr, y)
                expect_r = max(xl, y) if x <= y else min(xl, y)
                checked += 2
                if residual(c, x, y, LEFT) != expect_l:
                    failures.append(f"left residual {signature_hex(c)} x={x} y={y}")
                if residual(c, x, y, RIGHT) != expect_r:
                    failures.append(f"right residual {signature_hex(c)} x={x} y={y}")
    return checked, failures


def suite_closed_forms(max_size: int, seed: int, jobs: int):
    return _merge(_pmap(_closed_forms_worker, list(range(1, max_size + 1)), jobs))


def _decomposition_worker(n: int):
    checked, failures = 0, []
    sigs = set()
    chains = list(enumerate_chains(n, filters=("commutative", "idempotent")))
    for c in chains:
        sig = decompose(c)
        rc, _ = recompose(sig)
        checked += 1
        if not iso_equal(rc, c):
            failures.append(f"round trip failed for {signature_hex(c)}")
        if sig.size != n:
            failures.append(f"size bookkeeping failed for {signature_hex(c)}")
        sigs.add(sig)
    if len(sigs) != len(chains):
        failures.append(f"signatures not unique at size {n}")
    if len(chains) != count_chains(n):
        failures.append(f"count mismatch at size {n}")
    return checked, failures


def suite_decomposition(max_size: int, seed: int, jobs: int):
    return _merge(_pmap(_decomposition_worker, list(range(1, max_size + 1)), jobs))


def suite_skeleton_contraction(max_size: int, seed: int, jobs: int):
    checked, failures = 0, []
    hi = max(0, max_size - 3)
    for m in range(0, hi + 1):
        for n in range(0, hi + 1):
            c = com(m, n)
            lo = c.index_of_label("b0")
            cong = congruence_from_kernel(c, range(lo, c.size))
            q, _ = quotient(c, cong)
            checked += 1
            if not iso_equal(q, go(m)):
                failures.append(f"contraction of com({m},{n}) is not go({m})")
    return checked, failures


def _congruence_worker(n: int):
    checked, failures = 0, []
    for c in enumerate_chains(n, filters=("idempotent",)):
        brute = set()
        for cuts in itertools.product([False, True], repeat=n - 1):
            blocks, start = [], 0
            for i, cut in enumerate(cuts):
                if cut:
                    blocks.append(tuple(range(start, i + 1)))
                    start = i + 1
            blocks.append(tuple(range(start, n)))
            index_of = {}
            for bi, blk in enumerate(blocks):
                for x in blk:
                    index_of[x] = bi
            ok = True
            for x in c.elements():
                for y in c.elements():
                    for x2 in blocks[index_of[x]]:
                        for y2 in blocks[index_of[y]]:
                            if index_of[c.mul(x, y)] != index_of[c.mul(x2, y2)]:
                                ok = False
                            if index_of[residual(c, x, y, LEFT)] != index_of[
                                residual(c, x2, y2, LEFT)
                            ]:
                                ok = False
                            if index_of[residual(c, x, y, RIGHT)] != index_of[
                                residual(c, x2, y2, RIGHT)
                            ]:
                                ok = False
                        if not ok:
                            break
                    if not ok:
                        break
                if not ok:
                    break
            if ok:
                brute.add(tuple(blocks))
        computed = {cg.blocks for cg in congruences(c)}
        checked += 1
        if brute != computed:
            failures.append(f"congruences differ from brute force on {signature_hex(c)}")
    return checked, failures


def suite_congruences(max_size: int, seed: int, jobs: int):
    return _merge(_pmap(_congruence_worker, list(range(1, max_size + 1)), jobs))


def suite_star_involution(max_size: int, seed: int, jobs: int):
    checked, failures = 0, []
    rnd = random.Random(seed)
    for _ in range(1000):
        bits = tuple(rnd.randint(0, 1) for _ in range(rnd.randint(1, 8)))
        spec = parse_word(f"per:{''.join(map(str, bits))}@{rnd.randint(-3, 3)}")
        kind = rnd.choice(("a", "b"))
        el = parse_element(f"{kind}:{rnd.randint(-10**6, 10**6)}")
        checked += 1
        if as_unary(spec, as_unary(spec, el, STAR), STAR) != el:
            failures.append(f"star not involutive at {el.text()} over {spec.text()}")
    for _ in range(100):
        bits = tuple(rnd.randint(0, 1) for _ in range(rnd.randint(1, 6)))
        spec = parse_word(f"per:{''.join(map(str, bits))}@0")
        for i in range(-6, 7):
            for kind in ("a", "b"):
                el = parse_element(f"{kind}:{i}")
                ell = zchain.window_residual_oracle(spec, el, zchain.UNIT, RIGHT)
                rr = zchain.window_residual_oracle(spec, el, zchain.UNIT, LEFT)
                checked += 3
                if as_unary(spec, el, ELL) != ell:
                    failures.append(f"ell mismatch at {el.text()} over {spec.text()}")
                if as_unary(spec, el, R) != rr:
                    failures.append(f"r mismatch at {el.text()} over {spec.text()}")
                star = min((ell, rr), key=zchain._order_key)
                if as_unary(spec, el, STAR) != star:
                    failures.append(f"star mismatch at {el.text()} over {spec.text()}")
    return checked, failures


def _counting_worker(n: int):
    got = sum(1 for _ in enumerate_chains(n, filters=("commutative", "idempotent")))
    want = count_chains(n)
    if got != want:
        return 1, [f"size {n}: enumerated {got}, signature count {want}"]
    return 1, []


def suite_counting(max_size: int, seed: int, jobs: int):
    return _merge(_pmap(_counting_worker, list(range(1, max_size + 1)), jobs))


def suite_component_amalgams(max_size: int, seed: int, jobs: int):
    checked, failures = 0, []
    pool = [go(q) for q in range(0, max_size)]
    pool += [
        com(m, n)
        for m in range(0, max_size)
        for n in range(0, max_size)
        if m + n + 3 <= max_size
    ]
    for a in pool:
        for bb in pool:
            embs_b = enumerate_embeddings(a, bb)
            if not embs_b:
                continue
            for cc in pool:
                for ib in embs_b:
                    for ic in enumerate_embeddings(a, cc):
                        span = Span(a, bb, cc, ib, ic)
                        try:
                            res = amalgamate_components(span)
                        except ResichainError:
                            continue
                        checked += 1
                        if not verify_amalgam(span, res):
                            failures.append(f"bad certificate for span over {a!r}")
                        if res.D.size > bb.size + cc.size - a.size:
                            failures.append(f"oversized amalgam for span over {a!r}")
    return checked, failures


SUITES = {
    "lemma:embedding-criterion": suite_embedding_criterion,
    "lemma:residual-closed-forms": suite_closed_forms,
    "lemma:decomposition-unique": suite_decomposition,
    "lemma:skeleton-contraction": suite_skeleton_contraction,
    "lemma:congruence-correspondence": suite_congruences,
    "lemma:star-involution": suite_star_involution,
    "lemma:counting": suite_counting,
    "lemma:component-amalgams": suite_component_amalgams,
}


def _pmap(fn, items, jobs):
    if jobs and jobs > 1 and len(items) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            return list(ex.map(fn, items))
    return [fn(x) for x in items]


def _merge(results):
    checked = sum(r[0] for r in results)
    failures = [f for r in results for f in r[1]]
    return checked, failures


def cmd_verify(args) -> int:
    names = list(SUITES) if args.suite == "all" else [args.suite]
    for name in names:
        if name not in SUITES:
            _usage_error(
                f"unknown suite {name!r}; known: {', '.join(sorted(SUITES))}"
            )
    overall_failures = 0
    for name in names:
        checked, failures = SUITES[name](args.max_size, args.seed, args.jobs)
        overall_failures += len(failures)
        _emit(
            {
                "suite": name,
                "checked": checked,
                "passed": checked - len(failures),
                "failed": len(failures),
                "failures": failures[:10],
            },
            args,
        )
    return 1 if overall_failures else 0


# ---------------------------------------------------------------------------


def _add_common(sub):
    sub.add_argument("--format", choices=("json", "table"), default="json")
    sub.add_argument("--jobs", type=int, default=1)
    sub.add_argument("--seed", type=int, default=0)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="resichain",
        description="Finite idempotent residuated chains: build, check, decompose, amalgamate, classify.",
    )
    subs = parser.add_subparsers(dest="verb", required=True)

    p = subs.add_parser("make", help="construct go:N, com:M,N, or sum:...")
    p.add_argument("spec")
    _add_common(p)
    p.set_defaults(handler=cmd_make)

    p = subs.add_parser("show", help="render a chain")
    p.add_argument("file", nargs="?")
    p.add_argument("--json", action="store_true")
    _add_common(p)
    p.set_defaults(handler=cmd_show)

    p = subs.add_parser("check", help="predicate report")
    p.add_argument("file", nargs="?")
    _add_common(p)
    p.set_defaults(handler=cmd_check)

    p = subs.add_parser("residual", help="x\\y or y/x by element label")
    p.add_argument("x")
    p.add_argument("y")
    p.add_argument("--side", choices=(LEFT, RIGHT), default=LEFT)
    p.add_argument("file", nargs="?")
    _add_common(p)
    p.set_defaults(handler=cmd_residual)

    p = subs.add_parser("decompose", help="nested-sum normal form")
    p.add_argument("file", nargs="?")
    _add_common(p)
    p.set_defaults(handler=cmd_decompose)

    p = subs.add_parser("embed", help="list embeddings A -> B")
    p.add_argument("a")
    p.add_argument("b")
    _add_common(p)
    p.set_defaults(handler=cmd_embed)

    p = subs.add_parser("homs", help="list homomorphisms A -> B")
    p.add_argument("a")
    p.add_argument("b")
    _add_common(p)
    p.set_defaults(handler=cmd_homs)

    p = subs.add_parser("congruences", help="list congruences")
    p.add_argument("file", nargs="?")
    _add_common(p)
    p.set_defaults(handler=cmd_congruences)

    p = subs.add_parser("quotient", help="quotient by kernel interval LO,HI")
    p.add_argument("--kernel", required=True)
    p.add_argument("file", nargs="?")
    _add_common(p)
    p.set_defaults(handler=cmd_quotient)

    p = subs.add_parser("enumerate", help="all chains of a size, up to isomorphism")
    p.add_argument("size", type=int)
    p.add_argument("--commutative", action="store_true")
    p.add_argument("--idempotent", action="store_true")
    p.add_argument("--star-involutive", dest="star_involutive", action="store_true")
    p.add_argument("--admissible", action="store_true")
    _add_common(p)
    p.set_defaults(handler=cmd_enumerate)

    p = subs.add_parser("amalgamate", help="complete a span from SPAN.json")
    p.add_argument("span")
    p.add_argument("--one-sided", dest="one_sided", action="store_true")
    p.add_argument("--bound", type=int, default=0)
    p.add_argument("--class", dest="cls")
    p.add_argument("--construct", action="store_true", help="use the component zipper")
    _add_common(p)
    p.set_defaults(handler=cmd_amalgamate)

    p = subs.add_parser("classify", help="classify the HS-closure of generators")
    p.add_argument("generators")
    _add_common(p)
    p.set_defaults(handler=cmd_classify)

    p = subs.add_parser("ap", help="amalgamation verdict")
    p.add_argument("generators", nargs="?")
    p.add_argument("--class", dest="cls")
    _add_common(p)
    p.set_defaults(handler=cmd_ap)

    p = subs.add_parser("words", help="bi-infinite word preorder and minimality")
    p.add_argument("op", choices=("leq", "minimal"))
    p.add_argument("w1")
    p.add_argument("w2", nargs="?")
    _add_common(p)
    p.set_defaults(handler=cmd_words)

    p = subs.add_parser("as-op", help="operate in the symbolic chain over a 0/1 word")
    p.add_argument("--set", required=True, help="word naming S, e.g. per:01")
    p.add_argument("op", choices=("mul", "residual", "unary", "leq", "reach"))
    p.add_argument("elements", nargs="+")
    p.add_argument("--side", choices=(LEFT, RIGHT), default=LEFT)
    p.add_argument("--which", choices=(ELL, R, STAR), default=STAR)
    p.add_argument("--depth", type=int, default=3)
    _add_common(p)
    p.set_defaults(handler=cmd_asop)

    p = subs.add_parser("pcondition", help="condition of a pointed chain")
    p.add_argument("file", nargs="?")
    _add_common(p)
    p.set_defaults(handler=cmd_pcondition)

    p = subs.add_parser("ppartition", help="partition a directory of pointed chains")
    p.add_argument("dir")
    _add_common(p)
    p.set_defaults(handler=cmd_ppartition)

    p = subs.add_parser("verify", help="run a lemma verification suite")
    p.add_argument("suite", help="suite name or 'all'")
    p.add_argument("--max-size", dest="max_size", type=int, default=4)
    _add_common(p)
    p.set_defaults(handler=cmd_verify)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.handler(args)
    except ResichainError as exc:
        print(json.dumps(exc.payload()))
        return 1
    except BrokenPipeError:
        return 0


if __name__ == "__main__":
    sys.exit(main())
