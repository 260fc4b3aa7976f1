"""The sixty canonical chain classes and the classifying decision tree.

A class is a family name plus parameters from {0, 1, ω}. Membership of a
finite commutative idempotent chain is decided on its decomposition
signature. Finite sets of chains closed under subalgebras and quotients
(here: ChainClass) can be classified exactly: probe memberships drive a
decision tree to a unique candidate, and the verdict is accepted only if
the candidate's member set equals the input set. The amalgamation
verdict follows: a set equal to one of the sixty has the property;
anything else gets an audit of violated closure rules plus, when found,
a concrete span with no one-sided completion inside the set.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, List, Optional, Tuple

from .chain import (
    FiniteChain,
    canonical_signature,
    is_subuniverse,
    restrict_to,
)
from .decomposition import DecompositionSignature, decompose, recompose
from .errors import NotHSClosed
from .morphisms import congruences, enumerate_embeddings, quotient
from .amalgamation import BoundExhausted, Refuted, Span, find_amalgam

OMEGA = float("inf")
PARAM_VALUES = (0, 1, OMEGA)


def param_text(value) -> str:
    return "w" if value == OMEGA else str(int(value))


def parse_param(text: str):
    text = text.strip()
    if text == "w":
        return OMEGA
    value = int(text)
    if value not in (0, 1):
        raise ValueError("parameters range over 0, 1, w")
    return value


E_FAMILY = "e"
FIN = "fin"
INF = "inf"
FIN_UNION_E = "fin+e"
INF_UNION_E = "inf+e"


@dataclass(frozen=True)
class CanonicalClass:
    """One of the sixty: a family tag plus parameters (None where the
    family does not use one)."""

    family: str
    m: Optional[float] = None
    n: Optional[float] = None
    p: Optional[float] = None

    def __post_init__(self):
        for v in (self.m, self.n, self.p):
            if v is not None and v not in PARAM_VALUES:
                raise ValueError("parameters range over 0, 1, w")
        if self.family == E_FAMILY:
            if self.m is not None or self.n is not None or self.p is None:
                raise ValueError("this family takes only p")
        elif self.family in (FIN, INF):
            if self.m is None or self.n is None or self.p is None:
                raise ValueError("this family takes m, p, n")
            if self.p < self.m:
                raise ValueError("p must dominate m")
        elif self.family == FIN_UNION_E:
            if self.m is None or self.n is None or self.p is None:
                raise ValueError("this family takes m, n, p")
            if self.p not in (1, OMEGA):
                raise ValueError("the union tail needs p in {1, w}")
            if self.p < self.m:
                raise ValueError("p must dominate m")
        elif self.family == INF_UNION_E:
            if self.m not in (None, 0):
                raise ValueError("this family fixes m = 0")
            if self.n is None or self.p is None:
                raise ValueError("this family takes n, p")
            if self.p not in (1, OMEGA):
                raise ValueError("the union tail needs p in {1, w}")
            object.__setattr__(self, "m", 0)
        else:
            raise ValueError(f"unknown family {self.family!r}")

    def text(self) -> str:
        if self.family == E_FAMILY:
            return f"e:{param_text(self.p)}"
        if self.family == FIN:
            return f"fin:{param_text(self.m)},{param_text(self.p)},{param_text(self.n)}"
        if self.family == INF:
            return f"inf:{param_text(self.m)},{param_text(self.p)},{param_text(self.n)}"
        if self.family == FIN_UNION_E:
            return f"fin:{param_text(self.m)},0,{param_text(self.n)}+e:{param_text(self.p)}"
        return f"inf:0,0,{param_text(self.n)}+e:{param_text(self.p)}"

    @property
    def is_finite(self) -> bool:
        """Whether the class has finitely many members."""
        if self.family == E_FAMILY:
            return self.p != OMEGA
        if self.family in (FIN, FIN_UNION_E):
            return OMEGA not in (self.m, self.n, self.p)
        return False

    @property
    def max_member_size(self) -> int:
        if not self.is_finite:
            raise ValueError("unbounded class")
        if self.family == E_FAMILY:
            return int(self.p) + 1
        if self.family == FIN:
            return int(self.m) + int(self.n) + int(self.p) + 3
        return max(int(self.m) + int(self.n) + 3, int(self.p) + 1)


def parse_class(text: str) -> CanonicalClass:
    """Parse `e:P`, `fin:M,P,N`, `inf:M,P,N`, `fin:M,0,N+e:P`, or
    `inf:0,0,N+e:P` with `w` standing for ω."""
    text = text.strip()
    parts = text.split("+")
    if len(parts) == 1:
        head = parts[0]
        if head.startswith("e:"):
            return CanonicalClass(E_FAMILY, p=parse_param(head[2:]))
        for family in (FIN, INF):
            if head.startswith(family + ":"):
                vals = head[len(family) + 1 :].split(",")
                if len(vals) != 3:
                    raise ValueError("expected three parameters")
                m, p, n = (parse_param(v) for v in vals)
                return CanonicalClass(family, m=m, n=n, p=p)
        raise ValueError(f"unrecognized class syntax: {text!r}")
    if len(parts) == 2 and parts[1].startswith("e:"):
        p = parse_param(parts[1][2:])
        head = parts[0]
        for family, union in ((FIN, FIN_UNION_E), (INF, INF_UNION_E)):
            if head.startswith(family + ":"):
                vals = head[len(family) + 1 :].split(",")
                if len(vals) != 3:
                    raise ValueError("expected three parameters")
                m, zero, n = (parse_param(v) for v in vals)
                if zero != 0:
                    raise ValueError("the union form fixes the middle parameter to 0")
                if union == INF_UNION_E and m != 0:
                    raise ValueError("the union form fixes m = 0")
                return CanonicalClass(union, m=m, n=n, p=p)
    raise ValueError(f"unrecognized class syntax: {text!r}")


def all_sixty() -> List[CanonicalClass]:
    out = []
    for p in PARAM_VALUES:
        out.append(CanonicalClass(E_FAMILY, p=p))
    for family in (FIN, INF):
        for m in PARAM_VALUES:
            for p in PARAM_VALUES:
                if p < m:
                    continue
                for n in PARAM_VALUES:
                    out.append(CanonicalClass(family, m=m, n=n, p=p))
    for m in PARAM_VALUES:
        for p in (1, OMEGA):
            if p < m:
                continue
            for n in PARAM_VALUES:
                out.append(CanonicalClass(FIN_UNION_E, m=m, n=n, p=p))
    for n in PARAM_VALUES:
        for p in (1, OMEGA):
            out.append(CanonicalClass(INF_UNION_E, n=n, p=p))
    return out


def sig_in_class(sig: DecompositionSignature, cls: CanonicalClass) -> bool:
    pairs, q = sig.pairs, sig.p
    if cls.family == E_FAMILY:
        return pairs == () and q <= cls.p
    if cls.family == FIN:
        return (
            len(pairs) <= 1
            and q <= cls.p
            and all(r <= cls.m and s <= cls.n for r, s in pairs)
        )
    if cls.family == INF:
        return q <= cls.p and all(r <= cls.m and s <= cls.n for r, s in pairs)
    if cls.family == FIN_UNION_E:
        in_fin = (
            len(pairs) <= 1
            and q == 0
            and all(r <= cls.m and s <= cls.n for r, s in pairs)
        )
        in_e = pairs == () and q <= cls.p
        return in_fin or in_e
    in_inf = q == 0 and all(r == 0 and s <= cls.n for r, s in pairs)
    in_e = pairs == () and q <= cls.p
    return in_inf or in_e


def member_of(chain: FiniteChain, cls: CanonicalClass) -> bool:
    return sig_in_class(decompose(chain), cls)


def _pair_sequences(budget: int, m, n) -> Iterable[tuple]:
    """Sequences of (r, s) pairs with r ≤ m, s ≤ n and total weight
    Σ(r+s+2) ≤ budget."""
    yield ()
    max_r = int(min(m, budget - 2)) if budget >= 2 else -1
    for r in range(0, max_r + 1):
        max_s = int(min(n, budget - 2 - r))
        for s in range(0, max_s + 1):
            for rest in _pair_sequences(budget - (r + s + 2), m, n):
                yield ((r, s),) + rest


def class_signatures(cls: CanonicalClass, max_size: Optional[int] = None) -> set:
    """All member signatures, complete for finite classes; unbounded
    classes require an explicit size cap."""
    if cls.is_finite:
        budget = cls.max_member_size
        if max_size is not None:
            budget = min(budget, max_size)
    else:
        if max_size is None:
            raise ValueError("unbounded class needs a size cap")
        budget = max_size
    out = set()
    nonunit = budget - 1
    if cls.family == E_FAMILY:
        families = [((), cls.p)]
    elif cls.family == FIN:
        families = [((), cls.p), "single"]
    elif cls.family == INF:
        families = ["multi"]
    elif cls.family == FIN_UNION_E:
        families = [((), cls.p), "single0"]
    else:
        families = [((), cls.p), "multi0"]
    for fam in families:
        if fam == "single" or fam == "single0":
            q_cap = cls.p if fam == "single" else 0
            for r in range(0, int(min(cls.m, nonunit)) + 1):
                for s in range(0, int(min(cls.n, nonunit)) + 1):
                    weight = r + s + 2
                    if weight > nonunit:
                        continue
                    q_hi = int(min(q_cap, nonunit - weight))
                    for q in range(0, q_hi + 1):
                        out.add(DecompositionSignature(((r, s),), q))
        elif fam == "multi" or fam == "multi0":
            m_cap = cls.m if fam == "multi" else 0
            p_cap = cls.p if fam == "multi" else 0
            for pairs in _pair_sequences(nonunit, m_cap, cls.n):
                weight = sum(r + s + 2 for r, s in pairs)
                q_hi = int(min(p_cap, nonunit - weight))
                for q in range(0, q_hi + 1):
                    out.add(DecompositionSignature(pairs, q))
        else:
            _, p_cap = fam
            for q in range(0, int(min(p_cap, nonunit)) + 1):
                out.add(DecompositionSignature((), q))
    return out


def class_members(cls: CanonicalClass, max_size: Optional[int] = None) -> list:
    """Member chains (canonical constructions), sorted by size."""
    sigs = sorted(class_signatures(cls, max_size), key=lambda s: (s.size, s.pairs, s.p))
    out = []
    for sig in sigs:
        chain, _ = recompose(sig)
        out.append(chain)
    return out


@dataclass(frozen=True)
class ChainClass:
    """A finite set of chains, deduplicated up to isomorphism."""

    members: tuple

    @classmethod
    def from_chains(cls, chains: Iterable[FiniteChain]) -> "ChainClass":
        seen = {}
        for c in chains:
            seen.setdefault(canonical_signature(c), c)
        members = tuple(
            sorted(seen.values(), key=lambda c: (c.size, canonical_signature(c)))
        )
        return cls(members=members)

    def signatures(self) -> frozenset:
        return frozenset(decompose(c) for c in self.members)

    def contains(self, chain: FiniteChain) -> bool:
        target = canonical_signature(chain)
        return any(canonical_signature(c) == target for c in self.members)

    def is_hs_closed(self) -> bool:
        if not self.members:
            return False
        keys = {canonical_signature(c) for c in self.members}
        for c in self.members:
            for sub in _all_subuniverses(c):
                if canonical_signature(restrict_to(c, sub)) not in keys:
                    return False
            for cong in congruences(c):
                q, _ = quotient(c, cong)
                if canonical_signature(q) not in keys:
                    return False
        return True


def _all_subuniverses(chain: FiniteChain) -> list:
    """Every subuniverse, as a sorted element tuple. Scans subsets of the
    non-unit elements; intended for desk-scale chains."""
    others = [x for x in chain.elements() if x != chain.unit]
    out = []
    for mask in range(1 << len(others)):
        subset = [chain.unit] + [x for i, x in enumerate(others) if mask >> i & 1]
        subset.sort()
        if is_subuniverse(chain, subset):
            out.append(tuple(subset))
    return out


def hs_closure(generators: Iterable[FiniteChain]) -> ChainClass:
    """Least superset closed under subalgebras and quotients."""
    pool = {}
    work = list(generators)
    while work:
        c = work.pop()
        key = canonical_signature(c)
        if key in pool:
            continue
        pool[key] = c
        for sub in _all_subuniverses(c):
            work.append(restrict_to(c, sub))
        for cong in congruences(c):
            q, _ = quotient(c, cong)
            work.append(q)
    return ChainClass.from_chains(pool.values())


def _probe(sigs: frozenset, pairs: tuple, q: int) -> bool:
    return DecompositionSignature(pairs, q) in sigs


def classify(K: ChainClass) -> Optional[CanonicalClass]:
    """Decision tree on probe memberships, then exact verification.

    Probes pin each parameter (two-step ladders capping at ω) and three
    shape questions: is any two-sided component present, do two of them
    ever stack, and does a two-sided component ever carry a tail. The
    resulting candidate is returned only when its member set equals K;
    unbounded candidates can never equal a finite K and yield None.
    """
    if not K.members or not K.is_hs_closed():
        raise NotHSClosed()
    sigs = K.signatures()
    has_c = _probe(sigs, ((0, 0),), 0)
    multi = _probe(sigs, ((0, 0), (0, 0)), 0)
    tail = _probe(sigs, ((0, 0),), 1)
    m_hat = OMEGA if _probe(sigs, ((2, 0),), 0) else (1 if _probe(sigs, ((1, 0),), 0) else 0)
    n_hat = OMEGA if _probe(sigs, ((0, 2),), 0) else (1 if _probe(sigs, ((0, 1),), 0) else 0)
    p_hat = OMEGA if _probe(sigs, (), 2) else (1 if _probe(sigs, (), 1) else 0)
    try:
        if not has_c:
            cand = CanonicalClass(E_FAMILY, p=p_hat)
        elif multi:
            if tail:
                cand = CanonicalClass(INF, m=m_hat, n=n_hat, p=p_hat)
            elif p_hat == 0:
                cand = CanonicalClass(INF, m=m_hat, n=n_hat, p=0)
            else:
                if m_hat != 0:
                    return None
                cand = CanonicalClass(INF_UNION_E, n=n_hat, p=p_hat)
        else:
            if tail or p_hat == 0:
                cand = CanonicalClass(FIN, m=m_hat, n=n_hat, p=p_hat)
            else:
                cand = CanonicalClass(FIN_UNION_E, m=m_hat, n=n_hat, p=p_hat)
    except ValueError:
        return None
    if not cand.is_finite:
        return None
    if class_signatures(cand) != set(sigs):
        return None
    return cand


_RULE_TEXT = {
    "i": "a tail of length 2 admits a tail of every positive length",
    "ii": "two stacked three-element components admit any stack height",
    "iii": "a lower side of length 2 admits every lower side and every tail",
    "iv": "an upper side of length 2 admits every upper side",
    "v": "a lower-only and an upper-only component combine into one",
    "vi": "a stacked three-element component swaps for any present two-sided component",
    "vii": "a positive tail upgrades to any present tail length",
}


@dataclass(frozen=True)
class RuleViolation:
    rule: str
    premises: tuple
    missing: DecompositionSignature

    def as_dict(self) -> dict:
        return {
            "rule": self.rule,
            "statement": _RULE_TEXT[self.rule],
            "premises": [s for s in self.premises],
            "missing": self.missing.text(),
        }


def closure_rule_violations(K: ChainClass, size_cap: int = 9) -> tuple:
    """Audit of the seven closure consequences of amalgamability, checked
    on every instantiation whose conclusion stays within size_cap."""
    sigs = K.signatures()
    found = []
    seen = set()

    def require(rule: str, premises: tuple, pairs: tuple, q: int) -> None:
        cand = DecompositionSignature(pairs, q)
        if cand.size > size_cap or cand in sigs:
            return
        key = (rule, cand)
        if key in seen:
            return
        seen.add(key)
        found.append(RuleViolation(rule, premises, cand))

    def texts(*ss: DecompositionSignature) -> tuple:
        return tuple(s.text() for s in ss)

    for sig in sigs:
        if sig.p == 2:
            n = 1
            while sum(r + s + 2 for r, s in sig.pairs) + n + 1 <= size_cap:
                require("i", texts(sig), sig.pairs, n)
                n += 1
        if len(sig.pairs) >= 2 and sig.pairs[0] == (0, 0) and sig.pairs[1] == (0, 0):
            rest = sig.pairs[2:]
            k = 1
            while True:
                pairs = ((0, 0),) * k + rest
                if sum(r + s + 2 for r, s in pairs) + sig.p + 1 > size_cap:
                    break
                require("ii", texts(sig), pairs, sig.p)
                k += 1
        if len(sig.pairs) == 1 and sig.p == 0:
            (r, s) = sig.pairs[0]
            if r == 2:
                for m in range(0, size_cap - s - 2 + 1):
                    require("iii", texts(sig), ((m, s),), 0)
                for m in range(0, size_cap):
                    require("iii", texts(sig), (), m)
            if s == 2:
                for n in range(0, size_cap - r - 2 + 1):
                    require("iv", texts(sig), ((r, n),), 0)
        for i, pair in enumerate(sig.pairs):
            if pair != (0, 0):
                continue
            for other in sigs:
                if len(other.pairs) == 1 and other.p == 0:
                    swapped = sig.pairs[:i] + (other.pairs[0],) + sig.pairs[i + 1 :]
                    if sum(r + s + 2 for r, s in swapped) + sig.p + 1 <= size_cap:
                        require("vi", texts(sig, other), swapped, sig.p)
        if sig.p == 1:
            for other in sigs:
                if other.pairs == ():
                    pairs_weight = sum(r + s + 2 for r, s in sig.pairs)
                    if pairs_weight + other.p + 1 <= size_cap:
                        require("vii", texts(sig, other), sig.pairs, other.p)
    for s1 in sigs:
        if len(s1.pairs) == 1 and s1.p == 0 and s1.pairs[0][1] == 0:
            for s2 in sigs:
                if len(s2.pairs) == 1 and s2.p == 0 and s2.pairs[0][0] == 0:
                    m, n = s1.pairs[0][0], s2.pairs[0][1]
                    if m + n + 3 <= size_cap:
                        require("v", texts(s1, s2), ((m, n),), 0)
    order = {r: i for i, r in enumerate(["i", "ii", "iii", "iv", "v", "vi", "vii"])}
    found.sort(key=lambda v: (order[v.rule], v.missing.size, v.missing.pairs, v.missing.p))
    return tuple(found)


@dataclass(frozen=True)
class HasAP:
    canonical: CanonicalClass

    def as_dict(self) -> dict:
        return {"ap": True, "class": self.canonical.text()}


@dataclass(frozen=True)
class NoAP:
    audit: tuple
    witness: Optional[Span] = None
    refutation: Optional[Refuted] = None

    def as_dict(self) -> dict:
        out: dict = {"ap": False, "audit": [v.as_dict() for v in self.audit]}
        if self.witness is not None:
            out["witness"] = self.witness.to_json()
            out["witness_complete"] = True
        return out


def find_refuting_span(K: ChainClass) -> Tuple[Optional[Span], Optional[Refuted]]:
    """First span over K (canonical order) with no one-sided completion
    in K; the search per span is complete because K lists every member."""
    members = list(K.members)
    sig_set = {canonical_signature(c) for c in members}
    bound = max(c.size for c in members)

    def membership(d: FiniteChain) -> bool:
        return canonical_signature(d) in sig_set

    for a in members:
        for bb in members:
            embs_b = enumerate_embeddings(a, bb)
            if not embs_b:
                continue
            for cc in members:
                embs_c = enumerate_embeddings(a, cc)
                for ib in embs_b:
                    for ic in embs_c:
                        span = Span(a, bb, cc, ib, ic)
                        res = find_amalgam(
                            span,
                            membership,
                            max(bound, bb.size, cc.size),
                            one_sided=True,
                            complete=True,
                            candidates=members,
                        )
                        if isinstance(res, Refuted):
                            return span, res
    return None, None


def ap_verdict(K: ChainClass):
    """HasAP with the canonical class when K is one of the sixty member
    sets; otherwise NoAP carrying the closure-rule audit and, when one
    is found, a concretely refuted span."""
    cand = classify(K)
    if cand is not None:
        return HasAP(canonical=cand)
    audit = closure_rule_violations(K)
    witness, refutation = find_refuting_span(K)
    return NoAP(audit=audit, witness=witness, refutation=refutation)
