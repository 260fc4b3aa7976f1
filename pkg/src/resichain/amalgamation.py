"""Spans of embeddings, amalgam search, and constructive amalgamators.

A span is two embeddings out of a common chain; an amalgam completes the
square inside a class, with the C-leg relaxed to a homomorphism in the
one-sided variant. find_amalgam searches candidate codomains
exhaustively in canonical order; amalgamate_components instead builds
the completion directly for spans of Gödel chains or of two-sided
chains by zipping the two element lists around the images of the common
chain. merge_nested_span lifts that idea to whole nested-sum
descriptors sharing labeled summands.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Optional, Sequence

from .chain import FiniteChain, canonical_signature, chain_from_json, enumerate_chains
from .constructors import NestedSumDescriptor, com, go, nested_sum
from .decomposition import decompose
from .errors import (
    InvalidSpan,
    NotCommutative,
    NotIdempotent,
    ShapeMismatch,
    SharedOrderConflict,
)
from .morphisms import (
    ChainMap,
    enumerate_embeddings,
    enumerate_homomorphisms,
    is_embedding,
    is_homomorphism,
)


@dataclass(frozen=True)
class Span:
    """Two embeddings i_B: A→B and i_C: A→C out of a shared chain."""

    A: FiniteChain
    B: FiniteChain
    C: FiniteChain
    i_B: ChainMap
    i_C: ChainMap

    def __post_init__(self):
        if self.i_B.domain != self.A or self.i_B.codomain != self.B:
            raise InvalidSpan()
        if self.i_C.domain != self.A or self.i_C.codomain != self.C:
            raise InvalidSpan()
        if not is_embedding(self.i_B) or not is_embedding(self.i_C):
            raise InvalidSpan()

    def to_json(self) -> dict:
        return {
            "A": self.A.to_json(),
            "B": self.B.to_json(),
            "C": self.C.to_json(),
            "iB": list(self.i_B.image),
            "iC": list(self.i_C.image),
        }


def span_from_json(data: dict) -> Span:
    a = chain_from_json(data["A"])
    b = chain_from_json(data["B"])
    c = chain_from_json(data["C"])
    return Span(
        a,
        b,
        c,
        ChainMap(a, b, tuple(data["iB"])),
        ChainMap(a, c, tuple(data["iC"])),
    )


@dataclass(frozen=True)
class AmalgamResult:
    """Completion of a span: j_B embeds B, j_C maps C (embedding unless
    one_sided), and both routes from A agree."""

    D: FiniteChain
    j_B: ChainMap
    j_C: ChainMap
    one_sided: bool

    def to_json(self) -> dict:
        return {
            "D": self.D.to_json(),
            "jB": list(self.j_B.image),
            "jC": list(self.j_C.image),
            "one_sided": self.one_sided,
        }


@dataclass(frozen=True)
class Refuted:
    """No amalgam exists in the class; trustworthy only when the search
    covered every member (complete=True was asserted by the caller)."""

    checked: int


@dataclass(frozen=True)
class BoundExhausted:
    """Search ran out of candidates below the size bound without either
    finding an amalgam or being entitled to refute."""

    size_bound: int


def verify_amalgam(span: Span, result: AmalgamResult) -> bool:
    """Independent recheck of every amalgam invariant."""
    jb, jc = result.j_B, result.j_C
    if jb.domain != span.B or jc.domain != span.C:
        return False
    if jb.codomain != result.D or jc.codomain != result.D:
        return False
    if not is_embedding(jb):
        return False
    if result.one_sided:
        if not is_homomorphism(jc):
            return False
    else:
        if not is_embedding(jc):
            return False
    return all(
        jb.image[span.i_B.image[x]] == jc.image[span.i_C.image[x]]
        for x in range(span.A.size)
    )


def _default_candidates(size_bound: int) -> Iterable[FiniteChain]:
    for n in range(1, size_bound + 1):
        yield from enumerate_chains(n, frozenset(), max_size=size_bound)


def find_amalgam(
    span: Span,
    class_membership: Callable[[FiniteChain], bool],
    size_bound: int,
    one_sided: bool = False,
    *,
    complete: bool = False,
    candidates: Optional[Iterable[FiniteChain]] = None,
):
    """Exhaustive search for an amalgam among class members up to
    size_bound, in canonical order (codomain size and signature, then
    both maps lexicographically). Returns the first certificate, else
    Refuted when the caller asserts the candidate pool covered the whole
    class (complete=True), else BoundExhausted.
    """
    if size_bound < max(span.B.size, span.C.size):
        raise ValueError("size_bound cannot be below the span's own chains")
    pool = _default_candidates(size_bound) if candidates is None else candidates
    seen = set()
    filtered = []
    for d in pool:
        if d.size > size_bound or not class_membership(d):
            continue
        key = canonical_signature(d)
        if key in seen:
            continue
        seen.add(key)
        filtered.append(d)
    filtered.sort(key=lambda d: (d.size, canonical_signature(d)))
    checked = 0
    for d in filtered:
        checked += 1
        if d.size < span.B.size or (not one_sided and d.size < span.C.size):
            continue
        jbs = enumerate_embeddings(span.B, d)
        if not jbs:
            continue
        homs = enumerate_homomorphisms(span.C, d) if one_sided else None
        for jb in jbs:
            forced = {
                span.i_C.image[x]: jb.image[span.i_B.image[x]]
                for x in range(span.A.size)
            }
            if one_sided:
                legs = [
                    h
                    for h in homs
                    if all(h.image[k] == v for k, v in forced.items())
                ]
            else:
                legs = enumerate_embeddings(span.C, d, forced)
            for jc in legs:
                return AmalgamResult(D=d, j_B=jb, j_C=jc, one_sided=one_sided)
    if complete:
        return Refuted(checked=checked)
    return BoundExhausted(size_bound=size_bound)


def _zip_side(
    b_elems: Sequence[int], c_elems: Sequence[int], anchors: Sequence[tuple]
) -> list:
    """Merge two ascending element lists that share identified anchor
    pairs. Between consecutive anchors the two gap segments are zipped
    aligned at the top, so equal-length gaps collapse onto shared slots;
    leftovers keep their own slot at the bottom of the gap. Returns slots
    (b_elem or None, c_elem or None)."""
    b_anchor_pos = [b_elems.index(bx) for bx, _ in anchors]
    c_anchor_pos = [c_elems.index(cx) for _, cx in anchors]
    slots = []
    prev_b = prev_c = 0
    for t in range(len(anchors) + 1):
        end_b = b_anchor_pos[t] if t < len(anchors) else len(b_elems)
        end_c = c_anchor_pos[t] if t < len(anchors) else len(c_elems)
        gap_b = list(b_elems[prev_b:end_b])
        gap_c = list(c_elems[prev_c:end_c])
        shared = min(len(gap_b), len(gap_c))
        for x in gap_b[: len(gap_b) - shared]:
            slots.append((x, None))
        for y in gap_c[: len(gap_c) - shared]:
            slots.append((None, y))
        for x, y in zip(gap_b[len(gap_b) - shared :], gap_c[len(gap_c) - shared :]):
            slots.append((x, y))
        if t < len(anchors):
            slots.append(anchors[t])
            prev_b, prev_c = end_b + 1, end_c + 1
    return slots


def _shape_of(chain: FiniteChain) -> tuple:
    try:
        sig = decompose(chain)
    except (NotCommutative, NotIdempotent):
        raise ShapeMismatch()
    if sig.pairs == ():
        return ("go", sig.p)
    if len(sig.pairs) == 1 and sig.p == 0:
        return ("com", sig.pairs[0])
    raise ShapeMismatch()


def amalgamate_components(span: Span) -> AmalgamResult:
    """Constructive two-sided amalgam for a span of Gödel chains or of
    two-sided chains: zip the below-unit element lists (and above-unit
    lists, in the two-sided case) around the anchor images of A. Never
    searches; the certificate is checked by the caller via
    verify_amalgam."""
    shapes = [_shape_of(x) for x in (span.A, span.B, span.C)]
    # the trivial chain fits either family, so only sized chains vote
    kinds = {
        s[0] for s, x in zip(shapes, (span.A, span.B, span.C)) if x.size > 1
    }
    if len(kinds) > 1:
        raise ShapeMismatch()
    kind = kinds.pop() if kinds else "go"
    ua, ub, uc = span.A.unit, span.B.unit, span.C.unit

    below_anchors = [
        (span.i_B.image[x], span.i_C.image[x]) for x in range(ua)
    ]
    below = _zip_side(list(range(ub)), list(range(uc)), below_anchors)

    if kind == "go":
        d = go(len(below))
        jb_img = [None] * span.B.size
        jc_img = [None] * span.C.size
        for pos, (x, y) in enumerate(below):
            if x is not None:
                jb_img[x] = pos
            if y is not None:
                jc_img[y] = pos
        jb_img[ub] = d.unit
        jc_img[uc] = d.unit
    else:
        above_anchors = [
            (span.i_B.image[x], span.i_C.image[x])
            for x in range(ua + 1, span.A.size)
        ]
        above = _zip_side(
            list(range(ub + 1, span.B.size)),
            list(range(uc + 1, span.C.size)),
            above_anchors,
        )
        d = com(len(below) - 1, len(above) - 1)
        jb_img = [None] * span.B.size
        jc_img = [None] * span.C.size
        for pos, (x, y) in enumerate(below):
            if x is not None:
                jb_img[x] = pos
            if y is not None:
                jc_img[y] = pos
        jb_img[ub] = d.unit
        jc_img[uc] = d.unit
        for pos, (x, y) in enumerate(above):
            if x is not None:
                jb_img[x] = d.unit + 1 + pos
            if y is not None:
                jc_img[y] = d.unit + 1 + pos
    return AmalgamResult(
        D=d,
        j_B=ChainMap(span.B, d, tuple(jb_img)),
        j_C=ChainMap(span.C, d, tuple(jc_img)),
        one_sided=False,
    )


def merge_nested_span(
    desc_a: NestedSumDescriptor,
    desc_b: NestedSumDescriptor,
    desc_c: NestedSumDescriptor,
) -> NestedSumDescriptor:
    """Merge two nested-sum descriptors over a shared sub-family of
    labeled summands. Shared labels must occur in the same relative
    order on both sides and carry equal components; between consecutive
    shared labels, B-only summands precede C-only summands."""
    b_labels, c_labels = list(desc_b.labels), list(desc_c.labels)
    shared_b = [l for l in b_labels if l in set(c_labels)]
    shared_c = [l for l in c_labels if l in set(b_labels)]
    if shared_b != shared_c:
        raise SharedOrderConflict()
    shared = shared_b
    for label in desc_a.labels:
        if label not in shared:
            raise ValueError("every summand of A must be shared by B and C")
    part_by_label = {}
    for desc in (desc_b, desc_c):
        for label, part in zip(desc.labels, desc.parts):
            if label in part_by_label and part_by_label[label] != part:
                raise ValueError(f"shared label {label!r} carries distinct parts")
            part_by_label[label] = part

    def segments(labels: list) -> list:
        out = []
        seg: list = []
        for l in labels:
            if l in set(shared):
                out.append(seg)
                seg = []
            else:
                seg.append(l)
        out.append(seg)
        return out

    segs_b, segs_c = segments(b_labels), segments(c_labels)
    merged: list = []
    for t in range(len(shared) + 1):
        merged.extend(segs_b[t])
        merged.extend(segs_c[t])
        if t < len(shared):
            merged.append(shared[t])
    parts = tuple(part_by_label[l] for l in merged)
    if all(isinstance(p, FiniteChain) for p in parts):
        chain, desc = nested_sum(parts, labels=tuple(merged))
        return desc
    return NestedSumDescriptor(parts=parts, labels=tuple(merged))
