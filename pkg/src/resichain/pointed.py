"""Chains expanded by a designated constant.

A pointed chain is a finite commutative idempotent chain plus a chosen
element f. Every such algebra lands in exactly one of six conditions:
on the skeleton f is the unit, below it, or above it (1a/1b/1c); off
the skeleton f sits below the unit with star-image the unit (2a), below
with star-image above (2b), or above the unit (2c). Each condition has
a smallest representative, and the subalgebra generated by f is always
isomorphic to that seed. Congruences of a pointed chain are exactly the
congruences of the unpointed chain, so no separate machinery is needed.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .chain import (
    STAR,
    FiniteChain,
    canonical_signature,
    chain_from_json,
    derived,
    enumerate_chains,
    restrict_to,
    subalgebra_generated,
)
from .constructors import com, go, nested_sum
from .decomposition import skeleton_blocks, sugihara_skeleton
from .errors import ConditionIsOneA
from .morphisms import ChainMap, congruences, enumerate_embeddings

ONE_A = "1a"
ONE_B = "1b"
ONE_C = "1c"
TWO_A = "2a"
TWO_B = "2b"
TWO_C = "2c"
CONDITIONS = (ONE_A, ONE_B, ONE_C, TWO_A, TWO_B, TWO_C)


@dataclass(frozen=True)
class PointedChain:
    """A finite chain with a designated constant f (an element index)."""

    base: FiniteChain
    f: int

    def __post_init__(self):
        if not 0 <= self.f < self.base.size:
            raise ValueError("f out of range")

    def to_json(self) -> dict:
        out = self.base.to_json()
        out["f"] = self.f
        return out


def pointed_from_json(data: dict) -> PointedChain:
    if "f" not in data:
        raise ValueError("pointed chain needs an \"f\" entry")
    rest = {k: v for k, v in data.items() if k != "f"}
    return PointedChain(base=chain_from_json(rest), f=int(data["f"]))


def condition_of(A: PointedChain) -> str:
    """Which of the six conditions holds; exactly one always does."""
    base, f = A.base, A.f
    skeleton = sugihara_skeleton(base)
    if f in skeleton:
        if f == base.unit:
            return ONE_A
        return ONE_B if f < base.unit else ONE_C
    if f > base.unit:
        return TWO_C
    fstar = derived(base, f, STAR)
    if fstar == base.unit:
        return TWO_A
    if fstar > base.unit:
        return TWO_B
    raise RuntimeError("no condition matched; base is outside the classified shape")


def seed_algebra(condition: str) -> PointedChain:
    """Smallest pointed chain satisfying the condition."""
    if condition == ONE_A:
        return PointedChain(go(0), 0)
    if condition == ONE_B:
        return PointedChain(com(0, 0), 0)
    if condition == ONE_C:
        return PointedChain(com(0, 0), 2)
    if condition == TWO_A:
        return PointedChain(go(1), 0)
    if condition == TWO_B:
        return PointedChain(com(1, 0), 0)
    if condition == TWO_C:
        return PointedChain(com(0, 1), 2)
    raise ValueError(f"unknown condition {condition!r}")


def is_pointed_embedding(h: ChainMap, A: PointedChain, B: PointedChain) -> bool:
    from .morphisms import is_embedding

    return (
        h.domain == A.base
        and h.codomain == B.base
        and h.image[A.f] == B.f
        and is_embedding(h)
    )


def enumerate_pointed_embeddings(A: PointedChain, B: PointedChain) -> List[ChainMap]:
    return [h for h in enumerate_embeddings(A.base, B.base) if h.image[A.f] == B.f]


def cross_embedding_count(pool: Sequence[PointedChain]) -> int:
    """Number of pointed embeddings between pool members of different
    conditions; always zero, exhaustively confirmed at pool scale."""
    tagged = [(condition_of(p), p) for p in pool]
    count = 0
    for ca, a in tagged:
        for cb, b in tagged:
            if ca != cb and enumerate_pointed_embeddings(a, b):
                count += 1
    return count


def partition(pool: Sequence[PointedChain]) -> Dict[str, List[PointedChain]]:
    """Bucket a pool by condition; also confirms no pointed embedding
    crosses buckets (a structural fact, revalidated on every call)."""
    buckets: Dict[str, List[PointedChain]] = {c: [] for c in CONDITIONS}
    for p in pool:
        buckets[condition_of(p)].append(p)
    if cross_embedding_count(pool) != 0:
        raise RuntimeError("a pointed embedding crossed conditions")
    return buckets


def pointed_pool(max_size: int) -> List[PointedChain]:
    """Every pointed commutative idempotent chain of size ≤ max_size."""
    out = []
    for n in range(1, max_size + 1):
        for c in enumerate_chains(n, filters=("commutative", "idempotent")):
            for f in c.elements():
                out.append(PointedChain(c, f))
    return out


def generated_pointed_subalgebra(A: PointedChain) -> PointedChain:
    """Subalgebra generated by f, with f relocalized."""
    universe = sorted(subalgebra_generated(A.base, [A.f]))
    sub = restrict_to(A.base, universe)
    return PointedChain(sub, universe.index(A.f))


def _part_chains(base: FiniteChain) -> Tuple[list, Optional[FiniteChain], list]:
    """Pair summands (outermost first), the tail summand or None, and the
    per-part element lists in base coordinates."""
    blocks = skeleton_blocks(base)
    k = len(blocks) // 2
    pair_elems = []
    for i in range(k):
        elems = sorted(tuple(blocks[i][1]) + (base.unit,) + tuple(blocks[2 * k - i][1]))
        pair_elems.append(elems)
    unit_block = sorted(blocks[k][1])
    pairs = [restrict_to(base, elems) for elems in pair_elems]
    tail = restrict_to(base, unit_block) if len(unit_block) > 1 else None
    return pairs, tail, pair_elems + [unit_block]


def pointed_decompose(A: PointedChain):
    """Split the nested-sum normal form at the summand holding f.

    Conditions 1b/1c/2b/2c yield (outer, middle-with-f, inner); condition
    2a yields (outer, tail-with-f). Condition 1a has no canonical split.
    """
    cond = condition_of(A)
    if cond == ONE_A:
        raise ConditionIsOneA()
    base, f = A.base, A.f
    pairs, tail, elem_lists = _part_chains(base)
    if cond == TWO_A:
        unit_block = elem_lists[-1]
        outer, _ = nested_sum(pairs)
        return outer, PointedChain(tail, unit_block.index(f))
    for i, elems in enumerate(elem_lists[:-1]):
        if f in elems:
            outer, _ = nested_sum(pairs[:i])
            inner_parts = pairs[i + 1 :] + ([tail] if tail is not None else [])
            inner, _ = nested_sum(inner_parts)
            middle = PointedChain(pairs[i], elems.index(f))
            return outer, middle, inner
    raise RuntimeError("f not located in any summand")


def pointed_congruences(A: PointedChain):
    """Congruences coincide with those of the f-free chain."""
    return congruences(A.base)
