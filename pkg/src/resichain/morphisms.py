"""Structure-preserving maps between chains, congruences, and quotients.

Maps are stored as tuples of images. On idempotent chains an injective
order-preserving unit-preserving map is an embedding exactly when it
preserves the two unit-residual operations, so enumeration only needs to
track those; general chains fall back to checking the full signature.
Congruences are determined by their unit class, which must be an
order-convex normal subuniverse; the whole partition is kept explicit
because quotients and projections read it directly.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Optional, Sequence, Union

from .chain import (
    ELL,
    LEFT,
    R,
    RIGHT,
    FiniteChain,
    derived,
    predicates,
    residual,
    signature_hex,
    validate,
)
from .constructors import NestedSumDescriptor, nested_sum
from .errors import ComponentNotEmbedding, NoSubcover, TopNotPreserved


@dataclass(frozen=True)
class ChainMap:
    """A function between two chains, recorded pointwise."""

    domain: FiniteChain
    codomain: FiniteChain
    image: tuple

    def __post_init__(self):
        if len(self.image) != self.domain.size:
            raise ValueError("one image per domain element")
        for v in self.image:
            if not 0 <= v < self.codomain.size:
                raise ValueError("image out of range")

    def __call__(self, x: int) -> int:
        return self.image[x]

    def is_injective(self) -> bool:
        return len(set(self.image)) == len(self.image)

    def is_order_preserving(self) -> bool:
        return all(
            self.image[x] <= self.image[x + 1] for x in range(self.domain.size - 1)
        )

    def compose(self, other: "ChainMap") -> "ChainMap":
        """self after other."""
        if other.codomain != self.domain:
            raise ValueError("codomain/domain mismatch")
        return ChainMap(
            other.domain, self.codomain, tuple(self.image[v] for v in other.image)
        )

    def to_json(self) -> dict:
        return {
            "domain": signature_hex(self.domain),
            "codomain": signature_hex(self.codomain),
            "image": list(self.image),
        }


def identity_map(chain: FiniteChain) -> ChainMap:
    return ChainMap(chain, chain, tuple(range(chain.size)))


def is_homomorphism(h: ChainMap) -> bool:
    """Preserves order (hence meet and join), unit, multiplication, and
    both residuals."""
    a, b, f = h.domain, h.codomain, h.image
    if f[a.unit] != b.unit:
        return False
    if not h.is_order_preserving():
        return False
    for x in range(a.size):
        for y in range(a.size):
            if f[a.mult[x][y]] != b.mult[f[x]][f[y]]:
                return False
            if f[residual(a, x, y, LEFT)] != residual(b, f[x], f[y], LEFT):
                return False
            if f[residual(a, x, y, RIGHT)] != residual(b, f[x], f[y], RIGHT):
                return False
    return True


def is_embedding(h: ChainMap) -> bool:
    """Injective homomorphism; on idempotent chains the check reduces to
    order, unit, and the two unit-residual maps."""
    if not (h.is_injective() and h.is_order_preserving()):
        return False
    a, b, f = h.domain, h.codomain, h.image
    if f[a.unit] != b.unit:
        return False
    if predicates(a).idempotent and predicates(b).idempotent:
        for x in range(a.size):
            if f[derived(a, x, ELL)] != derived(b, f[x], ELL):
                return False
            if f[derived(a, x, R)] != derived(b, f[x], R):
                return False
        return True
    return is_homomorphism(h)


def _embeddings_images(
    a: FiniteChain, b: FiniteChain, forced: Optional[dict] = None
) -> Iterable[tuple]:
    """Backtracking enumeration of embedding image tuples, lexicographic.

    forced maps domain elements to required images; used to pin partial
    data before searching. Candidates respect order and the unit; closure
    under the unit residuals is checked as each image is placed
    (idempotent case) or at the leaf (general case).
    """
    forced = dict(forced or {})
    if forced.get(a.unit, b.unit) != b.unit:
        return
    forced[a.unit] = b.unit
    both_idem = predicates(a).idempotent and predicates(b).idempotent
    images: list = [None] * a.size
    if both_idem:
        # local tables keep the backtracking loop free of cache lookups
        ell_a = tuple(derived(a, y, ELL) for y in range(a.size))
        r_a = tuple(derived(a, y, R) for y in range(a.size))
        ell_b = tuple(derived(b, v, ELL) for v in range(b.size))
        r_b = tuple(derived(b, v, R) for v in range(b.size))

    def closed_ok() -> bool:
        # check every derived-op constraint whose arguments are all placed
        for y in range(a.size):
            v = images[y]
            if v is None:
                continue
            z = ell_a[y]
            if images[z] is not None and images[z] != ell_b[v]:
                return False
            z = r_a[y]
            if images[z] is not None and images[z] != r_b[v]:
                return False
        return True

    def extend(x: int, low: int):
        if x == a.size:
            if both_idem:
                yield tuple(images)
            else:
                if is_homomorphism(ChainMap(a, b, tuple(images))):
                    yield tuple(images)
            return
        if x in forced:
            choices = [forced[x]] if forced[x] >= low else []
        else:
            hi = b.size - (a.size - x)  # leave room for the rest
            choices = range(low, hi + 1)
        for v in choices:
            if x != a.unit and v == b.unit:
                continue
            images[x] = v
            if not both_idem or closed_ok():
                yield from extend(x + 1, v + 1)
            images[x] = None

    yield from extend(0, 0)


@lru_cache(maxsize=None)
def _embedding_images_all(a: FiniteChain, b: FiniteChain) -> tuple:
    return tuple(_embeddings_images(a, b))


def enumerate_embeddings(
    a: FiniteChain, b: FiniteChain, forced: Optional[dict] = None
) -> list:
    if forced is None:
        return [ChainMap(a, b, f) for f in _embedding_images_all(a, b)]
    return [ChainMap(a, b, f) for f in _embeddings_images(a, b, forced)]


def embeds(a: FiniteChain, b: FiniteChain) -> bool:
    for _ in _embeddings_images(a, b):
        return True
    return False


@dataclass(frozen=True)
class Congruence:
    """A congruence, stored as its full block partition. blocks are the
    classes in chain order; kernel_class is the block of the unit."""

    chain: FiniteChain
    blocks: tuple
    kernel_class: tuple

    def __post_init__(self):
        seen = []
        for blk in self.blocks:
            # order-convex: each block is a run of consecutive elements
            if tuple(blk) != tuple(range(blk[0], blk[-1] + 1)):
                raise ValueError("blocks must be intervals")
            seen.extend(blk)
        if seen != list(range(self.chain.size)):
            raise ValueError("blocks must partition the chain in order")
        if self.chain.unit not in self.kernel_class:
            raise ValueError("kernel_class must contain the unit")

    def block_index(self, x: int) -> int:
        for i, blk in enumerate(self.blocks):
            if blk[0] <= x <= blk[-1]:
                return i
        raise ValueError("element out of range")

    def is_diagonal(self) -> bool:
        return all(len(blk) == 1 for blk in self.blocks)


def _interval_is_normal_subuniverse(chain: FiniteChain, lo: int, hi: int) -> bool:
    """Whether [lo, hi] carries a subuniverse closed under the conjugation
    bounds; these unit classes are exactly the congruence kernels."""
    u = chain.unit
    members = range(lo, hi + 1)
    for x in members:
        for y in members:
            if not lo <= chain.mult[x][y] <= hi:
                return False
            if not lo <= residual(chain, x, y, LEFT) <= hi:
                return False
            if not lo <= residual(chain, x, y, RIGHT) <= hi:
                return False
    if not predicates(chain).commutative:
        # x in class, a arbitrary: a\(xa) ∧ e and (ax)/a ∧ e stay in class
        for x in members:
            for a in range(chain.size):
                lam = min(residual(chain, a, chain.mult[x][a], LEFT), u)
                rho = min(residual(chain, a, chain.mult[a][x], RIGHT), u)
                if not (lo <= lam <= hi and lo <= rho <= hi):
                    return False
    return True


def _blocks_from_kernel(chain: FiniteChain, lo: int, hi: int) -> tuple:
    """Partition induced by the kernel interval [lo, hi]: x ~ y whenever
    x\\y ∧ y\\x ∧ e lands in the kernel."""
    u = chain.unit

    def related(x: int, y: int) -> bool:
        w = min(residual(chain, x, y, LEFT), residual(chain, y, x, LEFT), u)
        return lo <= w <= hi

    blocks = []
    x = 0
    while x < chain.size:
        y = x
        while y + 1 < chain.size and related(x, y + 1):
            y += 1
        blocks.append(tuple(range(x, y + 1)))
        x = y + 1
    return tuple(blocks)


def congruence_from_kernel(chain: FiniteChain, kernel: Sequence[int]) -> Congruence:
    """Build the congruence whose unit class is the given interval."""
    lo, hi = min(kernel), max(kernel)
    if sorted(kernel) != list(range(lo, hi + 1)):
        raise ValueError("kernel must be an interval")
    if not lo <= chain.unit <= hi:
        raise ValueError("kernel must contain the unit")
    if not _interval_is_normal_subuniverse(chain, lo, hi):
        raise ValueError("kernel is not a normal convex subuniverse")
    blocks = _blocks_from_kernel(chain, lo, hi)
    kernel_class = next(blk for blk in blocks if blk[0] <= chain.unit <= blk[-1])
    return Congruence(chain, blocks, kernel_class)


def congruences(chain: FiniteChain) -> list:
    """All congruences, one per order-convex normal subuniverse around the
    unit, smallest kernel first."""
    u = chain.unit
    out = []
    for width in range(chain.size):
        for lo in range(max(0, u - width), u + 1):
            hi = lo + width
            if hi >= chain.size or hi < u:
                continue
            if _interval_is_normal_subuniverse(chain, lo, hi):
                out.append(congruence_from_kernel(chain, range(lo, hi + 1)))
    return out


def quotient(chain: FiniteChain, cong: Congruence):
    """Quotient chain by a congruence; returns (chain, projection).

    Blocks keep the source order; merged blocks get a bracketed label
    listing the collapsed elements.
    """
    if cong.chain != chain:
        raise ValueError("congruence belongs to a different chain")
    blocks = cong.blocks
    index_of = {}
    for i, blk in enumerate(blocks):
        for x in blk:
            index_of[x] = i
    size = len(blocks)
    table = [
        [index_of[chain.mult[blk[0]][other[0]]] for other in blocks]
        for blk in blocks
    ]
    labels = tuple(
        chain.label(blk[0])
        if len(blk) == 1
        else "[" + " ".join(chain.label(x) for x in blk) + "]"
        for blk in blocks
    )
    q = validate(size, index_of[chain.unit], table, labels=labels)
    proj = ChainMap(chain, q, tuple(index_of[x] for x in range(chain.size)))
    return q, proj


def kernel_of(h: ChainMap) -> Congruence:
    """Congruence identifying elements with equal images."""
    blocks = []
    x = 0
    while x < h.domain.size:
        y = x
        while y + 1 < h.domain.size and h.image[y + 1] == h.image[x]:
            y += 1
        blocks.append(tuple(range(x, y + 1)))
        x = y + 1
    blocks = tuple(blocks)
    kernel_class = next(
        blk for blk in blocks if blk[0] <= h.domain.unit <= blk[-1]
    )
    return Congruence(h.domain, blocks, kernel_class)


@lru_cache(maxsize=None)
def _homomorphism_images(a: FiniteChain, b: FiniteChain) -> tuple:
    out = []
    for cong in congruences(a):
        q, proj = quotient(a, cong)
        for emb in enumerate_embeddings(q, b):
            out.append(emb.compose(proj).image)
    return tuple(sorted(out))


def enumerate_homomorphisms(a: FiniteChain, b: FiniteChain) -> list:
    """Every homomorphism factors as quotient projection then embedding,
    so enumeration walks (congruence, embedding-of-quotient) pairs."""
    return [ChainMap(a, b, f) for f in _homomorphism_images(a, b)]


def subcover_injectivity(h: ChainMap) -> bool:
    """A homomorphism is injective iff it separates the unit from the
    element directly below it; raises when no such element exists."""
    u = h.domain.unit
    if u == 0:
        raise NoSubcover()
    return h.image[u - 1] < h.image[u]


Partsish = Union[NestedSumDescriptor, Sequence[FiniteChain]]


def _as_descriptor(parts: Partsish) -> NestedSumDescriptor:
    if isinstance(parts, NestedSumDescriptor):
        if parts.chain is None or parts.element_maps is None:
            chain, desc = nested_sum(parts.parts, parts.labels)
            return desc
        return parts
    chain, desc = nested_sum(tuple(parts))
    return desc


def lift_nested_embedding(
    f: Sequence[int], parts_a: Partsish, parts_b: Partsish, g: Sequence[ChainMap]
) -> ChainMap:
    """Glue per-summand embeddings into an embedding of the nested sums.

    f sends summand positions of the first sum to summand positions of the
    second, strictly increasing. A summand whose unit residuals hit e
    (only legal in the innermost position) must stay innermost: if the
    first sum ends in such a summand, f must send it to the last position
    of the second, otherwise TopNotPreserved. Each g[i] must embed part i
    into part f[i], otherwise ComponentNotEmbedding(i).
    """
    src = _as_descriptor(parts_a)
    dst = _as_descriptor(parts_b)
    f = tuple(f)
    g = tuple(g)
    k = len(src.parts)
    if len(f) != k or len(g) != k:
        raise ValueError("one index and one map per summand")
    for i, j in enumerate(f):
        if not 0 <= j < len(dst.parts):
            raise ValueError("index map out of range")
        if i > 0 and f[i - 1] >= j:
            raise ValueError("index map must be strictly increasing")
    if k > 0 and not predicates(src.parts[-1]).admissible:
        if f[-1] != dst.top_index:
            raise TopNotPreserved()
    for i in range(k):
        gi = g[i]
        if (
            gi.domain != src.parts[i]
            or gi.codomain != dst.parts[f[i]]
            or not is_embedding(gi)
        ):
            raise ComponentNotEmbedding(i)
    image = [dst.chain.unit] * src.chain.size
    for i in range(k):
        smap = src.element_maps[i]
        dmap = dst.element_maps[f[i]]
        for x in range(src.parts[i].size):
            image[smap[x]] = dmap[g[i].image[x]]
    out = ChainMap(src.chain, dst.chain, tuple(image))
    assert is_embedding(out), "glued map failed the embedding criterion"
    return out
