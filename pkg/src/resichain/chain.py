"""Finite residuated chains as multiplication tables over 0..n-1.

A chain of size n lives on the universe {0 < 1 < ... < n-1} with 0 the bottom
and n-1 the top. The data is the monoid unit and the full multiplication
table. Meet and join are min and max. On a finite chain both residuals exist
exactly when multiplication is monotone in each argument and the bottom
element is absorbing, so validation checks unit, associativity, monotonicity
and bottom-absorption and nothing else.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Optional, Sequence

from .errors import InvalidChainError, SizeTooLarge, Violation

LEFT = "left"
RIGHT = "right"
ELL = "ell"
R = "r"
STAR = "star"

KNOWN_FILTERS = frozenset({"commutative", "idempotent", "star_involutive"})

DEFAULT_MAX_SIZE = 7
_ENV_MAX_SIZE = "RESICHAIN_MAX_SIZE"


def enumeration_cap() -> int:
    raw = os.environ.get(_ENV_MAX_SIZE)
    if raw is None:
        return DEFAULT_MAX_SIZE
    try:
        cap = int(raw)
    except ValueError:
        raise ValueError(f"{_ENV_MAX_SIZE} must be an integer, got {raw!r}")
    if cap < 1:
        raise ValueError(f"{_ENV_MAX_SIZE} must be positive")
    return cap


@dataclass(frozen=True)
class FiniteChain:
    """Immutable residuated chain. Build through validate() or a constructor."""

    size: int
    unit: int
    mult: tuple
    labels: Optional[tuple] = field(default=None, compare=False)

    def mul(self, x: int, y: int) -> int:
        return self.mult[x][y]

    @property
    def bottom(self) -> int:
        return 0

    @property
    def top(self) -> int:
        return self.size - 1

    def elements(self) -> range:
        return range(self.size)

    def label(self, x: int) -> str:
        if self.labels is not None:
            return self.labels[x]
        if x == self.unit:
            return "e"
        return f"x{x}"

    def index_of_label(self, name: str) -> int:
        if self.labels is not None and name in self.labels:
            return self.labels.index(name)
        if name == "e":
            return self.unit
        if name.startswith("x"):
            try:
                idx = int(name[1:])
            except ValueError:
                raise KeyError(name)
            if 0 <= idx < self.size:
                return idx
        raise KeyError(name)

    def to_json(self) -> dict:
        out = {"size": self.size, "unit": self.unit, "mult": [list(r) for r in self.mult]}
        if self.labels is not None:
            out["labels"] = list(self.labels)
        return out

    def __repr__(self) -> str:
        return f"FiniteChain(size={self.size}, unit={self.unit})"


def chain_from_json(data: dict) -> FiniteChain:
    labels = data.get("labels")
    return validate(
        data["size"],
        data["unit"],
        data["mult"],
        labels=tuple(labels) if labels is not None else None,
    )


def validate(size: int, unit: int, mult: Sequence[Sequence[int]],
             labels: Optional[Sequence[str]] = None) -> FiniteChain:
    """Check the four chain invariants; raise InvalidChainError listing all failures.

    Unit law and associativity report as NotAMonoid, order-preservation as
    NotMonotone, bottom-absorption as NotResiduated (it is exactly what
    residuation needs on top of the rest), a bad unit index as UnitOutOfRange.
    """
    if size < 1:
        raise ValueError("size must be at least 1")
    rows = tuple(tuple(int(v) for v in row) for row in mult)
    if len(rows) != size or any(len(r) != size for r in rows):
        raise ValueError("mult must be a size x size table")
    for x in range(size):
        for y in range(size):
            if not 0 <= rows[x][y] < size:
                raise ValueError(f"table entry mult[{x}][{y}] out of range")
    if labels is not None:
        labels = tuple(str(s) for s in labels)
        if len(labels) != size:
            raise ValueError("labels must match size")

    violations = []
    if not 0 <= unit < size:
        violations.append(Violation("UnitOutOfRange", (unit,)))
    else:
        unit_bad = next(
            ((x,) for x in range(size) if rows[unit][x] != x or rows[x][unit] != x),
            None,
        )
        assoc_bad = None
        if unit_bad is None:
            for x in range(size):
                rx = rows[x]
                for y in range(size):
                    rxy = rows[rx[y]]
                    ry = rows[y]
                    for z in range(size):
                        if rxy[z] != rx[ry[z]]:
                            assoc_bad = (x, y, z)
                            break
                    if assoc_bad:
                        break
                if assoc_bad:
                    break
        if unit_bad is not None:
            violations.append(Violation("NotAMonoid", ("unit",) + unit_bad))
        elif assoc_bad is not None:
            violations.append(Violation("NotAMonoid", ("assoc",) + assoc_bad))

    mono_bad = None
    for x in range(size):
        for y in range(size - 1):
            if rows[x][y] > rows[x][y + 1]:
                mono_bad = ("row", x, y, y + 1)
                break
            if rows[y][x] > rows[y + 1][x]:
                mono_bad = ("col", x, y, y + 1)
                break
        if mono_bad:
            break
    if mono_bad:
        violations.append(Violation("NotMonotone", mono_bad))

    absorb_bad = next(
        (("bottom", x) for x in range(size) if rows[x][0] != 0 or rows[0][x] != 0),
        None,
    )
    if absorb_bad:
        violations.append(Violation("NotResiduated", absorb_bad))

    if violations:
        raise InvalidChainError(violations)
    return FiniteChain(size, unit, rows, labels)


@lru_cache(maxsize=None)
def _left_residual_table(chain: FiniteChain) -> tuple:
    """lres[x][y] = x\\y = max{z : x*z <= y}."""
    n = chain.size
    mult = chain.mult
    out = []
    for x in range(n):
        row = []
        mx = mult[x]
        for y in range(n):
            for z in range(n - 1, -1, -1):
                if mx[z] <= y:
                    row.append(z)
                    break
        out.append(tuple(row))
    return tuple(out)


@lru_cache(maxsize=None)
def _right_residual_table(chain: FiniteChain) -> tuple:
    """rres[x][y] = y/x = max{z : z*x <= y}."""
    n = chain.size
    mult = chain.mult
    out = []
    for x in range(n):
        row = []
        for y in range(n):
            for z in range(n - 1, -1, -1):
                if mult[z][x] <= y:
                    row.append(z)
                    break
        out.append(tuple(row))
    return tuple(out)


def residual(chain: FiniteChain, x: int, y: int, side: str) -> int:
    """left: x\\y. right: y/x. Always defined on a valid chain."""
    if side == LEFT:
        return _left_residual_table(chain)[x][y]
    if side == RIGHT:
        return _right_residual_table(chain)[x][y]
    raise ValueError(f"side must be {LEFT!r} or {RIGHT!r}")


@lru_cache(maxsize=None)
def _unary_tables(chain: FiniteChain) -> tuple:
    """(ell, r, star) with ell(x) = e/x, r(x) = x\\e, star their meet."""
    e = chain.unit
    lres = _left_residual_table(chain)
    rres = _right_residual_table(chain)
    ell = tuple(rres[x][e] for x in chain.elements())
    r = tuple(lres[x][e] for x in chain.elements())
    star = tuple(min(a, b) for a, b in zip(ell, r))
    return ell, r, star


def derived(chain: FiniteChain, x: int, which: str) -> int:
    ell, r, star = _unary_tables(chain)
    if which == ELL:
        return ell[x]
    if which == R:
        return r[x]
    if which == STAR:
        return star[x]
    raise ValueError(f"which must be one of {ELL!r}, {R!r}, {STAR!r}")


@dataclass(frozen=True)
class ChainPredicates:
    commutative: bool
    idempotent: bool
    star_involutive: bool
    admissible: bool

    def as_dict(self) -> dict:
        return {
            "commutative": self.commutative,
            "idempotent": self.idempotent,
            "star_involutive": self.star_involutive,
            "admissible": self.admissible,
        }


@lru_cache(maxsize=None)
def predicates(chain: FiniteChain) -> ChainPredicates:
    n = chain.size
    mult = chain.mult
    commutative = all(mult[x][y] == mult[y][x] for x in range(n) for y in range(x + 1, n))
    idempotent = all(mult[x][x] == x for x in range(n))
    ell, r, star = _unary_tables(chain)
    star_involutive = all(star[star[x]] == x for x in range(n))
    e = chain.unit
    admissible = all(ell[x] != e and r[x] != e for x in range(n) if x != e)
    return ChainPredicates(commutative, idempotent, star_involutive, admissible)


def subalgebra_generated(chain: FiniteChain, seed: Iterable[int]) -> frozenset:
    """Smallest subuniverse containing the seed.

    Idempotent chains only need closure under the two unary residual maps;
    otherwise close under multiplication and both residuals. Meet and join
    never add elements on a chain.
    """
    elems = set(int(x) for x in seed)
    for x in elems:
        if not 0 <= x < chain.size:
            raise ValueError(f"seed element {x} out of range")
    elems.add(chain.unit)
    if predicates(chain).idempotent:
        ell, r, _ = _unary_tables(chain)
        frontier = list(elems)
        while frontier:
            x = frontier.pop()
            for nxt in (ell[x], r[x]):
                if nxt not in elems:
                    elems.add(nxt)
                    frontier.append(nxt)
    else:
        mult = chain.mult
        lres = _left_residual_table(chain)
        rres = _right_residual_table(chain)
        changed = True
        while changed:
            changed = False
            snapshot = list(elems)
            for x in snapshot:
                for y in snapshot:
                    for nxt in (mult[x][y], lres[x][y], rres[x][y]):
                        if nxt not in elems:
                            elems.add(nxt)
                            changed = True
    return frozenset(elems)


def restrict_to(chain: FiniteChain, subuniverse: Iterable[int]) -> FiniteChain:
    """The subalgebra on a subuniverse, reindexed onto 0..k-1."""
    order = sorted(set(subuniverse))
    if chain.unit not in order:
        raise ValueError("subuniverse must contain the unit")
    pos = {x: i for i, x in enumerate(order)}
    k = len(order)
    table = [[0] * k for _ in range(k)]
    for i, x in enumerate(order):
        for j, y in enumerate(order):
            v = chain.mult[x][y]
            if v not in pos:
                raise ValueError("not closed under multiplication")
            table[i][j] = pos[v]
    labels = tuple(chain.label(x) for x in order) if chain.labels is not None else None
    return validate(k, pos[chain.unit], table, labels=labels)


def is_subuniverse(chain: FiniteChain, subset: Iterable[int]) -> bool:
    s = set(subset)
    if chain.unit not in s:
        return False
    mult = chain.mult
    lres = _left_residual_table(chain)
    rres = _right_residual_table(chain)
    for x in s:
        for y in s:
            if mult[x][y] not in s or lres[x][y] not in s or rres[x][y] not in s:
                return False
    return True


@lru_cache(maxsize=None)
def canonical_signature(chain: FiniteChain) -> bytes:
    """Injective encoding of (size, unit, table).

    Any order isomorphism between chains on 0..n-1 is the identity, so equal
    signatures mean equal algebras and distinct signatures mean no isomorphism.
    """
    n = chain.size
    flat = [n, chain.unit]
    for row in chain.mult:
        flat.extend(row)
    if n < 256:
        return b"\x01" + bytes(flat)
    return b"\x04" + b"".join(v.to_bytes(4, "big") for v in flat)


def signature_hex(chain: FiniteChain) -> str:
    return canonical_signature(chain).hex()


def iso_equal(a: FiniteChain, b: FiniteChain) -> bool:
    return canonical_signature(a) == canonical_signature(b)


TRIVIAL = FiniteChain(1, 0, ((0,),), ("e",))


def enumerate_chains(n: int, filters: Iterable[str] = (), max_size: Optional[int] = None):
    """All residuated chains of size n meeting the filters, one per iso class.

    The idempotent filter switches to the two-valued search (each product of
    distinct elements is one of its arguments); without it the search ranges
    over full tables and is only practical for small n. Results are sorted by
    canonical signature.
    """
    filters = frozenset(filters)
    unknown = filters - KNOWN_FILTERS
    if unknown:
        raise ValueError(f"unknown filters: {sorted(unknown)}")
    if n < 1:
        raise ValueError("size must be at least 1")
    cap = max_size if max_size is not None else enumeration_cap()
    if n > cap:
        raise SizeTooLarge(f"size {n} exceeds the enumeration cap {cap}")

    if n == 1:
        return [TRIVIAL]

    results = []
    for unit in range(1, n):
        if "idempotent" in filters:
            _search_idempotent(n, unit, "commutative" in filters, results)
        else:
            _search_general(n, unit, results)

    if "commutative" in filters and "idempotent" not in filters:
        results = [c for c in results if predicates(c).commutative]
    if "star_involutive" in filters:
        results = [c for c in results if predicates(c).star_involutive]
    results.sort(key=canonical_signature)
    return results


def _forced_table(n: int, unit: int):
    """Start a table with bottom, unit and the diagonal-free forced cells."""
    t = [[None] * n for _ in range(n)]
    for x in range(n):
        t[x][0] = 0
        t[0][x] = 0
        t[unit][x] = x
        t[x][unit] = x
    return t


def _row_col_ok(t, x: int, y: int, n: int) -> bool:
    """Monotonicity around a fresh entry against already filled neighbours."""
    v = t[x][y]
    for yy in range(y - 1, -1, -1):
        if t[x][yy] is not None:
            if t[x][yy] > v:
                return False
            break
    for yy in range(y + 1, n):
        if t[x][yy] is not None:
            if v > t[x][yy]:
                return False
            break
    for xx in range(x - 1, -1, -1):
        if t[xx][y] is not None:
            if t[xx][y] > v:
                return False
            break
    for xx in range(x + 1, n):
        if t[xx][y] is not None:
            if v > t[xx][y]:
                return False
            break
    return True


def _assoc_ok_over(t, members) -> bool:
    for x in members:
        for y in members:
            v = t[x][y]
            if v is None:
                continue
            for z in members:
                if t[y][z] is None or t[v][z] is None or t[x][t[y][z]] is None:
                    continue
                if t[v][z] != t[x][t[y][z]]:
                    return False
    return True


def _search_idempotent(n: int, unit: int, commutative: bool, results: list) -> None:
    table = _forced_table(n, unit)
    for x in range(n):
        table[x][x] = x
    free = [x for x in range(1, n) if x != unit]
    pairs = [(x, k) for k in free for x in free if x < k]

    def assoc_new(k: int) -> bool:
        # Check triples that involve the newest element k; entries on the
        # prefix {0..k} plus unit row/col are all present at this point.
        members = list(range(k + 1))
        if unit > k:
            members.append(unit)
        for a in members:
            for bjs in members:
                ab = table[a][bjs]
                for c in members:
                    if k not in (a, bjs, c):
                        continue
                    bc = table[bjs][c]
                    if table[ab][c] != table[a][bc]:
                        return False
        return True

    def place(i: int) -> None:
        if i == len(pairs):
            chain = validate(n, unit, [row[:] for row in table])
            results.append(chain)
            return
        x, k = pairs[i]
        last_for_k = (i + 1 == len(pairs)) or pairs[i + 1][1] != k
        for vxy in (x, k):
            table[x][k] = vxy
            if not _row_col_ok(table, x, k, n):
                continue
            choices = (vxy,) if commutative else (x, k)
            for vyx in choices:
                table[k][x] = vyx
                if not _row_col_ok(table, k, x, n):
                    continue
                if last_for_k and not assoc_new(k):
                    continue
                place(i + 1)
            table[k][x] = None
        table[x][k] = None

    place(0)


def _search_general(n: int, unit: int, results: list) -> None:
    table = _forced_table(n, unit)
    free = [x for x in range(1, n) if x != unit]
    cells = [(x, y) for k in free for x in free for y in free
             if max(x, y) == k and (x <= k and y <= k)]
    # Order cells so that all cells with max coordinate k come before k+1.
    cells = sorted(set(cells), key=lambda c: (max(c), c))

    def place(i: int) -> None:
        if i == len(cells):
            try:
                chain = validate(n, unit, [row[:] for row in table])
            except InvalidChainError:
                return
            results.append(chain)
            return
        x, y = cells[i]
        k = max(x, y)
        last_for_k = (i + 1 == len(cells)) or max(cells[i + 1]) != k
        for v in range(n):
            table[x][y] = v
            if not _row_col_ok(table, x, y, n):
                continue
            if last_for_k:
                members = list(range(k + 1))
                if unit > k:
                    members.append(unit)
                if not _assoc_ok_over(table, members):
                    continue
            place(i + 1)
        table[x][y] = None

    place(0)
