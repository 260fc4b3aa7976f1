#!/usr/bin/env python3
"""The integer-indexed symbolic chain steered by a 0/1 word.

Elements are b_i (below the unit) and a_i (above), for every integer i.
A set S of integers decides who wins the tied products a_i * b_i, which
is the only place the multiplication is free. Star is an involution no
matter what S says.
"""

from resichain import (
    ELL,
    R,
    STAR,
    FiniteSupport,
    Periodic,
    as_mult,
    as_unary,
    generated_reach,
)
from resichain.zchain import a, b, index_range


def main():
    with_zero = FiniteSupport(frozenset({0}))
    sans_zero = FiniteSupport(frozenset())

    print("tied product a_0 * b_0, two steering sets:")
    print("  0 in S:    ", as_mult(with_zero, a(0), b(0)).text())
    print("  0 not in S:", as_mult(sans_zero, a(0), b(0)).text())
    print("  reversed order flips the winner, so the chain is not commutative")
    print()

    spec = Periodic((0, 1))
    print("unary maps under the alternating word 0101..., around index 0:")
    for x in (a(1), a(0), b(0), b(1)):
        row = ", ".join(
            f"{which}: {as_unary(spec, x, which).text()}" for which in (ELL, R, STAR)
        )
        print(f"  {x.text():5s} {row}")
    print()

    x = a(10**6)
    twice = as_unary(spec, as_unary(spec, x, STAR), STAR)
    print(f"star twice at a huge index: {x.text()} -> {twice.text()} (fixed)")
    print()

    print("closure of {a_0} under the two unit residual maps:")
    for depth in (1, 2, 4, 8):
        reach = generated_reach(spec, a(0), depth)
        lo, hi = index_range(reach)
        print(f"  depth {depth}: {len(reach):2d} elements, indices [{lo}, {hi}]")
    print("each application can step one index further out, so the reach")
    print("grows without bound: the subalgebra generated by one letter is infinite.")


if __name__ == "__main__":
    main()
