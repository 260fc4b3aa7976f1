#!/usr/bin/env python3
"""Embeddings, homomorphisms, congruences, and quotients.

The embedding test on idempotent chains only needs order, the unit, and
the two unit-residual maps; homomorphisms factor through congruences,
whose kernels are intervals around the unit.
"""

from resichain import (
    congruence_from_kernel,
    congruences,
    enumerate_embeddings,
    enumerate_homomorphisms,
    iso_equal,
    quotient,
)
from resichain.constructors import com, go


def main():
    g1, g3 = go(1), go(3)
    print("embeddings of go(1) into go(3):")
    for h in enumerate_embeddings(g1, g3):
        print("  image", [g3.label(v) for v in h.image])
    print()

    print("homomorphisms go(2) -> go(1):")
    for h in enumerate_homomorphisms(go(2), go(1)):
        print("  image", h.image)
    print("(two collapses, no injection: go(2) does not embed into go(1))")
    print()

    c = com(1, 1)
    print("congruences of com(1,1), by unit-class interval:")
    for cong in congruences(c):
        kern = [c.label(x) for x in cong.kernel_class]
        print("  kernel", kern, "blocks", [list(b) for b in cong.blocks])
    print()

    lo, hi = c.index_of_label("b0"), c.index_of_label("a0")
    mid = congruence_from_kernel(c, range(lo, hi + 1))
    collapsed, proj = quotient(c, mid)
    print("collapsing the inner interval [b0, a0] of com(1,1):")
    print("  elements:", [collapsed.label(x) for x in collapsed.elements()])
    print("  projection image:", proj.image)
    print("  isomorphic to go(1):", iso_equal(collapsed, go(1)))


if __name__ == "__main__":
    main()
