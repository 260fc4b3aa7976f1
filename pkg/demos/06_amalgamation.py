#!/usr/bin/env python3
"""Spans and amalgams: search, construction, and an honest refutation.

A span embeds one chain into two others. An amalgam completes the square
inside a target class; the search tries class members in size order, and
the constructive path zips the element lists around the shared image.
"""

from resichain import enumerate_embeddings, iso_equal
from resichain.amalgamation import (
    AmalgamResult,
    Refuted,
    Span,
    amalgamate_components,
    find_amalgam,
    verify_amalgam,
)
from resichain.classification import class_members, parse_class, sig_in_class
from resichain.constructors import com, go
from resichain.decomposition import decompose


def inclusion(a, b, image):
    return next(h for h in enumerate_embeddings(a, b) if h.image == tuple(image))


def main():
    crossing = Span(
        go(1), go(2), go(2),
        inclusion(go(1), go(2), (0, 2)),
        inclusion(go(1), go(2), (1, 2)),
    )
    print("crossing span: c1 goes to the bottom of B but the middle of C")
    print()

    cls = parse_class("e:w")
    pool = class_members(cls, 6)
    res = find_amalgam(
        crossing, lambda d: True, 4, candidates=pool
    )
    print("search among all relative Stone chains, bound 4:")
    print("  found size", res.D.size, "= go(3):", iso_equal(res.D, go(3)))
    print("  legs", res.j_B.image, res.j_C.image,
          "verified:", verify_amalgam(crossing, res))
    print()

    tiny = parse_class("e:1")
    members = class_members(tiny, 2)
    res = find_amalgam(
        crossing,
        lambda d: sig_in_class(decompose(d), tiny),
        4,
        one_sided=True,
        candidates=members,
        complete=True,
    )
    print("same span inside the two-member class e:1 (complete pool):")
    if isinstance(res, Refuted):
        print("  refuted after checking", res.checked, "candidates")
    print("  so the class of go(0) and go(1) alone lacks the property")
    print()

    two_sided = Span(
        com(0, 0), com(1, 0), com(0, 1),
        inclusion(com(0, 0), com(1, 0), (1, 2, 3)),
        inclusion(com(0, 0), com(0, 1), (0, 1, 3)),
    )
    cons = amalgamate_components(two_sided)
    print("constructive zip of com(1,0) and com(0,1) over com(0,0):")
    print("  result size", cons.D.size, "= com(1,1):", iso_equal(cons.D, com(1, 1)))
    print("  verified:", verify_amalgam(two_sided, cons))
    assert isinstance(cons, AmalgamResult)


if __name__ == "__main__":
    main()
