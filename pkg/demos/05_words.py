#!/usr/bin/env python3
"""Bi-infinite 0/1 words under the finite-factor preorder.

A word sits below another when every finite factor of the first appears
in the second. Minimal words are the recurrent ones; a word with an
isolated 1 sits strictly above the all-zero word.
"""

from resichain import FiniteSupport, Periodic, is_minimal, parse_word, preorder_leq


def main():
    zero = Periodic((0,))
    blink = Periodic((0, 1))
    spike = FiniteSupport(frozenset({0}))

    print("words:")
    for w in (zero, blink, spike):
        print("  ", w.text())
    print()

    pairs = [(zero, spike), (spike, zero), (zero, blink), (blink, zero)]
    for lo, hi in pairs:
        print(f"{lo.text()} <= {hi.text()} : {preorder_leq(lo, hi)}")
    print()

    print("phase does not matter:", preorder_leq(Periodic((0, 1)), Periodic((1, 0)))
          and preorder_leq(Periodic((1, 0)), Periodic((0, 1))))
    print()

    for w in (blink, spike, FiniteSupport(frozenset())):
        report = is_minimal(w)
        print(f"minimality of {w.text()}: {report.to_json()}")
    print()
    print("the spike is not minimal: its factors include the all-zero word's,")
    print("so per:0 sits strictly below it.")
    print()

    text = "per:0110@-1"
    print(f"parse round trip: {text} -> {parse_word(text).text()}")


if __name__ == "__main__":
    main()
