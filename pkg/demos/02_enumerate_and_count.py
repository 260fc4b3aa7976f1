#!/usr/bin/env python3
"""Enumerate commutative idempotent chains and match the closed-form count.

Two independent code paths: a Cayley-table backtracking search, and a
count over decomposition signatures. They must agree at every size.
"""

from resichain import enumerate_chains
from resichain.decomposition import count_chains, decompose


def main():
    print("size  enumerated  counted  signatures")
    for n in range(1, 8):
        found = enumerate_chains(n, filters=("commutative", "idempotent"))
        counted = count_chains(n)
        mark = "ok" if len(found) == counted else "MISMATCH"
        print(f"{n:4d}  {len(found):10d}  {counted:7d}  {mark}")

    print()
    print("every size-4 chain, as a nested-sum signature:")
    for chain in enumerate_chains(4, filters=("commutative", "idempotent")):
        sig = decompose(chain)
        labels = " ".join(chain.label(x) for x in chain.elements())
        print(f"  {sig.text():22s} [{labels}]")

    print()
    print("the count doubles with each new element: an extra element either")
    print("extends the innermost summand or starts a new one.")


if __name__ == "__main__":
    main()
