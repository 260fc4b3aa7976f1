#!/usr/bin/env python3
"""Pointed chains: six conditions, six seeds, one bucket each.

Adding a designated constant f splits the finite chains into six
disjoint conditions. Each condition has a smallest representative, and
the subalgebra generated by f always reproduces it.
"""

from resichain.pointed import (
    CONDITIONS,
    condition_of,
    cross_embedding_count,
    generated_pointed_subalgebra,
    partition,
    pointed_pool,
    seed_algebra,
)


def main():
    print("the six seeds:")
    for cond in CONDITIONS:
        seed = seed_algebra(cond)
        labels = [seed.base.label(x) for x in seed.base.elements()]
        print(f"  {cond}: f = {seed.base.label(seed.f)!r} in {labels}")
    print()

    pool = pointed_pool(4)
    buckets = partition(pool)
    print(f"all {len(pool)} pointed chains of size <= 4, bucketed:")
    for cond in CONDITIONS:
        print(f"  {cond}: {len(buckets[cond])} chains")
    print()

    print("cross-condition pointed embeddings:", cross_embedding_count(pool))
    print("(zero: the conditions are closed off from one another)")
    print()

    sample = buckets["2b"][0]
    gen = generated_pointed_subalgebra(sample)
    print("a condition-2b chain of size", sample.base.size,
          "generates a pointed subalgebra of size", gen.base.size)
    print("condition of the generated part:", condition_of(gen))


if __name__ == "__main__":
    main()
