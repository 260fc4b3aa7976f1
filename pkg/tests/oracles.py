"""Reference computations used to pin derived expectations.

Everything here recomputes facts from the raw Cayley table so the code
under test never certifies itself. Slow is fine; these only run at test
sizes.
"""

from itertools import product

from resichain import LEFT, RIGHT


def brute_residual(chain, x, y, side):
    # max z with x*z <= y (left) or z*x <= y (right); z=0 always works
    # because the bottom absorbs, so the max exists
    best = 0
    for z in chain.elements():
        prod = chain.mul(x, z) if side == LEFT else chain.mul(z, x)
        if prod <= y:
            best = z
    return best


def brute_ell(chain, x):
    # e/x
    return brute_residual(chain, x, chain.unit, RIGHT)


def brute_r(chain, x):
    # x\e
    return brute_residual(chain, x, chain.unit, LEFT)


def brute_star(chain, x):
    return min(brute_ell(chain, x), brute_r(chain, x))


def residual_tables(chain):
    n = chain.size
    left = [[brute_residual(chain, x, y, LEFT) for y in range(n)] for x in range(n)]
    right = [[brute_residual(chain, x, y, RIGHT) for y in range(n)] for x in range(n)]
    return left, right


def definitional_homomorphism(a, b, image, tables_a=None, tables_b=None):
    """Pointwise preservation of every operation: unit, meet, join,
    product, both residuals. No shortcuts."""
    la, ra = tables_a if tables_a else residual_tables(a)
    lb, rb = tables_b if tables_b else residual_tables(b)
    if image[a.unit] != b.unit:
        return False
    for x in range(a.size):
        for y in range(a.size):
            if image[a.mul(x, y)] != b.mul(image[x], image[y]):
                return False
            if image[min(x, y)] != min(image[x], image[y]):
                return False
            if image[max(x, y)] != max(image[x], image[y]):
                return False
            if image[la[x][y]] != lb[image[x]][image[y]]:
                return False
            if image[ra[x][y]] != rb[image[x]][image[y]]:
                return False
    return True


def definitional_embedding(a, b, image, tables_a=None, tables_b=None):
    if len(set(image)) != a.size:
        return False
    return definitional_homomorphism(a, b, image, tables_a, tables_b)


def brute_congruence_blocks(chain):
    """All interval partitions compatible with product and residuals.

    Classes of a chain congruence are order-convex, so scanning the
    2^(n-1) cut patterns is exhaustive. Meet and join are automatically
    compatible with any interval partition.
    """
    n = chain.size
    left, right = residual_tables(chain)
    out = []
    for cuts in product((False, True), repeat=n - 1):
        block = [0] * n
        b = 0
        for i in range(1, n):
            if cuts[i - 1]:
                b += 1
            block[i] = b
        ok = True
        for x in range(n):
            for y in range(n):
                for u in range(n):
                    if block[x] != block[u]:
                        continue
                    for v in range(n):
                        if block[y] != block[v]:
                            continue
                        if block[chain.mul(x, y)] != block[chain.mul(u, v)]:
                            ok = False
                        elif block[left[x][y]] != block[left[u][v]]:
                            ok = False
                        elif block[right[x][y]] != block[right[u][v]]:
                            ok = False
                        if not ok:
                            break
                    if not ok:
                        break
                if not ok:
                    break
            if not ok:
                break
        if ok:
            blocks = []
            for i in range(n):
                if i == 0 or block[i] != block[i - 1]:
                    blocks.append([i])
                else:
                    blocks[-1].append(i)
            out.append(tuple(tuple(blk) for blk in blocks))
    return out
