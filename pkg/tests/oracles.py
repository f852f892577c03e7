"""Independent brute-force oracles used to freeze expected values.

Nothing here imports the package under test.
"""

from itertools import combinations, permutations


def decorated_permutation_count(n):
    """Sum over permutations of [n] of 2**(number of fixed points)."""
    total = 0
    for p in permutations(range(n)):
        fixed = sum(1 for i, x in enumerate(p) if i == x)
        total += 2**fixed
    return total


def _is_basis_family(family):
    bs = set(family)
    for b1 in family:
        for b2 in family:
            diff1 = b1 - b2
            diff2 = b2 - b1
            for x in diff1:
                if not any((b1 - {x}) | {y} in bs for y in diff2):
                    return False
    return True


def brute_force_matroids(n, k):
    """Every nonempty family of k-subsets of [n] passing the exchange axiom.

    Families are tried exhaustively (2**C(n,k) of them), so keep C(n,k) small.
    """
    cands = [frozenset(c) for c in combinations(range(1, n + 1), k)]
    found = []
    for bits in range(1, 1 << len(cands)):
        family = [c for i, c in enumerate(cands) if bits >> i & 1]
        if _is_basis_family(family):
            found.append(frozenset(family))
    return found


def determinant_leibniz(rows):
    """Exact determinant by the permutation expansion."""
    d = len(rows)
    total = 0
    for p in permutations(range(d)):
        inv = sum(1 for i in range(d) for j in range(i + 1, d) if p[i] > p[j])
        term = -1 if inv % 2 else 1
        for i in range(d):
            term *= rows[i][p[i]]
        total += term
    return total


def crossing_quadruple(t, u, n):
    """Return a<b<c<d (up to rotation) with a,c in t and b,d in u, or None."""
    for a, b, c, d in combinations(range(1, n + 1), 4):
        for w, x, y, z in ((a, b, c, d), (b, c, d, a)):
            if w in t and y in t and x in u and z in u:
                return (w, x, y, z)
    return None


def cyclic_interval(i, j, n):
    if i <= j:
        return set(range(i, j + 1))
    return set(range(i, n + 1)) | set(range(1, j + 1))
