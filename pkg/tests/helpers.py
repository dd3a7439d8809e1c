"""Independent brute-force oracles shared by several test modules."""
from itertools import combinations

from sympy import isprime

from skewbrace.groups import is_normal, is_subgroup, normal_subgroups


def all_subgroups_by_subsets(G):
    """Every subset containing 0 that is closed under the operation."""
    n = G.order
    out = []
    for k in range(n):
        for rest in combinations(range(1, n), k):
            S = (0,) + rest
            if is_subgroup(G, S):
                out.append(S)
    return sorted(out)


def has_prime_chief_series(G):
    """A chain of normal subgroups of G from 1 to G with all indices prime."""
    normals = normal_subgroups(G)

    def dfs(cur):
        if len(cur) == G.order:
            return True
        return any(set(cur) < set(N) and isprime(len(N) // len(cur)) and dfs(N)
                   for N in normals)

    return dfs((0,))


def element(G, predicate):
    return next(x for x in range(G.order) if predicate(x))
