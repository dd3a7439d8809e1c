"""A fixed catalog of small groups.

Complete (one representative per isomorphism class) for every order up to
12 and for the square-free orders 14, 15, 21, 30.  Other orders up to 48
get the cyclic group plus whatever named constructions apply, and are *not*
exhaustive.
"""
from itertools import permutations

from . import errors
from .groups import (
    CayleyGroup,
    cyclic_group,
    direct_product,
    group_from_elements,
    semidirect_product,
)

MAX_ORDER = 48
COMPLETE_ORDERS = frozenset(range(1, 13)) | {14, 15, 21, 30}


def Z(n: int) -> CayleyGroup:
    return cyclic_group(n)


def abelian(*factors: int) -> CayleyGroup:
    G = Z(factors[0])
    for k in factors[1:]:
        G = direct_product(G, Z(k))
    G.name = "x".join(f"Z{k}" for k in factors)
    return G


def dihedral(m: int) -> CayleyGroup:
    """Dihedral group of order ``2m``: ``Z2`` acting on ``Zm`` by inversion."""
    rot = Z(m)
    inversion = tuple((-x) % m for x in range(m))
    G = semidirect_product(Z(2), rot, [tuple(range(m)), inversion])
    G.name = "S3" if m == 3 else f"D{m}"
    return G


def dicyclic(order: int) -> CayleyGroup:
    """``<a, x | a^2m = 1, x^2 = a^m, a^x = a^-1>`` of order ``4m``."""
    m = order // 4
    n = 2 * m

    def op(u, v):
        (k, s), (l, t) = u, v
        k = (k + (l if s == 0 else -l)) % n
        if s + t == 2:
            return ((k + m) % n, 0)
        return (k, s + t)

    elements = [(k, s) for s in range(2) for k in range(n)]
    name = "Q8" if order == 8 else f"Dic{order}"
    return group_from_elements(elements, op, (0, 0), name)


def symmetric(k: int, even_only: bool = False) -> CayleyGroup:
    def sign(p):
        s, seen = 1, set()
        for i in range(k):
            if i in seen:
                continue
            j, length = i, 0
            while j not in seen:
                seen.add(j)
                j = p[j]
                length += 1
            s *= (-1) ** (length - 1)
        return s

    perms = [p for p in permutations(range(k)) if not even_only or sign(p) == 1]
    ident = tuple(range(k))
    name = (f"A{k}" if even_only else f"S{k}")
    return group_from_elements(perms, lambda f, g: tuple(g[x] for x in f), ident, name)


def metacyclic(p: int, q: int, r: int) -> CayleyGroup:
    """``Zq`` acting on ``Zp`` by ``x -> r x``; needs ``r^q = 1 mod p``."""
    if pow(r, q, p) != 1:
        raise ValueError(f"{r} has no order dividing {q} mod {p}")
    acts = [tuple(x * pow(r, k, p) % p for x in range(p)) for k in range(q)]
    G = semidirect_product(Z(q), Z(p), acts)
    G.name = f"Z{p}sdZ{q}"
    return G


def _named(G, name):
    G.name = name
    return G


def _builders(n: int) -> list:
    out = [lambda: Z(n)]
    abelian_types = {
        4: [(2, 2)], 8: [(4, 2), (2, 2, 2)], 9: [(3, 3)], 12: [(6, 2)],
        16: [(8, 2), (4, 4), (4, 2, 2), (2, 2, 2, 2)],
    }
    for factors in abelian_types.get(n, []):
        out.append(lambda f=factors: abelian(*f))
    if n % 2 == 0 and 6 <= n <= 24:
        out.append(lambda: dihedral(n // 2))
    if n == 8:
        out.append(lambda: dicyclic(8))
    if n == 12:
        out.append(lambda: dicyclic(12))
        out.append(lambda: symmetric(4, even_only=True))
    if n == 21:
        out.append(lambda: _named(metacyclic(7, 3, 2), "F21"))
    if n == 24:
        out.append(lambda: symmetric(4))
    if n == 30:
        out.append(lambda: _named(dihedral(15), "D15"))
        out.append(lambda: _named(direct_product(Z(5), dihedral(3)), "Z5xS3"))
        out.append(lambda: _named(direct_product(Z(3), dihedral(5)), "Z3xD5"))
    return out


_cache = {}


def small_group_catalog(n: int) -> tuple:
    """Catalog groups of order ``n``, in a fixed order (cyclic first)."""
    if not isinstance(n, int) or n < 1 or n > MAX_ORDER:
        raise errors.UnsupportedOrder(f"order {n} not in 1..{MAX_ORDER}")
    if n not in _cache:
        _cache[n] = tuple(build() for build in _builders(n))
    return _cache[n]


def small_group(name: str) -> CayleyGroup:
    """Look a catalog group up by name, e.g. ``"S3"``, ``"Z2xZ2"``, ``"Q8"``."""
    if name.startswith("Z") and name[1:].isdigit():
        return small_group_catalog(int(name[1:]))[0]
    for n in range(1, MAX_ORDER + 1):
        for G in small_group_catalog(n):
            if G.name == name:
                return G
    raise errors.UnsupportedOrder(f"no catalog group named {name!r}")
