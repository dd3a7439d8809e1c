"""Enumerating skew braces on a given additive group.

Brace structures with additive group ``G`` correspond to regular subgroups
of the holomorph ``Hol(G)``: if ``N`` is regular, let ``rho_y`` be its unique
element sending 0 to ``y`` and put ``x o y = x ** rho_y``.  Every element of
``Hol(G)`` has the form ``x -> x**alpha . g``, so this reads
``x o y = x**gamma(y) . y``.
"""
from dataclasses import dataclass
from itertools import permutations
from pathlib import Path

import numpy as np

from . import errors
from .brace import SkewBrace, validate_brace
from .catalog import small_group_catalog
from .groups import CayleyGroup, automorphism_group, compose, identity_perm

# Hol(G) is materialised element by element; refuse beyond this size.
MAX_HOLOMORPH = 20000


@dataclass(frozen=True)
class PermGroup:
    degree: int
    elements: tuple         # sorted tuple of Perm

    @property
    def order(self) -> int:
        return len(self.elements)

    def __contains__(self, f):
        return f in self._set

    @property
    def _set(self):
        s = self.__dict__.get("_s")
        if s is None:
            s = frozenset(self.elements)
            object.__setattr__(self, "_s", s)
        return s

    def is_regular(self) -> bool:
        images = sorted(f[0] for f in self.elements)
        return images == list(range(self.degree)) and len(self.elements) == self.degree

    def is_closed(self) -> bool:
        return all(compose(f, g) in self for f in self.elements for g in self.elements)


def holomorph(G: CayleyGroup) -> PermGroup:
    """Permutations ``x -> x**alpha . g`` for ``alpha`` in Aut(G) and ``g`` in G."""
    auts = automorphism_group(G)
    size = G.order * len(auts)
    if size > MAX_HOLOMORPH:
        raise errors.TooLarge(f"Hol({G.name or G.order}) has {size} elements (limit {MAX_HOLOMORPH})")
    rows = G.rows
    elems = {tuple(rows[a[x]][g] for x in range(G.order)) for a in auts for g in range(G.order)}
    return PermGroup(G.order, tuple(sorted(elems)))


def _cycle_lengths_equal(f) -> bool:
    seen = [False] * len(f)
    length = None
    for i in range(len(f)):
        if seen[i]:
            continue
        j, k = i, 0
        while not seen[j]:
            seen[j] = True
            j = f[j]
            k += 1
        if length is None:
            length = k
        elif k != length:
            return False
    return True


def _close(n, gens):
    """Group generated by ``gens`` as ``{point 0 image: perm}``; None unless semiregular."""
    ident = identity_perm(n)
    found = {0: ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for f in frontier:
            for g in gens:
                h = compose(f, g)
                y = h[0]
                old = found.get(y)
                if old is None:
                    found[y] = h
                    nxt.append(h)
                elif old != h:
                    return None
        frontier = nxt
    return found


def regular_subgroups(H: PermGroup) -> list:
    """All regular subgroups of ``H``, sorted by element tuples.

    Depth-first: the smallest point not yet reached from 0 picks the next
    generator among the elements of ``H`` taking 0 there.  Each regular
    subgroup contains exactly one such element at every step, so each is
    produced exactly once.
    """
    n = H.degree
    candidates = {g: [] for g in range(n)}
    for f in H.elements:
        if f[0] != 0 and _cycle_lengths_equal(f):
            candidates[f[0]].append(f)
    out = []

    def search(gens, found):
        if len(found) == n:
            out.append(PermGroup(n, tuple(sorted(found.values()))))
            return
        g = next(y for y in range(n) if y not in found)
        for f in candidates[g]:
            new = _close(n, gens + [f])
            if new is not None:
                search(gens + [f], new)

    search([], _close(n, []))
    return sorted(out, key=lambda K: K.elements)


def brace_from_regular_subgroup(G: CayleyGroup, N: PermGroup, name: str = None) -> SkewBrace:
    rho = {f[0]: f for f in N.elements}
    table = [[rho[y][x] for y in range(G.order)] for x in range(G.order)]
    return validate_brace(G, table, name)


def braces_on_group(G: CayleyGroup) -> list:
    """One validated skew brace per regular subgroup of Hol(G), additive group ``G``."""
    out, seen = [], set()
    for i, N in enumerate(regular_subgroups(holomorph(G))):
        B = brace_from_regular_subgroup(G, N)
        if B.key in seen:
            continue
        seen.add(B.key)
        B.name = f"{G.name}#{len(out)}" if G.name else None
        out.append(B)
    return out


# ---------------------------------------------------------------------------
# independent cross-check for small orders

def _column_candidates(G: CayleyGroup) -> dict:
    """For each z, every bijection f with f(0) = z and f(x.y) = f(x).z^-1.f(y).

    Brute force over all permutations; these are the possible columns
    ``x -> x o z`` of a multiplication table satisfying the brace axiom.
    """
    n = G.order
    t = G.table
    if n == 1:
        return {0: [(0,)]}
    rest = np.array(list(permutations(range(1, n))), dtype=np.int64).reshape(-1, n - 1)
    out = {}
    for z in range(n):
        zi = G.inv[z]
        others = [v for v in range(n) if v != z]
        # f(0) = z; remaining values a permutation of the others
        f = np.empty((len(rest), n), dtype=np.int64)
        f[:, 0] = z
        f[:, 1:] = np.asarray(others)[rest - 1]
        ok = np.ones(len(f), dtype=bool)
        for x in range(n):
            for y in range(n):
                ok &= f[:, t[x, y]] == t[t[f[:, x], zi], f[:, y]]
        out[z] = [tuple(int(v) for v in row) for row in f[ok]]
    return out


def braces_by_table_search(G: CayleyGroup) -> list:
    """All brace multiplication tables on ``G`` found by direct search over columns.

    Columns come from :func:`_column_candidates`; they are then combined
    column by column, propagating ``col[y o w] = col[y] then col[w]``, and
    every completed table goes through :func:`validate_brace`.  Meant as an
    oracle for orders up to 8.
    """
    n = G.order
    cand = _column_candidates(G)
    cand_sets = {z: set(c) for z, c in cand.items()}
    results = []

    def propagate(cols):
        changed = True
        while changed:
            changed = False
            items = list(cols.items())
            for y, cy in items:
                for w, cw in items:
                    v = cw[y]
                    need = compose(cy, cw)
                    have = cols.get(v)
                    if have is None:
                        if need not in cand_sets[v]:
                            return None
                        cols[v] = need
                        changed = True
                    elif have != need:
                        return None
        return cols

    def search(cols):
        if len(cols) == n:
            table = [[cols[z][x] for z in range(n)] for x in range(n)]
            try:
                results.append(validate_brace(G, table))
            except errors.ValidationError:
                pass
            return
        z = next(v for v in range(n) if v not in cols)
        for c in cand[z]:
            new = propagate({**cols, z: c})
            if new is not None:
                search(new)

    search({0: identity_perm(n)})
    uniq = {B.key: B for B in results}
    return [uniq[k] for k in sorted(uniq)]


# ---------------------------------------------------------------------------
# corpus

def corpus(orders) -> list:
    """``(group, index, brace)`` for every catalog group of the given orders."""
    out = []
    for n in orders:
        for G in small_group_catalog(n):
            for i, B in enumerate(braces_on_group(G)):
                out.append((G, i, B))
    return out


def corpus_filename(G: CayleyGroup, index: int) -> str:
    return f"{G.order}_{G.name}_{index}.brace"


def write_corpus(max_order: int, out_dir) -> list:
    """Write one ``.brace`` file per enumerated structure; returns the paths."""
    from .io import format_brace

    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    paths = []
    for G, i, B in corpus(range(1, max_order + 1)):
        path = out_dir / corpus_filename(G, i)
        path.write_text(format_brace(B, comment=f"additive group {G.name}, structure {i}"))
        paths.append(path)
    return paths
