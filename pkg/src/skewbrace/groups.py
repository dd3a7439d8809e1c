"""Finite groups as Cayley tables.

Elements are ``0 .. n-1`` with ``0`` the identity, and ``table[i][j]`` is
``i * j`` with the left operand first.  Permutations are plain tuples of
images and compose left to right: ``compose(f, g)`` applies ``f`` first.
With this convention ``x ** (f g) == (x ** f) ** g`` (right actions, as in
exponent notation), so inner automorphisms ``x -> g^-1 x g`` form a
homomorphism ``G -> Aut(G)`` rather than an antihomomorphism.

Subsets of a group (subgroups, cosets, candidates) are ``ElemSet`` tuples:
sorted, duplicate free, containing ``0``.
"""
from collections import deque
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Callable, Sequence

import numpy as np

from . import errors
from ._arith import isprime, pi_part, primefactors

Perm = tuple
ElemSet = tuple

# Groups above this order are still accepted, but semidirect products above
# it skip the O(n^3) associativity check (the action checks cover them).
VALIDATE_LIMIT = 48


# ---------------------------------------------------------------------------
# permutations

def identity_perm(n: int) -> Perm:
    return tuple(range(n))


def compose(f: Perm, g: Perm) -> Perm:
    """Apply ``f`` first, then ``g``."""
    return tuple(g[x] for x in f)


def perm_inverse(f: Perm) -> Perm:
    inv = [0] * len(f)
    for i, y in enumerate(f):
        inv[y] = i
    return tuple(inv)


def is_permutation(images, n: int) -> bool:
    return len(images) == n and sorted(images) == list(range(n))


def elemset(elements) -> ElemSet:
    """Canonical form of a subset: sorted, deduplicated, with ``0`` added."""
    s = set(int(x) for x in elements)
    s.add(0)
    return tuple(sorted(s))


def _mask(elements) -> int:
    m = 0
    for x in elements:
        m |= 1 << x
    return m


def _unmask(m: int) -> ElemSet:
    out = []
    i = 0
    while m:
        if m & 1:
            out.append(i)
        m >>= 1
        i += 1
    return tuple(out)


# ---------------------------------------------------------------------------
# the group type

class CayleyGroup:
    """A finite group given by its multiplication table.

    Instances are immutable; build them with :func:`validate_group` (or one of
    the catalog constructors) so that the group axioms are known to hold.
    Equality and hashing are by exact table.
    """

    def __init__(self, table, name: str = None):
        t = np.array(table, dtype=np.int64)
        t.setflags(write=False)
        self.table = t
        self.name = name

    @property
    def order(self) -> int:
        return self.table.shape[0]

    def __len__(self):
        return self.order

    def __repr__(self):
        label = self.name or "group"
        return f"<CayleyGroup {label} of order {self.order}>"

    def __eq__(self, other):
        return isinstance(other, CayleyGroup) and np.array_equal(self.table, other.table)

    def __hash__(self):
        return hash(self.key)

    @cached_property
    def key(self) -> bytes:
        return self.table.tobytes()

    @cached_property
    def rows(self):
        return self.table.tolist()

    @cached_property
    def inv(self) -> tuple:
        return tuple(int(x) for x in np.argmin(self.table, axis=1))

    def mul(self, a: int, b: int) -> int:
        return self.rows[a][b]

    def product(self, *xs: int) -> int:
        r = 0
        for x in xs:
            r = self.rows[r][x]
        return r

    def conj(self, x: int, g: int) -> int:
        """``x ** g = g^-1 x g``."""
        return self.rows[self.rows[self.inv[g]][x]][g]

    def commutator(self, x: int, y: int) -> int:
        """``[x, y] = x^-1 y^-1 x y``."""
        r = self.rows
        return r[r[r[self.inv[x]][self.inv[y]]][x]][y]

    def power(self, x: int, k: int) -> int:
        if k < 0:
            x, k = self.inv[x], -k
        r = 0
        for _ in range(k):
            r = self.rows[r][x]
        return r

    @cached_property
    def element_orders(self) -> tuple:
        out = []
        for x in range(self.order):
            k, y = 1, x
            while y != 0:
                y = self.rows[y][x]
                k += 1
            out.append(k)
        return tuple(out)

    @cached_property
    def is_abelian(self) -> bool:
        return bool(np.array_equal(self.table, self.table.T))

    @cached_property
    def center(self) -> ElemSet:
        t = self.table
        return tuple(int(x) for x in np.flatnonzero((t == t.T).all(axis=1)))

    def is_automorphism(self, f: Perm) -> bool:
        if not is_permutation(f, self.order):
            return False
        fa = np.asarray(f)
        return bool(np.array_equal(fa[self.table], self.table[np.ix_(fa, fa)]))


# ---------------------------------------------------------------------------
# validation

def validate_group(table, name: str = None) -> CayleyGroup:
    """Check the group axioms on a square table and wrap it.

    Checks run in the order closure, associativity, identity, Latin
    property; the first failure raises with a witness.  Associativity
    witnesses are the lexicographically least failing triple.
    """
    t = np.asarray(table)
    if t.ndim != 2 or t.shape[0] != t.shape[1] or t.shape[0] == 0:
        raise errors.ValidationError(f"table must be square and non-empty, got shape {t.shape}")
    if not np.issubdtype(t.dtype, np.integer):
        if not np.all(np.equal(np.mod(t, 1), 0)):
            raise errors.ValidationError("table entries must be integers")
        t = t.astype(np.int64)
    n = t.shape[0]
    bad = np.argwhere((t < 0) | (t >= n))
    if len(bad):
        i, j = (int(v) for v in bad[0])
        raise errors.EntryOutOfRange(
            f"entry table[{i}][{j}] = {int(t[i, j])} outside 0..{n - 1}", (i, j))
    lhs = t[t]                 # (i*j)*k
    rhs = t[:, t]              # i*(j*k)
    bad = np.argwhere(lhs != rhs)
    if len(bad):
        i, j, k = (int(v) for v in bad[0])
        raise errors.NotAssociative(
            f"({i}*{j})*{k} = {int(lhs[i, j, k])} but {i}*({j}*{k}) = {int(rhs[i, j, k])}",
            (i, j, k))
    ar = np.arange(n)
    bad = np.flatnonzero(t[0] != ar)
    if len(bad):
        j = int(bad[0])
        raise errors.IdentityNotZero(f"0*{j} = {int(t[0, j])}, expected {j}", (j,))
    bad = np.flatnonzero(t[:, 0] != ar)
    if len(bad):
        i = int(bad[0])
        raise errors.IdentityNotZero(f"{i}*0 = {int(t[i, 0])}, expected {i}", (i,))
    srt = np.sort(t, axis=1)
    bad = np.flatnonzero((srt != ar).any(axis=1))
    if len(bad):
        raise errors.NotLatin(f"row {int(bad[0])} is not a permutation", ("row", int(bad[0])))
    srt = np.sort(t, axis=0)
    bad = np.flatnonzero((srt != ar[:, None]).any(axis=0))
    if len(bad):
        raise errors.NotLatin(f"column {int(bad[0])} is not a permutation", ("col", int(bad[0])))
    return CayleyGroup(t, name)


def group_from_elements(elements: Sequence, op: Callable, identity, name: str = None) -> CayleyGroup:
    """Tabulate a group from concrete elements and an operation.

    ``identity`` is moved to index 0; the remaining elements keep their
    relative order.
    """
    elements = list(elements)
    elements.remove(identity)
    elements.insert(0, identity)
    index = {e: i for i, e in enumerate(elements)}
    table = [[index[op(a, b)] for b in elements] for a in elements]
    return validate_group(table, name)


def cyclic_group(n: int) -> CayleyGroup:
    a = np.arange(n)
    return CayleyGroup((a[:, None] + a[None, :]) % n, f"Z{n}")


def direct_product(A: CayleyGroup, B: CayleyGroup, name: str = None) -> CayleyGroup:
    """Pairs ``(a, b)`` numbered ``a * |B| + b``."""
    m = B.order
    ta, tb = A.table, B.table
    a = np.arange(A.order * m) // m
    b = np.arange(A.order * m) % m
    t = ta[a[:, None], a[None, :]] * m + tb[b[:, None], b[None, :]]
    return CayleyGroup(t, name or f"{A.name}x{B.name}")


def relabel(G: CayleyGroup, order: Sequence[int], name: str = None) -> CayleyGroup:
    """Renumber so that old element ``order[i]`` becomes ``i`` (``order[0]`` must be 0)."""
    order = np.asarray(order)
    if order[0] != 0:
        raise ValueError("relabelling must keep the identity at 0")
    new = np.empty_like(order)
    new[order] = np.arange(len(order))
    return CayleyGroup(new[G.table[np.ix_(order, order)]], name or G.name)


# ---------------------------------------------------------------------------
# subgroups

def _closure_mask(G: CayleyGroup, start_mask: int, gens) -> int:
    """Subgroup generated by the elements of ``start_mask`` and ``gens``."""
    rows = G.rows
    gens = list(gens) + list(_unmask(start_mask))
    gens = [g for g in dict.fromkeys(gens) if g != 0]
    mask = 1
    frontier = [0]
    while frontier:
        nxt = []
        for x in frontier:
            rx = rows[x]
            for g in gens:
                y = rx[g]
                if not mask >> y & 1:
                    mask |= 1 << y
                    nxt.append(y)
        frontier = nxt
    return mask


def closure(G: CayleyGroup, gens) -> ElemSet:
    """The subgroup generated by ``gens``."""
    return _unmask(_closure_mask(G, 0, gens))


def is_subgroup(G: CayleyGroup, S) -> bool:
    S = set(S)
    if 0 not in S:
        return False
    rows = G.rows
    return all(rows[a][b] in S for a in S for b in S)


def is_normal(G: CayleyGroup, S) -> bool:
    if not is_subgroup(G, S):
        return False
    S = set(S)
    return all(G.conj(x, g) in S for x in S for g in range(G.order))


def cyclic_subgroups(G: CayleyGroup) -> list:
    return sorted({_unmask(_closure_mask(G, 0, [g])) for g in range(G.order)})


def _subgroup_masks(G: CayleyGroup) -> dict:
    cyclic = {}
    for g in range(G.order):
        m = _closure_mask(G, 0, [g])
        cyclic.setdefault(m, g)
    found = {m: (g,) for m, g in cyclic.items()}   # mask -> generating tuple
    queue = deque(found)
    while queue:
        h = queue.popleft()
        gens = found[h]
        for c, g in cyclic.items():
            if c & ~h:
                j = _closure_mask(G, 0, gens + (g,))
                if j not in found:
                    found[j] = gens + (g,)
                    queue.append(j)
    return found


@lru_cache(maxsize=512)
def subgroups(G: CayleyGroup) -> tuple:
    """All subgroups, sorted lexicographically as element tuples."""
    return tuple(sorted(_unmask(m) for m in _subgroup_masks(G)))


def normal_subgroups(G: CayleyGroup) -> tuple:
    return tuple(S for S in subgroups(G) if is_normal(G, S))


@dataclass(frozen=True)
class SubgroupProps:
    is_subgroup: bool
    is_normal: bool
    is_characteristic: bool
    is_central: bool


def is_characteristic(G: CayleyGroup, S) -> bool:
    S = set(S)
    return all({f[x] for x in S} == S for f in automorphism_group(G))


def subgroup_props(G: CayleyGroup, S) -> SubgroupProps:
    """Normality, characteristicity and centrality of ``S`` by definition.

    Raises ``NotASubgroup`` when ``S`` is not a subgroup, since the other
    flags are then meaningless.
    """
    S = elemset(S) if 0 in set(S) else tuple(sorted(set(S)))
    if not is_subgroup(G, S):
        raise errors.NotASubgroup(f"{S} is not a subgroup")
    normal = is_normal(G, S)
    return SubgroupProps(
        is_subgroup=True,
        is_normal=normal,
        is_characteristic=normal and is_characteristic(G, S),
        is_central=set(S) <= set(G.center),
    )


def hall_subgroups(G: CayleyGroup, primes) -> tuple:
    """Subgroups of pi-number order and pi'-number index.

    For a single prime these are the Sylow subgroups.
    """
    target = pi_part(G.order, set(primes))
    if target == 1:
        return ((0,),)
    if target == G.order:
        return (tuple(range(G.order)),)
    return tuple(S for S in subgroups(G) if len(S) == target)


def sylow_subgroups(G: CayleyGroup, p: int) -> tuple:
    return hall_subgroups(G, {p})


def complements(G: CayleyGroup, M) -> tuple:
    """Subgroups ``Q`` with ``Q & M = {0}`` and ``|Q| |M| = |G|``."""
    M = set(M)
    k = G.order // len(M)
    return tuple(Q for Q in subgroups(G) if len(Q) == k and set(Q) & M == {0})


# ---------------------------------------------------------------------------
# homomorphisms

def _generating_sequence(G: CayleyGroup) -> list:
    """Greedy generating set: repeatedly add the element enlarging the span most."""
    gens, span = [], 1
    full = (1 << G.order) - 1
    while span != full:
        best, best_mask = None, span
        for g in range(G.order):
            if span >> g & 1:
                continue
            m = _closure_mask(G, span, [g])
            if m.bit_count() > best_mask.bit_count():
                best, best_mask = g, m
        gens.append(best)
        span = best_mask
    return gens


def _extend(G, H, gens, images):
    """Extend generator images to a map on ``<gens>``; ``None`` if inconsistent or not injective."""
    rg, rh = G.rows, H.rows
    phi = {0: 0}
    used = {0}
    frontier = [0]
    while frontier:
        nxt = []
        for x in frontier:
            fx = phi[x]
            for g, im in zip(gens, images):
                y = rg[x][g]
                fy = rh[fx][im]
                if y in phi:
                    if phi[y] != fy:
                        return None
                else:
                    if fy in used:
                        return None
                    phi[y] = fy
                    used.add(fy)
                    nxt.append(y)
        frontier = nxt
    return phi


def isomorphisms(G: CayleyGroup, H: CayleyGroup, first_only: bool = False) -> list:
    """All isomorphisms ``G -> H`` as image tuples, by backtracking on generator images."""
    if G.order != H.order:
        return []
    if sorted(G.element_orders) != sorted(H.element_orders):
        return []
    gens = _generating_sequence(G)
    cands = [[h for h in range(H.order) if H.element_orders[h] == G.element_orders[g]] for g in gens]
    out = []

    def search(k, images):
        if k == len(gens):
            phi = _extend(G, H, gens, images)
            if phi is not None and len(phi) == G.order:
                f = tuple(phi[x] for x in range(G.order))
                fa = np.asarray(f)
                if np.array_equal(fa[G.table], H.table[np.ix_(fa, fa)]):
                    out.append(f)
                    return first_only
            return False
        for h in cands[k]:
            imgs = images + [h]
            if _extend(G, H, gens[:k + 1], imgs) is None:
                continue
            if search(k + 1, imgs):
                return True
        return False

    search(0, [])
    return sorted(out)


def find_isomorphism(G: CayleyGroup, H: CayleyGroup):
    found = isomorphisms(G, H, first_only=True)
    return found[0] if found else None


def is_isomorphic(G: CayleyGroup, H: CayleyGroup) -> bool:
    return find_isomorphism(G, H) is not None


@lru_cache(maxsize=512)
def automorphism_group(G: CayleyGroup) -> tuple:
    """All automorphisms of ``G``, sorted."""
    return tuple(isomorphisms(G, G))


def inner_automorphism(G: CayleyGroup, g: int) -> Perm:
    """The permutation ``x -> g^-1 x g``."""
    return tuple(G.conj(x, g) for x in range(G.order))


# ---------------------------------------------------------------------------
# quotients, products

@dataclass(frozen=True)
class Quotient:
    group: CayleyGroup
    projection: tuple       # element -> coset index
    cosets: tuple           # coset index -> ElemSet

    # tuple-unpacking convenience: Q, proj = quotient_group(...)
    def __iter__(self):
        return iter((self.group, self.projection))


def right_cosets(G: CayleyGroup, N) -> tuple:
    """Right cosets ``N a`` ordered by least element (the coset of 0 first)."""
    seen = [None] * G.order
    cosets = []
    for a in range(G.order):
        if seen[a] is None:
            c = tuple(sorted(G.rows[x][a] for x in N))
            for y in c:
                seen[y] = len(cosets)
            cosets.append(c)
    return tuple(cosets), tuple(seen)


def quotient_group(G: CayleyGroup, N) -> Quotient:
    N = elemset(N)
    if not is_normal(G, N):
        raise errors.NotNormal(f"{N} is not a normal subgroup")
    cosets, proj = right_cosets(G, N)
    reps = [c[0] for c in cosets]
    table = [[proj[G.rows[a][b]] for b in reps] for a in reps]
    name = f"{G.name}/N{len(N)}" if G.name else None
    return Quotient(CayleyGroup(table, name), proj, cosets)


def semidirect_product(A: CayleyGroup, N: CayleyGroup, act, validate: bool = None) -> CayleyGroup:
    """``A`` acting on the normal subgroup ``N`` with ``a^-1 x a = x ** act[a]``.

    Elements are pairs ``(a, x)`` (the product ``a x``) numbered
    ``a * |N| + x``, so ``(a, x)(b, y) = (ab, x**act[b] * y)``.  ``act`` is a
    sequence (or callable) giving an automorphism of ``N`` for each element of
    ``A``; it must be a homomorphism for left-to-right composition.
    The copy of ``N`` is ``0 .. |N|-1`` and the copy of ``A`` is the
    multiples of ``|N|``.
    """
    if callable(act):
        act = [act(a) for a in range(A.order)]
    act = [tuple(int(v) for v in f) for f in act]
    if len(act) != A.order:
        raise ValueError("act must give one permutation per element of A")
    for a, f in enumerate(act):
        if not N.is_automorphism(f):
            raise errors.ActionNotAutomorphism(f"act[{a}] is not an automorphism of N")
    for a in range(A.order):
        for b in range(A.order):
            if act[A.rows[a][b]] != compose(act[a], act[b]):
                raise errors.ActionNotHomomorphism(
                    f"act[{a}*{b}] differs from act[{a}] then act[{b}]")
    m = N.order
    size = A.order * m
    av = np.arange(size) // m
    xv = np.arange(size) % m
    acts = np.asarray(act, dtype=np.int64)
    table = A.table[av[:, None], av[None, :]] * m + N.table[acts[av[None, :], xv[:, None]], xv[None, :]]
    name = f"{A.name}:{N.name}" if A.name and N.name else None
    if validate is None:
        validate = size <= VALIDATE_LIMIT
    if validate:
        return validate_group(table, name)
    return CayleyGroup(table, name)


# ---------------------------------------------------------------------------
# supersolubility

def has_prime_order_normal_subgroup(G: CayleyGroup) -> bool:
    for x in range(1, G.order):
        if isprime(G.element_orders[x]) and is_normal(G, closure(G, [x])):
            return True
    return False


@lru_cache(maxsize=4096)
def group_is_supersoluble(G: CayleyGroup) -> bool:
    """Every non-trivial quotient ``G/N`` has a normal subgroup of prime order."""
    if G.order == 1:
        return True
    for N in normal_subgroups(G):
        if len(N) == G.order:
            continue
        Q = quotient_group(G, N).group
        if not _prime_normal_cached(Q):
            return False
    return True


@lru_cache(maxsize=4096)
def _prime_normal_cached(G: CayleyGroup) -> bool:
    return has_prime_order_normal_subgroup(G)
