"""Right skew braces on explicit tables.

A skew brace is one element set with two group tables, the additive one
``add`` (written ``x . y``) and the multiplicative one ``mul`` (``x o y``),
sharing the identity 0 and satisfying

    (x . y) o z = (x o z) . z^-1 . (y o z)

with ``z^-1`` the additive inverse.  ``gamma(z)`` is ``x -> (x o z) . z^-1``,
an automorphism of ``add``; ``z -> gamma(z)`` is a homomorphism from ``mul``
under left-to-right composition, and ``x o y = x**gamma(y) . y``.
"""
from dataclasses import dataclass
from functools import cached_property, lru_cache

import numpy as np

from . import errors
from .groups import (
    CayleyGroup,
    ElemSet,
    Perm,
    compose,
    elemset,
    identity_perm,
    inner_automorphism,
    is_normal,
    is_subgroup,
    right_cosets,
    subgroups,
    validate_group,
)


class SkewBrace:
    """A validated skew brace.  Build with :func:`validate_brace`."""

    def __init__(self, add: CayleyGroup, mul: CayleyGroup, name: str = None):
        self.add = add
        self.mul = mul
        self.name = name
        t, m, inv = add.table, mul.table, np.asarray(add.inv)
        # gammas[z, x] = (x o z) . z^-1
        g = t[m.T, inv[:, None]]
        g.setflags(write=False)
        self.gammas = g

    @property
    def order(self) -> int:
        return self.add.order

    def __len__(self):
        return self.order

    def __repr__(self):
        return f"<SkewBrace {self.name or ''} of order {self.order}>".replace("  ", " ")

    def __eq__(self, other):
        return isinstance(other, SkewBrace) and self.key == other.key

    def __hash__(self):
        return hash(self.key)

    @cached_property
    def key(self) -> bytes:
        return self.add.key + b"|" + self.mul.key

    @cached_property
    def gamma_perms(self) -> tuple:
        return tuple(tuple(row) for row in self.gammas.tolist())

    def gamma(self, z: int) -> Perm:
        return self.gamma_perms[z]

    @cached_property
    def gamma_image(self) -> frozenset:
        """The group ``gamma(B)`` of automorphisms of ``add``."""
        return frozenset(self.gamma_perms)

    def plus(self, x: int, y: int) -> int:
        return self.add.rows[x][y]

    def circ(self, x: int, y: int) -> int:
        return self.mul.rows[x][y]

    def minus(self, x: int) -> int:
        return self.add.inv[x]


def _axiom_violation(add: CayleyGroup, mul: CayleyGroup):
    t, m = add.table, mul.table
    inv = np.asarray(add.inv)
    n = t.shape[0]
    lhs = m[t[:, :, None], np.arange(n)[None, None, :]]   # (x.y) o z
    a = t[m, inv[None, :]]                             # a[x, z] = (x o z) . z^-1
    rhs = t[a[:, None, :], m[None, :, :]]              # a[x, z] . (y o z)
    bad = np.argwhere(lhs != rhs)
    if len(bad):
        return tuple(int(v) for v in bad[0])
    return None


def validate_brace(add_table, mul_table, name: str = None) -> SkewBrace:
    """Validate both group tables and the brace axiom on all triples."""
    try:
        add = add_table if isinstance(add_table, CayleyGroup) else validate_group(add_table)
    except errors.ValidationError as e:
        raise errors.AddNotGroup(e) from e
    try:
        mul = mul_table if isinstance(mul_table, CayleyGroup) else validate_group(mul_table)
    except errors.ValidationError as e:
        raise errors.MulNotGroup(e) from e
    if add.order != mul.order:
        raise errors.ValidationError(f"tables have different sizes {add.order} and {mul.order}")
    w = _axiom_violation(add, mul)
    if w is not None:
        x, y, z = w
        raise errors.AxiomViolation(
            f"(x.y)oz != (xoz).z^-1.(yoz) at x={x}, y={y}, z={z}", w)
    return SkewBrace(add, mul, name)


def trivial_brace(G: CayleyGroup) -> SkewBrace:
    return SkewBrace(G, G, f"trivial({G.name})" if G.name else None)


def almost_trivial_brace(G: CayleyGroup) -> SkewBrace:
    """``x o y = y . x``; its gamma is ``z -> iota(z^-1)``."""
    mul = CayleyGroup(G.table.T, G.name)
    return SkewBrace(G, mul, f"almost_trivial({G.name})" if G.name else None)


def check_invariants(B: SkewBrace) -> list:
    """Re-check the identities every skew brace satisfies; returns failures (empty when fine)."""
    failures = []
    if _axiom_violation(B.add, B.mul) is not None:
        failures.append(("axiom", _axiom_violation(B.add, B.mul)))
    for z in range(B.order):
        if not B.add.is_automorphism(B.gamma(z)):
            failures.append(("gamma_automorphism", (z,)))
    rows = B.mul.rows
    for y in range(B.order):
        for z in range(B.order):
            if B.gamma(rows[y][z]) != compose(B.gamma(y), B.gamma(z)):
                failures.append(("gamma_homomorphism", (y, z)))
    g = B.gammas
    lhs = B.mul.table
    rhs = B.add.table[g.T, np.arange(B.order)[None, :]]     # x**gamma(y) . y
    for x, y in np.argwhere(lhs != rhs):
        failures.append(("circ_via_gamma", (int(x), int(y))))
    return failures


# ---------------------------------------------------------------------------
# gamma

def gamma(B: SkewBrace, z: int) -> Perm:
    return B.gamma(z)


def gamma_kernel(B: SkewBrace) -> ElemSet:
    ident = identity_perm(B.order)
    return tuple(z for z in range(B.order) if B.gamma(z) == ident)


def is_invariant(S, perms) -> bool:
    S = set(S)
    return all({f[x] for x in S} == S for f in perms)


# ---------------------------------------------------------------------------
# substructures

@dataclass(frozen=True)
class TwoOfThree:
    add_sub: bool
    mul_sub: bool
    gamma_inv: bool


def two_of_three(B: SkewBrace, A) -> TwoOfThree:
    """The three conditions of which any two imply the third."""
    A = tuple(sorted(set(A)))
    return TwoOfThree(
        add_sub=is_subgroup(B.add, A),
        mul_sub=is_subgroup(B.mul, A),
        gamma_inv=is_invariant(A, (B.gamma(a) for a in A)),
    )


def is_sub_brace(B: SkewBrace, A) -> bool:
    return is_subgroup(B.add, A) and is_subgroup(B.mul, A)


def is_left_ideal(B: SkewBrace, I) -> bool:
    return is_subgroup(B.add, I) and is_invariant(I, B.gamma_image)


def is_ideal(B: SkewBrace, I) -> bool:
    return (is_normal(B.add, I) and is_normal(B.mul, I)
            and is_invariant(I, B.gamma_image))


@lru_cache(maxsize=1024)
def sub_braces(B: SkewBrace) -> tuple:
    """All sub-skew braces, sorted."""
    common = set(subgroups(B.add)) & set(subgroups(B.mul))
    return tuple(sorted(common))


@lru_cache(maxsize=1024)
def ideals(B: SkewBrace) -> tuple:
    return tuple(I for I in sub_braces(B) if is_ideal(B, I))


def left_ideals(B: SkewBrace) -> tuple:
    return tuple(S for S in subgroups(B.add) if is_invariant(S, B.gamma_image))


# ---------------------------------------------------------------------------
# constructions

def opposite(B: SkewBrace) -> SkewBrace:
    """Same additive group, ``x o' y = (x^-1 o y^-1)^-1`` with additive inverses."""
    inv = np.asarray(B.add.inv)
    m = inv[B.mul.table[np.ix_(inv, inv)]]
    name = f"opposite({B.name})" if B.name else None
    Bbar = validate_brace(B.add, CayleyGroup(m), name)
    # gamma'(y) = gamma(y^-1) iota(y^-1)
    for y in range(B.order):
        yi = B.add.inv[y]
        expected = compose(B.gamma(yi), inner_automorphism(B.add, yi))
        if Bbar.gamma(y) != expected:
            raise AssertionError(f"opposite gamma mismatch at y={y}")
    return Bbar


@dataclass(frozen=True)
class QuotientBrace:
    brace: SkewBrace
    projection: tuple
    cosets: tuple

    def __iter__(self):
        return iter((self.brace, self.projection))

    def preimage(self, S) -> ElemSet:
        return tuple(sorted(x for i in S for x in self.cosets[i]))


def quotient_brace(B: SkewBrace, I) -> QuotientBrace:
    """``B / I`` on the right cosets of ``I``, coset of 0 numbered 0."""
    I = elemset(I)
    if not is_ideal(B, I):
        raise errors.NotAnIdeal(f"{I} is not an ideal")
    cosets, proj = right_cosets(B.add, I)
    mcosets, _ = right_cosets(B.mul, I)
    if sorted(cosets) != sorted(mcosets):
        raise errors.CosetMismatch(f"additive and multiplicative cosets of {I} differ")
    reps = [c[0] for c in cosets]
    at = [[proj[B.add.rows[a][b]] for b in reps] for a in reps]
    mt = [[proj[B.mul.rows[a][b]] for b in reps] for a in reps]
    name = f"{B.name}/I{len(I)}" if B.name else None
    return QuotientBrace(validate_brace(at, mt, name), proj, cosets)


@dataclass(frozen=True)
class SubBrace:
    brace: SkewBrace
    embedding: tuple        # new element -> old element

    def image(self, S) -> ElemSet:
        return tuple(sorted(self.embedding[x] for x in S))


def restrict(B: SkewBrace, A) -> SubBrace:
    """The sub-skew brace ``A`` as a brace in its own right, renumbered in sorted order."""
    A = elemset(A)
    if not is_sub_brace(B, A):
        raise errors.NotASubgroup(f"{A} is not a sub-skew brace")
    index = {x: i for i, x in enumerate(A)}
    at = [[index[B.add.rows[a][b]] for b in A] for a in A]
    mt = [[index[B.mul.rows[a][b]] for b in A] for a in A]
    return SubBrace(validate_brace(at, mt), A)
