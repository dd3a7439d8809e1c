"""Sylow and Hall sub-skew braces of supersoluble skew braces.

The constructive algorithms follow the minimal-counterexample argument:

* pick an ideal ``M`` of prime order ``r`` (smallest prime, then least set);
* if ``r`` is a wanted prime, solve in ``B/M`` and take the preimage;
* otherwise solve in ``B/M``, take the preimage ``X``; if ``X`` is proper,
  continue inside ``X`` (where ``M`` is still an ideal of prime order),
  else ``|B| = r * (pi-part)`` and ``add = Q M`` with ``Q`` a Hall subgroup:

  - ``Q`` centralises ``M``: ``Q`` is normal, hence characteristic, hence
    gamma-invariant;
  - otherwise every ``gamma(m)``, ``m`` in ``M``, is inner, ``gamma(m) =
    iota(m ** tau)`` with ``tau = -sigma`` in ``End(M) = Z/r``, and sigma is 0
    or 1.  For 0, ``M`` lies in ``ker(gamma)``; for 1 it lies in the kernel of
    the opposite brace, which has the same sub-skew braces.  With ``M`` in
    the kernel, a Sylow subgroup fixed by the q-group ``gamma(B)`` (Sylow
    case) or a Hall subgroup read off ``mul x| add`` (Hall case) finishes.

Each deduction is re-checked on the input; a failed check raises
:class:`~skewbrace.errors.ProofInvariantViolated` instead of returning.
"""
from dataclasses import asdict, dataclass, field
from functools import lru_cache
from itertools import combinations
from math import gcd
from typing import Optional

from . import errors
from ._arith import isprime, p_part, pi_part, prime_subsets, primefactors
from .brace import (
    SkewBrace,
    gamma_kernel,
    ideals,
    is_ideal,
    is_invariant,
    is_sub_brace,
    left_ideals,
    opposite,
    quotient_brace,
    restrict,
)
from .groups import (
    CayleyGroup,
    ElemSet,
    Perm,
    closure,
    complements,
    elemset,
    hall_subgroups,
    inner_automorphism,
    is_characteristic,
    is_normal,
    is_subgroup,
    semidirect_product,
)


# ---------------------------------------------------------------------------
# supersolubility

@lru_cache(maxsize=8192)
def minimal_prime_ideal(B: SkewBrace) -> Optional[ElemSet]:
    """An ideal of prime order: smallest prime first, then least as a sorted tuple."""
    add = B.add
    for p in primefactors(B.order):
        found = set()
        for x in range(1, B.order):
            if add.element_orders[x] == p:
                S = closure(add, [x])
                if S not in found and is_ideal(B, S):
                    found.add(S)
        if found:
            return min(found)
    return None


@lru_cache(maxsize=8192)
def brace_is_supersoluble(B: SkewBrace) -> bool:
    """Every non-trivial image ``B/I`` has an ideal of prime order."""
    if B.order == 1:
        return True
    for I in ideals(B):
        if len(I) == B.order:
            continue
        Q = B if len(I) == 1 else quotient_brace(B, I).brace
        if minimal_prime_ideal(Q) is None:
            return False
    return True


# ---------------------------------------------------------------------------
# brute force

def hall_subbraces_bruteforce(B: SkewBrace, primes) -> tuple:
    """Every Hall pi-subgroup common to ``add`` and ``mul``, sorted."""
    common = set(hall_subgroups(B.add, primes)) & set(hall_subgroups(B.mul, primes))
    return tuple(sorted(common))


def hall_subbrace_bruteforce(B: SkewBrace, primes) -> Optional[ElemSet]:
    found = hall_subbraces_bruteforce(B, primes)
    return found[0] if found else None


# ---------------------------------------------------------------------------
# Curran decomposition

@dataclass(frozen=True)
class CurranDecomposition:
    """``theta(k h) = d(k) b(k) a(h)`` for ``k`` in Q and ``h`` in M."""
    d: dict     # Q -> Q
    b: dict     # Q -> M
    a: dict     # M -> M


def _check_internal_semidirect(G: CayleyGroup, Q, M):
    if not is_subgroup(G, Q):
        raise errors.NotInternalSemidirect(f"{Q} is not a subgroup")
    if not is_normal(G, M):
        raise errors.NotInternalSemidirect(f"{M} is not a normal subgroup")
    if set(Q) & set(M) != {0} or len(Q) * len(M) != G.order:
        raise errors.NotInternalSemidirect("Q is not a complement of M")
    if any(G.rows[x][y] != G.rows[y][x] for x in M for y in M):
        raise errors.NotInternalSemidirect(f"{M} is not abelian")


def _splitting(G, Q, M) -> dict:
    return {G.rows[k][h]: (k, h) for k in Q for h in M}


def curran_decompose(G: CayleyGroup, Q, M, theta: Perm) -> CurranDecomposition:
    """Split an automorphism of ``G = Q x| M`` (``M`` abelian) into ``(d, b, a)``.

    All three defining identities and exact reassembly are verified.
    """
    Q, M = elemset(Q), elemset(M)
    _check_internal_semidirect(G, Q, M)
    theta = tuple(theta)
    if not G.is_automorphism(theta):
        raise ValueError("theta is not an automorphism of G")
    if {theta[h] for h in M} != set(M):
        raise errors.ThetaDoesNotPreserveM(f"theta does not map {M} onto itself")
    split = _splitting(G, Q, M)
    a = {h: theta[h] for h in M}
    d, b = {}, {}
    for k in Q:
        d[k], b[k] = split[theta[k]]
    dec = CurranDecomposition(d, b, a)
    failure = _curran_failure(G, Q, M, theta, dec)
    if failure:
        raise errors.ProofInvariantViolated("curran", failure)
    return dec


def _curran_failure(G, Q, M, theta, dec) -> Optional[str]:
    r = G.rows
    d, b, a = dec.d, dec.b, dec.a
    if sorted(d.values()) != list(Q) or any(d[r[x][y]] != r[d[x]][d[y]] for x in Q for y in Q):
        return "d is not an automorphism of Q"
    if sorted(a.values()) != list(M) or any(a[r[x][y]] != r[a[x]][a[y]] for x in M for y in M):
        return "a is not an automorphism of M"
    for h in M:
        for k in Q:
            if a[G.conj(h, k)] != G.conj(a[h], d[k]):
                return f"(h^k)^a != (h^a)^(k^d) at h={h}, k={k}"
    for x in Q:
        for y in Q:
            if b[r[x][y]] != r[G.conj(b[x], d[y])][b[y]]:
                return f"(xy)^b != (x^b)^(y^d) y^b at x={x}, y={y}"
    if theta != recompose(G, Q, M, dec):
        return "recomposition differs from theta"
    return None


def recompose(G: CayleyGroup, Q, M, dec: CurranDecomposition) -> Perm:
    img = [0] * G.order
    for k in Q:
        for h in M:
            img[G.rows[k][h]] = G.product(dec.d[k], dec.b[k], dec.a[h])
    return tuple(img)


# ---------------------------------------------------------------------------
# 1-cocycles

def is_cocycle(G: CayleyGroup, Q, M, b) -> Optional[tuple]:
    """``None`` if ``(xy)^b = (x^b)^y y^b`` on Q, else a failing pair."""
    Mset = set(M)
    for x in Q:
        if b[x] not in Mset:
            return (x,)
    r = G.rows
    for x in Q:
        for y in Q:
            if b[r[x][y]] != r[G.conj(b[x], y)][b[y]]:
                return (x, y)
    return None


def coboundary(G: CayleyGroup, Q, m: int) -> dict:
    """``x -> [x, m]``."""
    return {x: G.commutator(x, m) for x in Q}


def solve_cocycle(G: CayleyGroup, Q, M, b) -> Optional[int]:
    """Find ``m`` in ``M`` with ``x^b = [x, m]`` for every ``x`` in ``Q``.

    For ``|M|`` prime this follows the cohomology-free argument: ``b`` dies
    on the centraliser ``C`` of ``M`` in ``Q``, ``Q/C`` is cyclic on a coset
    ``tC``, and ``b`` is fixed by ``t^b``; the ``|M|`` coboundaries are
    pairwise distinct, so matching at ``t`` picks the only candidate.
    Other ``M`` fall back to trying every element.
    """
    Q, M = elemset(Q), elemset(M)
    if not is_subgroup(G, Q):
        raise errors.HypothesisFailed("Q subgroup", f"{Q}")
    if not is_normal(G, M):
        raise errors.HypothesisFailed("M normal", f"{M}")
    if any(G.rows[x][y] != G.rows[y][x] for x in M for y in M):
        raise errors.HypothesisFailed("M abelian")
    if gcd(len(Q), len(M)) != 1:
        raise errors.HypothesisFailed("coprime orders", f"|Q| = {len(Q)}, |M| = {len(M)}")
    b = {x: b[x] for x in Q}
    bad = is_cocycle(G, Q, M, b)
    if bad is not None:
        raise errors.NotACocycle(f"cocycle law fails at {bad}", bad)

    C = [c for c in Q if all(G.commutator(c, m) == 0 for m in M)]
    if len(C) == len(Q):
        # trivial action: cocycles are homomorphisms Q -> M, trivial by coprimality
        return 0 if all(v == 0 for v in b.values()) else None
    if not isprime(len(M)):
        for m in M:
            if all(b[x] == G.commutator(x, m) for x in Q):
                return m
        return None
    if any(b[c] != 0 for c in C):
        return None
    Cset = set(C)
    k = len(Q) // len(C)

    def coset_order(t):
        y, i = t, 1
        while y not in Cset:
            y = G.rows[y][t]
            i += 1
        return i

    t = next(x for x in Q if coset_order(x) == k)
    match = [m for m in M if G.commutator(t, m) == b[t]]
    if len(match) != 1:
        return None
    m = match[0]
    if all(b[x] == G.commutator(x, m) for x in Q):
        return m
    return None


# ---------------------------------------------------------------------------
# the sigma dichotomy

@dataclass(frozen=True)
class DualityResult:
    sigma: int
    complement: ElemSet
    tau: dict           # m -> m ** tau, with gamma(m) = iota(m ** tau)
    exponent: int       # tau acts on M as x -> x ** exponent


def duality_analysis(B: SkewBrace, M, Q=None) -> DualityResult:
    """Write ``gamma(m) = iota(m ** -sigma)`` on an ideal ``M`` of prime order.

    Hypotheses (checked, ``HypothesisFailed`` otherwise): ``M`` an ideal of
    prime order, ``add`` non-abelian, ``M`` characteristic in ``add`` and
    meeting its centre trivially, and a complement ``Q`` of ``M`` exists
    (the least one is used unless given).
    """
    M = elemset(M)
    p = len(M)
    G = B.add
    if not isprime(p):
        raise errors.HypothesisFailed("prime order", f"|M| = {p}")
    if not is_ideal(B, M):
        raise errors.HypothesisFailed("ideal", f"{M}")
    if G.is_abelian:
        raise errors.HypothesisFailed("non-abelian additive group")
    if not is_characteristic(G, M):
        raise errors.HypothesisFailed("characteristic", f"{M}")
    if set(M) & set(G.center) != {0}:
        raise errors.HypothesisFailed("M meets the centre trivially")
    if Q is None:
        comps = complements(G, M)
        if not comps:
            raise errors.HypothesisFailed("complement exists")
        Q = comps[0]
    Q = elemset(Q)

    tau = {}
    for m in M:
        theta = B.gamma(m)
        dec = curran_decompose(G, Q, M, theta)
        if any(dec.a[h] != h for h in M):
            raise errors.ProofInvariantViolated("a(m)=1", f"m={m}")
        if any(dec.d[k] != k for k in Q):
            raise errors.ProofInvariantViolated("d(m)=1", f"m={m}")
        n = solve_cocycle(G, Q, M, dec.b)
        if n is None:
            raise errors.ProofInvariantViolated("H1=0", f"b(m) not a coboundary for m={m}")
        if inner_automorphism(G, n) != theta:
            raise errors.ProofInvariantViolated("gamma(m)=iota(m^tau)", f"m={m}")
        tau[m] = n

    g = M[1]
    powers = [G.power(g, i) for i in range(p)]
    k = powers.index(tau[g])
    for i in range(p):
        if tau[powers[i]] != powers[i * k % p]:
            raise errors.ProofInvariantViolated("tau in End(M)", f"at {powers[i]}")
    sigma = (-k) % p
    if sigma not in (0, 1):
        raise errors.SigmaOutOfRange(sigma, p)
    return DualityResult(sigma, Q, tau, k)


def duality_sigma(B: SkewBrace, M, Q=None) -> int:
    return duality_analysis(B, M, Q).sigma


# ---------------------------------------------------------------------------
# fixed Sylow subgroups

def _image(S, f) -> ElemSet:
    return tuple(sorted(f[x] for x in S))


def _is_power_of(k: int, q: int) -> bool:
    while k % q == 0:
        k //= q
    return k == 1


def gamma_orbits_on_sylows(B: SkewBrace, q: int) -> list:
    """Orbits of ``gamma(B)`` on the Sylow q-subgroups of ``add``."""
    sylows = hall_subgroups(B.add, {q})
    seen, orbits = set(), []
    for S in sylows:
        if S in seen:
            continue
        orbit, frontier = {S}, [S]
        while frontier:
            T = frontier.pop()
            for f in B.gamma_image:
                U = _image(T, f)
                if U not in orbit:
                    orbit.add(U)
                    frontier.append(U)
        seen |= orbit
        orbits.append(tuple(sorted(orbit)))
    return orbits


def fixed_sylow_under_gamma(B: SkewBrace, q: int) -> Optional[ElemSet]:
    """Least Sylow q-subgroup of ``add`` fixed by every ``gamma(z)``.

    Requires ``gamma(B)`` to be a q-group; then the number of Sylow
    q-subgroups is 1 mod q while orbits have q-power length, so a fixed
    point exists.
    """
    if not _is_power_of(len(B.gamma_image), q):
        raise errors.GammaNotQGroup(f"|gamma(B)| = {len(B.gamma_image)} is not a power of {q}")
    for S in hall_subgroups(B.add, {q}):
        if all(_image(S, f) == S for f in B.gamma_image):
            return S
    return None


# ---------------------------------------------------------------------------
# proof traces

@dataclass
class TraceStep:
    id: int
    parent: Optional[int]
    link: Optional[str]         # how this frame derives from the parent's
    depth: int
    order: int
    primes: tuple
    branch: str = ""
    ideal: Optional[ElemSet] = None
    prime: Optional[int] = None
    preimage: Optional[ElemSet] = None
    chosen: Optional[ElemSet] = None
    sigma: Optional[int] = None
    result: Optional[ElemSet] = None
    note: str = ""


@dataclass
class ProofTrace:
    steps: list = field(default_factory=list)

    def records(self) -> list:
        return [asdict(s) for s in self.steps]

    def to_text(self) -> str:
        lines = []
        for s in self.steps:
            pad = "  " * s.depth
            bits = [f"{s.branch}", f"|B|={s.order}", f"primes={list(s.primes)}"]
            if s.link and s.link != "root":
                bits.insert(0, f"[{s.link}]")
            if s.ideal is not None:
                bits.append(f"M={_fmt(s.ideal)} (p={s.prime})")
            if s.preimage is not None:
                bits.append(f"X={_fmt(s.preimage)}")
            if s.sigma is not None:
                bits.append(f"sigma={s.sigma}")
            if s.chosen is not None:
                bits.append(f"chosen={_fmt(s.chosen)}")
            bits.append(f"-> {_fmt(s.result)}")
            lines.append(pad + " ".join(bits))
            if s.note:
                lines.append(pad + "  " + s.note)
        return "\n".join(lines)

    def __str__(self):
        return self.to_text()


def _fmt(S) -> str:
    if S is None:
        return "?"
    return "{" + ", ".join(str(x) for x in S) + "}"


@dataclass(frozen=True)
class ConstructiveResult:
    result: ElemSet
    trace: ProofTrace

    def __iter__(self):
        return iter((self.result, self.trace))


class _Tracer:
    def __init__(self):
        self.steps = []

    def open(self, parent, link, depth, B, primes) -> TraceStep:
        s = TraceStep(len(self.steps), None if parent is None else parent.id, link, depth,
                      B.order, tuple(sorted(primes)))
        self.steps.append(s)
        return s


def _require(cond, step, message=""):
    if not cond:
        raise errors.ProofInvariantViolated(step, message)


def _solve(B, primes, mode, tracer, parent, link, depth, forced_ideal=None):
    step = tracer.open(parent, link, depth, B, primes)
    n = B.order
    target = pi_part(n, primes)
    if target == n:
        step.branch = "whole"
        step.result = tuple(range(n))
        return step.result
    if target == 1:
        step.branch = "trivial"
        step.result = (0,)
        return step.result

    M = forced_ideal if forced_ideal is not None else minimal_prime_ideal(B)
    _require(M is not None, "minimal-ideal", f"no ideal of prime order in a brace of order {n}")
    r = len(M)
    step.ideal, step.prime = M, r
    QB = quotient_brace(B, M)
    below = _solve(QB.brace, primes, mode, tracer, step, "quotient", depth + 1)
    lifted = QB.preimage(below)

    if r in primes:
        step.branch = "quotient-lift"
        result = lifted
    else:
        step.branch = "quotient-preimage"
        step.preimage = lifted
        _require(is_sub_brace(B, lifted) and len(lifted) == r * target, "preimage",
                 f"preimage {lifted} is not a sub-skew brace of order {r * target}")
        if len(lifted) < n:
            sub = restrict(B, lifted)
            inner_M = tuple(sorted(sub.embedding.index(x) for x in M))
            result = sub.image(_solve(sub.brace, primes, mode, tracer, step, "restrict",
                                      depth + 1, forced_ideal=inner_M))
        else:
            result = _terminal(B, M, primes, mode, tracer, step, depth + 1)

    _require(is_sub_brace(B, result) and len(result) == target, step.branch,
             f"{result} is not a sub-skew brace of order {target}")
    step.result = result
    return result


def _terminal(B, M, primes, mode, tracer, parent, depth):
    """``|B| = |M| * (pi-part)`` with ``M`` an ideal of prime order outside pi."""
    step = tracer.open(parent, "same", depth, B, primes)
    n, r = B.order, len(M)
    target = n // r
    _require(n % r == 0 and pi_part(n, primes) == target and r not in primes, "terminal-shape",
             f"|B| = {n}, |M| = {r}")
    step.ideal, step.prime = M, r
    H = hall_subgroups(B.add, primes)[0]
    _require(set(H) & set(M) == {0} and len(H) == target, "add = QM")
    step.chosen = H

    add = B.add
    if all(add.conj(m, h) == m for h in H for m in M):
        step.branch = "characteristic-complement"
        _require(is_normal(add, H), "Q normal")
        _require(is_characteristic(add, H), "Q characteristic")
        _require(is_invariant(H, B.gamma_image), "Q gamma-invariant")
        step.result = H
        return H

    try:
        duality = duality_analysis(B, M)
    except errors.HypothesisFailed as e:
        raise errors.ProofInvariantViolated("duality hypotheses", str(e)) from e
    step.sigma = duality.sigma
    kernel_M = set(M) <= set(gamma_kernel(B))
    if duality.sigma == 0:
        _require(kernel_M, "sigma=0 => M <= ker(gamma)")
        result, step.branch, step.note = _kernel_branch(B, primes, mode, M)
        step.result = result
        return result

    Bbar = opposite(B)
    _require(set(M) <= set(gamma_kernel(Bbar)), "sigma=1 => M <= ker(gamma bar)")
    step.branch = "opposite-switch"
    child = tracer.open(step, "opposite", depth + 1, Bbar, primes)
    child.ideal, child.prime = M, r
    result, child.branch, child.note = _kernel_branch(Bbar, primes, mode, M)
    child.chosen = result
    child.result = result
    _require(is_sub_brace(B, result), "opposite has the same sub-skew braces")
    step.result = result
    return result


def _kernel_branch(B, primes, mode, M):
    """``M <= ker(gamma)``: finish by a gamma-fixed Sylow or via ``mul x| add``."""
    if mode == "sylow":
        (q,) = primes
        try:
            S = fixed_sylow_under_gamma(B, q)
        except errors.GammaNotQGroup as e:
            raise errors.ProofInvariantViolated("gamma(B) is a q-group", str(e)) from e
        _require(S is not None, "fixed Sylow exists")
        gQ = {B.gamma(x) for x in S}
        _require(gQ == set(B.gamma_image), "gamma(B) = gamma(Q)")
        return S, "gamma-kernel-fixed-point", f"|gamma(B)| = {len(B.gamma_image)}"
    H, note = _hall_via_semidirect(B, primes)
    return H, "semidirect-hall", note


def _hall_via_semidirect(B, primes):
    n = B.order
    G = semidirect_product(B.mul, B.add, B.gamma_perms)
    H_circ = hall_subgroups(B.mul, primes)[0]
    target = pi_part(G.order, primes)
    base = [a * n for a in H_circ]
    big = None
    # every Hall subgroup of G over H_circ is H_circ times its trace on add
    for H in hall_subgroups(B.add, primes):
        K = closure(G, base + list(H))
        if len(K) == target:
            big = K
            break
    _require(big is not None, "Hall pi-subgroup of mul x| add containing H_circ")
    H = tuple(x for x in big if x < n)
    _require(len(H) == pi_part(n, primes), "trace on add is a Hall subgroup")
    _require(is_invariant(H, B.gamma_image), "H is gamma(B)-invariant")
    return H, f"H_circ={_fmt(H_circ)}, |Hall(G)|={len(big)}"


def _check_pre(B, primes):
    primes = frozenset(primes)
    if not primes or not all(isprime(p) for p in primes):
        raise ValueError(f"expected a non-empty set of primes, got {sorted(primes)}")
    if not brace_is_supersoluble(B):
        raise errors.NotSupersoluble(f"{B!r} is not supersoluble")
    return primes


def sylow_subbrace_constructive(B: SkewBrace, p: int) -> ConstructiveResult:
    """A Sylow p-sub-skew brace of a supersoluble brace, with its proof trace."""
    primes = _check_pre(B, {p})
    if B.order % p:
        raise ValueError(f"{p} does not divide {B.order}")
    tracer = _Tracer()
    result = _solve(B, primes, "sylow", tracer, None, "root", 0)
    return ConstructiveResult(result, ProofTrace(tracer.steps))


def hall_subbrace_constructive(B: SkewBrace, primes) -> ConstructiveResult:
    """A Hall pi-sub-skew brace of a supersoluble brace, with its proof trace."""
    primes = _check_pre(B, primes)
    tracer = _Tracer()
    result = _solve(B, primes, "hall", tracer, None, "root", 0)
    return ConstructiveResult(result, ProofTrace(tracer.steps))


def replay(B: SkewBrace, trace: ProofTrace) -> ElemSet:
    """Rebuild every frame from ``B`` and the recorded ideals and recombine the results.

    Leaves are re-verified as sub-skew braces of the right order in their
    rebuilt frame; inner steps take the lift of their last child.
    """
    steps = trace.steps
    frames, links = {}, {}
    for s in steps:
        if s.parent is None:
            frames[s.id] = B
            continue
        par = steps[s.parent]
        F = frames[par.id]
        if s.link == "quotient":
            QB = quotient_brace(F, par.ideal)
            frames[s.id], links[s.id] = QB.brace, QB.preimage
        elif s.link == "restrict":
            sub = restrict(F, par.preimage)
            frames[s.id], links[s.id] = sub.brace, sub.image
        elif s.link == "opposite":
            frames[s.id], links[s.id] = opposite(F), tuple
        elif s.link == "same":
            frames[s.id], links[s.id] = F, tuple
        else:
            raise ValueError(f"unknown link {s.link!r}")
        _require(frames[s.id].order == s.order, "replay", f"frame order mismatch at step {s.id}")

    children = {s.id: [] for s in steps}
    for s in steps:
        if s.parent is not None:
            children[s.parent].append(s.id)
    results = {}
    for s in reversed(steps):
        F = frames[s.id]
        kids = children[s.id]
        if not kids:
            r = tuple(s.result)
            _require(is_sub_brace(F, r) and len(r) == pi_part(F.order, s.primes), "replay",
                     f"leaf {s.id} result is not a Hall sub-skew brace")
        else:
            if s.branch == "quotient-preimage":
                _require(links[kids[0]](results[kids[0]]) == tuple(s.preimage), "replay",
                         f"preimage mismatch at step {s.id}")
            r = tuple(links[kids[-1]](results[kids[-1]]))
        results[s.id] = r
    return results[steps[0].id]


# ---------------------------------------------------------------------------
# whole-theorem report

@dataclass
class Check:
    name: str
    status: str         # "pass", "fail" or "info"
    detail: str = ""
    witness: Optional[tuple] = None


@dataclass
class TheoremReport:
    name: Optional[str]
    order: int
    supersoluble: bool
    checks: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.status != "fail" for c in self.checks)

    def add(self, name, status, detail="", witness=None):
        self.checks.append(Check(name, status, detail, witness))

    def records(self) -> dict:
        return {"name": self.name, "order": self.order, "supersoluble": self.supersoluble,
                "ok": self.ok, "checks": [asdict(c) for c in self.checks]}

    def to_text(self) -> str:
        head = f"{self.name or 'brace'} (order {self.order}): " + \
            ("supersoluble" if self.supersoluble else "not supersoluble")
        lines = [head]
        for c in self.checks:
            lines.append(f"  [{c.status.upper():4}] {c.name}" + (f": {c.detail}" if c.detail else ""))
        return "\n".join(lines)


def _check_constructive(report, B, primes, label):
    brute = hall_subbrace_bruteforce(B, primes)
    target = pi_part(B.order, primes)
    try:
        if label == "sylow":
            res = sylow_subbrace_constructive(B, next(iter(primes)))
        else:
            res = hall_subbrace_constructive(B, primes)
    except errors.ProofInvariantViolated as e:
        report.add(f"{label} {sorted(primes)} constructive", "fail", f"PROOF INVARIANT VIOLATED: {e}")
        return
    S = res.result
    good = is_sub_brace(B, S) and len(S) == target and brute is not None
    report.add(f"{label} {sorted(primes)} constructive", "pass" if good else "fail",
               f"{_fmt(S)} (order {len(S)}, expected {target}); brute force "
               + ("agrees" if brute is not None else "found none"), S)
    replayed = replay(B, res.trace)
    report.add(f"{label} {sorted(primes)} trace replay", "pass" if replayed == S else "fail")


def verify_theorems(B: SkewBrace) -> TheoremReport:
    """Check the Sylow and Hall theorems (and the left-ideal remark) on one brace."""
    sup = brace_is_supersoluble(B)
    report = TheoremReport(B.name, B.order, sup)
    ps = primefactors(B.order)
    if not sup:
        for p in ps:
            S = hall_subbrace_bruteforce(B, {p})
            report.add(f"sylow [{p}] brute force", "info",
                       "exists " + _fmt(S) if S else "none", S)
        return report
    for p in ps:
        _check_constructive(report, B, {p}, "sylow")
    for primes in prime_subsets(B.order):
        _check_constructive(report, B, primes, "hall")
    lefts = left_ideals(B)
    for p in ps:
        sylows = hall_subbraces_bruteforce(B, {p})
        for A in lefts:
            if len(A) > 1 and p_part(len(A), p) == len(A):
                inside = any(set(A) <= set(S) for S in sylows)
                report.add(f"remark: left ideal {_fmt(A)} in a Sylow {p}-sub-skew brace",
                           "pass" if inside else "fail", witness=A)
    for primes in prime_subsets(B.order):
        if len(primes) < 2:
            continue
        halls = hall_subbraces_bruteforce(B, primes)
        for A in lefts:
            if len(A) > 1 and pi_part(len(A), primes) == len(A):
                inside = any(set(A) <= set(S) for S in halls)
                report.add(f"remark: left ideal {_fmt(A)} in a Hall {sorted(primes)}-sub-skew brace",
                           "pass" if inside else "fail", witness=A)
    return report
