from itertools import product

import pytest
from sympy import isprime, primefactors

from skewbrace import errors
from skewbrace._arith import p_part, pi_part, prime_subsets
from skewbrace.brace import (
    almost_trivial_brace,
    gamma_kernel,
    ideals,
    is_ideal,
    is_sub_brace,
    opposite,
    trivial_brace,
)
from skewbrace.catalog import small_group
from skewbrace.groups import (
    automorphism_group,
    complements,
    cyclic_group,
    hall_subgroups,
    identity_perm,
    inner_automorphism,
    is_characteristic,
    is_normal,
    subgroups,
)
from skewbrace.structure import (
    brace_is_supersoluble,
    coboundary,
    curran_decompose,
    duality_analysis,
    duality_sigma,
    fixed_sylow_under_gamma,
    gamma_orbits_on_sylows,
    hall_subbrace_bruteforce,
    hall_subbrace_constructive,
    hall_subbraces_bruteforce,
    is_cocycle,
    minimal_prime_ideal,
    recompose,
    replay,
    solve_cocycle,
    sylow_subbrace_constructive,
    verify_theorems,
)

from helpers import element


def s3_parts(S3):
    A3 = next(S for S in subgroups(S3) if len(S) == 3)
    t = element(S3, lambda x: S3.element_orders[x] == 2)
    return (0, t), A3, t


# -- supersolubility --------------------------------------------------------

def test_supersoluble_examples(Z6, A4):
    assert brace_is_supersoluble(trivial_brace(Z6))
    assert not brace_is_supersoluble(trivial_brace(A4))
    assert brace_is_supersoluble(trivial_brace(cyclic_group(1)))


def test_minimal_prime_ideal_examples(Z6, A4):
    assert minimal_prime_ideal(trivial_brace(Z6)) == (0, 3)
    assert minimal_prime_ideal(trivial_brace(A4)) is None
    assert minimal_prime_ideal(trivial_brace(cyclic_group(2))) == (0, 1)


def _supersoluble_by_chain(B):
    """Independent check: a chain of ideals of B with prime successive indices."""
    ids = ideals(B)

    def dfs(I):
        if len(I) == B.order:
            return True
        return any(set(I) < set(J) and isprime(len(J) // len(I)) and dfs(J) for J in ids)

    return dfs((0,))


def test_supersoluble_matches_ideal_chain(small_corpus):
    for _, _, B in small_corpus:
        assert brace_is_supersoluble(B) == _supersoluble_by_chain(B)


# -- brute force ------------------------------------------------------------

def test_bruteforce_examples(Z6, S3):
    assert hall_subbrace_bruteforce(trivial_brace(Z6), {2}) == (0, 3)
    A3 = s3_parts(S3)[1]
    assert hall_subbrace_bruteforce(almost_trivial_brace(S3), {3}) == A3
    for _, _, B in [(None, None, trivial_brace(Z6)), (None, None, almost_trivial_brace(S3))]:
        assert hall_subbrace_bruteforce(B, set(primefactors(B.order))) == tuple(range(B.order))


def test_bruteforce_results_are_common_hall_subgroups(small_corpus):
    for _, _, B in small_corpus:
        for primes in prime_subsets(B.order):
            for S in hall_subbraces_bruteforce(B, primes):
                assert S in hall_subgroups(B.add, primes) and S in hall_subgroups(B.mul, primes)
                assert is_sub_brace(B, S)


# -- constructive Sylow and Hall -------------------------------------------

def test_sylow_constructive_trivial_z6(Z6):
    res = sylow_subbrace_constructive(trivial_brace(Z6), 3)
    assert res.result == (0, 2, 4)
    assert replay(trivial_brace(Z6), res.trace) == (0, 2, 4)
    assert res.trace.steps[0].ideal == (0, 3)


def test_sylow_constructive_almost_trivial_s3(S3):
    B = almost_trivial_brace(S3)
    S, trace = sylow_subbrace_constructive(B, 2)
    assert len(S) == 2 and is_sub_brace(B, S)
    assert hall_subbrace_bruteforce(B, {2}) is not None
    assert replay(B, trace) == S


def test_hall_constructive_examples(S3):
    Z30 = cyclic_group(30)
    S, _ = hall_subbrace_constructive(trivial_brace(Z30), {2, 5})
    assert S == tuple(range(0, 30, 3))
    S, _ = hall_subbrace_constructive(almost_trivial_brace(S3), {2, 3})
    assert S == tuple(range(6))


def test_constructive_rejects_non_supersoluble(A4):
    with pytest.raises(errors.NotSupersoluble):
        sylow_subbrace_constructive(trivial_brace(A4), 2)
    with pytest.raises(errors.NotSupersoluble):
        hall_subbrace_constructive(trivial_brace(A4), {3})


def test_sylow_rejects_non_divisor(Z6):
    with pytest.raises(ValueError):
        sylow_subbrace_constructive(trivial_brace(Z6), 5)


def test_constructive_matches_bruteforce_small_corpus(small_corpus):
    for _, _, B in small_corpus:
        if not brace_is_supersoluble(B):
            continue
        for primes in prime_subsets(B.order):
            S, trace = hall_subbrace_constructive(B, primes)
            assert len(S) == pi_part(B.order, primes) and is_sub_brace(B, S)
            assert hall_subbrace_bruteforce(B, primes) is not None
            assert replay(B, trace) == S
        for p in primefactors(B.order):
            S, trace = sylow_subbrace_constructive(B, p)
            assert len(S) == p_part(B.order, p) and is_sub_brace(B, S)
            assert replay(B, trace) == S


def test_trace_records_and_text(S3):
    B = almost_trivial_brace(S3)
    res = sylow_subbrace_constructive(B, 2)
    recs = res.trace.records()
    assert recs[0]["parent"] is None and recs[0]["depth"] == 0
    assert all(r["branch"] for r in recs)
    text = res.trace.to_text()
    assert str(res.result[1]) in text.splitlines()[0]


def test_opposite_switch_branch_is_exercised(S3):
    # almost trivial S3: gamma(m) = iota(m^-1) on M = A3, so sigma = 1
    B = almost_trivial_brace(S3)
    branches = [s.branch for s in sylow_subbrace_constructive(B, 2).trace.steps]
    assert "opposite-switch" in branches
    branches = [s.branch for s in sylow_subbrace_constructive(trivial_brace(S3), 2).trace.steps]
    assert "gamma-kernel-fixed-point" in branches


def test_replay_detects_tampering(S3):
    B = almost_trivial_brace(S3)
    res = sylow_subbrace_constructive(B, 2)
    leaf = next(s for s in reversed(res.trace.steps) if s.result is not None and len(s.result) == 2)
    leaf.result = (0, 1, 2)
    with pytest.raises(errors.ProofInvariantViolated):
        replay(B, res.trace)


# -- fixed Sylow ------------------------------------------------------------

def test_fixed_sylow_trivial_brace(S3):
    B = trivial_brace(S3)
    assert fixed_sylow_under_gamma(B, 2) == hall_subgroups(S3, {2})[0]


def test_fixed_sylow_unique(Z6):
    B = trivial_brace(Z6)
    assert fixed_sylow_under_gamma(B, 3) == (0, 2, 4)


def test_fixed_sylow_requires_q_group(S3):
    with pytest.raises(errors.GammaNotQGroup):
        fixed_sylow_under_gamma(almost_trivial_brace(S3), 2)


def test_fixed_sylow_orbits_on_corpus(acceptance_corpus):
    applicable = 0
    for _, _, B in acceptance_corpus:
        g = len(B.gamma_image)
        for q in primefactors(B.order):
            if p_part(g, q) != g:
                continue
            applicable += 1
            orbits = gamma_orbits_on_sylows(B, q)
            assert all(p_part(len(o), q) == len(o) for o in orbits)
            fixed = [o[0] for o in orbits if len(o) == 1]
            assert fixed and fixed_sylow_under_gamma(B, q) == fixed[0]
    assert applicable > 100


# -- Curran decomposition ---------------------------------------------------

def test_curran_identity(S3):
    Q, M, _ = s3_parts(S3)
    dec = curran_decompose(S3, Q, M, identity_perm(6))
    assert all(dec.d[k] == k for k in Q)
    assert all(dec.a[h] == h for h in M)
    assert all(dec.b[k] == 0 for k in Q)


def test_curran_inner_by_m(S3):
    Q, M, t = s3_parts(S3)
    for m in M:
        dec = curran_decompose(S3, Q, M, inner_automorphism(S3, m))
        assert all(dec.d[k] == k for k in Q) and all(dec.a[h] == h for h in M)
        assert all(dec.b[k] == S3.commutator(k, m) for k in Q)


def test_curran_s3_commutator(S3):
    Q, M, t = s3_parts(S3)
    c = M[1]
    dec = curran_decompose(S3, Q, M, inner_automorphism(S3, c))
    expected = S3.product(S3.inv[t], S3.inv[c], t, c)
    assert dec.b[t] == expected and S3.element_orders[expected] == 3
    assert recompose(S3, Q, M, dec) == inner_automorphism(S3, c)


def test_curran_errors(S3):
    Q, M, t = s3_parts(S3)
    with pytest.raises(errors.NotInternalSemidirect):
        curran_decompose(S3, M, Q, identity_perm(6))
    with pytest.raises(errors.NotInternalSemidirect):
        curran_decompose(S3, (0,), M, identity_perm(6))
    Z6 = cyclic_group(6)
    swap = tuple((5 * x) % 6 for x in range(6))
    curran_decompose(Z6, (0, 3), (0, 2, 4), swap)
    bad = (0, 2, 1, 3, 4, 5)
    with pytest.raises(ValueError):
        curran_decompose(Z6, (0, 3), (0, 2, 4), bad)


def test_theta_must_preserve_m():
    V = small_group("Z2xZ2")
    Q, M = (0, 1), (0, 2)
    theta = next(f for f in automorphism_group(V) if f[2] != 2)
    with pytest.raises(errors.ThetaDoesNotPreserveM):
        curran_decompose(V, Q, M, theta)


@pytest.mark.parametrize("name", ["S3", "F21", "D5", "D7", "Dic12", "D6"])
def test_curran_all_automorphisms(name):
    G = small_group(name)
    count = 0
    for M in subgroups(G):
        if len(M) == 1 or len(M) == G.order or not is_characteristic(G, M):
            continue
        if any(G.mul(x, y) != G.mul(y, x) for x in M for y in M):
            continue
        for Q in complements(G, M):
            for theta in automorphism_group(G):
                dec = curran_decompose(G, Q, M, theta)
                assert recompose(G, Q, M, dec) == theta
                count += 1
    assert count > 0


# -- cocycles ---------------------------------------------------------------

def test_cocycle_zero(S3):
    Q, M, _ = s3_parts(S3)
    assert solve_cocycle(S3, Q, M, {k: 0 for k in Q}) == 0


def test_cocycle_round_trip(S3):
    Q, M, t = s3_parts(S3)
    for m0 in M:
        assert solve_cocycle(S3, Q, M, coboundary(S3, Q, m0)) == m0


def test_cocycle_s3_example(S3):
    Q, M, t = s3_parts(S3)
    c = M[1]
    b = {0: 0, t: S3.commutator(t, c)}
    assert solve_cocycle(S3, Q, M, b) == c


def test_not_a_cocycle(S3):
    Q, M, t = s3_parts(S3)
    with pytest.raises(errors.NotACocycle) as exc:
        solve_cocycle(S3, Q, M, {0: M[1], t: 0})
    assert exc.value.witness is not None


def test_cocycle_hypotheses(S3):
    Q, M, t = s3_parts(S3)
    with pytest.raises(errors.HypothesisFailed):
        solve_cocycle(S3, (0, 1), M, {0: 0, 1: 0})
    Z6 = cyclic_group(6)
    with pytest.raises(errors.HypothesisFailed):
        solve_cocycle(Z6, (0, 2, 4), (0, 2, 4), {0: 0, 2: 0, 4: 0})


def test_every_cocycle_is_a_coboundary_f21():
    G = small_group("F21")
    M = next(S for S in subgroups(G) if len(S) == 7)
    for Q in [S for S in subgroups(G) if len(S) == 3]:
        cobs = {tuple(coboundary(G, Q, m).items()) for m in M}
        assert len(cobs) == 7
        # all maps Q -> M satisfying the cocycle law
        count = 0
        for images in product(M, repeat=len(Q)):
            b = dict(zip(Q, images))
            if is_cocycle(G, Q, M, b) is None:
                count += 1
                m = solve_cocycle(G, Q, M, b)
                assert m is not None and coboundary(G, Q, m) == b
        assert count == 7


# -- duality ----------------------------------------------------------------

def test_duality_trivial_brace(S3):
    _, M, _ = s3_parts(S3)
    assert duality_sigma(trivial_brace(S3), M) == 0


def test_duality_almost_trivial_s3(S3):
    _, M, _ = s3_parts(S3)
    B = almost_trivial_brace(S3)
    res = duality_analysis(B, M)
    assert res.sigma == 1
    assert set(M) <= set(gamma_kernel(opposite(B)))
    for m in M:
        assert B.gamma(m) == inner_automorphism(S3, res.tau[m])


def test_duality_hypotheses(Z6, S3):
    with pytest.raises(errors.HypothesisFailed):
        duality_sigma(trivial_brace(Z6), (0, 3))
    with pytest.raises(errors.HypothesisFailed):
        duality_sigma(trivial_brace(S3), (0, 1, 2, 3, 4, 5))


def duality_instances(corpus):
    for _, _, B in corpus:
        G = B.add
        if G.is_abelian:
            continue
        for M in ideals(B):
            if not isprime(len(M)):
                continue
            if not is_characteristic(G, M) or set(M) & set(G.center) != {0}:
                continue
            if not complements(G, M):
                continue
            yield B, M


def test_duality_corpus(acceptance_corpus):
    seen = {0: 0, 1: 0}
    for B, M in duality_instances(acceptance_corpus):
        sigma = duality_sigma(B, M)
        seen[sigma] += 1
        if sigma == 0:
            assert set(M) <= set(gamma_kernel(B))
        else:
            assert set(M) <= set(gamma_kernel(opposite(B)))
    assert seen[0] > 0 and seen[1] > 0


# -- theorem report ---------------------------------------------------------

def test_verify_theorems_examples(S3, A4):
    assert verify_theorems(trivial_brace(cyclic_group(12))).ok
    rep = verify_theorems(almost_trivial_brace(S3))
    assert rep.ok and rep.supersoluble
    assert any(c.name.startswith("remark") for c in rep.checks)
    rep = verify_theorems(trivial_brace(A4))
    assert not rep.supersoluble
    assert all(c.status == "info" for c in rep.checks)
    assert "not supersoluble" in rep.to_text()
    assert rep.records()["supersoluble"] is False


def test_ideal_helper_agrees(S3):
    B = trivial_brace(S3)
    for N in subgroups(S3):
        assert is_ideal(B, N) == is_normal(S3, N)
