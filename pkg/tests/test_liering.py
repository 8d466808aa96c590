from functools import lru_cache

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from fpident.errors import (
    ClassTooHigh,
    DimensionCap,
    DoesNotSplit,
    EvenModulus,
    HypothesisViolated,
    IdentityFails,
    JacobiFails,
    NotPGroup,
    SupportNotAF,
)
from fpident.groups import (
    SubnormalSeriesSpec,
    abelian,
    char_poly_identity,
    cyclic,
    heisenberg,
    is_fixpoint_free,
    matrix_map,
    nilpotency_class,
    symmetric,
    twisted_golden,
    twisted_heisenberg,
)
from fpident.invariants import discr_star, prod_star
from fpident.liering import (
    CyclicProduct,
    FormalSupport,
    FreeAbelian,
    GradedLieRing,
    LieEndo,
    LieRing,
    Units,
    abelian_lie_ring,
    af_subset_check,
    annihilation_exponent,
    associated_graded_lie_ring,
    bch_automorphism,
    bch_group,
    binomial_commutator_check,
    class_lie,
    derived_length,
    eigenspace_grading,
    escape_check,
    extend_endomorphism,
    free_nilpotent,
    free_nilpotent_dimension,
    free_quotient,
    golden_lie_ring,
    graded_class_bound_check,
    growth_or_progression_check,
    heisenberg_lie_ring,
    ideal_generated_by,
    identity_endo,
    lie_evaluate,
    malcev_charpoly_check,
    partial_products,
    quotient,
    root_condition_length,
    verify_lie_class_bound,
    witt_dimension,
)
from fpident.polycore import IntPoly

from oracles import commutator_expansion, lyndon_count, mat_mul
from liecorpus import af_eigen_corpus, binomial_instances, binomial_sides, eigen_corpus
from sweeps import escape_sweep, growth_sweep

GOLDEN = IntPoly([-1, -2, 0, 1])
GOLDEN_MATRIX = [[0, 1], [1, 1]]


def _brute_jacobi(L):
    n = L.rank
    for i in range(n):
        ei = L.basis(i)
        assert not any(L.bracket(ei, ei))
        for j in range(n):
            ej = L.basis(j)
            assert L.add(L.bracket(ei, ej), L.bracket(ej, ei)) == L.zero()
            for k in range(n):
                ek = L.basis(k)
                s = L.add(L.add(L.bracket(L.bracket(ei, ej), ek), L.bracket(L.bracket(ej, ek), ei)),
                          L.bracket(L.bracket(ek, ei), ej))
                assert not any(s)


# -- free nilpotent construction ----------------------------------------------


@pytest.mark.parametrize("g", [1, 2, 3, 4])
@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_witt_dimension_counts_lyndon_words(g, n):
    assert witt_dimension(g, n) == lyndon_count(g, n)


@pytest.mark.parametrize("g", [1, 2, 3, 4])
@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_free_nilpotent_dimension_matches_witt(g, k):
    F, h = free_nilpotent(g, k)
    assert F.rank == free_nilpotent_dimension(g, k) == sum(lyndon_count(g, n) for n in range(1, k + 1))
    assert h.degree_counts() == {n: lyndon_count(g, n) for n in range(1, k + 1) if lyndon_count(g, n)}


def test_free_nilpotent_examples():
    F, h = free_nilpotent(2, 2)
    assert F.rank == 3 and h.elements == (0, 1, (0, 1))
    assert F.basis_bracket(0, 1) == F.basis(2)
    assert free_nilpotent(2, 3)[0].rank == 5
    assert free_nilpotent(4, 2)[0].rank == 10


def test_free_nilpotent_dimension_cap():
    with pytest.raises(DimensionCap):
        free_nilpotent(5, 4)
    with pytest.raises(DimensionCap):
        free_nilpotent(3, 4, cap=20)


@pytest.mark.parametrize("g, k", [(2, 2), (2, 3), (2, 4), (3, 2), (3, 3)])
def test_free_nilpotent_brackets_match_associative_commutators(g, k):
    # [b_a, b_b] expands to the commutator of the word expansions, or vanishes above k
    F, h = free_nilpotent(g, k)
    exp = commutator_expansion(h.elements)
    for a in range(F.rank):
        for b in range(F.rank):
            want = {}
            for u, x in exp[a].items():
                for v, y in exp[b].items():
                    want[u + v] = want.get(u + v, 0) + x * y
                    want[v + u] = want.get(v + u, 0) - x * y
            want = {w: c for w, c in want.items() if c and len(w) <= k}
            got = {}
            for t, c in enumerate(F.basis_bracket(a, b)):
                for w, x in exp[t].items():
                    got[w] = got.get(w, 0) + c * x
            assert {w: c for w, c in got.items() if c} == want


@pytest.mark.parametrize("g, k", [(2, 3), (3, 2), (2, 4)])
def test_free_nilpotent_satisfies_jacobi(g, k):
    _brute_jacobi(free_nilpotent(g, k)[0])


def test_construction_rejects_jacobi_failures():
    with pytest.raises(JacobiFails):
        LieRing(3, "Q", {(0, 1): {2: 1}, (1, 2): {0: 1}, (0, 2): {0: 1}})


@pytest.mark.parametrize("make", [heisenberg_lie_ring, lambda: golden_lie_ring("Zmod:5")[0],
                                  lambda: abelian_lie_ring(3, "Zmod:4")])
def test_small_rings_satisfy_jacobi(make):
    _brute_jacobi(make())


def test_free_nilpotent_class_is_k():
    for g, k in [(2, 2), (2, 3), (3, 3), (2, 4)]:
        assert class_lie(free_nilpotent(g, k)[0]) == k


# -- endomorphisms ---------------------------------------------------------------


def test_golden_extension_negates_the_bracket():
    F, _ = free_nilpotent(2, 2)
    alpha = extend_endomorphism(F, GOLDEN_MATRIX)
    assert alpha(F.basis(2)) == F.scale(-1, F.basis(2))
    assert alpha(F.basis(0)) == F.basis(1)
    assert alpha(F.basis(1)) == F.add(F.basis(0), F.basis(1))


def test_identity_and_scalar_extensions():
    F, _ = free_nilpotent(2, 2)
    assert extend_endomorphism(F, [[1, 0], [0, 1]]).is_identity()
    for c in (2, -3, 5):
        alpha = extend_endomorphism(F, [[c, 0], [0, c]])
        assert alpha(F.basis(2)) == F.scale(c * c, F.basis(2))


@given(st.lists(st.integers(-3, 3), min_size=4, max_size=4))
@settings(max_examples=25)
def test_extension_preserves_brackets(entries):
    F, _ = free_nilpotent(2, 3)
    alpha = extend_endomorphism(F, [entries[:2], entries[2:]])
    for i in range(F.rank):
        for j in range(F.rank):
            assert alpha(F.basis_bracket(i, j)) == F.bracket(alpha(F.basis(i)), alpha(F.basis(j)))


def test_lie_evaluate_examples():
    L = heisenberg_lie_ring()
    assert lie_evaluate(IntPoly([-1, 1]), identity_endo(L)).is_zero()
    L, gamma = golden_lie_ring("Q")
    assert lie_evaluate(GOLDEN, gamma).is_zero()
    assert not lie_evaluate(IntPoly([-1, -1, 1]), gamma).is_zero()


@given(st.lists(st.integers(-4, 4), min_size=9, max_size=9))
@settings(max_examples=25)
def test_char_poly_annihilates_abelian_endomorphisms(entries):
    mat = [entries[0:3], entries[3:6], entries[6:9]]
    L = abelian_lie_ring(3)
    chi = sympy.Matrix(mat).charpoly().all_coeffs()[::-1]
    assert lie_evaluate(IntPoly([int(c) for c in chi]), LieEndo(L, mat)).is_zero()


def test_lie_evaluate_matches_matrix_powers():
    L, gamma = golden_lie_ring("Q")
    m = [[int(x) for x in row] for row in gamma.matrix]
    r = IntPoly([3, -1, 2, 5])
    want = [[0] * 3 for _ in range(3)]
    power = [[int(i == j) for j in range(3)] for i in range(3)]
    for c in r.coeffs:
        want = [[want[i][j] + c * power[i][j] for j in range(3)] for i in range(3)]
        power = mat_mul(power, m)
    assert [[int(x) for x in row] for row in lie_evaluate(r, gamma).matrix] == want


# -- ideals, quotients, series ----------------------------------------------------


def test_golden_free_quotient_has_zero_ideal():
    fq = free_quotient(GOLDEN, 2, matrix=GOLDEN_MATRIX)
    assert fq.ideal_dimension == 0
    assert fq.quotient.rank == 3 and fq.class_ == 2
    assert lie_evaluate(GOLDEN, fq.endo).is_zero()


def test_golden_free_quotient_at_k_3():
    fq = free_quotient(GOLDEN, 3, matrix=GOLDEN_MATRIX)
    assert fq.free.rank == 5
    assert fq.ideal_dimension == 2 and fq.quotient.rank == 3
    # the certified root condition only reaches length 2, which is what the class attains
    assert root_condition_length(GOLDEN, [-1, -1, 1], [0, 1], [1, -1]) == 2
    assert fq.class_ == 2


def test_root_condition_length_in_the_golden_field():
    # lambda = x, mu = 1 - x in Q[x]/(x^2 - x - 1): lambda mu = -1 is a root of t^3 - 2t - 1
    assert root_condition_length(GOLDEN, [-1, -1, 1], [0, 1], [1, -1]) == 2
    assert root_condition_length(GOLDEN, [-1, -1, 1], [2], [0, 1]) == 0


def test_ideal_of_everything_gives_zero_quotient():
    F, _ = free_nilpotent(2, 3)
    ideal = ideal_generated_by(F, [F.basis(0)] + [F.basis(1)])
    assert ideal.rank == F.rank
    Q, _ = quotient(F, ideal)
    assert Q.rank == 0


def test_ideal_closure_is_bracket_closed():
    F, _ = free_nilpotent(2, 3)
    ideal = ideal_generated_by(F, [F.basis(2)])
    assert ideal.rank == 3
    for v in ideal.generators():
        for i in range(F.rank):
            assert ideal.contains(F.bracket(v, F.basis(i)))


def test_series_examples():
    H = heisenberg_lie_ring()
    assert class_lie(H) == 2 and derived_length(H) == 2
    assert class_lie(abelian_lie_ring(4)) == 1
    assert class_lie(free_nilpotent(2, 3)[0]) == 3


# -- arithmetic freeness, growth and escape ----------------------------------------


def _brute_af(op, X):
    X = set(X)
    for lam in X:
        for mu in X:
            cur, prog = lam, True
            for _ in range(len(X)):
                cur = op(cur, mu)
                if cur not in X:
                    prog = False
                    break
            if prog:
                return False
    return True


def test_af_examples():
    assert af_subset_check(Units(5), [1]) == (False, (1, 1))
    assert af_subset_check(Units(5), [2])[0]
    assert af_subset_check(Units(7), [2, 4])[0]
    assert af_subset_check(FreeAbelian(2), [(1, 0), (0, 1), (1, 1)])[0]
    # every unit mod 8 squares to 1, so lambda, lambda mu, lambda mu^2 = lambda closes up
    assert not af_subset_check(Units(8), [3, 5, 7])[0]


@given(st.sampled_from([7, 8, 11, 13, 15, 21]), st.data())
@settings(max_examples=80)
def test_af_matches_brute_force(n, data):
    U = Units(n)
    X = data.draw(st.lists(st.sampled_from(U.elements()), min_size=1, max_size=4, unique=True))
    af, witness = af_subset_check(U, X)
    assert af == _brute_af(U.op, X)
    if not af:
        lam, mu = witness
        cur = lam
        for _ in range(len(X)):
            cur = U.op(cur, mu)
            assert cur in X


def test_partial_products_examples():
    G = CyclicProduct((6,))
    assert partial_products(G, [(1,), (2,)]) == {(0,), (1,), (2,), (3,)}
    assert partial_products(G, [(3,), (3,)]) == {(0,), (3,)}


def test_growth_or_progression_examples():
    G = CyclicProduct((6,))
    assert growth_or_progression_check(G, [(1,), (2,)]) == (True, "growth")
    assert growth_or_progression_check(G, [(3,), (3,)]) == (True, "progression")
    with pytest.raises(ValueError):
        growth_or_progression_check(G, [(0,)])


def test_escape_examples():
    G = CyclicProduct((7,))
    X = [(1,), (2,)]
    perm, k = escape_check(G, X, (1,), [(1,), (2,)])
    cur = (1,)
    bs = [(1,), (2,)]
    for i in range(k):
        cur = G.op(cur, bs[perm[i]])
    assert cur not in X


def test_growth_or_progression_exhaustive():
    counts, bad = growth_sweep()
    assert not bad
    assert set(counts) == {1, 2, 3, 4, 5} and all(counts.values())


def test_escape_exhaustive():
    count, bad = escape_sweep()
    assert count > 0 and not bad


# -- graded rings and class bounds ------------------------------------------------


def test_golden_labels_in_free_abelian_support():
    K = GradedLieRing(heisenberg_lie_ring(), [(1, 0), (0, 1), (1, 1)], FreeAbelian(2))
    v = graded_class_bound_check(K)
    assert v.passed and v.class_ == 2 and v.class_bound == 3 ** 8
    assert v.derived_length == 2 and v.derived_bound == 8


def test_golden_labels_in_formal_support():
    X = FormalSupport(["a", "b", "ab"], {("a", "b"): "ab"})
    K = GradedLieRing(heisenberg_lie_ring(), ["a", "b", "ab"], X)
    v = graded_class_bound_check(K)
    assert v.passed and v.class_ == 2 and v.class_bound == 6561


def test_units_mod_8_support_is_not_af():
    with pytest.raises(SupportNotAF):
        graded_class_bound_check(GradedLieRing(heisenberg_lie_ring(), [3, 5, 7], Units(8)))


def test_one_dimensional_bound():
    v = graded_class_bound_check(GradedLieRing(abelian_lie_ring(1), [(1,)], FreeAbelian(1)))
    assert v.passed and v.class_ == 1 and v.class_bound == 1 and v.derived_bound == 2


def test_grading_is_checked():
    with pytest.raises(IdentityFails):
        GradedLieRing(heisenberg_lie_ring(), [(1, 0), (0, 1), (1, 0)], FreeAbelian(2))


# -- eigenspace gradings ------------------------------------------------------------


def test_golden_mod_11_eigenspaces():
    L, gamma = golden_lie_ring("Zmod:11")
    eg = eigenspace_grading(L, gamma, GOLDEN)
    assert eg.dims == {4: 1, 8: 1, 10: 1}
    assert sorted(eg.roots) == [4, 8, 10]
    assert eg.strong and eg.weak and eg.zero_brackets_forced
    assert 4 * 8 % 11 == 10


def test_eigenspace_scalar_and_abelian():
    L = abelian_lie_ring(3, "Zmod:7")
    scalar = LieEndo(L, [[3, 0, 0], [0, 3, 0], [0, 0, 3]])
    eg = eigenspace_grading(L, scalar, IntPoly([-3, 1]))
    assert eg.dims == {3: 3}
    eg = eigenspace_grading(L, LieEndo(L, [[1, 0, 0], [0, 2, 0], [0, 0, 2]]),
                            IntPoly([-1, 1]) * IntPoly([-2, 1]))
    assert eg.dims == {1: 1, 2: 2}


def test_eigenspace_errors():
    L, gamma = golden_lie_ring("Zmod:7")
    with pytest.raises(DoesNotSplit):
        eigenspace_grading(L, gamma, GOLDEN)
    L, gamma = golden_lie_ring("Zmod:11")
    with pytest.raises(IdentityFails):
        eigenspace_grading(L, gamma, IntPoly([-4, 1]) * IntPoly([-8, 1]))


def _power_kills(L, gamma, lam, v, p):
    n = L.rank
    for _ in range(n):
        v = L.sub(gamma(v), L.scale(lam, v))
    return not any(x % p for x in v)


def test_eigenspace_grading_holds_on_corpus():
    for L, gamma, r, p in eigen_corpus():
        eg = eigenspace_grading(L, gamma, r)
        cols, labels = eg.change_of_basis, eg.graded.labels
        assert sum(eg.dims.values()) == L.rank
        for c, lam in zip(cols, labels):
            assert _power_kills(L, gamma, lam, c, p)
        # [E_lam, E_mu] lies in the generalised eigenspace of lam mu, in the original basis
        for a in range(L.rank):
            for b in range(L.rank):
                br = L.bracket(cols[a], cols[b])
                assert _power_kills(L, gamma, labels[a] * labels[b] % p, br, p)
        assert eg.strong == ((r.lc * discr_star(r) * prod_star(r)) % p != 0)
        assert eg.weak == (prod_star(r) % p != 0)


def test_graded_bounds_on_af_corpus_instances():
    checked = 0
    for L, gamma, r, p in eigen_corpus() + af_eigen_corpus():
        K = eigenspace_grading(L, gamma, r).graded
        if not af_subset_check(K.group, K.support)[0]:
            with pytest.raises(SupportNotAF):
                graded_class_bound_check(K)
            continue
        v = graded_class_bound_check(K)
        assert v.passed and v.derived_length <= 2 ** len(K.support)
        checked += 1
    assert checked >= 25


def test_annihilation_corollary_on_eigenspaces():
    for L, gamma, r, p in eigen_corpus():
        eg = eigenspace_grading(L, gamma, r)
        cols, labels = eg.change_of_basis, eg.graded.labels
        for a in range(L.rank):
            ma = annihilation_exponent(gamma, labels[a], cols[a])
            for b in range(L.rank):
                mb = annihilation_exponent(gamma, labels[b], cols[b])
                br = L.bracket(cols[a], cols[b])
                lam_mu = labels[a] * labels[b] % p
                for _ in range(ma + mb):
                    br = L.sub(gamma(br), L.scale(lam_mu, br))
                assert not any(br)


# -- binomial commutator formula -------------------------------------------------------


def test_binomial_formula_on_random_instances():
    for F, gamma, lam, mu, v, w, m in binomial_instances():
        v, w = F.ring.vec(v), F.ring.vec(w)
        assert binomial_commutator_check(F, gamma, lam, mu, v, w, m)
        lhs, rhs = binomial_sides(F, gamma, lam, mu, v, w, m)
        assert lhs == rhs


def test_binomial_m_zero_is_the_bracket():
    L, gamma = golden_lie_ring("Q")
    v, w = L.basis(0), L.basis(1)
    lhs, rhs = binomial_sides(L, gamma, 5, 7, v, w, 0)
    assert lhs == rhs == L.bracket(v, w)
    assert binomial_commutator_check(L, gamma, 5, 7, v, w, 0)


def test_binomial_needs_endomorphism():
    # the identity relies on gamma preserving brackets; a linear non-endomorphism breaks it
    L = heisenberg_lie_ring()
    bad = LieEndo(L, [[2, 0, 0], [0, 1, 0], [0, 0, 1]], check=False)
    assert not binomial_commutator_check(L, bad, 1, 1, L.basis(0), L.basis(1), 1)


def test_binomial_m_is_capped():
    L, gamma = golden_lie_ring("Q")
    with pytest.raises(ValueError):
        binomial_commutator_check(L, gamma, 1, 1, L.basis(0), L.basis(1), 9)


# -- associated graded rings -------------------------------------------------------------


@pytest.mark.parametrize("p", [2, 3, 5])
def test_heisenberg_associated_graded(p):
    ag = associated_graded_lie_ring(heisenberg(p))
    L = ag.ring
    assert L.rank == 3 and ag.degrees == [1, 1, 2] and ag.exponent == p
    consts = L.structure_constants()
    assert list(consts) == [(0, 1)]
    vec = consts[(0, 1)]
    assert vec[0] == vec[1] == 0 and vec[2] % p != 0
    assert class_lie(L) == 2


def test_abelian_associated_graded_keeps_the_matrix():
    g = abelian((5, 5))
    mat = [[1, 2], [3, 4]]
    ag = associated_graded_lie_ring(g, matrix_map(g, mat))
    assert ag.ring.is_abelian()
    assert [list(row) for row in ag.endo.matrix] == mat


def test_twisted_associated_graded_is_annihilated():
    g = twisted_heisenberg(5)
    beta = twisted_golden(g)
    _, deco = char_poly_identity(g, SubnormalSeriesSpec.lower_central_refined(g), beta)
    ag = associated_graded_lie_ring(g, beta, deco)
    assert ag.annihilated_by(GOLDEN)
    assert not ag.annihilated_by(IntPoly([-1, -1, 1]))


def test_associated_graded_needs_a_p_group():
    with pytest.raises(NotPGroup):
        associated_graded_lie_ring(cyclic(6))
    with pytest.raises(NotPGroup):
        associated_graded_lie_ring(symmetric(3))


# -- BCH groups ----------------------------------------------------------------------------


@lru_cache(maxsize=None)
def golden_bch():
    L, gamma = golden_lie_ring("Zmod:5")
    G = bch_group(L)
    return L, gamma, G, bch_automorphism(G, gamma)


def test_golden_bch_group():
    L, gamma, G, beta = golden_bch()
    assert G.order == 125 and nilpotency_class(G) == 2
    assert beta.is_automorphism and is_fixpoint_free(G, beta)


def test_golden_bch_is_twisted_heisenberg():
    # (x, y, z) -> (x, y, z - x y) carries the twisted product to the BCH product
    L, gamma, G, beta = golden_bch()
    N = twisted_heisenberg(5)
    nb = twisted_golden(N)

    def phi(v):
        x, y, z = v
        return (x, y, (z - x * y) % 5)

    for a in N.elements:
        for b in N.elements[::7]:
            ab = N.elements[N.mul(N.idx(a), N.idx(b))]
            assert phi(ab) == G.elements[G.mul(G.idx(phi(a)), G.idx(phi(b)))]
        assert phi(nb(a)) == beta(phi(a))


def test_abelian_bch_is_the_direct_product():
    G = bch_group(abelian_lie_ring(2, "Zmod:3"))
    A = abelian((3, 3))
    assert all(G.elements[G.mul(G.idx(a), G.idx(b))] == A.elements[A.mul(A.idx(a), A.idx(b))]
               for a in A.elements for b in A.elements)


def test_bch_errors():
    with pytest.raises(ClassTooHigh):
        bch_group(free_nilpotent(2, 3, "Zmod:5")[0])
    with pytest.raises(EvenModulus):
        bch_group(heisenberg_lie_ring("Zmod:4"))


def test_bch_map_must_be_a_homomorphism():
    L, _, G, _ = golden_bch()
    bad = LieEndo(L, [[2, 0, 0], [0, 1, 0], [0, 0, 1]], check=False)
    with pytest.raises(ValueError):
        bch_automorphism(G, bad)


# -- characteristic polynomials and the Lie class bound ---------------------------------


def test_malcev_golden():
    L, gamma = golden_lie_ring("Q")
    v = malcev_charpoly_check(L, gamma, [GOLDEN])
    assert v.passed and v.chi == IntPoly([-1, -1, 1]) * IntPoly([1, 1])
    assert v.exponent == 1


def test_malcev_identity_on_free_nilpotent():
    F, _ = free_nilpotent(2, 2)
    v = malcev_charpoly_check(F, identity_endo(F), [IntPoly([-1, 1])])
    assert v.passed and v.chi == IntPoly([-1, 1]) ** 3 and v.exponent == 3


@given(st.lists(st.integers(-3, 3), min_size=9, max_size=9))
@settings(max_examples=20)
def test_malcev_abelian_random(entries):
    mat = [entries[0:3], entries[3:6], entries[6:9]]
    L = abelian_lie_ring(3)
    chi = IntPoly([int(c) for c in sympy.Matrix(mat).charpoly().all_coeffs()[::-1]])
    v = malcev_charpoly_check(L, LieEndo(L, mat), [chi])
    assert v.passed and v.chi == chi and v.exponent == 1


def test_malcev_needs_rational_nilpotent_rings():
    L, gamma = golden_lie_ring("Zmod:5")
    with pytest.raises(HypothesisViolated):
        malcev_charpoly_check(L, gamma, [GOLDEN])


def test_lie_class_bound_golden():
    L, gamma = golden_lie_ring("Q")
    v = verify_lie_class_bound(gamma, GOLDEN)
    assert v.passed and v.details["class"] == 2 and v.details["bound"] == 6561


def test_lie_class_bound_hypotheses():
    L, gamma = golden_lie_ring("Q")
    with pytest.raises(IdentityFails):
        verify_lie_class_bound(gamma, IntPoly([-1, -1, 1]))
    L5, g5 = golden_lie_ring("Zmod:5")
    # Discr* Prod* = -3200 is divisible by 5, so (L, +) has the excluded torsion
    with pytest.raises(HypothesisViolated):
        verify_lie_class_bound(g5, GOLDEN)
    with pytest.raises(HypothesisViolated):
        verify_lie_class_bound(identity_endo(heisenberg_lie_ring()), IntPoly([-1, 1]) ** 2)


def test_lie_class_bound_on_free_quotients():
    for k in (2, 3):
        fq = free_quotient(GOLDEN, k, matrix=GOLDEN_MATRIX)
        v = verify_lie_class_bound(fq.endo, GOLDEN)
        assert v.passed and v.details["class"] <= 6561


def test_lie_ring_json_round_trip():
    F, _ = free_nilpotent(2, 3)
    G = LieRing.from_json(F.to_json())
    assert G.rank == F.rank and G.structure_constants() == F.structure_constants()
    L = golden_lie_ring("Zmod:5")[0]
    assert LieRing.from_json(L.to_json()).structure_constants() == L.structure_constants()

