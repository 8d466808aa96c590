import pytest

from fpident.cyclotomic import (
    cyclo_identity_check,
    cyclo_invariant_table,
    cyclo_record,
    cyclotomic,
    divisors,
    euler_phi,
    factorize,
    is_prime,
    radical,
    split_polynomial,
    verify_cyclo_identities,
)
from fpident.invariants import discr_star, prod_star, rres, tcn
from fpident.polycore import IntPoly


def t_power_minus_one(n):
    return IntPoly([-1] + [0] * (n - 1) + [1])


def test_cyclotomic_examples():
    assert cyclotomic(1) == IntPoly([-1, 1])
    assert cyclotomic(6) == IntPoly([1, -1, 1])
    assert cyclotomic(12) == IntPoly([1, 0, -1, 0, 1])
    assert cyclotomic(12) == cyclotomic(6).substitute_power(2)


def test_split_examples():
    assert split_polynomial(2) == IntPoly([1, 1])
    assert split_polynomial(4) == IntPoly([1, 1, 1, 1])
    for p in (2, 3, 5, 7, 11, 13):
        assert split_polynomial(p) == cyclotomic(p)


@pytest.mark.parametrize("n", range(1, 61))
def test_divisor_product(n):
    prod = IntPoly([1])
    for d in divisors(n):
        prod = prod * cyclotomic(d)
    assert prod == t_power_minus_one(n)


@pytest.mark.parametrize("n", range(2, 31))
def test_record_invariants(n):
    rec = cyclo_record(n)
    assert rec.phi_n.degree == rec.euler_phi == euler_phi(n)
    assert rec.psi_n * IntPoly([-1, 1]) == t_power_minus_one(n)
    assert rec.radical == radical(n)


def test_identity_examples():
    c15 = cyclo_identity_check(15)
    assert c15.checks["prime_5_division"] and c15.checks["prime_3_division"]
    assert cyclotomic(15) * cyclotomic(3) == cyclotomic(3).substitute_power(5)
    c6 = cyclo_identity_check(6)
    assert c6.checks["even_sign_flip"]
    assert cyclotomic(6) == cyclotomic(3).negate_variable()
    c4 = cyclo_identity_check(4)
    assert c4.value_at_one == 2
    assert c4.prime_power_reading and not c4.literal_reading


@pytest.mark.parametrize("n", range(2, 31))
def test_identities_hold(n):
    assert verify_cyclo_identities(n)


def test_literal_value_at_one_reading_failures():
    failing = [n for n in range(2, 31) if not cyclo_identity_check(n).literal_reading]
    assert failing == [4, 6, 8, 9, 10, 14, 15, 16, 21, 22, 25, 26, 27, 30]


SQUAREFREE = [n for n in range(2, 31) if all(e == 1 for e in factorize(n).values())]


@pytest.mark.parametrize("n", SQUAREFREE)
def test_rres_of_squarefree_cyclotomic_is_one(n):
    phi = cyclotomic(n)
    for u in range(2, euler_phi(n) + 2):
        assert rres(phi, u) == 1


@pytest.mark.parametrize("n", range(2, 21))
def test_discr_prod_divides_power_of_n(n):
    dp = discr_star(cyclotomic(n)) * prod_star(cyclotomic(n))
    assert dp != 0 and (n ** (n * n)) % dp == 0


def test_invariant_table_examples():
    table = {(e.kind, e.n): e for e in cyclo_invariant_table(15)}
    psi5 = table[("psi", 5)].report
    assert (psi5.discr_star, psi5.prod_star) == (125, 625)
    phi15 = table[("phi", 15)].report
    assert phi15.discr_star * phi15.prod_star == (3 ** 4 * 5 ** 6) * (3 ** 24 * 5 ** 8)
    assert table[("phi", 9)].report.tcn == 0
    assert all(e.ok for e in table.values())


def test_tcn_of_psi_tracks_primality():
    for n in range(2, 31):
        assert (tcn(split_polynomial(n)) == 0) == (not is_prime(n))


def test_table_rejects_small_bounds():
    with pytest.raises(ValueError):
        cyclo_invariant_table(1)
