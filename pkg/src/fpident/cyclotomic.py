"""Cyclotomic polynomials Phi_n, split polynomials Psi_n and their invariant tables."""

from __future__ import annotations

import threading
from dataclasses import dataclass, field

from .invariants import InvariantReport, invariant_report
from .polycore import IntPoly

_cache: dict[int, IntPoly] = {}
_lock = threading.Lock()


def factorize(n: int) -> dict:
    """Prime factorisation of a positive integer by trial division."""
    out = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def radical(n: int) -> int:
    out = 1
    for p in factorize(n):
        out *= p
    return out


def euler_phi(n: int) -> int:
    out = n
    for p in factorize(n):
        out = out // p * (p - 1)
    return out


def divisors(n: int) -> list:
    return [d for d in range(1, n + 1) if n % d == 0]


def is_prime(n: int) -> bool:
    return n >= 2 and factorize(n) == {n: 1}


def cyclotomic(n: int) -> IntPoly:
    """Phi_n by exact division of t^n - 1 by Phi_d for proper divisors d."""
    if n < 1:
        raise ValueError("n must be positive")
    got = _cache.get(n)
    if got is not None:
        return got
    p = IntPoly([-1] + [0] * (n - 1) + [1])
    for d in divisors(n)[:-1]:
        p = p.exact_div(cyclotomic(d))
    with _lock:
        _cache.setdefault(n, p)
    return p


def split_polynomial(n: int) -> IntPoly:
    """Psi_n = 1 + t + ... + t^(n-1)."""
    if n < 2:
        raise ValueError("n must be at least 2")
    return IntPoly([1] * n)


@dataclass(frozen=True)
class CycloRecord:
    n: int
    radical: int
    phi_n: IntPoly
    psi_n: IntPoly | None
    euler_phi: int


def cyclo_record(n: int) -> CycloRecord:
    return CycloRecord(n, radical(n), cyclotomic(n), split_polynomial(n) if n >= 2 else None,
                       euler_phi(n))


@dataclass
class CycloIdentityCheck:
    """Outcome of the structural identity checks for one n."""

    n: int
    checks: dict = field(default_factory=dict)
    value_at_one: int = 0
    literal_reading: bool = False
    prime_power_reading: bool = False

    @property
    def ok(self) -> bool:
        return all(self.checks.values())


def cyclo_identity_check(n: int) -> CycloIdentityCheck:
    """Check the standard identities for Phi_n, recording each one separately."""
    if n < 2:
        raise ValueError("n must be at least 2")
    out = CycloIdentityCheck(n)
    phi = cyclotomic(n)
    m = radical(n)
    facs = factorize(n)
    out.checks["degree"] = phi.degree == euler_phi(n)
    prod = IntPoly([1])
    for d in divisors(n):
        prod = prod * cyclotomic(d)
    out.checks["divisor_product"] = prod == IntPoly([-1] + [0] * (n - 1) + [1])
    out.checks["radical_substitution"] = phi == cyclotomic(m).substitute_power(n // m)
    for p, e in facs.items():
        if e == 1:
            rest = n // p
            lhs = phi * cyclotomic(rest)
            out.checks[f"prime_{p}_division"] = lhs == cyclotomic(rest).substitute_power(p)
    if n % 2 == 0 and (n // 2) % 2 == 1 and n // 2 > 1:
        out.checks["even_sign_flip"] = phi == cyclotomic(n // 2).negate_variable()
    value = phi(1)
    out.value_at_one = value
    out.checks["value_at_one_in_{1,m}"] = value in (1, m)
    out.literal_reading = value == (m if n == m else 1)
    expected = next(iter(facs)) if len(facs) == 1 else 1
    out.prime_power_reading = value == expected
    out.checks["value_at_one_prime_power"] = out.prime_power_reading
    return out


def verify_cyclo_identities(n: int) -> bool:
    return cyclo_identity_check(n).ok


# ---------------------------------------------------------------------------


@dataclass
class CycloTableEntry:
    kind: str  # "phi" or "psi"
    n: int
    report: InvariantReport
    expectations: dict
    mismatches: list

    @property
    def ok(self) -> bool:
        return not self.mismatches


def _entry(kind: str, n: int, poly: IntPoly) -> CycloTableEntry:
    rep = invariant_report(poly)
    exp = {}
    if kind == "phi":
        squarefree = all(e == 1 for e in factorize(n).values()) if n > 1 else True
        exp["tcn"] = 1 if squarefree else 0
        if n > 1:
            dp = rep.discr_star * rep.prod_star
            exp["discr_prod_divides_power_of_n"] = True
            ok = dp != 0
            rest = abs(dp)
            for p in factorize(n):
                while rest % p == 0 and rest:
                    rest //= p
            got = {"tcn": rep.tcn, "discr_prod_divides_power_of_n": ok and rest == 1}
        else:
            got = {"tcn": rep.tcn}
    else:
        exp["tcn_zero"] = not is_prime(n)
        exp["discr_star"] = n ** (n - 2)
        exp["prod_star"] = n ** (n - 1)
        got = {"tcn_zero": rep.tcn == 0, "discr_star": rep.discr_star,
               "prod_star": rep.prod_star}
    mismatches = [(k, exp[k], got[k]) for k in exp if exp[k] != got[k]]
    return CycloTableEntry(kind, n, rep, exp, mismatches)


def cyclo_invariant_table(N: int, kinds=("phi", "psi")) -> list:
    """Invariant reports for Phi_n (1 <= n <= N) and Psi_n (2 <= n <= N) with closed-form checks."""
    if N < 2:
        raise ValueError("N must be at least 2")
    out = []
    for n in range(1, N + 1):
        if "phi" in kinds:
            out.append(_entry("phi", n, cyclotomic(n)))
        if "psi" in kinds and n >= 2:
            out.append(_entry("psi", n, split_polynomial(n)))
    return out
