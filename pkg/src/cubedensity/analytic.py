"""Zeta and Dirichlet L-values on the real axis, Euler products over primes in
arithmetic progressions, and the asymptotic constants built from them.

Every value that comes from an infinite product carries a ``tail_bound``: an
upper estimate of the absolute error committed by stopping the product.
"""
from __future__ import annotations

import cmath
import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Optional, Union

import numpy as np

from .arith import CongruenceSelector, euler_totient, factorize, is_prime
from .primes import primes_upto
from .sieve import CountTable, degenerate_asymptotic

EPS = 2.0**-52
DEFAULT_PRIME_LIMIT = 10**7

# Bernoulli numbers B_2 .. B_20
_BERNOULLI = [Fraction(1, 6), Fraction(-1, 30), Fraction(1, 42), Fraction(-1, 30),
              Fraction(5, 66), Fraction(-691, 2730), Fraction(7, 6), Fraction(-3617, 510),
              Fraction(43867, 798), Fraction(-174611, 330)]
_EM_COEFFS = [float(b) / math.factorial(2 * k + 2) for k, b in enumerate(_BERNOULLI)]
_EM_TERMS = 20

# Lanczos approximation, g = 7, n = 9
_LANCZOS_G = 7
_LANCZOS = (0.99999999999980993, 676.5203681218851, -1259.1392167224028,
            771.32342877765313, -176.61502916214059, 12.507343278686905,
            -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7)


class EstimationError(ArithmeticError):
    """Extrapolation did not reach its accuracy target."""

    def __init__(self, message, best, error):
        super().__init__(f"{message} (best={best!r}, error={error!r})")
        self.best = best
        self.error = error


@dataclass(frozen=True)
class EulerProductResult:
    value: float
    method: str  # truncated | accelerated | closed_form | extrapolated
    tail_bound: float
    prime_limit: Optional[int] = None
    tolerance: Optional[float] = None

    def to_json(self, name: str) -> dict:
        return {
            "name": name,
            "value": self.value,
            "method": self.method,
            "tolerance_or_prime_limit": self.prime_limit if self.prime_limit is not None else self.tolerance,
            "tail_bound": self.tail_bound,
        }


@dataclass(frozen=True)
class AsymptoticLaw:
    """Counting law a1/Gamma(rho) * x * (log x)^(rho-1)."""

    rho: float
    a1: float
    description: str = ""

    def __post_init__(self):
        if self.rho <= 0 and float(self.rho).is_integer():
            raise ValueError("rho must not be a non-positive integer")
        if self.a1 <= 0:
            raise ValueError("a1 must be positive")


# ---------------------------------------------------------------- special functions

def gamma(x: float) -> float:
    """Gamma function by Lanczos' approximation (relative error ~1e-15)."""
    if x < 0.5:
        return math.pi / (math.sin(math.pi * x) * gamma(1.0 - x))
    x -= 1.0
    acc = _LANCZOS[0]
    for i, c in enumerate(_LANCZOS[1:], start=1):
        acc += c / (x + i)
    t = x + _LANCZOS_G + 0.5
    return math.sqrt(2 * math.pi) * t ** (x + 0.5) * math.exp(-t) * acc


def hurwitz_zeta(s: float, q: float, regularized: bool = False) -> float:
    """Hurwitz zeta(s, q) for real s >= 1, q > 0, by Euler-Maclaurin summation.

    With ``regularized`` the polar part 1/(s-1) is removed, which makes s = 1
    admissible (the value there is -digamma(q)).
    """
    if q <= 0:
        raise ValueError("q must be positive")
    if s < 1 or (s == 1 and not regularized):
        raise ValueError(f"hurwitz_zeta needs s > 1, got {s}")
    N = _EM_TERMS
    head = math.fsum((n + q) ** -s for n in range(N))
    a = N + q
    la = math.log(a)
    if s == 1:
        pole = -la
    else:
        pole = math.expm1((1 - s) * la) / (s - 1)
    if not regularized:
        pole += 1.0 / (s - 1)
    corr = 0.0
    rising = s  # s (s+1) ... (s+2k)
    power = a ** (-s - 1)
    for k, c in enumerate(_EM_COEFFS):
        term = c * rising * power
        corr += term
        if abs(term) < 1e-18 * abs(head):
            break
        rising *= (s + 2 * k + 1) * (s + 2 * k + 2)
        power /= a * a
    return head + pole + 0.5 * a**-s + corr


def zeta_real(s: float) -> float:
    """Riemann zeta(s) for real s > 1."""
    if s <= 1:
        raise ValueError(f"zeta_real needs s > 1, got {s}")
    return hurwitz_zeta(s, 1.0)


# ---------------------------------------------------------------- characters

def _primitive_root(q, p):
    phi = q // p * (p - 1)
    qs = factorize(phi).primes
    for g in itertools.count(2):
        if g % p and all(pow(g, phi // r, q) != 1 for r in qs):
            return g


def _unit_generators(m):
    """Generators of (Z/mZ)^x with their orders (a product of cyclic groups)."""
    gens = []
    for p, e in factorize(m).factors:
        q = p**e
        cofactor = m // q
        local = []
        if p == 2:
            if e == 2:
                local = [(3, 2)]
            elif e >= 3:
                local = [(q - 1, 2), (5, 2 ** (e - 2))]
        else:
            local = [(_primitive_root(q, p), q // p * (p - 1))]
        for g, order in local:
            if cofactor == 1:
                gens.append((g % m, order))
            else:
                # CRT lift: g mod q, 1 mod cofactor
                t = (g - 1) * pow(cofactor, -1, q) % q
                gens.append(((1 + cofactor * t) % m, order))
    return gens


@dataclass(frozen=True)
class DirichletCharacter:
    """Character mod m stored as exact angles: chi(r) = exp(2*pi*i*turns[r]/order).

    ``turns[r]`` is None when gcd(r, m) > 1.  ``order`` is phi(m).
    """

    m: int
    turns: tuple
    order: int
    label: tuple = field(default=(), compare=False)

    @property
    def is_principal(self) -> bool:
        return all(t in (None, 0) for t in self.turns)

    @property
    def is_real(self) -> bool:
        return all(t is None or (2 * t) % self.order == 0 for t in self.turns)

    def value(self, n: int) -> complex:
        t = self.turns[n % self.m]
        if t is None:
            return 0j
        return _root_of_unity(t, self.order)

    def __call__(self, n: int) -> complex:
        return self.value(n)

    def table(self) -> np.ndarray:
        """Complex values indexed by residue 0..m-1."""
        return np.array([self.value(r) for r in range(self.m)], dtype=complex)

    def conjugate(self) -> "DirichletCharacter":
        turns = tuple(None if t is None else (-t) % self.order for t in self.turns)
        return DirichletCharacter(self.m, turns, self.order, self.label)


def _root_of_unity(t, order):
    # exact values at the quarter turns keep real characters exactly real
    k4, r4 = divmod(4 * t, order)
    if r4 == 0:
        return (1 + 0j, 1j, -1 + 0j, -1j)[k4 % 4]
    return cmath.exp(2j * math.pi * t / order)


@lru_cache(maxsize=None)
def characters_mod(m: int) -> tuple[DirichletCharacter, ...]:
    """All phi(m) characters mod m; the principal one comes first."""
    if m < 1:
        raise ValueError("modulus must be >= 1")
    phi = euler_totient(m)
    gens = _unit_generators(m)
    logs = {}
    for exps in itertools.product(*(range(o) for _, o in gens)):
        r = 1
        for (g, _), k in zip(gens, exps):
            r = r * pow(g, k, m) % m
        logs[r % m] = exps
    if len(logs) != phi:
        raise AssertionError(f"unit group decomposition failed for m={m}")
    chars = []
    for idx in itertools.product(*(range(o) for _, o in gens)):
        turns = []
        for r in range(m):
            exps = logs.get(r)
            if exps is None:
                turns.append(None)
            else:
                turns.append(sum(j * k * (phi // o) for j, k, (_, o) in zip(idx, exps, gens)) % phi)
        chars.append(DirichletCharacter(m, tuple(turns), phi, idx))
    return tuple(chars)


def chi1() -> DirichletCharacter:
    """The non-principal character mod 3."""
    return characters_mod(3)[1]


def chi4() -> DirichletCharacter:
    """The non-principal character mod 4."""
    return characters_mod(4)[1]


def dirichlet_L(chi: DirichletCharacter, s: float) -> Union[float, complex]:
    """L(chi, s) for real s > 1.

    Non-principal characters go through L = m^-s * sum_r chi(r) zeta(s, r/m)
    with the common pole removed, which is accurate all the way down to s = 1.
    """
    if s <= 1:
        raise ValueError(f"dirichlet_L needs s > 1, got {s}")
    if chi.is_principal:
        val = zeta_real(s)
        for p in factorize(chi.m).primes:
            val *= 1 - p**-s
        return val
    return _nonprincipal_L(chi, s)


def dirichlet_L_at_one(chi: DirichletCharacter) -> Union[float, complex]:
    """L(chi, 1) for a non-principal character (the series converges there)."""
    if chi.is_principal:
        raise ValueError("L(chi0, s) has a pole at s = 1")
    return _nonprincipal_L(chi, 1.0)


def _nonprincipal_L(chi, s):
    m = chi.m
    total = 0j
    for r in range(1, m):
        if chi.turns[r] is not None:
            total += chi.value(r) * hurwitz_zeta(s, r / m, regularized=True)
    total *= m**-s
    return total.real if chi.is_real else total


def L_chi1_exact() -> float:
    """L(chi_1, 1) = pi / (3 sqrt 3)."""
    return math.pi / (3 * math.sqrt(3))


def L_chi1_extrapolated(levels: int = 10, base: int = 256) -> EulerProductResult:
    """sum_{n<N} (1/(3n+1) - 1/(3n+2)) at N = base*2^j, Richardson-extrapolated in 1/N.

    Independent of the Hurwitz machinery: only partial sums are used.
    """
    Ns = [base * 2**j for j in range(levels)]
    sums = []
    acc = []
    start = 0
    for N in Ns:
        n = np.arange(start, N, dtype=np.float64)
        acc.append(math.fsum((1.0 / ((3 * n + 1) * (3 * n + 2))).tolist()))
        sums.append(math.fsum(acc))
        start = N
    value, err = richardson(sums, ratio=2.0)
    # fsum is exact per block; the floor covers the float terms themselves
    err = max(err, 4 * levels * EPS * value)
    return EulerProductResult(value, "extrapolated", err, tolerance=None)


def richardson(values, ratio=2.0):
    """Neville-Richardson table for a sequence whose step shrinks by ``ratio``.

    Returns (best estimate, error estimate).  The error term is assumed to be
    a power series in the step with integer exponents 1, 2, 3, ...
    """
    table = [list(values)]
    for k in range(1, len(values)):
        prev = table[-1]
        f = ratio**k
        table.append([prev[i] + (prev[i] - prev[i - 1]) / (f - 1) for i in range(1, len(prev))])
    diag = [row[-1] for row in table]
    best = diag[-1]
    err = abs(diag[-1] - diag[-2]) if len(diag) > 1 else math.inf
    # later columns lose digits to cancellation; take the most stable one
    k = min(range(1, len(diag)), key=lambda i: abs(diag[i] - diag[i - 1]), default=0)
    if len(diag) > 1 and abs(diag[k] - diag[k - 1]) < err:
        best, err = diag[k], abs(diag[k] - diag[k - 1])
    return best, err


# ---------------------------------------------------------------- Euler products

def prime_tail_bound(sigma: float, X: int) -> float:
    """Upper bound for sum_{p > X} p^-sigma (sigma > 1).

    Partial summation with pi(x) < 1.25506 x / log x (valid for x > 1);
    falls back to the integer tail bound for tiny X.
    """
    if sigma <= 1:
        raise ValueError("tail bound needs sigma > 1")
    X = max(int(X), 1)
    crude = X ** (1 - sigma) / (sigma - 1)
    if X < 17:
        return crude
    return min(crude, 1.25506 * sigma / ((sigma - 1) * math.log(X)) * X ** (1 - sigma))


def _log_product(ps: np.ndarray, sigma: float) -> float:
    """sum log(1 - p^-sigma) accurately."""
    if ps.size == 0:
        return 0.0
    terms = np.log1p(-np.power(ps.astype(np.float64), -sigma))
    return math.fsum(terms.tolist())


def progression_euler_product(m: int, a: int, s: float, exponent_power: int = 1,
                              prime_limit: int = 10**6) -> EulerProductResult:
    """prod_{p <= prime_limit, p = a (mod m)} (1 - p^(-s*exponent_power))."""
    sigma = s * exponent_power
    if sigma <= 1:
        raise ValueError(f"product diverges or converges too slowly for s*k = {sigma}")
    if m < 1 or prime_limit < 1:
        raise ValueError("need m >= 1 and prime_limit >= 1")
    ps = primes_upto(prime_limit)
    if m > 1:
        ps = ps[ps % m == a % m]
    value = math.exp(_log_product(ps, sigma))
    if math.gcd(a, m) > 1:
        # the class holds at most the prime gcd(a, m)
        p = math.gcd(a, m)
        tail = p**-sigma if (is_prime(p) and p > prime_limit and p % m == a % m) else 0.0
    else:
        tail = prime_tail_bound(sigma, prime_limit)
    # -log(1-x) <= x/(1-x) for every omitted factor x <= X^-sigma
    tail /= 1 - (prime_limit + 1) ** -sigma
    return EulerProductResult(value, "truncated", value * -math.expm1(-tail) if tail else 0.0,
                              prime_limit=prime_limit)


def _accelerated_square_product(chi: DirichletCharacter, tolerance: float) -> EulerProductResult:
    """prod over primes p with chi(p) = -1 of (1 - p^-2), chi real non-principal.

    With P(t) = prod_{chi(p)=-1} (1 - p^-2t) and K(t) = L(chi, 2t) / L(chi0, 2t)
    one has P(t)^2 = K(t) P(2t), hence P(1) = prod_j K(2^j)^(1/2^(j+1)).
    """
    if not chi.is_real or chi.is_principal:
        raise ValueError("needs a real non-principal character")
    principal = characters_mod(chi.m)[0]
    log_value = 0.0
    j = 0
    while True:
        t = 2.0**j
        K = dirichlet_L(chi, 2 * t) / dirichlet_L(principal, 2 * t)
        log_value += math.log(K) / 2 ** (j + 1)
        j += 1
        t = 2.0**j
        # |log P(t)| <= (zeta(2t) - 1) / (1 - 4^-t), and P(t) enters as P(t)^(1/2^j)
        rest = hurwitz_zeta(2 * t, 2.0) / (1 - 4.0**-t) / 2**j
        value = math.exp(log_value)
        if value * rest <= tolerance or j >= 60:
            break
    rounding = 8 * j * EPS * value
    return EulerProductResult(value, "accelerated", value * math.expm1(rest) + rounding,
                              tolerance=tolerance)


def p2(tolerance: float = 1e-12) -> EulerProductResult:
    """prod_{p = 2 (mod 3)} (1 - 1/p^2), accelerated through L(chi_1, .) and zeta."""
    if tolerance < 1e-12:
        raise ValueError("tolerance must be >= 1e-12")
    return _accelerated_square_product(chi1(), tolerance)


def p2_truncated(prime_limit: int = DEFAULT_PRIME_LIMIT) -> EulerProductResult:
    return progression_euler_product(3, 2, 1, 2, prime_limit)


def constant_C(p2_result: Optional[EulerProductResult] = None) -> EulerProductResult:
    """C = (4/pi) 3^(-3/4) sqrt(2 p2): |W ∩ [1, n]| ~ C n / sqrt(log n)."""
    p = p2_result if p2_result is not None else p2()
    value = 4 / math.pi * 3**-0.75 * math.sqrt(2 * p.value)
    # d sqrt(p)/dp = 1/(2 sqrt p)
    err = value * p.tail_bound / (2 * p.value) + 4 * EPS * value
    return EulerProductResult(value, "closed_form", err, prime_limit=p.prime_limit, tolerance=p.tolerance)


def landau_ramanujan_b(tolerance: float = 1e-10, method: str = "accelerated",
                       prime_limit: int = DEFAULT_PRIME_LIMIT) -> EulerProductResult:
    """b = 2^(-1/2) prod_{p = 3 (mod 4)} (1 - p^-2)^(-1/2)."""
    if tolerance < 1e-8 and method == "accelerated":
        tolerance = max(tolerance, 1e-12)
    if method == "accelerated":
        q = _accelerated_square_product(chi4(), tolerance)
    elif method == "truncated":
        q = progression_euler_product(4, 3, 1, 2, prime_limit)
    else:
        raise ValueError(f"unknown method {method!r}")
    value = 1 / math.sqrt(2 * q.value)
    err = value * q.tail_bound / (2 * q.value) + 4 * EPS * value
    return EulerProductResult(value, q.method, err, prime_limit=q.prime_limit, tolerance=q.tolerance)


# ---------------------------------------------------------------- Mertens-type constants

class _ClassSums:
    """Prime data mod m up to X, grouped by residue class, reused across s."""

    SMALL = 1000
    ORDER = 8  # power-series terms for p > SMALL: x <= 1e-3, x^9/9 < 1e-28

    def __init__(self, m, X):
        self.m = m
        self.X = X
        ps = primes_upto(X)
        self.all = ps.astype(np.float64)
        res = ps % m
        self.by_class = {r: ps[res == r].astype(np.float64) for r in range(m)}
        self._cache = {}

    def class_log(self, r, s):
        return self._cached(("class", r, s), lambda: _log_product_f(self.by_class[r], s))

    def all_log(self, s):
        return self._cached(("all", s), lambda: _log_product_f(self.all, s))

    def _cached(self, key, fn):
        # values are deterministic, so a racing duplicate computation is harmless
        try:
            return self._cache[key]
        except KeyError:
            return self._cache.setdefault(key, fn())

    def _power_sums(self, r, s):
        """Small primes of class r and sum_{p > SMALL} p^(-k s) for k = 1..ORDER."""
        def build():
            ps = self.by_class[r]
            x = ps[ps > self.SMALL] ** -s
            sums, xk = [], x.copy()
            for k in range(self.ORDER):
                sums.append(math.fsum(xk.tolist()) if k == 0 else float(np.sum(xk)))
                xk *= x
            return ps[ps <= self.SMALL], sums
        return self._cached(("pow", r, s), build)

    def char_log(self, chi, s):
        """sum_{p <= X} log(1 - chi(p) p^-s), complex."""
        total = 0j
        for r in range(self.m):
            if chi.turns[r] is None:
                continue
            c = chi.value(r)
            small, sums = self._power_sums(r, s)
            total += complex(np.sum(np.log(1 - c * small**-s)))
            total -= sum(c**k * S / k for k, S in enumerate(sums, start=1))
        return total


def _log_product_f(ps, s):
    if ps.size == 0:
        return 0.0
    return math.fsum(np.log1p(-(ps**-s)).tolist())


def _mertens_g(data: _ClassSums, a: int, s: float) -> float:
    """zeta(s)^(1/phi) prod_{p = a (m)} (1 - p^-s), with the prime tail p > X
    replaced by its character expansion.

    The tail sum over the class is (1/phi) sum_chi conj(chi(a)) log L_X(chi, s)
    up to O(1/X), where L_X drops the Euler factors p <= X.  For chi0 this
    cancels the zeta factor exactly, leaving a function regular at s = 1.
    """
    m = data.m
    chars = characters_mod(m)
    phi = len(chars)
    log_g = data.class_log(a % m, s) - data.all_log(s) / phi
    for chi in chars[1:]:
        L = dirichlet_L_at_one(chi) if s == 1 else dirichlet_L(chi, s)
        log_LX = cmath.log(complex(L) * cmath.exp(data.char_log(chi, s)))
        log_g -= (chi.conjugate().value(a) * log_LX).real / phi
    return math.exp(log_g)


@lru_cache(maxsize=None)
def _class_sums(m, X):
    return _ClassSums(m, X)


@lru_cache(maxsize=None)
def c_a_estimate(m: int, a: int, tolerance: float = 1e-3,
                 prime_limit: int = DEFAULT_PRIME_LIMIT) -> EulerProductResult:
    """Mertens-type constant c_a = lim_{s->1+} zeta(s)^(1/phi(m)) prod_{p = a (m)} (1 - p^-s).

    Evaluated on s_j = 1 + 2^-j (j = 3..12) and Richardson-extrapolated to
    s = 1.  Classes not coprime to m get their definitional values.
    """
    if m < 1:
        raise ValueError("modulus must be >= 1")
    a = (a % m) or m
    if math.gcd(a, m) != 1:
        value = 1 - 1 / a if is_prime(a) else 1.0
        return EulerProductResult(value, "closed_form", 0.0)
    data = _class_sums(m, prime_limit)
    hs = [2.0**-j for j in range(3, 13)]
    values = [_mertens_g(data, a, 1 + h) for h in hs]
    best, rich_err = richardson(values, ratio=2.0)
    direct = _mertens_g(data, a, 1.0)
    # neglected p > X terms of order >= 2 in the log, for every class and character
    trunc = 2 * prime_tail_bound(2.0, prime_limit)
    err = max(rich_err, abs(best - direct)) + best * trunc
    target = max(tolerance, 1e-3)
    if not math.isfinite(best) or err > target:
        raise EstimationError(f"c_{a} mod {m} did not converge", best, err)
    return EulerProductResult(best, "extrapolated", err, prime_limit=prime_limit, tolerance=tolerance)


# ---------------------------------------------------------------- asymptotics

def delange_leading_term(law: AsymptoticLaw, x: float) -> float:
    """a(1)/Gamma(rho) * x * (log x)^(rho - 1)."""
    if x <= 1:
        raise ValueError("x must exceed 1")
    return law.a1 / gamma(law.rho) * x * math.log(x) ** (law.rho - 1)


def _forbidden_divisor_primes(sel):
    return [p for p in factorize(sel.m).primes if sel.forbids_prime(p)]


def squarefree_factor(sel: CongruenceSelector, prime_limit: int = DEFAULT_PRIME_LIMIT) -> EulerProductResult:
    """prod over primes p outside the forbidden classes of (1 - p^-2).

    Written as zeta(2)^-1 divided by the product over the forbidden classes.
    """
    value = 6 / math.pi**2
    rel_err = 0.0
    for a in sorted(sel.forbidden):
        if math.gcd(a, sel.m) == 1:
            r = progression_euler_product(sel.m, a, 1, 2, prime_limit)
            value /= r.value
            rel_err += r.tail_bound / r.value
    for p in _forbidden_divisor_primes(sel):
        value /= 1 - p**-2
    return EulerProductResult(value, "closed_form", value * rel_err, prime_limit=prime_limit)


@lru_cache(maxsize=None)
def delange_coefficient(sel: CongruenceSelector) -> EulerProductResult:
    """a(1) = prod_{a in A} c_a (times the square-free factor when asked).

    This is the coefficient of zeta(s)^rho in the Dirichlet series of the
    family; the counting constant is a(1) / Gamma(rho).
    """
    if sel.is_degenerate:
        raise ValueError("degenerate selector: use degenerate_asymptotic")
    value = 1.0
    err = 0.0
    for a in sorted(sel.forbidden):
        c = c_a_estimate(sel.m, a)
        value *= c.value
        err += c.tail_bound / c.value
    if sel.squarefree_only:
        f = squarefree_factor(sel)
        value *= f.value
        err += f.tail_bound / f.value
    return EulerProductResult(value, "closed_form", value * err)


def asymptotic_law(sel: CongruenceSelector) -> AsymptoticLaw:
    rho = 1 - Fraction(sel.ell, sel.phi)
    return AsymptoticLaw(float(rho), delange_coefficient(sel).value, sel.describe())


def leading_constant(sel: CongruenceSelector) -> float:
    """K with |S ∩ [1, n]| ~ K n / (log n)^(l/phi(m)); K = C for W."""
    law = asymptotic_law(sel)
    return law.a1 / gamma(law.rho)


def predicted_count(sel: CongruenceSelector, n: float) -> float:
    """Delange prediction for |S ∩ [1, n]| (non-degenerate selectors)."""
    if sel.is_degenerate:
        raise ValueError("degenerate selector: use degenerate_asymptotic")
    if n <= math.e:
        raise ValueError("predicted_count needs n > e")
    return delange_leading_term(asymptotic_law(sel), n)


def prediction_for(sel: CongruenceSelector, n: float) -> Optional[float]:
    """Whichever first-order prediction applies to sel at n (None if none does)."""
    if sel.is_degenerate:
        if sel.squarefree_only or not sel.free_primes or n <= 1:
            return None
        return degenerate_asymptotic(sel.free_primes, n)
    if n <= math.e:
        return None
    return predicted_count(sel, n)


def predict_table(table: CountTable) -> CountTable:
    return table.with_predictions(lambda n: prediction_for(table.selector, n))
