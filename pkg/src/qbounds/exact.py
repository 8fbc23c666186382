"""Exact rational arithmetic for Hamming-scheme polynomial machinery.

Everything here is computed with ``fractions.Fraction``; no floating point
is used anywhere in this module, so results are exact and usable as bound
certificates.  Provided: binomials (including the falling-factorial
binomial C(x, j) at arbitrary rational x), Krawtchouk polynomial
evaluation over a q-letter alphabet, conversion between the power basis
and the Krawtchouk basis, isolation of the smallest Krawtchouk root by
Sturm-chain bisection, and the dual weight-distribution transform.

The degree-t Krawtchouk polynomial used throughout is

    P_t(x, n) = sum_{j=0}^{t} (-1)^j (q-1)^{t-j} C(x, j) C(n-x, t-j),

a polynomial of exact degree t in x with leading coefficient
(-1)^t q^t / t!.  Its n+1 members P_0 .. P_n are orthogonal under the
weight (q-1)^x C(n, x) on {0, .., n}, which is the identity every other
convention choice is validated against.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .errors import ParameterError

Rational = Fraction

_ZERO = Fraction(0)
_ONE = Fraction(1)


def binomial(n: int, k: int) -> int:
    """C(n, k), with the convention that out-of-range k gives 0."""
    if n < 0:
        raise ParameterError(f"binomial: n must be nonnegative, got {n}")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def falling_binomial(x: Fraction | int, j: int) -> Fraction:
    """C(x, j) = x (x-1) ... (x-j+1) / j! as a polynomial in rational x."""
    if j < 0:
        return _ZERO
    num = _ONE
    x = Fraction(x)
    for t in range(j):
        num *= x - t
    return num / math.factorial(j)


# ---------------------------------------------------------------------------
# dense univariate polynomials, coefficient lists low degree -> high
# ---------------------------------------------------------------------------


def _trim(coeffs: list[Fraction]) -> list[Fraction]:
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


def _poly_add(a: Sequence[Fraction], b: Sequence[Fraction]) -> list[Fraction]:
    out = [_ZERO] * max(len(a), len(b))
    for i, v in enumerate(a):
        out[i] += v
    for i, v in enumerate(b):
        out[i] += v
    return _trim(out)


def _poly_scale(a: Sequence[Fraction], s: Fraction) -> list[Fraction]:
    if s == 0:
        return []
    return [v * s for v in a]


def _poly_mul(a: Sequence[Fraction], b: Sequence[Fraction]) -> list[Fraction]:
    if not a or not b:
        return []
    out = [_ZERO] * (len(a) + len(b) - 1)
    for i, va in enumerate(a):
        if va == 0:
            continue
        for j, vb in enumerate(b):
            out[i + j] += va * vb
    return _trim(out)


def _poly_eval(coeffs: Sequence[Fraction], x: Fraction) -> Fraction:
    acc = _ZERO
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def _poly_deriv(coeffs: Sequence[Fraction]) -> list[Fraction]:
    return _trim([coeffs[i] * i for i in range(1, len(coeffs))])


def _poly_rem(num: Sequence[Fraction], den: Sequence[Fraction]) -> list[Fraction]:
    """Remainder of polynomial division; den must be nonzero."""
    rem = list(num)
    dn = len(den) - 1
    lead = den[-1]
    while len(rem) - 1 >= dn and rem:
        factor = rem[-1] / lead
        shift = len(rem) - 1 - dn
        for i, dv in enumerate(den):
            rem[shift + i] -= factor * dv
        _trim(rem)
    return rem


# ---------------------------------------------------------------------------
# Krawtchouk polynomials
# ---------------------------------------------------------------------------


def _validate_tnq(t: int, n: int, q: int) -> None:
    if n < 0:
        raise ParameterError(f"n must be nonnegative, got {n}")
    if q < 2:
        raise ParameterError(f"alphabet size q must be >= 2, got {q}")
    if t < 0 or t > n:
        raise ParameterError(f"Krawtchouk degree t={t} outside [0, n={n}]")


@lru_cache(maxsize=None)
def _falling_poly(j: int) -> tuple[Fraction, ...]:
    """Power-basis coefficients of C(x, j)."""
    coeffs: list[Fraction] = [_ONE]
    for t in range(j):
        coeffs = _poly_mul(coeffs, [Fraction(-t), _ONE])
    return tuple(_poly_scale(coeffs, Fraction(1, math.factorial(j))))


@lru_cache(maxsize=None)
def krawtchouk_coeffs(t: int, n: int, q: int = 4) -> tuple[Fraction, ...]:
    """Power-basis coefficients of P_t(x, n), length t+1."""
    _validate_tnq(t, n, q)
    total: list[Fraction] = []
    for j in range(t + 1):
        # C(n-x, t-j) = C(-(x-n), t-j): substitute into the falling poly.
        m = t - j
        cnx: list[Fraction] = [_ONE]
        for s in range(m):
            cnx = _poly_mul(cnx, [Fraction(n - s), Fraction(-1)])
        cnx = _poly_scale(cnx, Fraction(1, math.factorial(m)))
        term = _poly_mul(list(_falling_poly(j)), cnx)
        scale = Fraction((-1) ** j * (q - 1) ** m)
        total = _poly_add(total, _poly_scale(term, scale))
    return tuple(total)


@lru_cache(maxsize=None)
def _krawtchouk_int(t: int, x: int, n: int, q: int) -> Fraction:
    acc = _ZERO
    for j in range(t + 1):
        acc += (
            Fraction((-1) ** j * (q - 1) ** (t - j))
            * falling_binomial(x, j)
            * falling_binomial(n - x, t - j)
        )
    return acc


def krawtchouk_eval(t: int, x: Fraction | int, n: int, q: int = 4) -> Fraction:
    """Exact value of the degree-t Krawtchouk polynomial at rational x."""
    _validate_tnq(t, n, q)
    x = Fraction(x)
    if x.denominator == 1:
        return _krawtchouk_int(t, x.numerator, n, q)
    acc = _ZERO
    for j in range(t + 1):
        acc += (
            Fraction((-1) ** j * (q - 1) ** (t - j))
            * falling_binomial(x, j)
            * falling_binomial(n - x, t - j)
        )
    return acc


# ---------------------------------------------------------------------------
# polynomials carried in both bases
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ExactPolynomial:
    """A univariate polynomial with exact rational coefficients.

    ``coeffs[i]`` is the coefficient of x**i; trailing zeros are trimmed on
    construction.  ``n`` is the ambient length (the polynomial lives in the
    degree-<=n space spanned by P_0 .. P_n) and ``q`` the alphabet size.
    """

    coeffs: tuple[Fraction, ...]
    n: int
    q: int = 4

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ParameterError(f"ambient length must be nonnegative, got {self.n}")
        if self.q < 2:
            raise ParameterError(f"alphabet size q must be >= 2, got {self.q}")
        cleaned = _trim([Fraction(c) for c in self.coeffs])
        if len(cleaned) - 1 > self.n:
            raise ParameterError(
                f"degree {len(cleaned) - 1} exceeds ambient length {self.n}"
            )
        object.__setattr__(self, "coeffs", tuple(cleaned))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, x: Fraction | int) -> Fraction:
        return _poly_eval(self.coeffs, Fraction(x))


@dataclass(frozen=True)
class KrawtchoukExpansion:
    """Coefficients f_0 .. f_n of an expansion f(x) = sum f_t P_t(x, n)."""

    coeffs: tuple[Fraction, ...]
    n: int
    q: int = 4

    def __post_init__(self) -> None:
        coeffs = tuple(Fraction(c) for c in self.coeffs)
        if len(coeffs) != self.n + 1:
            raise ParameterError(
                f"expected {self.n + 1} Krawtchouk coefficients, got {len(coeffs)}"
            )
        object.__setattr__(self, "coeffs", coeffs)

    def synthesize(self) -> ExactPolynomial:
        """Re-expand into the power basis: sum f_t P_t(x, n)."""
        total: list[Fraction] = []
        for t, ft in enumerate(self.coeffs):
            if ft == 0:
                continue
            total = _poly_add(
                total, _poly_scale(list(krawtchouk_coeffs(t, self.n, self.q)), ft)
            )
        return ExactPolynomial(tuple(total), self.n, self.q)


def krawtchouk_expand(f: ExactPolynomial) -> KrawtchoukExpansion:
    """Expand f in the Krawtchouk basis by exact triangular back-substitution.

    P_t has exact degree t, so the change of basis is upper triangular and
    solvable from the top degree down.
    """
    if f.degree > f.n:
        raise ParameterError(f"degree {f.degree} exceeds ambient length {f.n}")
    work = list(f.coeffs) + [_ZERO] * (f.n + 1 - len(f.coeffs))
    out = [_ZERO] * (f.n + 1)
    for t in range(f.n, -1, -1):
        if work[t] == 0:
            continue
        pt = krawtchouk_coeffs(t, f.n, f.q)
        ft = work[t] / pt[t]
        out[t] = ft
        for i, c in enumerate(pt):
            work[i] -= ft * c
    if any(work):
        raise ParameterError("expansion failed to terminate; malformed input")
    return KrawtchoukExpansion(tuple(out), f.n, f.q)


# ---------------------------------------------------------------------------
# root isolation (Sturm chains, exact sign bisection)
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def _sturm_chain(t: int, n: int, q: int) -> tuple[tuple[Fraction, ...], ...]:
    p0 = list(krawtchouk_coeffs(t, n, q))
    chain = [p0, _poly_deriv(p0)]
    while len(chain[-1]) > 1:
        rem = _poly_rem(chain[-2], chain[-1])
        if not rem:
            break
        chain.append([-c for c in rem])
    return tuple(tuple(p) for p in chain)


def _sign_variations(chain: Sequence[Sequence[Fraction]], x: Fraction) -> int:
    signs = []
    for p in chain:
        v = _poly_eval(p, x)
        if v > 0:
            signs.append(1)
        elif v < 0:
            signs.append(-1)
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def _roots_in_halfopen(
    chain: Sequence[Sequence[Fraction]], a: Fraction, b: Fraction
) -> int:
    """Number of distinct real roots in (a, b]; requires p(a) != 0."""
    return _sign_variations(chain, a) - _sign_variations(chain, b)


def krawtchouk_smallest_root(
    k: int, n: int, q: int = 4, tol: Fraction = Fraction(1, 10**9)
) -> tuple[Fraction, Fraction]:
    """Bracket the smallest real root of P_k(x, n) to width <= tol.

    All k roots are real, simple and lie in (0, n).  Returns an exact
    rational interval (lo, hi) containing the smallest root; when bisection
    lands on the root exactly the interval has width zero.
    """
    if k == 0:
        raise ParameterError("P_0 is constant and has no roots")
    _validate_tnq(k, n, q)
    tol = Fraction(tol)
    if tol <= 0:
        raise ParameterError("tolerance must be positive")
    if k == 1:
        root = Fraction((q - 1) * n, q)
        return (root, root)
    poly = krawtchouk_coeffs(k, n, q)
    chain = _sturm_chain(k, n, q)
    lo, hi = Fraction(0), Fraction(n)
    # invariant: p(lo) != 0, no roots in (0, lo], smallest root in (lo, hi]
    while hi - lo > tol:
        mid = (lo + hi) / 2
        if _poly_eval(poly, mid) == 0:
            if _roots_in_halfopen(chain, Fraction(0), mid) == 1:
                return (mid, mid)
            hi = mid
        elif _roots_in_halfopen(chain, lo, mid) >= 1:
            hi = mid
        else:
            lo = mid
    return (lo, hi)


def compare_smallest_root(k: int, n: int, q: int, x: Fraction | int) -> int:
    """Trichotomy of rational x against the smallest root of P_k(x, n).

    Returns -1 when x is strictly below the smallest root, 0 when x equals
    it exactly, +1 when strictly above.  Exact: decided by Sturm counting,
    never by an approximation.
    """
    if k == 0:
        raise ParameterError("P_0 is constant and has no roots")
    _validate_tnq(k, n, q)
    x = Fraction(x)
    if x <= 0:
        return -1
    chain = _sturm_chain(k, n, q)
    poly = krawtchouk_coeffs(k, n, q)
    if _poly_eval(poly, x) == 0:
        return 0 if _roots_in_halfopen(chain, Fraction(0), x) == 1 else 1
    return -1 if _roots_in_halfopen(chain, Fraction(0), x) == 0 else 1


# ---------------------------------------------------------------------------
# weight-distribution transform
# ---------------------------------------------------------------------------


def macwilliams_transform(
    B: Sequence[Fraction | int],
    n: int,
    q: int = 4,
    scale: Fraction | int = 1,
) -> list[Fraction]:
    """A_t = (1/scale) * sum_i B_i P_t(i, n), exactly.

    With B the weight distribution of a code of size M over a q-letter
    alphabet and scale = M, this yields the distribution of the dual code;
    applying the transform twice with scales (s, q**n / s) is the identity.
    """
    scale = Fraction(scale)
    if scale <= 0:
        raise ParameterError(f"scale must be positive, got {scale}")
    if len(B) != n + 1:
        raise ParameterError(f"expected {n + 1} entries, got {len(B)}")
    bb = [Fraction(v) for v in B]
    return [
        sum((bb[i] * krawtchouk_eval(t, i, n, q) for i in range(n + 1)), _ZERO) / scale
        for t in range(n + 1)
    ]
