"""Asymptotic rate-distance curves for quantum codes.

This is the only floating-point module in the package.  Rates are
lambda = k/n, relative distances delta = d/n.  Curves are produced by
combining the q-ary entropy H_q with its companion change of variable

    gamma_q(x) = (1/q) (q - 1 - (q - 2) x - 2 sqrt((q-1) x (1-x))),

a decreasing involution of [0, (q-1)/q].  The built-in classical rate
bound is the first linear-programming bound R(delta) <= H_q(gamma_q(delta))
(zero beyond delta = (q-1)/q); any classical bound can be substituted via
a (delta, rate) table, so stronger published curves slot in without code
changes.

Curve ids follow the command-line surface:

    A  nondegenerate stabilizer codes via a length-n quaternary code,
       constraint (1 + lambda)/2 <= R4(delta)
    B  nondegenerate codes, parametric lambda = 2 H4(x) - 1, delta = gamma4(x)
    D  any stabilizer code via a binary [n+k, 2k] reduction,
       constraint 2 lambda/(1+lambda) <= R2(delta/(1+lambda))
    E  stabilizer codes with k1 = 0 via a quaternary [(n+k)/2, 2k] reduction,
       constraint 2 lambda/(1+lambda) <= R4(2 delta/(1+lambda))
    hamming-degenerate  sphere packing for degenerate codes,
       lambda = (1 - H4(mu)) / (1 + H4(mu)) with mu = delta/(1+lambda)
    fig2  the k1-parameterized family generalizing E,
       (2 lambda - kappa1)/(1 + lambda - kappa1)
           <= R4(2 delta/(1 + lambda - kappa1)),  valid while kappa1 < 2 lambda

All bisections run to interval width <= 1e-9 and the emitted samples are
bit-for-bit reproducible for a fixed grid.
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass
from typing import Callable, Sequence

from .errors import ParameterError, SolverError

DEFAULT_TOL = 1e-9

CURVE_IDS = ("A", "B", "D", "E", "hamming-degenerate", "fig2")


def entropy_q(x: float, q: int = 4) -> float:
    """q-ary entropy H_q(x) with H_q(0) = 0 and H_q(1) = log_q(q-1)."""
    if q < 2:
        raise ParameterError(f"alphabet size q must be >= 2, got {q}")
    if not 0.0 <= x <= 1.0:
        raise ParameterError(f"entropy argument {x} outside [0, 1]")
    logq = math.log(q)
    total = x * math.log(q - 1) / logq
    if 0.0 < x:
        total -= x * math.log(x) / logq
    if x < 1.0:
        total -= (1.0 - x) * math.log(1.0 - x) / logq
    return total


def gamma_q(x: float, q: int = 4) -> float:
    """gamma_q(x); maps 0 -> (q-1)/q and (q-1)/q -> 0, strictly decreasing."""
    if q < 2:
        raise ParameterError(f"alphabet size q must be >= 2, got {q}")
    if not 0.0 <= x <= 1.0:
        raise ParameterError(f"gamma argument {x} outside [0, 1]")
    return (q - 1 - (q - 2) * x - 2.0 * math.sqrt((q - 1) * x * (1.0 - x))) / q


def solve_monotone(
    fn: Callable[[float], float],
    target: float,
    lo: float,
    hi: float,
    tol: float = DEFAULT_TOL,
) -> float:
    """Bisection for fn(x) = target with fn monotone on [lo, hi]."""
    flo, fhi = fn(lo), fn(hi)
    if flo == target:
        return lo
    if fhi == target:
        return hi
    increasing = fhi > flo
    below = (flo < target) if increasing else (flo > target)
    above = (fhi > target) if increasing else (fhi < target)
    if not (below and above):
        raise SolverError(
            f"target {target} not bracketed by fn({lo})={flo}, fn({hi})={fhi}"
        )
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        fm = fn(mid)
        if (fm < target) == increasing:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


# ---------------------------------------------------------------------------
# classical bounds, built in or supplied as tables
# ---------------------------------------------------------------------------

ClassicalBound = Callable[[float], float]


def first_lp_bound(q: int = 4) -> ClassicalBound:
    """R(delta) = H_q(gamma_q(delta)), rate 0 beyond delta = (q-1)/q."""
    top = (q - 1) / q

    def bound(delta: float) -> float:
        if delta <= 0.0:
            return 1.0
        if delta >= top:
            return 0.0
        return entropy_q(gamma_q(delta, q), q)

    return bound


def tabulated_bound(points: Sequence[tuple[float, float]]) -> ClassicalBound:
    """Piecewise-linear rate bound from (delta, rate) samples.

    Deltas must be strictly increasing and rates nonincreasing; outside the
    sampled range the end values are held constant.
    """
    if len(points) < 2:
        raise ParameterError("need at least two (delta, rate) points")
    deltas = [p[0] for p in points]
    rates = [p[1] for p in points]
    if any(b <= a for a, b in zip(deltas, deltas[1:])):
        raise ParameterError("delta column must be strictly increasing")
    if any(b > a for a, b in zip(rates, rates[1:])):
        raise ParameterError("rate column must be nonincreasing")

    def bound(delta: float) -> float:
        if delta <= deltas[0]:
            return rates[0]
        if delta >= deltas[-1]:
            return rates[-1]
        for i in range(len(deltas) - 1):
            if deltas[i] <= delta <= deltas[i + 1]:
                t = (delta - deltas[i]) / (deltas[i + 1] - deltas[i])
                return rates[i] + t * (rates[i + 1] - rates[i])
        raise SolverError("interpolation fell through")  # pragma: no cover

    return bound


def load_classical_bound_csv(path: str) -> ClassicalBound:
    """Read a 'delta,rate' CSV (header required) into a rate bound."""
    points: list[tuple[float, float]] = []
    with open(path, newline="", encoding="utf-8") as handle:
        reader = csv.reader(row for row in handle if not row.startswith("#"))
        header = next(reader, None)
        if header is None or [h.strip() for h in header[:2]] != ["delta", "rate"]:
            raise ParameterError("classical bound CSV must start with 'delta,rate'")
        for row in reader:
            if not row:
                continue
            points.append((float(row[0]), float(row[1])))
    return tabulated_bound(points)


# ---------------------------------------------------------------------------
# curves
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CurvePoint:
    delta: float
    rate: float


@dataclass
class CurveSpec:
    """Request for one asymptotic curve."""

    curve_id: str
    samples: int = 200
    kappa1: float = 0.0
    classical_bound: ClassicalBound | None = None
    classical_label: str = ""
    tol: float = DEFAULT_TOL


def _grid(lo: float, hi: float, samples: int) -> list[float]:
    if samples < 2:
        raise ParameterError(f"need at least 2 samples, got {samples}")
    step = (hi - lo) / (samples - 1)
    return [lo + i * step for i in range(samples)]


def curve_nondeg_general(samples: int = 200, tol: float = DEFAULT_TOL) -> list[CurvePoint]:
    """Curve B: lambda = 2 H4(x) - 1 against delta = gamma4(x).

    The parametric normalization is pinned by its endpoints: lambda = 1 at
    delta = 0 and lambda = 0 at delta = gamma4(x*) with H4(x*) = 1/2,
    delta ~ 0.3161.
    """
    x_star = solve_monotone(lambda x: entropy_q(x, 4), 0.5, 1e-12, 0.75, tol)
    delta_end = gamma_q(x_star, 4)
    points = []
    for delta in _grid(0.0, delta_end, samples):
        x = solve_monotone(lambda t: gamma_q(t, 4), delta, 0.0, 0.75, tol)
        rate = 2.0 * entropy_q(x, 4) - 1.0
        points.append(CurvePoint(delta, min(1.0, max(0.0, rate))))
    return points


def _largest_rate(
    constraint: Callable[[float], float], floor: float, tol: float
) -> float:
    """Largest lambda in [floor, 1] with constraint(lambda) <= 0.

    constraint(floor) <= 0 is required; the feasible set is swept by
    bisection on its upper boundary.
    """
    if constraint(floor) > 0.0:
        return floor - 1.0  # infeasible marker
    if constraint(1.0) <= 0.0:
        return 1.0
    lo, hi = floor, 1.0
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if constraint(mid) <= 0.0:
            lo = mid
        else:
            hi = mid
    return lo


def _stabilizer_constraint(
    curve_id: str, bound: ClassicalBound, kappa1: float
) -> tuple[Callable[[float, float], float], float]:
    """Constraint g(delta, lambda) <= 0 plus the lambda floor of its domain."""
    if curve_id == "A":
        return (lambda delta, lam: (1.0 + lam) / 2.0 - bound(delta)), 0.0
    if curve_id == "D":
        return (
            lambda delta, lam: 2.0 * lam / (1.0 + lam) - bound(delta / (1.0 + lam))
        ), 0.0
    if curve_id == "E":
        return (
            lambda delta, lam: 2.0 * lam / (1.0 + lam)
            - bound(2.0 * delta / (1.0 + lam))
        ), 0.0
    if curve_id == "fig2":
        def g(delta: float, lam: float) -> float:
            span = 1.0 + lam - kappa1
            return (2.0 * lam - kappa1) / span - bound(2.0 * delta / span)

        return g, kappa1 / 2.0
    raise ParameterError(f"unknown stabilizer curve id {curve_id!r}")


def curve_stabilizer(
    curve_id: str,
    classical_bound: ClassicalBound | None = None,
    kappa1: float = 0.0,
    samples: int = 200,
    tol: float = DEFAULT_TOL,
) -> list[CurvePoint]:
    """Curves A, D, E and the fig2 family: largest lambda meeting the reduction.

    Each delta sample is solved independently by bisection; the delta range
    ends where the feasible rate meets the domain floor (0, or kappa1/2 for
    the fig2 family, where the parameterized reduction stops applying).
    """
    if curve_id not in ("A", "D", "E", "fig2"):
        raise ParameterError(f"unknown stabilizer curve id {curve_id!r}")
    if curve_id == "fig2" and not 0.0 <= kappa1 <= 1.0:
        raise ParameterError(f"kappa1 must lie in [0, 1], got {kappa1}")
    if classical_bound is None:
        classical_bound = first_lp_bound(2 if curve_id == "D" else 4)
    g, floor = _stabilizer_constraint(curve_id, classical_bound, kappa1)

    def rate_at(delta: float) -> float:
        return _largest_rate(lambda lam: g(delta, lam), floor, tol)

    # end of support: last delta whose best rate clears the domain floor
    lo, hi = 0.0, 1.0
    if rate_at(hi) > floor + tol:
        delta_end = hi
    else:
        while hi - lo > tol:
            mid = 0.5 * (lo + hi)
            if rate_at(mid) > floor + tol:
                lo = mid
            else:
                hi = mid
        delta_end = lo
    points = []
    for delta in _grid(0.0, delta_end, samples):
        rate = rate_at(delta)
        if rate < floor:
            continue  # unsatisfiable sample: curve ends
        points.append(CurvePoint(delta, min(1.0, rate)))
    return points


def curve_hamming_degenerate(
    samples: int = 200, half_radius: bool = False, tol: float = DEFAULT_TOL
) -> list[CurvePoint]:
    """Sphere-packing curve lambda = (1 - H4(mu)) / (1 + H4(mu)).

    mu = delta / (1 + lambda) as printed in the source inequality;
    ``half_radius`` exposes the alternative mu = delta / (2 (1 + lambda))
    that a packing-radius-of-d/2 reading would give.  Solved per sample by
    bisection of the fixed-point residual.
    """
    scale = 2.0 if half_radius else 1.0

    def residual(delta: float, lam: float) -> float:
        mu = min(1.0, delta / (scale * (1.0 + lam)))
        h = entropy_q(mu, 4)
        return lam - (1.0 - h) / (1.0 + h)

    points = []
    for delta in _grid(0.0, 0.75 * scale, samples):
        lo, hi = 0.0, 1.0
        if residual(delta, lo) >= 0.0:
            points.append(CurvePoint(delta, 0.0))
            continue
        while hi - lo > tol:
            mid = 0.5 * (lo + hi)
            if residual(delta, mid) < 0.0:
                lo = mid
            else:
                hi = mid
        points.append(CurvePoint(delta, 0.5 * (lo + hi)))
    return points


# ---------------------------------------------------------------------------
# dispatch and provenance
# ---------------------------------------------------------------------------


def generate_curve(spec: CurveSpec) -> tuple[list[CurvePoint], list[str]]:
    """Points plus deterministic provenance/metadata comment lines."""
    meta = [f"curve: {spec.curve_id}", f"samples: {spec.samples}"]
    if spec.curve_id == "B":
        points = curve_nondeg_general(spec.samples, spec.tol)
        meta.append(
            "normalization: rate = 2*H4(x) - 1, delta = gamma4(x); pinned by the "
            "endpoints (rate 1 at delta 0; rate 0 near delta 0.316)"
        )
        return points, meta
    if spec.curve_id == "hamming-degenerate":
        points = curve_hamming_degenerate(spec.samples, tol=spec.tol)
        meta.append("fixed point: rate = (1 - H4(mu))/(1 + H4(mu)), mu = delta/(1 + rate)")
        return points, meta
    if spec.curve_id in ("A", "D", "E", "fig2"):
        label = spec.classical_label or (
            "first-lp-gf2 (built-in stand-in)"
            if spec.curve_id == "D"
            else "first-lp-gf4 (built-in stand-in)"
        )
        meta.append(f"classical_bound: {label}")
        if spec.curve_id == "A":
            meta.append(
                "note: with the built-in first-LP stand-in the zero-rate endpoint "
                "is ~0.316; the strongest published quaternary bound would give "
                "~0.308 and is not built in (supply --classical-bound to use it)"
            )
        if spec.curve_id == "fig2":
            meta.append(f"kappa1: {spec.kappa1!r}")
            meta.append("valid while kappa1 < 2*rate; curve ends at rate kappa1/2")
        points = curve_stabilizer(
            spec.curve_id,
            classical_bound=spec.classical_bound,
            kappa1=spec.kappa1,
            samples=spec.samples,
            tol=spec.tol,
        )
        return points, meta
    raise ParameterError(f"unknown curve id {spec.curve_id!r}")
