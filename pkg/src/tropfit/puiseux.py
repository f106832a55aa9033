"""Max-plus Puiseux polynomials and rational functions.

A polynomial with monomials (p_j, theta_j) is the convex piecewise-linear
function x -> max_j (p_j * x + theta_j); exponents are arbitrary reals and
coefficients are finite (nonzero) scalars.  A rational function is a tropical
quotient of two polynomials, i.e. a difference of convex piecewise-linear
functions.

``min_poly`` evaluates the closed-form minimum over x of a polynomial with
exponents of mixed sign

    mu = max over pairs p_j < 0 < p_k of a convex combination of the two
         coefficients with weights -p_k/(p_j - p_k) and p_j/(p_j - p_k),
         joined with max over theta_j having p_j = 0,

together with the interval of minimizers

    max_{p_j < 0} (mu - theta_j)/p_j  <=  x  <=  min_{p_j > 0} (mu - theta_j)/p_j.

This costs O(N^2).  When every exponent is strictly one-signed the infimum is
ZERO and is not attained; that case is reported, not raised.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .maxplus import ZERO, DomainError, MaxPlusScalar, ensure_scalar
from .linalg import TropMatrix

#: Exponents within this distance of 0 are classified as zero exponents.
#: The exponent polynomials built by the clustering stage always carry an
#: exact 0 exponent; float dust must not disqualify it.
ZERO_EXPONENT_TOL = 1e-12


@dataclass(frozen=True)
class PuiseuxPoly:
    """Canonical max-plus polynomial: monomials sorted by exponent, duplicate
    exponents merged by coefficient max."""

    monomials: tuple[tuple[float, float], ...]

    def __init__(self, monomials: Iterable[tuple[float, float]]):
        merged: dict[float, float] = {}
        for p, t in monomials:
            p = float(p)
            t = float(t)
            if math.isnan(p) or math.isinf(p):
                raise ValueError(f"exponent must be a finite real, got {p!r}")
            if math.isnan(t) or math.isinf(t):
                raise DomainError(f"coefficient must be finite (nonzero), got {t!r}")
            if p in merged:
                if t > merged[p]:
                    merged[p] = t
            else:
                merged[p] = t
        if not merged:
            raise ValueError("a polynomial needs at least one monomial")
        object.__setattr__(self, "monomials", tuple(sorted(merged.items())))

    @property
    def exponents(self) -> tuple[float, ...]:
        return tuple(p for p, _ in self.monomials)

    @property
    def coefficients(self) -> tuple[float, ...]:
        return tuple(t for _, t in self.monomials)

    def __len__(self) -> int:
        return len(self.monomials)


def poly_sum(polys: Iterable[PuiseuxPoly]) -> PuiseuxPoly:
    """Tropical sum (pointwise max) of polynomials: concatenate and merge."""
    mons: list[tuple[float, float]] = []
    for poly in polys:
        mons.extend(poly.monomials)
    return PuiseuxPoly(mons)


@dataclass(frozen=True)
class PuiseuxRational:
    """Tropical quotient numerator / denominator."""

    numerator: PuiseuxPoly
    denominator: PuiseuxPoly


def eval_poly(poly: PuiseuxPoly, x: MaxPlusScalar) -> float:
    """Evaluate max_j (p_j * x + theta_j); defined for x above ZERO."""
    if x is ZERO:
        raise DomainError("polynomials are evaluated at x > ZERO")
    x = ensure_scalar(x)
    return max(p * x + t for p, t in poly.monomials)


def eval_rational(r: PuiseuxRational, x: MaxPlusScalar) -> float:
    """Evaluate the quotient: numerator(x) - denominator(x)."""
    return eval_poly(r.numerator, x) - eval_poly(r.denominator, x)


def vandermonde(xs: Sequence[MaxPlusScalar], exponents: Sequence[float]) -> TropMatrix:
    """Monomial-value matrix with entries x_i ** p_j = p_j * x_i."""
    rows = []
    for x in xs:
        if x is ZERO:
            raise DomainError("sample points must be nonzero")
        x = ensure_scalar(x)
        rows.append([float(p) * x for p in exponents])
    return TropMatrix(rows)


@dataclass(frozen=True)
class PolyMinimum:
    """Minimum value of a polynomial and the closed interval attaining it.

    ``lower``/``upper`` of None mean unbounded on that side.  ``attained`` is
    False only for one-signed exponent sets, where the infimum is ZERO and no
    minimizer exists; ``mu`` is then ZERO.
    """

    mu: MaxPlusScalar
    lower: float | None
    upper: float | None
    attained: bool = True

    def representative(self) -> float:
        """One minimizer: the interval midpoint, or the finite endpoint when
        one side is unbounded, or 0 when both are."""
        if not self.attained:
            raise ValueError("unattained minimum has no representative point")
        if self.lower is not None and self.upper is not None:
            return (self.lower + self.upper) / 2
        if self.lower is not None:
            return self.lower
        if self.upper is not None:
            return self.upper
        return 0.0


def _split_by_sign(
    exponents: np.ndarray, coefficients: np.ndarray
) -> tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
    neg = exponents < -ZERO_EXPONENT_TOL
    pos = exponents > ZERO_EXPONENT_TOL
    zer = ~(neg | pos)
    return (
        exponents[neg],
        coefficients[neg],
        exponents[pos],
        coefficients[pos],
        coefficients[zer],
    )


def pairwise_minimum_value(
    neg_p: np.ndarray,
    neg_t: np.ndarray,
    pos_p: np.ndarray,
    pos_t: np.ndarray,
    zero_t: np.ndarray,
) -> float:
    """The mu formula on sign-split monomial arrays; -inf if all sets that
    contribute are empty (the unattained case)."""
    mu = -math.inf
    if neg_p.size and pos_p.size:
        span = neg_p[:, None] - pos_p[None, :]
        vals = neg_t[:, None] * (-pos_p[None, :] / span) + pos_t[None, :] * (
            neg_p[:, None] / span
        )
        mu = float(vals.max())
    if zero_t.size:
        mz = float(zero_t.max())
        if mz > mu:
            mu = mz
    return mu


def min_poly(poly: PuiseuxPoly) -> PolyMinimum:
    """Minimize a polynomial over x > ZERO by the closed form above."""
    ps = np.array(poly.exponents, dtype=float)
    ts = np.array(poly.coefficients, dtype=float)
    neg_p, neg_t, pos_p, pos_t, zero_t = _split_by_sign(ps, ts)
    mu = pairwise_minimum_value(neg_p, neg_t, pos_p, pos_t, zero_t)
    if mu == -math.inf:
        return PolyMinimum(ZERO, None, None, attained=False)
    lower = float(((mu - neg_t) / neg_p).max()) if neg_p.size else None
    upper = float(((mu - pos_t) / pos_p).min()) if pos_p.size else None
    return PolyMinimum(mu, lower, upper)
