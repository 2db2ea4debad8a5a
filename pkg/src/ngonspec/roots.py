"""Real roots in (0, 2) of the fixed recurrence-family polynomials and of
the per-eigenvalue transfer equation.

Every polynomial handled here has only real, simple roots, all strictly
inside (0, 2), so isolation is sign-change bracketing on a uniform grid
followed by bisection and one guarded Newton step. A batched variant
solves the transfer equation for many eigenvalues at once; its
coefficients are affine in the eigenvalue, which makes the whole sweep a
handful of vectorized polynomial evaluations.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import aseries

GRID_PER_ROOT = 8
BISECT_STEPS = 48  # brackets start at width <= 1/4, so final width < 1e-15


class RootIsolationError(RuntimeError):
    """Bracketing found fewer roots than the degree demands."""


class FamilyKind(enum.Enum):
    ODD_ZERO = "odd-zero"      # a_{(n-1)/2} = 0
    ODD_PLUS = "odd-plus"      # a_{(n-1)/2} + a_{(n-3)/2} = 0
    ODD_MINUS = "odd-minus"    # a_{(n-1)/2} - a_{(n-3)/2} = 0
    EVEN_PLUS = "even-plus"    # a_{n/2} + a_{n/2-1} = 0
    EVEN_ZERO = "even-zero"    # a_{n/2-1} = 0
    EVEN_MINUS = "even-minus"  # a_{n/2} - a_{n/2-2} = 0

    @property
    def odd(self) -> bool:
        return self in (FamilyKind.ODD_ZERO, FamilyKind.ODD_PLUS,
                        FamilyKind.ODD_MINUS)


@dataclass(frozen=True)
class RootFamily:
    kind: FamilyKind
    n: int

    def __post_init__(self):
        if self.n < 2:
            raise ValueError(f"polygon parameter must be at least 2, got {self.n}")
        if self.kind.odd != bool(self.n % 2):
            raise ValueError(f"family {self.kind.value} does not match n={self.n}")


@dataclass(frozen=True)
class RootSet:
    """Sorted real roots of one polynomial, with checksums over the roots."""

    label: str
    roots: tuple[float, ...]
    reciprocal_sum: float
    product: float


def _checksummed(label: str, roots) -> RootSet:
    ordered = tuple(sorted(float(r) for r in roots))
    reciprocal = sum(1.0 / r for r in ordered)
    product = 1.0
    for r in ordered:
        product *= r
    return RootSet(label, ordered, reciprocal, product)


def family_polynomial(family: RootFamily) -> list[Fraction]:
    """Exact coefficients of the family's defining polynomial."""
    n = family.n
    kind = family.kind
    if kind is FamilyKind.ODD_ZERO:
        terms = [(1, (n - 1) // 2)]
    elif kind is FamilyKind.ODD_PLUS:
        terms = [(1, (n - 1) // 2), (1, (n - 3) // 2)]
    elif kind is FamilyKind.ODD_MINUS:
        terms = [(1, (n - 1) // 2), (-1, (n - 3) // 2)]
    elif kind is FamilyKind.EVEN_PLUS:
        terms = [(1, n // 2), (1, n // 2 - 1)]
    elif kind is FamilyKind.EVEN_ZERO:
        terms = [(1, n // 2 - 1)]
    else:
        terms = [(1, n // 2), (-1, n // 2 - 2)]
    return aseries.linear_combination(terms)


def _poly_floats(coeffs) -> np.ndarray:
    return np.asarray([float(c) for c in coeffs], dtype=float)


def _eval_poly(coeffs: np.ndarray, x):
    """Horner evaluation of ascending coefficients, vectorized over x."""
    out = np.full_like(x, coeffs[-1], dtype=float)
    for c in coeffs[-2::-1]:
        out = out * x + c
    return out


def _refine(coeffs: np.ndarray, lo, hi, flo):
    """Bisect sign-change brackets, then apply one guarded Newton step."""
    slo = np.sign(flo)
    for _ in range(BISECT_STEPS):
        mid = 0.5 * (lo + hi)
        fmid = _eval_poly(coeffs, mid)
        same = np.sign(fmid) == slo
        lo = np.where(same, mid, lo)
        hi = np.where(same, hi, mid)
    mid = 0.5 * (lo + hi)
    deriv = coeffs[1:] * np.arange(1, coeffs.size)
    if deriv.size == 0:
        return mid
    fmid = _eval_poly(coeffs, mid)
    fderiv = _eval_poly(deriv, mid)
    with np.errstate(divide="ignore", invalid="ignore"):
        newton = mid - fmid / fderiv
    ok = np.isfinite(newton) & (newton >= lo) & (newton <= hi)
    return np.where(ok, newton, mid)


def isolate_roots(coeffs, expected: int, lo: float = 0.0,
                  hi: float = 2.0) -> tuple[float, ...]:
    """All `expected` real roots of the polynomial inside [lo, hi], sorted.

    Samples 8 points per expected root, brackets sign changes, and retries
    with a four times denser grid (up to three times) when clustered roots
    hide a sign change.
    """
    if expected == 0:
        return ()
    cf = _poly_floats(coeffs)
    found: list[float] = []
    for attempt in range(4):
        count = GRID_PER_ROOT * expected * 4 ** attempt + 1
        xs = np.linspace(lo, hi, count)
        vals = _eval_poly(cf, xs)
        found = [float(x) for x in xs[vals == 0.0]]
        sign = np.sign(vals)
        idx = np.nonzero(sign[:-1] * sign[1:] < 0)[0]
        if idx.size:
            refined = _refine(cf, xs[idx], xs[idx + 1], vals[idx])
            found.extend(float(r) for r in np.atleast_1d(refined))
        if len(found) == expected:
            return tuple(sorted(found))
    raise RootIsolationError(
        f"found {len(found)} of {expected} roots for {cf.tolist()}")


def roots_of_family(family: RootFamily) -> RootSet:
    """All real roots of the family polynomial; count equals its degree."""
    poly = family_polynomial(family)
    degree = max(len(poly) - 1, 0)
    roots = isolate_roots(poly, degree)
    outside = [r for r in roots if not 0.0 < r < 2.0]
    if outside:
        raise RootIsolationError(f"roots escaped (0, 2): {outside}")
    return _checksummed(f"{family.kind.value} n={family.n}", roots)


def lambda_polynomial(n: int, lam) -> list[Fraction]:
    """Exact cleared-denominator transfer polynomial for eigenvalue lam.

    Its roots are the new eigenvalues that the base eigenvalue lam spawns:
    (n+1)/2 of them for odd n, n/2 for even n.
    """
    if n < 2:
        raise ValueError(f"polygon parameter must be at least 2, got {n}")
    lam = Fraction(lam)
    if lam <= 0 or lam >= 2:
        raise ValueError(
            f"eigenvalue must lie strictly inside (0, 2), got {float(lam)}")
    if n % 2:
        m = (n - 1) // 2
        terms = [(1, m + 1), (-1, m - 1), (lam - 1, m), (1 - lam, m - 2)]
    else:
        m = n // 2
        terms = [(1, m), (lam - 2, m - 1), (1 - lam, m - 2)]
    return aseries.linear_combination(terms)


def lambda_pq(n: int) -> tuple[np.ndarray, np.ndarray]:
    """Float coefficient pair (P, Q): the transfer polynomial is P + lam*Q."""
    if n < 2:
        raise ValueError(f"polygon parameter must be at least 2, got {n}")
    if n % 2:
        m = (n - 1) // 2
        p = aseries.linear_combination([(1, m + 1), (-1, m - 1), (-1, m),
                                        (1, m - 2)])
        q = aseries.linear_combination([(1, m), (-1, m - 2)])
    else:
        m = n // 2
        p = aseries.linear_combination([(1, m), (-2, m - 1), (1, m - 2)])
        q = aseries.linear_combination([(1, m - 1), (-1, m - 2)])
    degree = (n + 1) // 2
    pf = np.zeros(degree + 1)
    qf = np.zeros(degree + 1)
    pf[:len(p)] = [float(c) for c in p]
    qf[:len(q)] = [float(c) for c in q]
    return pf, qf


def solve_lambda_equation(n: int, lam) -> RootSet:
    """All transfer-equation roots for one eigenvalue, sorted, inside (0, 2)."""
    poly = lambda_polynomial(n, lam)
    expected = (n + 1) // 2
    if len(poly) - 1 != expected:
        raise RootIsolationError(
            f"transfer polynomial degree {len(poly) - 1}, expected {expected}")
    roots = isolate_roots(poly, expected)
    outside = [r for r in roots if not 0.0 < r < 2.0]
    if outside:
        raise RootIsolationError(f"roots escaped (0, 2): {outside}")
    return _checksummed(f"lambda={float(lam):.17g} n={n}", roots)


def solve_lambda_many(n: int, lams) -> np.ndarray:
    """Transfer-equation roots for every lam at once; shape (len(lams), deg).

    Rows keep the order of lams; roots within a row are ascending. Rows
    whose grid sweep is ambiguous (a sample hits a root exactly, or a sign
    change is missing) fall back to the scalar solver.
    """
    lams = np.asarray(lams, dtype=float)
    degree = (n + 1) // 2
    out = np.empty((lams.size, degree))
    if lams.size == 0:
        return out
    pf, qf = lambda_pq(n)
    xs = np.linspace(0.0, 2.0, GRID_PER_ROOT * degree + 1)
    pv = _eval_poly(pf, xs)
    qv = _eval_poly(qf, xs)
    vals = pv[None, :] + lams[:, None] * qv[None, :]
    sign = np.sign(vals)
    change = sign[:, :-1] * sign[:, 1:] < 0
    easy = (change.sum(axis=1) == degree) & ~(sign == 0).any(axis=1)
    if easy.any():
        rows, cols = np.nonzero(change[easy])
        lo = xs[cols]
        hi = xs[cols + 1]
        lam_flat = lams[easy][rows]
        slo = np.sign(vals[easy][rows, cols])
        for _ in range(BISECT_STEPS):
            mid = 0.5 * (lo + hi)
            fmid = _eval_poly(pf, mid) + lam_flat * _eval_poly(qf, mid)
            same = np.sign(fmid) == slo
            lo = np.where(same, mid, lo)
            hi = np.where(same, hi, mid)
        mid = 0.5 * (lo + hi)
        dp = pf[1:] * np.arange(1, pf.size)
        dq = qf[1:] * np.arange(1, qf.size)
        fmid = _eval_poly(pf, mid) + lam_flat * _eval_poly(qf, mid)
        fderiv = _eval_poly(dp, mid) + lam_flat * _eval_poly(dq, mid)
        with np.errstate(divide="ignore", invalid="ignore"):
            newton = mid - fmid / fderiv
        ok = np.isfinite(newton) & (newton >= lo) & (newton <= hi)
        out[easy] = np.where(ok, newton, mid).reshape(-1, degree)
    for i in np.nonzero(~easy)[0]:
        out[i] = solve_lambda_equation(n, float(lams[i])).roots
    return out


def vieta_sums(poly) -> tuple[Fraction, Fraction]:
    """Exact (sum of reciprocal roots, product of roots) from coefficients.

    Trailing zero coefficients are trimmed first; a zero constant term is
    rejected because a root at zero has no reciprocal.
    """
    coeffs = [Fraction(c) for c in poly]
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    if not coeffs or coeffs[0] == 0:
        raise ValueError("constant coefficient is zero (zero root present)")
    degree = len(coeffs) - 1
    product = Fraction((-1) ** degree) * coeffs[0] / coeffs[-1]
    reciprocal = -coeffs[1] / coeffs[0] if degree >= 1 else Fraction(0)
    return reciprocal, product
