"""Wall-and-chamber analysis for truncated classes in the (alpha, beta) plane.

For a class v with positive rank and positive reduced discriminant F, every
numerical wall of v crosses the vertical line beta_0 = mu_H(v) - sqrt(F).
At a crossing, an actual destabilizing subobject class w must satisfy the
open interval criterion

    0 < ch_1^{beta_0}(w) H^{n-1} < ch_1^{beta_0}(v) H^{n-1} = sqrt(F) c_0 H^n,

and both w and v - w must satisfy the Bogomolov-Gieseker inequality
Delta_H >= 0.  The no-wall certificate settles the rational-beta_0 case by
a gcd computation on the value set; wall_scan enumerates the finite set of
candidate classes passing all filters inside given rank bounds.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

from .exact import DomainError, QuadNumber, rat
from .variety import ChernVector, VarietyDesc


@dataclass(frozen=True)
class BetaZero:
    F: Fraction
    beta0: QuadNumber
    bound: QuadNumber   # sqrt(F) * c_0 * degree


@dataclass(frozen=True)
class NoWallCertificate:
    beta0: BetaZero
    lattice_step: Fraction
    conclusion: str


@dataclass(frozen=True)
class WallCircle:
    """Solution locus of a tilt-slope equality in the half plane alpha > 0."""

    kind: str                           # circle | vertical-line | empty | degenerate
    center_beta: Fraction | None = None
    radius_sq: Fraction | None = None
    line_beta: Fraction | None = None
    witness: ChernVector | None = field(default=None, compare=False)
    witnesses: tuple[ChernVector, ...] = field(default=(), compare=False)


def _pairing_numbers(x: VarietyDesc, v: ChernVector):
    if len(v) < 3:
        raise DomainError("class needs at least coefficients c0, c1, c2")
    d = x.degree
    return v[0] * d, v[1] * d, v[2] * d


def beta_zero(x: VarietyDesc, v: ChernVector) -> BetaZero:
    """Reduced discriminant F, the line beta_0 = mu_H - sqrt(F), and the bound.

    Requires c_0 H^n > 0 and F > 0; the radical folds to a rational exactly
    when F is a rational square.
    """
    a0, a1, a2 = _pairing_numbers(x, v)
    if a0 <= 0:
        raise DomainError("rank not positive")
    f = (a1 * a1 - 2 * a0 * a2) / (a0 * a0)
    if f <= 0:
        raise DomainError("no positive discriminant")
    sqrt_f = QuadNumber(0, 1, f)
    return BetaZero(F=f, beta0=QuadNumber(a1 / a0) - sqrt_f,
                    bound=sqrt_f * a0)


def nowall_certificate(x: VarietyDesc, v: ChernVector) -> NoWallCertificate | None:
    """Certificate that no lattice class destabilizes along the beta_0 line.

    When beta_0 is rational the values ch_1^{beta_0}(w) H^{n-1} over lattice
    pairs (c0, c1) form the discrete group of multiples of a step computed
    by a gcd; the certificate holds exactly when the step is at least the
    bound, so the open interval (0, bound) contains no value.  When beta_0
    is irrational the value set meets every open interval (the radical part
    equidistributes), so no certificate exists and None is returned.
    """
    bz = beta_zero(x, v)
    if not bz.beta0.is_rational:
        return None
    b0 = bz.beta0.rational_value()
    p, q = b0.numerator, b0.denominator
    lam0, lam1 = x.denoms[0], x.denoms[1]
    num_gcd = gcd(q * lam0, abs(p) * lam1)
    step = x.degree * Fraction(num_gcd, q * lam0 * lam1)
    bound = bz.bound.rational_value()
    if step >= bound:
        return NoWallCertificate(
            beta0=bz, lattice_step=step,
            conclusion=(f"values of ch_1^(beta_0) H^(n-1) on lattice classes "
                        f"are the multiples of {step}; none lies in the open "
                        f"interval (0, {bound})"))
    return None


def first_interval_violation(x: VarietyDesc, v: ChernVector, limit: int = 8):
    """A lattice pair (c0, c1) whose beta_0 value falls in (0, bound), if any.

    Used to report why a certificate does not exist.  Returns
    (c0, c1, value) or None when the bounded search finds nothing.
    """
    bz = beta_zero(x, v)
    lam0, lam1 = x.denoms[0], x.denoms[1]
    order = [0]
    for k in range(1, limit * lam0 + 1):
        order.extend([k, -k])
    for k0 in order:
        c0w = Fraction(k0, lam0)
        lo = bz.beta0 * c0w
        hi = lo + bz.bound / x.degree
        k1 = _grid_ceil(lo, lam1, strict=True)
        k1_max = _grid_floor(hi, lam1, strict=True)
        if k1 <= k1_max:
            c1w = Fraction(k1, lam1)
            value = (QuadNumber(c1w) - bz.beta0 * c0w) * x.degree
            return c0w, c1w, value
    return None


def _wall_coefficients(x, v, w):
    a0, a1, a2 = _pairing_numbers(x, v)
    b0, b1, b2 = _pairing_numbers(x, w)
    c0 = (a0 * b1 - a1 * b0) / 2
    c1 = a2 * b0 - a0 * b2
    c2 = a1 * b2 - a2 * b1
    return c0, c1, c2


def wall_circle(x: VarietyDesc, v: ChernVector, w: ChernVector) -> WallCircle:
    """Exact locus of mu_{alpha,beta}(v) = mu_{alpha,beta}(w), alpha > 0.

    The cross-multiplied equality reduces to

        C0 (alpha^2 + beta^2) + C1 beta + C2 = 0,

    a semicircle centered on the beta axis when C0 != 0 (empty when the
    squared radius is not positive), a vertical line when only C1 != 0,
    empty when only C2 != 0, and degenerate (equal slopes everywhere)
    exactly when the truncations are proportional.
    """
    if all(c == 0 for c in v.coeffs[:3]) or all(c == 0 for c in w.coeffs[:3]):
        raise DomainError("zero truncated class")
    c0, c1, c2 = _wall_coefficients(x, v, w)
    if c0 == 0 and c1 == 0 and c2 == 0:
        return WallCircle(kind="degenerate", witness=w, witnesses=(w,))
    if c0 != 0:
        center = -c1 / (2 * c0)
        radius_sq = center * center - c2 / c0
        if radius_sq > 0:
            return WallCircle(kind="circle", center_beta=center,
                              radius_sq=radius_sq, witness=w, witnesses=(w,))
        return WallCircle(kind="empty", witness=w, witnesses=(w,))
    if c1 != 0:
        return WallCircle(kind="vertical-line", line_beta=-c2 / c1,
                          witness=w, witnesses=(w,))
    return WallCircle(kind="empty", witness=w, witnesses=(w,))


def _grid_ceil(bound, lam: int, strict: bool) -> int:
    """Smallest k with k/lam > bound (strict) or >= bound."""
    t = (bound if isinstance(bound, QuadNumber) else QuadNumber(rat(bound))) * lam
    f = t.floor()
    if t == f:
        return f + 1 if strict else f
    return f + 1


def _grid_floor(bound, lam: int, strict: bool) -> int:
    """Largest k with k/lam < bound (strict) or <= bound."""
    t = (bound if isinstance(bound, QuadNumber) else QuadNumber(rat(bound))) * lam
    f = t.floor()
    if t == f:
        return f - 1 if strict else f
    return f


def _crossing_threshold(x, v, bz, c0w, c1w):
    """Affine condition in c2 for the circle of (v, w) to cross beta_0 at alpha > 0.

    radius^2 - (beta_0 - center)^2 = -C2/C0 + 2 beta_0 center - beta_0^2 is
    affine in c2 of w; returns (coefficient sign, threshold) for f > 0.
    """
    def f_at(c2w):
        w = ChernVector([c0w, c1w, c2w])
        c0, c1, c2 = _wall_coefficients(x, v, w)
        center = -c1 / (2 * c0)
        return (QuadNumber(-c2 / c0) + 2 * bz.beta0 * center
                - bz.beta0 * bz.beta0)

    p = f_at(Fraction(0))
    q = f_at(Fraction(1)) - p
    if q.sign() == 0:
        raise DomainError("degenerate crossing condition")
    return q.sign(), (-p) / q


def _scan_cell(x, v, bz, c0w, c1w):
    """Candidate walls for one (c0, c1) lattice cell, as (key, witness) pairs.

    The cell's admissible c2 values form a finite exact interval cut out by
    the two discriminant filters and the beta_0 crossing condition; each
    surviving class contributes its circle.
    """
    lam2 = x.denoms[2]
    va0, va1, va2 = v[0], v[1], v[2]
    b0d = c0w * x.degree
    a1d = va1 * x.degree
    a0d = va0 * x.degree
    if a0d * c1w * x.degree - a1d * b0d == 0:
        return []    # vertical or degenerate direction, never crosses beta_0
    lowers: list[tuple] = []
    uppers: list[tuple] = []
    if c0w > 0:
        uppers.append((c1w * c1w / (2 * c0w), False))
    elif c0w < 0:
        lowers.append((c1w * c1w / (2 * c0w), False))
    u0, u1 = va0 - c0w, va1 - c1w
    if u0 > 0:
        lowers.append((va2 - u1 * u1 / (2 * u0), False))
    elif u0 < 0:
        uppers.append((va2 - u1 * u1 / (2 * u0), False))
    sign, threshold = _crossing_threshold(x, v, bz, c0w, c1w)
    if sign > 0:
        lowers.append((threshold, True))
    else:
        uppers.append((threshold, True))
    if not lowers or not uppers:
        raise DomainError("unbounded candidate range")
    k_lo = max(_grid_ceil(b, lam2, strict) for b, strict in lowers)
    k_hi = min(_grid_floor(b, lam2, strict) for b, strict in uppers)
    out = []
    for k2 in range(k_lo, k_hi + 1):
        w = ChernVector([c0w, c1w, Fraction(k2, lam2)])
        circle = wall_circle(x, v.truncated(2), w)
        if circle.kind != "circle":
            continue
        out.append(((circle.center_beta, circle.radius_sq), w))
    return out


def wall_scan(x: VarietyDesc, v: ChernVector, max_rank, max_c1) -> list[WallCircle]:
    """Candidate numerical walls for v from lattice classes within bounds.

    Enumerates lattice pairs (c0, c1) with |c0| <= max_rank, |c1| <= max_c1
    passing the open interval criterion at beta_0, and for each the finite
    range of c2 allowed by Delta_H(w) >= 0, Delta_H(v - w) >= 0 and the
    requirement that the wall cross the beta_0 line at alpha > 0.  Circles
    are deduplicated by (center, radius^2) with witnesses aggregated, and
    sorted by center then radius.  An empty result is consistent with a
    no-wall certificate; a nonempty one lists candidates, not proven walls.
    """
    bz = beta_zero(x, v)
    max_rank, max_c1 = rat(max_rank), rat(max_c1)
    lam0, lam1 = x.denoms[0], x.denoms[1]
    walls: dict[tuple, list[ChernVector]] = {}
    k0_hi = _grid_floor(max_rank, lam0, strict=False)
    for k0 in range(-k0_hi, k0_hi + 1):
        c0w = Fraction(k0, lam0)
        lo = bz.beta0 * c0w
        hi = lo + bz.bound / x.degree
        k1_lo = max(_grid_ceil(lo, lam1, strict=True),
                    _grid_ceil(-max_c1, lam1, strict=False))
        k1_hi = min(_grid_floor(hi, lam1, strict=True),
                    _grid_floor(max_c1, lam1, strict=False))
        for k1 in range(k1_lo, k1_hi + 1):
            for key, w in _scan_cell(x, v, bz, c0w, Fraction(k1, lam1)):
                walls.setdefault(key, []).append(w)
    out = []
    for (center, radius_sq) in sorted(walls):
        wits = sorted(walls[(center, radius_sq)], key=lambda w: w.coeffs)
        out.append(WallCircle(kind="circle", center_beta=center,
                              radius_sq=radius_sq, witness=wits[0],
                              witnesses=tuple(wits)))
    return out
