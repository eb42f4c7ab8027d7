"""Weak and tilt stability numerics.

Charges follow the two-step tilting construction: the weak charge
Z_H = -c_1 d + i c_0 d on the standard heart, and for alpha > 0, beta real

    Z_{alpha,beta} = ((alpha^2 - beta^2)/2 c_0 d + beta c_1 d - c_2 d)
                     + i alpha (c_1 - beta c_0) d,

with slopes mu = -Re/Im (set to +infinity when the imaginary part
vanishes).  Shifting an object by [k] multiplies both charges by (-1)^k;
slopes are shift invariant.  Membership of a shifted semistable sheaf in
the doubly tilted heart reduces to four slope-inequality cases, evaluated
verbatim by heart_case.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exact import DomainError, QuadNumber, rat
from .variety import (ChernVector, VarietyDesc, euler_pairing,
                      line_bundle_class)


@dataclass(frozen=True)
class TiltParams:
    alpha: Fraction
    beta: Fraction
    mu: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "alpha", rat(self.alpha))
        object.__setattr__(self, "beta", rat(self.beta))
        object.__setattr__(self, "mu", rat(self.mu))
        if self.alpha <= 0:
            raise DomainError("alpha must be positive")


@dataclass(frozen=True)
class Charge:
    re: Fraction
    im: Fraction

    def __add__(self, other: "Charge") -> "Charge":
        return Charge(self.re + other.re, self.im + other.im)

    def __neg__(self) -> "Charge":
        return Charge(-self.re, -self.im)

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0


@dataclass(frozen=True)
class ExtSlope:
    """A rational slope or +infinity, totally ordered with +infinity on top."""

    value: Fraction | None    # None encodes +infinity

    @classmethod
    def finite(cls, q) -> "ExtSlope":
        return cls(rat(q))

    @classmethod
    def infinity(cls) -> "ExtSlope":
        return cls(None)

    @property
    def is_infinite(self) -> bool:
        return self.value is None

    def gt(self, threshold) -> bool:
        return True if self.is_infinite else self.value > rat(threshold)

    def leq(self, threshold) -> bool:
        return False if self.is_infinite else self.value <= rat(threshold)

    def __str__(self):
        return "inf" if self.is_infinite else str(self.value)


def _abc(x: VarietyDesc, v: ChernVector) -> tuple[Fraction, Fraction, Fraction]:
    if len(v) < 3:
        raise DomainError("class needs at least coefficients c0, c1, c2")
    d = x.degree
    return v[0] * d, v[1] * d, v[2] * d


def charge_h(x: VarietyDesc, v: ChernVector, shift: int = 0) -> Charge:
    """Z_H = -c_1 H^{n-1} + i c_0 H^n, times (-1)^shift."""
    a0, a1, _ = _abc(x, v)
    sign = (-1) ** (shift % 2)
    return Charge(sign * -a1, sign * a0)


def slope_h(x: VarietyDesc, v: ChernVector) -> ExtSlope:
    a0, a1, _ = _abc(x, v)
    if a0 == 0:
        return ExtSlope.infinity()
    return ExtSlope.finite(a1 / a0)


def charge_tilt(x: VarietyDesc, v: ChernVector, shift: int,
                p: TiltParams) -> Charge:
    a0, a1, a2 = _abc(x, v)
    al, be = p.alpha, p.beta
    re = (al * al - be * be) / 2 * a0 + be * a1 - a2
    im = al * (a1 - be * a0)
    sign = (-1) ** (shift % 2)
    return Charge(sign * re, sign * im)


def slope_tilt(x: VarietyDesc, v: ChernVector, p: TiltParams) -> ExtSlope:
    """mu_{alpha,beta} = -Re/Im of the tilt charge; shift invariant."""
    z = charge_tilt(x, v, 0, p)
    if z.im == 0:
        return ExtSlope.infinity()
    return ExtSlope.finite(-z.re / z.im)


def discriminant_h(x: VarietyDesc, v: ChernVector) -> Fraction:
    """Delta_H = (c_1 H^{n-1})^2 - 2 (c_0 H^n)(c_2 H^{n-2})."""
    a0, a1, a2 = _abc(x, v)
    return a1 * a1 - 2 * a0 * a2


@dataclass(frozen=True)
class SlopeCheck:
    name: str
    value: ExtSlope
    threshold: Fraction
    satisfied: bool


@dataclass(frozen=True)
class HeartVerdict:
    case_id: int | None      # 1..4, or None for not-in-heart
    shift_of_sheaf: int
    slope_checks: tuple[SlopeCheck, ...]

    @property
    def in_heart(self) -> bool:
        return self.case_id is not None


def heart_case(x: VarietyDesc, v: ChernVector, shift: int,
               p: TiltParams) -> HeartVerdict:
    """Membership of sheaf[shift] in the doubly tilted heart.

    The caller asserts that the object is semistable for both the weak and
    the tilt charge; under that hypothesis membership is equivalent to one
    of four slope-inequality cases, depending on the shift at which the
    underlying sheaf sits:

      shift 0, case 1:  mu_H > beta  and  mu_tilt > mu
      shift 1, case 2:  mu_H <= beta and  mu_tilt > mu
      shift 1, case 3:  mu_H > beta  and  mu_tilt <= mu
      shift 2, case 4:  mu_H <= beta and  mu_tilt <= mu
    """
    if shift not in (0, 1, 2):
        raise DomainError("shift out of range for double tilt")
    mh = slope_h(x, v)
    mt = slope_tilt(x, v, p)
    h_gt = mh.gt(p.beta)
    h_leq = mh.leq(p.beta)
    t_gt = mt.gt(p.mu)
    t_leq = mt.leq(p.mu)
    if shift == 0:
        checks = (SlopeCheck("mu_H > beta", mh, p.beta, h_gt),
                  SlopeCheck("mu_tilt > mu", mt, p.mu, t_gt))
        case = 1 if (h_gt and t_gt) else None
    elif shift == 1:
        if h_leq and t_gt:
            case = 2
            checks = (SlopeCheck("mu_H <= beta", mh, p.beta, True),
                      SlopeCheck("mu_tilt > mu", mt, p.mu, True))
        elif h_gt and t_leq:
            case = 3
            checks = (SlopeCheck("mu_H > beta", mh, p.beta, True),
                      SlopeCheck("mu_tilt <= mu", mt, p.mu, True))
        else:
            case = None
            checks = (SlopeCheck("mu_H <= beta", mh, p.beta, h_leq),
                      SlopeCheck("mu_tilt > mu", mt, p.mu, t_gt))
    else:
        checks = (SlopeCheck("mu_H <= beta", mh, p.beta, h_leq),
                  SlopeCheck("mu_tilt <= mu", mt, p.mu, t_leq))
        case = 4 if (h_leq and t_leq) else None
    return HeartVerdict(case_id=case, shift_of_sheaf=shift,
                        slope_checks=checks)


def zero_charge_class(x: VarietyDesc, v: ChernVector) -> bool:
    """True iff Z_{alpha,beta}(v) = 0 for all parameters, i.e. c0 = c1 = c2 = 0.

    Requires the descriptor flag that low-degree cohomology is generated by
    H; under it a heart object with vanishing charge is a sheaf supported in
    codimension at least 3.
    """
    if not x.low_deg_H_generated:
        raise DomainError("hypothesis not satisfied")
    if len(v) < 3:
        raise DomainError("class needs at least coefficients c0, c1, c2")
    return v[0] == 0 and v[1] == 0 and v[2] == 0


# -- induced stability check --------------------------------------------------


@dataclass(frozen=True)
class BlmsItem:
    condition: int
    label: str
    passed: bool
    detail: str


@dataclass(frozen=True)
class BlmsReport:
    passed: bool
    items: tuple[BlmsItem, ...]


def _line_bundle_degrees(x: VarietyDesc, members) -> list[int]:
    members = getattr(members, "members", members)   # Collection or iterable
    ks = []
    for m in members:
        x.check_class(m)
        if m[0] != 1 or m[1].denominator != 1:
            raise DomainError("semistability not certified")
        k = int(m[1])
        if m != line_bundle_class(x, k):
            raise DomainError("semistability not certified")
        ks.append(k)
    return ks


def blms_check(x: VarietyDesc, members, p: TiltParams) -> BlmsReport:
    """Induced-stability checklist for the right orthogonal of line bundles.

    Members must be line-bundle classes: those have Delta_H = 0, which
    certifies the joint semistability hypothesis the heart criterion needs.
    Three conditions are checked, with per-item detail:

      (1) every member lies in the heart at shift 0 and its Serre image,
          shifted back by one, lies in the heart (the twist by -index at
          shift n - 1);
      (2) every member has nonzero tilt charge;
      (3) nonzero lattice classes with identically zero charge pair
          nontrivially with ch O, so the charge restricted to the residual
          lattice has trivial kernel.
    """
    ks = _line_bundle_degrees(x, members)
    items: list[BlmsItem] = []
    serre_shift = x.dim - 1
    for k in ks:
        verdict = heart_case(x, line_bundle_class(x, k), 0, p)
        items.append(BlmsItem(
            1, f"O({k}) in heart at shift 0", verdict.in_heart,
            _checks_text(verdict)))
        tw = heart_case(x, line_bundle_class(x, k - x.index), serre_shift, p)
        items.append(BlmsItem(
            1, f"O({k - x.index})[{serre_shift}] in heart", tw.in_heart,
            _checks_text(tw)))
    for k in ks:
        z = charge_tilt(x, line_bundle_class(x, k), 0, p)
        items.append(BlmsItem(
            2, f"Z(O({k})) nonzero", not z.is_zero(),
            f"Z = {z.re} + {z.im}*i"))
    if x.low_deg_H_generated:
        gen = ChernVector([Fraction(0)] * x.dim
                          + [Fraction(1, x.denoms[x.dim])])
        pairing = euler_pairing(x, line_bundle_class(x, 0), gen)
        ok = pairing != 0
        detail = (f"chi(O, minimal zero-charge class) = {pairing}")
    else:
        ok = False
        detail = "low-degree cohomology flag not set"
    items.append(BlmsItem(3, "zero-charge classes pair with O", ok, detail))
    return BlmsReport(passed=all(i.passed for i in items), items=tuple(items))


def _checks_text(verdict: HeartVerdict) -> str:
    parts = [f"{c.name}: {c.value} vs {c.threshold}"
             f" [{'ok' if c.satisfied else 'fail'}]"
             for c in verdict.slope_checks]
    case = verdict.case_id if verdict.in_heart else "not-in-heart"
    return f"case {case}; " + "; ".join(parts)


# -- exact alpha intervals ----------------------------------------------------


@dataclass(frozen=True)
class AlphaInterval:
    """An interval of admissible alpha with exact endpoints.

    lo/hi are QuadNumber (hi None means unbounded above); the closed right
    end arises when the binding inequality is non-strict.
    """

    lo: QuadNumber
    hi: QuadNumber | None
    lo_open: bool = True
    hi_open: bool = True

    def contains(self, alpha) -> bool:
        a = QuadNumber(rat(alpha))
        if (a < self.lo) or (self.lo_open and a == self.lo):
            return False
        if self.hi is None:
            return True
        if a > self.hi or (self.hi_open and a == self.hi):
            return False
        return True

    def text(self) -> str:
        hi = "inf" if self.hi is None else _quad_text(self.hi)
        rb = ")" if self.hi_open else "]"
        return f"({_quad_text(self.lo)}, {hi}{rb}"


def _quad_text(q: QuadNumber) -> str:
    if q.is_rational:
        return str(q.a)
    s = f"sqrt({q.F})" if q.b == 1 else f"{q.b}*sqrt({q.F})"
    return s if q.a == 0 else f"{q.a} + {s}"


def alpha_range(x: VarietyDesc, members, beta) -> list[AlphaInterval]:
    """Exact set of alpha > 0 where blms_check passes, at fixed beta.

    Every alpha-dependent condition is a quadratic inequality in alpha with
    rational coefficients; each is solved exactly (the threshold sqrt(T) is
    rational whenever T is a rational square) and the one-sided solution
    sets are intersected.  Constant conditions can empty the range.
    """
    be = rat(beta)
    ks = _line_bundle_degrees(x, members)
    serre_shift = x.dim - 1
    if ks and serre_shift not in (0, 1, 2):
        raise DomainError("shift out of range for double tilt")
    hi: QuadNumber | None = None
    hi_open = True

    def tighten(bound: QuadNumber, strict: bool):
        nonlocal hi, hi_open
        if hi is None or bound < hi:
            hi, hi_open = bound, strict
        elif bound == hi:
            hi_open = hi_open or strict

    for k in ks:
        # member at shift 0, case 1: mu_H > beta and alpha < k - beta
        if not Fraction(k) > be:
            return []
        tighten(QuadNumber(Fraction(k) - be), True)
        # Serre side at shift n-1, case 4: mu_H <= beta and alpha <= beta - (k-r)
        m = k - x.index
        if not Fraction(m) <= be:
            return []
        if Fraction(m) == be:
            return []   # tilt slope is +infinity, never <= 0
        tighten(QuadNumber(be - m), False)
        # charges of both objects have Im = alpha (k' - beta) d != 0 here
    if x.low_deg_H_generated:
        gen = ChernVector([Fraction(0)] * x.dim
                          + [Fraction(1, x.denoms[x.dim])])
        if euler_pairing(x, line_bundle_class(x, 0), gen) == 0:
            return []
    else:
        return []
    if hi is not None and hi <= 0:
        return []
    return [AlphaInterval(lo=QuadNumber(0), hi=hi, lo_open=True,
                          hi_open=hi_open)]
