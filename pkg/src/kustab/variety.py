"""Variety descriptors and the numerical K-theory engine.

A variety is described by the data that Riemann-Roch needs: dimension n,
degree d = H^n, the Todd class written as sum t_i H^i, the denominators of
the numerical lattice (+) Z * H^i / lambda_i, and the Fano index r with
omega = O(-r).  Chern characters live in ChernVector, the universal carrier
for classes sum c_i H^i, and the Euler pairing is

    chi(v, w) = d * [H^n coefficient of v~ * w * td],

where v~ negates the odd-degree coefficients of v.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .exact import DomainError, RatMatrix, rat


class ChernVector:
    """Coefficients (c_0, ..., c_k) of a class sum c_i H^i.

    Full classes on an n-fold have length n + 1; the tilt and wall modules
    also accept vectors truncated to (c_0, c_1, c_2).

    >>> ChernVector([2, -1, 0, "1/12"])[3]
    Fraction(1, 12)
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        self.coeffs = tuple(rat(x) for x in coeffs)
        if not self.coeffs:
            raise DomainError("empty class")

    def __len__(self):
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __getitem__(self, i):
        return self.coeffs[i]

    def __eq__(self, other):
        if isinstance(other, ChernVector):
            return self.coeffs == other.coeffs
        if isinstance(other, (tuple, list)):
            return self.coeffs == tuple(rat(x) for x in other)
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        if len(other) != len(self):
            raise DomainError("dimension mismatch")
        return ChernVector(a + b for a, b in zip(self.coeffs, other))

    def __sub__(self, other):
        if len(other) != len(self):
            raise DomainError("dimension mismatch")
        return ChernVector(a - b for a, b in zip(self.coeffs, other))

    def __neg__(self):
        return ChernVector(-a for a in self.coeffs)

    def __mul__(self, scalar):
        s = rat(scalar)
        return ChernVector(a * s for a in self.coeffs)

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def truncated(self, k: int) -> "ChernVector":
        if len(self.coeffs) < k + 1:
            raise DomainError("class too short to truncate")
        return ChernVector(self.coeffs[: k + 1])

    def dual(self) -> "ChernVector":
        """Negate odd-degree coefficients (the class of the dual object)."""
        return ChernVector(c if i % 2 == 0 else -c
                           for i, c in enumerate(self.coeffs))

    def text(self) -> str:
        return ",".join(str(c) for c in self.coeffs)

    def __repr__(self):
        return f"ChernVector({self.text()})"


@dataclass(frozen=True)
class VarietyDesc:
    """Numerical data of a polarized variety (X, H) of Picard rank one."""

    name: str
    dim: int
    degree: int
    todd: tuple[Fraction, ...]
    denoms: tuple[int, ...]
    index: int
    low_deg_H_generated: bool = True

    def __post_init__(self):
        object.__setattr__(self, "todd", tuple(rat(t) for t in self.todd))
        object.__setattr__(self, "denoms", tuple(int(d) for d in self.denoms))
        if self.dim < 1 or self.degree < 1:
            raise DomainError("dimension and degree must be positive")
        if len(self.todd) != self.dim + 1 or len(self.denoms) != self.dim + 1:
            raise DomainError("todd and denoms must have length dim + 1")
        if any(d < 1 for d in self.denoms):
            raise DomainError("denominators must be positive")
        if self.todd[0] != 1:
            warnings.warn(f"{self.name}: todd[0] = {self.todd[0]} != 1")
        if 2 * self.todd[1] != self.index:
            warnings.warn(
                f"{self.name}: 2*todd[1] = {2 * self.todd[1]} "
                f"inconsistent with index {self.index}")
        chi_o = self.todd[self.dim] * self.degree
        if chi_o.denominator != 1:
            warnings.warn(f"{self.name}: chi(O) = {chi_o} is not an integer")

    def check_class(self, v: ChernVector) -> ChernVector:
        if len(v) != self.dim + 1:
            raise DomainError(
                f"wrong arity: {self.name} needs {self.dim + 1} coefficients")
        return v


PRESETS: dict[str, VarietyDesc] = {
    "p4": VarietyDesc(
        name="P4", dim=4, degree=1, index=5,
        todd=(Fraction(1), Fraction(5, 2), Fraction(35, 12),
              Fraction(25, 12), Fraction(1)),
        denoms=(1, 1, 2, 6, 24)),
    "q3": VarietyDesc(
        name="Q3", dim=3, degree=2, index=3,
        todd=(Fraction(1), Fraction(3, 2), Fraction(13, 12), Fraction(1, 2)),
        denoms=(1, 1, 2, 12)),
    "y4": VarietyDesc(
        name="Y4", dim=3, degree=4, index=2,
        todd=(Fraction(1), Fraction(1), Fraction(7, 12), Fraction(1, 4)),
        denoms=(1, 1, 2, 12)),
    "y2": VarietyDesc(
        name="Y2", dim=3, degree=2, index=2,
        todd=(Fraction(1), Fraction(1), Fraction(5, 6), Fraction(1, 2)),
        denoms=(1, 1, 2, 12)),
}

# rank-2 bundle with ch = 2 - H + H^3/12, generates the residual lattice on Q3
SPINOR_CLASS = ChernVector([2, -1, 0, Fraction(1, 12)])
SPINOR_VARIETIES = ("q3", "y4")


def get_preset(name: str) -> VarietyDesc:
    try:
        return PRESETS[name.lower()]
    except KeyError:
        raise DomainError(f"unknown variety: {name}") from None


def line_bundle_class(x: VarietyDesc, k: int) -> ChernVector:
    """ch O(k) = e^{kH}, coefficients k^i / i!."""
    return ChernVector(Fraction(k) ** i / factorial(i) for i in range(x.dim + 1))


def exp_twist(v: ChernVector, gamma) -> ChernVector:
    """Multiply a class by e^{gamma H}, truncated to the length of v.

    Twisting by ch O(k) is exp_twist(v, k); the beta-shifted character
    ch^beta = e^{-beta H} ch is exp_twist(v, -beta).
    """
    g = rat(gamma)
    n = len(v)
    exps = [g ** j / factorial(j) for j in range(n)]
    return ChernVector(
        sum(v[m - j] * exps[j] for j in range(m + 1)) for m in range(n))


def _top_coefficient(x: VarietyDesc, *classes) -> Fraction:
    # H^n coefficient of the truncated product of the given classes with td
    n = x.dim
    acc = [Fraction(0)] * (n + 1)
    acc[0] = Fraction(1)
    for cls in (*classes, x.todd):
        nxt = [Fraction(0)] * (n + 1)
        for i, a in enumerate(acc):
            if a == 0:
                continue
            for j in range(n + 1 - i):
                nxt[i + j] += a * cls[j]
        acc = nxt
    return acc[n]


def euler_pairing(x: VarietyDesc, v: ChernVector, w: ChernVector) -> Fraction:
    """chi(v, w) via Riemann-Roch."""
    x.check_class(v)
    x.check_class(w)
    return x.degree * _top_coefficient(x, v.dual(), w)


def gram_matrix(x: VarietyDesc, convention: str = "chi") -> RatMatrix:
    """Euler pairing on the basis {1, H, ..., H^n}, entry (i, j) = chi(H^i, H^j).

    convention "chi" gives the raw pairing; "paper" divides every entry by
    the degree, the normalization usual in printed tables (top classes are
    written as the numbers they integrate to).
    """
    if convention not in ("chi", "paper"):
        raise DomainError(f"unknown convention: {convention}")
    n = x.dim
    basis = [ChernVector([Fraction(i == k) for i in range(n + 1)])
             for k in range(n + 1)]
    rows = [[euler_pairing(x, bi, bj) for bj in basis] for bi in basis]
    if convention == "paper":
        rows = [[e / x.degree for e in row] for row in rows]
    return RatMatrix.from_rows(rows)


def serre_class(x: VarietyDesc, v: ChernVector) -> ChernVector:
    """Numerical Serre action: v -> (-1)^n * v * e^{-rH}."""
    sign = Fraction(-1) ** x.dim
    return sign * exp_twist(x.check_class(v), -x.index)


def serre_inverse_class(x: VarietyDesc, v: ChernVector) -> ChernVector:
    sign = Fraction(-1) ** x.dim
    return sign * exp_twist(x.check_class(v), x.index)


def serre_numeric(x: VarietyDesc) -> RatMatrix:
    """Matrix S with chi(v, S w) = chi(w, v), solved as G^-1 G^T.

    Equals the matrix of v -> (-1)^n exp_twist(v, -index) on the basis
    {1, H, ..., H^n}; the two constructions agreeing is a standing
    consistency check in the test suite.
    """
    g = gram_matrix(x, "chi")
    try:
        ginv = g.inverse()
    except DomainError:
        raise DomainError("degenerate pairing") from None
    return ginv @ g.transpose()


def in_lattice(x: VarietyDesc, v: ChernVector) -> bool:
    """True when lambda_i * c_i is an integer for every i."""
    x.check_class(v)
    return all((c * d).denominator == 1 for c, d in zip(v, x.denoms))


def to_lattice_coords(x: VarietyDesc, v: ChernVector) -> list[int]:
    if not in_lattice(x, v):
        raise DomainError("class not in lattice")
    return [int(c * d) for c, d in zip(v, x.denoms)]


def from_lattice_coords(x: VarietyDesc, coords) -> ChernVector:
    return ChernVector(Fraction(int(c), d) for c, d in zip(coords, x.denoms))
