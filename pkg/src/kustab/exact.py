"""Exact scalar and linear algebra substrate.

Everything in this module is exact: rationals are ``fractions.Fraction``,
real quadratic numbers a + b*sqrt(F) carry their radicand symbolically, and
matrix kernels are computed by fraction-free row reduction.  No floating
point enters any decision path; approximations exist only to seed exact
integer floor computations, and every seeded guess is verified exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt


class DomainError(ValueError):
    """A precondition of an exact operation failed."""


def rat(x) -> Fraction:
    """Coerce ints, Fractions and 'p/q' strings to Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    raise DomainError(f"not an exact rational: {x!r}")


def is_square(q: Fraction) -> bool:
    """True when q is the square of a rational.

    >>> is_square(Fraction(1, 4))
    True
    >>> is_square(Fraction(2))
    False
    """
    if q < 0:
        return False
    p, d = q.numerator, q.denominator
    return isqrt(p) ** 2 == p and isqrt(d) ** 2 == d


def _sqrt_bounds(q: Fraction, scale: int) -> tuple[Fraction, Fraction]:
    # lo <= sqrt(q) <= hi with hi - lo <= 1/scale, all exact
    p, d = q.numerator, q.denominator
    r = isqrt(p * d * scale * scale)
    return Fraction(r, d * scale), Fraction(r + 1, d * scale)


class QuadNumber:
    """An exact real number a + b*sqrt(F) with rational a, b and F >= 0.

    Instances are normalized: whenever F is a rational square (or b = 0),
    the radical part is folded into the rational part and the stored
    radicand becomes 0.  Sign and order are decided exactly.

    >>> QuadNumber(0, 1, Fraction(1, 4))
    QuadNumber(1/2)
    >>> QuadNumber(1, 1, 2) < Fraction(5, 2)
    True
    """

    __slots__ = ("a", "b", "F")

    def __init__(self, a, b=0, F=0):
        a, b, F = rat(a), rat(b), rat(F)
        if F < 0:
            raise DomainError("negative radicand")
        if b == 0:
            F = Fraction(0)
        elif F == 0:
            b = Fraction(0)
        elif is_square(F):
            a += b * Fraction(isqrt(F.numerator), isqrt(F.denominator))
            b, F = Fraction(0), Fraction(0)
        self.a, self.b, self.F = a, b, F

    @property
    def is_rational(self) -> bool:
        return self.b == 0

    def rational_value(self) -> Fraction:
        if not self.is_rational:
            raise DomainError("not a rational value")
        return self.a

    # -- arithmetic ---------------------------------------------------------

    def _coerce(self, other) -> "QuadNumber":
        if isinstance(other, QuadNumber):
            return other
        return QuadNumber(rat(other))

    def _join_radicand(self, other: "QuadNumber") -> Fraction:
        if self.b == 0:
            return other.F
        if other.b == 0:
            return self.F
        if self.F != other.F:
            raise DomainError("incomparable radicands")
        return self.F

    def __add__(self, other):
        o = self._coerce(other)
        F = self._join_radicand(o)
        return QuadNumber(self.a + o.a, self.b + o.b, F)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) + (-self)

    def __neg__(self):
        return QuadNumber(-self.a, -self.b, self.F)

    def __mul__(self, other):
        o = self._coerce(other)
        F = self._join_radicand(o)
        return QuadNumber(self.a * o.a + self.b * o.b * F,
                          self.a * o.b + self.b * o.a, F)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o.sign() == 0:
            raise ZeroDivisionError("division by zero quadratic number")
        if o.b == 0:
            return QuadNumber(self.a / o.a, self.b / o.a, self.F)
        F = self._join_radicand(o)
        # multiply by the conjugate; the norm a^2 - b^2 F is a nonzero rational
        norm = o.a * o.a - o.b * o.b * F
        conj = QuadNumber(o.a, -o.b, F)
        num = self * conj
        return QuadNumber(num.a / norm, num.b / norm, F)

    # -- order --------------------------------------------------------------

    def sign(self) -> int:
        """Exact sign in {-1, 0, 1}."""
        a, b, F = self.a, self.b, self.F
        if b == 0:
            return (a > 0) - (a < 0)
        if a == 0:
            return 1 if b > 0 else -1
        if a > 0 and b > 0:
            return 1
        if a < 0 and b < 0:
            return -1
        # mixed signs: compare a^2 with b^2 F (equality impossible, F non-square)
        s = 1 if a * a > b * b * F else -1
        return s if a > 0 else -s

    def _cmp(self, other) -> int:
        return (self - self._coerce(other)).sign()

    def __eq__(self, other):
        if isinstance(other, (QuadNumber, Fraction, int)):
            return self._cmp(other) == 0
        return NotImplemented

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b, self.F))

    def __lt__(self, other):
        return self._cmp(other) < 0

    def __le__(self, other):
        return self._cmp(other) <= 0

    def __gt__(self, other):
        return self._cmp(other) > 0

    def __ge__(self, other):
        return self._cmp(other) >= 0

    def floor(self) -> int:
        """Exact floor, seeded by an interval bound and then verified."""
        if self.b == 0:
            return self.a.numerator // self.a.denominator
        scale = 10 ** 20
        lo, hi = _sqrt_bounds(self.F, scale)
        if self.b > 0:
            approx = self.a + self.b * lo
        else:
            approx = self.a + self.b * hi
        n = approx.numerator // approx.denominator
        while self._cmp(n + 1) >= 0:
            n += 1
        while self._cmp(n) < 0:
            n -= 1
        return n

    def __repr__(self):
        if self.b == 0:
            return f"QuadNumber({self.a})"
        return f"QuadNumber({self.a} + {self.b}*sqrt({self.F}))"


def quad_compare(x, y) -> int:
    """Exact order of two quadratic numbers sharing a radicand.

    Returns -1, 0 or 1.  Raises DomainError("incomparable radicands") when
    both arguments are irrational with distinct radicands.

    >>> quad_compare(QuadNumber(-1, 0, Fraction(1, 4)), 0)
    -1
    >>> quad_compare(QuadNumber(0, 1, Fraction(1, 4)), Fraction(1, 2))
    0
    """
    x = x if isinstance(x, QuadNumber) else QuadNumber(rat(x))
    return x._cmp(y)


# -- rational matrices -------------------------------------------------------


@dataclass(frozen=True)
class RatMatrix:
    """A dense matrix of Fractions with exact kernel and inverse."""

    entries: tuple[tuple[Fraction, ...], ...]

    @classmethod
    def from_rows(cls, rows) -> "RatMatrix":
        tup = tuple(tuple(rat(x) for x in r) for r in rows)
        if tup and any(len(r) != len(tup[0]) for r in tup):
            raise DomainError("ragged matrix")
        return cls(tup)

    @classmethod
    def identity(cls, n: int) -> "RatMatrix":
        return cls.from_rows([[Fraction(i == j) for j in range(n)] for i in range(n)])

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0]) if self.entries else 0

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def row(self, i) -> tuple[Fraction, ...]:
        return self.entries[i]

    def transpose(self) -> "RatMatrix":
        return RatMatrix.from_rows(zip(*self.entries)) if self.entries else self

    def __matmul__(self, other: "RatMatrix") -> "RatMatrix":
        if self.cols != other.rows:
            raise DomainError("dimension mismatch")
        ot = list(zip(*other.entries))
        return RatMatrix.from_rows(
            [[sum(a * b for a, b in zip(r, c)) for c in ot] for r in self.entries])

    def apply(self, vec) -> tuple[Fraction, ...]:
        v = [rat(x) for x in vec]
        if len(v) != self.cols:
            raise DomainError("dimension mismatch")
        return tuple(sum(a * b for a, b in zip(r, v)) for r in self.entries)

    def rref(self) -> tuple[list[list[Fraction]], list[int]]:
        """Reduced row echelon form and the list of pivot columns."""
        m = [list(r) for r in self.entries]
        pivots: list[int] = []
        r = 0
        for c in range(self.cols):
            pr = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
            if pr is None:
                continue
            m[r], m[pr] = m[pr], m[r]
            inv = 1 / m[r][c]
            m[r] = [x * inv for x in m[r]]
            for i in range(len(m)):
                if i != r and m[i][c] != 0:
                    f = m[i][c]
                    m[i] = [x - f * y for x, y in zip(m[i], m[r])]
            pivots.append(c)
            r += 1
            if r == len(m):
                break
        return m, pivots

    def rank(self) -> int:
        return len(self.rref()[1])

    def inverse(self) -> "RatMatrix":
        n = self.rows
        if n != self.cols:
            raise DomainError("not square")
        aug = RatMatrix.from_rows(
            [list(self.entries[i]) + [Fraction(i == j) for j in range(n)]
             for i in range(n)])
        red, piv = aug.rref()
        if piv[:n] != list(range(n)):
            raise DomainError("singular matrix")
        return RatMatrix.from_rows([r[n:] for r in red])

    def solve(self, rhs) -> tuple[Fraction, ...]:
        """Solve self @ x = rhs for square nonsingular self."""
        return self.inverse().apply(rhs)


def kernel_basis(m: RatMatrix) -> list[tuple[Fraction, ...]]:
    """Exact basis of the null space of a rational matrix.

    Vectors come from the reduced row echelon form, one per free column in
    ascending order, each rescaled to a primitive integer vector with a
    positive first nonzero entry so output is reproducible.
    """
    if m.cols == 0:
        return []
    if m.rows == 0:
        red, pivots = [], []
    else:
        red, pivots = m.rref()
    free = [c for c in range(m.cols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * m.cols
        v[f] = Fraction(1)
        for r, c in enumerate(pivots):
            v[c] = -red[r][f]
        basis.append(_primitive(v))
    return basis


def _primitive(v) -> tuple[Fraction, ...]:
    denom_lcm = 1
    for x in v:
        denom_lcm = denom_lcm * x.denominator // gcd(denom_lcm, x.denominator)
    ints = [int(x * denom_lcm) for x in v]
    content = 0
    for x in ints:
        content = gcd(content, abs(x))
    if content == 0:
        return tuple(Fraction(0) for _ in v)
    ints = [x // content for x in ints]
    lead = next(x for x in ints if x != 0)
    if lead < 0:
        ints = [-x for x in ints]
    return tuple(Fraction(x) for x in ints)


def lattice_primitive(v, denoms) -> tuple[int, ...]:
    """Primitive integer coordinates of v in the lattice (+) Z * e_i / denoms_i.

    The input is rescaled by a positive rational so that every coordinate
    v_i * denoms_i becomes an integer, the gcd of the result is 1 and the
    first nonzero entry is positive.

    >>> lattice_primitive([2, -1, 0, Fraction(1, 12)], [1, 1, 2, 12])
    (2, -1, 0, 1)
    """
    v = [rat(x) for x in v]
    if len(v) != len(denoms):
        raise DomainError("dimension mismatch")
    if all(x == 0 for x in v):
        raise DomainError("zero class")
    if any(d <= 0 or int(d) != d for d in denoms):
        raise DomainError("denominators must be positive integers")
    scaled = [x * int(d) for x, d in zip(v, denoms)]
    denom_lcm = 1
    for x in scaled:
        denom_lcm = denom_lcm * x.denominator // gcd(denom_lcm, x.denominator)
    ints = [int(x * denom_lcm) for x in scaled]
    content = 0
    for x in ints:
        content = gcd(content, abs(x))
    ints = [x // content for x in ints]
    lead = next(x for x in ints if x != 0)
    if lead < 0:
        ints = [-x for x in ints]
    return tuple(ints)


# -- integer lattice helpers --------------------------------------------------


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    return old_r, old_s, old_t


def int_kernel(a: list[list[int]]) -> list[list[int]]:
    """Z-basis of the integer kernel {x : a @ x = 0} of an integer matrix.

    Unimodular column reduction: the kernel of an integer matrix over Z is
    automatically saturated, so the basis spans every integer solution.
    """
    if not a:
        raise DomainError("empty matrix")
    rows, cols = len(a), len(a[0])
    b = [list(r) for r in a]
    u = [[int(i == j) for j in range(cols)] for i in range(cols)]

    def colop(j, k, x, y, z, w):
        # (col_j, col_k) <- (x*col_j + y*col_k, z*col_j + w*col_k)
        for mat in (b, u):
            for r in mat:
                r[j], r[k] = x * r[j] + y * r[k], z * r[j] + w * r[k]

    lead = 0
    for r in range(rows):
        act = [j for j in range(lead, cols) if b[r][j] != 0]
        while len(act) > 1:
            j, k = act[0], act[1]
            g, s, t = _xgcd(b[r][j], b[r][k])
            colop(j, k, s, t, -(b[r][k] // g), b[r][j] // g)
            act = [j for j in range(lead, cols) if b[r][j] != 0]
        if act:
            j = act[0]
            if j != lead:
                colop(lead, j, 0, 1, 1, 0)
            lead += 1
    return [[u[i][j] for i in range(cols)] for j in range(lead, cols)]


def hnf_rows(rows: list[list[int]]) -> list[list[int]]:
    """Row Hermite normal form of the lattice spanned by integer rows.

    Pivots are positive, entries above each pivot are reduced into
    [0, pivot), zero rows are dropped.  The result is the canonical basis
    used for reproducible residual-lattice output.
    """
    m = [list(r) for r in rows if any(r)]
    if not m:
        return []
    cols = len(m[0])
    r = 0
    for c in range(cols):
        idx = [i for i in range(r, len(m)) if m[i][c] != 0]
        while len(idx) > 1:
            i, j = idx[0], idx[1]
            g, s, t = _xgcd(m[i][c], m[j][c])
            mi = [s * x + t * y for x, y in zip(m[i], m[j])]
            mj = [-(m[j][c] // g) * x + (m[i][c] // g) * y
                  for x, y in zip(m[i], m[j])]
            m[i], m[j] = mi, mj
            idx = [i for i in range(r, len(m)) if m[i][c] != 0]
        if not idx:
            continue
        i = idx[0]
        m[r], m[i] = m[i], m[r]
        if m[r][c] < 0:
            m[r] = [-x for x in m[r]]
        for i in range(r):
            q = m[i][c] // m[r][c]
            if q:
                m[i] = [x - q * y for x, y in zip(m[i], m[r])]
        r += 1
    return m[:r]
