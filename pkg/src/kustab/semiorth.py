"""Exceptional collections and their residual lattices.

The right orthogonal of a collection (E_1, ..., E_m) inside the numerical
lattice is { v : chi(E_i, v) = 0 for all i }.  This module computes a
canonical basis of that sublattice, the numerical projection onto it, the
induced Serre action, and the bookkeeping verdicts used to certify fullness
arguments at the lattice level.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .exact import DomainError, RatMatrix, hnf_rows, int_kernel
from .variety import (ChernVector, VarietyDesc, euler_pairing,
                      from_lattice_coords, in_lattice, serre_inverse_class,
                      to_lattice_coords)


@dataclass(frozen=True)
class Collection:
    """An ordered tuple of classes, typically line bundles."""

    variety: VarietyDesc
    members: tuple[ChernVector, ...]

    def __post_init__(self):
        object.__setattr__(self, "members", tuple(self.members))
        for m in self.members:
            self.variety.check_class(m)

    def __len__(self):
        return len(self.members)


@dataclass(frozen=True)
class ClassReport:
    chi_self: Fraction
    serre_eigenvalue: int | None   # +1, -1, or None when not an eigenvector
    labels: frozenset[str]


@dataclass(frozen=True)
class FullnessVerdict:
    collection_rank: int
    residual_rank: int
    total_rank: int
    stability_assumed: bool
    verdict: str
    checks: tuple[tuple[str, bool], ...] = field(default=(), compare=False)


def is_numerically_exceptional(c: Collection) -> bool:
    """chi(E_i, E_i) = 1 and chi(E_j, E_i) = 0 for j > i."""
    x = c.variety
    for i, ei in enumerate(c.members):
        if euler_pairing(x, ei, ei) != 1:
            return False
        for j in range(i + 1, len(c.members)):
            if euler_pairing(x, c.members[j], ei) != 0:
                return False
    return True


def right_orthogonal(x: VarietyDesc, c: Collection) -> list[ChernVector]:
    """Canonical basis of the residual lattice of the collection.

    The chi-orthogonality system is solved over the integers in lattice
    coordinates (the integer kernel is automatically saturated), then put
    in row Hermite normal form with positive pivots, so the output is
    deterministic and each basis vector is primitive.
    """
    n = x.dim
    if not c.members:
        gens = [[int(i == j) for i in range(n + 1)] for j in range(n + 1)]
        return [from_lattice_coords(x, g) for g in gens]
    for m in c.members:
        if not in_lattice(x, m):
            raise DomainError("collection member not in lattice")
    # functional matrix: row i, column j = chi(E_i, H^j / lambda_j)
    rows = []
    for e in c.members:
        row = []
        for j in range(n + 1):
            gen = ChernVector([Fraction(int(i == j), x.denoms[j])
                               for i in range(n + 1)])
            row.append(euler_pairing(x, e, gen))
        rows.append(row)
    int_rows = []
    for row in rows:
        scale = 1
        for q in row:
            scale = scale * q.denominator // _gcd(scale, q.denominator)
        int_rows.append([int(q * scale) for q in row])
    kernel = int_kernel(int_rows)
    return [from_lattice_coords(x, r) for r in hnf_rows(kernel)]


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return abs(a)


def _collection_gram(x: VarietyDesc, c: Collection) -> RatMatrix:
    return RatMatrix.from_rows(
        [[euler_pairing(x, ej, ei) for ei in c.members] for ej in c.members])


def sod_project(x: VarietyDesc, c: Collection, v: ChernVector) -> ChernVector:
    """Project v onto the residual lattice along the span of the collection.

    Subtracts the unique u in span(E_1, ..., E_m) with chi(E_j, v - u) = 0
    for every j; this is the numerical shadow of the projection functor of
    the semiorthogonal decomposition.
    """
    x.check_class(v)
    if not c.members:
        return v
    gram = _collection_gram(x, c)
    rhs = [euler_pairing(x, ej, v) for ej in c.members]
    try:
        coeffs = gram.solve(rhs)
    except DomainError:
        raise DomainError("degenerate collection pairing") from None
    u = ChernVector([Fraction(0)] * len(v))
    for a, e in zip(coeffs, c.members):
        u = u + a * e
    return v - u


def is_residual(x: VarietyDesc, c: Collection, v: ChernVector) -> bool:
    return in_lattice(x, v) and all(
        euler_pairing(x, e, v) == 0 for e in c.members)


def serre_on_residual(x: VarietyDesc, c: Collection,
                      basis: list[ChernVector] | None = None) -> RatMatrix:
    """Matrix of the induced Serre action on the residual lattice.

    The inverse Serre functor of the residual category is the numerical
    projection composed with the ambient inverse Serre action; the induced
    Serre action is the inverse of that map, expressed in the given basis
    (by default the canonical one).
    """
    if basis is None:
        basis = right_orthogonal(x, c)
    if not basis:
        return RatMatrix.from_rows([])
    # columns of T = coordinates of (project . serre^-1)(basis vector)
    bmat = RatMatrix.from_rows(
        [[b[i] for b in basis] for i in range(x.dim + 1)])
    cols = []
    for b in basis:
        img = sod_project(x, c, serre_inverse_class(x, b))
        cols.append(_coords_in(bmat, img))
    t = RatMatrix.from_rows(
        [[cols[j][i] for j in range(len(basis))] for i in range(len(basis))])
    return t.inverse()


def _coords_in(bmat: RatMatrix, v: ChernVector) -> tuple[Fraction, ...]:
    # least-squares-free exact solve of bmat @ x = v (bmat is tall, full rank)
    k = bmat.cols
    rows = [list(bmat.row(i)) + [v[i]] for i in range(bmat.rows)]
    red, pivots = RatMatrix.from_rows(rows).rref()
    if k in pivots:
        raise DomainError("class not in residual span")
    sol = [Fraction(0)] * k
    for r, c in enumerate(pivots):
        sol[c] = red[r][k]
    return tuple(sol)


def classify_class(x: VarietyDesc, c: Collection, v: ChernVector) -> ClassReport:
    """Self-pairing, Serre eigenvalue and labels of a residual class.

    The eigenvalue test applies the induced inverse Serre action directly:
    v is a +1 (resp. -1) eigenvector of the residual Serre action exactly
    when the projection of its ambient inverse Serre image is v (resp. -v).
    """
    x.check_class(v)
    if v.is_zero():
        raise DomainError("zero class")
    if not is_residual(x, c, v):
        raise DomainError("not residual")
    chi_self = euler_pairing(x, v, v)
    w = sod_project(x, c, serre_inverse_class(x, v))
    if w == v:
        eigen: int | None = 1
    elif w == -v:
        eigen = -1
    else:
        eigen = None
    labels = set()
    if chi_self == 1:
        labels.add("numerically-exceptional")
    if chi_self == 0:
        labels.add("isotropic")
    if eigen == 1:
        labels.add("numerical-point-object-even")
    elif eigen == -1:
        labels.add("numerical-point-object-odd")
    return ClassReport(chi_self=chi_self, serre_eigenvalue=eigen,
                       labels=frozenset(labels))


def fullness_report(x: VarietyDesc, c: Collection,
                    residual_gens: list[ChernVector],
                    stability_assumed: bool) -> FullnessVerdict:
    """Checklist verdict for the numerical legs of a fullness argument.

    (a) the collection is numerically exceptional, (b) the given generators
    span the residual lattice over Z, (c) a stability condition on the
    residual category is assumed (which rules out phantomic summands).
    All three passing with a nonzero residual yields
    "full-modulo-phantoms-excluded"; (a) + (b) with residual rank zero is
    already "numerically-full"; anything else is "inconclusive".
    """
    residual = right_orthogonal(x, c)
    for g in residual_gens:
        if not is_residual(x, c, g):
            raise DomainError("generator not in residual lattice")
    exceptional = is_numerically_exceptional(c)
    res_rows = hnf_rows([to_lattice_coords(x, b) for b in residual])
    gen_rows = hnf_rows([to_lattice_coords(x, g) for g in residual_gens])
    spans = gen_rows == res_rows
    checks = (
        ("collection numerically exceptional", exceptional),
        ("generators span residual lattice", spans),
        ("stability condition assumed", stability_assumed),
    )
    if exceptional and spans and not residual:
        verdict = "numerically-full"
    elif exceptional and spans and stability_assumed:
        verdict = "full-modulo-phantoms-excluded"
    else:
        verdict = "inconclusive"
    return FullnessVerdict(
        collection_rank=len(c),
        residual_rank=len(residual),
        total_rank=x.dim + 1,
        stability_assumed=stability_assumed,
        verdict=verdict,
        checks=checks)
