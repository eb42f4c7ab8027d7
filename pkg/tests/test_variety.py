"""Riemann-Roch engine: presets, twists, pairings, Serre action, lattice."""

import random
import warnings
from fractions import Fraction
from math import factorial

import pytest

from kustab.exact import DomainError, RatMatrix
from kustab.variety import (ChernVector, SPINOR_CLASS, VarietyDesc,
                            euler_pairing, exp_twist, get_preset, gram_matrix,
                            in_lattice, line_bundle_class, serre_class,
                            serre_inverse_class, serre_numeric)

from oracles import (chern_y2, chern_y4, hilbert_p4, hilbert_q3, todd_from_chern_3fold,
                     todd_p4)

Q3 = get_preset("q3")
P4 = get_preset("p4")
Y4 = get_preset("y4")
Y2 = get_preset("y2")
PRESET_LIST = [P4, Q3, Y4, Y2]


def _random_lattice_class(rng, x):
    return ChernVector([Fraction(rng.randint(-6, 6), d) for d in x.denoms])


def test_q3_todd_and_denoms():
    assert Q3.todd == (1, Fraction(3, 2), Fraction(13, 12), Fraction(1, 2))
    assert Q3.denoms == (1, 1, 2, 12)


def test_p4_todd_matches_series_oracle():
    assert list(P4.todd) == todd_p4()


def test_y4_todd_matches_whitney_oracle():
    chern = chern_y4()
    assert chern == [1, 2, 3, 0]
    assert list(Y4.todd) == todd_from_chern_3fold(chern)


def test_y2_todd_matches_double_cover_oracle():
    chern = chern_y2()
    assert chern == [1, 2, 6, -8]   # c3 integrates to the Euler number -16
    assert list(Y2.todd) == todd_from_chern_3fold(chern)


def test_chi_structure_sheaf_is_one():
    for x in PRESET_LIST:
        assert x.todd[x.dim] * x.degree == 1


def test_line_bundle_classes():
    assert line_bundle_class(Q3, 1) == (1, 1, Fraction(1, 2), Fraction(1, 6))
    assert line_bundle_class(Q3, 0) == (1, 0, 0, 0)
    expected = [Fraction((-3) ** i, factorial(i)) for i in range(4)]
    assert line_bundle_class(Q3, -3) == tuple(expected)


def test_exp_twist_examples():
    twisted = exp_twist(SPINOR_CLASS, 1)
    assert twisted[1] == 1          # ch_1 of S(1); pairs to 2 against H^2
    assert exp_twist(SPINOR_CLASS, 0) == SPINOR_CLASS


def test_exp_twist_group_law():
    rng = random.Random(11)
    for _ in range(40):
        v = _random_lattice_class(rng, Q3)
        a = Fraction(rng.randint(-5, 5), rng.randint(1, 3))
        b = Fraction(rng.randint(-5, 5), rng.randint(1, 3))
        assert exp_twist(exp_twist(v, a), -a) == v
        assert exp_twist(exp_twist(v, a), b) == exp_twist(v, a + b)


def test_euler_pairing_against_hilbert_oracle():
    for a in range(-3, 4):
        for b in range(-3, 4):
            got = euler_pairing(Q3, line_bundle_class(Q3, a),
                                line_bundle_class(Q3, b))
            assert got == hilbert_q3(b - a)
    for a in range(-2, 3):
        for b in range(-2, 3):
            got = euler_pairing(P4, line_bundle_class(P4, a),
                                line_bundle_class(P4, b))
            assert got == hilbert_p4(b - a)


def test_euler_pairing_spinor():
    assert euler_pairing(Q3, SPINOR_CLASS, SPINOR_CLASS) == 1
    assert euler_pairing(Q3, line_bundle_class(Q3, 1),
                         line_bundle_class(Q3, 0)) == 0


def test_twist_invariance_of_pairing():
    rng = random.Random(23)
    for x in PRESET_LIST:
        for _ in range(20):
            a = rng.randint(-4, 4)
            b = rng.randint(-4, 4)
            k = rng.randint(-3, 3)
            lhs = euler_pairing(x, line_bundle_class(x, a + k),
                                line_bundle_class(x, b + k))
            rhs = euler_pairing(x, line_bundle_class(x, a),
                                line_bundle_class(x, b))
            assert lhs == rhs


def test_integrality_on_sheaf_class_span():
    # chi is integer valued on integer combinations of genuine sheaf classes
    rng = random.Random(67)
    spans = {
        "q3": [line_bundle_class(Q3, k) for k in range(3)] + [SPINOR_CLASS],
        "p4": [line_bundle_class(P4, k) for k in range(5)],
        "y4": [line_bundle_class(Y4, k) for k in range(-1, 3)] + [SPINOR_CLASS],
        "y2": [line_bundle_class(Y2, k) for k in range(-2, 3)],
    }
    for name, gens in spans.items():
        x = get_preset(name)

        def combo():
            out = ChernVector([Fraction(0)] * (x.dim + 1))
            for g in gens:
                out = out + rng.randint(-3, 3) * g
            return out

        for _ in range(40):
            assert euler_pairing(x, combo(), combo()).denominator == 1


PAPER_GRAM = [
    [Fraction(1, 2), Fraction(13, 12), Fraction(3, 2), Fraction(1)],
    [Fraction(-13, 12), Fraction(-3, 2), Fraction(-1), Fraction(0)],
    [Fraction(3, 2), Fraction(1), Fraction(0), Fraction(0)],
    [Fraction(-1), Fraction(0), Fraction(0), Fraction(0)],
]


def test_gram_matrix_conventions():
    paper = gram_matrix(Q3, "paper")
    assert [list(paper.row(i)) for i in range(4)] == PAPER_GRAM
    chi = gram_matrix(Q3, "chi")
    assert chi[0, 0] == 1
    for i in range(4):
        for j in range(4):
            assert chi[i, j] == 2 * paper[i, j]
    with pytest.raises(DomainError):
        gram_matrix(Q3, "weird")


def test_p4_line_bundle_gram_is_unipotent_triangular():
    members = [line_bundle_class(P4, k) for k in range(5)]
    for i, ei in enumerate(members):
        for j, ej in enumerate(members):
            val = euler_pairing(P4, ei, ej)
            if i == j:
                assert val == 1
            elif i > j:
                assert val == 0


def test_serre_matrix_matches_twist_formula():
    for x in PRESET_LIST:
        s = serre_numeric(x)
        n = x.dim
        cols = [serre_class(x, ChernVector([Fraction(i == k)
                                            for i in range(n + 1)]))
                for k in range(n + 1)]
        expected = RatMatrix.from_rows(
            [[cols[j][i] for j in range(n + 1)] for i in range(n + 1)])
        assert s.entries == expected.entries


def test_serre_compatibility_random_pairs():
    rng = random.Random(404)
    for x in PRESET_LIST:
        s = serre_numeric(x)
        for _ in range(200):
            v = _random_lattice_class(rng, x)
            w = _random_lattice_class(rng, x)
            sw = ChernVector(s.apply(list(w)))
            assert euler_pairing(x, v, sw) == euler_pairing(x, w, v)


def test_serre_inverse_roundtrip():
    rng = random.Random(5)
    for x in PRESET_LIST:
        for _ in range(10):
            v = _random_lattice_class(rng, x)
            assert serre_inverse_class(x, serre_class(x, v)) == v


def test_serre_on_spinor_classes():
    # ambient action on Q3: -exp_twist(., -3)
    img = serre_class(Q3, SPINOR_CLASS)
    assert img == -exp_twist(SPINOR_CLASS, -3)


def test_degenerate_pairing_rejected():
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        broken = VarietyDesc(name="broken", dim=1, degree=1,
                             todd=(Fraction(0), Fraction(0)), denoms=(1, 1),
                             index=0)
    with pytest.raises(DomainError, match="degenerate pairing"):
        serre_numeric(broken)


def test_in_lattice_examples():
    assert in_lattice(Q3, SPINOR_CLASS)
    assert in_lattice(Q3, ChernVector([0, 0, Fraction(1, 2), 0]))
    assert not in_lattice(Q3, ChernVector([0, 0, Fraction(1, 4), 0]))


def test_descriptor_warnings_for_inconsistent_data():
    with pytest.warns(UserWarning):
        VarietyDesc(name="odd", dim=2, degree=1,
                    todd=(Fraction(1), Fraction(1), Fraction(1, 3)),
                    denoms=(1, 1, 1), index=3)


def test_wrong_arity_rejected():
    with pytest.raises(DomainError, match="wrong arity"):
        euler_pairing(Q3, ChernVector([1, 0, 0]), SPINOR_CLASS)
