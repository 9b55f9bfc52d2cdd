"""Tests for the small quantum ring of projective space."""

import random

import pytest

from tevdeg.errors import ParameterError
from tevdeg.quantum import QPolyClass, qmul, quantum_euler, vtev_projective_qh

h = QPolyClass.h_power


def test_relation_h_to_the_r_plus_one_is_q():
    assert qmul(h(1, 1), h(1, 1)) == QPolyClass(1, {(1, 0): 1})


def test_identity_element():
    x = QPolyClass(3, {(2, 1): 5, (0, 3): -2})
    assert qmul(h(3, 0), x) == x


def test_reduction_past_top_degree():
    assert qmul(h(2, 2), h(2, 2)) == QPolyClass(2, {(1, 1): 1})


def test_mismatched_dimensions_rejected():
    with pytest.raises(ParameterError):
        qmul(h(1, 1), h(2, 1))


def random_class(rng, r):
    terms = {}
    for _ in range(rng.randint(1, 8)):
        terms[(rng.randint(0, 3), rng.randint(0, r))] = rng.randint(-9, 9)
    return QPolyClass(r, terms)


def test_qmul_associative_and_commutative():
    rng = random.Random(7)
    for _ in range(200):
        r = rng.randint(1, 6)
        a, b, c = (random_class(rng, r) for _ in range(3))
        assert qmul(a, b) == qmul(b, a)
        assert qmul(qmul(a, b), c) == qmul(a, qmul(b, c))


def test_grading_additive_on_pure_classes():
    # deg(q^a h^i) = a (r+1) + i; products of pure classes stay pure.
    rng = random.Random(11)
    for _ in range(200):
        r = rng.randint(1, 6)
        qa, ha = rng.randint(0, 3), rng.randint(0, r)
        qb, hb = rng.randint(0, 3), rng.randint(0, r)
        prod = qmul(QPolyClass(r, {(qa, ha): 1}), QPolyClass(r, {(qb, hb): 1}))
        want = (qa + qb) * (r + 1) + ha + hb
        for (qe, he) in prod.terms:
            assert qe * (r + 1) + he == want


def test_quantum_euler_class():
    assert quantum_euler(1) == QPolyClass(1, {(0, 1): 2})
    assert quantum_euler(2) == QPolyClass(2, {(0, 2): 3})
    assert quantum_euler(5) == QPolyClass(5, {(0, 5): 6})
    for r in range(1, 13):
        assert quantum_euler(r) == QPolyClass(r, {(0, r): r + 1})


def test_point_count_examples():
    assert vtev_projective_qh(2, 2, 2, 2) == 9
    assert vtev_projective_qh(0, 1, 1, 3) == 1
    assert vtev_projective_qh(1, 2, 2, 2) == 0  # grading mismatch


def test_count_identity_and_perturbations():
    for r in range(1, 7):
        for g in range(7):
            for d in range(r, 4 * r + 1, r):
                n = (r + 1) * d // r - g + 1
                if n < 1 or 2 * g - 2 + n <= 0:
                    continue
                assert vtev_projective_qh(g, d, r, n) == (r + 1) ** g
                for n2 in (n - 1, n + 1):
                    if n2 < 1 or 2 * g - 2 + n2 <= 0:
                        continue
                    assert vtev_projective_qh(g, d, r, n2) == 0


def test_rejects_unstable_range():
    with pytest.raises(ParameterError):
        vtev_projective_qh(0, 1, 1, 2)  # (g, n) = (0, 2) unstable
    with pytest.raises(ParameterError):
        vtev_projective_qh(0, 1, 1, 0)
