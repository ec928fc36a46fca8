"""The brute-force oracle itself, pinned on hand-checked values."""

import pytest

from monocurve.oracle import (
    oracle_classify,
    oracle_frobenius,
    oracle_is_complete_intersection,
    oracle_membership,
    oracle_r,
    oracle_symmetric,
)


def test_membership_golden():
    assert oracle_membership((11, 17, 25, 19), 0) is True
    assert oracle_membership((11, 17, 25, 19), 65) is False
    assert oracle_membership((11, 17, 25, 19), 66) is True  # 6 * 11
    assert oracle_membership((2, 3), 1) is False


def test_membership_rejects_negative():
    with pytest.raises(ValueError):
        oracle_membership((2, 3), -1)


def test_frobenius_golden():
    assert oracle_frobenius((2, 3)) == 1
    assert oracle_frobenius((11, 17, 25, 19)) == 65
    assert oracle_frobenius((4, 5, 6, 7)) == 3
    assert oracle_frobenius((1, 9)) == -1


def test_symmetric_golden():
    assert oracle_symmetric((11, 17, 25, 19)) is True
    assert oracle_symmetric((4, 5, 6, 7)) is False
    assert oracle_symmetric((2, 3)) is True


def test_r_golden():
    # indices are 0-based: generator 11 of (7, 11, 12, 16) has r = 3
    assert oracle_r((7, 11, 12, 16), 1) == 3
    assert oracle_r((11, 17, 25, 19), 2) == 2
    assert oracle_r((2, 3), 0) == 3
    assert oracle_r((2, 3), 1) == 2


def test_gluing_golden():
    assert oracle_is_complete_intersection((16, 27, 45, 56)) is True
    assert oracle_is_complete_intersection((11, 17, 25, 19)) is False
    assert oracle_is_complete_intersection((2, 3)) is True
    assert oracle_is_complete_intersection((2, 3, 5)) is True


def test_classify_golden():
    assert oracle_classify((11, 17, 25, 19)) == "GorensteinNonCI"
    assert oracle_classify((16, 27, 45, 56)) == "CompleteIntersection"
    assert oracle_classify((4, 5, 6, 7)) == "NonGorenstein"
