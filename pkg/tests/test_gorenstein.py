"""Form detection, certification, classification, families, periods, scans."""

import math
import random

import pytest

from monocurve.errors import (
    NotApplicableError,
    NotCoprimeAdjointError,
    PreconditionError,
    WrongShapeError,
    ZeroOrNegativeEntryError,
)
from monocurve.gorenstein import (
    COMPLETE_INTERSECTION,
    GORENSTEIN_NON_CI,
    KIND_DIAGONAL,
    KIND_U,
    KIND_V,
    NON_GORENSTEIN,
    SKIPPED,
    BresinskyForm,
    certify_bresinsky_matrix,
    classify,
    detect_bresinsky_form,
    direction_to_original,
    family_matrix_A,
    family_matrix_B,
    generate_family,
    homogeneous_rows_period,
    is_complete_intersection,
    rotate_form,
    scan_translations,
    translation_vector_u,
    translation_vector_v,
)
from monocurve.intmat import matvec
from monocurve.oracle import oracle_classify
from monocurve.semigroup import Sequence, make_sequence

GOLDEN = make_sequence([11, 17, 25, 19])
GOLDEN_D = [[-4, 0, 1, 1], [1, -4, 0, 3], [3, 1, -2, 0], [0, 3, 1, -4]]
SCAN_BASE = make_sequence([43, 67, 49, 83])
SCAN_BASE_D = [[-5, 0, 1, 2], [2, -5, 0, 3], [3, 1, -4, 0], [0, 4, 3, -5]]
NONPRINCIPAL_M = [[-4, 0, 1, 1], [1, -5, 4, 0], [0, 4, -5, 1], [3, 1, 0, -2]]


def golden_form() -> BresinskyForm:
    form = detect_bresinsky_form(GOLDEN)
    assert form is not None
    return form


# -- detection -----------------------------------------------------------------

def test_detect_golden_form_exactly():
    f = golden_form()
    assert f.perm == (0, 1, 2, 3)
    assert f.c == (4, 4, 2, 4)
    assert f.d_values() == {
        "d13": 1, "d14": 1, "d21": 1, "d24": 3,
        "d31": 3, "d32": 1, "d42": 3, "d43": 1,
    }
    assert f.matrix() == GOLDEN_D


def test_detect_second_golden_form():
    f = detect_bresinsky_form(SCAN_BASE)
    assert f is not None
    assert f.perm == (0, 1, 2, 3)
    assert f.c == (5, 5, 4, 5)
    assert f.matrix() == SCAN_BASE_D


def test_detect_none_for_ci_and_non_gorenstein():
    assert detect_bresinsky_form(make_sequence([16, 27, 45, 56])) is None
    assert detect_bresinsky_form(make_sequence([4, 5, 6, 7])) is None


def test_detect_on_permuted_input():
    shuffled = make_sequence([25, 19, 11, 17])
    f = detect_bresinsky_form(shuffled)
    assert f is not None
    b = f.permuted(shuffled)
    assert sorted(b) == [11, 17, 19, 25]
    assert matvec(f.matrix(), list(b)) == [0, 0, 0, 0]


def test_detected_matrix_annihilates_permuted_sequence():
    for seq in (GOLDEN, SCAN_BASE):
        f = detect_bresinsky_form(seq)
        assert matvec(f.matrix(), list(f.permuted(seq))) == [0, 0, 0, 0]


# -- certification ---------------------------------------------------------------

def test_certify_golden_matrix():
    assert certify_bresinsky_matrix(GOLDEN_D).entries == (11, 17, 25, 19)
    assert certify_bresinsky_matrix(SCAN_BASE_D).entries == (43, 67, 49, 83)


def test_certify_rejects_shared_factor():
    a1 = family_matrix_A(golden_form(), 1)
    with pytest.raises(NotCoprimeAdjointError) as exc:
        certify_bresinsky_matrix(a1)
    assert exc.value.gcd == 2


def test_certify_rejects_wrong_shape():
    with pytest.raises(WrongShapeError):
        certify_bresinsky_matrix(NONPRINCIPAL_M)  # zeros in the wrong places
    with pytest.raises(WrongShapeError):
        certify_bresinsky_matrix([[1, 2], [3, 4]])
    bad = [row[:] for row in GOLDEN_D]
    bad[2][2] = -1  # c_3 = 1 < 2
    bad[0][2] = 2   # keep the column sum zero
    with pytest.raises(WrongShapeError):
        certify_bresinsky_matrix(bad)


def test_certified_matrices_are_principal():
    from monocurve.semigroup import is_principal, principal_row
    for matrix in (GOLDEN_D, SCAN_BASE_D, family_matrix_A(golden_form(), 2)):
        seq = certify_bresinsky_matrix(matrix)
        assert is_principal(matrix)
        for i in range(4):
            r, _ = principal_row(seq, i)
            assert r == -matrix[i][i]


# -- complete intersections -------------------------------------------------------

def test_gluing_golden():
    assert is_complete_intersection(make_sequence([16, 27, 45, 56])) is True
    assert is_complete_intersection(GOLDEN) is False
    assert is_complete_intersection(make_sequence([2, 3])) is True
    assert is_complete_intersection((2, 3, 5)) is True
    assert is_complete_intersection((4, 5, 6, 7)) is False


# -- classification ----------------------------------------------------------------

def test_classify_golden():
    assert classify(GOLDEN).kind == GORENSTEIN_NON_CI
    assert classify(make_sequence([16, 27, 45, 56])).kind == COMPLETE_INTERSECTION
    assert classify(make_sequence([4, 5, 6, 7])).kind == NON_GORENSTEIN


def test_classify_carries_witness_only_for_gnci():
    assert classify(GOLDEN).form is not None
    assert classify(make_sequence([16, 27, 45, 56])).form is None


def test_classify_agrees_with_oracle_on_sample():
    rng = random.Random(23)
    done = 0
    while done < 25:
        entries = tuple(sorted(rng.sample(range(5, 40), 4)))
        if math.gcd(*entries) != 1:
            continue
        done += 1
        assert classify(Sequence(entries)).kind == oracle_classify(entries), entries


# -- translation vectors ------------------------------------------------------------

def test_translation_vectors_golden():
    f = golden_form()
    assert translation_vector_u(f) == (7, 7, 7, 7)
    assert translation_vector_v(f) == (3, 5, 7, 5)


def test_translation_vector_structure():
    for seq in (GOLDEN, SCAN_BASE):
        f = detect_bresinsky_form(seq)
        u = translation_vector_u(f)
        v = translation_vector_v(f)
        assert u[0] == u[2]
        assert v[1] == v[3]
        c1, c2, c3, c4 = f.c
        u_rows = [[f.d21, -c2, 0, f.d24], [1, 0, -1, 0], [0, f.d42, f.d43, -c4]]
        v_rows = [[-c1, 0, f.d13, f.d14], [0, -1, 0, 1], [f.d31, f.d32, -c3, 0]]
        assert matvec(u_rows, list(u)) == [0, 0, 0]
        assert matvec(v_rows, list(v)) == [0, 0, 0]


def test_second_golden_u_vector():
    f = detect_bresinsky_form(SCAN_BASE)
    assert translation_vector_u(f) == (13, 19, 13, 23)


# -- family matrices ------------------------------------------------------------------

def test_family_matrix_t0_is_base_matrix():
    f = golden_form()
    assert family_matrix_A(f, 0) == GOLDEN_D
    assert family_matrix_B(f, 0) == GOLDEN_D


def test_family_matrix_A_golden():
    f = golden_form()
    a1 = family_matrix_A(f, 1)
    assert a1 == [[-5, 0, 2, 1], [1, -4, 0, 3], [4, 1, -3, 0], [0, 3, 1, -4]]
    assert matvec(a1, [18, 24, 32, 26]) == [0, 0, 0, 0]
    assert certify_bresinsky_matrix(family_matrix_A(f, 2)).entries == (25, 31, 39, 33)


def test_family_matrix_B_golden():
    f = golden_form()
    assert matvec(family_matrix_B(f, 1), [14, 22, 32, 24]) == [0, 0, 0, 0]
    assert certify_bresinsky_matrix(family_matrix_B(f, 2)).entries == (17, 27, 39, 29)


def test_family_matrices_preserve_column_sums_and_orthogonality():
    for seq in (GOLDEN, SCAN_BASE):
        f = detect_bresinsky_form(seq)
        b = list(f.permuted(seq))
        u = translation_vector_u(f)
        v = translation_vector_v(f)
        for t in range(51):
            at = family_matrix_A(f, t)
            bt = family_matrix_B(f, t)
            for j in range(4):
                assert sum(at[i][j] for i in range(4)) == 0
                assert sum(bt[i][j] for i in range(4)) == 0
            moved_u = [a + t * x for a, x in zip(b, u)]
            moved_v = [a + t * x for a, x in zip(b, v)]
            assert matvec(at, moved_u) == [0, 0, 0, 0]
            assert matvec(bt, moved_v) == [0, 0, 0, 0]


# -- families ------------------------------------------------------------------------

def test_generate_family_u_golden():
    fam = generate_family(GOLDEN, KIND_U, 3)
    assert fam.direction == (7, 7, 7, 7)
    by_t = {c.t: c for c in fam.certificates}
    assert by_t[0].classification == GORENSTEIN_NON_CI
    assert by_t[1].classification == SKIPPED and by_t[1].gcd == 2
    assert by_t[2].sequence == (25, 31, 39, 33)
    assert by_t[2].classification == GORENSTEIN_NON_CI
    assert by_t[3].classification == SKIPPED
    assert fam.findings == ()


def test_generate_family_v_t0_only():
    fam = generate_family(GOLDEN, KIND_V, 0)
    assert len(fam.certificates) == 1
    assert fam.certificates[0].sequence == (11, 17, 25, 19)
    assert fam.certificates[0].classification == GORENSTEIN_NON_CI


def test_generate_family_diagonal_golden():
    fam = generate_family(GOLDEN, KIND_DIAGONAL, 3)
    assert fam.direction == (14, 14, 14, 14)
    seqs = [c.sequence for c in fam.certificates]
    assert seqs == [(11, 17, 25, 19), (25, 31, 39, 33),
                    (39, 45, 53, 47), (53, 59, 67, 61)]
    assert all(c.classification == GORENSTEIN_NON_CI for c in fam.certificates)
    assert fam.findings == ()


def test_generate_family_requires_gnci_base():
    with pytest.raises(PreconditionError):
        generate_family(make_sequence([4, 5, 6, 7]), KIND_U, 1)
    with pytest.raises(PreconditionError):
        generate_family(make_sequence([16, 27, 45, 56]), KIND_V, 1)


def test_generate_family_direction_respects_permutation():
    shuffled = make_sequence([25, 19, 11, 17])
    fam = generate_family(shuffled, KIND_U, 2)
    assert fam.direction == (7, 7, 7, 7)
    assert fam.certificates[2].sequence == (39, 33, 25, 31)
    assert fam.certificates[2].classification == GORENSTEIN_NON_CI


# -- homogeneous-rows period -----------------------------------------------------------

def test_period_golden():
    p = homogeneous_rows_period(GOLDEN)
    assert (p.b, p.d, p.q, p.beta, p.alpha, p.period) == (7, 2, 1, 2, 1, 14)


def test_period_golden_is_permutation_invariant():
    p = homogeneous_rows_period(make_sequence([19, 17, 25, 11]))
    assert p.period == 14 and p.b == 7


def test_period_not_applicable_for_scan_base():
    # its form has rows 2 and 3 summing to zero, not rows 2 and 4
    with pytest.raises(NotApplicableError):
        homogeneous_rows_period(SCAN_BASE)


def test_period_requires_gnci():
    with pytest.raises(PreconditionError):
        homogeneous_rows_period(make_sequence([4, 5, 6, 7]))


def test_shift_by_b_shares_factor_two():
    from monocurve.errors import NotCoprimeError
    with pytest.raises(NotCoprimeError) as exc:
        make_sequence([18, 24, 32, 26])  # golden + 7
    assert exc.value.gcd == 2


def test_rotate_form_preserves_shape_and_kernel():
    f = golden_form()
    for k in range(4):
        rf = rotate_form(f, k)
        b = rf.permuted(GOLDEN)
        assert matvec(rf.matrix(), list(b)) == [0, 0, 0, 0]
        assert sorted(rf.c) == sorted(f.c)


# -- scans ----------------------------------------------------------------------------

def test_scan_zero_step_constant():
    rows = scan_translations(GOLDEN, (0, 0, 0, 0), 0, 2)
    assert [r.t for r in rows] == [0, 1, 2]
    assert all(r.classification == GORENSTEIN_NON_CI for r in rows)
    assert all(r.sequence == (11, 17, 25, 19) for r in rows)


def test_scan_diagonal_step_fourteen():
    rows = scan_translations(GOLDEN, (14, 14, 14, 14), 1, 5)
    assert all(r.classification == GORENSTEIN_NON_CI for r in rows)
    assert all(r.gcd == 1 for r in rows)


def test_scan_normalizes_common_factors():
    # (43,67,49,83) + 15 = (58,82,64,98) = 2 * (29,41,32,49), a GNCI curve
    rows = scan_translations(SCAN_BASE, (1, 1, 1, 1), 15, 15)
    assert rows[0].gcd == 2
    assert rows[0].sequence == (58, 82, 64, 98)
    assert rows[0].classification == GORENSTEIN_NON_CI


def test_scan_parallel_matches_serial():
    serial = scan_translations(GOLDEN, (1, 1, 1, 1), 0, 12, workers=1)
    parallel = scan_translations(GOLDEN, (1, 1, 1, 1), 0, 12, workers=3)
    assert serial == parallel


def test_scan_rejects_nonpositive_translates():
    with pytest.raises(ZeroOrNegativeEntryError):
        scan_translations(GOLDEN, (-12, 0, 0, 0), 0, 1)


def test_direction_to_original_round_trip():
    perm = (2, 0, 3, 1)
    vec = (5, 6, 7, 8)
    out = direction_to_original(perm, vec)
    assert tuple(out[p] for p in perm) == vec


def test_period_consistency_over_small_universe():
    # wherever the construction applies, its internal identities must hold
    # (they raise otherwise) and the period must drive a Gorenstein family
    import itertools
    applicable = 0
    for entries in itertools.combinations_with_replacement(range(2, 23), 4):
        if math.gcd(*entries) != 1:
            continue
        s = Sequence(entries)
        if classify(s).kind != GORENSTEIN_NON_CI:
            continue
        try:
            p = homogeneous_rows_period(s)
        except NotApplicableError:
            continue
        applicable += 1
        assert p.beta * p.b == p.period  # beta*b = alpha*y by construction
        assert p.beta <= p.d
        moved = tuple(v + p.period for v in entries)
        assert math.gcd(*moved) == 1
        assert classify(Sequence(moved)).kind == GORENSTEIN_NON_CI
    assert applicable >= 5


def test_detect_and_classify_require_four_generators():
    with pytest.raises(ValueError):
        detect_bresinsky_form(make_sequence([2, 3, 7]))
    with pytest.raises(ValueError):
        classify(make_sequence([2, 3]))


def test_second_golden_v_vector():
    # hand-expanded minors of [(-5,0,1,2), (0,-1,0,1), (3,1,-4,0)]
    f = detect_bresinsky_form(SCAN_BASE)
    assert translation_vector_v(f) == (9, 17, 11, 17)
