import pytest

import tchrom


def test_star_table_row():
    f = tchrom.cqsf_labeled(tchrom.Graph.star(5), [2, 1, 3, 4, 5])
    assert f[(1, 1, 1, 1, 1)] == [6, 36, 36, 36, 6]
    assert f[(4, 1)] == [0, 1]
    assert len(f) == 13


def test_cycle_totals():
    c4 = tchrom.Graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    assert c4 == tchrom.Graph.cycle(4)
    assert tchrom.total_labeling(c4)[(1, 1, 1, 1)] == [56, 128, 208, 128, 56]
    assert tchrom.total_orientation(c4)[(2, 2)] == [2, 8, 8, 8, 2]
    assert tchrom.is_orientation_total_symmetric(c4)
    assert tchrom.csf(c4)[(2, 2)] == [2]


def test_closed_forms_match_brute_force():
    brute = tchrom.normalized_total_star(5)
    for alpha, coeffs in brute.items():
        assert tchrom.tst_coeff_closed(list(alpha), 5) == coeffs
    assert tchrom.star_cqsf_coeff_closed([1, 2, 1], 2, 4) == [0, 3, 3]
    assert tchrom.star_csf_coeff_closed([2, 1, 1]) == 6
    assert tchrom.tst_coeff_first_step([1, 2, 1], 4, 1) == 6


def test_identities():
    assert tchrom.verify_tree_formula(tchrom.Graph.path(5))
    assert tchrom.verify_csf_near_contraction(tchrom.Graph.cycle(4), 0, 1)
    assert tchrom.verify_orientation_near_contraction(tchrom.Graph.path(5), 1, 2)
    assert tchrom.verify_binomial_identity(6, 2, 2)
    assert tchrom.count_T(6, 2, 2, 1) == tchrom.closed_T(6, 2) == 9


def test_verify_reports():
    reports = tchrom.verify("config-model", 8)
    assert reports and all(not r["failures"] and r["instances"] > 0 for r in reports)


def test_errors():
    with pytest.raises(tchrom.FormatError):
        tchrom.Graph(3, [(0, 0)])
    with pytest.raises(tchrom.FormatError):
        tchrom.cqsf_labeled(tchrom.Graph.path(3), [1, 1, 2])
    with pytest.raises(tchrom.PreconditionViolation):
        tchrom.verify_tree_formula(tchrom.Graph.cycle(4))
    with pytest.raises(ValueError):
        tchrom.verify_orientation_near_contraction(tchrom.Graph.cycle(4), 0, 1)
    tchrom.set_vertex_cap(5)
    try:
        with pytest.raises(tchrom.CapExceeded):
            tchrom.total_labeling(tchrom.Graph.path(6))
    finally:
        tchrom.set_vertex_cap(8)
