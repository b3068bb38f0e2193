"""Case dispatch, closed-form bases, dimension predicates, and the tables."""

import pytest

from thetadim import (
    InvalidParamsError,
    TableLookupError,
    all_pairs,
    build_c,
    case_landmarks,
    closed_form_basis,
    dimension_by_path_lengths,
    dimension_formula,
    dispatch_case,
    formula_representation,
    is_resolving,
    partition_index,
    representation,
    swap_isomorphism,
    valid_triples,
)
from thetadim.closed_form import CASE_TAGS


def test_dispatch_equal_outer_arms():
    case = dispatch_case(3, 7, 3)
    assert case.tag == "T4-P1" and not case.swapped


def test_dispatch_dominant_middle():
    case = dispatch_case(3, 5, 2)
    assert case.tag == "T1-P2" and not case.swapped


def test_dispatch_mirrored_dominant_middle():
    case = dispatch_case(2, 5, 3)
    assert case.tag == "T1-P2" and case.swapped


def test_dispatch_dominant_outer():
    case = dispatch_case(5, 3, 4)
    assert case.tag == "T3-P1" and not case.swapped


def test_dispatch_empty_outer_takes_precedence():
    assert dispatch_case(2, 3, 0).tag == "ZeroPath-P2"
    mirrored = dispatch_case(0, 3, 2)
    assert mirrored.tag == "ZeroPath-P2" and mirrored.swapped


def test_dispatch_equal_everything_goes_to_equal_outers():
    assert dispatch_case(3, 3, 3).tag == "T4-P3b"


def test_dispatch_rejects_invalid():
    with pytest.raises(InvalidParamsError):
        dispatch_case(0, 2, 5)


def test_dispatch_total_and_single_tagged():
    seen = set()
    for p, q, r in valid_triples(20):
        case = dispatch_case(p, q, r)
        assert case.tag in CASE_TAGS
        seen.add(case.tag)
    assert seen == set(CASE_TAGS)


def test_basis_equal_arms():
    result = closed_form_basis(3, 7, 3)
    assert result.basis == (1, 2, 6)
    assert result.dimension == 3
    assert result.case.tag == "T4-P1"


def test_basis_dominant_outer():
    result = closed_form_basis(5, 3, 4)
    assert result.basis == (1, 4)
    assert result.dimension == 2


def test_basis_single_vertex_outer_with_empty_arm():
    result = closed_form_basis(1, 4, 0)
    assert result.basis == (1, 2)
    assert result.case.tag == "ZeroPath-P1"


def test_basis_three_equal_hub_paths():
    result = closed_form_basis(2, 4, 2)
    assert result.dimension == 3
    assert result.case.tag == "T4-P1"


def test_basis_degenerate_landmark_collision_is_completed():
    # (1, 2, 1): the generic second landmark lands on v_1; the hub steps in
    result = closed_form_basis(1, 2, 1)
    assert result.basis == (1, 2)
    assert is_resolving(build_c(1, 2, 1), result.basis)


def test_dimension_examples():
    assert dimension_formula(3, 7, 3) == 3
    assert dimension_formula(3, 5, 2) == 2
    assert dimension_formula(1, 3, 1) == 3


def test_dimension_predicates_agree_everywhere():
    # transcription guard: the per-case dispatch and the path-length
    # characterization must never disagree
    for p, q, r in valid_triples(20):
        assert dimension_formula(p, q, r) == dimension_by_path_lengths(p, q, r), (p, q, r)


def test_dimension_three_families():
    for p in range(2, 8):  # every instance with at most 20 vertices
        if 3 * p - 1 <= 20:
            assert dimension_formula(p - 1, p + 1, p - 1) == 3  # three equal hub paths
        if 3 * p + 1 <= 20:
            assert dimension_formula(p - 1, p + 1, p + 1) == 3  # long outer arm
            assert dimension_formula(p - 1, p + 3, p - 1) == 3  # long middle arm


def test_swap_coherence():
    for p, q, r in valid_triples(14):
        assert dimension_formula(p, q, r) == dimension_formula(r, q, p)
        g = build_c(p, q, r)
        assert is_resolving(g, closed_form_basis(p, q, r).basis), (p, q, r)


def test_swapped_basis_pulls_back_through_inverse():
    # (2, 5, 3) dispatches through the swap; its basis must be the inverse
    # image of the basis computed on (3, 5, 2)
    sigma = swap_isomorphism(2, 5, 3)
    direct = closed_form_basis(3, 5, 2).basis
    pulled = closed_form_basis(2, 5, 3).basis
    assert sorted(sigma[v] for v in pulled) == sorted(direct)


def test_partition_index_examples():
    assert partition_index(3, 4, 2, dispatch_case(3, 4, 2), 3) == 2
    assert partition_index(3, 7, 3, dispatch_case(3, 7, 3), 1) == 1


def test_partition_index_rejects_case_mismatch():
    with pytest.raises(InvalidParamsError):
        partition_index(3, 4, 2, dispatch_case(3, 7, 3), 1)


def test_partition_index_rejects_vertex_out_of_range():
    with pytest.raises(ValueError):
        partition_index(3, 4, 2, dispatch_case(3, 4, 2), 10)


def test_partition_reports_overlap_as_lookup_error():
    # the (2, 3, 0) table spills one cell beyond its path segment
    case = dispatch_case(2, 3, 0)
    with pytest.raises(TableLookupError) as exc:
        partition_index(2, 3, 0, case, 3)
    assert exc.value.reason == "ambiguous"


def test_partition_unique_on_clean_instances():
    for p, q, r in [(3, 4, 2), (3, 5, 2), (3, 6, 1), (3, 3, 4), (4, 4, 2),
                    (4, 4, 1), (5, 4, 2), (6, 4, 1), (3, 7, 3), (2, 5, 2),
                    (3, 4, 3), (3, 3, 3), (5, 3, 4)]:
        case = dispatch_case(p, q, r)
        n = p + q + r
        labels = [partition_index(p, q, r, case, v) for v in range(1, n + 1)]
        assert all(l >= 1 for l in labels)


def test_formula_representation_examples():
    assert formula_representation(3, 4, 2, dispatch_case(3, 4, 2), 1) == (0, 2)
    assert formula_representation(3, 7, 3, dispatch_case(3, 7, 3), 1) == (0, 1, 3)


def test_formula_representation_zero_at_landmark_positions():
    for p, q, r in [(3, 4, 2), (3, 7, 3), (4, 4, 2), (5, 3, 4)]:
        case = dispatch_case(p, q, r)
        for i, w in enumerate(case_landmarks(p, q, r)):
            coords = formula_representation(p, q, r, case, w)
            assert coords[i] == 0


def test_formula_matches_bfs_on_clean_instances():
    clean = [(1, 4, 0), (3, 5, 0), (3, 4, 2), (3, 5, 2), (3, 6, 1), (3, 3, 4),
             (4, 4, 2), (4, 4, 1), (5, 4, 2), (6, 4, 1), (3, 7, 3), (2, 5, 2),
             (3, 4, 3), (3, 3, 3)]
    for p, q, r in clean:
        g = build_c(p, q, r)
        D = all_pairs(g)
        case = dispatch_case(p, q, r)
        landmarks = case_landmarks(p, q, r)
        for v in range(1, g.n + 1):
            assert formula_representation(p, q, r, case, v) == representation(
                D, v, landmarks
            ), (p, q, r, v)


def test_formula_divergence_on_dominant_outer_middle_cells():
    # known off-by-one in the dominant-outer table: the two middle-path
    # vertices past the first hub claim a second coordinate one too small
    g = build_c(5, 3, 4)
    D = all_pairs(g)
    case = dispatch_case(5, 3, 4)
    landmarks = case_landmarks(5, 3, 4)
    diffs = {}
    for v in range(1, 13):
        claimed = formula_representation(5, 3, 4, case, v)
        ground = representation(D, v, landmarks)
        if claimed != ground:
            diffs[v] = (claimed, ground)
    assert diffs == {
        7: ((2, 2), (2, 3)),
        8: ((3, 1), (3, 2)),
    }


def test_formula_representation_for_swapped_dispatch():
    # swapped triples evaluate the table in the mirrored labeling; distances
    # must still match BFS in the caller's labeling (triples chosen from
    # divergence-free tables)
    for p, q, r in [(2, 5, 3), (1, 5, 3), (1, 3, 4), (1, 4, 4)]:
        case = dispatch_case(p, q, r)
        assert case.swapped
        g = build_c(p, q, r)
        D = all_pairs(g)
        landmarks = case_landmarks(p, q, r)
        for v in range(1, g.n + 1):
            try:
                claimed = formula_representation(p, q, r, case, v)
            except TableLookupError:
                continue
            assert claimed == representation(D, v, landmarks), (p, q, r, v)
