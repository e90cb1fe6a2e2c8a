import json

import pytest

from helpers import naive_classes
from monocremona import (
    canonical_form,
    compositions,
    conjectural_bound,
    determinant,
    inverse_degree,
    phi_nd,
)
from monocremona.enumeration import _enumerate_keys, enumerate_maps, verify_bounds

# raw candidate counts and class counts, frozen after cross-checking the
# pruned scan against the unpruned brute-force oracle
FROZEN = {
    (2, 2): (7, 2),
    (2, 3): (12, 2),
    (3, 1): (1, 1),
    (3, 2): (72, 4),
    (3, 3): (781, 37),
    (3, 4): (3504, 149),
    (4, 2): (782, 12),
}


def test_compositions_examples():
    assert compositions(2, 2) == [(0, 2), (1, 1), (2, 0)]
    assert len(compositions(2, 4)) == 10
    assert len(compositions(3, 4)) == 20
    assert compositions(0, 3) == [(0, 0, 0)]


def test_compositions_sorted_and_complete():
    out = compositions(4, 3)
    assert out == sorted(out)
    assert len(set(out)) == len(out)
    assert all(sum(c) == 4 and len(c) == 3 for c in out)


def test_frozen_counts():
    for (n, d), (raw, count) in FROZEN.items():
        got_raw, keys = _enumerate_keys(n, d)
        assert (got_raw, len(keys)) == (raw, count), (n, d)


@pytest.mark.parametrize("n,d", [(2, 2), (2, 3), (3, 2), (3, 3)])
def test_pruned_equals_unpruned_oracle(n, d):
    _, keys = _enumerate_keys(n, d)
    assert set(keys) == naive_classes(n, d)


def test_single_class_for_degree_one():
    maps = enumerate_maps(3, 1)
    assert len(maps) == 1
    assert maps[0].rows == canonical_form(phi_nd(3, 1)).rows


def test_emitted_matrices_are_valid_and_canonical(classes):
    for E in classes(3, 3):
        assert abs(determinant(E.rows)) == E.d
        assert canonical_form(E).rows == E.rows
        assert all(sum(r) == E.d for r in E.rows)


def test_callback_streams_each_class_once():
    seen = []
    maps = enumerate_maps(3, 2, callback=seen.append)
    assert seen == maps
    assert len({m.rows for m in maps}) == len(maps)


def test_parallel_runs_are_identical():
    base = verify_bounds(3, 3, jobs=1).to_json()
    for jobs in (2, 8):
        assert verify_bounds(3, 3, jobs=jobs).to_json() == base


def test_plane_summaries(summaries):
    for d in range(2, 7):
        s = summaries(2, d)
        assert s.violations == ()
        assert s.max_dprime == d
        assert s.case_histogram == {}


def test_plane_every_class_has_equal_inverse_degree(classes):
    for d in range(2, 7):
        for E in classes(2, d):
            assert inverse_degree(E) == d


def test_projective_three_space_summaries(summaries):
    for d in (2, 3, 4):
        s = summaries(3, d)
        assert s.violations == ()
        assert len(s.extremal_classes) == 1
        assert s.extremal_classes[0] == canonical_form(phi_nd(3, d)).rows
        assert sum(s.case_histogram.values()) == s.class_count
        assert s.max_dprime == d * d - d + 1


def test_dimension_four_degree_two(summaries):
    s = summaries(4, 2)
    assert s.violations == ()
    assert s.class_count == 12
    assert s.max_dprime == 4
    assert s.extremal_classes == (canonical_form(phi_nd(4, 2)).rows,)


def test_conjectural_bound_values():
    assert [conjectural_bound(3, d) for d in (2, 3, 4)] == [3, 7, 13]
    assert conjectural_bound(4, 2) == 4
    assert conjectural_bound(2, 9) == 9


def test_summary_json_roundtrip(summaries):
    s = summaries(3, 2)
    doc = json.loads(s.to_json())
    assert list(doc) == [
        "n",
        "d",
        "raw_count",
        "class_count",
        "extremal_classes",
        "violations",
        "case_histogram",
        "max_dprime",
    ]
    assert doc["class_count"] == 4
    assert doc["violations"] == []
