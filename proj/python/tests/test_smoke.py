import pytest

import crystalrr

TYPES = ["G2_1", "D4_3", "F4_1", "E6_2", "E6_1", "E7_1", "E8_1"]
SIZES = dict(zip(TYPES, [15, 8, 53, 27, 79, 134, 249]))


def test_types():
    assert crystalrr.types() == TYPES


def test_sizes():
    for t in TYPES:
        assert crystalrr.crystal_size(t) == SIZES[t]


def test_unknown_type_raises():
    with pytest.raises(ValueError):
        crystalrr.crystal_size("A1_1")


def test_matrix_shape_and_ground_row():
    m = crystalrr.difference_matrix("D4_3")
    assert m["order"] == crystalrr.element_names("D4_3")
    assert m["order"][0] == "phi"
    assert m["entries"][0] == [0, 1, 2, 3, 4, 5, 6, 7]
    assert len(m["entries"]) == 8


def test_sum_equals_product():
    for t in TYPES:
        assert crystalrr.count_partitions(t, 25) == crystalrr.product_series(t, 25)


def test_check_report():
    report = crystalrr.check("D4_3", 30)
    assert report["pass"] is True
    assert report["first_mismatch"] is None
    assert report["c"] == report["d"]
    assert report["d"][0] == 1


def test_tables():
    rows = crystalrr.congruence_table("D4_3")
    assert rows[0] == ["phi", "r1"]
    assert sum(len(r) for r in rows) == 8
    assert crystalrr.initial_parts("D4_3") == [(1, "-10"), (2, "-11"), (3, "-21")]
