import pytest
from hypothesis import given

from fockweyl.partitions import (Box, Partition, addable_boxes,
                                 addable_row_indices, all_partitions, color,
                                 content, n_left, n_right, removable_boxes)

from conftest import partitions


# Colors of the 36 boxes of (7,6,6,5,5,3,3,1) at ell=3, frozen from the
# reference diagram (row 1 at the top, leftmost column first).
FIGURE_COLORS = {
    1: [0, 1, 2, 0, 1, 2, 0],
    2: [2, 0, 1, 2, 0, 1],
    3: [1, 2, 0, 1, 2, 0],
    4: [0, 1, 2, 0, 1],
    5: [2, 0, 1, 2, 0],
    6: [1, 2, 0],
    7: [0, 1, 2],
    8: [2],
}


class TestContentColor:
    def test_corner(self):
        assert content(Box(1, 1)) == 0
        assert color(Box(1, 1), 3) == 0

    def test_deep_row(self):
        assert content(Box(8, 1)) == -7
        assert color(Box(8, 1), 3) == 2

    def test_wide_row(self):
        assert content(Box(2, 10)) == 8

    def test_color_needs_ell(self):
        with pytest.raises(ValueError):
            color(Box(1, 1), 1)

    def test_figure_golden(self):
        lam = Partition((7, 6, 6, 5, 5, 3, 3, 1))
        assert lam.size == 36
        seen = 0
        for b in lam.boxes():
            assert color(b, 3) == FIGURE_COLORS[b.row][b.col - 1]
            seen += 1
        assert seen == 36


class TestPartitionType:
    def test_validation(self):
        with pytest.raises(ValueError):
            Partition((1, 2))
        with pytest.raises(ValueError):
            Partition((2, 0))

    def test_json(self):
        lam = Partition((3, 1))
        assert lam.to_json() == [3, 1]
        assert Partition.from_json([3, 1]) == lam

    def test_add_remove_round_trip(self):
        for lam in all_partitions(8):
            for b in addable_boxes(lam, 2):
                assert lam.add_box(b).remove_box(b) == lam


class TestAddableRemovable:
    def test_empty(self):
        assert addable_boxes(Partition(()), 2) == [Box(1, 1)]
        assert color(Box(1, 1), 2) == 0

    def test_single_box_color_filter(self):
        lam = Partition((1,))
        assert addable_boxes(lam, 2, 1) == [Box(1, 2), Box(2, 1)]
        assert [content(b) for b in addable_boxes(lam, 2, 1)] == [1, -1]
        assert removable_boxes(lam, 2, 1) == []

    def test_ordering_decreasing_content(self):
        lam = Partition((4, 2, 2, 1))
        for boxes in (addable_boxes(lam, 3), removable_boxes(lam, 3)):
            cs = [content(b) for b in boxes]
            assert cs == sorted(cs, reverse=True)

    @given(partitions())
    def test_counting_invariant(self, lam):
        for ell in (2, 3, 4):
            assert len(addable_boxes(lam, ell)) == len(removable_boxes(lam, ell)) + 1

    @given(partitions())
    def test_distinct_contents(self, lam):
        boxes = addable_boxes(lam, 2) + removable_boxes(lam, 2)
        cs = [content(b) for b in boxes]
        assert len(set(cs)) == len(cs)


class TestBoxStatistics:
    def test_empty(self):
        assert n_left(Partition(()), Box(1, 1), 2) == 0

    def test_single_below(self):
        assert n_left(Partition((1,)), Box(2, 1), 2) == -1

    def test_single_right(self):
        assert n_left(Partition((1,)), Box(1, 2), 2) == 0

    def test_not_addable(self):
        with pytest.raises(ValueError):
            n_left(Partition((1,)), Box(3, 1), 2)

    def test_left_right_split(self):
        # everything visible exactly once: n_left + n_right = |R| - |A| + 1
        for lam in all_partitions(8):
            for ell in (2, 3):
                for b in addable_boxes(lam, ell):
                    i = color(b, ell)
                    total = (len(removable_boxes(lam, ell, i))
                             - len(addable_boxes(lam, ell, i)) + 1)
                    assert n_left(lam, b, ell) + n_right(lam, b, ell) == total


class TestAddableRows:
    def test_empty(self):
        assert addable_row_indices(Partition(()), 3) == [1]

    def test_single(self):
        assert addable_row_indices(Partition((1,)), 3) == [1, 2]

    def test_figure_partition(self):
        lam = Partition((10, 10, 8, 8, 8, 6, 6, 6, 6, 1, 1))
        assert addable_row_indices(lam, 12) == [1, 3, 6, 10, 12]

    def test_rank_too_small(self):
        with pytest.raises(ValueError):
            addable_row_indices(Partition((1, 1)), 2)

    def test_first_row_always_addable(self):
        for lam in all_partitions(6):
            assert addable_row_indices(lam, len(lam) + 1)[0] == 1

    def test_rows_match_addable_boxes(self):
        for lam in all_partitions(6):
            rows = addable_row_indices(lam, len(lam) + 1)
            boxes = addable_boxes(lam, 2)
            assert rows == sorted(b.row for b in boxes)
