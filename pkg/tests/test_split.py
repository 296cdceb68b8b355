import pytest

from cadorder.errors import BadFractions, InputError
from cadorder.ingest import split_dataset
from cadorder.ingest.split import split_sizes

IDS = [f"problem-{i:04d}" for i in range(7001)]


class TestSizes:
    def test_default_fractions(self):
        assert split_dataset(IDS, seed=1).sizes == (3545, 1735, 1721)

    def test_largest_remainder(self):
        assert split_sizes(10, (0.5, 0.25, 0.25)) == [5, 3, 2]
        assert split_sizes(30, (0.5, 0.25, 0.25)) == [15, 8, 7]
        assert sum(split_sizes(31, (1 / 3, 1 / 3, 1 / 3))) == 31


class TestPartition:
    def test_disjoint_cover(self):
        split = split_dataset(IDS[:500], seed=3)
        parts = [set(split.train), set(split.validation), set(split.test)]
        assert set().union(*parts) == set(IDS[:500])
        assert sum(len(p) for p in parts) == 500
        assert split.part_of(split.test[0]) == "test"

    def test_deterministic(self):
        assert split_dataset(IDS[:300], seed=42) == split_dataset(IDS[:300], seed=42)

    def test_input_order_does_not_matter(self):
        assert split_dataset(IDS[:300], seed=5) == split_dataset(list(reversed(IDS[:300])), seed=5)

    def test_seed_matters(self):
        assert split_dataset(IDS[:300], seed=1).train != split_dataset(IDS[:300], seed=2).train


class TestErrors:
    @pytest.mark.parametrize("fractions", [(0.5, 0.5), (0.6, 0.5, -0.1), (0.5, 0.3, 0.3), (0.5, 0.5, 0.0)])
    def test_bad_fractions(self, fractions):
        with pytest.raises(BadFractions):
            split_dataset(IDS[:10], seed=0, fractions=fractions)

    def test_duplicate_ids(self):
        with pytest.raises(InputError):
            split_dataset(["a", "b", "a"], seed=0)
