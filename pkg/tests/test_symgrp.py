import pytest
from hypothesis import given, settings, strategies as st

from isofam.symgrp import (
    CxRow,
    cx_multiplicities,
    kostka,
    kostka_by_characters,
    mn_character,
    nonsign_partitions,
    parse_partition,
    partition_str,
    partitions,
    permutation_module_vectors,
    unique_bijection,
)


@st.composite
def partition_of(draw, m):
    parts = partitions(m)
    return draw(st.sampled_from(parts))


class TestPartitions:
    @pytest.mark.parametrize(
        "m,count", [(1, 1), (2, 2), (3, 3), (4, 5), (5, 7), (6, 11)]
    )
    def test_counts(self, m, count):
        assert len(partitions(m)) == count

    def test_order(self):
        assert partitions(4) == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]

    def test_string_round_trip(self):
        assert parse_partition("2+1+1") == (2, 1, 1)
        assert partition_str((3, 2)) == "3+2"

    def test_nonsign_excludes_all_ones(self):
        assert (1, 1, 1) not in nonsign_partitions(3)
        assert len(nonsign_partitions(5)) == 6


class TestKostka:
    def test_size_mismatch(self):
        with pytest.raises(ValueError):
            kostka((2,), (1, 1, 1))

    @given(st.integers(1, 6).flatmap(lambda m: partition_of(m)))
    @settings(max_examples=40)
    def test_diagonal_is_one(self, lam):
        assert kostka(lam, lam) == 1

    @given(st.integers(1, 6).flatmap(lambda m: partition_of(m)))
    @settings(max_examples=40)
    def test_single_row_shape(self, mu):
        assert kostka((sum(mu),), mu) == 1

    def test_known_value(self):
        assert kostka((3, 1), (2, 1, 1)) == 2

    def test_dominance_vanishing(self):
        # shape strictly below content in dominance admits no tableau
        assert kostka((1, 1, 1), (3,)) == 0
        assert kostka((2, 1), (3,)) == 0

    def test_hook_shape_values(self):
        assert kostka((2, 1), (1, 1, 1)) == 2
        assert kostka((2, 2), (2, 1, 1)) == 1


class TestCharacterOracle:
    def test_s3_character_table(self):
        # rows: (3), (2,1), (1,1,1); columns: cycle types (1,1,1), (2,1), (3)
        table = {
            (3,): {(1, 1, 1): 1, (2, 1): 1, (3,): 1},
            (2, 1): {(1, 1, 1): 2, (2, 1): 0, (3,): -1},
            (1, 1, 1): {(1, 1, 1): 1, (2, 1): -1, (3,): 1},
        }
        for lam, row in table.items():
            for ct, val in row.items():
                assert mn_character(lam, ct) == val

    def test_s4_dimensions(self):
        dims = {(4,): 1, (3, 1): 3, (2, 2): 2, (2, 1, 1): 3, (1, 1, 1, 1): 1}
        for lam, dim in dims.items():
            assert mn_character(lam, (1, 1, 1, 1)) == dim

    def test_s5_dimensions(self):
        dims = {
            (5,): 1, (4, 1): 4, (3, 2): 5, (3, 1, 1): 6,
            (2, 2, 1): 5, (2, 1, 1, 1): 4, (1, 1, 1, 1, 1): 1,
        }
        for lam, dim in dims.items():
            assert mn_character(lam, tuple([1] * 5)) == dim

    def test_sign_character(self):
        assert mn_character((1, 1, 1, 1), (4,)) == -1
        assert mn_character((1, 1, 1, 1), (2, 2)) == 1

    @pytest.mark.parametrize("m", [2, 3, 4, 5])
    def test_two_kostka_routes_agree(self, m):
        for lam in partitions(m):
            for mu in partitions(m):
                assert kostka(lam, mu) == kostka_by_characters(lam, mu)


class TestBijection:
    def test_m3(self):
        assert unique_bijection(3) == {(3,): (3,), (2, 1): (2, 1)}

    def test_m4_identity(self):
        bij = unique_bijection(4)
        assert bij == {p: p for p in nonsign_partitions(4)}

    def test_m5_identity(self):
        bij = unique_bijection(5)
        assert bij == {p: p for p in nonsign_partitions(5)}

    @pytest.mark.parametrize("m", [3, 4, 5])
    def test_matched_multiplicity_is_one(self, m):
        for rho, mu in unique_bijection(m).items():
            assert kostka(rho, mu) == 1

    @pytest.mark.parametrize("m", [3, 4, 5])
    def test_no_module_collapse(self, m):
        vecs = permutation_module_vectors(m)
        assert len(set(vecs.values())) == len(vecs)


class TestCxRows:
    def test_m3(self):
        rows = {r.rho: r for r in cx_multiplicities(3)}
        assert rows[(3,)].vector() == (1, 0)
        assert rows[(2, 1)].vector() == (1, 1)

    def test_m4_row(self):
        rows = {r.rho: r for r in cx_multiplicities(4)}
        assert rows[(2, 1, 1)].vector() == (1, 2, 1, 1)

    def test_m5_row(self):
        rows = {r.rho: r for r in cx_multiplicities(5)}
        assert rows[(2, 1, 1, 1)].vector() == (1, 3, 3, 3, 2, 1)

    @pytest.mark.parametrize("m", [3, 4, 5])
    def test_diagonal_normalization(self, m):
        for row in cx_multiplicities(m):
            assert row.multiplicities[row.rho] == 1

    @pytest.mark.parametrize("m,count", [(3, 2), (4, 4), (5, 6)])
    def test_row_counts(self, m, count):
        assert len(cx_multiplicities(m)) == count
