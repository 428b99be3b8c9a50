from collections import Counter
from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from colorpaths.enumeration import (
    PathError,
    SizeCapError,
    Step,
    colored_count,
    enumerate_paths,
    grouped_count,
    oracle_series,
    parse_path,
    path_to_string,
    step_histogram,
)
from colorpaths.families import recurrence_series
from colorpaths.model import Family, FamilySpec

CAT, BIG, SMALL, MOTZ = Family.CATALAN, Family.SCHRODER_LARGE, Family.SCHRODER_SMALL, Family.MOTZKIN


def naive_words(family, size):
    """Every string over {U, L, D} filtered by the path rules; no pruning."""
    target = size if family is MOTZ else 2 * size
    lvl = 1 if family is MOTZ else 2
    found = []
    for length in range(target + 1):
        for word in product("ULD", repeat=length):
            if sum(lvl if c == "L" else 1 for c in word) != target:
                continue
            h, ok = 0, True
            for c in word:
                if c == "L" and (family is CAT or (family is SMALL and h == 0)):
                    ok = False
                h += {"U": 1, "L": 0, "D": -1}[c]
                if h < 0:
                    ok = False
            if ok and h == 0:
                found.append("".join(word))
    return found


def words(family, size):
    return [path_to_string(p) for p in enumerate_paths(family, size)]


class TestEnumeratePaths:
    def test_empty(self):
        assert words(CAT, 0) == [""]

    def test_motzkin_three(self):
        assert sorted(words(MOTZ, 3)) == sorted(["LLL", "LUD", "ULD", "UDL"])

    def test_small_schroder_two(self):
        assert sorted(words(SMALL, 2)) == sorted(["UUDD", "UDUD", "ULD"])

    def test_large_schroder_two(self):
        assert sorted(words(BIG, 2)) == sorted(["UUDD", "UDUD", "ULD", "LL", "LUD", "UDL"])

    def test_order_is_lexicographic_u_l_d(self):
        key = {"U": 0, "L": 1, "D": 2}
        for fam in Family:
            ws = words(fam, 5)
            assert ws == sorted(ws, key=lambda w: [key[c] for c in w])
        assert words(MOTZ, 3) == ["ULD", "UDL", "LUD", "LLL"]

    @pytest.mark.parametrize("fam", list(Family))
    @pytest.mark.parametrize("size", range(6))
    def test_matches_naive_filter(self, fam, size):
        if fam is not MOTZ and size > 4:
            return
        assert sorted(words(fam, size)) == sorted(naive_words(fam, size))

    @pytest.mark.parametrize("fam", list(Family))
    def test_exhaustive_and_unique(self, fam):
        size = 7
        ws = words(fam, size)
        assert len(ws) == len(set(ws))
        assert len(ws) == recurrence_series(FamilySpec(fam), size).coefficients[size]

    def test_catalan_step_balance(self):
        for size in range(9):
            for p in enumerate_paths(CAT, size):
                assert p.steps.count(Step.UP) == size == p.downs
                assert p.size == size

    def test_size_cap(self):
        with pytest.raises(SizeCapError, match="--force"):
            list(enumerate_paths(BIG, 9))
        assert sum(1 for _ in enumerate_paths(MOTZ, 11, force=True)) == 5798


class TestColoredCount:
    def test_large_schroder_size_one(self):
        assert colored_count(BIG, 1, 1, 3) == 4

    def test_catalan(self):
        assert colored_count(CAT, 3, 2, 1) == 40
        assert colored_count(CAT, 3, 2, 9) == 40

    @pytest.mark.parametrize("fam", list(Family))
    @pytest.mark.parametrize("m,n", [(0, 0), (2, 3), (5, 1)])
    def test_size_zero(self, fam, m, n):
        assert colored_count(fam, 0, m, n) == 1

    @pytest.mark.parametrize("fam", list(Family))
    def test_uncolored_matches_recurrence(self, fam):
        expected = recurrence_series(FamilySpec(fam), 8).coefficients
        assert tuple(colored_count(fam, s, 1, 1) for s in range(9)) == expected

    @pytest.mark.parametrize("fam", list(Family))
    def test_weight_factorization(self, fam):
        for size in range(6):
            hist = step_histogram(fam, size)
            direct = Counter((p.downs, p.levels) for p in enumerate_paths(fam, size))
            assert hist == direct
            for m in range(4):
                for n in range(4):
                    assert grouped_count(hist, m, n) == colored_count(fam, size, m, n)

    @given(st.sampled_from(list(Family)), st.integers(0, 6), st.integers(0, 5), st.integers(0, 5))
    def test_monotone_in_colors(self, fam, size, m, n):
        base = colored_count(fam, size, m, n)
        assert colored_count(fam, size, m + 1, n) >= base
        assert colored_count(fam, size, m, n + 1) >= base

    def test_oracle_series(self):
        r = oracle_series(FamilySpec(MOTZ, 2, 1), 4)
        assert r.coefficients == (1, 1, 3, 7, 21)
        assert r.method.value == "oracle"


class TestParse:
    def test_valid(self):
        p = parse_path("UDUD", CAT)
        assert p.size == 2

    def test_axis_level_small_schroder(self):
        with pytest.raises(PathError, match="position 3.*height 0"):
            parse_path("UDL", SMALL)

    def test_final_height(self):
        with pytest.raises(PathError, match="final height 1"):
            parse_path("UUD", CAT)

    def test_below_axis(self):
        with pytest.raises(PathError, match="position 1"):
            parse_path("DU", MOTZ)

    def test_level_in_catalan(self):
        with pytest.raises(PathError, match="position 2"):
            parse_path("ULD", CAT)

    def test_unknown_char(self):
        with pytest.raises(PathError, match="'X'"):
            parse_path("UXD", MOTZ)

    def test_level_width_follows_family(self):
        assert parse_path("ULD", BIG).size == 2
        assert parse_path("ULD", MOTZ).size == 3

    @pytest.mark.parametrize("fam", list(Family))
    def test_round_trip(self, fam):
        for p in enumerate_paths(fam, 5):
            assert parse_path(path_to_string(p), fam) == p
