import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from seth_lab.editdist import (
    apply_ops,
    edit_alignment,
    edit_distance_banded,
    edit_distance_bitparallel,
    edit_distance_bruteforce,
    edit_distance_dp,
)

seqs = st.text(alphabet="0123", max_size=40)


def random_string(rng, max_len, alphabet="0123"):
    return "".join(rng.choice(alphabet) for _ in range(rng.randint(0, max_len)))


class TestDp:
    def test_deletion_only(self):
        assert edit_distance_dp("", "abc") == 3

    def test_identity(self):
        for s in ("", "0", "kitten", "0123" * 10):
            assert edit_distance_dp(s, s) == 0

    def test_kitten_sitting(self):
        # frozen from the brute-force oracle (both strings fit its cap)
        assert edit_distance_bruteforce("kitten", "sitting") == 3
        assert edit_distance_dp("kitten", "sitting") == 3

    def test_bounds(self):
        rng = random.Random(5)
        for _ in range(300):
            x = random_string(rng, 25)
            y = random_string(rng, 25)
            d = edit_distance_dp(x, y)
            assert abs(len(x) - len(y)) <= d <= max(len(x), len(y), 0)


class TestBanded:
    def test_zero_band_equal(self):
        assert edit_distance_banded("abc", "abc", 0) == 0

    def test_zero_band_unequal(self):
        assert edit_distance_banded("abc", "abd", 0) is None

    def test_matches_dp_inside_band(self):
        assert edit_distance_banded("kitten", "sitting", 3) == 3
        assert edit_distance_dp("kitten", "sitting") == 3

    def test_length_gap_exceeds(self):
        assert edit_distance_banded("", "abcd", 3) is None
        assert edit_distance_banded("", "abcd", 4) == 4

    def test_negative_band_rejected(self):
        with pytest.raises(ValueError):
            edit_distance_banded("a", "b", -1)

    def test_agreement_sweep(self):
        rng = random.Random(17)
        for _ in range(2000):
            x = random_string(rng, 30)
            y = random_string(rng, 30)
            k = rng.randint(0, 10)
            d = edit_distance_dp(x, y)
            b = edit_distance_banded(x, y, k)
            if d <= k:
                assert b == d
            else:
                assert b is None


class TestBitparallel:
    def test_empty(self):
        assert edit_distance_bitparallel("", "") == 0
        assert edit_distance_bitparallel("", "xyz") == 3

    def test_kitten_sitting(self):
        assert edit_distance_bitparallel("kitten", "sitting") == 3

    def test_random_200(self):
        rng = random.Random(99)
        x = "".join(rng.choice("0123") for _ in range(200))
        y = "".join(rng.choice("0123") for _ in range(200))
        assert edit_distance_bitparallel(x, y) == edit_distance_dp(x, y)

    def test_engine_equivalence_sweep(self):
        rng = random.Random(3)
        for _ in range(2000):
            x = random_string(rng, 60)
            y = random_string(rng, 60)
            assert edit_distance_bitparallel(x, y) == edit_distance_dp(x, y)

    def test_long_pattern_crosses_word_boundaries(self):
        rng = random.Random(12)
        for n in (63, 64, 65, 127, 128, 129, 500):
            x = "".join(rng.choice("01") for _ in range(n))
            y = "".join(rng.choice("01") for _ in range(n + rng.randint(0, 20)))
            assert edit_distance_bitparallel(x, y) == edit_distance_dp(x, y)


class TestBruteforce:
    def test_trivial(self):
        assert edit_distance_bruteforce("ab", "ab") == 0
        assert edit_distance_bruteforce("a", "") == 1

    def test_cap_enforced(self):
        with pytest.raises(ValueError):
            edit_distance_bruteforce("123456789", "a")

    def test_exhaustive_binary_up_to_4(self):
        strings = [
            "".join(bits)
            for n in range(5)
            for bits in itertools.product("01", repeat=n)
        ]
        for x in strings:
            for y in strings:
                assert edit_distance_bruteforce(x, y) == edit_distance_dp(x, y)


class TestMetricAxioms:
    @settings(max_examples=300, deadline=None)
    @given(seqs, seqs)
    def test_identity_and_symmetry(self, x, y):
        assert (edit_distance_dp(x, y) == 0) == (x == y)
        assert edit_distance_dp(x, y) == edit_distance_dp(y, x)

    @settings(max_examples=200, deadline=None)
    @given(seqs, seqs, seqs)
    def test_triangle(self, x, y, z):
        assert edit_distance_dp(x, z) <= edit_distance_dp(x, y) + edit_distance_dp(y, z)


class TestSuffixRunBound:
    def test_example(self):
        assert edit_distance_dp("01" + "111", "10" + "000") >= 3

    def test_zero_t_trivial(self):
        assert edit_distance_dp("01", "10") >= 0

    def test_sweep(self):
        rng = random.Random(23)
        for _ in range(200):
            t = rng.randint(1, 50)
            x = random_string(rng, 20)
            y = random_string(rng, 20)
            assert edit_distance_dp(x + "1" * t, y + "0" * t) >= t


class TestAlignment:
    def test_match_only(self):
        trace = edit_alignment("a", "a")
        assert [op.kind for op in trace.ops] == ["match"]
        assert trace.cost == 0

    def test_single_substitution(self):
        trace = edit_alignment("a", "b")
        assert [op.kind for op in trace.ops] == ["substitute"]
        assert trace.cost == 1

    def test_replay_and_cost(self):
        rng = random.Random(31)
        for _ in range(300):
            x = random_string(rng, 20)
            y = random_string(rng, 20)
            trace = edit_alignment(x, y)
            assert apply_ops(x, trace) == y
            assert trace.cost == edit_distance_dp(x, y)
            assert trace.cost == sum(1 for op in trace.ops if op.kind != "match")

    def test_deterministic(self):
        a = edit_alignment("kitten", "sitting")
        b = edit_alignment("kitten", "sitting")
        assert a == b
