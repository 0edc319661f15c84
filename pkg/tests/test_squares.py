import itertools
import random

import pytest

from sqword.errors import (
    EmptyWordError,
    InvalidParamsError,
    NoSquareMatchesError,
    NotInPiError,
)
from sqword.squares import (
    Params,
    factor_minimal_squares,
    has_square_root,
    in_language,
    minimal_square_roots,
    minimal_squares,
    square_root,
)
from sqword.words import slope

P10 = Params(1, 0)

SMALL_PARAMS = [Params(a, b) for a in range(1, 7) for b in range(7)]


class TestRoots:
    def test_flagship_params(self):
        assert minimal_square_roots(P10) == ("0", "01", "010", "10", "100", "10010")

    def test_sixth_root_length(self):
        for p in SMALL_PARAMS:
            roots = minimal_square_roots(p)
            assert len(roots[5]) == (p.a + 2) + (p.b + 1) * (p.a + 1)

    def test_substituted(self):
        roots = minimal_square_roots(Params(2, 1))
        assert roots[4] == "1000100"
        assert roots[5] == "1000100100"

    def test_bad_params(self):
        with pytest.raises(InvalidParamsError):
            Params(0, 0)
        with pytest.raises(InvalidParamsError):
            Params(1, -1)

    def test_squares_are_doubled_roots(self):
        for p in SMALL_PARAMS[:8]:
            roots = minimal_square_roots(p)
            assert minimal_squares(p) == tuple(r + r for r in roots)

    def test_pairwise_non_prefix(self):
        # grounds the greedy determinism of the factorization
        for p in SMALL_PARAMS:
            squares = minimal_squares(p)
            for s, t in itertools.permutations(squares, 2):
                assert not t.startswith(s)

    def test_six_slope_comparison(self):
        # splitting any root around an occurrence of 10 (resp. 01) leaves the
        # left part with strictly smaller (resp. larger) slope
        for p in SMALL_PARAMS:
            for root in minimal_square_roots(p):
                for i in range(1, len(root) - 1):
                    left, right = root[:i], root[i:]
                    if right.startswith("10"):
                        assert slope(left) < slope(right)
                    if right.startswith("01"):
                        assert slope(left) > slope(right)


def language_words(p, max_blocks):
    """All finite concatenations of the two long roots, up to a block count."""
    five, six = minimal_square_roots(p)[4], minimal_square_roots(p)[5]
    words = [""]
    for _ in range(max_blocks):
        words += [w + five for w in words if len(w) < 60] + [
            w + six for w in words if len(w) < 60
        ]
    return words


class TestLanguage:
    def test_flagship_square(self):
        assert in_language("0101001001010010", P10)

    def test_empty(self):
        assert in_language("", P10)
        assert in_language("", Params(4, 4), allow_initial_runs=True)

    def test_zero_run_bound(self):
        assert not in_language("0101", Params(2, 0))
        assert in_language("00", P10)
        assert not in_language("000", P10)
        assert in_language("000", Params(2, 0))

    def test_initial_runs_mode(self):
        assert not in_language("0000", P10)
        assert in_language("0000", P10, allow_initial_runs=True)
        assert in_language("0000" + "10" * 3 + "100" + "10010", P10, allow_initial_runs=True)
        # the preamble cannot reappear after the long blocks start
        assert not in_language("10010" + "0000", P10, allow_initial_runs=True)

    def test_factors_of_generated_words(self):
        # every factor of a language word is in the language
        rng = random.Random(7)
        for p in (P10, Params(2, 0), Params(1, 2), Params(3, 1)):
            for base in language_words(p, 3)[1:]:
                for _ in range(10):
                    i = rng.randrange(len(base))
                    j = rng.randrange(i, len(base) + 1)
                    assert in_language(base[i:j], p), (p, base[i:j])

    def test_eleven_never_occurs(self):
        for p in (P10, Params(2, 3)):
            assert not in_language("11", p)
            assert not in_language("11", p, allow_initial_runs=True)

    def test_run_too_long_rejected(self):
        for p in (P10, Params(2, 0)):
            assert not in_language("1" + "0" * (p.a + 2) + "1", p)

    def test_large_b_matches_small_window(self):
        # the language seen through a short window stabilizes once b is large
        words = ["0101", "1010", "100100", "010010", "0010100", "10010010"]
        for w in words:
            for a in (1, 2):
                base = in_language(w, Params(a, len(w) + 1))
                for b in (len(w) + 5, 4 * len(w)):
                    assert in_language(w, Params(a, b)) == base

    def test_membership_against_uncapped_reference(self):
        # reference: simulate the block automaton with the b value as given,
        # never shrunk to the window size
        def reference(word, p, runs=False):
            if not word:
                return True
            five, six = minimal_square_roots(p)[4], minimal_square_roots(p)[5]
            four = "1" + "0" * p.a
            text = {0: five, 1: six, -2: four, -1: "0"}
            core = ((0, 0), (1, 0))
            follow = {0: core, 1: core, -2: ((-2, 0),) + core,
                      -1: ((-1, 0), (-2, 0)) + core}
            states = {(b, o) for b in (0, 1) for o in range(len(text[b]))}
            if runs:
                states.add((-1, 0))
                states.update((-2, o) for o in range(len(four)))
            for ch in word:
                nxt = set()
                for bid, off in states:
                    if text[bid][off] != ch:
                        continue
                    if off + 1 == len(text[bid]):
                        nxt.update(follow[bid])
                    else:
                        nxt.add((bid, off + 1))
                if not nxt:
                    return False
                states = nxt
            return True

        for n in range(13):
            for bits in range(1 << n):
                word = format(bits, f"0{n}b") if n else ""
                for p in (Params(1, 9), Params(2, 17), Params(1, 30)):
                    assert in_language(word, p) == reference(word, p), (word, p)
                    assert in_language(word, p, allow_initial_runs=True) == reference(
                        word, p, runs=True
                    ), (word, p)


class TestFactorization:
    def test_flagship(self):
        fact = factor_minimal_squares("0101001001010010", P10)
        assert fact.indices == (2, 1, 6)
        assert fact.word() == "0101001001010010"

    def test_single_square(self):
        assert factor_minimal_squares("00", P10).indices == (1,)
        assert factor_minimal_squares("01000100", Params(2, 0)).indices == (3,)

    def test_failure_position(self):
        with pytest.raises(NoSquareMatchesError) as err:
            factor_minimal_squares("00100010", P10)
        assert err.value.position == 2

    def test_empty(self):
        with pytest.raises(EmptyWordError):
            factor_minimal_squares("", P10)

    def test_roundtrip_random_products(self):
        rng = random.Random(11)
        for p in (P10, Params(2, 1), Params(3, 0)):
            squares = minimal_squares(p)
            for _ in range(50):
                indices = tuple(rng.randrange(1, 7) for _ in range(rng.randrange(1, 8)))
                word = "".join(squares[i - 1] for i in indices)
                assert factor_minimal_squares(word, p).indices == indices

    def test_json(self):
        fact = factor_minimal_squares("0101001001010010", P10)
        assert fact.to_json() == {"a": 1, "b": 0, "indices": [2, 1, 6]}


class TestSquareRoot:
    def test_flagship(self):
        assert square_root("0101001001010010", P10) == "01010010"

    def test_trivial(self):
        assert square_root("00", P10) == "0"

    def test_four_block(self):
        # factors as squares 4, 2, 1, 6; the root is the concatenation
        # 10 + 01 + 0 + 10010
        assert square_root("10100101001001010010", P10) == "1001010010"

    def test_membership(self):
        assert has_square_root("0101001001010010", P10)
        assert not has_square_root("", P10)
        assert has_square_root("1010", P10)
        # factors into squares but leaves the language (a zero run of 3)
        assert not has_square_root("101000", P10)

    def test_root_halves_length(self):
        for word in ("00", "0101", "0101001001010010"):
            assert len(square_root(word, P10)) * 2 == len(word)

    def test_not_in_pi(self):
        with pytest.raises(NotInPiError):
            square_root("01", P10)
        with pytest.raises(NotInPiError):
            square_root("101000", P10)

    def test_multiplicative_on_products(self):
        rng = random.Random(23)
        squares = minimal_squares(P10)
        pool = [
            "".join(squares[rng.randrange(6)] for _ in range(rng.randrange(1, 5)))
            for _ in range(60)
        ]
        pool = [w for w in pool if has_square_root(w, P10)]
        hits = 0
        for u in pool:
            for v in pool:
                if has_square_root(u + v, P10):
                    hits += 1
                    assert square_root(u + v, P10) == square_root(u, P10) + square_root(v, P10)
        assert hits > 10

    def test_each_square_in_own_language(self):
        for p in SMALL_PARAMS:
            for sq in minimal_squares(p):
                assert in_language(sq, p), (p, sq)
