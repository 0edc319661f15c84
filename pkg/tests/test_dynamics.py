import itertools

import pytest

from sqword.dynamics import (
    PeriodReport,
    detect_period,
    find_periodic_shift,
    fixed_point_solutions,
    fixed_point_stream,
    no_square_prefix_word,
    square_prefixes,
    square_root_prefix,
    square_root_prefix_info,
    two_periodic_word,
    verify_fixed_point,
)
from sqword.errors import (
    EmptyAfterTrimError,
    NotInPiError,
    PreconditionFailedError,
)
from sqword.solutions import classify, is_solution, Verdict
from sqword.squares import Params, has_square_root, minimal_square_roots
from sqword.words import are_conjugate, exchange_first_two

P10 = Params(1, 0)
BLOCK = "01010010"


class TestSolutionChain:
    def test_first_step(self):
        chain = fixed_point_solutions(BLOCK, 1)
        assert next(chain) == BLOCK
        z1 = next(chain)
        assert z1 == exchange_first_two(BLOCK) + BLOCK * 2
        assert len(z1) == 24
        assert z1 == "100100100101001001010010"

    def test_growth_factor(self):
        for c in (1, 2):
            chain = fixed_point_solutions(BLOCK, c)
            lengths = [len(next(chain)) for _ in range(4)]
            for prev, cur in zip(lengths, lengths[1:]):
                assert cur == (2 * c + 1) * prev

    def test_chain_members_are_solutions(self):
        chain = fixed_point_solutions(BLOCK, 1)
        words = [next(chain) for _ in range(5)]
        for word in words:
            assert is_solution(word, P10)

    def test_two_apart_nesting(self):
        # consecutive words differ in their first two letters, but every
        # word is a prefix of the one two steps later
        chain = fixed_point_solutions(BLOCK, 1)
        words = [next(chain) for _ in range(6)]
        for near, far in zip(words, words[2:]):
            assert far.startswith(near)
        for prev, cur in zip(words, words[1:]):
            assert cur[:2] == prev[1] + prev[0]

    def test_second_iterate_classifies_type_two(self):
        chain = fixed_point_solutions(BLOCK, 1)
        next(chain)
        next(chain)
        z2 = next(chain)
        assert classify(z2).verdict is Verdict.TYPE_II

    def test_preconditions(self):
        with pytest.raises(PreconditionFailedError):
            fixed_point_solutions("10010", 1)  # not longer than the sixth root
        with pytest.raises(PreconditionFailedError):
            fixed_point_solutions("0101", 1)  # not reversed standard
        with pytest.raises(PreconditionFailedError):
            fixed_point_solutions(BLOCK, 0)


class TestStreams:
    def test_sl_stream_extends_chain(self):
        stream = fixed_point_stream(BLOCK, 1)
        prefix = stream.prefix(600)
        chain = fixed_point_solutions(BLOCK, 1)
        z0 = next(chain)
        next(chain)
        z2 = next(chain)
        assert prefix.startswith(z0 + z0)
        assert prefix.startswith(z2 + z2[: len(prefix) - len(z2)])

    def test_no_square_prefix_head(self):
        stream = no_square_prefix_word(1)
        assert stream.prefix(16).startswith("100100" + "1001010010")

    def test_no_square_prefix_blocks_in_language(self):
        for a in (1, 2):
            stream = no_square_prefix_word(a)
            word, trace = stream.prefix_blocks(800)
            assert trace[:5] == (5, 6, 2, 1, 6)
            assert has_square_root(word, stream.params)

    def test_two_periodic_block_counts(self):
        stream = two_periodic_word(1)
        trace = []
        for idx in stream.blocks():
            trace.append(idx)
            if len(trace) >= 2 + 4 + 14 + 56:
                break
        assert trace[:2] == [2, 1]
        assert trace[2:6] == [6, 6, 3, 3]
        assert trace[6:20] == [6] * 6 + [3] * 8
        assert trace[20:76] == [6] * 24 + [3] * 32

    def test_stream_prefix_materializes_whole_blocks(self):
        stream = no_square_prefix_word(1)
        word, trace = stream.prefix_blocks(100)
        squares = [r + r for r in minimal_square_roots(stream.params)]
        assert word == "".join(squares[i - 1] for i in trace)
        assert len(word) >= 100


class TestSquareRootPrefix:
    def test_exact(self):
        assert square_root_prefix("0101001001010010", P10) == "01010010"

    def test_trim(self):
        root = square_root_prefix("010100100101001001", P10, trim=True)
        assert root == "01010010"
        _, parsed = square_root_prefix_info("010100100101001001", P10)
        assert parsed == 16  # two trailing letters trimmed

    def test_trivial(self):
        assert square_root_prefix("00", P10) == "0"

    def test_exact_mode_rejects_partial(self):
        with pytest.raises(NotInPiError):
            square_root_prefix("010100100101001001", P10)

    def test_trim_mode_needs_one_square(self):
        with pytest.raises(EmptyAfterTrimError):
            square_root_prefix("01", P10, trim=True)


class TestSquarePrefixes:
    @pytest.mark.parametrize(
        "word,expected",
        [("0101", [4]), ("00100", [2]), ("0110", []), ("", []), ("00", [2])],
    )
    def test_examples(self, word, expected):
        assert square_prefixes(word) == expected

    def test_against_definition(self):
        for bits, n in itertools.product(range(256), (7, 8)):
            word = format(bits % (1 << n), f"0{n}b")
            expected = [
                 2 * k
                for k in range(1, n // 2 + 1)
                if word[:k] == word[k : 2 * k]
            ]
            assert square_prefixes(word) == expected


class TestDetectPeriod:
    def test_purely_periodic(self):
        report = detect_period("010101", 4)
        assert (report.preperiod, report.period, report.period_word) == (0, 2, "01")

    def test_preperiod(self):
        report = detect_period("0010101", 4)
        assert (report.preperiod, report.period) == (1, 2)

    def test_no_period(self):
        assert detect_period("01101001", 2) is None

    def test_trailing_run_is_an_eventual_period(self):
        report = detect_period("01101000", 2)
        assert (report.preperiod, report.period, report.period_word) == (5, 1, "0")

    def test_reference_conjugacy(self):
        word = "10010100" * 5
        report = detect_period(word, 8, reference=BLOCK)
        assert report.preperiod == 0 and report.period == 8
        assert report.conjugate_to == BLOCK

    def test_minimum_period_of_periodic_word(self):
        # a primitive period word cannot be explained by a shorter period
        word = "0010110" * 6
        report = detect_period(word)
        assert (report.preperiod, report.period) == (0, 7)

    def test_empty(self):
        assert detect_period("", 3) is None


class TestVerification:
    def test_sl_fixed_point(self):
        stream = fixed_point_stream(BLOCK, 1)
        assert verify_fixed_point(stream, 2000)

    def test_no_square_prefix_fixed_point(self):
        for a in (1, 2, 3):
            assert verify_fixed_point(no_square_prefix_word(a), 2000)

    def test_exactly_one_square_prefix(self):
        for a in (1, 2, 3):
            stream = no_square_prefix_word(a)
            roots = minimal_square_roots(stream.params)
            window = 4 * len(roots[4] + roots[5] + roots[2] + roots[5])
            prefix = stream.prefix(window)[:window]
            assert square_prefixes(prefix) == [2 * len(roots[4])], a

    def test_two_periodic_point(self):
        for a in (1, 2, 3):
            stream = two_periodic_word(a)
            assert not verify_fixed_point(stream, 2000, iterations=1)
            assert verify_fixed_point(stream, 2000, iterations=2)

    def test_two_periodic_divergence_is_early(self):
        stream = two_periodic_word(1)
        word = stream.prefix(600)
        root, _ = square_root_prefix_info(word, stream.params)
        # the root strays from the word already inside the first few blocks
        agree = next(i for i, (x, y) in enumerate(zip(word, root)) if x != y)
        assert agree <= 10

    def test_periodic_shift_found(self):
        stream = fixed_point_stream(BLOCK, 1)
        found = find_periodic_shift(stream, BLOCK)
        assert found is not None
        offset, report = found
        assert 0 <= offset <= len(BLOCK) ** 2
        assert report.preperiod == 0
        assert report.period == len(BLOCK)
        assert are_conjugate(report.period_word, BLOCK)

    def test_shifted_root_leaves_the_language_factors(self):
        # dropping one sixth-root length of the single-square-prefix word
        # yields a square root whose visible prefix never occurs in the word
        for a in (1, 2):
            stream = no_square_prefix_word(a)
            word = stream.prefix(12000)
            shift = len(minimal_square_roots(stream.params)[5])
            root, _ = square_root_prefix_info(word[shift:], stream.params)
            group = "1" + "0" * (a + 1) + "1" + "0" * (a + 1) + "1" + "0" * a
            visible = "01" + "0" * a + group * 3 + "1"
            assert root.startswith(visible)
            assert visible not in word[:10000]


def test_period_report_json():
    report = PeriodReport(1, 2, "01", conjugate_to=None)
    assert report.to_json() == {
        "preperiod": 1,
        "period": 2,
        "period_word": "01",
        "conjugate_to": None,
    }
