"""Checking and classifying square-root solutions.

A nonempty binary word w is a *solution* (for parameters a, b) when its
square has a square root and that root is w again.  Every primitive solution
is either a reversed standard word, or the image of a nontrivial primitive
pattern word under the block substitution S -> B, L -> exchange(B) for a
long enough reversed standard block B; nonprimitive solutions are powers of
primitive ones.  The classifier implements exactly that trichotomy and
raises if a solution ever escapes it.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterator

from .errors import (
    ClassificationContradictionError,
    EmptyWordError,
    InvalidLetterError,
    NotDecomposableError,
    TooShortError,
)
from .squares import Params, in_language, minimal_square_roots, scan_minimal_squares
from .standard import central_word, is_reversed_standard
from .words import check_binary, exchange_first_two, primitive_root

_PATTERN_ALPHABET = frozenset("SL")


def doubling_orbits(n: int) -> tuple[tuple[int, ...], ...]:
    """Orbit partition of {0, ..., n-1} under x -> 2x mod n.

    Orbits are two-sided: i and j share an orbit when some forward images
    2^k1 i and 2^k2 j agree, i.e. the weakly connected components of the
    doubling graph.
    """
    if n < 1:
        raise EmptyWordError("orbit partition needs n >= 1")
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i in range(n):
        ri, rj = find(i), find(2 * i % n)
        if ri != rj:
            parent[ri] = rj
    groups: dict[int, list[int]] = {}
    for i in range(n):
        groups.setdefault(find(i), []).append(i)
    return tuple(sorted((tuple(g) for g in groups.values()), key=lambda g: g[0]))


def _check_pattern(pattern: str) -> str:
    if not isinstance(pattern, str) or not _PATTERN_ALPHABET.issuperset(pattern):
        raise InvalidLetterError("pattern words use the alphabet {'S', 'L'}")
    if not pattern:
        raise EmptyWordError("pattern words are nonempty")
    return pattern


def is_pattern_word(pattern: str) -> bool:
    """True iff the {S, L}-word is constant on every doubling orbit."""
    _check_pattern(pattern)
    return all(
        len({pattern[i] for i in orbit}) == 1 for orbit in doubling_orbits(len(pattern))
    )


def substitute_pattern(pattern: str, block: str) -> str:
    """Replace S by *block* and L by *block* with its first two letters swapped."""
    _check_pattern(pattern)
    check_binary(block)
    if len(block) < 2:
        raise TooShortError("block substitution needs a block of length at least 2")
    swapped = exchange_first_two(block)
    return "".join(block if ch == "S" else swapped for ch in pattern)


def is_solution(word: str, params: Params) -> bool:
    """True iff the square of *word* has a square root equal to *word*."""
    check_binary(word)
    if not word:
        raise EmptyWordError("solutions are nonempty")
    square = word + word
    indices, pos = scan_minimal_squares(square, params)
    if pos != len(square):
        return False
    roots = minimal_square_roots(params)
    if "".join(roots[i - 1] for i in indices) != word:
        return False
    return in_language(square, params)


def _interior_zero_runs(word: str) -> list[int]:
    parts = word.split("1")
    return [len(p) for p in parts[1:-1]]


def _candidate_params(word: str, a_max: int, b_max: int) -> Iterator[Params]:
    # Sound pruning for words with >= 2 ones: interior zero runs of the
    # square must all be a or a+1, and the counts of short runs between
    # consecutive long runs must all be b or b+1.
    square = word + word
    runs = _interior_zero_runs(square)
    low, high = min(runs), max(runs)
    if high > low + 1:
        return
    for a in (low - 1, low):
        if not 1 <= a <= a_max:
            continue
        if any(r != a and r != a + 1 for r in runs):
            continue
        marks = [i for i, r in enumerate(runs) if r == a + 1]
        if len(marks) >= 2:
            gaps = [marks[j + 1] - marks[j] - 1 for j in range(len(marks) - 1)]
            g = min(gaps)
            if max(gaps) > g + 1:
                continue
            for b in sorted({g - 1, g}):
                if 0 <= b <= b_max:
                    yield Params(a, b)
        else:
            for b in range(b_max + 1):
                yield Params(a, b)


def _candidates(word: str, a_max: int, b_max: int) -> Iterator[Params]:
    if word.count("1") >= 2:
        yield from _candidate_params(word, a_max, b_max)
    else:
        for a in range(1, a_max + 1):
            for b in range(b_max + 1):
                yield Params(a, b)


def find_params(word: str, a_max: int | None = None, b_max: int | None = None) -> set[Params]:
    """All parameter pairs within the bounds for which *word* is a solution.

    Bounds default to twice the word length, which is enough to decide
    solution-hood outright: a minimal square inside the square of *word*
    cannot be longer than the square itself.
    """
    check_binary(word)
    if not word:
        raise EmptyWordError("solutions are nonempty")
    if a_max is None:
        a_max = 2 * len(word)
    if b_max is None:
        b_max = 2 * len(word)
    return {p for p in _candidates(word, a_max, b_max) if is_solution(word, p)}


def has_params(word: str, a_max: int | None = None, b_max: int | None = None) -> bool:
    """Early-exit version of ``find_params(word) != set()``."""
    check_binary(word)
    if not word:
        raise EmptyWordError("solutions are nonempty")
    if a_max is None:
        a_max = 2 * len(word)
    if b_max is None:
        b_max = 2 * len(word)
    return any(is_solution(word, p) for p in _candidates(word, a_max, b_max))


def decompose_blocks(word: str) -> tuple[str, str]:
    """Split a solution into equal blocks S and L = exchange(S).

    The block is forced: it has the reduced slope c/d of *word*, length d,
    and is the 0-initial member of the candidate pair (01 or 10 followed by
    the central word of c/d).  Returns the block and the {S, L}-letter
    sequence of *word* read block by block.
    """
    check_binary(word)
    if not word:
        raise EmptyWordError("cannot decompose the empty word")
    ones = word.count("1")
    if ones == 0 or ones == len(word):
        raise NotDecomposableError("block decomposition needs both letters")
    sl = Fraction(ones, len(word))
    c, d = sl.numerator, sl.denominator
    block = "01" + central_word(c, d)
    swapped = "10" + block[2:]
    letters = []
    for i in range(0, len(word), d):
        chunk = word[i : i + d]
        if chunk == block:
            letters.append("S")
        elif chunk == swapped:
            letters.append("L")
        else:
            raise NotDecomposableError(
                f"block at position {i} is neither the standard block nor its exchange"
            )
    return block, "".join(letters)


class Verdict(Enum):
    """Outcome of classifying a word against the solution trichotomy."""

    TYPE_I = "TypeI"
    TYPE_II = "TypeII"
    POWER_OF_PRIMITIVE = "PowerOfPrimitive"
    NOT_SOLUTION = "NotSolution"


@dataclass(frozen=True)
class Classification:
    """Classifier verdict with its witnesses.

    ``params`` is every (a, b) within the bounds for which the word is a
    solution; ``block``/``pattern`` witness a type II decomposition (JSON
    keys "S" and "u"); ``witness_params`` is a member of ``params`` whose
    sixth root is shorter than the block; ``root`` is (primitive root,
    exponent) for powers.
    """

    verdict: Verdict
    params: tuple[Params, ...]
    bounds: tuple[int, int]
    block: str | None = None
    pattern: str | None = None
    witness_params: Params | None = None
    root: tuple[str, int] | None = None

    def to_json(self) -> dict:
        return {
            "verdict": self.verdict.value,
            "params": [[p.a, p.b] for p in self.params],
            "S": self.block,
            "u": self.pattern,
            "root": list(self.root) if self.root else None,
            "witness_params": (
                [self.witness_params.a, self.witness_params.b]
                if self.witness_params
                else None
            ),
            "bounds": list(self.bounds),
        }


def _sixth_root_length(p: Params) -> int:
    return (p.a + 2) + (p.b + 1) * (p.a + 1)


def classify(word: str, a_max: int | None = None, b_max: int | None = None) -> Classification:
    """Classify *word* as type I, type II, a power of a primitive solution,
    or not a solution at all (within the parameter bounds).

    Raises ClassificationContradictionError if a solution fails every case;
    that never happens unless the trichotomy itself is falsified.
    """
    check_binary(word)
    if not word:
        raise EmptyWordError("cannot classify the empty word")
    if a_max is None:
        a_max = 2 * len(word)
    if b_max is None:
        b_max = 2 * len(word)
    bounds = (a_max, b_max)
    params = tuple(sorted(find_params(word, a_max, b_max)))
    if not params:
        return Classification(Verdict.NOT_SOLUTION, params, bounds)
    root, k = primitive_root(word)
    if k > 1:
        if not has_params(root, a_max, b_max):
            raise ClassificationContradictionError(
                f"{word!r} is a solution but its primitive root {root!r} is not"
            )
        return Classification(
            Verdict.POWER_OF_PRIMITIVE, params, bounds, root=(root, k)
        )
    if is_reversed_standard(word):
        return Classification(Verdict.TYPE_I, params, bounds)
    try:
        block, pattern = decompose_blocks(word)
    except NotDecomposableError as exc:
        raise ClassificationContradictionError(
            f"primitive non-standard solution {word!r} has no block decomposition"
        ) from exc
    witness = next(
        (p for p in params if len(block) > _sixth_root_length(p)), None
    )
    if (
        len(pattern) <= 1
        or not is_pattern_word(pattern)
        or primitive_root(pattern)[1] != 1
        or witness is None
    ):
        raise ClassificationContradictionError(
            f"type II witnesses for {word!r} violate the solution trichotomy"
        )
    return Classification(
        Verdict.TYPE_II,
        params,
        bounds,
        block=block,
        pattern=pattern,
        witness_params=witness,
    )
