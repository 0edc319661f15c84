"""Counting solutions of each length: closed formula and brute-force oracle.

The count of solutions of length n (up to the 0/1 swap and up to exchanging
the first two letters) is::

    floor(n/2) + 1 + sum over divisors d of n with 2 < d <= n of E(n, d)

where the excess term E counts the words built from nontrivial pattern
words over blocks of length d::

    E(n, d) = (2^(O(n/d) - 1) - 1) * (phi(d)/2 - tau(d - 1) + 1)

with O the number of doubling-map orbits, phi Euler's totient and tau the
number-of-divisors function.  The brute-force oracle enumerates 11-free
words starting with 0 (one representative per symmetry class) and keeps
those admitting parameters.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache

from .errors import DomainError, NotADivisorError, NotCoprimeError
from .solutions import doubling_orbits, has_params


def _factorize(n: int) -> dict[int, int]:
    factors: dict[int, int] = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            factors[p] = factors.get(p, 0) + 1
            n //= p
        p += 1 if p == 2 else 2
    if n > 1:
        factors[n] = factors.get(n, 0) + 1
    return factors


def euler_phi(n: int) -> int:
    """Euler's totient."""
    if n < 1:
        raise DomainError("euler_phi needs n >= 1")
    result = n
    for p in _factorize(n):
        result = result // p * (p - 1)
    return result


def divisor_count(n: int) -> int:
    """Number of distinct divisors of n, including 1 and n."""
    if n < 1:
        raise DomainError("divisor_count needs n >= 1")
    result = 1
    for k in _factorize(n).values():
        result *= k + 1
    return result


def divisors(n: int) -> list[int]:
    """All divisors of n in increasing order."""
    if n < 1:
        raise DomainError("divisors needs n >= 1")
    out = [1]
    for p, k in _factorize(n).items():
        out = [d * p**e for d in out for e in range(k + 1)]
    return sorted(out)


def order_of_two(d: int) -> int:
    """Least e >= 1 with 2^e = 1 mod d, for odd d (1 for d = 1)."""
    if d < 1 or d % 2 == 0:
        raise NotCoprimeError(f"order of 2 needs an odd modulus, got {d}")
    if d == 1:
        return 1
    e, x = 1, 2 % d
    while x != 1:
        x = 2 * x % d
        e += 1
    return e


@lru_cache(maxsize=None)
def orbit_count(length: int) -> int:
    """Number of orbits of x -> 2x mod length, by the divisor-sum formula.

    Powers of two dividing the modulus do not change the count, so only the
    odd part contributes: sum of phi(d) / ord_2(d) over its divisors d.
    """
    if length < 1:
        raise DomainError("orbit_count needs length >= 1")
    odd = length
    while odd % 2 == 0:
        odd //= 2
    return sum(euler_phi(d) // order_of_two(d) for d in divisors(odd))


def orbit_count_direct(length: int) -> int:
    """Orbit count by explicit orbit enumeration; must agree with the formula."""
    return len(doubling_orbits(length))


def pattern_excess(n: int, d: int) -> int:
    """Solutions of length n contributed by nontrivial patterns over length-d blocks.

    Defined for divisors d of n with d > 2.  The first factor counts the
    nontrivial pattern words of length n/d starting with S; the second the
    reversed standard blocks of length d that are long enough.
    """
    if d <= 2 or d > n or n % d != 0:
        raise NotADivisorError(f"need a divisor d of {n} with 2 < d <= {n}, got {d}")
    patterns = 2 ** (orbit_count(n // d) - 1) - 1
    blocks = euler_phi(d) // 2 - divisor_count(d - 1) + 1
    return patterns * blocks


@dataclass(frozen=True)
class CountReport:
    """Solution count of one length, with the per-divisor excess breakdown."""

    n: int
    formula_count: int
    brute_count: int | None
    per_divisor: dict[int, int]

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "count": self.formula_count,
            "brute_count": self.brute_count,
            "per_divisor": {str(d): h for d, h in sorted(self.per_divisor.items())},
        }


def count_solutions(
    n: int,
    brute: bool = False,
    a_cap: int | None = None,
    b_cap: int | None = None,
) -> CountReport:
    """Count solutions of length n by the closed formula.

    With ``brute`` the report also carries the brute-force oracle's count;
    the two must agree.
    """
    if n < 1:
        raise DomainError("count_solutions needs n >= 1")
    per = {d: pattern_excess(n, d) for d in divisors(n) if d > 2}
    formula = n // 2 + 1 + sum(per.values())
    brute_count = len(brute_force_solutions(n, a_cap, b_cap)) if brute else None
    return CountReport(n=n, formula_count=formula, brute_count=brute_count, per_divisor=per)


@lru_cache(maxsize=None)
def _no11_words(length: int, may_start_one: bool) -> tuple[str, ...]:
    # Small lengths only; used as suffix tables by the streaming enumerator.
    if length == 0:
        return ("",)
    words = ["0" + w for w in _no11_words(length - 1, True)]
    if may_start_one:
        words += ["1" + w for w in _no11_words(length - 1, False)]
    return tuple(words)


_SUFFIX_LEN = 14


def _candidate_words(n: int):
    """All length-n words that start with 0 and avoid 11, lexicographically.

    Starting with 0 picks one representative per class under the 0/1 swap
    and the first-two-letter exchange; 11-free words suffice because no
    solution contains 11.
    """
    if n <= _SUFFIX_LEN + 1:
        for w in _no11_words(n - 1, True):
            yield "0" + w
        return

    def prefixes(length: int):
        def rec(prefix: str):
            if len(prefix) == length:
                yield prefix
                return
            yield from rec(prefix + "0")
            if prefix[-1] != "1":
                yield from rec(prefix + "1")

        yield from rec("0")

    after_zero = _no11_words(_SUFFIX_LEN, True)
    after_one = _no11_words(_SUFFIX_LEN, False)
    for prefix in prefixes(n - _SUFFIX_LEN):
        table = after_zero if prefix[-1] == "0" else after_one
        for suffix in table:
            yield prefix + suffix


def _chunk_worker(args: tuple[str, int, int | None, int | None]) -> list[str]:
    prefix, n, a_cap, b_cap = args
    rest = n - len(prefix)
    table = _no11_words(rest, prefix[-1] == "0") if rest else ("",)
    return [
        prefix + suffix
        for suffix in table
        if has_params(prefix + suffix, a_cap, b_cap)
    ]


def _thread_count(threads: int | None) -> int:
    if threads is not None:
        return max(1, threads)
    env = os.environ.get("SQWORD_THREADS", "")
    try:
        return max(1, int(env)) if env else 1
    except ValueError:
        return 1


def brute_force_solutions(
    n: int,
    a_cap: int | None = None,
    b_cap: int | None = None,
    threads: int | None = None,
) -> list[str]:
    """All solutions of length n, one per symmetry class, lexicographically.

    Parameter caps default to twice the length (complete).  Parallelism is
    opt-in via ``threads`` or the SQWORD_THREADS environment variable; the
    word space is partitioned by prefix and the merged result is sorted, so
    output does not depend on the partitioning.
    """
    if n < 1:
        raise DomainError("brute_force_solutions needs n >= 1")
    workers = _thread_count(threads)
    if workers > 1 and n > _SUFFIX_LEN + 2:
        split = n - _SUFFIX_LEN
        jobs = [
            (prefix, n, a_cap, b_cap)
            for prefix in ("0" + w for w in _no11_words(split - 1, True))
        ]
        out: list[str] = []
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for part in pool.map(_chunk_worker, jobs, chunksize=32):
                out.extend(part)
        return sorted(out)
    return sorted(w for w in _candidate_words(n) if has_params(w, a_cap, b_cap))
