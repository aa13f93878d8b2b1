"""Exhaustive generators and exact counting sequences.

Every generator is lazy and yields its objects in lexicographic order, with
``N < E`` for Dyck words and ``U < D < L < B < R`` for Motzkin words.
Counting functions use Python integers, so they are exact for every ``n``.
"""
from __future__ import annotations

from functools import lru_cache
from itertools import permutations
from typing import Iterator

from .bijections import bjs_forward
from .paths import BicolouredMotzkinPath, DyckPath, MotzkinPath
from .permutations import Permutation, is_321_avoiding_bruteforce

__all__ = [
    "enumerate_dyck",
    "enumerate_bicoloured_motzkin",
    "enumerate_motzkin",
    "enumerate_riordan",
    "enumerate_av321",
    "enumerate_av321_bruteforce",
    "catalan",
    "motzkin_number",
    "riordan_number",
]


def _check_n(n: int) -> None:
    if not isinstance(n, int) or n < 0:
        raise ValueError(f"n must be a nonnegative integer, got {n!r}")


def _dyck_words(n: int) -> Iterator[str]:
    word = []

    def extend(north: int, east: int):
        if east == n:
            yield "".join(word)
            return
        if north < n:
            word.append("N")
            yield from extend(north + 1, east)
            word.pop()
        if east < north:
            word.append("E")
            yield from extend(north, east + 1)
            word.pop()

    yield from extend(0, 0)


def enumerate_dyck(n: int) -> Iterator[DyckPath]:
    """All ``catalan(n)`` Dyck paths of semilength ``n``."""
    _check_n(n)
    for word in _dyck_words(n):
        yield DyckPath(word)


def _motzkin_words(n: int, letters: str, coloured: bool) -> Iterator[str]:
    # letters are tried in the order given
    word = []

    def extend(height: int):
        left = n - len(word)
        if left == 0:
            yield "".join(word)
            return
        for s in letters:
            if s == "U":
                if height + 1 > left - 1:
                    continue
                h = height + 1
            elif s == "D":
                if height == 0:
                    continue
                h = height - 1
            else:
                if height > left - 1:
                    continue
                if s == "L" and coloured and height:
                    continue
                if s in "BR" and not height:
                    continue
                h = height
            word.append(s)
            yield from extend(h)
            word.pop()

    yield from extend(0)


def enumerate_bicoloured_motzkin(n: int) -> Iterator[BicolouredMotzkinPath]:
    _check_n(n)
    for word in _motzkin_words(n, "UDLBR", coloured=True):
        yield BicolouredMotzkinPath(word)


def enumerate_motzkin(n: int) -> Iterator[MotzkinPath]:
    """Uncoloured Motzkin paths of length ``n``; level steps at any height."""
    _check_n(n)
    for word in _motzkin_words(n, "UDL", coloured=False):
        yield MotzkinPath(word)


def enumerate_riordan(n: int) -> Iterator[MotzkinPath]:
    """Motzkin paths with no level step at height zero."""
    for path in enumerate_motzkin(n):
        if path.is_riordan():
            yield path


def enumerate_av321(n: int) -> Iterator[Permutation]:
    """321-avoiding permutations, as images of ``enumerate_dyck(n)``.

    The order is the one induced by the Dyck words, not the lexicographic
    order of the one-line notations.
    """
    for path in enumerate_dyck(n):
        yield bjs_forward(path)


def enumerate_av321_bruteforce(n: int) -> Iterator[Permutation]:
    """Filter all ``n!`` permutations; lexicographic in one-line notation."""
    _check_n(n)
    for images in permutations(range(1, n + 1)):
        p = Permutation(images)
        if is_321_avoiding_bruteforce(p):
            yield p


@lru_cache(maxsize=None)
def _catalan_table(n: int) -> tuple[int, ...]:
    c = [1]
    for m in range(n):
        c.append(sum(c[k] * c[m - k] for k in range(m + 1)))
    return tuple(c)


def catalan(n: int) -> int:
    """``C_{m+1} = sum_k C_k C_{m-k}``."""
    _check_n(n)
    return _catalan_table(n)[n]


@lru_cache(maxsize=None)
def _motzkin_table(n: int) -> tuple[int, ...]:
    m = [1, 1]
    for i in range(2, n + 1):
        m.append(m[i - 1] + sum(m[k] * m[i - 2 - k] for k in range(i - 1)))
    return tuple(m[: n + 1])


def motzkin_number(n: int) -> int:
    """``M_n = M_{n-1} + sum_{k=0}^{n-2} M_k M_{n-2-k}``."""
    _check_n(n)
    return _motzkin_table(n)[n]


@lru_cache(maxsize=None)
def _riordan_table(n: int) -> tuple[int, ...]:
    r = [1, 0]
    for i in range(2, n + 1):
        num = (i - 1) * (2 * r[i - 1] + 3 * r[i - 2])
        q, rem = divmod(num, i + 1)
        assert rem == 0, f"Riordan recurrence not exact at n={i}"
        r.append(q)
    return tuple(r[: n + 1])


def riordan_number(n: int) -> int:
    """``R_n = (n-1)(2 R_{n-1} + 3 R_{n-2}) / (n+1)`` with ``R_0 = 1, R_1 = 0``."""
    _check_n(n)
    return _riordan_table(n)[n]
