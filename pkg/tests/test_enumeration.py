from itertools import product

import pytest

from dyckstat.enumeration import (
    catalan,
    enumerate_av321,
    enumerate_av321_bruteforce,
    enumerate_bicoloured_motzkin,
    enumerate_dyck,
    enumerate_motzkin,
    enumerate_riordan,
    motzkin_number,
    riordan_number,
)
from dyckstat.paths import PathError, BicolouredMotzkinPath, DyckPath, MotzkinPath

MOTZKIN_0_12 = [1, 1, 2, 4, 9, 21, 51, 127, 323, 835, 2188, 5798, 15511]


def brute_words(alphabet, length, cls):
    """Every word over ``alphabet`` that ``cls`` accepts."""
    out = []
    for letters in product(alphabet, repeat=length):
        try:
            out.append(cls("".join(letters)).steps)
        except PathError:
            pass
    return out


def order_key(alphabet):
    return lambda word: [alphabet.index(ch) for ch in word]


@pytest.mark.parametrize("n", range(8))
def test_dyck_matches_brute_force(n):
    words = [p.steps for p in enumerate_dyck(n)]
    brute = brute_words("NE", 2 * n, DyckPath)
    assert words == sorted(brute, key=order_key("NE"))
    assert len(words) == catalan(n)


def test_dyck_small():
    assert [p.steps for p in enumerate_dyck(0)] == [""]
    assert [p.steps for p in enumerate_dyck(3)] == [
        "NNNEEE", "NNENEE", "NNEENE", "NENNEE", "NENENE"
    ]


@pytest.mark.parametrize("n", range(13))
def test_dyck_counts(n):
    words = [p.steps for p in enumerate_dyck(n)]
    assert len(words) == catalan(n)
    keys = [order_key("NE")(w) for w in words]
    assert all(a < b for a, b in zip(keys, keys[1:]))


@pytest.mark.parametrize("n", range(9))
def test_motzkin_families_match_brute_force(n):
    coloured = [m.steps for m in enumerate_bicoloured_motzkin(n)]
    assert coloured == sorted(brute_words("UDLBR", n, BicolouredMotzkinPath), key=order_key("UDLBR"))
    plain = [m.steps for m in enumerate_motzkin(n)]
    assert plain == sorted(brute_words("UDL", n, MotzkinPath), key=order_key("UDL"))
    riordan = [m.steps for m in enumerate_riordan(n)]
    assert riordan == [w for w in plain if MotzkinPath(w).is_riordan()]


def test_motzkin_small():
    assert sorted(m.steps for m in enumerate_motzkin(3)) == sorted(["UDL", "ULD", "LUD", "LLL"])
    assert [m.steps for m in enumerate_riordan(3)] == ["ULD"]
    assert [m.steps for m in enumerate_bicoloured_motzkin(2)] == ["UD", "LL"]
    assert [m.steps for m in enumerate_motzkin(0)] == [""]


@pytest.mark.parametrize("n", range(15))
def test_motzkin_counts(n):
    plain = [m.steps for m in enumerate_motzkin(n)]
    assert len(plain) == motzkin_number(n)
    assert len(set(plain)) == len(plain)
    keys = [order_key("UDL")(w) for w in plain]
    assert all(a < b for a, b in zip(keys, keys[1:]))
    assert sum(1 for _ in enumerate_riordan(n)) == riordan_number(n)


@pytest.mark.parametrize("n", range(13))
def test_bicoloured_count_is_catalan(n):
    words = [m.steps for m in enumerate_bicoloured_motzkin(n)]
    assert len(words) == catalan(n) == sum(1 for _ in enumerate_dyck(n))
    keys = [order_key("UDLBR")(w) for w in words]
    assert all(a < b for a, b in zip(keys, keys[1:]))


def test_number_values():
    assert [motzkin_number(n) for n in range(13)] == MOTZKIN_0_12
    assert [riordan_number(n) for n in range(11)] == [1, 0, 1, 1, 3, 6, 15, 36, 91, 232, 603]
    assert [catalan(n) for n in range(11)] == [1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796]
    assert catalan(14) == 2674440


def test_motzkin_riordan_identity():
    for n in range(31):
        assert motzkin_number(n) == riordan_number(n) + riordan_number(n + 1)


def test_large_values_exact():
    # closed form C_n = binom(2n, n) / (n + 1)
    from math import comb

    assert catalan(60) == comb(120, 60) // 61
    assert motzkin_number(200) == riordan_number(200) + riordan_number(201)


@pytest.mark.parametrize("func", [catalan, motzkin_number, riordan_number])
def test_negative_rejected(func):
    with pytest.raises(ValueError):
        func(-1)


def test_av321_small():
    assert sorted(p.images for p in enumerate_av321(2)) == [(1, 2), (2, 1)]
    three = {p.images for p in enumerate_av321(3)}
    assert len(three) == 5 and (3, 2, 1) not in three


@pytest.mark.parametrize("n", range(8))
def test_av321_matches_filter(n):
    fast = [p.images for p in enumerate_av321(n)]
    assert len(fast) == len(set(fast))
    assert set(fast) == {p.images for p in enumerate_av321_bruteforce(n)}


def test_av321_seven():
    assert sum(1 for _ in enumerate_av321(7)) == 429
