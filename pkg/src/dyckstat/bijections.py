"""Dyck paths <-> 321-avoiding permutations <-> bicoloured Motzkin paths.

``bjs_forward`` is the Billey-Jockusch-Stanley bijection: crosses go into
the valley cells, then each remaining column, left to right, gets a cross
in the lowest row still free.  ``fz_forward`` is Elizalde's restriction of
the Foata-Zeilberger bijection to 321-avoiding permutations, which reads
one Motzkin step off each index ``i`` from the relative position of
``p(i)`` and ``p^{-1}(i)``:

    ==============  ==============  ==========
    p(i) vs i       p^{-1}(i) vs i  step
    ==============  ==============  ==========
    >               >               U
    <               <               D
    =               =               L
    >               <               B (blue)
    <               >               R (red)
    ==============  ==============  ==========
"""
from __future__ import annotations

from .paths import BicolouredMotzkinPath, DyckPath, PathError, valleys
from .permutations import Permutation, inverse, is_321_avoiding

__all__ = [
    "bjs_forward",
    "bjs_forward_naive",
    "bjs_inverse",
    "fz_forward",
    "fz_inverse",
]


def bjs_forward(path: DyckPath) -> Permutation:
    n = path.semilength
    images = [0] * n
    used_rows = [False] * (n + 1)
    for k, l in valleys(path):
        images[k - 1] = l
        used_rows[l] = True
    row = 1
    for col in range(n):
        if images[col]:
            continue
        while used_rows[row]:
            row += 1
        images[col] = row
        row += 1
    return Permutation(tuple(images))


def bjs_forward_naive(path: DyckPath) -> Permutation:
    """Literal cross-filling, rescanning all rows for every column."""
    n = path.semilength
    crosses = {k: l for k, l in valleys(path)}
    for col in range(1, n + 1):
        if col in crosses:
            continue
        taken = set(crosses.values())
        crosses[col] = min(r for r in range(1, n + 1) if r not in taken)
    return Permutation(tuple(crosses[col] for col in range(1, n + 1)))


def bjs_inverse(p: Permutation) -> DyckPath:
    """The Dyck path whose valleys are the excedance cells ``(k, p(k))``.

    With valleys ``(k_1, l_1), ..., (k_m, l_m)`` the path is
    ``N^(l_1 - 1) E^(k_1) N^(l_2 - l_1) E^(k_2 - k_1) ... N^(n + 1 - l_m) E^(n - k_m)``.
    """
    if not is_321_avoiding(p):
        raise ValueError(f"{p} contains the pattern 321")
    n = len(p)
    excedances = [(k, v) for k, v in enumerate(p.images, 1) if v > k]
    parts = []
    prev_k, prev_l = 0, 1
    for k, l in excedances:
        if k <= prev_k or l <= prev_l:
            # impossible for 321-avoiding input
            raise AssertionError(f"excedances of {p} are not increasing")
        parts.append("N" * (l - prev_l) + "E" * (k - prev_k))
        prev_k, prev_l = k, l
    parts.append("N" * (n + 1 - prev_l) + "E" * (n - prev_k))
    return DyckPath("".join(parts))


def fz_forward(p: Permutation) -> BicolouredMotzkinPath:
    """Raises ``ValueError`` when ``p`` is not 321-avoiding.

    Checking the output word alone is not enough: ``4,3,2,1`` yields the
    valid word ``UUDD``, which belongs to ``3,4,1,2``.
    """
    if not is_321_avoiding(p):
        raise ValueError(f"{p} contains the pattern 321")
    inv = inverse(p).images
    steps = []
    for i, (v, w) in enumerate(zip(p.images, inv), 1):
        if v == i:
            steps.append("L")
        elif v > i:
            steps.append("U" if w > i else "B")
        else:
            steps.append("D" if w < i else "R")
    word = "".join(steps)
    try:
        return BicolouredMotzkinPath(word)
    except PathError as exc:
        raise AssertionError(f"{p} gave the invalid word {word}: {exc}") from exc


def fz_inverse(m: BicolouredMotzkinPath) -> Permutation:
    """Rebuild the unique 321-avoiding permutation with ``fz_forward(p) == m``.

    Excedance positions (U, B) are matched in increasing order with
    excedance values (D, B); the remaining positions (D, R, L) with the
    remaining values (U, R, L), also in increasing order.
    """
    exc_pos, exc_val, low_pos, low_val = [], [], [], []
    for i, s in enumerate(m.steps, 1):
        if s in "UB":
            exc_pos.append(i)
        if s in "DB":
            exc_val.append(i)
        if s in "DRL":
            low_pos.append(i)
        if s in "URL":
            low_val.append(i)
    images = [0] * len(m.steps)
    for i, v in zip(exc_pos, exc_val):
        images[i - 1] = v
    for i, v in zip(low_pos, low_val):
        images[i - 1] = v
    return Permutation(tuple(images))
