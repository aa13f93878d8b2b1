"""Index sets D, F, N of a Dyck path and the statistics built on them.

Sets are returned as ascending lists of 1-based indices.
"""
from __future__ import annotations

from dataclasses import dataclass

from .paths import AreaProfile, DyckPath, area_profile, valleys
from .permutations import Permutation, inverse

__all__ = [
    "StatisticSets",
    "set_D",
    "set_F",
    "set_N",
    "statistic_sets",
    "gorenstein_predicate",
    "double_centraliser_predicate",
    "statistic_double_deficiencies",
    "format_set",
]


@dataclass(frozen=True)
class StatisticSets:
    D: tuple[int, ...]
    F: tuple[int, ...]
    N: tuple[int, ...]

    def n_cap_d(self) -> list[int]:
        d = set(self.D)
        return [k for k in self.N if k in d]


def set_D(profile: AreaProfile) -> list[int]:
    """Indices ``k`` with ``c_{k+1} = c_k - 1``."""
    c = profile.column_area
    return [k for k in range(1, profile.n + 1) if c[k] == c[k - 1] - 1]


def set_F(profile: AreaProfile) -> list[int]:
    """Indices ``k`` with ``r_{k+1+c_{k+1}} = r_{k-1} + c_{k+1} + 2``."""
    r = profile.row_area
    c = profile.column_area
    n = profile.n
    result = []
    for k in range(1, n + 1):
        c_next = c[k]
        j = k + 1 + c_next
        # c_{k+1} <= n - k - 1 for k < n, and c_{n+1} = -1
        assert 0 <= j <= n, (k, j)
        if r[j] == r[k - 1] + c_next + 2:
            result.append(k)
    return result


def set_N(path: DyckPath) -> list[int]:
    """Rows that contain no valley."""
    rows = {v.north_index for v in valleys(path)}
    return [k for k in range(1, path.semilength + 1) if k not in rows]


def statistic_sets(path: DyckPath) -> StatisticSets:
    profile = area_profile(path)
    return StatisticSets(
        tuple(set_D(profile)), tuple(set_F(profile)), tuple(set_N(path))
    )


def gorenstein_predicate(path: DyckPath) -> bool:
    """True iff ``N & D`` is contained in ``F``."""
    s = statistic_sets(path)
    return set(s.n_cap_d()) <= set(s.F)


def double_centraliser_predicate(path: DyckPath) -> bool:
    """True iff ``N & D`` is empty."""
    return not statistic_sets(path).n_cap_d()


def statistic_double_deficiencies(p: Permutation) -> int:
    """Number of ``k`` with ``p(k) < k < p^{-1}(k)``."""
    inv = inverse(p).images
    return sum(v < k < w for k, (v, w) in enumerate(zip(p.images, inv), 1))


def format_set(indices) -> str:
    """``{2,4,5}`` form: ascending, no spaces."""
    return "{" + ",".join(map(str, sorted(indices))) + "}"
