"""Permutations in one-line notation and their index classification."""
from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import combinations

__all__ = [
    "Permutation",
    "Kind",
    "IndexClassification",
    "parse_permutation",
    "format_permutation",
    "inverse",
    "is_321_avoiding",
    "is_321_avoiding_bruteforce",
    "classify",
]


@dataclass(frozen=True)
class Permutation:
    """A bijection of ``{1, ..., n}`` given by ``(p(1), ..., p(n))``."""

    images: tuple[int, ...] = ()

    def __post_init__(self):
        images = tuple(self.images)
        object.__setattr__(self, "images", images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"not a permutation of 1..{len(images)}: {images}")

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(1, n + 1)))

    def __call__(self, k: int) -> int:
        return self.images[k - 1]

    def __len__(self):
        return len(self.images)

    def __iter__(self):
        return iter(self.images)

    def __str__(self):
        return format_permutation(self)


def parse_permutation(text: str) -> Permutation:
    """Parse ``"3,1,2"`` or ``"[3, 1, 2]"``; the empty string is the empty permutation."""
    body = text.strip()
    if body.startswith("[") and body.endswith("]"):
        body = body[1:-1].strip()
    if not body:
        return Permutation()
    try:
        images = tuple(int(part) for part in body.split(","))
    except ValueError:
        raise ValueError(f"malformed permutation {text.strip()!r}") from None
    return Permutation(images)


def format_permutation(p: Permutation) -> str:
    return ",".join(map(str, p.images))


def inverse(p: Permutation) -> Permutation:
    inv = [0] * len(p.images)
    for k, v in enumerate(p.images, 1):
        inv[v - 1] = k
    return Permutation(tuple(inv))


def is_321_avoiding(p: Permutation) -> bool:
    """Linear-time test: the entries must split into two increasing runs.

    Each entry either raises the running maximum or must exceed every
    earlier entry that did not; otherwise a decreasing triple exists.
    """
    top = second = 0
    for v in p.images:
        if v > top:
            top = v
        elif v > second:
            second = v
        else:
            return False
    return True


def is_321_avoiding_bruteforce(p: Permutation) -> bool:
    return not any(
        a > b > c for a, b, c in combinations(p.images, 3)
    )


class Kind(enum.Enum):
    EXCEDANCE = "excedance"
    FIXPOINT = "fixpoint"
    DEFICIENCY = "deficiency"


@dataclass(frozen=True)
class IndexClassification:
    """Per-index data of a permutation; entry ``k - 1`` describes index ``k``."""

    kinds: tuple[Kind, ...]
    double_deficiency: tuple[bool, ...]
    double_excedance: tuple[bool, ...]

    def _where(self, flags) -> list[int]:
        return [k for k, flag in enumerate(flags, 1) if flag]

    def excedances(self) -> list[int]:
        return self._where(kind is Kind.EXCEDANCE for kind in self.kinds)

    def fixpoints(self) -> list[int]:
        return self._where(kind is Kind.FIXPOINT for kind in self.kinds)

    def deficiencies(self) -> list[int]:
        return self._where(kind is Kind.DEFICIENCY for kind in self.kinds)

    def double_deficiencies(self) -> list[int]:
        return self._where(self.double_deficiency)

    def double_excedances(self) -> list[int]:
        return self._where(self.double_excedance)


def classify(p: Permutation) -> IndexClassification:
    images = p.images
    inv = inverse(p).images
    kinds = []
    dd = []
    de = []
    for k, (v, w) in enumerate(zip(images, inv), 1):
        if v > k:
            kinds.append(Kind.EXCEDANCE)
        elif v == k:
            kinds.append(Kind.FIXPOINT)
        else:
            kinds.append(Kind.DEFICIENCY)
        dd.append(v < k < w)
        de.append(w < k < v)
    return IndexClassification(tuple(kinds), tuple(dd), tuple(de))
