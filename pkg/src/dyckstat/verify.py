"""Exhaustive verification of the lemmas and conjectures on Dyck paths.

Every Dyck path of semilength ``0..max_n`` is pushed through the
Billey-Jockusch-Stanley and Foata-Zeilberger maps and checked against the
index-set statements.  Results are collected in a :class:`VerificationReport`
that serialises to JSON lines.

Work is split by semilength.  Each ``n`` is checked independently (possibly
in a worker process) and the partial results are merged in order of ``n``;
since paths of one semilength are visited in lexicographic order, the
first counterexample kept for a property is always the least one.
"""
from __future__ import annotations

import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from functools import cached_property

from .bijections import bjs_forward, bjs_forward_naive, bjs_inverse, fz_forward, fz_inverse
from .enumeration import catalan, enumerate_dyck, motzkin_number, riordan_number
from .paths import DyckPath, area_profile, valleys
from .permutations import classify, inverse, is_321_avoiding
from .statistics import set_D, set_F, set_N

__all__ = [
    "TARGETS",
    "PROPERTIES",
    "CountRecord",
    "PropertyResult",
    "VerificationReport",
    "verify",
    "verify_lemmas",
    "verify_conjecture1",
    "verify_conjecture2",
    "check_path",
]

# property name -> (group, informational)
PROPERTIES = {
    "lemma_bjs_exc_def": ("lemmas", False),
    "lemma_bjs_fix": ("lemmas", False),
    "lemma_dpoints": ("lemmas", False),
    "lemma_fpoints": ("lemmas", False),
    "lemma_doubledef": ("lemmas", False),
    "conjecture2_corrected": ("conjecture2", False),
    "conjecture2_literal": ("conjecture2", True),
    "conjecture1_motzkin_count": ("conjecture1", False),
    "conjecture1_riordan_count": ("conjecture1", False),
    "conjecture1_no_red_iff_gorenstein": ("conjecture1", False),
    "conjecture1_no_red_no_level_iff_double_centraliser": ("conjecture1", False),
    "f_subset_n_cap_d": ("bijections", False),
    "bjs_matches_naive_filling": ("bijections", False),
    "bjs_image_321_avoiding": ("bijections", False),
    "bjs_injective": ("bijections", False),
    "bjs_round_trip": ("bijections", False),
    "fz_round_trip": ("bijections", False),
    "fz_step_counts": ("bijections", False),
}

TARGETS = ("lemmas", "conjecture1", "conjecture2", "bijections", "all")

_INFORMATIONAL_NOTE = {
    "conjecture2_literal": (
        "F minus (N & D) equals the double deficiencies; F is always a subset "
        "of N & D, so this reading fails on every path with a double deficiency"
    ),
    "conjecture2_corrected": "(N & D) minus F equals the double deficiencies",
}


@dataclass
class CountRecord:
    n: int
    catalan_count: int
    gorenstein_count: int
    double_centraliser_count: int
    expected_motzkin: int
    expected_riordan: int
    seconds: float = 0.0


@dataclass
class PropertyResult:
    name: str
    n_min: int
    n_max: int
    passed: bool = True
    checked: int = 0
    counterexample: str | None = None
    informational: bool = False
    note: str | None = None

    def absorb(self, other: PropertyResult) -> None:
        """Fold in the result for a later range of ``n``."""
        self.n_min = min(self.n_min, other.n_min)
        self.n_max = max(self.n_max, other.n_max)
        self.checked += other.checked
        if self.passed and not other.passed:
            self.counterexample = other.counterexample
        self.passed = self.passed and other.passed


@dataclass
class VerificationReport:
    counts: list[CountRecord] = field(default_factory=list)
    properties: dict[str, PropertyResult] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        """True if every non-informational property holds."""
        return all(p.passed for p in self.properties.values() if not p.informational)

    def merge(self, other: VerificationReport) -> None:
        self.counts.extend(other.counts)
        self.counts.sort(key=lambda c: c.n)
        for name, result in other.properties.items():
            if name in self.properties:
                self.properties[name].absorb(result)
            else:
                self.properties[name] = result

    def records(self, timing: bool = True) -> list[dict]:
        rows = []
        for c in self.counts:
            row = {"type": "counts", **asdict(c)}
            if not timing:
                del row["seconds"]
            rows.append(row)
        for name in PROPERTIES:
            if name in self.properties:
                rows.append({"type": "property", **asdict(self.properties[name])})
        return rows

    def to_json_lines(self, timing: bool = True) -> str:
        return "".join(
            json.dumps(row, sort_keys=True) + "\n" for row in self.records(timing)
        )

    def summary(self) -> str:
        lines = []
        if self.counts:
            lines.append(
                f"{'n':>3} {'Catalan':>9} {'N&D<=F':>8} {'Motzkin':>8} "
                f"{'N&D=0':>7} {'Riordan':>8} {'sec':>7}"
            )
            for c in self.counts:
                lines.append(
                    f"{c.n:>3} {c.catalan_count:>9} {c.gorenstein_count:>8} "
                    f"{c.expected_motzkin:>8} {c.double_centraliser_count:>7} "
                    f"{c.expected_riordan:>8} {c.seconds:>7.2f}"
                )
            lines.append("")
        width = max((len(name) for name in self.properties), default=0)
        for name in PROPERTIES:
            p = self.properties.get(name)
            if p is None:
                continue
            status = "PASS" if p.passed else "FAIL"
            if p.informational:
                status += " (informational)"
            line = f"{status:<20} {name:<{width}}  n={p.n_min}..{p.n_max}  checked={p.checked}"
            if p.counterexample is not None:
                line += f"  first counterexample: {p.counterexample}"
            lines.append(line)
        lines.append("")
        lines.append("ALL PASS" if self.passed else "FAILURES PRESENT")
        return "\n".join(lines)


def _group_names(target: str) -> list[str]:
    if target not in TARGETS:
        raise ValueError(f"unknown target {target!r}; expected one of {TARGETS}")
    return [
        name
        for name, (group, _) in PROPERTIES.items()
        if target == "all" or group == target
    ]


class _PathFacts:
    """Derived data of one Dyck path, computed on first use."""

    def __init__(self, path: DyckPath):
        self.path = path
        self.n = path.semilength

    @cached_property
    def valleys(self):
        return valleys(self.path)

    @cached_property
    def profile(self):
        return area_profile(self.path)

    @cached_property
    def D(self):
        return set(set_D(self.profile))

    @cached_property
    def F(self):
        return set(set_F(self.profile))

    @cached_property
    def N(self):
        return set(set_N(self.path))

    @cached_property
    def n_cap_d(self):
        return self.N & self.D

    @cached_property
    def image(self):
        return bjs_forward(self.path)

    @cached_property
    def inv(self):
        return inverse(self.image).images

    @cached_property
    def cls(self):
        return classify(self.image)

    @cached_property
    def fixpoints(self):
        return set(self.cls.fixpoints())

    @cached_property
    def double_deficiencies(self):
        return set(self.cls.double_deficiencies())

    @cached_property
    def motzkin(self):
        return fz_forward(self.image)

    @cached_property
    def gorenstein(self):
        return self.n_cap_d <= self.F

    @cached_property
    def double_centraliser(self):
        return not self.n_cap_d


def _exc_def(f: _PathFacts) -> bool:
    images = f.image.images
    valley_cols = {k: l for k, l in f.valleys}
    return all(
        images[k - 1] == valley_cols[k] if k in valley_cols else images[k - 1] <= k
        for k in range(1, f.n + 1)
    ) and all(l > k for k, l in f.valleys)


def _bjs_fix(f: _PathFacts) -> bool:
    images = f.image.images
    return all(
        (images[k - 1] == k) == (not any(i <= k <= j for i, j in f.valleys))
        for k in range(1, f.n + 1)
    )


def _doubledef(f: _PathFacts) -> bool:
    images, inv = f.image.images, f.inv
    # k in N iff p^{-1}(k) is a fixpoint or deficiency of p
    return f.N == {k for k in range(1, f.n + 1) if images[inv[k - 1] - 1] <= inv[k - 1]}


def _step_counts(f: _PathFacts) -> bool:
    steps = f.motzkin.steps
    double_exc = len(f.cls.double_excedances())
    return (
        steps.count("U") == steps.count("D") == len(f.cls.excedances()) - double_exc
        and steps.count("B") == double_exc
        and steps.count("R") == len(f.double_deficiencies)
        and steps.count("L") == len(f.fixpoints)
    )


_CHECKS = {
    "lemma_bjs_exc_def": _exc_def,
    "lemma_bjs_fix": _bjs_fix,
    "lemma_dpoints": lambda f: f.D
    == {k for k, v in enumerate(f.image.images, 1) if v <= k},
    "lemma_fpoints": lambda f: f.F == f.fixpoints,
    "lemma_doubledef": _doubledef,
    "conjecture2_corrected": lambda f: f.n_cap_d - f.F == f.double_deficiencies,
    "conjecture2_literal": lambda f: f.F - f.n_cap_d == f.double_deficiencies,
    "conjecture1_no_red_iff_gorenstein": lambda f: ("R" not in f.motzkin.steps)
    == f.gorenstein,
    "conjecture1_no_red_no_level_iff_double_centraliser": lambda f: (
        "R" not in f.motzkin.steps and "L" not in f.motzkin.steps
    )
    == f.double_centraliser,
    "f_subset_n_cap_d": lambda f: f.F <= f.n_cap_d,
    "bjs_matches_naive_filling": lambda f: bjs_forward_naive(f.path) == f.image,
    "bjs_image_321_avoiding": lambda f: is_321_avoiding(f.image),
    "bjs_round_trip": lambda f: bjs_inverse(f.image) == f.path,
    "fz_round_trip": lambda f: fz_inverse(f.motzkin) == f.image,
    "fz_step_counts": _step_counts,
}


def check_path(path: DyckPath, names=None) -> dict[str, bool]:
    """Evaluate per-path properties on ``path`` (all of them by default)."""
    facts = _PathFacts(path)
    return {name: _CHECKS[name](facts) for name in (names or _CHECKS)}


def _verify_n(n: int, target: str) -> VerificationReport:
    names = _group_names(target)
    results = {
        name: PropertyResult(
            name, n, n, informational=PROPERTIES[name][1], note=_INFORMATIONAL_NOTE.get(name)
        )
        for name in names
    }
    per_path = [
        name
        for name in names
        if name
        not in ("conjecture1_motzkin_count", "conjecture1_riordan_count", "bjs_injective")
    ]
    start = time.perf_counter()
    total = gorenstein = double_centraliser = 0
    seen = set()
    for path in enumerate_dyck(n):
        total += 1
        facts = _PathFacts(path)
        gorenstein += facts.gorenstein
        double_centraliser += facts.double_centraliser
        if "bjs_injective" in results:
            pi = facts.image.images
            r = results["bjs_injective"]
            r.checked += 1
            if pi in seen and r.passed:
                r.passed = False
                r.counterexample = path.steps
            seen.add(pi)
        for name in per_path:
            r = results[name]
            r.checked += 1
            if not _CHECKS[name](facts) and r.passed:
                r.passed = False
                r.counterexample = path.steps

    expected_m = motzkin_number(n)
    expected_r = riordan_number(n)
    for name, count, expected in (
        ("conjecture1_motzkin_count", gorenstein, expected_m),
        ("conjecture1_riordan_count", double_centraliser, expected_r),
    ):
        if name in results:
            r = results[name]
            r.checked = 1
            if count != expected:
                r.passed = False
                r.counterexample = f"n={n}: counted {count}, expected {expected}"
    if "bjs_injective" in results and len(seen) != catalan(n):
        r = results["bjs_injective"]
        if r.passed:
            r.passed = False
            r.counterexample = f"n={n}: {len(seen)} distinct images, expected {catalan(n)}"

    counts = CountRecord(
        n=n,
        catalan_count=total,
        gorenstein_count=gorenstein,
        double_centraliser_count=double_centraliser,
        expected_motzkin=expected_m,
        expected_riordan=expected_r,
        seconds=round(time.perf_counter() - start, 4),
    )
    return VerificationReport([counts], results)


def verify(max_n: int, target: str = "all", jobs: int = 1) -> VerificationReport:
    """Check ``target`` on every Dyck path of semilength ``0..max_n``.

    With ``jobs > 1`` the semilengths are spread over worker processes; the
    merged report is identical to the single-process one apart from timings.
    """
    if max_n < 0:
        raise ValueError("max_n must be nonnegative")
    if jobs < 1:
        raise ValueError("jobs must be at least 1")
    _group_names(target)
    ns = list(range(max_n + 1))
    if jobs == 1:
        parts = [_verify_n(n, target) for n in ns]
    else:
        # largest n first so the long task starts early; results reordered below
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            futures = {n: pool.submit(_verify_n, n, target) for n in reversed(ns)}
            parts = [futures[n].result() for n in ns]
    report = VerificationReport()
    for part in parts:
        report.merge(part)
    return report


def verify_lemmas(max_n: int, jobs: int = 1) -> VerificationReport:
    return verify(max_n, "lemmas", jobs)


def verify_conjecture1(max_n: int, jobs: int = 1) -> VerificationReport:
    return verify(max_n, "conjecture1", jobs)


def verify_conjecture2(max_n: int, jobs: int = 1) -> VerificationReport:
    return verify(max_n, "conjecture2", jobs)
