"""Independent ground truth for the counting formulas and the equality test.

Two oracles that share no code with the formula paths:

* exhaustive enumeration, which partitions all 2^(n-1) compositions of n by
  their normal form, and
* a semantic fingerprint, the expansion of a ribbon in the complete
  homogeneous basis.  The expansion is the alternating sum over coarsenings
  of the composition, and because the h generators indexed by partitions are
  algebraically independent, two ribbons are equal as symmetric functions
  exactly when their fingerprints agree.
"""

from __future__ import annotations

import multiprocessing
from collections import Counter
from dataclasses import dataclass, field

from .compositions import Composition, Parts, composition_parts_from_mask
from .factorization import _normal_form
from .lengthpolys import LengthPoly

DEFAULT_CLASS_BUDGET = 20
DEFAULT_HISTOGRAM_BUDGET = 18
DEFAULT_SEMANTIC_BUDGET = 16

Partition = tuple[int, ...]


class BudgetError(ValueError):
    """An exhaustive run was requested beyond its configured budget."""


class HFingerprint:
    """Signed integer combination of h generators, keyed by partition."""

    __slots__ = ("terms", "_key")

    def __init__(self, terms: dict[Partition, int]):
        self.terms = dict(terms)
        self._key = tuple(sorted(self.terms.items()))

    def coefficient(self, partition: Partition) -> int:
        return self.terms.get(tuple(partition), 0)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, HFingerprint) and self._key == other._key

    def __hash__(self) -> int:
        return hash(self._key)

    def __len__(self) -> int:
        return len(self.terms)

    def __repr__(self) -> str:
        return f"HFingerprint({dict(self._key)!r})"


def _fingerprint_terms(parts: Parts) -> dict[Partition, int]:
    k = len(parts)
    terms: dict[Partition, int] = {}
    for mask in range(1 << (k - 1)):
        # bit i set keeps the boundary after part i; cleared bits merge
        merged = []
        acc = parts[0]
        for i in range(k - 1):
            if mask >> i & 1:
                merged.append(acc)
                acc = parts[i + 1]
            else:
                acc += parts[i + 1]
        merged.append(acc)
        merged.sort(reverse=True)
        key = tuple(merged)
        sign = -1 if (k - 1 - bin(mask).count("1")) & 1 else 1
        v = terms.get(key, 0) + sign
        if v:
            terms[key] = v
        elif key in terms:
            del terms[key]
    return terms


def h_fingerprint(alpha: Composition) -> HFingerprint:
    """Expansion of the ribbon of ``alpha`` over the h basis.

    Sum over the 2^(length-1) coarsenings beta of alpha of
    (-1)^(length(alpha) - length(beta)) h_{sorted(beta)}.
    """
    return HFingerprint(_fingerprint_terms(tuple(alpha)))


# --- exhaustive enumeration ------------------------------------------------------

def _normal_form_chunk(args: tuple[int, int, int]) -> Counter:
    n, lo, hi = args
    counts: Counter = Counter()
    for mask in range(lo, hi):
        counts[_normal_form(composition_parts_from_mask(n, mask))] += 1
    return counts


def _class_counter(n: int, jobs: int | None) -> Counter:
    total = 1 << (n - 1)
    if not jobs or jobs <= 1 or total < (1 << 14):
        return _normal_form_chunk((n, 0, total))
    chunk = -(-total // (jobs * 8))
    ranges = [(n, lo, min(lo + chunk, total)) for lo in range(0, total, chunk)]
    counts: Counter = Counter()
    with multiprocessing.Pool(jobs) as pool:
        for part in pool.imap_unordered(_normal_form_chunk, ranges):
            counts.update(part)
    return counts


def brute_force_classes(
    n: int, budget: int = DEFAULT_CLASS_BUDGET, jobs: int | None = None
) -> list[tuple[Composition, int]]:
    """All equivalence classes of size n, as (normal form, class size) pairs.

    Partitions the full set of 2^(n-1) compositions by their normal form;
    the class sizes therefore sum to 2^(n-1).  Sorted by normal form.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if n > budget:
        raise BudgetError(f"n = {n} exceeds the exhaustive budget {budget}")
    counts = _class_counter(n, jobs)
    return [(Composition(p), c) for p, c in sorted(counts.items())]


def brute_force_length_histogram(
    n: int, budget: int = DEFAULT_HISTOGRAM_BUDGET, jobs: int | None = None
) -> LengthPoly:
    """Classes of size n counted by the length of their normal form."""
    if n < 1:
        raise ValueError("n must be positive")
    if n > budget:
        raise BudgetError(f"n = {n} exceeds the exhaustive budget {budget}")
    by_length: Counter = Counter()
    for p, _ in brute_force_classes(n, budget=budget, jobs=jobs):
        by_length[len(p)] += 1
    coeffs = [0] * (n + 1)
    for length, count in by_length.items():
        coeffs[length] = count
    return LengthPoly(coeffs)


# --- the two-sided comparison -----------------------------------------------------

@dataclass
class CrossValidationReport:
    """Outcome of comparing the semantic and the normal-form partitions."""

    n: int
    fingerprint_classes: int
    normal_form_classes: int
    identical: bool
    mismatches: list[str] = field(default_factory=list)

    def summary(self) -> str:
        verdict = "identical" if self.identical else "DIFFERENT"
        return (
            f"n={self.n}: {self.normal_form_classes} classes by normal form, "
            f"{self.fingerprint_classes} by fingerprint; partitions {verdict}"
        )


def cross_validate(n: int, budget: int = DEFAULT_SEMANTIC_BUDGET) -> CrossValidationReport:
    """Group all compositions of n by fingerprint and by normal form, and
    check that the two partitions coincide.  Mismatches are reported, not
    raised."""
    if n < 1:
        raise ValueError("n must be positive")
    if n > budget:
        raise BudgetError(f"n = {n} exceeds the semantic budget {budget}")
    by_fingerprint: dict[HFingerprint, list[Parts]] = {}
    by_normal_form: dict[Parts, list[Parts]] = {}
    for mask in range(1 << (n - 1)):
        parts = composition_parts_from_mask(n, mask)
        by_fingerprint.setdefault(h_fingerprint(parts), []).append(parts)
        by_normal_form.setdefault(_normal_form(parts), []).append(parts)
    semantic = {frozenset(group) for group in by_fingerprint.values()}
    syntactic = {frozenset(group) for group in by_normal_form.values()}
    mismatches = []
    for group in sorted(semantic ^ syntactic, key=sorted):
        side = "fingerprint" if group in semantic else "normal form"
        members = ", ".join(str(Composition(p)) for p in sorted(group))
        mismatches.append(f"{side}-only group: {{{members}}}")
    return CrossValidationReport(
        n=n,
        fingerprint_classes=len(semantic),
        normal_form_classes=len(syntactic),
        identical=semantic == syntactic,
        mismatches=mismatches,
    )
