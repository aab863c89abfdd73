"""Splitting, atoms and irreducible factorization in the composition monoid.

Every composition factors uniquely into atoms with no adjacent trivial pair,
and two ribbon Schur functions are equal exactly when the factor lists agree
up to reversing individual factors.  That reduces both the equality test and
the normal form to the factorization computed here.

The two-factor split search works as follows.  If ``alpha = beta o gamma``
with ``gamma`` of size q and length t >= 2, then the first t - 1 components
of ``alpha`` are exactly the first t - 1 components of ``gamma`` (near powers
of ``gamma`` only touch the junctions), so the last component of the
candidate is forced by the size.  A candidate is verified by one linear scan
matching ``gamma`` cyclically: at each copy boundary the next component is
either the last component of ``gamma`` (a concatenation, so a new part of
``beta`` starts) or that value plus the first component (a near-concatenation
merge, so the current part of ``beta`` grows).  The two cases never collide
because components are positive.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache, reduce
from itertools import product

from .compositions import Composition, Parts, _compose_raw

_MEMO_SIZE = 1 << 16


@dataclass(frozen=True)
class Factorization:
    """An ordered list of atoms whose monoid product is the original composition."""

    factors: tuple[Composition, ...]

    def product(self) -> Composition:
        return Composition(reduce(_compose_raw, self.factors))

    def __iter__(self):
        return iter(self.factors)

    def __len__(self) -> int:
        return len(self.factors)

    def __getitem__(self, i):
        return self.factors[i]


def _is_trivial_raw(beta: Parts, gamma: Parts) -> bool:
    if beta == (1,) or gamma == (1,):
        return True
    if len(beta) == 1 and len(gamma) == 1:
        return True
    return max(beta) == 1 and max(gamma) == 1


def is_trivial_pair(beta: Composition, gamma: Composition) -> bool:
    """True for the factorizations that carry no structure: a factor (1),
    two single-component factors, or two all-ones factors."""
    return _is_trivial_raw(tuple(beta), tuple(gamma))


def _inner_divisors(n: int) -> list[int]:
    out = []
    for d in range(2, n):
        if n % d == 0:
            out.append(d)
    return out


def _unfold(alpha: Parts, gamma: Parts, q: int) -> Parts | None:
    """The unique beta with beta o gamma == alpha, or None."""
    t = len(gamma)
    if t == 1:
        beta = []
        for a in alpha:
            b, r = divmod(a, q)
            if r:
                return None
            beta.append(b)
        return tuple(beta)
    head = gamma[:-1]
    tail = gamma[1:-1]
    last = gamma[-1]
    merged = last + gamma[0]
    if alpha[: t - 1] != head:
        return None
    la = len(alpha)
    i = t - 1
    run = 1
    beta = []
    for _ in range(sum(alpha) // q - 1):
        if i >= la:
            return None
        x = alpha[i]
        if x == last:
            beta.append(run)
            run = 1
            i += 1
            if alpha[i : i + t - 1] != head:
                return None
            i += t - 1
        elif x == merged:
            run += 1
            i += 1
            if alpha[i : i + t - 2] != tail:
                return None
            i += t - 2
        else:
            return None
    if i != la - 1 or alpha[i] != last:
        return None
    beta.append(run)
    return tuple(beta)


def _split_candidates(alpha: Parts) -> list[tuple[Parts, Parts]]:
    """All (beta, gamma) with beta o gamma == alpha and neither factor (1).

    Ordered by size of gamma, then by its length.
    """
    n = sum(alpha)
    found = []
    for q in _inner_divisors(n):
        beta = _unfold(alpha, (q,), q)
        if beta is not None:
            found.append((beta, (q,)))
        top = min(q, len(alpha) + 1)
        prefix = 0
        for t in range(2, top + 1):
            prefix += alpha[t - 2]
            rest = q - prefix
            if rest < 1:
                break
            gamma = alpha[: t - 1] + (rest,)
            beta = _unfold(alpha, gamma, q)
            if beta is not None:
                found.append((beta, gamma))
    return found


def split_pairs(alpha: Composition) -> list[tuple[Composition, Composition]]:
    """Every way to write ``alpha`` as a two-factor product without (1) factors."""
    return [
        (Composition(b), Composition(g)) for b, g in _split_candidates(tuple(alpha))
    ]


def _is_atom(alpha: Parts) -> bool:
    return all(_is_trivial_raw(b, g) for b, g in _split_candidates(alpha))


def is_atom(alpha: Composition) -> bool:
    """True when every two-factor split of ``alpha`` is trivial."""
    return _is_atom(tuple(alpha))


def is_irreducible(alpha: Composition) -> bool:
    """An atom of length > 1 that is not all ones."""
    a = tuple(alpha)
    return len(a) > 1 and max(a) > 1 and _is_atom(a)


def _merge_trivial_neighbours(factors: tuple[Parts, ...]) -> tuple[Parts, ...]:
    # adjacent single-component atoms multiply, adjacent all-ones atoms multiply
    out = list(factors)
    i = 0
    while i < len(out) - 1:
        a, b = out[i], out[i + 1]
        if len(a) == 1 and len(b) == 1:
            out[i : i + 2] = [(a[0] * b[0],)]
            i = max(i - 1, 0)
        elif max(a) == 1 and max(b) == 1:
            out[i : i + 2] = [(1,) * (len(a) * len(b))]
            i = max(i - 1, 0)
        else:
            i += 1
    return tuple(out)


def _factor_dispatch(alpha: Parts, reverse_order: bool) -> tuple[Parts, ...]:
    candidates = _split_candidates(alpha)
    if reverse_order:
        candidates = candidates[::-1]
    split = None
    for b, g in candidates:
        if not _is_trivial_raw(b, g):
            split = (b, g)
            break
    if split is None:
        return (alpha,)
    beta, gamma = split
    if reverse_order:
        left = _factor_dispatch(beta, True)
        right = _factor_dispatch(gamma, True)
    else:
        left = _factor_parts(beta)
        right = _factor_parts(gamma)
    return _merge_trivial_neighbours(left + right)


@lru_cache(maxsize=_MEMO_SIZE)
def _factor_parts(alpha: Parts) -> tuple[Parts, ...]:
    return _factor_dispatch(alpha, False)


def irreducible_factorization(alpha: Composition) -> Factorization:
    """The unique factorization into atoms with no adjacent trivial pair.

    A size-1 input factors as itself.
    """
    factors = _factor_parts(tuple(alpha))
    return Factorization(tuple(Composition(f) for f in factors))


@lru_cache(maxsize=_MEMO_SIZE)
def _normal_form(alpha: Parts) -> Parts:
    out: Parts | None = None
    for f in _factor_parts(alpha):
        m = min(f, f[::-1])
        out = m if out is None else _compose_raw(out, m)
    return out


def normalize(alpha: Composition) -> Composition:
    """Recompose with every factor replaced by its lexicographic minimal form.

    The result is the canonical representative of the ribbon Schur function
    of ``alpha``; it is idempotent and invariant under reversal.
    """
    return Composition(_normal_form(tuple(alpha)))


def equivalent(alpha: Composition, beta: Composition) -> bool:
    """Whether the two compositions index the same ribbon Schur function."""
    return _normal_form(tuple(alpha)) == _normal_form(tuple(beta))


def equivalence_class(alpha: Composition) -> set[Composition]:
    """All compositions obtained by reversing any subset of the factors."""
    factors = _factor_parts(tuple(alpha))
    choices = [sorted({f, f[::-1]}) for f in factors]
    out = set()
    for combo in product(*choices):
        out.add(Composition(reduce(_compose_raw, combo)))
    return out


def count_asymmetric_factors(alpha: Composition) -> int:
    """Number of factors that differ from their reversal."""
    return sum(1 for f in _factor_parts(tuple(alpha)) if f != f[::-1])
