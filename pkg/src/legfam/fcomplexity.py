"""Exhaustive family complexity.

The family complexity of a family F of +-1 sequences of length N is the
largest j such that for EVERY choice of j positions and EVERY +-1 sign
pattern on them, some member of F realizes that pattern. This module
computes it by direct search, which is exponential in j but exact; it is
the ground truth the closed-form bounds are tested against.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

from .errors import BudgetExceededError
from .legendre_seq import SequenceFamily

__all__ = ["ComplexityResult", "satisfies_spec", "family_complexity", "DEFAULT_CELL_BUDGET"]

DEFAULT_CELL_BUDGET = 10 ** 9


@dataclass(frozen=True)
class ComplexityResult:
    """Exact family complexity plus the certificate that stops it.

    witness_failure is None when gamma hit the cap (sequence length or
    j_cap) with every level fully realized; otherwise it is the pair
    (positions, signs) of size gamma + 1 that no member satisfies, with
    the lexicographically first failing position tuple and, within it,
    the first missing sign pattern in (-1 < +1) order.
    """

    gamma: int
    witness_failure: tuple[tuple[int, ...], tuple[int, ...]] | None
    cells_examined: int


def satisfies_spec(
    family: SequenceFamily, positions: Sequence[int], signs: Sequence[int]
) -> bool:
    """True when some family member matches every (position, sign) constraint.

    Positions are 1-based, strictly increasing, at most the sequence length.
    The empty pattern is satisfied vacuously, even by an empty family.
    """
    if len(positions) != len(signs):
        raise ValueError("positions and signs must have equal length")
    if not positions:
        return True
    prev = 0
    for i in positions:
        if not prev < i <= family.p:
            raise ValueError(
                f"positions must be strictly increasing in [1, {family.p}], got {positions}"
            )
        prev = i
    for s in signs:
        if s not in (-1, 1):
            raise ValueError(f"signs must be +-1, got {s}")
    for member in family.members:
        if all(member.values[i - 1] == s for i, s in zip(positions, signs)):
            return True
    return False


def _level_cost(n: int, j: int, members: int) -> int:
    return math.comb(n, j) * members * j


def family_complexity(
    family: SequenceFamily,
    j_cap: int | None = None,
    cell_budget: int = DEFAULT_CELL_BUDGET,
) -> ComplexityResult:
    """Exact family complexity by ascending exhaustive search.

    Level j is checked only after every level below passed, and the search
    stops at the first failing position tuple, so the returned witness is
    canonical. The cost of a full level is bounded above before starting
    it; if that bound would push past cell_budget, BudgetExceededError is
    raised naming the first unverified level (no partial answers).

    An empty family has gamma 0. gamma is capped at the sequence length
    (only p distinct positions exist) and at j_cap if given.
    """
    n = family.p
    if j_cap is not None and j_cap < 0:
        raise ValueError(f"j_cap must be >= 0, got {j_cap}")
    limit = n if j_cap is None else min(n, j_cap)
    # one bitmask per member: bit (i-1) set iff value at position i is +1
    masks = [
        sum(1 << (i - 1) for i, v in enumerate(m.values, start=1) if v == 1)
        for m in family.members
    ]
    cells = 0
    for j in range(1, limit + 1):
        upcoming = _level_cost(n, j, max(1, len(masks)))
        if cells + upcoming > cell_budget:
            raise BudgetExceededError(
                f"cell budget {cell_budget} exhausted before verifying j={j} "
                f"(level needs up to {upcoming} more cells, {cells} used)"
            )
        full = 1 << j
        for pos in combinations(range(1, n + 1), j):
            cells += len(masks) * j
            seen = set()
            for mask in masks:
                b = 0
                for i in pos:
                    b = (b << 1) | ((mask >> (i - 1)) & 1)
                seen.add(b)
                if len(seen) == full:
                    break
            if len(seen) < full:
                missing = next(b for b in range(full) if b not in seen)
                signs = tuple(
                    1 if (missing >> (j - 1 - t)) & 1 else -1 for t in range(j)
                )
                return ComplexityResult(j - 1, (pos, signs), cells)
    return ComplexityResult(limit, None, cells)
