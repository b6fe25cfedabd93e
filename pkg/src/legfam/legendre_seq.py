"""Legendre symbol sequences attached to polynomials mod p, and the
families of such sequences generated by all monic irreducibles of a
fixed degree."""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import BudgetExceededError
from .gf import DEFAULT_ENUM_BUDGET, PolyModP, enumerate_irreducibles, _require_odd_prime
from .ntheory import count_irreducibles

__all__ = [
    "legendre_symbol",
    "LegendreSequence",
    "build_sequence",
    "SequenceFamily",
    "build_family",
]


def legendre_symbol(a: int, p: int) -> int:
    """Legendre symbol (a/p) in {-1, 0, +1} for an odd prime p.

    Iterative Jacobi reciprocity, O(log^2) bit operations; no exponentiation.
    """
    _require_odd_prime(p)
    a %= p
    if a == 0:
        return 0
    n = p
    result = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    # n is now gcd(a, p) = 1 since p is prime and a was nonzero mod p
    return result


@dataclass(frozen=True)
class LegendreSequence:
    """The +-1 sequence e_n = (f(n)/p) for n = 1..p, with e_n = +1 patched
    in wherever p divides f(n). Index n = p wraps to the value at 0."""

    p: int
    values: tuple[int, ...]
    source: PolyModP | None = field(default=None, compare=False)

    def __post_init__(self) -> None:
        _require_odd_prime(self.p)
        if len(self.values) != self.p:
            raise ValueError(
                f"sequence must have exactly p={self.p} entries, got {len(self.values)}"
            )
        for v in self.values:
            if v not in (-1, 1):
                raise ValueError(f"sequence entries must be +-1, got {v}")

    def __len__(self) -> int:
        return self.p


def _sequence_values(f: PolyModP) -> tuple[int, ...]:
    p = f.p
    out = []
    for n in range(1, p + 1):
        s = legendre_symbol(f.evaluate(n % p), p)
        out.append(s if s else 1)
    return tuple(out)


def build_sequence(f: PolyModP) -> LegendreSequence:
    """Legendre sequence of a squarefree polynomial f with deg f >= 1.

    Squarefreeness (gcd(f, f') constant) is required: a square factor makes
    the symbol pattern degenerate. For f with zero derivative the gcd is f
    itself, which correctly rejects p-th powers like x^p + c.
    """
    if f.degree < 1:
        raise ValueError(f"polynomial must be nonconstant, got {f!r}")
    if f.gcd(f.derivative()).degree != 0:
        raise ValueError(f"polynomial must be squarefree, got {f!r}")
    return LegendreSequence(f.p, _sequence_values(f), f)


@dataclass(frozen=True)
class SequenceFamily:
    """A family of length-p Legendre sequences sharing one prime p.

    For the irreducible-polynomial family of degree k the members appear in
    the enumeration order of their source polynomials, so member order is
    reproducible.
    """

    p: int
    k: int
    members: tuple[LegendreSequence, ...]

    def __post_init__(self) -> None:
        _require_odd_prime(self.p)
        if self.k < 1:
            raise ValueError(f"degree must be >= 1, got {self.k}")
        for m in self.members:
            if m.p != self.p:
                raise ValueError(f"member prime {m.p} != family prime {self.p}")

    def __len__(self) -> int:
        return len(self.members)


def build_family(
    p: int, k: int, budget: int = DEFAULT_ENUM_BUDGET
) -> SequenceFamily:
    """The family of Legendre sequences of all monic irreducible degree-k
    polynomials over F_p.

    Two budget gates: the p^k enumeration candidates, and the total number
    of stored sequence cells (members times p), which for k = 1 is the
    binding one since there are p linear polynomials of length p each.
    """
    _require_odd_prime(p)
    if k < 1:
        raise ValueError(f"degree must be >= 1, got {k}")
    if p ** k > budget:
        raise BudgetExceededError(
            f"family F({k}, {p}) needs {p ** k} enumeration candidates, budget is {budget}"
        )
    cells = count_irreducibles(p, k) * p
    if cells > budget:
        raise BudgetExceededError(
            f"family F({k}, {p}) would store {cells} sequence cells, budget is {budget}"
        )
    members = tuple(
        LegendreSequence(p, _sequence_values(f), f)
        for f in enumerate_irreducibles(p, k, budget)
    )
    return SequenceFamily(p, k, members)
