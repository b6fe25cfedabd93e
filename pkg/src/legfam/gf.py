"""Dense polynomial arithmetic over F_p and extension fields F_{p^k}.

Coefficient vectors are stored lowest degree first with no trailing zeros
(the zero polynomial is the empty tuple). Extension fields are F_p[x]/(m)
for a monic irreducible m; when no modulus is given, the lexicographically
first irreducible of the right degree is used so that every construction
is reproducible run to run.

Only odd prime characteristics are accepted: the quadratic character that
everything downstream consumes does not exist in characteristic 2.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence

import numpy as np

from .errors import BudgetExceededError
from .ntheory import is_prime

__all__ = [
    "DEFAULT_ENUM_BUDGET",
    "PolyModP",
    "poly_eval",
    "is_irreducible",
    "enumerate_irreducibles",
    "ExtField",
    "ExtFieldElement",
    "norm",
    "trace",
    "quad_char",
    "tau",
    "norm_poly",
    "pattern_count",
]

DEFAULT_ENUM_BUDGET = 1 << 20


@lru_cache(maxsize=None)
def _require_odd_prime(p: int) -> None:
    if p < 3 or not is_prime(p):
        raise ValueError(f"characteristic must be an odd prime, got {p}")


# ---------------------------------------------------------------------------
# raw coefficient-tuple arithmetic (lowest degree first, normalized)

def _norm(cs: list[int]) -> tuple[int, ...]:
    while cs and cs[-1] == 0:
        cs.pop()
    return tuple(cs)


def _padd(p: int, a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] = (out[i] + c) % p
    return _norm(out)


def _psub(p: int, a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    out = list(a) + [0] * (len(b) - len(a))
    for i, c in enumerate(b):
        out[i] = (out[i] - c) % p
    return _norm(out)


def _pmul(p: int, a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _norm(out)


def _pdivmod(
    p: int, a: tuple[int, ...], b: tuple[int, ...]
) -> tuple[tuple[int, ...], tuple[int, ...]]:
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    db = len(b) - 1
    if len(a) - 1 < db:
        return (), a
    rem = list(a)
    quot = [0] * (len(a) - db)
    lead_inv = pow(b[-1], p - 2, p)
    for i in range(len(a) - db - 1, -1, -1):
        c = rem[i + db]
        if c:
            c = c * lead_inv % p
            quot[i] = c
            for t in range(db + 1):
                rem[i + t] = (rem[i + t] - c * b[t]) % p
    return _norm(quot), _norm(rem[:db])


def _pmod(p: int, a: tuple[int, ...], m: tuple[int, ...]) -> tuple[int, ...]:
    return _pdivmod(p, a, m)[1]


def _ppowmod(
    p: int, a: tuple[int, ...], e: int, m: tuple[int, ...]
) -> tuple[int, ...]:
    result: tuple[int, ...] = (1,)
    base = _pmod(p, a, m)
    while e:
        if e & 1:
            result = _pmod(p, _pmul(p, result, base), m)
        base = _pmod(p, _pmul(p, base, base), m)
        e >>= 1
    return result


def _pgcd(p: int, a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    while b:
        a, b = b, _pmod(p, a, b)
    if a and a[-1] != 1:
        inv = pow(a[-1], p - 2, p)
        a = tuple(c * inv % p for c in a)
    return a


def _poly_str(coeffs: tuple[int, ...]) -> str:
    if not coeffs:
        return "0"
    parts = []
    for d in range(len(coeffs) - 1, -1, -1):
        c = coeffs[d]
        if c == 0:
            continue
        if d == 0:
            parts.append(str(c))
        elif d == 1:
            parts.append("x" if c == 1 else f"{c}*x")
        else:
            parts.append(f"x^{d}" if c == 1 else f"{c}*x^{d}")
    return " + ".join(parts)


# ---------------------------------------------------------------------------
# prime-field polynomials

@dataclass(frozen=True)
class PolyModP:
    """Polynomial over F_p, odd prime p. Coefficients are auto-reduced mod p
    and stored lowest degree first with trailing zeros stripped."""

    p: int
    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        _require_odd_prime(self.p)
        cs = [int(c) % self.p for c in self.coeffs]
        object.__setattr__(self, "coeffs", _norm(cs))

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def _check_same_p(self, other: "PolyModP") -> None:
        if self.p != other.p:
            raise ValueError(f"mixed characteristics {self.p} and {other.p}")

    def __add__(self, other: "PolyModP") -> "PolyModP":
        self._check_same_p(other)
        return PolyModP(self.p, _padd(self.p, self.coeffs, other.coeffs))

    def __sub__(self, other: "PolyModP") -> "PolyModP":
        self._check_same_p(other)
        return PolyModP(self.p, _psub(self.p, self.coeffs, other.coeffs))

    def __mul__(self, other: "PolyModP") -> "PolyModP":
        self._check_same_p(other)
        return PolyModP(self.p, _pmul(self.p, self.coeffs, other.coeffs))

    def __divmod__(self, other: "PolyModP") -> tuple["PolyModP", "PolyModP"]:
        self._check_same_p(other)
        q, r = _pdivmod(self.p, self.coeffs, other.coeffs)
        return PolyModP(self.p, q), PolyModP(self.p, r)

    def __mod__(self, other: "PolyModP") -> "PolyModP":
        return divmod(self, other)[1]

    def evaluate(self, x: int) -> int:
        """Value at x, reduced into [0, p). Horner scheme."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = (acc * x + c) % self.p
        return acc

    def derivative(self) -> "PolyModP":
        return PolyModP(
            self.p, tuple(d * c % self.p for d, c in enumerate(self.coeffs))[1:]
        )

    def gcd(self, other: "PolyModP") -> "PolyModP":
        """Monic greatest common divisor."""
        self._check_same_p(other)
        return PolyModP(self.p, _pgcd(self.p, self.coeffs, other.coeffs))

    def __str__(self) -> str:
        return _poly_str(self.coeffs)

    def __repr__(self) -> str:
        return f"PolyModP(p={self.p}, {_poly_str(self.coeffs)})"


def poly_eval(f: PolyModP, x: int) -> int:
    """f(x) mod p."""
    return f.evaluate(x)


def _prime_factors(k: int) -> list[int]:
    out = []
    d = 2
    while d * d <= k:
        if k % d == 0:
            out.append(d)
            while k % d == 0:
                k //= d
        d += 1
    if k > 1:
        out.append(k)
    return out


def _rabin_irreducible(p: int, coeffs: tuple[int, ...]) -> bool:
    # Rabin's test: x^(p^k) = x mod f, and x^(p^(k/r)) - x coprime to f
    # for every prime r dividing k.
    k = len(coeffs) - 1
    if k == 1:
        return True
    x = (0, 1)
    for r in _prime_factors(k):
        h = _ppowmod(p, x, p ** (k // r), coeffs)
        if len(_pgcd(p, _psub(p, h, x), coeffs)) != 1:
            return False
    return _ppowmod(p, x, p ** k, coeffs) == x


def is_irreducible(f: PolyModP) -> bool:
    """Rabin irreducibility test for monic f of degree >= 1."""
    if f.degree < 1:
        raise ValueError(f"degree must be >= 1, got {f!r}")
    if not f.is_monic:
        raise ValueError(f"irreducibility test expects a monic polynomial, got {f!r}")
    return _rabin_irreducible(f.p, f.coeffs)


def enumerate_irreducibles(
    p: int, k: int, budget: int = DEFAULT_ENUM_BUDGET
) -> list[PolyModP]:
    """All monic irreducible degree-k polynomials over F_p.

    Ordered lexicographically by the coefficient tuple (a_{k-1}, ..., a_0),
    i.e. x^2 + 1 before x^2 + x + 2 before x^2 + 2x + 2 for p = 3. Refuses
    to scan more than `budget` candidates (p^k of them).
    """
    _require_odd_prime(p)
    if k < 1:
        raise ValueError(f"degree must be >= 1, got {k}")
    if p ** k > budget:
        raise BudgetExceededError(
            f"enumerating degree-{k} polynomials over F_{p} needs {p ** k} "
            f"candidates, budget is {budget}"
        )
    found = []
    for tail in itertools.product(range(p), repeat=k):
        coeffs = tuple(reversed(tail)) + (1,)
        if _rabin_irreducible(p, coeffs):
            found.append(PolyModP(p, coeffs))
    return found


def _first_irreducible(p: int, k: int) -> PolyModP:
    for tail in itertools.product(range(p), repeat=k):
        coeffs = tuple(reversed(tail)) + (1,)
        if _rabin_irreducible(p, coeffs):
            return PolyModP(p, coeffs)
    raise AssertionError(f"no irreducible of degree {k} over F_{p} found")


# ---------------------------------------------------------------------------
# extension fields

class ExtField:
    """F_{p^k} realized as F_p[x] modulo a monic irreducible.

    Elements are indexed by id = sum_i c_i p^i over the representative's
    coefficients, so id 0 is zero, id 1 is one and id p is the generator
    image x.
    """

    def __init__(self, p: int, k: int, modulus: PolyModP | None = None):
        _require_odd_prime(p)
        if k < 1:
            raise ValueError(f"extension degree must be >= 1, got {k}")
        if modulus is None:
            modulus = _first_irreducible(p, k)
        else:
            if modulus.p != p:
                raise ValueError(f"modulus characteristic {modulus.p} != {p}")
            if modulus.degree != k:
                raise ValueError(f"modulus degree {modulus.degree} != {k}")
            if not modulus.is_monic or not _rabin_irreducible(p, modulus.coeffs):
                raise ValueError(f"modulus must be monic irreducible, got {modulus!r}")
        self.p = p
        self.k = k
        self.modulus = modulus
        self.size = p ** k
        self._chi: np.ndarray | None = None

    def element(self, coeffs: Sequence[int]) -> "ExtFieldElement":
        """Element from prime-field coefficients (lowest first), reduced mod the modulus."""
        raw = _pmod(
            self.p, _norm([int(c) % self.p for c in coeffs]), self.modulus.coeffs
        )
        return ExtFieldElement(self, PolyModP(self.p, raw))

    def zero(self) -> "ExtFieldElement":
        return ExtFieldElement(self, PolyModP(self.p, ()))

    def one(self) -> "ExtFieldElement":
        return ExtFieldElement(self, PolyModP(self.p, (1,)))

    def gen(self) -> "ExtFieldElement":
        """The residue class of x."""
        return self.element((0, 1))

    def from_id(self, ident: int) -> "ExtFieldElement":
        """Element whose representative has base-p digit expansion `ident`."""
        if not 0 <= ident < self.size:
            raise ValueError(f"element id must lie in [0, {self.size}), got {ident}")
        digits = []
        while ident:
            ident, c = divmod(ident, self.p)
            digits.append(c)
        return ExtFieldElement(self, PolyModP(self.p, tuple(digits)))

    def element_id(self, a: "ExtFieldElement") -> int:
        ident = 0
        for c in reversed(a.rep.coeffs):
            ident = ident * self.p + c
        return ident

    def elements(
        self, budget: int = DEFAULT_ENUM_BUDGET
    ) -> Iterator["ExtFieldElement"]:
        """All p^k elements in id order."""
        if self.size > budget:
            raise BudgetExceededError(
                f"field has {self.size} elements, enumeration budget is {budget}"
            )
        for ident in range(self.size):
            yield self.from_id(ident)

    def char_table(self, budget: int = DEFAULT_ENUM_BUDGET) -> np.ndarray:
        """Quadratic character of every element, indexed by id (int8, 0 at 0).

        Built once per field and cached: for k = 1 from the set of squares,
        for k >= 2 by walking the powers of a multiplicative generator and
        alternating signs (squares are exactly the even powers).
        """
        if self._chi is not None:
            return self._chi
        n = self.size
        if n > budget:
            raise BudgetExceededError(
                f"character table needs {n} entries, budget is {budget}"
            )
        chi = np.zeros(n, dtype=np.int8)
        if self.k == 1:
            squares = {i * i % self.p for i in range(1, self.p)}
            for a in range(1, self.p):
                chi[a] = 1 if a in squares else -1
        else:
            g = self._find_generator()
            cur: tuple[int, ...] = (1,)
            chi[1] = 1
            for i in range(1, n - 1):
                cur = _pmod(self.p, _pmul(self.p, cur, g), self.modulus.coeffs)
                ident = 0
                for c in reversed(cur):
                    ident = ident * self.p + c
                chi[ident] = -1 if i & 1 else 1
            assert int(np.count_nonzero(chi == 1)) == (n - 1) // 2
        self._chi = chi
        return chi

    def generator(self) -> "ExtFieldElement":
        """A fixed multiplicative generator of the nonzero elements: the
        first one in id order."""
        return self.from_id(self._generator_id())

    def _generator_id(self) -> int:
        cand = self._find_generator()
        ident = 0
        for c in reversed(cand):
            ident = ident * self.p + c
        return ident

    def _find_generator(self) -> tuple[int, ...]:
        # scan ids upward; for k >= 2 constants cannot generate (their order
        # divides p - 1), so the scan starts at id p, the element x
        n = self.size
        factors = _prime_factors(n - 1)
        for ident in range(2 if self.k == 1 else self.p, n):
            digits = []
            t = ident
            while t:
                t, c = divmod(t, self.p)
                digits.append(c)
            cand = tuple(digits)
            if all(
                _ppowmod(self.p, cand, (n - 1) // q, self.modulus.coeffs) != (1,)
                for q in factors
            ):
                return cand
        raise AssertionError(f"no generator found for F_{self.p}^{self.k}")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ExtField):
            return NotImplemented
        return (self.p, self.k, self.modulus.coeffs) == (
            other.p,
            other.k,
            other.modulus.coeffs,
        )

    def __hash__(self) -> int:
        return hash((self.p, self.k, self.modulus.coeffs))

    def __repr__(self) -> str:
        return f"ExtField(p={self.p}, k={self.k}, modulus={_poly_str(self.modulus.coeffs)})"


@dataclass(frozen=True)
class ExtFieldElement:
    """Element of an ExtField; rep is the reduced representative in F_p[x]."""

    field: ExtField
    rep: PolyModP

    def _check_same_field(self, other: "ExtFieldElement") -> None:
        if self.field != other.field:
            raise ValueError(
                f"elements live in different fields: {self.field!r} vs {other.field!r}"
            )

    @property
    def is_zero(self) -> bool:
        return self.rep.is_zero

    def __add__(self, other: "ExtFieldElement") -> "ExtFieldElement":
        self._check_same_field(other)
        return ExtFieldElement(self.field, self.rep + other.rep)

    def __sub__(self, other: "ExtFieldElement") -> "ExtFieldElement":
        self._check_same_field(other)
        return ExtFieldElement(self.field, self.rep - other.rep)

    def __mul__(self, other: "ExtFieldElement") -> "ExtFieldElement":
        self._check_same_field(other)
        raw = _pmod(
            self.field.p,
            _pmul(self.field.p, self.rep.coeffs, other.rep.coeffs),
            self.field.modulus.coeffs,
        )
        return ExtFieldElement(self.field, PolyModP(self.field.p, raw))

    def __pow__(self, e: int) -> "ExtFieldElement":
        if e < 0:
            if self.is_zero:
                raise ZeroDivisionError("inverse of zero")
            # a^(-1) = a^(size - 2) in the multiplicative group
            e = e % (self.field.size - 1)
        raw = _ppowmod(self.field.p, self.rep.coeffs, e, self.field.modulus.coeffs)
        return ExtFieldElement(self.field, PolyModP(self.field.p, raw))

    def __repr__(self) -> str:
        return f"<{_poly_str(self.rep.coeffs)} in GF({self.field.p}^{self.field.k})>"


def norm(a: ExtFieldElement) -> int:
    """Field norm down to F_p, returned as an integer residue.

    norm(a) = a^((p^k - 1)/(p - 1)); multiplicative, zero only at zero.
    """
    if a.is_zero:
        return 0
    f = a.field
    r = a ** ((f.size - 1) // (f.p - 1))
    assert r.rep.degree <= 0, f"norm of {a!r} did not land in the prime field"
    return r.rep.coeffs[0] if r.rep.coeffs else 0


def trace(a: ExtFieldElement) -> int:
    """Field trace down to F_p: sum of the k Frobenius conjugates."""
    f = a.field
    total = a
    cur = a
    for _ in range(f.k - 1):
        cur = cur ** f.p
        total = total + cur
    assert total.rep.degree <= 0, f"trace of {a!r} did not land in the prime field"
    return total.rep.coeffs[0] if total.rep.coeffs else 0


def quad_char(a: ExtFieldElement) -> int:
    """Quadratic character of F_{p^k}: +1 on nonzero squares, -1 otherwise, 0 at 0.

    Computed as a^((p^k - 1)/2) by square-and-multiply.
    """
    if a.is_zero:
        return 0
    r = a ** ((a.field.size - 1) // 2)
    c = r.rep.coeffs
    assert len(c) == 1 and c[0] in (1, a.field.p - 1), f"chi({a!r}) = {r!r}"
    return 1 if c[0] == 1 else -1


def tau(coeffs: Sequence[ExtFieldElement], s: int) -> list[ExtFieldElement]:
    """Coefficient-wise Frobenius twist: apply c -> c^(p^s) to a polynomial
    over the extension field (coefficients lowest degree first)."""
    if not coeffs:
        raise ValueError("tau needs a nonempty coefficient sequence")
    f = coeffs[0].field
    for c in coeffs[1:]:
        coeffs[0]._check_same_field(c)
    if s < 0:
        raise ValueError(f"Frobenius power must be >= 0, got {s}")
    e = f.p ** (s % f.k)
    return [c ** e for c in coeffs]


def norm_poly(coeffs: Sequence[ExtFieldElement]) -> PolyModP:
    """Product of all k Frobenius twists of a polynomial over F_{p^k}.

    The product is Galois-invariant, so every coefficient lies in the prime
    field and the result is returned as a PolyModP. Degree multiplies by k.
    """
    if not coeffs:
        raise ValueError("norm_poly needs a nonempty coefficient sequence")
    f = coeffs[0].field
    prod: list[ExtFieldElement] = [f.one()]
    for s in range(f.k):
        twisted = tau(coeffs, s)
        out = [f.zero()] * (len(prod) + len(twisted) - 1)
        for i, a in enumerate(prod):
            if a.is_zero:
                continue
            for j, b in enumerate(twisted):
                out[i + j] = out[i + j] + a * b
        prod = out
    consts = []
    for c in prod:
        assert c.rep.degree <= 0, "norm_poly coefficient escaped the prime field"
        consts.append(c.rep.coeffs[0] if c.rep.coeffs else 0)
    return PolyModP(f.p, tuple(consts))


def pattern_count(
    field: ExtField,
    positions: Sequence[int],
    signs: Sequence[int],
    budget: int = DEFAULT_ENUM_BUDGET,
) -> int:
    """Number of alpha in F_{p^k} with quad_char(alpha + i) = s for every
    pair (i, s) of a position and a sign.

    Positions are residues mod p (distinct after reduction); signs are +-1.
    Full enumeration of the field, so the usual budget applies.
    """
    if len(positions) != len(signs):
        raise ValueError("positions and signs must have equal length")
    if not positions:
        raise ValueError("at least one (position, sign) pair is required")
    p = field.p
    pos = [int(i) % p for i in positions]
    if len(set(pos)) != len(pos):
        raise ValueError(f"positions must be distinct mod {p}, got {positions}")
    for s in signs:
        if s not in (-1, 1):
            raise ValueError(f"signs must be +-1, got {s}")
    chi = field.char_table(budget)
    pairs = list(zip(pos, signs))
    count = 0
    for ident in range(field.size):
        c0 = ident % p
        base = ident - c0
        for i, s in pairs:
            if chi[base + (c0 + i) % p] != s:
                break
        else:
            count += 1
    return count
