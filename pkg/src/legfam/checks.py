"""Exhaustive verification sweeps, shared by `cli verify` and the tests.

Each check walks every instance inside an explicit size limit and returns
a CheckReport instead of raising, so the CLI can print what failed and
the tests can assert on the same object.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field

import numpy as np

from .bounds import guaranteed_j, gyarmati_bound, upper_bound
from .fcomplexity import family_complexity
from .gf import ExtField, enumerate_irreducibles, norm, quad_char
from .legendre_seq import build_family, legendre_symbol
from .ntheory import (
    count_irreducibles,
    count_subfield_elements,
    divisors,
    primes_up_to,
)

__all__ = [
    "CheckReport",
    "small_fields",
    "check_weil",
    "check_gauss",
    "check_corollary1",
    "check_sandwich",
    "SUITES",
    "run_suite",
]

# keep failure lists readable when something is systematically broken
_MAX_RECORDED = 20


@dataclass
class CheckReport:
    name: str
    checked: int = 0
    failures: list[str] = field(default_factory=list)
    skipped: int = 0

    @property
    def ok(self) -> bool:
        return not self.failures

    def record(self, msg: str) -> None:
        if len(self.failures) < _MAX_RECORDED:
            self.failures.append(msg)
        else:
            self.skipped += 1


def small_fields(size_limit: int) -> list[tuple[int, int]]:
    """All (p, k) with odd prime p and p^k <= size_limit, ascending in p."""
    cells = []
    for p in primes_up_to(size_limit):
        if p == 2:
            continue
        k = 1
        while p ** k <= size_limit:
            cells.append((p, k))
            k += 1
    return cells


def _weil_slack(j: int, sqrt_n: float) -> float:
    return ((j - 2) / 2 + 2.0 ** -j) * sqrt_n + j / 2


def check_weil(size_limit: int = 169, j_max: int = 3) -> CheckReport:
    """Pattern-count sweep over every field with p^k <= size_limit.

    For every j <= j_max, every tuple of j distinct shift residues, and
    every sign pattern, the number N of field elements realizing the
    pattern must satisfy |N - p^k/2^j| <= ((j-2)/2 + 2^-j) p^{k/2} + j/2,
    and the 2^j counts of one tuple must sum to p^k - j (each shift
    position knocks out exactly one element, whose character value is 0).
    On top of that, for every j up to guaranteed_j(p, k), the minimum N
    must strictly exceed the subfield-element count; that strict gap is
    what makes the certified j honest.

    The sweep is vectorized per tuple prefix; j_max beyond 3 is not
    implemented (the acceptance grid never needs it).
    """
    if j_max > 3:
        raise ValueError(f"sweep supports j_max <= 3, got {j_max}")
    rep = CheckReport("weil")
    for p, k in small_fields(size_limit):
        n = p ** k
        fld = ExtField(p, k)
        chi = fld.char_table()
        mat = chi.reshape(n // p, p)
        # shifts[i][id] = chi(alpha_id + i): adding a prime-field constant
        # only rotates the lowest base-p digit
        shifts = np.stack([np.roll(mat, -i, axis=1).reshape(-1) for i in range(p)])
        sqrt_n = math.sqrt(n)
        min_by_j: dict[int, int] = {}
        depth = min(j_max, p)

        def note_counts(j: int, cnt: np.ndarray, expected_sum: int) -> None:
            rep.checked += cnt.size
            slack = _weil_slack(j, sqrt_n)
            center = n / 2 ** j
            if (np.abs(cnt - center) > slack + 1e-9).any():
                worst = int(np.abs(cnt - center).max())
                rep.record(
                    f"({p},{k}) j={j}: count deviates {worst} from {center}, "
                    f"allowed {slack:.3f}"
                )
            sums = cnt.sum(axis=-1)
            if not (sums == expected_sum).all():
                rep.record(f"({p},{k}) j={j}: pattern counts sum to {sums} != {expected_sum}")
            m = int(cnt.min())
            if j not in min_by_j or m < min_by_j[j]:
                min_by_j[j] = m

        if depth >= 1:
            plus = (shifts == 1).sum(axis=1, dtype=np.int64)
            minus = (shifts == -1).sum(axis=1, dtype=np.int64)
            note_counts(1, np.stack([minus, plus], axis=1), n - 1)
        if depth >= 2:
            for i1 in range(p - 1):
                row = shifts[i1]
                rest = shifts[i1 + 1 :]
                ok = (row != 0) & (rest != 0)
                sig = (row == 1).astype(np.int8) + 2 * (rest == 1).astype(np.int8)
                rows = rest.shape[0]
                idx = (np.arange(rows)[:, None] * 4 + sig)[ok]
                cnt = np.bincount(idx, minlength=4 * rows).reshape(rows, 4)
                note_counts(2, cnt, n - 2)
        if depth >= 3:
            for i1 in range(p - 2):
                b1 = (shifts[i1] == 1).astype(np.int8)
                v1 = shifts[i1] != 0
                for i2 in range(i1 + 1, p - 1):
                    b2 = b1 + 2 * (shifts[i2] == 1).astype(np.int8)
                    v2 = v1 & (shifts[i2] != 0)
                    rest = shifts[i2 + 1 :]
                    ok = v2 & (rest != 0)
                    sig = b2 + 4 * (rest == 1).astype(np.int8)
                    rows = rest.shape[0]
                    idx = (np.arange(rows)[:, None] * 8 + sig)[ok]
                    cnt = np.bincount(idx, minlength=8 * rows).reshape(rows, 8)
                    note_counts(3, cnt, n - 3)

        gj = guaranteed_j(p, k)
        if gj > depth:
            rep.record(f"({p},{k}): guaranteed_j={gj} deeper than swept j_max={depth}")
            continue
        subfield = count_subfield_elements(p, k)
        for j in range(1, gj + 1):
            rep.checked += 1
            if not min_by_j[j] > subfield:
                rep.record(
                    f"({p},{k}) j={j}: min pattern count {min_by_j[j]} does not "
                    f"exceed subfield count {subfield}"
                )
    return rep


def check_gauss(
    identity_qs: tuple[int, ...] = (2, 3, 4, 5, 7, 9),
    identity_n_max: int = 12,
    enum_limit: int = 2 ** 12,
    subfield_limit: int = 2 ** 10,
) -> CheckReport:
    """Counting identities for irreducible polynomials.

    (a) sum_{d|n} d * I_q(d) = q^n exactly (every monic polynomial factors
    uniquely into monic irreducibles); (b) the closed-form count matches an
    actual enumeration over F_p up to enum_limit; (c) the subfield-element
    count matches brute Frobenius fixed-point counting, alpha^(p^t) = alpha
    for some proper divisor t, up to subfield_limit.
    """
    rep = CheckReport("gauss")
    for q in identity_qs:
        for m in range(1, identity_n_max + 1):
            rep.checked += 1
            total = sum(d * count_irreducibles(q, d) for d in divisors(m))
            if total != q ** m:
                rep.record(f"identity failed at q={q}, n={m}: {total} != {q ** m}")
    for p, m in small_fields(enum_limit):
        rep.checked += 1
        if m == 1:
            # every monic linear is irreducible
            if count_irreducibles(p, 1) != p:
                rep.record(f"I_{p}(1) = {count_irreducibles(p, 1)} != {p}")
            continue
        found = len(enumerate_irreducibles(p, m))
        expected = count_irreducibles(p, m)
        if found != expected:
            rep.record(f"enumeration over F_{p} degree {m}: {found} != {expected}")
    for p, m in small_fields(subfield_limit):
        rep.checked += 1
        if m == 1:
            if count_subfield_elements(p, 1) != 0:
                rep.record(f"subfield count must vanish at n=1, p={p}")
            continue
        fld = ExtField(p, m)
        proper = [t for t in divisors(m) if t < m]
        brute = sum(
            1
            for a in fld.elements()
            if any(a ** (p ** t) == a for t in proper)
        )
        expected = count_subfield_elements(p, m)
        if brute != expected:
            rep.record(f"subfield count over F_{p}^{m}: brute {brute} != {expected}")
    return rep


def check_corollary1(
    ext_limit: int = 2 ** 12, prime_limit: int = 1024, op_sample: int = 64
) -> CheckReport:
    """Compatibility of the extension-field quadratic character with the
    Legendre symbol of the norm.

    Prime fields: the reciprocity-based symbol must match Euler's criterion
    a^((p-1)/2) for every residue. Extension fields: every element's cached
    character value must equal the Legendre symbol of its norm, with norms
    generated multiplicatively (norm(g^i) = norm(g)^i) from one honestly
    exponentiated norm(g); the per-element exponentiation routes quad_char
    and norm, being quadratically slower, are cross-checked on op_sample
    deterministic random elements per field plus 0, 1 and x.
    """
    rep = CheckReport("corollary1")
    for p in primes_up_to(prime_limit):
        if p == 2:
            continue
        for a in range(p):
            rep.checked += 1
            e = pow(a, (p - 1) // 2, p)
            euler = 0 if e == 0 else (1 if e == 1 else -1)
            if legendre_symbol(a, p) != euler:
                rep.record(f"Legendre({a},{p}) disagrees with Euler criterion")
    for p, k in small_fields(ext_limit):
        if k == 1:
            continue
        fld = ExtField(p, k)
        chi = fld.char_table()
        if chi[0] != 0:
            rep.record(f"({p},{k}): chi(0) != 0")
        g = fld.generator()
        ng = norm(g)
        cur = fld.one()
        nval = 1
        for _ in range(fld.size - 1):
            rep.checked += 1
            if chi[fld.element_id(cur)] != legendre_symbol(nval, p):
                rep.record(
                    f"({p},{k}): chi disagrees with Legendre(norm) at id "
                    f"{fld.element_id(cur)}"
                )
            cur = cur * g
            nval = nval * ng % p
        rng = random.Random(fld.size * 31 + p)
        ids = {0, 1, p} | {rng.randrange(fld.size) for _ in range(op_sample)}
        for ident in sorted(ids):
            a = fld.from_id(ident)
            rep.checked += 1
            if quad_char(a) != legendre_symbol(norm(a), p):
                rep.record(f"({p},{k}): quad_char(id {ident}) != Legendre(norm)")
    return rep


DEFAULT_SANDWICH_CELLS: tuple[tuple[int, int], ...] = (
    (3, 1), (5, 1), (7, 1), (11, 1), (13, 1),
    (3, 2), (5, 2), (7, 2), (11, 2), (13, 2),
)


def check_sandwich(
    cells: tuple[tuple[int, int], ...] = DEFAULT_SANDWICH_CELLS
) -> CheckReport:
    """Certified j <= exact oracle gamma <= log2(family size) on every cell.

    Also enforces the trivial bound 2^gamma <= |family| as exact integers
    and, wherever the older bound is positive, gamma >= that bound too.
    """
    rep = CheckReport("sandwich")
    for p, k in cells:
        fam = build_family(p, k)
        res = family_complexity(fam)
        gj = guaranteed_j(p, k)
        ub = upper_bound(p, k)
        gy, _ = gyarmati_bound(p, k)
        rep.checked += 1
        if not gj <= res.gamma:
            rep.record(f"({p},{k}): guaranteed_j {gj} > oracle gamma {res.gamma}")
        if not 2 ** res.gamma <= len(fam.members):
            rep.record(f"({p},{k}): 2^{res.gamma} exceeds family size {len(fam.members)}")
        if not res.gamma <= ub + 1e-12:
            rep.record(f"({p},{k}): gamma {res.gamma} above upper bound {ub}")
        if gy > 0.0 and not res.gamma >= gy:
            rep.record(f"({p},{k}): gamma {res.gamma} below positive bound {gy}")
    return rep


SUITES = {
    "weil": check_weil,
    "gauss": check_gauss,
    "corollary1": check_corollary1,
    "sandwich": check_sandwich,
}


def run_suite(name: str):
    """Run one named verification suite with default limits."""
    try:
        suite = SUITES[name]
    except KeyError:
        raise ValueError(
            f"unknown suite {name!r}; choose from {', '.join(sorted(SUITES))}"
        ) from None
    return suite()
