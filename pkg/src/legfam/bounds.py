"""Closed-form lower bounds on the family complexity of Legendre sequence
families, and the crossover search for where the older bound turns positive.

The driving quantity A = (2 p^{k/2} - 2)/(1 + p^{-k/2}) overflows floats
already for moderate p^k, so it is carried as a base-2 logarithm
(LogMagnitude) and the Lambert W evaluations switch to the log-domain
solver w0_from_log once the W argument itself cannot be materialized.

Everything here is a pure function of (p, k); only the timing fields of
BoundReport depend on the machine.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass

import numpy as np

from .errors import BudgetExceededError
from .lambertw import w0_from_log, w0_real
from .ntheory import (
    count_irreducibles,
    count_subfield_elements,
    is_prime,
    log2_of_big,
)

__all__ = [
    "LogMagnitude",
    "BoundReport",
    "compute_A_B",
    "theorem1_bound",
    "guaranteed_j",
    "lemma4_closed_form",
    "lemma4_bisection_root",
    "gyarmati_bound",
    "upper_bound",
    "corollary2_bound",
    "crossover_prime",
    "make_report",
]

_LN2 = math.log(2.0)
_LOG2_LN2 = math.log2(_LN2)


@dataclass(frozen=True)
class LogMagnitude:
    """A positive real carried as its base-2 logarithm.

    Represents magnitudes up to 2^(10^8) and beyond, which the bound
    computations hit routinely (p^{k/2} for p around 10^9, k in the
    thousands).
    """

    log2_value: float

    @property
    def value(self) -> float:
        """Materialized magnitude; inf once it exceeds float range."""
        try:
            return 2.0 ** self.log2_value
        except OverflowError:
            return math.inf


@dataclass(frozen=True)
class BoundReport:
    """Both bounds plus everything needed to reproduce them."""

    p: int
    k: int
    a_log2: LogMagnitude
    b: float
    new_bound: float
    guaranteed_j: int
    gyarmati_bound: float
    gyarmati_c: float
    upper_bound: float
    eval_time_new_ns: int
    eval_time_gyarmati_ns: int


def _validate_pk(p: int, k: int) -> None:
    if p < 3 or p % 2 == 0 or not is_prime(p):
        raise ValueError(f"p must be an odd prime, got {p}")
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")


def compute_A_B(p: int, k: int) -> tuple[LogMagnitude, float]:
    """The pair (A, B) driving the Lambert-W bound.

    A = (2 p^{k/2} - 2)/(1 + p^{-k/2}), returned as log2(A) without ever
    materializing p^{k/2}. B = (2 |G| p^{-k/2} - 2)/(1 + p^{-k/2}) where
    |G| counts the elements of F_{p^k} lying in proper subfields; |G| is
    taken exactly as a big integer and pushed through log2_of_big, because
    for even k its two leading terms cancel to relative size p^{-k/6} and
    a floating-point divisor sum would lose every significant digit.
    """
    _validate_pk(p, k)
    half_log2 = 0.5 * k * math.log2(p)
    inv = 2.0 ** (-half_log2)  # p^{-k/2}; harmless underflow to 0 for huge p^k
    log2_a = 1.0 + half_log2 + math.log1p(-inv) / _LN2 - math.log1p(inv) / _LN2
    subfield = count_subfield_elements(p, k)
    if subfield == 0:
        r = 0.0
    else:
        r = 2.0 ** (log2_of_big(subfield) - half_log2)
    b = (2.0 * r - 2.0) / (1.0 + inv)
    return LogMagnitude(log2_a), b


def _w_of_pow2(log2_arg: float) -> float:
    # W(2^log2_arg) without materializing the argument when it is huge.
    ell = _LN2 * log2_arg
    if ell >= 1.0:
        return w0_from_log(ell).value
    return w0_real(2.0 ** log2_arg).value


def theorem1_bound(p: int, k: int) -> float:
    """The Lambert-W lower bound on family complexity: log2(A / W(2^B A)).

    Evaluated as log2(A) - log2(W(...)) in the log domain, so it stays
    finite and accurate for p^{k/2} far beyond float range.
    """
    a, b = compute_A_B(p, k)
    return a.log2_value - math.log2(_w_of_pow2(b + a.log2_value))


def _root_log2(log2_a: float, b: float) -> float:
    # log2 of the root of B*x + x*log2(x) = A, via
    # x = A ln2 / W(2^B A ln2); see lemma4_closed_form.
    log2_arg = b + log2_a + _LOG2_LN2
    return log2_a + _LOG2_LN2 - math.log2(_w_of_pow2(log2_arg))


def guaranteed_j(p: int, k: int) -> int:
    """The integer number of positions the bound's counting argument
    actually certifies: the largest j with B*2^j + j*2^j strictly below A,
    i.e. with 2^j strictly below the root of B*x + x*log2(x) = A.

    Clamped to [0, p]: a sign pattern has at most p distinct positions.
    When the root's log2 lands exactly on an integer the strict inequality
    excludes it (a 1e-9 snap guards the float boundary).
    """
    a, b = compute_A_B(p, k)
    root_log2 = _root_log2(a.log2_value, b)
    nearest = round(root_log2)
    if abs(root_log2 - nearest) < 1e-9:
        j = nearest - 1
    else:
        j = math.ceil(root_log2) - 1
    return max(0, min(p, j))


def lemma4_closed_form(A: float, B: float) -> float:
    """The unique positive root of B*x + x*log2(x) = A, for A > 0.

    Substituting u = 2^B * x turns the equation into u*log2(u) = 2^B * A,
    i.e. (ln u) e^(ln u) = 2^B * A * ln2, so ln u = W(2^B A ln2) and
    x = A ln2 / W(2^B A ln2). The ln2 factors matter: the equation is in
    log base 2 while W inverts the natural-log form.
    """
    if not (math.isfinite(A) and A > 0.0):
        raise ValueError(f"A must be positive and finite, got {A}")
    if not math.isfinite(B):
        raise ValueError(f"B must be finite, got {B}")
    w = _w_of_pow2(B + math.log2(A) + _LOG2_LN2)
    return A * _LN2 / w


def lemma4_bisection_root(A: float, B: float, iterations: int = 200) -> float:
    """Root of B*x + x*log2(x) = A by pure bisection; no Lambert W anywhere.

    Kept as an independent cross-check of lemma4_closed_form. The lower
    end 2^(-B-2) always starts negative (there B + log2 x = -2 exactly),
    and g is increasing past its single minimum, so doubling the upper
    end is guaranteed to bracket.
    """
    if not (math.isfinite(A) and A > 0.0):
        raise ValueError(f"A must be positive and finite, got {A}")
    if not math.isfinite(B):
        raise ValueError(f"B must be finite, got {B}")
    lo = 2.0 ** (-B - 2.0)
    if not math.isfinite(lo):
        raise ValueError(f"B = {B} puts the bracket outside float range")

    def g(x: float) -> float:
        return x * (B + math.log2(x)) - A

    hi = max(2.0 * lo, 2.0)
    while g(hi) <= 0.0:
        hi *= 2.0
    for _ in range(iterations):
        mid = 0.5 * (lo + hi)
        if g(mid) > 0.0:
            hi = mid
        else:
            lo = mid
        if hi - lo <= 1e-15 * lo:
            break
    return 0.5 * (lo + hi)


def gyarmati_bound(p: int, k: int) -> tuple[float, float]:
    """The older lower bound, as the pair (bound, c).

    c = 1/2 when k <= p^(1/4) / (10 ln p) and 5/2 otherwise (natural log
    in the threshold); bound = min(p, ((k - c)/2) * log2(p)), which is the
    base-independent form of (k - c)/(2 log 2) * log p. Negative for every
    small p at k = 1.
    """
    _validate_pk(p, k)
    c = 0.5 if k <= p ** 0.25 / (10.0 * math.log(p)) else 2.5
    return min(float(p), 0.5 * (k - c) * math.log2(p)), c


def upper_bound(p: int, k: int) -> float:
    """log2 of the family size: gamma can never exceed this since realizing
    every pattern at j positions takes at least 2^j distinct members."""
    _validate_pk(p, k)
    return log2_of_big(count_irreducibles(p, k))


def corollary2_bound(p: int, K: int) -> float:
    """Lower bound for the larger family of all squarefree polynomials of
    degree up to K: it contains the degree-K irreducible family, so the
    same value transfers verbatim."""
    return theorem1_bound(p, K)


_SCAN_CHUNK = 1 << 21


def crossover_prime(k: int, p_limit: int = 2 ** 32) -> int:
    """Smallest odd prime p <= p_limit whose gyarmati_bound is positive.

    Positivity only depends on k > c, so the scan hunts for the first odd
    integer admitted by the c = 1/2 threshold (for k <= 2; for k >= 3 even
    c = 5/2 works and the answer is 3). The threshold comparison is done
    in numpy chunks because for k = 1 the first admitted integer sits near
    2.13e9; a Miller-Rabin walk then finds the first prime from there.
    The walk re-evaluates gyarmati_bound directly, so the returned prime
    satisfies the public predicate, not just the vectorized shortcut.
    """
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    lo = 3
    while lo <= p_limit:
        hi = min(lo + 2 * _SCAN_CHUNK, p_limit + 1)
        arr = np.arange(lo, hi, 2, dtype=np.float64)
        c = np.where(arr ** 0.25 >= 10.0 * k * np.log(arr), 0.5, 2.5)
        positive = c < k
        if positive.any():
            first = int(arr[int(np.argmax(positive))])
            for n in range(first, p_limit + 1, 2):
                if gyarmati_bound_unchecked(n, k) > 0.0 and is_prime(n):
                    return n
            break
        lo = hi if hi % 2 == 1 else hi + 1
    raise BudgetExceededError(
        f"no odd prime at or below {p_limit} has a positive bound for k={k}"
    )


def gyarmati_bound_unchecked(p: int, k: int) -> float:
    """gyarmati_bound's value without the primality gate, for scan internals
    that evaluate it at arbitrary odd integers."""
    c = 0.5 if k <= p ** 0.25 / (10.0 * math.log(p)) else 2.5
    return min(float(p), 0.5 * (k - c) * math.log2(p))


def make_report(p: int, k: int) -> BoundReport:
    """Evaluate both bounds at (p, k) with per-bound wall times in ns."""
    _validate_pk(p, k)
    t0 = time.perf_counter_ns()
    new_bound = theorem1_bound(p, k)
    t_new = time.perf_counter_ns() - t0
    t0 = time.perf_counter_ns()
    gy, c = gyarmati_bound(p, k)
    t_gy = time.perf_counter_ns() - t0
    a, b = compute_A_B(p, k)
    return BoundReport(
        p=p,
        k=k,
        a_log2=a,
        b=b,
        new_bound=new_bound,
        guaranteed_j=guaranteed_j(p, k),
        gyarmati_bound=gy,
        gyarmati_c=c,
        upper_bound=upper_bound(p, k),
        eval_time_new_ns=t_new,
        eval_time_gyarmati_ns=t_gy,
    )
