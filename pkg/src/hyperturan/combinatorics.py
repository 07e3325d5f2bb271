"""Counting functions and the derived parameters of the non-jump constructions.

Everything that feeds an inequality is kept as an exact ``Fraction`` or
``int``; floats only appear in display fields and in the one place a real
root or logarithm is unavoidable (evaluated with mpmath interval arithmetic).
"""
from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass
from fractions import Fraction

import mpmath
from scipy.stats import binomtest

from .errors import InvalidArgument, ResourceLimit
from .hypergraph import Hypergraph, degree_table, to_mask

mpmath.mp.dps = 50


def as_fraction(x) -> Fraction:
    """Exact rational from an int, Fraction, decimal string or float (via its repr)."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        return Fraction(repr(x))
    return Fraction(x)


def f_multi(ns, k: int, l: int) -> int:
    """Ways to pick k-l elements from disjoint sets of sizes ``ns``, fewer than l from each."""
    if not k > l > 1:
        raise InvalidArgument(f"need k > l > 1, got k={k}, l={l}")
    if any(x < 0 for x in ns):
        raise InvalidArgument("part sizes must be non-negative")
    r = k - l
    # poly[j] = ways to choose j elements from the parts seen so far
    poly = [1] + [0] * r
    for size in ns:
        nxt = [0] * (r + 1)
        for j, ways in enumerate(poly):
            if ways:
                for q in range(min(l - 1, r - j) + 1):
                    nxt[j + q] += ways * math.comb(size, q)
        poly = nxt
    return poly[r]


def f_uniform(n0: int, a: int, k: int, l: int) -> int:
    return f_multi([n0] * a, k, l)


# ---------------------------------------------------------------------------
# parameters


@dataclass(frozen=True)
class JumpParams:
    """Constants of the non-jump constructions.

    ``epsilon0_pow`` is the exact value of epsilon0**(k-l); ``epsilon0``
    itself is a (k-l)-th root and is only carried as a float for display.
    The layered fields are ``None`` for the alpha = 0 case.
    """

    k: int
    l: int
    delta: Fraction
    epsilon0_pow: Fraction
    epsilon0: float
    t: int
    M0: int
    a: int | None = None
    b: int | None = None
    q: Fraction | None = None
    epsilon: Fraction | None = None
    M: int | None = None
    N0: int | None = None

    def as_dict(self) -> dict:
        return {f: getattr(self, f) for f in self.__dataclass_fields__}


def _delta_bound(k: int, l: int) -> Fraction:
    return Fraction(4 * (k - l) ** 2, k) ** (k - l)


def _floor_root_recip(x: Fraction, r: int) -> int:
    """Largest integer t with t**r <= 1/x, i.e. floor(x**(-1/r))."""
    inv = 1 / x
    t = int(mpmath.floor(mpmath.root(mpmath.mpf(inv.numerator) / inv.denominator, r)))
    while (t + 1) ** r <= inv:
        t += 1
    while t > 0 and t ** r > inv:
        t -= 1
    return t


def jump_parameters(k: int, l: int, delta) -> JumpParams:
    """epsilon0, t and M0 for the alpha = 0 construction, with the chain checked."""
    if not k > l > 1:
        raise InvalidArgument(f"need k > l > 1, got k={k}, l={l}")
    delta = as_fraction(delta)
    bound = _delta_bound(k, l)
    if not 0 < delta < bound:
        raise InvalidArgument(f"delta must satisfy 0 < delta < (4(k-l)^2/k)^(k-l) = {bound}, got {delta}")
    r = k - l
    e_pow = delta / (1 + (4 * r * r) ** r)
    # e_pow <= k^-(k-l) < 1/2
    if not (e_pow <= Fraction(1, k ** r) and Fraction(1, k ** r) < Fraction(1, 2)):
        raise ArithmeticError(f"epsilon0^(k-l) = {e_pow} violates epsilon0^(k-l) <= k^-(k-l) < 1/2")
    t = _floor_root_recip(e_pow, r)
    if t < k:
        raise ArithmeticError(f"t = {t} < k = {k}")
    M0 = l * t
    # M0 >= l / (2 (k-l) epsilon0)  <=>  (2 (k-l) M0 / l)^r * e_pow >= 1
    if Fraction(2 * r * M0, l) ** r * e_pow < 1:
        raise ArithmeticError(f"M0 = {M0} < l / (2(k-l) epsilon0)")
    e0 = float(mpmath.root(mpmath.mpf(e_pow.numerator) / e_pow.denominator, r))
    return JumpParams(k, l, delta, e_pow, e0, t, M0)


def scale_ratio(q, k: int) -> tuple[int, int]:
    """(a, b) = (c*a0, c*b0) with a0/b0 = q in lowest terms and c >= 1 least with a + k < b."""
    q = as_fraction(q)
    if not 0 < q < 1:
        raise InvalidArgument(f"q must lie in (0, 1), got {q}")
    a0, b0 = q.numerator, q.denominator
    c = k // (b0 - a0) + 1
    return a0 * c, b0 * c


def layered_parameters(k: int, l: int, delta, q) -> JumpParams:
    base = jump_parameters(k, l, delta)
    q = as_fraction(q)
    a, b = scale_ratio(q, k)
    r = k - l
    epsilon = base.epsilon0_pow / b ** r / 4
    N0 = b + 1
    mp = mpmath.mp
    with mp.workprec(200):
        e_pow = mpmath.mpf(base.epsilon0_pow.numerator) / base.epsilon0_pow.denominator
        d = mpmath.mpf(base.delta.numerator) / base.delta.denominator
        qq = mpmath.mpf(q.numerator) / q.denominator
        term1 = 2 * r * mpmath.root(math.comb(base.M0, r) / (d - e_pow), r)
        term2 = b * l * r / (qq * mpmath.log(1 + (e_pow / qq ** r) / 2))
        terms = [int(mpmath.ceil(term1)), int(mpmath.ceil(term2)), N0, math.ceil(Fraction(b * l) / (1 - q))]
    M = max(terms)
    return JumpParams(k, l, base.delta, base.epsilon0_pow, base.epsilon0, base.t, base.M0,
                      a=a, b=b, q=q, epsilon=epsilon, M=M, N0=N0)


# ---------------------------------------------------------------------------
# M(k, l, epsilon)


def _threshold_conditions(m: int, k: int, l: int, eps: Fraction) -> tuple[bool, bool]:
    """Both defining inequalities at m; the first is decided on an upper bound of its left side."""
    r = k - l
    iv = mpmath.iv
    iv.prec = 160
    e = iv.mpf(eps.numerator) / eps.denominator
    left = math.comb(m, l) * iv.exp(-(e * e) * m / (8 * r * r))
    first = left.b <= iv.mpf(1) / 2
    top = math.comb(m, r) - math.comb(m - l, r)
    bottom = Fraction(math.comb(m, r)) - Fraction(math.comb(m - l, r), 2)
    second = bottom > 0 and Fraction(top) / bottom <= eps
    return bool(first), second


def M_threshold(k: int, l: int, epsilon) -> int:
    """Smallest m >= k satisfying both inequalities that define M(k, l, epsilon)."""
    if not k > l >= 1:
        raise InvalidArgument(f"need k > l >= 1, got k={k}, l={l}")
    eps = as_fraction(epsilon)
    if not 0 < eps < 1:
        raise InvalidArgument(f"epsilon must lie in (0, 1), got {eps}")

    def ok(m):
        a, b = _threshold_conditions(m, k, l, eps)
        return a and b

    def second(m):
        return _threshold_conditions(m, k, l, eps)[1]

    # the second condition is monotone in m: find its first m by galloping
    lo = k
    if not second(lo):
        hi = lo + 1
        while not second(hi):
            lo, hi = hi, 2 * hi
        while hi - lo > 1:
            mid = (lo + hi) // 2
            if second(mid):
                hi = mid
            else:
                lo = mid
        lo = hi
    start = lo
    # log C(m,l) - c m is increasing up to m* and decreasing after, so the first
    # condition fails on [start, m*] once it fails at start and its first success
    # beyond m* can be found by bisection.
    if ok(start):
        return start
    c = (eps * eps) / (8 * (k - l) ** 2)
    ec = mpmath.exp(mpmath.mpf(c.numerator) / c.denominator)
    lo = max(start, int(mpmath.ceil(l * ec / (ec - 1))))
    hi = lo + 1
    while not ok(hi):
        lo, hi = hi, 2 * hi
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if ok(mid):
            hi = mid
        else:
            lo = mid
    return hi


# ---------------------------------------------------------------------------
# good subsets


@dataclass(frozen=True)
class GoodSubsetCount:
    count: float
    exact: bool
    total: int
    samples: int = 0
    hits: int = 0
    ci_low: float | None = None
    ci_high: float | None = None
    confidence: float | None = None


def _is_good(H: Hypergraph, S: tuple[int, ...], l: int, threshold: Fraction) -> bool:
    s = to_mask(S)
    inside = [e for e, m in zip(H.edges, H.edge_masks) if m & s == m]
    table = degree_table(Hypergraph(H.k, H.n, inside), l)
    return all(table.get(to_mask(T), 0) > threshold for T in itertools.combinations(S, l))


def count_good_subsets(H: Hypergraph, l: int, m: int, alpha, *, exact_budget: int = 200_000,
                       samples: int | None = None, seed: int = 0,
                       confidence: float = 0.95) -> GoodSubsetCount:
    """Count m-sets S with min l-degree of H[S] strictly above alpha * C(m, k-l).

    Exact enumeration when C(n, m) <= ``exact_budget``, or when ``samples``
    is None and the budget allows; otherwise ``samples`` uniform m-sets are
    drawn and a Clopper-Pearson interval is reported for the count.
    """
    k, n = H.k, H.n
    if not (0 <= l < k <= m <= n):
        raise InvalidArgument(f"need l < k <= m <= n, got l={l}, k={k}, m={m}, n={n}")
    alpha = as_fraction(alpha)
    threshold = alpha * math.comb(m, k - l)
    total = math.comb(n, m)
    if samples is None:
        if total > exact_budget:
            raise ResourceLimit(f"C({n},{m}) = {total} exceeds the exact budget {exact_budget}; pass samples=")
        hits = sum(1 for S in itertools.combinations(range(n), m) if _is_good(H, S, l, threshold))
        return GoodSubsetCount(hits, True, total)
    rng = random.Random(seed)
    hits = 0
    for _ in range(samples):
        S = tuple(sorted(rng.sample(range(n), m)))
        hits += _is_good(H, S, l, threshold)
    ci = binomtest(hits, samples).proportion_ci(confidence_level=confidence, method="exact")
    return GoodSubsetCount(total * hits / samples, False, total, samples, hits,
                           total * ci.low, total * ci.high, confidence)
