"""Closed forms and inequality audits for the three-level family and spiders.

The three-level family tmt1(m, t) splits at its root: deleting the root
and its neighbors leaves a perfect matching on mt edges, so the sets
containing the root are counted by x(1+2x)^{mt}; the sets avoiding it
live in m disjoint spiders with t legs of length 2.  Everything here is
exact: integers via math.comb, rationals via fractions.Fraction.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .indpoly import indpoly_sst
from .intpoly import IntPolynomial, poly_pow
from .seqcheck import lc_breaks


def _c(n: int, k: int) -> int:
    """Binomial coefficient with C(n, k) = 0 outside 0 <= k <= n."""
    if k < 0 or k > n:
        return 0
    return comb(n, k)


# -- spiders ------------------------------------------------------------------


def spider_count(t: int, k: int) -> int:
    """Number of independent sets of size k in the spider with t legs of
    length 2: C(t, k-1) sets containing the center (the rest comes from
    the t far leaves) plus 2^k C(t, k) sets avoiding it (k of the t legs
    contribute one of their 2 free vertices each)."""
    if t < 1:
        raise ValueError("spider needs t >= 1")
    if k < 0 or k > t + 1:
        return 0
    return _c(t, k - 1) + (1 << k) * _c(t, k)


def spider_sequence(t: int) -> IntPolynomial:
    """The full independence sequence of the 2-leg-length spider, from the
    closed form (not the polynomial engine)."""
    return IntPolynomial([spider_count(t, k) for k in range(t + 2)])


def spider_engine_poly(t: int) -> IntPolynomial:
    """The same sequence from the polynomial engine's level fast path."""
    return indpoly_sst([t, 1])


def spider_matches_engine(t_max: int) -> bool:
    """Closed form == engine for every t <= t_max."""
    return all(
        spider_sequence(t) == spider_engine_poly(t) for t in range(1, t_max + 1)
    )


def binomial_gap_identity(t: int, k: int) -> bool:
    """Exact identity used to reduce the spider log-concavity inequality:

        C(t,k)^2 - C(t,k-1) C(t,k+1) == C(t,k) C(t+1,k) / (k+1)

    The division is exact; this verifies both exactness and equality.
    """
    if not 0 <= k <= t:
        raise ValueError("need 0 <= k <= t")
    lhs = _c(t, k) ** 2 - _c(t, k - 1) * _c(t, k + 1)
    prod = _c(t, k) * _c(t + 1, k)
    q, r = divmod(prod, k + 1)
    return r == 0 and lhs == q


def spider_ratio_inequality(t: int, k: int) -> bool:
    """The reduced inequality behind spider log-concavity, cross-multiplied
    to integers: 2^k (t+1) / k >= 2 (k-1)(t-k) / (t-k+2), for 1 <= k <= t."""
    if not 1 <= k <= t:
        raise ValueError("need 1 <= k <= t")
    return (1 << k) * (t + 1) * (t - k + 2) >= 2 * k * (k - 1) * (t - k)


def spider_lc_sweep(t_max: int) -> bool:
    """For every t <= t_max: the closed-form spider sequence has no
    log-concavity breaks; the squared-middle-term inequality holds at each
    interior k; and the reduced ratio inequality holds at each k."""
    if t_max < 1:
        raise ValueError("t_max must be >= 1")
    for t in range(1, t_max + 1):
        seq = [spider_count(t, k) for k in range(t + 2)]
        if lc_breaks(seq):
            return False
        for k in range(1, t + 1):
            mid = _c(t, k - 1) + (1 << k) * _c(t, k)
            below = _c(t, k - 2) + (1 << (k - 1)) * _c(t, k - 1)
            above = _c(t, k) + (1 << (k + 1)) * _c(t, k + 1)
            if mid * mid < below * above:
                return False
            if not spider_ratio_inequality(t, k):
                return False
    return True


# -- the three-level family ---------------------------------------------------


def with_root_poly(m: int, t: int) -> IntPolynomial:
    """Counts of independent sets in tmt1(m, t) that contain the root:
    x (1 + 2x)^{mt}.  Vanishes beyond mt+1, with 2^{mt} at mt+1."""
    if m < 1 or t < 1:
        raise ValueError("need m >= 1 and t >= 1")
    return IntPolynomial([0, 1]) * poly_pow(IntPolynomial([1, 2]), m * t)


def without_root_poly(m: int, t: int) -> IntPolynomial:
    """Counts of independent sets in tmt1(m, t) that avoid the root: the
    polynomial of m disjoint spiders, i.e. the spider polynomial to the
    m-th power."""
    if m < 1 or t < 1:
        raise ValueError("need m >= 1 and t >= 1")
    return poly_pow(spider_engine_poly(t), m)


def without_root_mt2_closed(m: int, t: int) -> int:
    """Closed-form count of the size-(mt+2) independent sets avoiding the
    root, enumerated by the number s of depth-1 vertices used:

        C(m,2) 2^{mt-2t}
      + sum over 3 <= s <= m, 0 <= l <= min(s-2, mt-st) of
            C(m,s) C(mt-st, l) C(st, (s-2)-l) 2^{mt-st-l}

    (s < 2 contributes nothing: such sets top out at size mt+1.)
    Must equal without_root_poly(m, t) at index mt+2.
    """
    if m < 2 or t < 1:
        raise ValueError("need m >= 2 and t >= 1")
    total = comb(m, 2) * (1 << (m * t - 2 * t))
    for s in range(3, m + 1):
        free = m * t - s * t  # independent edges under the m-s unchosen vertices
        for ell in range(0, min(s - 2, free) + 1):
            total += (
                comb(m, s)
                * comb(free, ell)
                * comb(s * t, (s - 2) - ell)
                * (1 << (free - ell))
            )
    return total


def without_root_mt3_lower(m: int, t: int) -> int:
    """Lower bound C(m,3) 2^{mt-3t} on the size-(mt+3) count avoiding the
    root (choose 3 depth-1 vertices, then any transversal of the remaining
    mt-3t matching edges)."""
    if m < 3:
        raise ValueError("need m >= 3")
    if t < 1:
        raise ValueError("need t >= 1")
    return comb(m, 3) * (1 << (m * t - 3 * t))


def break_sufficient(m: int, t: int) -> bool:
    """Sufficient condition for a log-concavity break at mt+2 in the
    three-level family: with f the avoiding-the-root counts,

        f(mt+2)^2 < 2^{mt} f(mt+3).

    When true, the full sequence breaks at mt+2, because the sequence
    equals f beyond mt+1 while the value at mt+1 gains the extra 2^{mt}
    sets that contain the root.
    """
    f = without_root_poly(m, t)
    k = m * t
    return f.coeff(k + 2) ** 2 < (1 << k) * f.coeff(k + 3)


# -- term-ratio audit for the dominance argument ------------------------------


@dataclass(frozen=True)
class RatioRow:
    """One (s, l) term of the size-(mt+2) enumeration, compared against the
    dominant C(m,2) 2^{mt-2t} term.

    term       exact integer contribution of the (s, l) cell
    ratio      term / (C(m,2) 2^{mt-2t}), exact rational
    bound_log2 5 s log2(m) - s t / 3 as an exact rational when m is a
               power of two, else None (the bound check itself never
               needs logarithms)
    steps_ok   all four intermediate bounds hold for this cell
    final_ok   the cell's plain ratio (no C(m,2)) is at most 2^bound_log2
    """

    s: int
    ell: int
    term: int
    ratio: Fraction
    bound_log2: Fraction | None
    steps_ok: bool
    final_ok: bool


@dataclass(frozen=True)
class RatioAudit:
    """All rows plus the run's verdicts and regime bookkeeping."""

    m: int
    t: int
    rows: tuple
    max_ratio: Fraction
    total_ratio: Fraction
    all_steps_ok: bool
    all_final_ok: bool
    t_le_m: bool
    regime_ok: bool  # m <= 2^{t/16}, checked exactly as m^16 <= 2^t


def _leq_pow2_bound(value: Fraction, s: int, m: int, t: int) -> bool:
    # value <= 2^{5 s log2(m) - s t / 3}  <=>  value^3 * 2^{s t} <= m^{15 s}
    return value**3 * (1 << (s * t)) <= Fraction(m) ** (15 * s)


def audit_term_ratios(m: int, t: int) -> RatioAudit:
    """Audit every (s, l) term of the size-(mt+2) enumeration against the
    bound chain that shows the C(m,2) 2^{mt-2t} term dominates.

    Per row, the four intermediate bounds:

        C(m,s) <= m^s
        C(mt-st, l) <= (mt)^s        (uses l <= s)
        C(st, (s-2)-l) <= (st)^s
        (s-2) t + l >= s t / 3       (uses s >= 3)

    and the final bound on the plain ratio
    C(m,s) C(mt-st,l) C(st,(s-2)-l) / 2^{(s-2)t+l} <= 2^{5 s log2(m) - st/3},
    checked exactly by cubing (no logarithms, no floats).  The summary
    records whether the dominance hypotheses t <= m and m <= 2^{t/16} hold;
    the per-row bounds are checked regardless.
    """
    if m < 3:
        raise ValueError("need m >= 3")
    if t < 2:
        raise ValueError("need t >= 2")
    log2m = Fraction(m.bit_length() - 1) if m & (m - 1) == 0 else None
    dominant = comb(m, 2) * (1 << (m * t - 2 * t))
    rows = []
    total = Fraction(0)
    for s in range(3, m + 1):
        free = m * t - s * t
        for ell in range(0, min(s - 2, free) + 1):
            binoms = comb(m, s) * comb(free, ell) * comb(s * t, (s - 2) - ell)
            term = binoms * (1 << (free - ell))
            ratio = Fraction(term, dominant)
            plain = Fraction(binoms, 1 << ((s - 2) * t + ell))
            steps_ok = (
                comb(m, s) <= m**s
                and comb(free, ell) <= (m * t) ** s
                and comb(s * t, (s - 2) - ell) <= (s * t) ** s
                and 3 * ((s - 2) * t + ell) >= s * t
            )
            final_ok = _leq_pow2_bound(plain, s, m, t)
            bound = None if log2m is None else 5 * s * log2m - Fraction(s * t, 3)
            rows.append(
                RatioRow(
                    s=s,
                    ell=ell,
                    term=term,
                    ratio=ratio,
                    bound_log2=bound,
                    steps_ok=steps_ok,
                    final_ok=final_ok,
                )
            )
            total += ratio
    return RatioAudit(
        m=m,
        t=t,
        rows=tuple(rows),
        max_ratio=max((r.ratio for r in rows), default=Fraction(0)),
        total_ratio=total,
        all_steps_ok=all(r.steps_ok for r in rows),
        all_final_ok=all(r.final_ok for r in rows),
        t_le_m=t <= m,
        regime_ok=m**16 <= 1 << t,
    )
