"""Exact bound computations for single-deletion labeling codes.

Everything here is exact rational arithmetic; floating point appears only
in the presentation-layer gap column of the redundancy table.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import comb

from .labeling import EnumerationBudgetExceeded


def zero_runs(x) -> int:
    """Number of maximal runs of zeros in x."""
    runs = 0
    prev = -1
    for v in x:
        if v == 0 and prev != 0:
            runs += 1
        prev = v
    return runs


def zero_deletion_ball(x):
    """Distinct words obtained by deleting one zero of x (size = zero_runs)."""
    x = tuple(x)
    out = set()
    for i, v in enumerate(x):
        if v == 0 and (i == 0 or x[i - 1] != 0):
            out.add(x[:i] + x[i + 1 :])
    return out


def count_zero_run_sequences(length: int, z: int, q: int) -> int:
    """Number of q-ary words of the given length with exactly z zero runs.

    Binary words follow the closed form C(length+1, 2z); for q > 2 the
    count splits over how many of the free positions are zeros that extend
    existing runs.
    """
    if length < 1:
        raise ValueError("length must be positive")
    if z < 0:
        raise ValueError("z must be non-negative")
    if z == 0:
        return (q - 1) ** length
    if q == 2:
        return comb(length + 1, 2 * z)
    total = 0
    for i in range(length - (2 * z - 1) + 1):
        total += (
            comb(i + z - 1, z - 1)
            * comb(length - (2 * z - 1) - i + z, z)
            * (q - 1) ** (length - z - i)
        )
    return total


def binary_upper_closed_form(m: int) -> Fraction:
    """The closed-form binary bound 2^(m+2) / (m-2)."""
    if m <= 2:
        raise ValueError("the closed form needs m > 2")
    return Fraction(2 ** (m + 2), m - 2)


def upper_bound_zero_deletion(m: int, q: int) -> Fraction:
    """Fractional-transversal upper bound on zero-deletion codes of length m.

    The transversal assigns weight 1/z(x) to every length-(m-1) word with
    at least one zero run; the bound is the total weight, summed exactly
    per run count.
    """
    if m < 2:
        raise ValueError("m must be at least 2")
    total = Fraction(0)
    for z in range(1, (m - 1) // 2 + 2):
        count = count_zero_run_sequences(m - 1, z, q)
        if count:
            total += Fraction(count, z)
    if q == 2 and m > 2:
        assert total <= binary_upper_closed_form(m)
    return total


def upper_bound_labeling(n: int, q: int) -> Fraction:
    """Upper bound for single-deletion labeling codes of length n (m = n+1)."""
    if n < 1:
        raise ValueError("n must be positive")
    return upper_bound_zero_deletion(n + 1, q)


def lower_bound_size(n: int, q: int) -> Fraction:
    """Guaranteed size of the constructed code: q^(n+1) / ((q-1)(n+2))."""
    if n < 1:
        raise ValueError("n must be positive")
    return Fraction(q ** (n + 1), (q - 1) * (n + 2))


def _log_fraction(f: Fraction, base: int) -> float:
    return (math.log(f.numerator) - math.log(f.denominator)) / math.log(base)


@dataclass(frozen=True)
class BoundRow:
    """One row of the bound table; gap is presentation-only floating point."""

    q: int
    n: int
    lower: Fraction
    upper: Fraction

    @property
    def gap(self) -> float:
        return _log_fraction(self.upper, self.q) - _log_fraction(self.lower, self.q)


def redundancy_gap_table(q: int, n_list) -> list[BoundRow]:
    rows = []
    for n in n_list:
        if n < 2:
            # at n = 1 nearly every deletion ball is empty and the
            # transversal sum degenerates below the trivial code size
            raise ValueError("the bound table is meaningful for n >= 2 only")
        row = BoundRow(q, n, lower_bound_size(n, q), upper_bound_labeling(n, q))
        if row.lower > row.upper:
            raise AssertionError(f"bound ordering violated at n={n}")
        rows.append(row)
    return rows


def brute_force_transversal_sum(m: int, q: int, cap: int = 4**10) -> Fraction:
    """Sum of 1/z(x) over all length-(m-1) words with a zero, by enumeration."""
    if q ** (m - 1) > cap:
        raise EnumerationBudgetExceeded(f"{q}^{m - 1} words exceed the cap")
    total = Fraction(0)
    for x in product(range(q), repeat=m - 1):
        z = zero_runs(x)
        if z:
            total += Fraction(1, z)
    return total


def fractional_transversal_check(m: int, q: int, cap: int = 4**10) -> bool:
    """Verify the transversal argument exhaustively on Sigma_q^m.

    Checks that the zero-deletion ball of x has exactly zero_runs(x)
    elements, that run counts never grow inside a ball, and that the
    weights 1/z(y) meet every nonempty ball with total at least 1.  A ball
    element without zeros has unbounded weight (1/0), which satisfies the
    covering constraint outright.
    """
    if q**m > cap:
        raise EnumerationBudgetExceeded(f"{q}^{m} words exceed the cap")
    for x in product(range(q), repeat=m):
        z = zero_runs(x)
        ball = zero_deletion_ball(x)
        if len(ball) != z:
            return False
        if not ball:
            continue
        total = Fraction(0)
        covered = False
        for y in ball:
            zy = zero_runs(y)
            if zy > z:
                return False
            if zy == 0:
                covered = True
            else:
                total += Fraction(1, zy)
        if not covered and total < 1:
            return False
    return True
