"""Exact rational upper bounds on the density of progression-free sets.

All arithmetic is arbitrary-precision rational end to end; decimals exist
only at the rendering boundary (5 places, round half away from zero).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

DEFAULT_TABLE_KS: tuple[int, ...] = (3, 4, 5, 6, 7, 10, 17)


def _require_k(k: int) -> None:
    if k < 3:
        raise ValueError(f"k must be at least 3, got {k}")


def riddell_bound(k: int) -> Fraction:
    """Classical bound 1 - 1/(2^k - 1)."""
    _require_k(k)
    return 1 - Fraction(1, 2**k - 1)


def brown_gordon_bound(k: int) -> Fraction:
    """Classical bound 1 - 1/2^k - (2/5) * (1/5^(k-1) - 1/6^(k-1))."""
    _require_k(k)
    return (
        1
        - Fraction(1, 2**k)
        - Fraction(2, 5) * (Fraction(1, 5 ** (k - 1)) - Fraction(1, 6 ** (k - 1)))
    )


def improved_bound(k: int) -> Fraction:
    """Upper density bound certified by the disjoint X/Y/Z block families:
    1 - 1/(2^k - 1) - (2/5)(1/5^(k-1) - 1/6^(k-1)) - (4/15)(1/7^(k-1) - 1/10^(k-1)).
    """
    _require_k(k)
    return (
        1
        - Fraction(1, 2**k - 1)
        - Fraction(2, 5) * (Fraction(1, 5 ** (k - 1)) - Fraction(1, 6 ** (k - 1)))
        - Fraction(4, 15) * (Fraction(1, 7 ** (k - 1)) - Fraction(1, 10 ** (k - 1)))
    )


def exclusion_constant(k: int) -> Fraction:
    """Leading constant of the excluded-element count: 1 - improved_bound(k)."""
    return 1 - improved_bound(k)


def render_decimal(value: Fraction, places: int = 5) -> str:
    """Fixed-point decimal string, round to nearest, ties away from zero."""
    if value < 0:
        raise ValueError("only nonnegative values are rendered")
    scale = 10**places
    q, r = divmod(value.numerator * scale, value.denominator)
    if 2 * r >= value.denominator:
        q += 1
    whole, frac = divmod(q, scale)
    return f"{whole}.{frac:0{places}d}"


def render_bound(value: Fraction, places: int = 5) -> str:
    """Like render_decimal, but a bound that would round up to 1 is rendered
    as the exactness marker "< 1" instead of the false value 1.00000."""
    rendered = render_decimal(value, places)
    if value < 1 and rendered == render_decimal(Fraction(1), places):
        return "< 1"
    return rendered


@dataclass(frozen=True)
class BoundReport:
    k: int
    riddell: Fraction
    brown_gordon: Fraction
    improved: Fraction
    riddell_rendered: str
    brown_gordon_rendered: str
    improved_rendered: str


def bound_report(k: int) -> BoundReport:
    """All three bounds for one k, exact and rendered."""
    r, bg, imp = riddell_bound(k), brown_gordon_bound(k), improved_bound(k)
    return BoundReport(
        k, r, bg, imp, render_bound(r), render_bound(bg), render_bound(imp)
    )


def render_table(ks: Sequence[int] = DEFAULT_TABLE_KS) -> str:
    """Human table of the improved bound, one row per k."""
    lines = ["  k  upper bound"]
    for k in ks:
        lines.append(f"{k:>3}  {render_bound(improved_bound(k))}")
    return "\n".join(lines)
