"""Rational-ratio geometric progressions over the positive integers.

A geometric progression of k >= 3 distinct positive integers always has a
rational common ratio: orienting it ascending and writing the ratio as p/q
in lowest terms (p > q >= 1), the i-th term is a_0 * (p/q)^i, and the last
term being an integer forces q^(k-1) to divide a_0.  Every progression
inside the positive integers is therefore

    (m * q^(k-1),  m * q^(k-2) * p,  ...,  m * p^(k-1))

for a unique triple (m, p, q) with m >= 1, p > q >= 1, gcd(p, q) = 1.
Descending progressions are stored as their ascending reversal, and ratios
0, 1, -1 cannot occur among distinct positive integers, so enumerating the
triples is finite and hits each progression in {1..n} exactly once.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

# Terms beyond this bound are rejected rather than produced.  Python
# integers never wrap, but a term outside the 64-bit range means the inputs
# are far outside the supported desk scale and would poison downstream
# counts, so it is reported as a distinct failure.
TERM_LIMIT = 2**63 - 1

# brute_force_gps refuses instances with more k-subsets than this.
BRUTE_FORCE_CAP = 2_000_000


class TermOverflowError(OverflowError):
    """A progression term exceeded TERM_LIMIT."""


GpSet = tuple[int, ...]
"""A k-term geometric progression as the sorted tuple of its elements."""


@dataclass(frozen=True)
class Ratio:
    """Reduced common ratio p/q in ascending orientation (p > q >= 1)."""

    p: int
    q: int

    def __post_init__(self) -> None:
        if self.q < 1 or self.p <= self.q:
            raise ValueError(f"ratio requires p > q >= 1, got {self.p}/{self.q}")
        if math.gcd(self.p, self.q) != 1:
            raise ValueError(f"ratio {self.p}/{self.q} is not reduced")

    def as_fraction(self) -> Fraction:
        return Fraction(self.p, self.q)

    def __str__(self) -> str:
        return str(self.p) if self.q == 1 else f"{self.p}/{self.q}"


def canonical_ratio(p: int, q: int) -> Ratio:
    """Reduce p/q and orient it ascending.

    Ratio 1 is rejected: a progression with unit ratio would repeat a term,
    and repeated terms cannot occur in a set of distinct integers.
    """
    if p < 1 or q < 1:
        raise ValueError(f"ratio parts must be positive, got {p}/{q}")
    if p == q:
        raise ValueError("ratio 1 does not generate a progression")
    g = math.gcd(p, q)
    p, q = p // g, q // g
    if p < q:
        p, q = q, p
    return Ratio(p, q)


@dataclass(frozen=True)
class Progression:
    """Ascending progression m*q^(k-1), m*q^(k-2)*p, ..., m*p^(k-1)."""

    m: int
    ratio: Ratio
    k: int

    def __post_init__(self) -> None:
        if self.m < 1:
            raise ValueError(f"multiplier must be positive, got {self.m}")
        if self.k < 3:
            raise ValueError(f"length must be at least 3, got {self.k}")


def expand(prog: Progression) -> list[int]:
    """All k terms of the progression, strictly ascending.

    Raises TermOverflowError if any term exceeds TERM_LIMIT.
    """
    p, q = prog.ratio.p, prog.ratio.q
    term = prog.m * q ** (prog.k - 1)
    terms = [term]
    for _ in range(prog.k - 1):
        term = term * p // q  # exact: q^(k-1-i) divides the i-th term
        terms.append(term)
    if terms[-1] > TERM_LIMIT:
        raise TermOverflowError(
            f"term {terms[-1]} exceeds the supported limit {TERM_LIMIT}"
        )
    return terms


def as_progression(elements: Sequence[int]) -> Progression:
    """Recover the unique (m, ratio, k) normal form of a sorted progression.

    Raises ValueError if the elements do not form an ascending geometric
    progression of distinct positive integers.
    """
    elems = list(elements)
    k = len(elems)
    if k < 3:
        raise ValueError("a progression needs at least 3 terms")
    if elems[0] < 1 or any(a >= b for a, b in zip(elems, elems[1:])):
        raise ValueError("elements must be distinct positive integers, ascending")
    r = Fraction(elems[1], elems[0])
    ratio = Ratio(r.numerator, r.denominator)
    m, rem = divmod(elems[0], ratio.q ** (k - 1))
    if rem != 0:
        raise ValueError(f"{elems} is not a geometric progression")
    prog = Progression(m, ratio, k)
    if expand(prog) != elems:
        raise ValueError(f"{elems} is not a geometric progression")
    return prog


def validate_nk(n: int, k: int) -> None:
    """Shared domain guard for (n, k) operations."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    if n > TERM_LIMIT:
        raise TermOverflowError(f"n exceeds the supported limit {TERM_LIMIT}")
    if k < 3:
        raise ValueError(f"k must be at least 3, got {k}")


def enumerate_gps(n: int, k: int) -> list[GpSet]:
    """Every k-term geometric progression inside {1..n}, each exactly once.

    Iterates the (m, p, q) normal form: coprime p > q >= 1 with
    p^(k-1) <= n, then m with m * p^(k-1) <= n.  Output order is
    lexicographic in (p, q, m); elements of each progression ascend.
    """
    validate_nk(n, k)
    out: list[GpSet] = []
    p = 2
    while p ** (k - 1) <= n:
        p_top = p ** (k - 1)
        m_max = n // p_top
        for q in range(1, p):
            if math.gcd(p, q) == 1:
                weights = [q ** (k - 1 - i) * p**i for i in range(k)]
                out.extend(
                    tuple(m * w for w in weights) for m in range(1, m_max + 1)
                )
        p += 1
    return out


def find_gp(elements: Iterable[int], k: int) -> GpSet | None:
    """First progression contained in the set, in (p, q, m) order, or None."""
    if k < 3:
        raise ValueError(f"k must be at least 3, got {k}")
    members = set(elements)
    if len(members) < k:
        return None
    if min(members) < 1:
        raise ValueError("elements must be positive integers")
    top = max(members)
    if top > TERM_LIMIT:
        raise TermOverflowError(f"element {top} exceeds the supported limit")
    p = 2
    while p ** (k - 1) <= top:
        p_top = p ** (k - 1)
        m_max = top // p_top
        for q in range(1, p):
            if math.gcd(p, q) == 1:
                weights = [q ** (k - 1 - i) * p**i for i in range(k)]
                for m in range(1, m_max + 1):
                    if all(m * w in members for w in weights):
                        return tuple(m * w for w in weights)
        p += 1
    return None


def is_gp_free(elements: Iterable[int], k: int) -> bool:
    """True when the set contains no k-term geometric progression."""
    return find_gp(elements, k) is None


def brute_force_gps(n: int, k: int) -> list[GpSet]:
    """Definitional oracle: filter all k-subsets of {1..n} for equal ratios.

    Independent of the normal-form enumeration; used to validate it.
    Refuses instances with more than BRUTE_FORCE_CAP subsets.
    """
    validate_nk(n, k)
    if math.comb(n, k) > BRUTE_FORCE_CAP:
        raise ValueError(
            f"brute force refused: C({n},{k}) exceeds {BRUTE_FORCE_CAP} subsets"
        )
    out: list[GpSet] = []
    for c in itertools.combinations(range(1, n + 1), k):
        # equal consecutive ratios: c[i]/c[i-1] == c[i+1]/c[i], cross-multiplied
        for i in range(1, k - 1):
            if c[i] * c[i] != c[i - 1] * c[i + 1]:
                break
        else:
            out.append(c)
    return out


def gps_to_lines(gps: Iterable[GpSet]) -> str:
    """One progression per line, comma-separated ascending elements."""
    return "\n".join(",".join(map(str, g)) for g in gps)
