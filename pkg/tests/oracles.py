"""Independent oracles for the test suite.

Everything here is built from first principles (subset enumeration, sieves,
the definitional ratio test) so it shares no code path with the library
implementations it validates.  brute_force_gps is the one library entry
point used, and it is itself a plain combinations filter.
"""

from __future__ import annotations

import itertools

from gpfree import brute_force_gps


def edge_masks(n: int, k: int) -> list[int]:
    """Progression edges as bitmasks over {1..n} (bit v-1 is element v)."""
    return [sum(1 << (v - 1) for v in e) for e in brute_force_gps(n, k)]


def max_gp_free_by_removals(n: int, k: int) -> int:
    """Exhaustive oracle: smallest removal set hitting every progression.

    Enumerates removal subsets in increasing size, so the first size whose
    complement is progression-free is provably minimal.
    """
    edges = edge_masks(n, k)
    for r in range(n + 1):
        for combo in itertools.combinations(range(n), r):
            mask = 0
            for i in combo:
                mask |= 1 << i
            if all(e & mask for e in edges):
                return n - r
    raise AssertionError("unreachable: removing everything hits all edges")


def max_gp_free_by_all_subsets(n: int, k: int) -> int:
    """Literal oracle: scan all 2^n subsets, keep the largest GP-free one."""
    edges = edge_masks(n, k)
    best = 0
    for s in range(1 << n):
        if all(e & s != e for e in edges):
            best = max(best, s.bit_count())
    return best


def is_gp_free_by_edges(members: set[int], n: int, k: int) -> bool:
    """Subset test against the definitional edge list."""
    mask = sum(1 << (v - 1) for v in members)
    return all(e & mask != e for e in edge_masks(n, k))


def mobius_squarefree_count(n: int) -> int:
    """Inclusion-exclusion count of squarefree integers in [1, n]."""

    def mobius(d: int) -> int:
        out, x, p = 1, d, 2
        while p * p <= x:
            if x % p == 0:
                x //= p
                if x % p == 0:
                    return 0
                out = -out
            p += 1
        if x > 1:
            out = -out
        return out

    total, d = 0, 1
    while d * d <= n:
        total += mobius(d) * (n // (d * d))
        d += 1
    return total
