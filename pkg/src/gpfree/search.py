"""Maximum progression-free subsets of {1..n}, exact and heuristic.

A subset of {1..n} is free of k-term geometric progressions exactly when
its complement meets every edge of the progression hypergraph, so the
maximum free size is n minus a minimum hitting set.  The exact solver is a
deterministic branch and bound on that hitting set:

* branching: take the unhit edge with the smallest maximum element and try
  its elements in ascending order, forbidding each tried element in the
  later branches so the subtrees partition the search space;
* upper bound: a greedy hitting set seeds the incumbent;
* lower bound: a greedily extracted set of pairwise-disjoint unhit edges,
  seeded by the disjoint X/Y/Z block family, since disjoint edges need one
  excluded element each.

Budgets make behavior reproducible: the node limit is primary and exact,
the wall-clock limit secondary.  Exhausting either returns the best
incumbent with optimal=False.

Finite-n results bound the asymptotic question from one side only; nothing
here extrapolates a density limit from a finite prefix.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

from .bounds import improved_bound
from .construction import build_family, exclusion_lower_bound
from .progressions import GpSet, enumerate_gps, find_gp, validate_nk

DEFAULT_NODE_BUDGET = 5_000_000


@dataclass(frozen=True)
class Hypergraph:
    """Progression hypergraph: one k-element edge per progression."""

    n: int
    k: int
    edges: tuple[GpSet, ...]


def gp_hypergraph(n: int, k: int) -> Hypergraph:
    """Edges sorted by (maximum element, lexicographic order)."""
    edges = sorted(enumerate_gps(n, k), key=lambda e: (e[-1], e))
    return Hypergraph(n, k, tuple(edges))


@dataclass(frozen=True)
class SearchResult:
    n: int
    k: int
    method: str
    max_size: int
    witness: tuple[int, ...]
    optimal: bool
    nodes_explored: int
    elapsed: float


class _HittingSetSolver:
    """Deterministic DFS branch and bound for minimum hitting set."""

    def __init__(
        self,
        edges: tuple[GpSet, ...],
        seeds: Iterable[GpSet],
        node_budget: int,
        deadline: float | None,
    ):
        self.edges = edges
        self.node_budget = node_budget
        self.deadline = deadline
        self.nodes = 0
        self.exhausted = False

        self.elem_edges: dict[int, list[int]] = {}
        for i, edge in enumerate(edges):
            for v in edge:
                self.elem_edges.setdefault(v, []).append(i)

        index = {edge: i for i, edge in enumerate(edges)}
        seed_idx = [index[s] for s in seeds if s in index]
        seen = set(seed_idx)
        # matching candidates: family blocks first, then canonical order
        self.matching_seq = seed_idx + [i for i in range(len(edges)) if i not in seen]

        self.hit_count = [0] * len(edges)
        self.chosen: set[int] = set()
        self.best = self._greedy()

    def _greedy(self) -> set[int]:
        """Greedy hitting set: most unhit edges covered, ties to the
        smallest element."""
        chosen: set[int] = set()
        unhit = set(range(len(self.edges)))
        while unhit:
            counts: dict[int, int] = {}
            for i in unhit:
                for v in self.edges[i]:
                    counts[v] = counts.get(v, 0) + 1
            pick = max(counts.items(), key=lambda kv: (kv[1], -kv[0]))[0]
            chosen.add(pick)
            unhit.difference_update(self.elem_edges[pick])
        return chosen

    def _choose(self, v: int) -> None:
        self.chosen.add(v)
        for i in self.elem_edges[v]:
            self.hit_count[i] += 1

    def _unchoose(self, v: int) -> None:
        self.chosen.remove(v)
        for i in self.elem_edges[v]:
            self.hit_count[i] -= 1

    def matching_bound(self) -> int:
        """Pairwise-disjoint unhit edges: each needs a distinct exclusion."""
        used: set[int] = set()
        count = 0
        hit_count = self.hit_count
        for i in self.matching_seq:
            if hit_count[i] == 0:
                edge = self.edges[i]
                if used.isdisjoint(edge):
                    count += 1
                    used.update(edge)
        return count

    def solve(self) -> tuple[set[int], bool, int]:
        if self.edges:
            if self.matching_bound() < len(self.best):
                self._dfs(set())
        return self.best, not self.exhausted, self.nodes

    def _dfs(self, forbidden: set[int]) -> None:
        self.nodes += 1
        if self.nodes > self.node_budget or (
            self.deadline is not None
            and self.nodes % 256 == 0
            and time.monotonic() > self.deadline
        ):
            self.exhausted = True
            return
        if len(self.chosen) >= len(self.best):
            return  # cannot strictly improve the incumbent

        # unit propagation: edges with a single permitted element force it
        forced: list[int] = []
        infeasible = False
        changed = True
        while changed and not infeasible:
            changed = False
            for i, edge in enumerate(self.edges):
                if self.hit_count[i] == 0:
                    allowed = [v for v in edge if v not in forbidden]
                    if not allowed:
                        infeasible = True
                        break
                    if len(allowed) == 1:
                        self._choose(allowed[0])
                        forced.append(allowed[0])
                        changed = True

        if not infeasible:
            branch_edge = None
            for i in range(len(self.edges)):
                if self.hit_count[i] == 0:
                    branch_edge = i
                    break
            if branch_edge is None:
                if len(self.chosen) < len(self.best):
                    self.best = set(self.chosen)
            elif len(self.chosen) + self.matching_bound() < len(self.best):
                allowed = [v for v in self.edges[branch_edge] if v not in forbidden]
                banned: list[int] = []
                for v in allowed:
                    self._choose(v)
                    self._dfs(forbidden)
                    self._unchoose(v)
                    if self.exhausted:
                        break
                    forbidden.add(v)
                    banned.append(v)
                forbidden.difference_update(banned)

        for v in reversed(forced):
            self._unchoose(v)


def _components(edges: tuple[GpSet, ...]) -> list[list[int]]:
    """Edge indices grouped by connected component, both in canonical order.

    Minimum hitting sets add up over components, so each one can be solved
    independently with exact bounds instead of interleaving in one tree.
    """
    parent = list(range(len(edges)))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    owner: dict[int, int] = {}
    for i, edge in enumerate(edges):
        for v in edge:
            j = owner.setdefault(v, i)
            if j != i:
                parent[find(i)] = find(j)
    groups: dict[int, list[int]] = {}
    for i in range(len(edges)):
        groups.setdefault(find(i), []).append(i)
    return [groups[root] for root in sorted(groups, key=lambda r: groups[r][0])]


def _min_hitting_set(
    edges: tuple[GpSet, ...],
    seeds: Sequence[GpSet],
    node_budget: int,
    deadline: float | None,
) -> tuple[set[int], bool, int]:
    """Minimum hitting set by per-component branch and bound.

    The remaining node budget carries across components; exhausting it
    degrades the affected components to their greedy incumbents and the
    overall result to optimal=False.
    """
    chosen: set[int] = set()
    optimal = True
    nodes_used = 0
    seed_list = list(seeds)
    for comp in _components(edges):
        comp_edges = tuple(edges[i] for i in comp)
        members = set(comp_edges)
        comp_seeds = [s for s in seed_list if s in members]
        solver = _HittingSetSolver(
            comp_edges, comp_seeds, node_budget - nodes_used, deadline
        )
        best, opt, nodes = solver.solve()
        chosen.update(best)
        nodes_used += nodes
        optimal = optimal and opt
    return chosen, optimal, nodes_used


def max_gp_free_exact(
    n: int,
    k: int,
    *,
    node_budget: int = DEFAULT_NODE_BUDGET,
    timeout: float | None = None,
) -> SearchResult:
    """Maximum k-progression-free subset of {1..n} by branch and bound.

    optimal=True means the search completed within budget, so max_size is
    exactly n minus the minimum hitting set size; otherwise max_size comes
    from the best incumbent and is only a lower bound on the maximum.
    """
    start = time.monotonic()
    deadline = None if timeout is None else start + timeout
    hg = gp_hypergraph(n, k)
    seeds = [block.elements for block in build_family(n, k).blocks]
    hitting, optimal, nodes = _min_hitting_set(hg.edges, seeds, node_budget, deadline)
    witness = tuple(x for x in range(1, n + 1) if x not in hitting)
    if find_gp(witness, k) is not None:
        raise RuntimeError("internal error: witness contains a progression")
    return SearchResult(
        n, k, "exact", len(witness), witness, optimal, nodes, time.monotonic() - start
    )


def _completes_gp(x: int, members: set[int], k: int) -> bool:
    """Would adding x close a progression whose maximum element is x?"""
    p = 2
    while p ** (k - 1) <= x:
        p_top = p ** (k - 1)
        if x % p_top == 0:
            m = x // p_top
            for q in range(1, p):
                if gcd(p, q) == 1 and all(
                    m * q ** (k - 1 - i) * p**i in members for i in range(k - 1)
                ):
                    return True
        p += 1
    return False


def greedy_gp_free(n: int, k: int) -> SearchResult:
    """Ascending scan keeping x whenever the set stays progression-free.

    Only progressions whose maximum is x can close when x arrives, since
    every larger element is still undecided; the incremental check covers
    exactly those.  Deterministic; optimal is claimed only in the trivial
    complete-set case.
    """
    validate_nk(n, k)
    start = time.monotonic()
    members: set[int] = set()
    kept: list[int] = []
    for x in range(1, n + 1):
        if not _completes_gp(x, members, k):
            members.add(x)
            kept.append(x)
    if find_gp(members, k) is not None:
        raise RuntimeError("internal error: greedy set contains a progression")
    return SearchResult(
        n,
        k,
        "greedy",
        len(kept),
        tuple(kept),
        len(kept) == n,
        0,
        time.monotonic() - start,
    )


def squarefree_set(n: int) -> set[int]:
    """Squarefree integers in [1, n], by sieving out multiples of squares."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    flags = bytearray(b"\x01") * (n + 1)
    flags[0] = 0
    d = 2
    while d * d <= n:
        square = d * d
        flags[square :: square] = b"\x00" * ((n - square) // square + 1)
        d += 1
    return {i for i in range(1, n + 1) if flags[i]}


@dataclass(frozen=True)
class DensityReport:
    n: int
    k: int
    method: str
    size: int
    density: Fraction
    bound: Fraction  # improved upper density bound for this k
    excluded: int
    certified_exclusions: int  # block-family lower bound on exclusions
    optimal: bool


def density_report(
    n: int,
    k: int,
    method: str = "greedy",
    *,
    node_budget: int = DEFAULT_NODE_BUDGET,
    timeout: float | None = None,
) -> DensityReport:
    """Size and density of a progression-free set against the certified
    bounds.  For the exact method the certificate inequality
    n - size >= exclusion_lower_bound(n, k) is enforced."""
    validate_nk(n, k)
    if method == "exact":
        result = max_gp_free_exact(n, k, node_budget=node_budget, timeout=timeout)
        size, optimal = result.max_size, result.optimal
    elif method == "greedy":
        result = greedy_gp_free(n, k)
        size, optimal = result.max_size, result.optimal
    elif method == "squarefree":
        size, optimal = len(squarefree_set(n)), False
    else:
        raise ValueError(f"unknown method {method!r}")
    certified = exclusion_lower_bound(n, k)
    density = Fraction(size, n)
    if density > 1:
        raise RuntimeError("internal error: density above 1")
    if method == "exact" and n - size < certified:
        raise RuntimeError("internal error: certified exclusion bound violated")
    return DensityReport(
        n, k, method, size, density, improved_bound(k), n - size, certified, optimal
    )
