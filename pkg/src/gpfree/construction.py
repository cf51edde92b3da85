"""Disjoint geometric-progression block families inside {1..n}.

Three families of k-term progressions are packed into {1..n} so that no two
blocks share an element:

* X blocks, ratio 2: the k consecutive power-of-two multiples
  {2^((l-1)k) * a, ..., 2^(lk-1) * a} of an odd a, one block per dyadic
  layer l >= 1 with a * 2^(lk-1) <= n.  Distinct (l, a) give disjoint
  blocks because every integer factors uniquely as odd * power of 2.
* Y blocks, ratio 5/3: {3^(k-1-i) * 5^i * b} for odd b not divisible by 5
  with n < 6^(k-1) * b and 5^(k-1) * b <= n.  Every element is odd and
  larger than n / 2^(k-1), so no Y element can appear in an X block, and
  the congruence on b makes distinct Y blocks disjoint.
* Z blocks, ratio 7/5: {5^(k-1-i) * 7^i * c} for odd c coprime to 15 with
  n < 10^(k-1) * c and 7^(k-1) * c <= n, disjoint from X, Y, and each
  other for the same kind of reasons.

Each block is a k-term geometric progression, so a subset of {1..n} with no
k-term progression must miss at least one element of every block: the block
count is a certified lower bound on how many elements such a subset
excludes.  All window and divisibility conditions are evaluated in exact
integer arithmetic (cross-multiplied); no floats anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .progressions import GpSet, Ratio, validate_nk

BLOCK_RATIOS: dict[str, Ratio] = {
    "X": Ratio(2, 1),
    "Y": Ratio(5, 3),
    "Z": Ratio(7, 5),
}

PARAM_NAMES: dict[str, tuple[str, ...]] = {
    "X": ("l", "a"),
    "Y": ("b",),
    "Z": ("c",),
}


@dataclass(frozen=True)
class Block:
    """One labeled progression block.

    Constructors do not validate; verify_family reports violations as
    content so that deliberately corrupt blocks can be checked.
    """

    label: str
    params: tuple[int, ...]
    elements: GpSet

    def param_items(self) -> tuple[tuple[str, int], ...]:
        return tuple(zip(PARAM_NAMES[self.label], self.params))


@dataclass(frozen=True)
class Family:
    n: int
    k: int
    L: int
    blocks: tuple[Block, ...]


@dataclass(frozen=True)
class FamilyCheck:
    """Outcome of verify_family: success, or the first violation found."""

    ok: bool
    message: str
    offenders: tuple[Block, ...] = ()


def compute_L(n: int, k: int) -> int:
    """Largest L with 2^(Lk-1) <= n, by exact integer comparison."""
    validate_nk(n, k)
    level, power = 0, 1 << (k - 1)
    while power <= n:
        level += 1
        power <<= k
    return level


def x_blocks(n: int, k: int) -> list[Block]:
    """Ratio-2 blocks for every layer l and odd a with a * 2^(lk-1) <= n."""
    validate_nk(n, k)
    blocks: list[Block] = []
    for layer in range(1, compute_L(n, k) + 1):
        top = 1 << (layer * k - 1)
        base = (layer - 1) * k
        for a in range(1, n // top + 1, 2):
            blocks.append(
                Block("X", (layer, a), tuple(a << (base + i) for i in range(k)))
            )
    return blocks


def y_blocks(n: int, k: int) -> list[Block]:
    """Ratio-5/3 blocks for odd b, 5 does not divide b, in the b window."""
    validate_nk(n, k)
    five, six = 5 ** (k - 1), 6 ** (k - 1)
    weights = [3 ** (k - 1 - i) * 5**i for i in range(k)]
    blocks: list[Block] = []
    for b in range(n // six + 1, n // five + 1):
        if b % 2 == 1 and b % 5 != 0:
            blocks.append(Block("Y", (b,), tuple(b * w for w in weights)))
    return blocks


def z_blocks(n: int, k: int) -> list[Block]:
    """Ratio-7/5 blocks for odd c coprime to 15 in the c window."""
    validate_nk(n, k)
    seven, ten = 7 ** (k - 1), 10 ** (k - 1)
    weights = [5 ** (k - 1 - i) * 7**i for i in range(k)]
    blocks: list[Block] = []
    for c in range(n // ten + 1, n // seven + 1):
        if c % 2 == 1 and c % 3 != 0 and c % 5 != 0:
            blocks.append(Block("Z", (c,), tuple(c * w for w in weights)))
    return blocks


def build_family(n: int, k: int) -> Family:
    """All X, Y, Z blocks for (n, k), in (label, params) order."""
    blocks = x_blocks(n, k) + y_blocks(n, k) + z_blocks(n, k)
    return Family(n, k, compute_L(n, k), tuple(blocks))


def _check_block(block: Block, n: int, k: int) -> str | None:
    """Single-block invariants; returns a violation message or None."""
    names = PARAM_NAMES.get(block.label)
    if names is None:
        return f"unknown block label {block.label!r}"
    if len(block.params) != len(names):
        return f"{block.label} block expects params {names}, got {block.params}"
    if len(block.elements) != k:
        return f"{block.label}{block.params} has {len(block.elements)} elements, want {k}"

    if block.label == "X":
        layer, a = block.params
        if layer < 1:
            return f"X layer must be >= 1, got {layer}"
        if a < 1 or a % 2 == 0:
            return f"X multiplier a={a} must be odd and positive"
        if a * (1 << (layer * k - 1)) > n:
            return f"X({layer},{a}) top element exceeds n={n}"
        expected = tuple(a << ((layer - 1) * k + i) for i in range(k))
    elif block.label == "Y":
        (b,) = block.params
        if b < 1 or b % 2 == 0 or b % 5 == 0:
            return f"Y multiplier b={b} must be odd and not divisible by 5"
        if b * 6 ** (k - 1) <= n:
            return f"Y({b}) lies below its window for n={n}"
        if b * 5 ** (k - 1) > n:
            return f"Y({b}) lies above its window for n={n}"
        expected = tuple(b * 3 ** (k - 1 - i) * 5**i for i in range(k))
    else:
        (c,) = block.params
        if c < 1 or c % 2 == 0 or c % 3 == 0 or c % 5 == 0:
            return f"Z multiplier c={c} must be odd and coprime to 15"
        if c * 10 ** (k - 1) <= n:
            return f"Z({c}) lies below its window for n={n}"
        if c * 7 ** (k - 1) > n:
            return f"Z({c}) lies above its window for n={n}"
        expected = tuple(c * 5 ** (k - 1 - i) * 7**i for i in range(k))

    if block.elements != expected:
        return f"{block.label}{block.params} elements {block.elements} != {expected}"

    ratio = BLOCK_RATIOS[block.label]
    for e in block.elements:
        if not 1 <= e <= n:
            return f"{block.label}{block.params} element {e} outside [1, {n}]"
    for lo, hi in zip(block.elements, block.elements[1:]):
        if hi * ratio.q != lo * ratio.p:
            return f"{block.label}{block.params} is not a ratio-{ratio} progression"
    if block.label in ("Y", "Z"):
        half = 1 << (k - 1)
        for e in block.elements:
            if e % 2 == 0:
                return f"{block.label}{block.params} element {e} is even"
            if e * half <= n:
                return (
                    f"{block.label}{block.params} element {e} is not above n/2^(k-1)"
                )
    return None


def verify_family(family: Family) -> FamilyCheck:
    """Element-by-element audit of every family invariant.

    Checks each block (range, exact formula, labeled ratio, parameter
    congruences, oddness and size floor for Y and Z) and then pairwise
    disjointness of all blocks.  Stops at the first violation; violations
    are report content, not exceptions.
    """
    n, k = family.n, family.k
    if family.L != compute_L(n, k):
        return FamilyCheck(False, f"L={family.L}, expected {compute_L(n, k)}")
    owner: dict[int, Block] = {}
    for block in family.blocks:
        message = _check_block(block, n, k)
        if message is not None:
            return FamilyCheck(False, message, (block,))
        for e in block.elements:
            other = owner.get(e)
            if other is not None:
                return FamilyCheck(
                    False, f"element {e} shared by two blocks", (other, block)
                )
            owner[e] = block
    return FamilyCheck(True, "ok")


def _window_count(lo: int, hi: int, mod: int, residues: Sequence[int]) -> int:
    """Integers in (lo, hi] congruent to one of the residues mod `mod`."""
    if hi <= lo:
        return 0

    def upto(x: int) -> int:
        return sum((x - r) // mod + 1 for r in residues if x >= r)

    return upto(hi) - upto(lo)


def count_x_blocks(n: int, k: int) -> int:
    validate_nk(n, k)
    total = 0
    for layer in range(1, compute_L(n, k) + 1):
        total += (n // (1 << (layer * k - 1)) + 1) // 2  # odd a up to the cap
    return total


def count_y_blocks(n: int, k: int) -> int:
    validate_nk(n, k)
    return _window_count(n // 6 ** (k - 1), n // 5 ** (k - 1), 10, (1, 3, 7, 9))


def count_z_blocks(n: int, k: int) -> int:
    validate_nk(n, k)
    return _window_count(
        n // 10 ** (k - 1), n // 7 ** (k - 1), 30, (1, 7, 11, 13, 17, 19, 23, 29)
    )


def exclusion_lower_bound(n: int, k: int) -> int:
    """Number of family blocks: a certified lower bound on n - |A| for any
    A inside {1..n} with no k-term geometric progression.

    Computed by exact counting; equals len(build_family(n, k).blocks),
    which the test suite cross-checks against these closed-form counts.
    """
    return count_x_blocks(n, k) + count_y_blocks(n, k) + count_z_blocks(n, k)


@dataclass(frozen=True)
class SweepReport:
    """Outcome of sweep_verify over every n up to n_max."""

    ok: bool
    n_max: int
    k: int
    blocks_checked: int
    message: str
    failed_n: int | None = None


def sweep_verify(
    n_max: int, k: int, compare_at: Iterable[int] = ()
) -> SweepReport:
    """Verify the family invariants for every n in 1..n_max in one pass.

    build_family(n, k) changes only at block entry and exit thresholds:
    an X(l, a) block is present for all n >= a * 2^(lk-1); a Y(b) block is
    present exactly for 5^(k-1) * b <= n < 6^(k-1) * b; a Z(c) block for
    7^(k-1) * c <= n < 10^(k-1) * c.  Sweeping those events in order and
    keeping an element-to-block map therefore checks, for every single n,
    exactly what verify_family(build_family(n, k)) checks: each block is
    validated against the smallest n at which it appears, the Y/Z size
    floor is rechecked against the largest n at which it is present, and
    any overlap between blocks that coexist at some n surfaces as an
    insertion collision.  Optional compare_at checkpoints additionally
    assert that the sweep state equals build_family(n, k) exactly.
    """
    validate_nk(n_max, k)
    half = 1 << (k - 1)

    EXIT, ENTER = 0, 1  # exits apply before entries at the same threshold
    events: list[tuple[int, int, int, Block]] = []
    seq = 0
    for block in x_blocks(n_max, k):
        events.append((block.elements[-1], ENTER, seq, block))
        seq += 1
    five, six = 5 ** (k - 1), 6 ** (k - 1)
    for b in range(1, n_max // five + 1):
        if b % 2 == 1 and b % 5 != 0:
            block = Block(
                "Y", (b,), tuple(b * 3 ** (k - 1 - i) * 5**i for i in range(k))
            )
            events.append((b * five, ENTER, seq, block))
            events.append((b * six, EXIT, seq, block))
            seq += 1
    seven, ten = 7 ** (k - 1), 10 ** (k - 1)
    for c in range(1, n_max // seven + 1):
        if c % 2 == 1 and c % 3 != 0 and c % 5 != 0:
            block = Block(
                "Z", (c,), tuple(c * 5 ** (k - 1 - i) * 7**i for i in range(k))
            )
            events.append((c * seven, ENTER, seq, block))
            events.append((c * ten, EXIT, seq, block))
            seq += 1

    events.sort(key=lambda ev: (ev[0], ev[1], ev[2]))
    checkpoints = sorted(set(m for m in compare_at if 1 <= m <= n_max))

    owner: dict[int, Block] = {}
    live: set[Block] = set()
    idx = 0
    checked = 0

    def fail(n: int, message: str) -> SweepReport:
        return SweepReport(False, n_max, k, checked, message, failed_n=n)

    for n in checkpoints + [n_max]:
        while idx < len(events) and events[idx][0] <= n:
            event_n, kind, _, block = events[idx]
            idx += 1
            if kind == EXIT:
                last_n = event_n - 1  # final n at which the block was present
                for e in block.elements:
                    if e * half <= last_n:
                        return fail(
                            last_n,
                            f"{block.label}{block.params} fell below the size floor",
                        )
                    del owner[e]
                live.discard(block)
            else:
                message = _check_block(block, event_n, k)
                if message is not None:
                    return fail(event_n, message)
                for e in block.elements:
                    other = owner.get(e)
                    if other is not None:
                        return fail(
                            event_n,
                            f"element {e} shared by {other.label}{other.params} "
                            f"and {block.label}{block.params}",
                        )
                    owner[e] = block
                live.add(block)
                checked += 1
        if n in checkpoints:
            direct = build_family(n, k)
            if set(direct.blocks) != live:
                return fail(n, "sweep state disagrees with build_family")
            report = verify_family(direct)
            if not report.ok:
                return fail(n, report.message)
    # blocks still live at n_max: recheck the Y/Z floor against n_max itself
    for block in sorted(live, key=lambda blk: (blk.label, blk.params)):
        if block.label in ("Y", "Z"):
            for e in block.elements:
                if e * half <= n_max:
                    return fail(
                        n_max, f"{block.label}{block.params} fell below the size floor"
                    )
    return SweepReport(True, n_max, k, checked, "ok")
