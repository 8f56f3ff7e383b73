"""Canonical set partitions of [n] and signed set partitions of <n>,
with exhaustive streaming enumeration used as a brute-force counting oracle.

A signed set partition of <n> = {-n..n} consists of a zero-block (contains
0, closed under negation) plus pairs of blocks P / -P.  We store the
zero-block by its positive support only, and one canonical representative
per pair: elements sorted by absolute value, the minimum-absolute-value
element positive, representatives ordered by that minimum.

Type D imposes that the zero-block has at least two positive elements or
none (|zero_support| != 1).
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from typing import Iterator, Sequence

from bellpart.triangles import Family


class InvalidCoverError(ValueError):
    """Blocks do not partition <n> (missing or duplicated elements)."""


class PairingError(ValueError):
    """Zero-block not negation-closed, or a block's negation is absent."""


@dataclass(frozen=True)
class ClassicalSetPartition:
    n: int
    blocks: tuple[tuple[int, ...], ...]

    def render_text(self) -> str:
        return " | ".join(",".join(str(x) for x in b) for b in self.blocks)

    def render_json(self) -> str:
        return json.dumps(
            {"n": self.n, "blocks": [list(b) for b in self.blocks]},
            separators=(",", ":"),
        )


@dataclass(frozen=True)
class SignedSetPartition:
    n: int
    zero_support: tuple[int, ...]
    pairs: tuple[tuple[int, ...], ...]

    @property
    def num_pairs(self) -> int:
        return len(self.pairs)

    def render_text(self) -> str:
        zero = "0" + "".join(f",±{i}" for i in self.zero_support)
        parts = [zero]
        for rep in self.pairs:
            pos = ",".join(str(x) for x in rep)
            neg = ",".join(str(-x) for x in rep)
            parts.append(f"{pos}/{neg}")
        return " | ".join(parts)

    def render_json(self) -> str:
        return json.dumps(
            {
                "n": self.n,
                "zero_support": list(self.zero_support),
                "pairs": [list(p) for p in self.pairs],
            },
            separators=(",", ":"),
        )


def _rgs_blocks(elements: Sequence[int]) -> Iterator[tuple[tuple[int, ...], ...]]:
    """All unsigned partitions of ``elements`` in restricted-growth-string order.

    Blocks come out ordered by minimum element, elements increasing inside
    each block (``elements`` must be sorted).
    """
    m = len(elements)
    if m == 0:
        yield ()
        return
    a = [0] * m  # a[i] = block index of elements[i]
    b = [0] * m  # b[i] = max(a[0..i]) (valid prefix maxima)
    while True:
        nblocks = b[m - 1] + 1
        blocks: list[list[int]] = [[] for _ in range(nblocks)]
        for i, e in enumerate(elements):
            blocks[a[i]].append(e)
        yield tuple(tuple(blk) for blk in blocks)
        # next RGS in lexicographic order
        i = m - 1
        while i > 0 and a[i] == b[i - 1] + 1:
            i -= 1
        if i == 0:
            return
        a[i] += 1
        b[i] = max(b[i - 1], a[i])
        for j in range(i + 1, m):
            a[j] = 0
            b[j] = b[i]


def enum_classical(n: int) -> Iterator[ClassicalSetPartition]:
    """Each canonical partition of [n] exactly once; A(n) in total."""
    if n < 0:
        raise ValueError("n must be >= 0")
    for blocks in _rgs_blocks(range(1, n + 1)):
        yield ClassicalSetPartition(n, blocks)


def _subsets_lex(n: int) -> Iterator[tuple[int, ...]]:
    """Subsets of [n] as sorted tuples, in lexicographic tuple order."""
    all_subsets = itertools.chain.from_iterable(
        itertools.combinations(range(1, n + 1), r) for r in range(n + 1)
    )
    return iter(sorted(all_subsets))


def enum_signed(n: int, family: Family) -> Iterator[SignedSetPartition]:
    """Each canonical signed partition of <n> exactly once.

    TYPE_B yields B(n) partitions, TYPE_D yields D(n) (zero-blocks with
    exactly one positive element are skipped).  Order: zero supports in
    lexicographic order, unsigned partitions of the rest in RGS order,
    then sign vectors in binary counting order (0 = positive).
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    if family is Family.CLASSICAL:
        raise ValueError("use enum_classical for the classical family")
    type_d = family is Family.TYPE_D
    ground = set(range(1, n + 1))
    for zero_support in _subsets_lex(n):
        if type_d and len(zero_support) == 1:
            continue
        rest = sorted(ground - set(zero_support))
        for blocks in _rgs_blocks(rest):
            # the minimum of each block stays positive; every other
            # element independently takes either sign
            slots = [(bi, j) for bi, blk in enumerate(blocks) for j in range(1, len(blk))]
            for signs in itertools.product((1, -1), repeat=len(slots)):
                pairs = [list(blk) for blk in blocks]
                for (bi, j), s in zip(slots, signs):
                    pairs[bi][j] *= s
                yield SignedSetPartition(
                    n, zero_support, tuple(tuple(p) for p in pairs)
                )


def classify(p: SignedSetPartition) -> Family:
    """TYPE_D iff the zero-block does not have exactly one positive element."""
    return Family.TYPE_D if len(p.zero_support) != 1 else Family.TYPE_B


def canonicalize(n: int, raw_blocks: Sequence[Sequence[int]]) -> SignedSetPartition:
    """Normalize arbitrary block input to the canonical form.

    Raises InvalidCoverError if the blocks are not a partition of <n>,
    PairingError if the zero-block is not negation-closed or some block's
    negation is missing.  Idempotent on canonical input.
    """
    blocks = [tuple(b) for b in raw_blocks]
    seen: set[int] = set()
    for b in blocks:
        for x in b:
            if x < -n or x > n:
                raise InvalidCoverError(f"element {x} outside <{n}>")
            if x in seen:
                raise InvalidCoverError(f"element {x} appears more than once")
            seen.add(x)
    if seen != set(range(-n, n + 1)):
        missing = sorted(set(range(-n, n + 1)) - seen)
        raise InvalidCoverError(f"missing elements: {missing}")

    zero_blocks = [b for b in blocks if 0 in b]
    if len(zero_blocks) != 1:
        raise InvalidCoverError("exactly one block must contain 0")
    zero = set(zero_blocks[0])
    if {-x for x in zero} != zero:
        raise PairingError("zero-block is not closed under negation")
    zero_support = tuple(sorted(x for x in zero if x > 0))

    others = [frozenset(b) for b in blocks if 0 not in b]
    for b in others:
        if any(-x in b for x in b):
            raise PairingError(f"block {sorted(b)} contains both i and -i")
    remaining = set(others)
    reps: list[tuple[int, ...]] = []
    for b in others:
        if b not in remaining:
            continue
        neg = frozenset(-x for x in b)
        if neg not in remaining:
            raise PairingError(f"negation of block {sorted(b)} is missing")
        remaining.discard(b)
        remaining.discard(neg)
        rep = b if min(b, key=abs) > 0 else neg
        reps.append(tuple(sorted(rep, key=abs)))
    reps.sort(key=lambda r: abs(r[0]))
    return SignedSetPartition(n, zero_support, tuple(reps))


def count_by_pairs(n: int, family: Family) -> list[int]:
    """counts[k] = number of enumerated partitions with exactly k pairs
    (blocks, for the classical family); length n + 1."""
    counts = [0] * (n + 1)
    if family is Family.CLASSICAL:
        for p in enum_classical(n):
            counts[len(p.blocks)] += 1
    else:
        for p in enum_signed(n, family):
            counts[p.num_pairs] += 1
    return counts


def count_single_positive_zero_block(n: int) -> int:
    """By enumeration: type-B partitions of <n> whose zero-block has exactly
    one positive element.  Equals B(n) - D(n)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return sum(1 for p in enum_signed(n, Family.TYPE_B) if len(p.zero_support) == 1)
