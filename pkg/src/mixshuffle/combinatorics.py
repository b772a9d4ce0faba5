"""Permutation shuffles, admissible pairs and mixable shuffles.

Permutations are kept in one-line form with 1-based images: ``sigma[k-1]``
is sigma(k), the index of the operand entry placed at output position k.
Merge pairs ``(k, k+1)`` and merge windows use 1-based positions as well.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache

from .coefficients import BIG_INT, Coeff, Ring

Perm = tuple[int, ...]

# merge classes for three blocks, named by which blocks take part
CLASS_110 = "110"
CLASS_101 = "101"
CLASS_011 = "011"
CLASS_111 = "111"


@dataclass(frozen=True, order=True)
class PairShuffle:
    m: int
    n: int
    sigma: Perm

    def __post_init__(self):
        if sorted(self.sigma) != list(range(1, self.m + self.n + 1)):
            raise ValueError(f"{self.sigma} is not a permutation of 1..{self.m + self.n}")
        if not _preserves_blocks(self.sigma, (self.m, self.n)):
            raise ValueError(f"{self.sigma} is not an ({self.m},{self.n})-shuffle")

    def block(self, k: int) -> int:
        """Operand (0 or 1) feeding output position ``k``."""
        return 0 if self.sigma[k - 1] <= self.m else 1


@dataclass(frozen=True, order=True)
class MixablePairShuffle:
    shuffle: PairShuffle
    merges: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "merges", tuple(sorted(tuple(p) for p in self.merges)))
        allowed = admissible_pairs(self.shuffle)
        for pair in self.merges:
            if pair not in allowed:
                raise ValueError(f"{pair} is not admissible for {self.shuffle.sigma}")

    @property
    def m(self) -> int:
        return self.shuffle.m

    @property
    def n(self) -> int:
        return self.shuffle.n

    @property
    def sigma(self) -> Perm:
        return self.shuffle.sigma

    @property
    def degree(self) -> int:
        return len(self.merges)

    def slots(self) -> tuple[tuple[int, ...], ...]:
        """Group the operand indices (1-based, over the concatenation) by output slot."""
        return _slots(self.sigma, {k for k, _ in self.merges})


@dataclass(frozen=True, order=True)
class TripleShuffle:
    m: int
    n: int
    l: int
    sigma: Perm

    def __post_init__(self):
        size = self.m + self.n + self.l
        if sorted(self.sigma) != list(range(1, size + 1)):
            raise ValueError(f"{self.sigma} is not a permutation of 1..{size}")
        if not _preserves_blocks(self.sigma, (self.m, self.n, self.l)):
            raise ValueError(f"{self.sigma} is not an ({self.m},{self.n},{self.l})-shuffle")

    def block(self, k: int) -> int:
        s = self.sigma[k - 1]
        if s <= self.m:
            return 0
        return 1 if s <= self.m + self.n else 2


@dataclass(frozen=True, order=True)
class MergeEntry:
    """A merged window of adjacent positions tagged with its merge class."""

    positions: tuple[int, ...]
    cls: str


@dataclass(frozen=True, order=True)
class MixableTripleShuffle:
    shuffle: TripleShuffle
    merges: tuple[MergeEntry, ...] = ()
    degree: int = field(default=-1, compare=False)

    def __post_init__(self):
        merges = tuple(sorted(self.merges))
        object.__setattr__(self, "merges", merges)
        used: set[int] = set()
        for entry in merges:
            if classify_window(self.shuffle, entry.positions) != entry.cls:
                raise ValueError(f"{entry} violates its class condition for {self.shuffle.sigma}")
            if used.intersection(entry.positions):
                raise ValueError(f"overlapping merge windows in {merges}")
            used.update(entry.positions)
        object.__setattr__(self, "degree", triple_degree(merges))

    @property
    def sigma(self) -> Perm:
        return self.shuffle.sigma

    def slots(self) -> tuple[tuple[int, ...], ...]:
        starts = {e.positions[0]: len(e.positions) for e in self.merges}
        out = []
        k = 1
        size = len(self.sigma)
        while k <= size:
            width = starts.get(k, 1)
            out.append(tuple(self.sigma[k - 1 : k - 1 + width]))
            k += width
        return tuple(out)


def _preserves_blocks(sigma: Perm, sizes: tuple[int, ...]) -> bool:
    bounds = list(itertools.accumulate(sizes))
    last = [0] * len(sizes)
    for pos, s in enumerate(sigma, start=1):
        b = next(i for i, top in enumerate(bounds) if s <= top)
        # entries of one block must appear in increasing order
        if s != (bounds[b - 1] if b else 0) + last[b] + 1:
            return False
        last[b] += 1
    return True


def _slots(sigma: Perm, merge_starts: set[int]) -> tuple[tuple[int, ...], ...]:
    out: list[tuple[int, ...]] = []
    for k, s in enumerate(sigma, start=1):
        if k - 1 in merge_starts:
            out[-1] = out[-1] + (s,)
        else:
            out.append((s,))
    return tuple(out)


# -- (m, n)-shuffles ------------------------------------------------------


def _interleavings(sizes: tuple[int, ...]) -> list[Perm]:
    """All one-line forms preserving the order inside each block, sorted."""
    offsets = [0, *itertools.accumulate(sizes)][:-1]

    def rec(used: tuple[int, ...]):
        if used == sizes:
            yield ()
            return
        for b, size in enumerate(sizes):
            if used[b] < size:
                nxt = used[:b] + (used[b] + 1,) + used[b + 1 :]
                for rest in rec(nxt):
                    yield (offsets[b] + used[b] + 1, *rest)

    return sorted(rec(tuple(0 for _ in sizes)))


def enumerate_pair_shuffles(m: int, n: int) -> list[PairShuffle]:
    """All (m, n)-shuffles, sorted by one-line form."""
    return [PairShuffle(m, n, s) for s in _interleavings((m, n))]


def admissible_pairs(s: PairShuffle) -> frozenset[tuple[int, int]]:
    """Adjacent positions ``(k, k+1)`` with sigma(k) <= m < sigma(k+1)."""
    sig, m = s.sigma, s.m
    return frozenset((k, k + 1) for k in range(1, len(sig)) if sig[k - 1] <= m < sig[k])


def _subsets(items):
    items = sorted(items)
    for r in range(len(items) + 1):
        yield from itertools.combinations(items, r)


@lru_cache(maxsize=None)
def _mixable_pair_cached(m: int, n: int) -> tuple[MixablePairShuffle, ...]:
    out = []
    for s in enumerate_pair_shuffles(m, n):
        for merges in _subsets(admissible_pairs(s)):
            out.append(MixablePairShuffle(s, merges))
    return tuple(sorted(out))


def enumerate_mixable_pair(m: int, n: int) -> list[MixablePairShuffle]:
    """All mixable (m, n)-shuffles (sigma, T); sorted by sigma, then by merge list."""
    return list(_mixable_pair_cached(m, n))


def count_mixable_pair_by_merges(m: int, n: int, i: int, ring: Ring = BIG_INT) -> Coeff:
    """Number of mixable (m, n)-shuffles with exactly ``i`` merges."""
    return Coeff(ring, ring.mul(ring.binomial(m + n - i, n), ring.binomial(n, i)))


def count_mixable_pair(m: int, n: int, ring: Ring = BIG_INT) -> Coeff:
    """s(m, n), with s(m, 0) = s(0, n) = 1."""
    total = ring.zero
    for i in range(n + 1):
        total = ring.add(total, count_mixable_pair_by_merges(m, n, i, ring).value)
    return Coeff(ring, total)


def partition_dec(m: int, n: int):
    """Split the mixable (m, n)-shuffles by what happens at the first output slot.

    Returns ``(first_from_x, first_from_y, first_merged)``: (1,2) not merged
    and sigma^-1(1) = 1; (1,2) not merged and sigma^-1(m+1) = 1; (1,2) merged.
    """
    if m < 1 or n < 1:
        raise ValueError("partition_dec needs m, n >= 1")
    s10, s01, s11 = [], [], []
    for ms in enumerate_mixable_pair(m, n):
        if (1, 2) in ms.merges:
            s11.append(ms)
        elif ms.sigma[0] == 1:
            s10.append(ms)
        elif ms.sigma[0] == m + 1:
            s01.append(ms)
    return s10, s01, s11


# -- (m, n, l)-shuffles -----------------------------------------------------


def enumerate_triple_shuffles(m: int, n: int, l: int) -> list[TripleShuffle]:
    return [TripleShuffle(m, n, l, s) for s in _interleavings((m, n, l))]


def classify_window(s: TripleShuffle, positions: tuple[int, ...]) -> str | None:
    """Merge class of a window of adjacent positions, or None if it may not merge.

    A pair merges when it joins an entry of an earlier block to an entry of a
    later block (in that order); a triple merges when it runs through all
    three blocks in order.
    """
    size = len(s.sigma)
    if not positions or positions[0] < 1 or positions[-1] > size:
        return None
    if list(positions) != list(range(positions[0], positions[0] + len(positions))):
        return None
    blocks = [s.block(k) for k in positions]
    if len(positions) == 2:
        return {(0, 1): CLASS_110, (0, 2): CLASS_101, (1, 2): CLASS_011}.get(tuple(blocks))
    if len(positions) == 3 and blocks == [0, 1, 2]:
        return CLASS_111
    return None


def merge_windows(s: TripleShuffle) -> list[MergeEntry]:
    """Every individually valid merge window of ``s``."""
    size = len(s.sigma)
    out = []
    for width in (2, 3):
        for k in range(1, size - width + 2):
            pos = tuple(range(k, k + width))
            cls = classify_window(s, pos)
            if cls is not None:
                out.append(MergeEntry(pos, cls))
    return sorted(out)


def triple_degree(merges) -> int:
    """Pair merges count once, triple merges twice."""
    return sum(2 if e.cls == CLASS_111 else 1 for e in merges)


def _disjoint_families(windows: list[MergeEntry]):
    windows = sorted(windows, key=lambda e: e.positions)

    def rec(i: int, used: frozenset[int]):
        if i == len(windows):
            yield ()
            return
        yield from rec(i + 1, used)
        w = windows[i]
        if not used.intersection(w.positions):
            for rest in rec(i + 1, used.union(w.positions)):
                yield (w, *rest)

    yield from rec(0, frozenset())


@lru_cache(maxsize=None)
def _mixable_triple_cached(m: int, n: int, l: int) -> tuple[MixableTripleShuffle, ...]:
    out = []
    for s in enumerate_triple_shuffles(m, n, l):
        for family in _disjoint_families(merge_windows(s)):
            out.append(MixableTripleShuffle(s, family))
    return tuple(sorted(out))


def enumerate_mixable_triple(m: int, n: int, l: int) -> list[MixableTripleShuffle]:
    """All mixable (m, n, l)-shuffles with non-overlapping merge windows."""
    return list(_mixable_triple_cached(m, n, l))


def count_mixable_triple_by_degree(m: int, n: int, l: int, k: int, ring: Ring = BIG_INT) -> Coeff:
    total = ring.zero
    for i in range(n + 1):
        term = ring.binomial(m + n + l - k, l)
        if k - i < 0:
            continue
        term = ring.mul(term, ring.binomial(l, k - i))
        term = ring.mul(term, ring.binomial(m + n - i, n))
        term = ring.mul(term, ring.binomial(n, i))
        total = ring.add(total, term)
    return Coeff(ring, total)


def count_mixable_triple(m: int, n: int, l: int, ring: Ring = BIG_INT) -> Coeff:
    """s(m, n, l) by the double-sum closed form (out-of-range binomials vanish)."""
    total = ring.zero
    for k in range(n + l + 1):
        total = ring.add(total, count_mixable_triple_by_degree(m, n, l, k, ring).value)
    return Coeff(ring, total)


def triple_from_slots(m: int, n: int, l: int, slots) -> MixableTripleShuffle:
    """Rebuild (sigma, T) from output slots listing operand indices.

    Indices inside a slot are placed in block order, so a merged slot becomes
    a window whose blocks increase left to right.
    """
    sigma: list[int] = []
    merges = []
    for slot in slots:
        slot = sorted(slot)
        start = len(sigma) + 1
        sigma.extend(slot)
        if len(slot) > 1:
            merges.append((tuple(range(start, start + len(slot)))))
    shuffle = TripleShuffle(m, n, l, tuple(sigma))
    entries = []
    for pos in merges:
        cls = classify_window(shuffle, pos)
        if cls is None:
            raise ValueError(f"slots {slots} do not describe a mixable shuffle")
        entries.append(MergeEntry(pos, cls))
    return MixableTripleShuffle(shuffle, tuple(entries))


def compose_pair_shuffles(m: int, n: int, l: int) -> dict[MixableTripleShuffle, int]:
    """Mixable (m, n, l)-shuffles obtained by mixing blocks 1 and 2 first, then block 3.

    Maps each result to ``|T_inner| + |T_outer|``.  Raises if two compositions
    produce the same result, which would contradict disjointness.
    """
    out: dict[MixableTripleShuffle, int] = {}
    for inner in enumerate_mixable_pair(m, n):
        inner_slots = inner.slots()
        third = tuple(range(m + n + 1, m + n + l + 1))
        for outer in enumerate_mixable_pair(len(inner_slots), l):
            operands = list(inner_slots) + [(t,) for t in third]
            slots = [tuple(x for i in slot for x in operands[i - 1]) for slot in outer.slots()]
            result = triple_from_slots(m, n, l, slots)
            if result in out:
                raise AssertionError(f"composition hit {result} twice")
            out[result] = inner.degree + outer.degree
    return out
