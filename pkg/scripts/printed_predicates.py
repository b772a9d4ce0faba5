"""Compare the literal merge-class conditions for triple shuffles with the block-order reading.

The literal conditions, transcribed with 1-based positions k and sigma(k) the
operand index placed at position k (N = m + n + l):

  110: 1 <= k < N-1, sigma(k) <= m < sigma(k+1), and (sigma(k+1) > m+n or m+n >= sigma(k+2))
  101: 1 <= k < N,   sigma(k) <= m, m+n < sigma(k+1)
  011: 1 <  k < N,   sigma(k) <= m+n < sigma(k+1), and (sigma(k-1) > m or m >= sigma(k))
  111: 1 <= k < N-1, sigma(k) <= m < sigma(k+1) <= m+n < sigma(k+2)

For every cell m, n, l <= 3 this prints the number of mixable triple shuffles
under each reading next to the closed-form count, and lists the windows on
which the readings disagree.

    python scripts/printed_predicates.py [--max 3] [--show-windows 5]
"""

import argparse
import itertools
from dataclasses import dataclass

from mixshuffle.combinatorics import (
    CLASS_011,
    CLASS_101,
    CLASS_110,
    CLASS_111,
    MergeEntry,
    count_mixable_triple,
    enumerate_triple_shuffles,
    merge_windows,
)


@dataclass
class Config:
    max_size: int = 3
    show_windows: int = 5


def literal_windows(s):
    m, n, l = s.m, s.n, s.l
    N = m + n + l
    sig = (None,) + tuple(s.sigma)  # 1-based
    out = []
    for k in range(1, N):
        a, b = sig[k], sig[k + 1]
        c = sig[k + 2] if k + 2 <= N else None
        if k < N - 1 and a <= m < b and (b > m + n or (c is not None and m + n >= c)):
            out.append(MergeEntry((k, k + 1), CLASS_110))
        if a <= m and m + n < b:
            out.append(MergeEntry((k, k + 1), CLASS_101))
        if 1 < k and a <= m + n < b and (sig[k - 1] > m or m >= a):
            out.append(MergeEntry((k, k + 1), CLASS_011))
        if k < N - 1 and a <= m < b <= m + n < c:
            out.append(MergeEntry((k, k + 1, k + 2), CLASS_111))
    return sorted(set(out))


def count_families(windows):
    """Number of pairwise non-overlapping subsets of ``windows``."""
    def rec(i, used):
        if i == len(windows):
            return 1
        total = rec(i + 1, used)
        if not used.intersection(windows[i].positions):
            total += rec(i + 1, used | set(windows[i].positions))
        return total

    return rec(0, frozenset())


def main(cfg: Config):
    mismatched = 0
    cells = 0
    print("m n l  closed  block-order  literal")
    for m, n, l in itertools.product(range(cfg.max_size + 1), repeat=3):
        shuffles = enumerate_triple_shuffles(m, n, l)
        block = sum(count_families(merge_windows(s)) for s in shuffles)
        literal = sum(count_families(literal_windows(s)) for s in shuffles)
        closed = int(count_mixable_triple(m, n, l))
        cells += 1
        mismatched += literal != closed
        flag = "" if literal == closed else "   <-- literal differs"
        print(f"{m} {n} {l}  {closed:6d}  {block:11d}  {literal:7d}{flag}")
    print(f"\nliteral reading disagrees with the closed form in {mismatched} of {cells} cells")

    shown = 0
    for m, n, l in itertools.product(range(1, cfg.max_size + 1), repeat=3):
        for s in enumerate_triple_shuffles(m, n, l):
            a, b = set(merge_windows(s)), set(literal_windows(s))
            if a != b and shown < cfg.show_windows:
                shown += 1
                print(f"({m},{n},{l}) sigma={list(s.sigma)}")
                print(f"  block-order only: {sorted((e.positions, e.cls) for e in a - b)}")
                print(f"  literal only:     {sorted((e.positions, e.cls) for e in b - a)}")


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--max", type=int, default=Config.max_size)
    p.add_argument("--show-windows", type=int, default=Config.show_windows)
    args = p.parse_args()
    main(Config(args.max, args.show_windows))
