"""Tables of s(m, n) split by number of merges, and of s(m, n, l) split by degree.

Each entry is the closed form; ``--check`` also enumerates and compares.

    python scripts/count_tables.py --max 6 --check
"""

import argparse
from dataclasses import dataclass

from mixshuffle.combinatorics import (
    count_mixable_pair,
    count_mixable_pair_by_merges,
    count_mixable_triple,
    count_mixable_triple_by_degree,
    enumerate_mixable_pair,
    enumerate_mixable_triple,
)


@dataclass
class Config:
    max_pair: int = 6
    max_triple: int = 3
    check: bool = False


def pair_table(cfg: Config):
    size = cfg.max_pair + 1
    print("s(m, n)")
    print("m\\n " + "".join(f"{n:>8d}" for n in range(size)))
    for m in range(size):
        print(f"{m:3d} " + "".join(f"{int(count_mixable_pair(m, n)):8d}" for n in range(size)))
    print("\nby number of merges, m = n")
    for m in range(size):
        parts = [int(count_mixable_pair_by_merges(m, m, i)) for i in range(m + 1)]
        print(f"{m}: {parts}")
    if cfg.check:
        bad = [(m, n) for m in range(size) for n in range(size)
               if len(enumerate_mixable_pair(m, n)) != count_mixable_pair(m, n)]
        print(f"enumeration check: {'ok' if not bad else bad}")


def triple_table(cfg: Config):
    size = cfg.max_triple + 1
    print("\ns(m, n, l) and its split by degree")
    for m in range(size):
        for n in range(size):
            for l in range(size):
                total = int(count_mixable_triple(m, n, l))
                split = [int(count_mixable_triple_by_degree(m, n, l, k)) for k in range(n + l + 1)]
                line = f"({m},{n},{l}) {total:6d}  {split}"
                if cfg.check:
                    items = enumerate_mixable_triple(m, n, l)
                    got = [sum(1 for ms in items if ms.degree == k) for k in range(n + l + 1)]
                    line += "  ok" if got == split and len(items) == total else f"  MISMATCH {got}"
                print(line)


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--max", type=int, default=Config.max_pair, dest="max_pair")
    p.add_argument("--max-triple", type=int, default=Config.max_triple)
    p.add_argument("--check", action="store_true")
    args = p.parse_args()
    cfg = Config(args.max_pair, args.max_triple, args.check)
    pair_table(cfg)
    triple_table(cfg)
