"""Which sign convention makes the bracket product agree with the weight -1 free algebra?

The product of u0.[a] and v0.[b] sums over triples (k, P, Q) with a sign
(-1)^(k + p + q).  This tries several choices of p and q, builds the product
with each, and counts random pairs on which the embedding into the free
Baxter algebra fails to be multiplicative.

    python scripts/cartier_sign.py --pairs 200
"""

import argparse
import random
from dataclasses import dataclass

from mixshuffle.baxter import augmented_product
from mixshuffle.cartier import CartierElement, CartierSymbol, embed_cartier, enumerate_cartier_triples, phi_kpq
from mixshuffle.coefficients import BIG_INT, Weight
from mixshuffle.sampling import random_cartier

READINGS = {
    "p=|P|, q=|Q|": lambda k, m, n: k + m + n,
    "p=q=0": lambda k, m, n: k,
    "p=|P| only": lambda k, m, n: k + m,
    "no sign": lambda k, m, n: 0,
    "p=q=1": lambda k, m, n: k + 2,
}


@dataclass
class Config:
    pairs: int = 200
    seed: int = 0


def product(a, b, exponent):
    ring = a.ring
    out = CartierElement(ring)
    for s, cs in a.terms.items():
        for t, ct in b.terms.items():
            head = s.head * t.head
            c = ring.mul(cs, ct)
            if not s.bracket or not t.bracket:
                out = out + CartierElement(ring, {CartierSymbol(head, s.bracket or t.bracket): c})
                continue
            m, n = len(s.bracket), len(t.bracket)
            for tr in enumerate_cartier_triples(m, n):
                sign = -1 if exponent(tr.k, m, n) % 2 else 1
                sym = CartierSymbol(head, phi_kpq(tr, s.bracket, t.bracket))
                out = out + CartierElement(ring, {sym: ring.mul(c, sign)})
    return out


def main(cfg: Config):
    w = Weight.of(BIG_INT, -1)
    xy = ("x", "y")
    for name, exponent in READINGS.items():
        rng = random.Random(cfg.seed)
        failures = 0
        for _ in range(cfg.pairs):
            a, b = random_cartier(rng, BIG_INT, xy), random_cartier(rng, BIG_INT, xy)
            if embed_cartier(product(a, b, exponent), xy) != augmented_product(embed_cartier(a, xy), embed_cartier(b, xy), w):
                failures += 1
        print(f"{name:14s} multiplicativity failures: {failures}/{cfg.pairs}")


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--pairs", type=int, default=Config.pairs)
    p.add_argument("--seed", type=int, default=Config.seed)
    args = p.parse_args()
    main(Config(args.pairs, args.seed))
