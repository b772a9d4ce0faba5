"""Run the Baxter identity and the product expansion over every bundled target and several weights.

Prints one line per (target, ring, weight) with the number of samples and the
wall time; exits 1 on the first failure after printing the witness.

    python scripts/identity_sweep.py --samples 300 --seed 1
"""

import argparse
import random
import sys
import time
from dataclasses import dataclass, field

from mixshuffle.baxter import FreeBaxterAlgebra, TabulatedAlgebra, ZeroOperatorAlgebra
from mixshuffle.baxter import check_baxter_identity, check_product_expansion
from mixshuffle.cartier import CartierAlgebra
from mixshuffle.coefficients import BIG_INT, Coeff, Weight, integers_mod
from mixshuffle.hurwitz import HurwitzAlgebra
from mixshuffle import sampling


@dataclass
class Config:
    samples: int = 200
    seed: int = 0
    weights: list = field(default_factory=lambda: [0, 1, -1, 3])
    expansion_max: int = 3


def targets(ring, lam):
    w = Weight.of(ring, lam)
    abc = ("x", "y", "z")
    yield "free", FreeBaxterAlgebra(ring, abc, w), lambda rng: sampling.random_bax(rng, ring, abc)
    yield "zero", ZeroOperatorAlgebra(ring, w), lambda rng: Coeff(ring, sampling.random_coeff(rng, ring))
    S = TabulatedAlgebra.partial_sums(ring, 5, w)
    yield "partial-sums", S, lambda rng: sampling.random_vector(rng, S)
    if lam == 0:
        yield "hurwitz", HurwitzAlgebra(ring), lambda rng: sampling.random_hurwitz(rng, ring)
    if lam == -1:
        yield "cartier", CartierAlgebra(ring), lambda rng: sampling.random_cartier(rng, ring, ("x", "y"))


def main(cfg: Config) -> int:
    for ring in (BIG_INT, integers_mod(7)):
        for lam in cfg.weights:
            for name, R, sample in targets(ring, lam):
                rng = random.Random(f"{cfg.seed}-{name}-{ring}-{lam}")
                start = time.perf_counter()
                for _ in range(cfg.samples):
                    res = check_baxter_identity(R, sample(rng), sample(rng))
                    if not res:
                        print(f"FAIL {name} {ring} lambda={lam}\n  lhs={res.lhs}\n  rhs={res.rhs}")
                        return 1
                expansions = 0
                if name not in ("free", "cartier"):
                    for m in range(1, cfg.expansion_max + 1):
                        for n in range(1, cfg.expansion_max + 1):
                            xs = [sample(rng) for _ in range(m)]
                            ys = [sample(rng) for _ in range(n)]
                            if not check_product_expansion(R, xs, ys):
                                print(f"FAIL expansion {name} {ring} lambda={lam} m={m} n={n}")
                                return 1
                            expansions += 1
                took = time.perf_counter() - start
                print(f"{name:13s} {str(ring):6s} lambda={lam:>2}  identity x{cfg.samples}  expansion x{expansions}  {took:.2f}s")
    return 0


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--samples", type=int, default=Config.samples)
    p.add_argument("--seed", type=int, default=Config.seed)
    args = p.parse_args()
    sys.exit(main(Config(samples=args.samples, seed=args.seed)))
