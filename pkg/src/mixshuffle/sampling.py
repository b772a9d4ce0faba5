"""Seeded random elements for the identity suites and the CLI checks."""

from __future__ import annotations

import random

from .baxter import BaxElement, TabulatedAlgebra
from .cartier import CartierElement, CartierSymbol
from .coefficients import Ring
from .hurwitz import HurwitzPolynomial
from .shuffle_algebra import Monomial, PlusElement


def random_coeff(rng: random.Random, ring: Ring, bound: int = 3, nonzero: bool = True):
    while True:
        c = ring.coerce(rng.randint(-bound, bound))
        if not (nonzero and ring.is_zero(c)):
            return c


def random_monomial(rng: random.Random, alphabet, max_degree: int = 2, allow_one: bool = True) -> Monomial:
    alphabet = sorted(alphabet)
    lo = 0 if allow_one or not alphabet else 1
    deg = rng.randint(lo, max_degree) if alphabet else 0
    return Monomial(tuple((rng.choice(alphabet), 1) for _ in range(deg)))


def random_word(rng: random.Random, alphabet, min_len: int, max_len: int, max_degree: int = 2):
    return tuple(random_monomial(rng, alphabet, max_degree) for _ in range(rng.randint(min_len, max_len)))


def _random_tensor(cls, rng, ring, alphabet, min_len, max_len, max_terms, bound, max_degree):
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        terms[random_word(rng, alphabet, min_len, max_len, max_degree)] = random_coeff(rng, ring, bound)
    return cls(ring, terms, alphabet)


def random_plus(rng, ring, alphabet, max_len=3, max_terms=2, bound=3, max_degree=2) -> PlusElement:
    return _random_tensor(PlusElement, rng, ring, alphabet, 0, max_len, max_terms, bound, max_degree)


def random_bax(rng, ring, alphabet, max_len=3, max_terms=2, bound=3, max_degree=2) -> BaxElement:
    return _random_tensor(BaxElement, rng, ring, alphabet, 1, max_len, max_terms, bound, max_degree)


def random_hurwitz(rng, ring, max_len=5, bound=3) -> HurwitzPolynomial:
    return HurwitzPolynomial(ring, tuple(rng.randint(-bound, bound) for _ in range(rng.randint(0, max_len))))


def random_vector(rng, algebra: TabulatedAlgebra, bound=3) -> tuple:
    return algebra.vector(rng.randint(-bound, bound) for _ in range(algebra.dim))


def random_cartier_symbol(rng, alphabet, max_bracket=3, max_degree=2) -> CartierSymbol:
    size = rng.randint(0, max_bracket)
    if size == 0:
        return CartierSymbol(random_monomial(rng, alphabet, max_degree, allow_one=False))
    bracket = [random_monomial(rng, alphabet, max_degree) for _ in range(size - 1)]
    bracket.append(random_monomial(rng, alphabet, max_degree, allow_one=False))
    return CartierSymbol(random_monomial(rng, alphabet, max_degree), tuple(bracket))


def random_cartier(rng, ring, alphabet, max_bracket=3, max_terms=2, bound=3) -> CartierElement:
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        terms[random_cartier_symbol(rng, alphabet, max_bracket)] = random_coeff(rng, ring, bound)
    return CartierElement(ring, terms)
