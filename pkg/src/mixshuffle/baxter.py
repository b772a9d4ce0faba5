"""Free Baxter algebras built from the augmented mixable shuffle product.

Besides the free algebra itself this module defines the small contract that
every Baxter algebra implements here (:class:`BaxterAlgebra`), a couple of
concrete targets, the universal map out of the free algebra, and checkers
for the Baxter identity and the product expansion of iterated operators.
"""

from __future__ import annotations

import itertools
from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import Any, Callable, Mapping, Sequence

from .coefficients import Coeff, Ring, RingMismatchError, Weight
from .combinatorics import enumerate_mixable_pair
from .shuffle_algebra import (
    ONE,
    Monomial,
    TensorElement,
    Word,
    _add_term,
    _check_weight,
    plus_terms_product,
)


class WeightMismatchError(ValueError):
    """A map or check was asked to bridge algebras of different weights."""


class BaxElement(TensorElement):
    """Element of the free Baxter algebra: words of length >= 1, slot 0 in A."""

    def _check_word(self, word):
        if not word:
            raise ValueError("words of the free Baxter algebra are nonempty")
        super()._check_word(word)

    @classmethod
    def one(cls, ring: Ring, alphabet=()) -> "BaxElement":
        return cls(ring, {(ONE,): ring.one}, alphabet)

    @classmethod
    def word(cls, ring: Ring, word, coeff=1, alphabet=None) -> "BaxElement":
        word = tuple(Monomial.parse(u) if isinstance(u, str) else u for u in word)
        if alphabet is None:
            alphabet = set().union(*(u.names for u in word))
        return cls(ring, {word: coeff}, alphabet)


def augmented_product(x: BaxElement, y: BaxElement, w: Weight) -> BaxElement:
    """(x0 (x) xbar) <> (y0 (x) ybar) = x0 y0 (x) (xbar <>+ ybar), extended bilinearly."""
    x._same_space(y)
    _check_weight(x, w)
    terms = plus_terms_product(x.terms, y.terms, x.ring, w.raw, head=ONE)
    return BaxElement._raw(x.ring, terms, x.alphabet)


def baxter_operator(x: BaxElement) -> BaxElement:
    """Prefix every word with the identity monomial."""
    return BaxElement._raw(x.ring, {(ONE,) + w: c for w, c in x.terms.items()}, x.alphabet)


def one_tensor(ring: Ring, length: int, coeff=1) -> BaxElement:
    """``coeff * 1^{(x) length}`` over the empty alphabet."""
    return BaxElement(ring, {(ONE,) * length: coeff})


# -- the Baxter algebra contract -----------------------------------------


class NonUnitalBaxterAlgebra(ABC):
    """A commutative C-algebra with a Baxter operator of weight ``weight``.

    Elements are whatever the implementation uses; all arithmetic goes
    through these methods so generic code never touches the representation.
    """

    ring: Ring
    weight: Weight

    @abstractmethod
    def zero(self) -> Any: ...

    @abstractmethod
    def add(self, a, b) -> Any: ...

    @abstractmethod
    def neg(self, a) -> Any: ...

    @abstractmethod
    def mul(self, a, b) -> Any: ...

    @abstractmethod
    def scale(self, c, a) -> Any:
        """Action of a coefficient ``c`` (raw value or :class:`Coeff`)."""

    @abstractmethod
    def operator(self, a) -> Any: ...

    def equal(self, a, b) -> bool:
        return a == b

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def sum(self, items):
        total = self.zero()
        for a in items:
            total = self.add(total, a)
        return total


class BaxterAlgebra(NonUnitalBaxterAlgebra):
    @abstractmethod
    def one(self) -> Any: ...


class FreeBaxterAlgebra(BaxterAlgebra):
    """The free Baxter algebra on C[X] with the augmented product and P_A."""

    def __init__(self, ring: Ring, alphabet=(), weight: Weight | None = None):
        self.ring = ring
        self.alphabet = frozenset(alphabet)
        self.weight = weight if weight is not None else Weight.of(ring, 0)
        if self.weight.ring != ring:
            raise RingMismatchError(f"weight in {self.weight.ring}, algebra over {ring}")

    def __repr__(self):
        return f"FreeBaxterAlgebra({self.ring}, {sorted(self.alphabet)}, weight={self.weight})"

    def zero(self):
        return BaxElement(self.ring, {}, self.alphabet)

    def one(self):
        return BaxElement.one(self.ring, self.alphabet)

    def generator(self, name: str) -> BaxElement:
        return BaxElement(self.ring, {(Monomial.gen(name),): 1}, self.alphabet)

    def word(self, word, coeff=1) -> BaxElement:
        return BaxElement.word(self.ring, word, coeff, self.alphabet)

    def add(self, a, b):
        return a + b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return augmented_product(a, b, self.weight)

    def scale(self, c, a):
        return a.scale(c)

    def operator(self, a):
        return baxter_operator(a)


class ZeroOperatorAlgebra(BaxterAlgebra):
    """The coefficient ring itself with P = 0, a Baxter algebra of every weight."""

    def __init__(self, ring: Ring, weight: Weight):
        self.ring = ring
        self.weight = weight

    def __repr__(self):
        return f"ZeroOperatorAlgebra({self.ring}, weight={self.weight})"

    def zero(self):
        return Coeff(self.ring, self.ring.zero)

    def one(self):
        return Coeff(self.ring, self.ring.one)

    def add(self, a, b):
        return a + b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def scale(self, c, a):
        return Coeff(self.ring, self.ring.coerce(c)) * a

    def operator(self, a):
        return self.zero()


class TabulatedAlgebra(BaxterAlgebra):
    """A finite free C-module with tabulated structure constants and operator.

    ``table[i][j]`` is the product of basis vectors i and j as a coefficient
    vector, ``unit`` the identity vector, and ``matrix[i]`` the image of basis
    vector i under the operator.  Elements are tuples of raw ring values.
    Nothing here checks the Baxter identity; use :func:`check_baxter_identity`.
    """

    def __init__(self, ring: Ring, weight: Weight, table, unit, matrix, name="tabulated"):
        self.ring = ring
        self.weight = weight
        self.dim = len(unit)
        self.table = [[tuple(ring.coerce(v) for v in cell) for cell in row] for row in table]
        self.unit = tuple(ring.coerce(v) for v in unit)
        self.matrix = [tuple(ring.coerce(v) for v in row) for row in matrix]
        self.name = name

    def __repr__(self):
        return f"TabulatedAlgebra({self.name}, dim={self.dim}, {self.ring}, weight={self.weight})"

    @classmethod
    def partial_sums(cls, ring: Ring, dim: int, weight: Weight) -> "TabulatedAlgebra":
        """C^dim with pointwise product and P(a)_i = lambda * sum_{j<i} a_j."""
        lam = weight.raw
        table = [
            [tuple(ring.one if k == i == j else ring.zero for k in range(dim)) for j in range(dim)]
            for i in range(dim)
        ]
        matrix = [tuple(lam if k > i else ring.zero for k in range(dim)) for i in range(dim)]
        return cls(ring, weight, table, (ring.one,) * dim, matrix, name=f"partial-sums-{dim}")

    def vector(self, values) -> tuple:
        values = tuple(self.ring.coerce(v) for v in values)
        if len(values) != self.dim:
            raise ValueError(f"expected {self.dim} coordinates")
        return values

    def zero(self):
        return (self.ring.zero,) * self.dim

    def one(self):
        return self.unit

    def add(self, a, b):
        return tuple(self.ring.add(p, q) for p, q in zip(a, b))

    def neg(self, a):
        return tuple(self.ring.neg(p) for p in a)

    def scale(self, c, a):
        c = self.ring.coerce(c)
        return tuple(self.ring.mul(c, p) for p in a)

    def mul(self, a, b):
        r = self.ring
        out = [r.zero] * self.dim
        for i, p in enumerate(a):
            if r.is_zero(p):
                continue
            for j, q in enumerate(b):
                if r.is_zero(q):
                    continue
                pq = r.mul(p, q)
                for k, t in enumerate(self.table[i][j]):
                    if not r.is_zero(t):
                        out[k] = r.add(out[k], r.mul(pq, t))
        return tuple(out)

    def operator(self, a):
        r = self.ring
        out = [r.zero] * self.dim
        for i, p in enumerate(a):
            if r.is_zero(p):
                continue
            for k, t in enumerate(self.matrix[i]):
                out[k] = r.add(out[k], r.mul(p, t))
        return tuple(out)


# -- identity checks --------------------------------------------------------


@dataclass
class IdentityCheck:
    """Outcome of comparing two sides of an identity; truthy when they agree."""

    ok: bool
    lhs: Any
    rhs: Any

    def __bool__(self):
        return self.ok


def check_baxter_identity(R: NonUnitalBaxterAlgebra, x, y) -> IdentityCheck:
    """Test P(x)P(y) = P(x P(y)) + P(y P(x)) + lambda P(xy) in ``R``."""
    P = R.operator
    lhs = R.mul(P(x), P(y))
    rhs = R.add(
        R.add(P(R.mul(x, P(y))), P(R.mul(y, P(x)))),
        R.scale(R.weight.raw, P(R.mul(x, y))),
    )
    return IdentityCheck(R.equal(lhs, rhs), lhs, rhs)


def iterated_operator(R: NonUnitalBaxterAlgebra, xs: Sequence, start) -> Any:
    """(P_{x_1} o ... o P_{x_k})(start) where P_x(y) = P(x y)."""
    out = start
    for x in reversed(xs):
        out = R.operator(R.mul(x, out))
    return out


def check_product_expansion(R: BaxterAlgebra, xs: Sequence, ys: Sequence) -> IdentityCheck:
    """Compare a product of two iterated-operator expressions with its mixable shuffle expansion."""
    m, n = len(xs), len(ys)
    if m < 1 or n < 1:
        raise ValueError("need at least one x and one y")
    one = R.one()
    lhs = R.mul(iterated_operator(R, xs, one), iterated_operator(R, ys, one))
    z = list(xs) + list(ys)
    lam = R.weight.raw
    terms = []
    for ms in enumerate_mixable_pair(m, n):
        merged = []
        for slot in ms.slots():
            u = z[slot[0] - 1]
            for i in slot[1:]:
                u = R.mul(u, z[i - 1])
            merged.append(u)
        terms.append(R.scale(R.ring.pow(lam, ms.degree), iterated_operator(R, merged, one)))
    rhs = R.sum(terms)
    return IdentityCheck(R.equal(lhs, rhs), lhs, rhs)


# -- universal property ------------------------------------------------------


def _monomial_image(phi: Mapping[str, Any], R: BaxterAlgebra, u: Monomial, cache: dict):
    if u not in cache:
        out = R.one()
        for name, e in u.powers:
            if name not in phi:
                raise KeyError(f"no image given for generator {name!r}")
            for _ in range(e):
                out = R.mul(out, phi[name])
        cache[u] = out
    return cache[u]


def universal_map(
    phi: Mapping[str, Any], R: BaxterAlgebra, x: BaxElement, weight: Weight | None = None
):
    """Image of ``x`` under the Baxter homomorphism extending ``phi``.

    ``phi`` gives the image of each generator; on a word it acts as
    phi(u0) * (P_{phi(u1)} o ... o P_{phi(uk)})(1).  When ``weight`` is given
    it must equal the weight of ``R``.
    """
    if weight is not None and weight != R.weight:
        raise WeightMismatchError(f"source weight {weight} vs target weight {R.weight}")
    if x.ring != R.ring:
        raise RingMismatchError(f"{x.ring} vs {R.ring}")
    cache: dict = {}
    one = R.one()
    total = R.zero()
    for word, c in x.terms.items():
        images = [_monomial_image(phi, R, u, cache) for u in word]
        value = R.mul(images[0], iterated_operator(R, images[1:], one))
        total = R.add(total, R.scale(c, value))
    return total


def extend(phi: Mapping[str, Any], R: BaxterAlgebra, weight: Weight | None = None) -> Callable:
    """The universal map as a callable."""
    if weight is not None and weight != R.weight:
        raise WeightMismatchError(f"source weight {weight} vs target weight {R.weight}")
    return lambda x: universal_map(phi, R, x)


# -- functoriality and generated subalgebras -----------------------------------


Polynomial = Mapping[Monomial, Any]


def _substitute(u: Monomial, f: Mapping[str, Polynomial], ring: Ring) -> dict:
    out = {ONE: ring.one}
    for name, e in u.powers:
        image = f.get(name, {Monomial.gen(name): ring.one})
        for _ in range(e):
            nxt: dict = {}
            for a, ca in out.items():
                for b, cb in image.items():
                    _add_term(nxt, a * b, ring.mul(ca, ring.coerce(cb)), ring)
            out = nxt
    return out


def functor_map(f: Mapping[str, Polynomial], x: BaxElement, alphabet=None) -> BaxElement:
    """Apply the algebra map C[X] -> C[Y] given by generator images slot by slot.

    Generators missing from ``f`` map to themselves.  ``alphabet`` is the
    target generator set (default: the source alphabet).
    """
    ring = x.ring
    alphabet = frozenset(x.alphabet if alphabet is None else alphabet)
    cache: dict = {}
    terms: dict = {}
    for word, c in x.terms.items():
        slots = []
        for u in word:
            if u not in cache:
                cache[u] = list(_substitute(u, f, ring).items())
            slots.append(cache[u])
        for combo in itertools.product(*slots):
            coeff = c
            for _, cu in combo:
                coeff = ring.mul(coeff, cu)
            _add_term(terms, tuple(u for u, _ in combo), coeff, ring)
    return BaxElement(ring, terms, alphabet)


def generator_span_words(basis: Sequence[Monomial], depth: int, max_degree: int) -> list[Word]:
    """Words (u0, ..., ur), r <= depth, each ui a product of basis monomials of degree <= max_degree.

    These are the additive generators x0 (P_{x1} o ... o P_{xr})(1) of the
    Baxter subalgebra generated by the basis, truncated at ``depth``.
    """
    if depth < 0:
        raise ValueError("depth must be >= 0")
    products = {ONE}
    frontier = {ONE}
    while frontier:
        nxt = set()
        for u in frontier:
            for b in basis:
                v = u * b
                if v.degree <= max_degree and v not in products and not b.is_one:
                    nxt.add(v)
        products |= nxt
        frontier = nxt
    slot_values = sorted(products, key=lambda u: u.key)
    words = []
    for r in range(depth + 1):
        words.extend(itertools.product(slot_values, repeat=r + 1))
    return words
