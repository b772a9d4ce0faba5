"""Cartier's free Baxter algebra without identity, at weight -1.

Basis symbols are ``u0.[u1, ..., um]`` with monomials ui; ``u0.[]`` needs
u0 != 1 and a nonempty bracket needs um != 1.  :func:`embed_cartier` sends
them to the corresponding words of the free Baxter algebra.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Any, Callable, Mapping, Sequence

from .baxter import (
    BaxElement,
    BaxterAlgebra,
    NonUnitalBaxterAlgebra,
    WeightMismatchError,
    universal_map,
)
from .coefficients import Coeff, Ring, RingMismatchError, Weight
from .combinatorics import MixablePairShuffle
from .shuffle_algebra import ONE, Monomial, _add_term, word_key


@dataclass(frozen=True)
class CartierSymbol:
    head: Monomial
    bracket: tuple[Monomial, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "bracket", tuple(self.bracket))
        if not self.bracket and self.head.is_one:
            raise ValueError("1.[] is not a basis symbol")
        if self.bracket and self.bracket[-1].is_one:
            raise ValueError("the last bracket entry must not be 1")

    @classmethod
    def parse(cls, head: str, *bracket: str) -> "CartierSymbol":
        return cls(Monomial.parse(head), tuple(Monomial.parse(b) for b in bracket))

    @property
    def names(self) -> frozenset[str]:
        return self.head.names.union(*(u.names for u in self.bracket))

    def word(self):
        return (self.head, *self.bracket)

    def __str__(self):
        return f"{self.head}.[{','.join(str(u) for u in self.bracket)}]"


def _symbol_key(s: CartierSymbol):
    return word_key(s.word())


class CartierElement:
    """A C-linear combination of Cartier symbols."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: Ring, terms: Mapping = ()):
        self.ring = ring
        self.terms: dict = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for sym, c in items:
            if not isinstance(sym, CartierSymbol):
                raise TypeError(f"expected CartierSymbol, got {sym!r}")
            _add_term(self.terms, sym, ring.coerce(c), ring)

    @classmethod
    def symbol(cls, ring: Ring, sym: CartierSymbol, coeff=1) -> "CartierElement":
        return cls(ring, {sym: coeff})

    def items(self):
        return sorted(self.terms.items(), key=lambda t: _symbol_key(t[0]))

    def _check(self, other):
        if not isinstance(other, CartierElement):
            raise TypeError(f"expected CartierElement, got {type(other).__name__}")
        if other.ring != self.ring:
            raise RingMismatchError(f"{self.ring} vs {other.ring}")

    def __eq__(self, other):
        if not isinstance(other, CartierElement):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __add__(self, other):
        self._check(other)
        terms = dict(self.terms)
        for s, c in other.terms.items():
            _add_term(terms, s, c, self.ring)
        out = CartierElement(self.ring)
        out.terms = terms
        return out

    def __neg__(self):
        out = CartierElement(self.ring)
        out.terms = {s: self.ring.neg(c) for s, c in self.terms.items()}
        return out

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "CartierElement":
        c = self.ring.coerce(c)
        out = CartierElement(self.ring)
        for s, a in self.terms.items():
            _add_term(out.terms, s, self.ring.mul(c, a), self.ring)
        return out

    def __str__(self):
        from .parsing import format_cartier

        return format_cartier(self)

    def __repr__(self):
        return f"CartierElement({self})"


@dataclass(frozen=True, order=True)
class CartierTriple:
    """``P`` and ``Q`` cover {1..k}; positions in both are merge slots."""

    k: int
    P: tuple[int, ...]
    Q: tuple[int, ...]

    def __post_init__(self):
        full = set(range(1, self.k + 1))
        if set(self.P) | set(self.Q) != full:
            raise ValueError(f"{self.P} and {self.Q} do not cover 1..{self.k}")
        if list(self.P) != sorted(set(self.P)) or list(self.Q) != sorted(set(self.Q)):
            raise ValueError("P and Q must be strictly increasing")


def enumerate_cartier_triples(m: int, n: int) -> list[CartierTriple]:
    """All (k, P, Q) with P u Q = {1..k}, |P| = m, |Q| = n; sorted by (k, P, Q)."""
    if m < 1 or n < 1:
        raise ValueError("need m, n >= 1")
    out = []
    for k in range(max(m, n), m + n + 1):
        positions = range(1, k + 1)
        for P in itertools.combinations(positions, m):
            rest = [j for j in positions if j not in P]
            if len(rest) > n:
                continue
            for shared in itertools.combinations(P, n - len(rest)):
                out.append(CartierTriple(k, P, tuple(sorted(rest + list(shared)))))
    return sorted(out)


def cartier_triple_of(ms: MixablePairShuffle) -> CartierTriple:
    """The triple recording which output slots of ``ms`` take an x-entry and which a y-entry."""
    slots = ms.slots()
    P = tuple(j for j, slot in enumerate(slots, 1) if any(i <= ms.m for i in slot))
    Q = tuple(j for j, slot in enumerate(slots, 1) if any(i > ms.m for i in slot))
    return CartierTriple(len(slots), P, Q)


def phi_kpq(t: CartierTriple, a: Sequence[Monomial], b: Sequence[Monomial]) -> tuple[Monomial, ...]:
    """Fill slot j with a_alpha, b_beta or a_alpha * b_beta according to P and Q."""
    pi = {j: i for i, j in enumerate(t.P)}
    qi = {j: i for i, j in enumerate(t.Q)}
    out = []
    for j in range(1, t.k + 1):
        if j in pi and j in qi:
            out.append(a[pi[j]] * b[qi[j]])
        elif j in pi:
            out.append(a[pi[j]])
        else:
            out.append(b[qi[j]])
    return tuple(out)


def _symbol_product(s: CartierSymbol, t: CartierSymbol, ring: Ring):
    head = s.head * t.head
    if not s.bracket or not t.bracket:
        yield CartierSymbol(head, s.bracket or t.bracket), ring.one
        return
    m, n = len(s.bracket), len(t.bracket)
    for tr in enumerate_cartier_triples(m, n):
        sign = ring.one if (tr.k + m + n) % 2 == 0 else ring.neg(ring.one)
        yield CartierSymbol(head, phi_kpq(tr, s.bracket, t.bracket)), sign


def cartier_product(a: CartierElement, b: CartierElement) -> CartierElement:
    a._check(b)
    r = a.ring
    out = CartierElement(r)
    for s, cs in a.terms.items():
        for t, ct in b.terms.items():
            c = r.mul(cs, ct)
            for sym, sign in _symbol_product(s, t, r):
                _add_term(out.terms, sym, r.mul(c, sign), r)
    return out


def cartier_operator(a: CartierElement) -> CartierElement:
    """u0.[u1, ..., um] -> 1.[u0, u1, ..., um]."""
    out = CartierElement(a.ring)
    out.terms = {CartierSymbol(ONE, (s.head, *s.bracket)): c for s, c in a.terms.items()}
    return out


def embed_cartier(a: CartierElement, alphabet=None) -> BaxElement:
    """u0.[] -> (u0) and u0.[u1, ..., um] -> (u0|u1|...|um)."""
    if alphabet is None:
        alphabet = frozenset().union(*(s.names for s in a.terms))
    return BaxElement(a.ring, {s.word(): c for s, c in a.terms.items()}, alphabet)


class CartierAlgebra(NonUnitalBaxterAlgebra):
    """Cartier symbols with the product and operator above; weight -1, no identity."""

    def __init__(self, ring: Ring):
        self.ring = ring
        self.weight = Weight.of(ring, -1)

    def zero(self):
        return CartierElement(self.ring)

    def add(self, a, b):
        return a + b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return cartier_product(a, b)

    def scale(self, c, a):
        return a.scale(c)

    def operator(self, a):
        return cartier_operator(a)


def _require_weight_minus_one(R: BaxterAlgebra):
    if R.weight.raw != R.ring.coerce(-1):
        raise WeightMismatchError(f"Cartier's algebra has weight -1, target has {R.weight}")


def cartier_morphism(phi: Mapping[str, Any], R: BaxterAlgebra) -> Callable[[CartierElement], Any]:
    """The identity-free morphism out of Cartier's algebra fixed by x.[] -> phi[x].

    Evaluated through the decomposition
    u0.[u1, ..., um] = (u0.[]) * P(u1.[u2, ..., um]) for u0 != 1.
    """
    _require_weight_minus_one(R)

    def head(u: Monomial):
        out = None
        for name, e in u.powers:
            for _ in range(e):
                out = phi[name] if out is None else R.mul(out, phi[name])
        return out

    def symbol(u0: Monomial, bracket: tuple[Monomial, ...]):
        if not bracket:
            return head(u0)
        # bracket[-1] != 1, so the recursion never reaches a bare 1.[]
        inner = R.operator(symbol(bracket[0], bracket[1:]))
        return inner if u0.is_one else R.mul(head(u0), inner)

    def evaluate(a: CartierElement):
        total = R.zero()
        for s, c in a.terms.items():
            total = R.add(total, R.scale(c, symbol(s.head, s.bracket)))
        return total

    return evaluate


def factor_through(phi: Mapping[str, Any], R: BaxterAlgebra) -> Callable[[BaxElement], Any]:
    """The unital Baxter map out of the free algebra whose composite with the embedding is ``phi``.

    ``phi`` gives the images of the generators, i.e. the values on ``x.[]``.
    """
    _require_weight_minus_one(R)
    return lambda x: universal_map(phi, R, x)


def weight_minus_one(ring: Ring) -> Weight:
    return Weight(Coeff(ring, -1))
