"""The mixable shuffle algebra on A = C[X].

Monomials of the free commutative monoid on X form the C-basis of A, so a
pure tensor of monomials is a basis vector of A^{(x)k}.  Elements are sparse
maps from such words (tuples of :class:`Monomial`) to raw ring values.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from operator import itemgetter
from typing import Iterable, Mapping

from .coefficients import Coeff, LambdaPolynomials, Ring, RingMismatchError, Weight
from .combinatorics import MixablePairShuffle, enumerate_mixable_pair


class AlphabetMismatchError(ValueError):
    """Operands are declared over different generator sets."""


@dataclass(frozen=True)
class Monomial:
    """A monomial in commuting generators, stored as sorted ``(name, exponent)`` pairs."""

    powers: tuple[tuple[str, int], ...] = ()

    def __post_init__(self):
        merged: dict[str, int] = {}
        for name, e in self.powers:
            if e < 0:
                raise ValueError(f"negative exponent for {name}")
            merged[name] = merged.get(name, 0) + e
        object.__setattr__(self, "powers", tuple(sorted((k, v) for k, v in merged.items() if v)))
        # words are dict keys in every product; hashing dominates without this
        object.__setattr__(self, "_hash", hash(self.powers))

    def __hash__(self):
        return self._hash

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, Monomial):
            return NotImplemented
        return self._hash == other._hash and self.powers == other.powers

    @classmethod
    def gen(cls, name: str, exponent: int = 1) -> "Monomial":
        return cls(((name, exponent),))

    @classmethod
    def from_dict(cls, exponents: Mapping[str, int]) -> "Monomial":
        return cls(tuple(exponents.items()))

    @classmethod
    def parse(cls, text: str) -> "Monomial":
        text = text.strip()
        out = []
        for atom in text.split("*"):
            atom = atom.strip()
            if atom == "1":
                continue
            m = re.fullmatch(r"([A-Za-z_][A-Za-z0-9_]*)(?:\^(\d+))?", atom)
            if not m:
                raise ValueError(f"malformed monomial {text!r}")
            out.append((m.group(1), int(m.group(2) or 1)))
        return cls(tuple(out))

    def __mul__(self, other: "Monomial") -> "Monomial":
        if not other.powers:
            return self
        if not self.powers:
            return other
        return _mono_mul(self, other)

    @property
    def is_one(self) -> bool:
        return not self.powers

    @property
    def degree(self) -> int:
        return sum(e for _, e in self.powers)

    @property
    def names(self) -> frozenset[str]:
        return frozenset(k for k, _ in self.powers)

    @property
    def key(self) -> tuple[str, ...]:
        """Sort key: the generator names with multiplicity, in sorted order."""
        return tuple(name for name, e in self.powers for _ in range(e))

    def __lt__(self, other: "Monomial"):
        return self.key < other.key

    def __str__(self):
        if not self.powers:
            return "1"
        return "*".join(name if e == 1 else f"{name}^{e}" for name, e in self.powers)

    def __repr__(self):
        return f"Monomial({str(self)!r})"


ONE = Monomial()


@lru_cache(maxsize=65536)
def _mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return Monomial(a.powers + b.powers)


Word = tuple[Monomial, ...]


def word_key(word: Word):
    """Canonical term order: longer words first, then slot-by-slot monomial order."""
    return (-len(word), tuple(u.key for u in word))


def format_word(word: Word) -> str:
    return "()" if not word else "|".join(str(u) for u in word)


def _add_term(terms: dict, word, c, ring):
    if word in terms:
        s = ring.add(terms[word], c)
        if ring.is_zero(s):
            del terms[word]
        else:
            terms[word] = s
    elif not ring.is_zero(c):
        terms[word] = c


class TensorElement:
    """A finite C-linear combination of words, with no zero coefficients stored."""

    __slots__ = ("ring", "alphabet", "terms")

    def __init__(self, ring: Ring, terms: Mapping | Iterable = (), alphabet: Iterable[str] = ()):
        self.ring = ring
        self.alphabet = frozenset(alphabet)
        self.terms: dict = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for word, c in items:
            word = tuple(word)
            self._check_word(word)
            _add_term(self.terms, word, ring.coerce(c), ring)

    def _check_word(self, word):
        for u in word:
            if not isinstance(u, Monomial):
                raise TypeError(f"word entries must be Monomials, got {u!r}")
            stray = u.names - self.alphabet
            if stray:
                raise ValueError(f"generators {sorted(stray)} not in alphabet {sorted(self.alphabet)}")

    @classmethod
    def _raw(cls, ring, terms: dict, alphabet):
        """Wrap an already-canonical term map without re-validating it."""
        out = cls.__new__(cls)
        out.ring = ring
        out.alphabet = alphabet
        out.terms = terms
        return out

    def _same_space(self, other: "TensorElement"):
        if type(other) is not type(self):
            raise TypeError(f"cannot combine {type(self).__name__} with {type(other).__name__}")
        if other.ring != self.ring:
            raise RingMismatchError(f"{self.ring} vs {other.ring}")
        if other.alphabet != self.alphabet:
            raise AlphabetMismatchError(f"{sorted(self.alphabet)} vs {sorted(other.alphabet)}")

    def items(self):
        """Terms in canonical order as ``(word, raw coefficient)`` pairs."""
        return sorted(self.terms.items(), key=lambda t: word_key(t[0]))

    def coefficient(self, word) -> Coeff:
        return Coeff(self.ring, self.terms.get(tuple(word), self.ring.zero))

    def __len__(self):
        return len(self.terms)

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, int) and other == 0:
            return not self.terms
        if type(other) is not type(self):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        return hash((type(self), frozenset(self.terms.items())))

    def __add__(self, other):
        if isinstance(other, int) and other == 0:
            return self
        self._same_space(other)
        terms = dict(self.terms)
        for w, c in other.terms.items():
            _add_term(terms, w, c, self.ring)
        return self._raw(self.ring, terms, self.alphabet)

    __radd__ = __add__

    def __neg__(self):
        return self._raw(self.ring, {w: self.ring.neg(c) for w, c in self.terms.items()}, self.alphabet)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "TensorElement":
        c = self.ring.coerce(c)
        terms = {}
        for w, a in self.terms.items():
            _add_term(terms, w, self.ring.mul(c, a), self.ring)
        return self._raw(self.ring, terms, self.alphabet)

    def __rmul__(self, c):
        if isinstance(c, (int, Fraction, Coeff)):
            return self.scale(c)
        return NotImplemented

    def max_length(self) -> int:
        return max((len(w) for w in self.terms), default=0)

    def __str__(self):
        from .parsing import format_tensor

        return format_tensor(self)

    def __repr__(self):
        return f"{type(self).__name__}({self})"


class PlusElement(TensorElement):
    """Element of the direct sum of all tensor powers of A, including A^{(x)0} = C."""

    @classmethod
    def one(cls, ring: Ring, alphabet=()) -> "PlusElement":
        return cls(ring, {(): ring.one}, alphabet)

    @classmethod
    def word(cls, ring: Ring, word, coeff=1, alphabet=None) -> "PlusElement":
        word = tuple(Monomial.parse(u) if isinstance(u, str) else u for u in word)
        if alphabet is None:
            alphabet = set().union(*(u.names for u in word)) if word else ()
        return cls(ring, {word: coeff}, alphabet)


def _picker(indices: tuple[int, ...]):
    """Callable returning the tuple of ``seq[i]`` for ``i`` in ``indices``."""
    if len(indices) == 1:
        (i,) = indices
        return lambda seq: (seq[i],)
    if not indices:
        return lambda seq: ()
    return itemgetter(*indices)


@lru_cache(maxsize=None)
def _recipes(m: int, n: int):
    """Compiled mixable (m, n)-shuffles.

    Each entry is ``(merges, pick, pick_head, degree)``: ``merges`` lists the
    0-based index pairs of ``x + y`` that multiply, and the pickers read the
    output word from ``x + y + merged`` (``pick_head`` also puts the element
    after those first, which is where the product code stores the head).
    """
    out = []
    size = m + n
    for ms in enumerate_mixable_pair(m, n):
        merges = []
        order = []
        for slot in ms.slots():
            if len(slot) == 1:
                order.append(slot[0] - 1)
            else:
                order.append(size + len(merges))
                merges.append((slot[0] - 1, slot[1] - 1))
        head_at = size + len(merges)
        out.append((tuple(merges), _picker(tuple(order)), _picker((head_at, *order)), ms.degree))
    return tuple(out)


def plus_terms_product(xterms: dict, yterms: dict, ring, lam, head: Monomial | None = None) -> dict:
    """Expand the weight-``lam`` mixable shuffle product of two raw term maps.

    With ``head`` given, the words on both sides carry an A-factor in slot 0
    that is multiplied separately (the augmented product).
    """
    out: dict = {}
    powers = {}
    add, mul, is_zero = ring.add, ring.mul, ring.is_zero
    for xw, xc in xterms.items():
        for yw, yc in yterms.items():
            c = mul(xc, yc)
            if head is not None:
                tail = (xw[0] * yw[0],)
                xw_, yw_ = xw[1:], yw[1:]
            else:
                tail = ()
                xw_, yw_ = xw, yw
            concat = xw_ + yw_
            for merges, pick, pick_head, deg in _recipes(len(xw_), len(yw_)):
                if deg not in powers:
                    powers[deg] = ring.pow(lam, deg)
                coeff = mul(c, powers[deg])
                if is_zero(coeff):
                    continue
                seq = concat + tuple(concat[i] * concat[j] for i, j in merges) + tail
                word = pick_head(seq) if tail else pick(seq)
                if word in out:
                    total = add(out[word], coeff)
                    if is_zero(total):
                        del out[word]
                    else:
                        out[word] = total
                else:
                    out[word] = coeff
    return out


def _check_weight(x: TensorElement, w: Weight):
    if w.ring != x.ring:
        raise RingMismatchError(f"weight in {w.ring}, elements in {x.ring}")


def mixable_product_plus(x: PlusElement, y: PlusElement, w: Weight) -> PlusElement:
    """Weight-lambda mixable shuffle product of two elements of the shuffle algebra."""
    x._same_space(y)
    _check_weight(x, w)
    terms = plus_terms_product(x.terms, y.terms, x.ring, w.raw)
    return PlusElement._raw(x.ring, terms, x.alphabet)


def apply_mixable_to_tensor(x: Word, y: Word, ms: MixablePairShuffle) -> Word:
    """The pure tensor obtained from ``x (x) y`` by the mixable shuffle ``ms``."""
    x, y = tuple(x), tuple(y)
    if (len(x), len(y)) != (ms.m, ms.n):
        raise ValueError(f"word lengths {(len(x), len(y))} do not fit a ({ms.m},{ms.n})-shuffle")
    concat = x + y
    out = []
    for slot in ms.slots():
        u = ONE
        for i in slot:
            u = u * concat[i - 1]
        out.append(u)
    return tuple(out)


def symbolic_weight(base: Ring) -> Weight:
    """A weight whose value is the indeterminate lambda over ``base``."""
    lp = LambdaPolynomials(base)
    return Weight(Coeff(lp, lp.gen))


def lift_to_symbolic(x: TensorElement) -> TensorElement:
    """Reinterpret ``x`` with coefficients in ``ring[lambda]``."""
    lp = LambdaPolynomials(x.ring)
    return type(x)._raw(lp, {w: lp.coerce(c) for w, c in x.terms.items()}, x.alphabet)
