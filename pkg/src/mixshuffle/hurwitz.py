"""Hurwitz polynomials: finitely supported sequences under binomial convolution.

With the shift operator they form a Baxter algebra of weight zero into which
the free Baxter algebra on the empty alphabet embeds, 1^{(x)(n+1)} -> e_n.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .baxter import BaxElement, BaxterAlgebra, one_tensor
from .coefficients import Coeff, Ring, RingMismatchError, Weight


class UnsupportedWeightError(ValueError):
    """The construction only exists at one particular weight."""


@dataclass(frozen=True)
class HurwitzPolynomial:
    ring: Ring
    coeffs: tuple = ()

    def __post_init__(self):
        vals = [self.ring.coerce(c) for c in self.coeffs]
        while vals and self.ring.is_zero(vals[-1]):
            vals.pop()
        object.__setattr__(self, "coeffs", tuple(vals))

    @classmethod
    def basis(cls, ring: Ring, n: int, coeff=1) -> "HurwitzPolynomial":
        """``coeff * e_n``."""
        return cls(ring, (0,) * n + (coeff,))

    def __getitem__(self, n: int) -> Coeff:
        return Coeff(self.ring, self.coeffs[n] if 0 <= n < len(self.coeffs) else self.ring.zero)

    def __len__(self):
        return len(self.coeffs)

    def _check(self, other):
        if not isinstance(other, HurwitzPolynomial):
            return NotImplemented
        if other.ring != self.ring:
            raise RingMismatchError(f"{self.ring} vs {other.ring}")
        return other

    def __add__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        r = self.ring
        size = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (r.zero,) * (size - len(self.coeffs))
        b = other.coeffs + (r.zero,) * (size - len(other.coeffs))
        return HurwitzPolynomial(r, tuple(r.add(p, q) for p, q in zip(a, b)))

    def __neg__(self):
        return HurwitzPolynomial(self.ring, tuple(self.ring.neg(c) for c in self.coeffs))

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, HurwitzPolynomial):
            return hurwitz_mul(self, other)
        return NotImplemented

    def scale(self, c) -> "HurwitzPolynomial":
        c = self.ring.coerce(c)
        return HurwitzPolynomial(self.ring, tuple(self.ring.mul(c, a) for a in self.coeffs))

    def __str__(self):
        from .parsing import format_hurwitz

        return format_hurwitz(self)


def hurwitz_mul(a: HurwitzPolynomial, b: HurwitzPolynomial) -> HurwitzPolynomial:
    """c_n = sum_k binom(n, k) a_k b_{n-k}."""
    if a._check(b) is NotImplemented:
        raise TypeError("hurwitz_mul needs two Hurwitz polynomials")
    r = a.ring
    if not a.coeffs or not b.coeffs:
        return HurwitzPolynomial(r)
    out = []
    for n in range(len(a.coeffs) + len(b.coeffs) - 1):
        c = r.zero
        for k in range(max(0, n - len(b.coeffs) + 1), min(n, len(a.coeffs) - 1) + 1):
            c = r.add(c, r.mul(r.binomial(n, k), r.mul(a.coeffs[k], b.coeffs[n - k])))
        out.append(c)
    return HurwitzPolynomial(r, tuple(out))


def hurwitz_shift(a: HurwitzPolynomial) -> HurwitzPolynomial:
    """(P a)_0 = 0 and (P a)_{n+1} = a_n."""
    if not a.coeffs:
        return a
    return HurwitzPolynomial(a.ring, (a.ring.zero,) + a.coeffs)


class HurwitzAlgebra(BaxterAlgebra):
    """Hurwitz polynomials with the shift operator, a Baxter algebra of weight 0."""

    def __init__(self, ring: Ring):
        self.ring = ring
        self.weight = Weight.of(ring, 0)

    def __repr__(self):
        return f"HurwitzAlgebra({self.ring})"

    def zero(self):
        return HurwitzPolynomial(self.ring)

    def one(self):
        return HurwitzPolynomial.basis(self.ring, 0)

    def basis(self, n: int, coeff=1):
        return HurwitzPolynomial.basis(self.ring, n, coeff)

    def add(self, a, b):
        return a + b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return hurwitz_mul(a, b)

    def scale(self, c, a):
        return a.scale(c)

    def operator(self, a):
        return hurwitz_shift(a)


def embed_sha_c(x: BaxElement, weight: Weight | None = None) -> HurwitzPolynomial:
    """Send 1^{(x)(n+1)} to e_n, linearly.

    Only defined for the weight-zero free Baxter algebra on the empty
    alphabet; pass the weight to have it checked.
    """
    if weight is not None and weight.raw != weight.ring.zero:
        raise UnsupportedWeightError(f"the Hurwitz embedding needs weight 0, got {weight}")
    if x.alphabet:
        raise ValueError("the Hurwitz embedding is defined on the empty alphabet only")
    r = x.ring
    size = x.max_length()
    coeffs = [r.zero] * size
    for word, c in x.terms.items():
        coeffs[len(word) - 1] = r.add(coeffs[len(word) - 1], c)
    return HurwitzPolynomial(r, tuple(coeffs))


def one_tensor_product(m: int, n: int, w: Weight) -> BaxElement:
    """Closed form of 1^{(x)(m+1)} <> 1^{(x)(n+1)}: sum_k binom(m+n-k, n) binom(n, k) lambda^k 1^{(x)(m+n+1-k)}."""
    r = w.ring
    terms = {}
    for k in range(m + 1):
        c = r.mul(r.mul(r.binomial(m + n - k, n), r.binomial(n, k)), r.pow(w.raw, k))
        if not r.is_zero(c):
            terms[k] = c
    out = BaxElement(r)
    for k, c in terms.items():
        out = out + one_tensor(r, m + n + 1 - k, c)
    return out


def from_sequence(ring: Ring, values: Iterable) -> HurwitzPolynomial:
    return HurwitzPolynomial(ring, tuple(values))
