"""Text syntax for algebra elements, and the canonical rendering back to it.

Tensor expressions (free Baxter algebra and shuffle algebra)::

    x|y + 2*(1|x*y) - 1/2*x^2 + 3*()

``|`` separates tensor slots, ``*`` multiplies generators inside a slot,
``1`` is the empty monomial and ``()`` the empty word.  A leading number
followed by ``*`` is a coefficient.

Cartier symbols: ``x.[y,1*z] - 2*x.[]``.  Hurwitz polynomials: ``e1+2e3`` or
the sequence literal ``0,1,0,2``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .coefficients import Ring
from .shuffle_algebra import ONE, Monomial, PlusElement, TensorElement, format_word

_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[-+*/^|().\[\],]))")


class ParseError(ValueError):
    def __init__(self, message: str, position: int, expected=()):
        self.position = position
        self.expected = tuple(expected)
        detail = f" (expected {', '.join(self.expected)})" if self.expected else ""
        super().__init__(f"{message} at position {position}{detail}")


@dataclass
class _Tok:
    kind: str
    text: str
    pos: int


def _tokenize(src: str) -> list[_Tok]:
    toks = []
    pos = 0
    while True:
        while pos < len(src) and src[pos].isspace():
            pos += 1
        if pos >= len(src):
            break
        m = _TOKEN.match(src, pos)
        if not m or m.end() == pos:
            raise ParseError(f"unexpected character {src[pos]!r}", pos)
        kind = m.lastgroup
        toks.append(_Tok(kind, m.group(kind), m.start(kind)))
        pos = m.end()
    toks.append(_Tok("end", "", len(src)))
    return toks


class _Parser:
    def __init__(self, src: str, ring: Ring, alphabet):
        self.src = src
        self.toks = _tokenize(src)
        self.i = 0
        self.ring = ring
        self.alphabet = None if alphabet is None else frozenset(alphabet)

    @property
    def tok(self) -> _Tok:
        return self.toks[self.i]

    def peek(self, k: int = 1) -> _Tok:
        return self.toks[min(self.i + k, len(self.toks) - 1)]

    def at(self, text: str) -> bool:
        return self.tok.kind == "op" and self.tok.text == text

    def expect(self, text: str):
        if not self.at(text):
            self.fail(f"unexpected {self.tok.text or 'end of input'!r}", [repr(text)])
        self.i += 1

    def fail(self, message: str, expected=()):
        raise ParseError(message, self.tok.pos, expected)

    def done(self):
        if self.tok.kind != "end":
            self.fail(f"unexpected {self.tok.text!r}", ["'+'", "'-'", "end of input"])

    # -- pieces -------------------------------------------------------------

    def number(self):
        num = int(self.tok.text)
        self.i += 1
        if self.at("/"):
            self.i += 1
            if self.tok.kind != "int":
                self.fail("malformed coefficient", ["integer denominator"])
            den = int(self.tok.text)
            if den == 0:
                self.fail("zero denominator")
            self.i += 1
            return Fraction(num, den)
        return num

    def atom(self) -> Monomial:
        tok = self.tok
        if tok.kind == "int" and tok.text == "1":
            self.i += 1
            return ONE
        if tok.kind != "name":
            self.fail(f"unexpected {tok.text or 'end of input'!r}", ["generator", "'1'"])
        if self.alphabet is not None and tok.text not in self.alphabet:
            raise ParseError(f"unknown generator {tok.text!r}", tok.pos, sorted(self.alphabet))
        self.i += 1
        exp = 1
        if self.at("^"):
            self.i += 1
            if self.tok.kind != "int":
                self.fail("malformed exponent", ["integer exponent"])
            exp = int(self.tok.text)
            self.i += 1
        return Monomial.gen(tok.text, exp)

    def monomial(self) -> Monomial:
        u = self.atom()
        while self.at("*"):
            self.i += 1
            u = u * self.atom()
        return u

    def word(self) -> tuple[Monomial, ...]:
        out = [self.monomial()]
        while self.at("|"):
            self.i += 1
            out.append(self.monomial())
        return tuple(out)

    def body(self) -> tuple[Monomial, ...]:
        if self.at("("):
            self.i += 1
            if self.at(")"):
                self.i += 1
                return ()
            w = self.word()
            self.expect(")")
            return w
        return self.word()

    def coefficient_prefix(self):
        """Consume ``NUMBER '*'`` when present; otherwise return 1."""
        tok = self.tok
        if tok.kind != "int":
            return 1
        nxt = self.peek()
        if nxt.kind == "op" and nxt.text == "/":
            c = self.number()
            self.expect("*")
            return c
        if nxt.kind == "op" and nxt.text == "*" and tok.text != "1":
            c = self.number()
            self.expect("*")
            return c
        if tok.text != "1":
            self.fail(f"bare number {tok.text!r}", ["'*' after a coefficient"])
        return 1

    def signed_terms(self, term):
        out = []
        sign = 1
        if self.at("+") or self.at("-"):
            sign = -1 if self.tok.text == "-" else 1
            self.i += 1
        while True:
            c, item = term()
            out.append((item, c * sign))
            if self.at("+") or self.at("-"):
                sign = -1 if self.tok.text == "-" else 1
                self.i += 1
                continue
            break
        self.done()
        return out


def _is_zero_literal(src: str) -> bool:
    return src.strip() in ("0", "")


def parse_tensor(src: str, ring: Ring, alphabet=None, kind: type | None = None) -> TensorElement:
    """Parse a tensor expression into ``kind`` (default :class:`BaxElement`).

    With ``alphabet=None`` any generator name is accepted and the element's
    alphabet is the set of names that occur.
    """
    from .baxter import BaxElement

    kind = kind or BaxElement
    if _is_zero_literal(src):
        return kind(ring, {}, alphabet or ())
    p = _Parser(src, ring, alphabet)

    def term():
        c = p.coefficient_prefix()
        pos = p.tok.pos
        w = p.body()
        if not w and kind is not PlusElement:
            raise ParseError("the empty word () is not an element here", pos)
        return c, w

    terms = p.signed_terms(term)
    if alphabet is None:
        alphabet = frozenset().union(*(u.names for w, _ in terms for u in w))
    out = kind(ring, {}, alphabet)
    for w, c in terms:
        out = out + kind(ring, {w: ring.coerce(c)}, alphabet)
    return out


def parse_cartier(src: str, ring: Ring, alphabet=None):
    from .cartier import CartierElement, CartierSymbol

    if _is_zero_literal(src):
        return CartierElement(ring)
    p = _Parser(src, ring, alphabet)

    def symbol():
        parens = p.at("(")
        if parens:
            p.i += 1
        pos = p.tok.pos
        head = p.monomial()
        p.expect(".")
        p.expect("[")
        bracket = []
        if not p.at("]"):
            bracket.append(p.monomial())
            while p.at(","):
                p.i += 1
                bracket.append(p.monomial())
        p.expect("]")
        if parens:
            p.expect(")")
        try:
            return CartierSymbol(head, tuple(bracket))
        except ValueError as exc:
            raise ParseError(str(exc), pos) from None

    def term():
        c = p.coefficient_prefix()
        return c, symbol()

    out = CartierElement(ring)
    for sym, c in p.signed_terms(term):
        out = out + CartierElement(ring, {sym: ring.coerce(c)})
    return out


def parse_hurwitz(src: str, ring: Ring):
    from .hurwitz import HurwitzPolynomial

    if _is_zero_literal(src):
        return HurwitzPolynomial(ring)
    if "e" not in src:
        try:
            return HurwitzPolynomial(ring, tuple(ring.parse(v) for v in src.split(",")))
        except ValueError as exc:
            raise ParseError(str(exc), 0, ["sequence a0,a1,..."]) from None
    # e<n> tokens: split the letter from its index so the tokenizer sees them apart
    src_t = re.sub(r"e(\d+)", r" e \1 ", src)
    p = _Parser(src_t, ring, None)

    def term():
        c = 1
        if p.tok.kind == "int":
            c = p.number()
            if p.at("*"):
                p.i += 1
        if not (p.tok.kind == "name" and p.tok.text == "e"):
            p.fail(f"unexpected {p.tok.text or 'end of input'!r}", ["e<n>"])
        p.i += 1
        if p.tok.kind != "int":
            p.fail("missing basis index", ["integer"])
        n = int(p.tok.text)
        p.i += 1
        return c, n

    out = HurwitzPolynomial(ring)
    for n, c in p.signed_terms(term):
        out = out + HurwitzPolynomial.basis(ring, n, ring.coerce(c))
    return out


# -- rendering ----------------------------------------------------------------


def _split_sign(ring, c):
    """(negative?, magnitude) for display; only ordered rings show minus signs."""
    kind = getattr(ring, "kind", None)
    if kind in ("int", "rat") and c < 0:
        return True, -c
    return False, c


def _join(parts) -> str:
    if not parts:
        return "0"
    out = []
    for i, (neg, text) in enumerate(parts):
        if i == 0:
            out.append(f"-{text}" if neg else text)
        else:
            out.append(f" - {text}" if neg else f" + {text}")
    return "".join(out)


def _coeff_text(ring, c, body: str, needs_parens: bool) -> tuple[bool, str]:
    neg, mag = _split_sign(ring, c)
    if getattr(ring, "kind", None) == "lambda-poly":
        return False, f"({ring.format(c)})*{body if not needs_parens else '(' + body + ')'}"
    if mag == 1:
        return neg, body
    return neg, f"{ring.format(mag)}*" + (f"({body})" if needs_parens else body)


def format_tensor(x: TensorElement) -> str:
    parts = []
    for word, c in x.items():
        parts.append(_coeff_text(x.ring, c, format_word(word), len(word) > 1))
    return _join(parts)


def format_cartier(a) -> str:
    parts = []
    for sym, c in a.items():
        parts.append(_coeff_text(a.ring, c, str(sym), False))
    return _join(parts)


def format_hurwitz(h) -> str:
    parts = []
    for n, c in enumerate(h.coeffs):
        if h.ring.is_zero(c):
            continue
        neg, mag = _split_sign(h.ring, c)
        parts.append((neg, f"e{n}" if mag == 1 else f"{h.ring.format(mag)}e{n}"))
    return _join(parts)


def tensor_to_json(x: TensorElement) -> list[dict]:
    return [{"word": [str(u) for u in w], "coeff": x.ring.format(c)} for w, c in x.items()]


def cartier_to_json(a) -> list[dict]:
    return [
        {"head": str(s.head), "bracket": [str(u) for u in s.bracket], "coeff": a.ring.format(c)}
        for s, c in a.items()
    ]


def hurwitz_to_json(h) -> list[dict]:
    return [{"n": n, "coeff": h.ring.format(c)} for n, c in enumerate(h.coeffs) if not h.ring.is_zero(c)]
