import itertools
import random

import pytest

from mixshuffle.baxter import (
    FreeBaxterAlgebra,
    TabulatedAlgebra,
    WeightMismatchError,
    augmented_product,
    baxter_operator,
    check_baxter_identity,
)
from mixshuffle.cartier import (
    CartierAlgebra,
    CartierElement,
    CartierSymbol,
    CartierTriple,
    cartier_morphism,
    cartier_operator,
    cartier_product,
    cartier_triple_of,
    embed_cartier,
    enumerate_cartier_triples,
    factor_through,
    weight_minus_one,
)
from mixshuffle.coefficients import BIG_INT, Weight, integers_mod
from mixshuffle.combinatorics import count_mixable_pair, enumerate_mixable_pair
from mixshuffle.parsing import parse_cartier, parse_tensor
from mixshuffle.sampling import random_cartier, random_vector
from mixshuffle.shuffle_algebra import ONE, Monomial

XY = ("x", "y")
MINUS_ONE = weight_minus_one(BIG_INT)


def cart(src, ring=BIG_INT):
    return parse_cartier(src, ring)


def test_symbol_validation():
    with pytest.raises(ValueError):
        CartierSymbol(ONE)
    with pytest.raises(ValueError):
        CartierSymbol(Monomial.gen("x"), (Monomial.gen("y"), ONE))
    s = CartierSymbol.parse("1", "1", "x")
    assert str(s) == "1.[1,x]"


def test_triples_one_one():
    assert enumerate_cartier_triples(1, 1) == sorted([
        CartierTriple(2, (1,), (2,)),
        CartierTriple(2, (2,), (1,)),
        CartierTriple(1, (1,), (1,)),
    ])
    assert len(enumerate_cartier_triples(2, 1)) == 5
    with pytest.raises(ValueError):
        CartierTriple(2, (1,), (1,))


def test_triple_counts():
    for m in range(1, 6):
        for n in range(1, 6):
            assert len(enumerate_cartier_triples(m, n)) == count_mixable_pair(m, n)


def test_bijection_with_mixable_shuffles():
    for m in range(1, 5):
        for n in range(1, 5):
            images = [cartier_triple_of(ms) for ms in enumerate_mixable_pair(m, n)]
            assert len(set(images)) == len(images)
            assert set(images) == set(enumerate_cartier_triples(m, n))
            for ms in enumerate_mixable_pair(m, n):
                t = cartier_triple_of(ms)
                assert len(set(t.P) & set(t.Q)) == ms.degree


def test_product_examples():
    assert cartier_product(cart("u.[]"), cart("v.[]")) == cart("u*v.[]")
    assert cartier_product(cart("1.[u]"), cart("1.[v]")) == cart("1.[u,v] + 1.[v,u] - 1.[u*v]")
    assert cartier_product(cart("u.[]"), cart("v.[w]")) == cart("u*v.[w]")
    assert cartier_product(cart("u.[a,b]"), cart("v.[]")) == cart("u*v.[a,b]")


def test_operator():
    assert cartier_operator(cart("u.[]")) == cart("1.[u]")
    assert cartier_operator(cart("0")) == cart("0")
    assert cartier_operator(cart("x.[y]")) == cart("1.[x,y]")


def test_embedding_examples():
    assert embed_cartier(cart("x.[]")) == parse_tensor("x", BIG_INT)
    assert embed_cartier(cart("1.[x,y]")) == parse_tensor("1|x|y", BIG_INT)


def _monomials(alphabet, max_degree):
    out = [ONE]
    for d in range(1, max_degree + 1):
        for combo in itertools.combinations_with_replacement(sorted(alphabet), d):
            u = ONE
            for g in combo:
                u = u * Monomial.gen(g)
            out.append(u)
    return out


def test_embedding_injective_on_symbols():
    monos = _monomials(XY, 2)
    seen = {}
    for length in range(4):
        for head in monos:
            for bracket in itertools.product(monos, repeat=length):
                try:
                    s = CartierSymbol(head, bracket)
                except ValueError:
                    continue
                img = embed_cartier(CartierElement(BIG_INT, {s: 1}), XY)
                (word,) = img.terms
                assert word not in seen
                seen[word] = s
    assert len(seen) > 1000


@pytest.mark.parametrize("ring", [BIG_INT, integers_mod(7)], ids=str)
def test_embedding_is_morphism(ring):
    rng = random.Random(2)
    w = Weight.of(ring, -1)
    for _ in range(60):
        a, b = random_cartier(rng, ring, XY), random_cartier(rng, ring, XY)
        fa, fb = embed_cartier(a, XY), embed_cartier(b, XY)
        assert embed_cartier(cartier_product(a, b), XY) == augmented_product(fa, fb, w)
        assert embed_cartier(cartier_operator(a), XY) == baxter_operator(fa)
        assert embed_cartier(a + b, XY) == fa + fb


def test_product_laws_and_baxter_identity():
    rng = random.Random(4)
    C = CartierAlgebra(BIG_INT)
    for _ in range(30):
        a, b, c = (random_cartier(rng, BIG_INT, XY, max_bracket=2) for _ in range(3))
        assert cartier_product(a, b) == cartier_product(b, a)
        assert cartier_product(cartier_product(a, b), c) == cartier_product(a, cartier_product(b, c))
        assert check_baxter_identity(C, a, b)


def test_factor_through_free_algebra():
    R = FreeBaxterAlgebra(BIG_INT, XY, MINUS_ONE)
    phi = {g: R.generator(g) for g in XY}
    lift = factor_through(phi, R)
    rng = random.Random(8)
    for _ in range(30):
        a = random_cartier(rng, BIG_INT, XY)
        assert lift(embed_cartier(a, XY)) == embed_cartier(a, XY)


def test_factor_through_tabulated():
    R = TabulatedAlgebra.partial_sums(BIG_INT, 4, MINUS_ONE)
    rng = random.Random(9)
    for _ in range(5):
        phi = {g: random_vector(rng, R) for g in XY}
        direct = cartier_morphism(phi, R)
        lift = factor_through(phi, R)
        for _ in range(20):
            a, b = random_cartier(rng, BIG_INT, XY), random_cartier(rng, BIG_INT, XY)
            assert lift(embed_cartier(a, XY)) == direct(a)
            assert direct(cartier_product(a, b)) == R.mul(direct(a), direct(b))
            assert direct(cartier_operator(a)) == R.operator(direct(a))
        for g in XY:
            assert direct(cart(f"{g}.[]")) == phi[g]
            assert lift(embed_cartier(cart(f"{g}.[]"), XY)) == phi[g]


def test_weight_must_be_minus_one():
    R = TabulatedAlgebra.partial_sums(BIG_INT, 3, Weight.of(BIG_INT, 1))
    with pytest.raises(WeightMismatchError):
        factor_through({}, R)
    with pytest.raises(WeightMismatchError):
        cartier_morphism({}, R)
