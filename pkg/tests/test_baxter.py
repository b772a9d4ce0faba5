import itertools
import random

import pytest

from mixshuffle.baxter import (
    BaxElement,
    BaxterAlgebra,
    FreeBaxterAlgebra,
    TabulatedAlgebra,
    WeightMismatchError,
    ZeroOperatorAlgebra,
    augmented_product,
    baxter_operator,
    check_baxter_identity,
    check_product_expansion,
    extend,
    functor_map,
    generator_span_words,
    iterated_operator,
    one_tensor,
    universal_map,
)
from mixshuffle.coefficients import BIG_INT, RATIONAL, Coeff, Weight, integers_mod
from mixshuffle.hurwitz import HurwitzAlgebra
from mixshuffle.parsing import parse_tensor
from mixshuffle.sampling import random_bax, random_coeff, random_hurwitz, random_vector
from mixshuffle.shuffle_algebra import ONE, Monomial

ABC = ("x", "y", "z")


def bax(src, ring=BIG_INT, alphabet=ABC):
    return parse_tensor(src, ring, alphabet)


class IdentityOperator(BaxterAlgebra):
    """Integers with P = id; not a Baxter algebra at weight 0."""

    ring = BIG_INT
    weight = Weight.of(BIG_INT, 0)

    def zero(self):
        return 0

    def one(self):
        return 1

    def add(self, a, b):
        return a + b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def scale(self, c, a):
        return c * a

    def operator(self, a):
        return a


def test_augmented_product_examples():
    al = ("x0", "x1", "y0", "y1")
    for lam in (0, 1, -1, 3):
        w = Weight.of(BIG_INT, lam)
        got = augmented_product(bax("x0|x1", alphabet=al), bax("y0|y1", alphabet=al), w)
        want = bax("x0*y0|x1|y1 + x0*y0|y1|x1", alphabet=al) + bax("x0*y0|x1*y1", alphabet=al).scale(lam)
        assert got == want
        got = augmented_product(one_tensor(BIG_INT, 2), one_tensor(BIG_INT, 2), w)
        assert got == one_tensor(BIG_INT, 3, 2) + one_tensor(BIG_INT, 2, lam)
    w = Weight.of(BIG_INT, 1)
    assert augmented_product(bax("x"), bax("y*z"), w) == bax("x*y*z")


def test_golden_weight_minus_one():
    w = Weight.of(BIG_INT, -1)
    out = augmented_product(bax("1|u", alphabet="uv"), bax("1|v", alphabet="uv"), w)
    assert str(out) == "1|u|v + 1|v|u - 1|u*v"


def test_baxter_operator():
    assert baxter_operator(bax("x")) == bax("1|x")
    assert baxter_operator(bax("0")) == bax("0")
    assert baxter_operator(bax("x|y + 2*z")) == bax("1|x|y + 2*(1|z)")


def test_identity_element_and_empty_words():
    with pytest.raises(ValueError):
        BaxElement(BIG_INT, {(): 1})
    w = Weight.of(BIG_INT, 3)
    x = bax("x|1|y - 3*z")
    assert augmented_product(BaxElement.one(BIG_INT, ABC), x, w) == x


@pytest.mark.parametrize("lam", [0, 1, -1, 3])
@pytest.mark.parametrize("ring", [BIG_INT, integers_mod(7)], ids=str)
def test_baxter_identity_free(lam, ring):
    R = FreeBaxterAlgebra(ring, ABC, Weight.of(ring, lam))
    rng = random.Random(lam)
    for _ in range(30):
        assert check_baxter_identity(R, random_bax(rng, ring, ABC), random_bax(rng, ring, ABC))


def test_zero_and_identity_operators():
    for lam in (0, 1, -1, 3):
        R = ZeroOperatorAlgebra(RATIONAL, Weight.of(RATIONAL, lam))
        assert check_baxter_identity(R, Coeff(RATIONAL, 2), Coeff(RATIONAL, -5))
    res = check_baxter_identity(IdentityOperator(), 1, 1)
    assert not res
    assert (res.lhs, res.rhs) == (1, 2)


@pytest.mark.parametrize("lam", [0, 1, -1, 3])
def test_partial_sums_target(lam):
    R = TabulatedAlgebra.partial_sums(BIG_INT, 5, Weight.of(BIG_INT, lam))
    rng = random.Random(7)
    for _ in range(50):
        assert check_baxter_identity(R, random_vector(rng, R), random_vector(rng, R))


def _hom_checks(R, phi, rng, source_ring, samples):
    W = FreeBaxterAlgebra(source_ring, ABC, R.weight)
    f = extend(phi, R, R.weight)
    for _ in range(samples):
        a, b = random_bax(rng, source_ring, ABC), random_bax(rng, source_ring, ABC)
        assert R.equal(f(a + b), R.add(f(a), f(b)))
        assert R.equal(f(W.mul(a, b)), R.mul(f(a), f(b)))
        assert R.equal(f(W.operator(a)), R.operator(f(a)))
    for g in ABC:
        assert R.equal(f(W.generator(g)), phi[g])
    assert R.equal(f(W.one()), R.one())


def test_universal_map_into_targets():
    rng = random.Random(3)
    H = HurwitzAlgebra(BIG_INT)
    _hom_checks(H, {g: random_hurwitz(rng, BIG_INT, 3) for g in ABC}, rng, BIG_INT, 40)
    for lam in (1, -1):
        Z = ZeroOperatorAlgebra(BIG_INT, Weight.of(BIG_INT, lam))
        _hom_checks(Z, {g: Coeff(BIG_INT, random_coeff(rng, BIG_INT)) for g in ABC}, rng, BIG_INT, 40)
        S = TabulatedAlgebra.partial_sums(BIG_INT, 4, Weight.of(BIG_INT, lam))
        _hom_checks(S, {g: random_vector(rng, S) for g in ABC}, rng, BIG_INT, 40)


def test_universal_map_into_free_algebra_is_functor_map():
    rng = random.Random(11)
    R = FreeBaxterAlgebra(BIG_INT, ABC, Weight.of(BIG_INT, -1))
    inclusion = {g: R.generator(g) for g in ABC}
    sub = {"x": bax("y + 2*z"), "y": bax("x*x"), "z": bax("z")}
    poly = {
        "x": {Monomial.gen("y"): 1, Monomial.gen("z"): 2},
        "y": {Monomial.gen("x", 2): 1},
    }
    for _ in range(30):
        a = random_bax(rng, BIG_INT, ABC)
        assert universal_map(inclusion, R, a) == a
        assert universal_map(sub, R, a) == functor_map(poly, a)


def test_universal_map_weight_mismatch():
    R = ZeroOperatorAlgebra(BIG_INT, Weight.of(BIG_INT, 1))
    with pytest.raises(WeightMismatchError):
        universal_map({"x": Coeff(BIG_INT, 1)}, R, bax("x"), Weight.of(BIG_INT, 2))
    with pytest.raises(KeyError):
        universal_map({}, R, bax("x"))


def test_length_one_words_map_to_phi():
    H = HurwitzAlgebra(BIG_INT)
    phi = {"x": H.basis(1), "y": H.basis(2, 3), "z": H.basis(0, -1)}
    assert universal_map(phi, H, bax("x*y*z")) == H.mul(H.mul(phi["x"], phi["y"]), phi["z"])
    assert universal_map(phi, H, bax("x|y")) == H.mul(phi["x"], H.operator(phi["y"]))


@pytest.mark.parametrize("m,n", list(itertools.product(range(1, 4), repeat=2)))
def test_product_expansion(m, n):
    rng = random.Random(m * 10 + n)
    targets = [
        (HurwitzAlgebra(BIG_INT), lambda: random_hurwitz(rng, BIG_INT, 3)),
        (TabulatedAlgebra.partial_sums(BIG_INT, 4, Weight.of(BIG_INT, 3)), None),
        (FreeBaxterAlgebra(BIG_INT, ("x", "y"), Weight.of(BIG_INT, -1)), None),
    ]
    H, S, F = (t[0] for t in targets)
    for _ in range(3):
        assert check_product_expansion(H, [random_hurwitz(rng, BIG_INT, 3) for _ in range(m)],
                                       [random_hurwitz(rng, BIG_INT, 3) for _ in range(n)])
        assert check_product_expansion(S, [random_vector(rng, S) for _ in range(m)],
                                       [random_vector(rng, S) for _ in range(n)])
    if m + n <= 4:
        gens = [F.generator(g) for g in "xy"]
        assert check_product_expansion(F, [rng.choice(gens) for _ in range(m)], [rng.choice(gens) for _ in range(n)])


def test_product_expansion_needs_arguments():
    with pytest.raises(ValueError):
        check_product_expansion(HurwitzAlgebra(BIG_INT), [], [HurwitzAlgebra(BIG_INT).one()])


def test_iterated_operator():
    R = FreeBaxterAlgebra(BIG_INT, ABC, Weight.of(BIG_INT, 1))
    out = iterated_operator(R, [R.generator("x"), R.generator("y")], R.one())
    assert out == bax("1|x|y")


def test_functor_map():
    a = bax("x|x^2 - 3*(y|1|z)")
    assert functor_map({}, a) == a
    assert functor_map({"x": {Monomial.gen("y"): 1}}, bax("x|x^2")) == bax("y|y^2")
    f = {"x": {Monomial.gen("y"): 1, Monomial.gen("z"): 1}}
    g = {"y": {Monomial.gen("z", 2): 2}, "z": {Monomial.gen("x"): -1}}
    # images of the generators under g o f, read off from length-1 words
    composite = {}
    for name in ABC:
        img = functor_map(g, functor_map(f, bax(name)))
        composite[name] = {w[0]: c for w, c in img.items()}
    rng = random.Random(5)
    for _ in range(20):
        e = random_bax(rng, BIG_INT, ABC)
        assert functor_map(composite, e) == functor_map(g, functor_map(f, e))


def test_functor_map_is_baxter_morphism():
    rng = random.Random(6)
    f = {"x": {Monomial.gen("y"): 2, ONE: 1}, "z": {Monomial.parse("x*y"): -1}}
    for lam in (0, 1, -1, 3):
        R = FreeBaxterAlgebra(BIG_INT, ABC, Weight.of(BIG_INT, lam))
        for _ in range(10):
            a, b = random_bax(rng, BIG_INT, ABC), random_bax(rng, BIG_INT, ABC)
            assert functor_map(f, R.mul(a, b)) == R.mul(functor_map(f, a), functor_map(f, b))
            assert functor_map(f, R.operator(a)) == R.operator(functor_map(f, a))


def test_generator_span_words():
    x = Monomial.gen("x")
    words = generator_span_words([x], 0, 2)
    assert set(words) == {(ONE,), (x,), (x * x,)}
    assert (ONE, x) in generator_span_words([x], 1, 2)
    with pytest.raises(ValueError):
        generator_span_words([x], -1, 2)


def test_span_closed_under_product():
    x, y = Monomial.gen("x"), Monomial.gen("y")
    small = generator_span_words([x, y], 1, 1)
    big = set(generator_span_words([x, y], 2, 2))
    R = FreeBaxterAlgebra(BIG_INT, ("x", "y"), Weight.of(BIG_INT, 3))
    for a, b in itertools.product(small, repeat=2):
        prod = R.mul(R.word(a), R.word(b))
        assert set(prod.terms) <= big
