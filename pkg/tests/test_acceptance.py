"""The ten acceptance criteria, each exact and timed.

Run with ``pytest tests/test_acceptance.py -v``; the terminal summary lists
one PASS/FAIL line per criterion.
"""

import itertools
import random
from math import comb
import subprocess
import sys

import oracles
from mixshuffle.baxter import (
    BaxElement,
    FreeBaxterAlgebra,
    TabulatedAlgebra,
    ZeroOperatorAlgebra,
    augmented_product,
    baxter_operator,
    check_baxter_identity,
    check_product_expansion,
    extend,
    one_tensor,
    universal_map,
)
from mixshuffle.cartier import (
    CartierElement,
    CartierSymbol,
    cartier_operator,
    cartier_product,
    embed_cartier,
    enumerate_cartier_triples,
)
from mixshuffle.coefficients import BIG_INT, Coeff, Weight, binomial, integers_mod
from mixshuffle.combinatorics import (
    count_mixable_pair,
    count_mixable_triple,
    enumerate_mixable_pair,
    enumerate_mixable_triple,
)
from mixshuffle.hurwitz import HurwitzAlgebra, HurwitzPolynomial, one_tensor_product
from mixshuffle.sampling import random_bax, random_cartier, random_coeff, random_hurwitz, random_plus, random_vector
from mixshuffle.set_shuffles import mixable_shuffle_set, mixable_shuffle_set_triple, singletons
from mixshuffle.shuffle_algebra import ONE, Monomial, PlusElement, mixable_product_plus

WEIGHTS = (0, 1, -1, 3)
ABC = ("x", "y", "z")
MOD7 = integers_mod(7)


def _c(n, k):
    return comb(n, k) if 0 <= k <= n else 0


def closed_pair(m, n):
    return sum(_c(m + n - i, n) * _c(n, i) for i in range(n + 1))


def closed_triple(m, n, l):
    return sum(
        _c(m + n + l - k, l) * _c(l, k - i) * _c(m + n - i, n) * _c(n, i)
        for k in range(n + l + 1)
        for i in range(n + 1)
    )


def test_criterion_01_counting_oracle(criterion):
    with criterion(1, "mixable shuffle enumeration matches the closed forms", 30):
        for m in range(7):
            for n in range(7):
                assert len(enumerate_mixable_pair(m, n)) == closed_pair(m, n) == count_mixable_pair(m, n)
        for m, n, l in itertools.product(range(4), repeat=3):
            assert len(enumerate_mixable_triple(m, n, l)) == closed_triple(m, n, l) == count_mixable_triple(m, n, l)
        assert count_mixable_triple(1, 1, 1) == 13
        # brute force: compose set shuffles of singletons
        X, Y, Z = oracles.singles("a", 1), oracles.singles("b", 1), oracles.singles("c", 1)
        assert len({w for u in oracles.set_shuffles(X, Y) for w in oracles.set_shuffles(u, Z)}) == 13


def test_criterion_02_recurrence(criterion):
    with criterion(2, "s(m,n) = s(m-1,n) + s(m,n-1) + s(m-1,n-1) with unit boundary", 1):
        s = count_mixable_pair
        assert all(s(k, 0) == 1 and s(0, k) == 1 for k in range(9))
        for m in range(1, 9):
            for n in range(1, 9):
                assert s(m, n) == s(m - 1, n) + s(m, n - 1) + s(m - 1, n - 1)


def test_criterion_03_algebra_laws(criterion):
    with criterion(3, "commutative, associative, unital products (int and mod 7, four weights)", 60):
        for ring in (BIG_INT, MOD7):
            for lam in WEIGHTS:
                w = Weight.of(ring, lam)
                rng = random.Random(f"{ring}-{lam}")
                unit_plus = PlusElement.one(ring, ABC)
                unit_bax = BaxElement.one(ring, ABC)
                for _ in range(200):
                    x, y, z = (random_plus(rng, ring, ABC) for _ in range(3))
                    xy = mixable_product_plus(x, y, w)
                    assert xy == mixable_product_plus(y, x, w)
                    assert mixable_product_plus(xy, z, w) == mixable_product_plus(x, mixable_product_plus(y, z, w), w)
                    assert mixable_product_plus(unit_plus, x, w) == x
                    a, b, c = (random_bax(rng, ring, ABC) for _ in range(3))
                    ab = augmented_product(a, b, w)
                    assert ab == augmented_product(b, a, w)
                    assert augmented_product(ab, c, w) == augmented_product(a, augmented_product(b, c, w), w)
                    assert augmented_product(unit_bax, a, w) == a


def test_criterion_04_baxter_identity(criterion):
    with criterion(4, "Baxter identity in the free algebra and the Hurwitz target", 30):
        for lam in WEIGHTS:
            for ring in (BIG_INT, MOD7):
                R = FreeBaxterAlgebra(ring, ABC, Weight.of(ring, lam))
                rng = random.Random(f"bax-{ring}-{lam}")
                for _ in range(200):
                    assert check_baxter_identity(R, random_bax(rng, ring, ABC), random_bax(rng, ring, ABC))
        H = HurwitzAlgebra(BIG_INT)
        rng = random.Random("hurwitz")
        for _ in range(200):
            assert check_baxter_identity(H, random_hurwitz(rng, BIG_INT), random_hurwitz(rng, BIG_INT))


def test_criterion_05_set_shuffles(criterion):
    with criterion(5, "set-vector shuffles: cardinality, symmetry, three-way associativity", 30):
        for m in range(1, 4):
            for n in range(1, 4):
                X, Y = singletons("x", m), singletons("y", n)
                S = mixable_shuffle_set(X, Y)
                assert len(S) == closed_pair(m, n)
                assert S == mixable_shuffle_set(Y, X)
                assert S == oracles.set_shuffles(X, Y)
        for m, n, l in itertools.product(range(1, 4), repeat=3):
            X, Y, Z = singletons("x", m), singletons("y", n), singletons("z", l)
            direct = mixable_shuffle_set_triple(X, Y, Z, "direct")
            assert direct == mixable_shuffle_set_triple(X, Y, Z, "left") == mixable_shuffle_set_triple(X, Y, Z, "right")
            assert len(direct) == closed_triple(m, n, l)


def _homomorphism(R, phi, source_ring, rng, samples):
    W = FreeBaxterAlgebra(source_ring, ABC, R.weight)
    f = extend(phi, R, R.weight)
    for _ in range(samples):
        a, b = random_bax(rng, source_ring, ABC), random_bax(rng, source_ring, ABC)
        assert R.equal(f(W.add(a, b)), R.add(f(a), f(b)))
        assert R.equal(f(W.mul(a, b)), R.mul(f(a), f(b)))
        assert R.equal(f(W.operator(a)), R.operator(f(a)))


def test_criterion_06_universal_map(criterion):
    with criterion(6, "universal map is an additive, multiplicative, operator-preserving map", 30):
        rng = random.Random("universal")
        H = HurwitzAlgebra(BIG_INT)
        _homomorphism(H, {g: random_hurwitz(rng, BIG_INT, 3) for g in ABC}, BIG_INT, rng, 100)
        for lam in (1, -1):
            Z = ZeroOperatorAlgebra(BIG_INT, Weight.of(BIG_INT, lam))
            _homomorphism(Z, {g: Coeff(BIG_INT, random_coeff(rng, BIG_INT)) for g in ABC}, BIG_INT, rng, 100)
        for n in range(7):
            assert universal_map({}, H, one_tensor(BIG_INT, n + 1)) == HurwitzPolynomial.basis(BIG_INT, n)


def test_criterion_07_product_expansion(criterion):
    with criterion(7, "product of iterated operators equals the mixable shuffle expansion", 30):
        rng = random.Random("expansion")
        H = HurwitzAlgebra(BIG_INT)
        S = TabulatedAlgebra.partial_sums(BIG_INT, 5, Weight.of(BIG_INT, 3))
        for m in range(1, 4):
            for n in range(1, 4):
                for _ in range(5):
                    xs = [random_hurwitz(rng, BIG_INT, 3) for _ in range(m)]
                    ys = [random_hurwitz(rng, BIG_INT, 3) for _ in range(n)]
                    assert check_product_expansion(H, xs, ys)
                    xs = [random_vector(rng, S) for _ in range(m)]
                    ys = [random_vector(rng, S) for _ in range(n)]
                    assert check_product_expansion(S, xs, ys)


def _all_symbols(alphabet, max_degree, max_bracket):
    monos = [ONE]
    for d in range(1, max_degree + 1):
        for combo in itertools.combinations_with_replacement(alphabet, d):
            u = ONE
            for g in combo:
                u = u * Monomial.gen(g)
            monos.append(u)
    for length in range(max_bracket + 1):
        for head in monos:
            for bracket in itertools.product(monos, repeat=length):
                if (not bracket and head.is_one) or (bracket and bracket[-1].is_one):
                    continue
                yield CartierSymbol(head, bracket)


def test_criterion_08_cartier_embedding(criterion):
    with criterion(8, "Cartier embedding is injective and a weight -1 morphism", 60):
        xy = ("x", "y")
        seen = set()
        for s in _all_symbols(xy, 2, 3):
            (word,) = embed_cartier(CartierElement(BIG_INT, {s: 1}), xy).terms
            assert word not in seen
            seen.add(word)
        w = Weight.of(BIG_INT, -1)
        rng = random.Random("cartier")
        for _ in range(100):
            a, b = random_cartier(rng, BIG_INT, xy), random_cartier(rng, BIG_INT, xy)
            fa, fb = embed_cartier(a, xy), embed_cartier(b, xy)
            assert embed_cartier(cartier_product(a, b), xy) == augmented_product(fa, fb, w)
            assert embed_cartier(cartier_operator(a), xy) == baxter_operator(fa)
        for m in range(1, 6):
            for n in range(1, 6):
                assert len(enumerate_cartier_triples(m, n)) == closed_pair(m, n)


def test_criterion_09_closed_forms(criterion):
    with criterion(9, "products of all-ones tensors and Hurwitz basis products", 10):
        for lam in WEIGHTS:
            w = Weight.of(BIG_INT, lam)
            for m in range(7):
                for n in range(7):
                    direct = augmented_product(one_tensor(BIG_INT, m + 1), one_tensor(BIG_INT, n + 1), w)
                    assert one_tensor_product(m, n, w) == direct
                    if lam == 0:
                        assert direct == one_tensor(BIG_INT, m + n + 1, _c(m + n, n))
        for m in range(9):
            for n in range(9):
                e = HurwitzPolynomial.basis
                assert e(BIG_INT, m) * e(BIG_INT, n) == e(BIG_INT, m + n, binomial(m + n, n))


GOLDEN = [
    (["count", "--m", "1", "--n", "1"], 0, b"3\n"),
    (["product", "--lambda", "-1", "--alphabet", "u,v", "1|u", "1|v"], 0, b"1|u|v + 1|v|u - 1|u*v\n"),
    (
        ["baxter-check", "--target", "hurwitz", "--lambda", "0", "--samples", "50", "--seed", "7"],
        0,
        b"baxter-check target=hurwitz lambda=0 samples=50 seed=7: ok\n",
    ),
]


def test_criterion_10_cli_golden(criterion):
    with criterion(10, "CLI golden outputs are byte-identical", 5):
        for argv, status, stdout in GOLDEN:
            proc = subprocess.run([sys.executable, "-m", "mixshuffle.cli", *argv], capture_output=True, env={"PATH": ""})
            assert proc.returncode == status
            assert proc.stdout == stdout
