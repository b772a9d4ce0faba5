"""Exact mixable shuffle products, free Baxter algebras and the oracles that check them."""

from .baxter import (
    BaxElement,
    BaxterAlgebra,
    FreeBaxterAlgebra,
    IdentityCheck,
    NonUnitalBaxterAlgebra,
    TabulatedAlgebra,
    WeightMismatchError,
    ZeroOperatorAlgebra,
    augmented_product,
    baxter_operator,
    check_baxter_identity,
    check_product_expansion,
    functor_map,
    generator_span_words,
    universal_map,
)
from .cartier import (
    CartierAlgebra,
    CartierElement,
    CartierSymbol,
    cartier_operator,
    cartier_product,
    embed_cartier,
    enumerate_cartier_triples,
    factor_through,
)
from .coefficients import BIG_INT, RATIONAL, Coeff, Ring, RingMismatchError, Weight, binomial, integers_mod, parse_ring
from .combinatorics import (
    admissible_pairs,
    count_mixable_pair,
    count_mixable_pair_by_merges,
    count_mixable_triple,
    enumerate_mixable_pair,
    enumerate_mixable_triple,
    enumerate_pair_shuffles,
    partition_dec,
)
from .hurwitz import HurwitzAlgebra, HurwitzPolynomial, embed_sha_c, hurwitz_mul, hurwitz_shift, one_tensor_product
from .parsing import ParseError, parse_cartier, parse_hurwitz, parse_tensor
from .shuffle_algebra import ONE, Monomial, PlusElement, apply_mixable_to_tensor, mixable_product_plus

__version__ = "0.1.0"
