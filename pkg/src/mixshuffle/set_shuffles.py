"""Mixable shuffles of vectors of finite sets.

This is the generic model behind commutativity and associativity of the
mixable shuffle product: entries are sets of opaque atoms and merging is set
union, so distinct results can never collide by accident.  The product code
does not use this module; the tests compare the two.
"""

from __future__ import annotations

from typing import Iterable

from .combinatorics import (
    MixablePairShuffle,
    MixableTripleShuffle,
    enumerate_mixable_pair,
    enumerate_mixable_triple,
)

SetVector = tuple[frozenset, ...]


def set_vector(*entries: Iterable[str]) -> SetVector:
    out = tuple(frozenset(e) for e in entries)
    if any(not e for e in out):
        raise ValueError("set-vector entries must be nonempty")
    return out


def singletons(prefix: str, size: int) -> SetVector:
    """``({prefix1}, ..., {prefix<size>})``."""
    return tuple(frozenset({f"{prefix}{i}"}) for i in range(1, size + 1))


def canonical(v: SetVector) -> tuple[tuple[str, ...], ...]:
    return tuple(tuple(sorted(e)) for e in v)


def sorted_vectors(vectors: Iterable[SetVector]) -> list[SetVector]:
    return sorted(vectors, key=canonical)


def _require_disjoint(*vectors: SetVector):
    seen: set = set()
    for v in vectors:
        for e in v:
            if seen & e:
                raise ValueError(f"atoms {sorted(seen & e)} occur twice")
            seen |= e


def _apply_slots(operands: SetVector, slots) -> SetVector:
    return tuple(frozenset().union(*(operands[i - 1] for i in slot)) for slot in slots)


def apply_mixable(F: SetVector, G: SetVector, ms: MixablePairShuffle) -> SetVector:
    """The vector sigma((F, G); T): shuffle, then union the merged neighbours."""
    if (len(F), len(G)) != (ms.m, ms.n):
        raise ValueError(f"vector lengths {(len(F), len(G))} do not fit a ({ms.m},{ms.n})-shuffle")
    return _apply_slots(tuple(F) + tuple(G), ms.slots())


def apply_mixable_triple(F: SetVector, G: SetVector, H: SetVector, ms: MixableTripleShuffle) -> SetVector:
    s = ms.shuffle
    if (len(F), len(G), len(H)) != (s.m, s.n, s.l):
        raise ValueError("vector lengths do not fit the shuffle")
    return _apply_slots(tuple(F) + tuple(G) + tuple(H), ms.slots())


def mixable_shuffle_set(F: SetVector, G: SetVector) -> set[SetVector]:
    """Every mixable shuffle of F and G."""
    if not F or not G:
        raise ValueError("set vectors must be nonempty")
    _require_disjoint(F, G)
    return {apply_mixable(F, G, ms) for ms in enumerate_mixable_pair(len(F), len(G))}


def mixable_shuffle_set_triple(F: SetVector, G: SetVector, H: SetVector, how: str = "direct") -> set[SetVector]:
    """Mixable shuffles of three vectors.

    ``how`` selects the route: ``"direct"`` applies every mixable
    (m, n, l)-shuffle, ``"left"`` mixes F with G first, ``"right"`` mixes G
    with H first.
    """
    if not F or not G or not H:
        raise ValueError("set vectors must be nonempty")
    _require_disjoint(F, G, H)
    if how == "direct":
        return {apply_mixable_triple(F, G, H, ms) for ms in enumerate_mixable_triple(len(F), len(G), len(H))}
    if how == "left":
        return {w for u in mixable_shuffle_set(F, G) for w in mixable_shuffle_set(u, H)}
    if how == "right":
        return {w for u in mixable_shuffle_set(G, H) for w in mixable_shuffle_set(F, u)}
    raise ValueError(f"unknown route {how!r}")
