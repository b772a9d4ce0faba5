"""``mixshuffle`` command line interface.

Exit status: 0 on success (including identity checks that pass), 1 when a
checked identity fails (a witness is printed), 2 for usage or parse errors.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys

from . import baxter, cartier, combinatorics, hurwitz, parsing, sampling
from .baxter import BaxElement, FreeBaxterAlgebra, TabulatedAlgebra, ZeroOperatorAlgebra
from .coefficients import Coeff, Ring, Weight, parse_ring
from .shuffle_algebra import PlusElement, mixable_product_plus

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2

SAMPLE_ALPHABET = ("x", "y", "z")
SUMS_DIM = 4


class UsageError(Exception):
    pass


def _alphabet(text: str | None) -> tuple[str, ...] | None:
    if text is None:
        return None
    names = tuple(a.strip() for a in text.split(",") if a.strip())
    if len(set(names)) != len(names):
        raise UsageError(f"duplicate generator names in {text!r}")
    return names


def _weight(ring: Ring, text: str) -> Weight:
    try:
        return Weight.of(ring, text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _dump(fmt: str, text: str, payload) -> str:
    if fmt == "json":
        return json.dumps(payload, sort_keys=False)
    return text


# -- subcommands -------------------------------------------------------------


def cmd_count(args) -> tuple[int, str]:
    m, n, l = args.m, args.n, args.l
    if l is None:
        total = int(combinatorics.count_mixable_pair(m, n))
        rows = [(i, int(combinatorics.count_mixable_pair_by_merges(m, n, i))) for i in range(n + 1)]
        payload = {"m": m, "n": n, "count": total}
    else:
        total = int(combinatorics.count_mixable_triple(m, n, l))
        rows = [(k, int(combinatorics.count_mixable_triple_by_degree(m, n, l, k))) for k in range(n + l + 1)]
        payload = {"m": m, "n": n, "l": l, "count": total}
    if args.by_merges:
        rows = [(i, c) for i, c in rows if c]
        payload["by_merges"] = {str(i): c for i, c in rows}
        text = "\n".join(f"{i}\t{c}" for i, c in rows)
    else:
        text = str(total)
    return EXIT_OK, _dump(args.format, text, payload)


def cmd_enumerate(args) -> tuple[int, str]:
    m, n, l = args.m, args.n, args.l
    items = []
    lines = []
    if l is None:
        for ms in combinatorics.enumerate_mixable_pair(m, n):
            merges = [list(p) for p in ms.merges]
            items.append({"sigma": list(ms.sigma), "merges": merges, "degree": ms.degree})
        payload = {"m": m, "n": n, "items": items}
    else:
        for ms in combinatorics.enumerate_mixable_triple(m, n, l):
            merges = [list(e.positions) for e in ms.merges]
            items.append({"sigma": list(ms.sigma), "merges": merges, "degree": ms.degree})
        payload = {"m": m, "n": n, "l": l, "items": items}
    for it in items:
        sigma = ",".join(map(str, it["sigma"]))
        merges = " ".join("(" + ",".join(map(str, p)) + ")" for p in it["merges"]) or "-"
        lines.append(f"[{sigma}]\t{merges}\t{it['degree']}")
    return EXIT_OK, _dump(args.format, "\n".join(lines), payload)


def cmd_product(args) -> tuple[int, str]:
    ring = parse_ring(args.ring)
    w = _weight(ring, args.lam)
    alphabet = _alphabet(args.alphabet)
    kind = PlusElement if args.plus else BaxElement
    x = parsing.parse_tensor(args.left, ring, alphabet, kind)
    y = parsing.parse_tensor(args.right, ring, alphabet, kind)
    if alphabet is None:
        names = x.alphabet | y.alphabet
        x, y = kind(ring, x.terms, names), kind(ring, y.terms, names)
    out = mixable_product_plus(x, y, w) if args.plus else baxter.augmented_product(x, y, w)
    return EXIT_OK, _dump(args.format, str(out), parsing.tensor_to_json(out))


def _target(name: str, ring: Ring, w: Weight):
    """The Baxter algebra and a sampler for its elements."""
    if name == "sha":
        R = FreeBaxterAlgebra(ring, SAMPLE_ALPHABET, w)
        return R, lambda rng: sampling.random_bax(rng, ring, SAMPLE_ALPHABET)
    if name == "hurwitz":
        if not ring.is_zero(w.raw):
            raise UsageError("the hurwitz target only exists at lambda = 0")
        return hurwitz.HurwitzAlgebra(ring), lambda rng: sampling.random_hurwitz(rng, ring)
    if name == "zero":
        R = ZeroOperatorAlgebra(ring, w)
        return R, lambda rng: Coeff(ring, sampling.random_coeff(rng, ring, nonzero=False))
    if name == "sums":
        R = TabulatedAlgebra.partial_sums(ring, SUMS_DIM, w)
        return R, lambda rng: sampling.random_vector(rng, R)
    raise UsageError(f"unknown target {name!r}")


def _render(value) -> str:
    if isinstance(value, tuple):
        return "(" + ", ".join(str(v) for v in value) + ")"
    return str(value)


def cmd_baxter_check(args) -> tuple[int, str]:
    ring = parse_ring(args.ring)
    w = _weight(ring, args.lam)
    R, sample = _target(args.target, ring, w)
    rng = random.Random(args.seed)
    for i in range(args.samples):
        x, y = sample(rng), sample(rng)
        res = baxter.check_baxter_identity(R, x, y)
        if not res:
            text = (
                f"baxter-check target={args.target} lambda={w}: FAILED at sample {i}\n"
                f"x = {_render(x)}\ny = {_render(y)}\nlhs = {_render(res.lhs)}\nrhs = {_render(res.rhs)}"
            )
            payload = {"target": args.target, "lambda": str(w), "ok": False, "sample": i,
                       "x": _render(x), "y": _render(y), "lhs": _render(res.lhs), "rhs": _render(res.rhs)}
            return EXIT_FAILED, _dump(args.format, text, payload)
    text = f"baxter-check target={args.target} lambda={w} samples={args.samples} seed={args.seed}: ok"
    payload = {"target": args.target, "lambda": str(w), "samples": args.samples, "seed": args.seed, "ok": True}
    return EXIT_OK, _dump(args.format, text, payload)


def cmd_expand_prop(args) -> tuple[int, str]:
    ring = parse_ring(args.ring)
    w = _weight(ring, args.lam)
    R, sample = _target(args.target, ring, w)
    rng = random.Random(args.seed)
    for i in range(args.samples):
        xs = [sample(rng) for _ in range(args.m)]
        ys = [sample(rng) for _ in range(args.n)]
        res = baxter.check_product_expansion(R, xs, ys)
        if not res:
            text = (
                f"expand-prop m={args.m} n={args.n} target={args.target}: FAILED at sample {i}\n"
                f"lhs = {_render(res.lhs)}\nrhs = {_render(res.rhs)}"
            )
            return EXIT_FAILED, _dump(args.format, text, {"ok": False, "sample": i})
    text = f"expand-prop m={args.m} n={args.n} target={args.target} lambda={w} samples={args.samples}: ok"
    payload = {"m": args.m, "n": args.n, "target": args.target, "lambda": str(w), "samples": args.samples, "ok": True}
    return EXIT_OK, _dump(args.format, text, payload)


def cmd_cartier(args) -> tuple[int, str]:
    ring = parse_ring(args.ring)
    alphabet = _alphabet(args.alphabet)
    exprs = [parsing.parse_cartier(e, ring, alphabet) for e in args.exprs]
    if len(exprs) > 2:
        raise UsageError("cartier takes one or two expressions")
    out = exprs[0] if len(exprs) == 1 else cartier.cartier_product(exprs[0], exprs[1])
    if args.embed:
        img = cartier.embed_cartier(out, alphabet)
        return EXIT_OK, _dump(args.format, str(img), parsing.tensor_to_json(img))
    return EXIT_OK, _dump(args.format, str(out), parsing.cartier_to_json(out))


def cmd_hurwitz(args) -> tuple[int, str]:
    ring = parse_ring(args.ring)
    if args.action == "mul":
        if len(args.exprs) != 2:
            raise UsageError("hurwitz mul takes two expressions")
        a, b = (parsing.parse_hurwitz(e, ring) for e in args.exprs)
        out = hurwitz.hurwitz_mul(a, b)
    elif args.action == "shift":
        if len(args.exprs) != 1:
            raise UsageError("hurwitz shift takes one expression")
        out = hurwitz.hurwitz_shift(parsing.parse_hurwitz(args.exprs[0], ring))
    else:
        src = args.expr if args.expr is not None else " ".join(args.exprs)
        x = parsing.parse_tensor(src, ring, alphabet=())
        out = hurwitz.embed_sha_c(x, Weight.of(ring, 0))
    return EXIT_OK, _dump(args.format, str(out), parsing.hurwitz_to_json(out))


def _parse_assignment(target: str, R, ring: Ring, text: str):
    if target == "hurwitz":
        return parsing.parse_hurwitz(text, ring)
    if target == "zero":
        return Coeff(ring, ring.parse(text))
    if target == "sums":
        return R.vector(ring.parse(v) for v in text.split(","))
    return parsing.parse_tensor(text, ring, R.alphabet)


def cmd_eval(args) -> tuple[int, str]:
    ring = parse_ring(args.ring)
    w = _weight(ring, args.lam)
    raw = dict(a.split("=", 1) for a in args.assign or [])
    source_alphabet = _alphabet(args.alphabet) or tuple(sorted(raw))
    if args.target == "sha":
        R = FreeBaxterAlgebra(ring, _alphabet(args.target_alphabet) or source_alphabet, w)
    elif args.target == "sums":
        dims = {len(v.split(",")) for v in raw.values()} or {SUMS_DIM}
        if len(dims) != 1:
            raise UsageError("all assignments for the sums target need the same length")
        R = TabulatedAlgebra.partial_sums(ring, dims.pop(), w)
    else:
        R, _ = _target(args.target, ring, w)
    phi = {k.strip(): _parse_assignment(args.target, R, ring, v) for k, v in raw.items()}
    x = parsing.parse_tensor(args.expr, ring, source_alphabet)
    missing = sorted(x.alphabet - set(phi))
    if missing:
        raise UsageError(f"no assignment for generators {missing}")
    value = baxter.universal_map(phi, R, x, w)
    return EXIT_OK, _dump(args.format, _render(value), {"value": _render(value)})


# -- wiring ---------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    default_format = os.environ.get("MIXSHUFFLE_FORMAT", "text")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default=default_format)
    common.add_argument("--ring", default="int", help="int, rat or mod:<n>")

    p = argparse.ArgumentParser(prog="mixshuffle", description="Mixable shuffle products and free Baxter algebras.")
    sub = p.add_subparsers(dest="command", required=True)

    for name in ("count", "enumerate"):
        s = sub.add_parser(name, parents=[common])
        s.add_argument("--m", type=int, required=True)
        s.add_argument("--n", type=int, required=True)
        s.add_argument("--l", type=int)
        if name == "count":
            s.add_argument("--by-merges", action="store_true")

    s = sub.add_parser("product", parents=[common])
    s.add_argument("--lambda", dest="lam", default="1")
    s.add_argument("--alphabet")
    s.add_argument("--plus", action="store_true", help="use the shuffle algebra product instead of the augmented one")
    s.add_argument("left")
    s.add_argument("right")

    for name in ("baxter-check", "expand-prop"):
        s = sub.add_parser(name, parents=[common])
        s.add_argument("--target", choices=("sha", "hurwitz", "zero", "sums"), default="sha")
        s.add_argument("--lambda", dest="lam", default="1")
        s.add_argument("--samples", type=int, default=100)
        s.add_argument("--seed", type=int, default=0)
        if name == "expand-prop":
            s.add_argument("--m", type=int, required=True)
            s.add_argument("--n", type=int, required=True)

    s = sub.add_parser("cartier", parents=[common])
    s.add_argument("--alphabet")
    s.add_argument("--embed", action="store_true")
    s.add_argument("exprs", nargs="+")

    s = sub.add_parser("hurwitz", parents=[common])
    s.add_argument("action", choices=("mul", "shift", "embed"))
    s.add_argument("exprs", nargs="*")
    s.add_argument("--expr")

    s = sub.add_parser("eval", parents=[common])
    s.add_argument("--target", choices=("sha", "hurwitz", "zero", "sums"), required=True)
    s.add_argument("--lambda", dest="lam", default="0")
    s.add_argument("--alphabet")
    s.add_argument("--target-alphabet")
    s.add_argument("--assign", action="append", help="generator image, e.g. x=e1 or x=1,2,3")
    s.add_argument("expr")
    return p


COMMANDS = {
    "count": cmd_count,
    "enumerate": cmd_enumerate,
    "product": cmd_product,
    "baxter-check": cmd_baxter_check,
    "expand-prop": cmd_expand_prop,
    "cartier": cmd_cartier,
    "hurwitz": cmd_hurwitz,
    "eval": cmd_eval,
}


def run(argv: list[str]) -> tuple[int, str]:
    """Execute one command; returns ``(exit status, stdout text)``.

    Usage and parse errors come back as status 2 with the message as text.
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0), ""
    try:
        return COMMANDS[args.command](args)
    except (UsageError, ValueError, KeyError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else str(exc)
        return EXIT_USAGE, f"error: {msg}"


def main(argv: list[str] | None = None) -> int:
    status, text = run(sys.argv[1:] if argv is None else argv)
    if text:
        stream = sys.stderr if status == EXIT_USAGE else sys.stdout
        stream.write(text + "\n")
    return status


if __name__ == "__main__":
    sys.exit(main())
