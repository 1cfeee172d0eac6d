"""Command line interface.

Exit codes: 0 success, 1 verification failure, 2 usage or guard error, 3 I/O error.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import Sequence

from . import serialize
from .bounds import bound_report
from .constructions import (
    antimatching_embedding,
    clique_product_embedding,
    folded_identity_embedding,
    folded_low_dilation_embedding,
    multipartite_embedding,
    wheel_gray_embedding,
)
from .graph import Graph, build_family
from .metrics import evaluate
from .oracle import oracle_bisection_width, oracle_dilation, oracle_wirelength
from .table import render_text, table1
from .verify import SCOPE_ALIASES, SCOPES, run

FAMILIES = ("hypercube", "folded", "multipartite", "wheel", "clique_product", "complete", "cycle", "custom")

EXIT_FAIL, EXIT_USAGE, EXIT_IO = 1, 2, 3


class UsageError(ValueError):
    pass


@dataclass(frozen=True)
class FamilyDescriptor:
    family: str
    params: list[int] = field(default_factory=list)
    source: str | None = None

    def __post_init__(self) -> None:
        if self.family not in FAMILIES:
            raise UsageError(f"unknown family {self.family!r}")
        if self.family == "custom" and not self.source:
            raise UsageError("family 'custom' requires --source")

    def build(self) -> Graph:
        if self.family == "custom":
            return serialize.graph_from_dict(_read_json(self.source))
        return build_family(self.family, self.params)


def _read_json(path: str | None):
    if path is None:
        raise UsageError("missing input path")
    text = sys.stdin.read() if path == "-" else Path(path).read_text()
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise OSError(f"{path}: not valid JSON ({exc})") from None


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _descriptor(args) -> FamilyDescriptor:
    f = args.family
    if f in ("hypercube", "folded"):
        if args.n is None:
            raise UsageError(f"family {f!r} needs --n")
        params = [args.n]
    elif f in ("wheel", "complete", "cycle"):
        if args.order is None:
            raise UsageError(f"family {f!r} needs --order")
        params = [args.order]
    elif f in ("multipartite", "clique_product"):
        if not args.parts:
            raise UsageError(f"family {f!r} needs --parts")
        params = args.parts
    else:
        params = []
    return FamilyDescriptor(f, params, args.source)


def _text_block(d: dict) -> str:
    return "".join(f"{k}: {v}\n" for k, v in d.items())


def _emit(text: str) -> None:
    sys.stdout.write(text)


# -- subcommands -------------------------------------------------------------


def cmd_gen(args) -> int:
    g = _descriptor(args).build()
    if args.format == "dot":
        _emit(serialize.graph_to_dot(g))
    else:
        _emit(serialize.dumps(serialize.graph_to_dict(g), compact=True))
    return 0


def cmd_embed(args) -> int:
    kind = args.construction
    if kind == "multipartite":
        e = multipartite_embedding(args.n, args.p)
    elif kind == "folded":
        e = folded_low_dilation_embedding(args.n) if args.low_dilation else folded_identity_embedding(args.n)
    elif kind == "wheel":
        e = wheel_gray_embedding(args.n)
    elif kind == "clique-product":
        e = clique_product_embedding(args.n)
    else:
        g = serialize.graph_from_dict(_read_json(args.graph))
        am = serialize.antimatching_from_json(_read_json(args.pairs))
        e = antimatching_embedding(g, am)
    if args.format == "dot":
        _emit(serialize.graph_to_dot(e.guest, e))
    else:
        _emit(serialize.dumps(serialize.embedding_to_dict(e), compact=True))
    return 0


def cmd_eval(args) -> int:
    e = serialize.embedding_from_dict(_read_json(args.embedding))
    report = serialize.metrics_to_dict(evaluate(e), full=args.full)
    _emit(_text_block(report) if args.format == "text" else serialize.dumps(report))
    return 0


def cmd_bounds(args) -> int:
    g = serialize.graph_from_dict(_read_json(args.graph))
    bw: int | str = args.bw
    if bw != "auto":
        try:
            bw = int(bw)
        except ValueError:
            raise UsageError(f"--bw must be an integer or 'auto', got {args.bw!r}") from None
    report = serialize.bounds_to_dict(bound_report(g, args.host_dim, bw))
    _emit(_text_block(report) if args.format == "text" else serialize.dumps(report))
    return 0


def cmd_oracle(args) -> int:
    g = serialize.graph_from_dict(_read_json(args.graph))
    if args.quantity == "bw":
        cert = oracle_bisection_width(g)
    else:
        n = args.host_dim
        if n is None:
            n = max(g.order - 1, 0).bit_length()
        fn = oracle_dilation if args.quantity == "dilation" else oracle_wirelength
        cert = fn(g, n)
    report = serialize.certificate_to_dict(cert)
    _emit(_text_block(report) if args.format == "text" else serialize.dumps(report))
    return 0


def cmd_table1(args) -> int:
    p = args.p if args.p is not None else args.n - 1
    rows = table1(args.n, p)
    if args.format == "json":
        _emit(serialize.dumps({"n": args.n, "p": p, "rows": rows}))
    else:
        _emit(render_text(rows))
    return 0 if all(r["passed"] for r in rows) else EXIT_FAIL


def cmd_verify(args) -> int:
    report = run(args.scope, args.max_n, args.seed)
    if args.format == "text":
        lines = [f"{'PASS' if c['passed'] else 'FAIL'}  {c['id']}" for c in report["checks"]]
        lines.append(f"{'PASSED' if report['passed'] else 'FAILED'} ({len(report['checks'])} checks)")
        _emit("\n".join(lines) + "\n")
    else:
        _emit(serialize.dumps(report))
    return 0 if report["passed"] else EXIT_FAIL


# -- parser ------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text", "dot"), help="default: text for table1, json elsewhere")
    common.add_argument("--seed", type=int, default=0, help="seed for sampled checks")
    common.add_argument("--full", action="store_true", help="include per-edge tables")

    parser = argparse.ArgumentParser(prog="hypembed", description="Embeddings of graphs into hypercubes.")
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", parents=[common], help="generate a guest or host graph")
    gen.add_argument("--family", choices=FAMILIES, required=True)
    gen.add_argument("--n", type=int)
    gen.add_argument("--order", type=int)
    gen.add_argument("--parts", type=_int_list)
    gen.add_argument("--source")
    gen.set_defaults(func=cmd_gen)

    embed = sub.add_parser("embed", help="build an explicit embedding")
    kinds = embed.add_subparsers(dest="construction", required=True)
    for name in ("multipartite", "folded", "wheel", "clique-product"):
        k = kinds.add_parser(name, parents=[common])
        k.add_argument("--n", type=int, required=True)
        if name == "multipartite":
            k.add_argument("--p", type=int, required=True)
        if name == "folded":
            k.add_argument("--low-dilation", action="store_true", help="dilation-2 placement instead of identity")
    am = kinds.add_parser("antimatching", parents=[common])
    am.add_argument("--graph", required=True)
    am.add_argument("--pairs", required=True)
    embed.set_defaults(func=cmd_embed)

    ev = sub.add_parser("eval", parents=[common], help="dilation, wirelength and congestion of an embedding")
    ev.add_argument("--embedding", required=True)
    ev.set_defaults(func=cmd_eval)

    bd = sub.add_parser("bounds", parents=[common], help="lower bounds for a guest of order 2^n")
    bd.add_argument("--graph", required=True)
    bd.add_argument("--host-dim", type=int, required=True)
    bd.add_argument("--bw", default="auto")
    bd.set_defaults(func=cmd_bounds)

    orc = sub.add_parser("oracle", parents=[common], help="exhaustive optimum for tiny guests")
    orc.add_argument("quantity", choices=("dilation", "wirelength", "bw"))
    orc.add_argument("--graph", required=True)
    orc.add_argument("--host-dim", type=int)
    orc.set_defaults(func=cmd_oracle)

    tb = sub.add_parser("table1", parents=[common], help="recompute the summary table")
    tb.add_argument("--n", type=int, default=4)
    tb.add_argument("--p", type=int)
    tb.set_defaults(func=cmd_table1)

    vf = sub.add_parser("verify", parents=[common], help="run the verification checks")
    vf.add_argument("--scope", choices=("all", *SCOPES, *SCOPE_ALIASES), default="all")
    vf.add_argument("--max-n", type=int, default=4)
    vf.set_defaults(func=cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.format is None:
        args.format = "text" if args.command == "table1" else "json"
    try:
        return args.func(args)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
