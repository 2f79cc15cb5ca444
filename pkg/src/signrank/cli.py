"""Command line interface.

Exit status: 0 decided/succeeded, 1 negative decision, 2 input error.
Every command builds one result dict; ``--format json`` prints it as JSON
and text mode prints the same fields one per line.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from dataclasses import dataclass
from itertools import product
from typing import Dict, List, Optional

from . import chain, genreduce, geometry, matroid, oracle
from .maxrank import NonzeroBipartiteGraph, maximum_matching
from .rational import format_rational, parse_rational_matrix
from .signs import SignFormatError, SignMatrix, parse_matrix, vector_to_text

EXIT_OK, EXIT_NO, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


@dataclass(frozen=True)
class Config:
    oracle_row_limit: int = oracle.DEFAULT_ROW_LIMIT
    rng_seed: int = 0
    output_format: str = "text"

    def __post_init__(self):
        if self.oracle_row_limit < 1:
            raise InputError("--limit must be at least 1")
        if self.output_format not in ("text", "json"):
            raise InputError(f"unknown output format {self.output_format!r}")


def _read(path: str) -> str:
    try:
        with open(path) as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None


def _matrix(path: str) -> SignMatrix:
    try:
        return parse_matrix(_read(path))
    except (SignFormatError, ValueError) as exc:
        raise InputError(f"{path}: {exc}") from None


def _arrangement(path: str) -> geometry.Arrangement:
    try:
        return geometry.parse_arrangement(_read(path))
    except ValueError as exc:
        raise InputError(f"{path}: {exc}") from None


def _rows(S: SignMatrix) -> List[str]:
    return [vector_to_text(r) for r in S.rows]


def _witness(W: chain.Rank2Witness) -> Dict[str, List[str]]:
    return {
        "X": [format_rational(x) for x in W.X],
        "Y": [format_rational(y) for y in W.Y],
        "alpha": [format_rational(a) for a, _ in W.column_combos],
        "beta": [format_rational(b) for _, b in W.column_combos],
    }


def cmd_minrank2(args, cfg):
    S = _matrix(args.matrix)
    res = genreduce.minrank_le2(S)
    out = res.outcome
    data = {
        "command": "minrank2",
        "verdict": "YES" if res.ok else "NO",
        "minrank_le_2": res.ok,
        "reduction": out.kind,
        "trace": [str(t) for t in out.trace],
        "reduced_matrix": _rows(out.matrix) if out.matrix is not None else None,
        "witness": _witness(res.witness) if res.witness is not None else None,
    }
    return data, EXIT_OK if res.ok else EXIT_NO


def cmd_minrank_small(args, cfg):
    S = _matrix(args.matrix)
    ok = chain.minrank_le_r_small(S, args.r)
    return {"command": "minrank-small", "r": args.r, f"minrank_le_{args.r}": ok}, EXIT_OK if ok else EXIT_NO


def cmd_maxrank(args, cfg):
    S = _matrix(args.matrix)
    match = maximum_matching(NonzeroBipartiteGraph.from_matrix(S))
    data = {"command": "maxrank", "maxrank": len(match), "matching": [[i, j] for i, j in sorted(match.items())]}
    return data, EXIT_OK


def cmd_reduce(args, cfg):
    S = _matrix(args.matrix)
    out = genreduce.reduce_generalized(S)
    data = {
        "command": "reduce",
        "outcome": out.kind,
        "matrix": _rows(out.matrix) if out.matrix is not None else None,
        "trace": [str(t) for t in out.trace],
        "failing_step": out.failing_step,
    }
    return data, EXIT_NO if out.kind == genreduce.GT2 else EXIT_OK


def cmd_covectors(args, cfg):
    arr = _arrangement(args.arrangement)
    cs = geometry.enumerate_covectors(arr)
    c0, c1, c2 = cs.counts()
    data = {
        "command": "covectors",
        "n": arr.n,
        "uniform": geometry.is_uniform(arr),
        "counts": {"c0": c0, "c1": c1, "c2": c2},
        "c0": sorted(vector_to_text(v) for v in cs.c0),
        "c1": sorted(vector_to_text(v) for v in cs.c1),
        "c2": sorted(vector_to_text(v) for v in cs.c2),
    }
    return data, EXIT_OK


def cmd_reconstruct(args, cfg):
    try:
        n, c2 = matroid.parse_covectors(_read(args.covectors))
        c0, c1 = matroid.reconstruct_from_C2(c2, n)
    except ValueError as exc:
        raise InputError(f"{args.covectors}: {exc}") from None
    data = {
        "command": "reconstruct",
        "n": n,
        "c0": sorted(vector_to_text(v) for v in c0),
        "c1": sorted(vector_to_text(v) for v in c1),
    }
    return data, EXIT_OK


def cmd_reduce_arrangement(args, cfg):
    arr = _arrangement(args.arrangement)
    if args.lemma == "main":
        S = matroid.build_matrix_lemma_main(arr, include_zero_vector=args.include_zero)
    else:
        if not geometry.is_uniform(arr):
            raise InputError(f"{args.arrangement}: main2 needs a uniform arrangement")
        S = matroid.build_matrix_lemma_main2(arr)
    return {"command": "reduce-arrangement", "lemma": args.lemma, "shape": list(S.shape), "matrix": _rows(S)}, EXIT_OK


def cmd_verify_witness(args, cfg):
    S = _matrix(args.matrix)
    try:
        P = parse_rational_matrix(_read(args.P))
        L = parse_rational_matrix(_read(args.L))
        R = matroid.PointLineRealization(tuple(map(tuple, P)), tuple(map(tuple, L)))
        ok = matroid.verify_rank3_witness(S, R)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    return {"command": "verify-witness", "valid": ok}, EXIT_OK if ok else EXIT_NO


def cmd_oracle(args, cfg):
    S = _matrix(args.matrix)
    try:
        ok = oracle.minrank2_oracle(S, allow_zero=True, limit=cfg.oracle_row_limit)
    except oracle.OracleLimitError as exc:
        raise InputError(f"oracle size limit: {exc}") from None
    return {"command": "oracle", "minrank_le_2": ok}, EXIT_OK if ok else EXIT_NO


def _threshold_matrix(rng: random.Random, m: int, n: int) -> SignMatrix:
    y = [rng.randint(0, 5) for _ in range(m)]
    flips = [rng.choice((1, -1)) for _ in range(m)]
    cols = []
    for _ in range(n):
        t = rng.randint(-1, 5) + 0.5
        s = rng.choice((1, -1))
        cols.append([f * s * (1 if yi > t else -1) for f, yi in zip(flips, y)])
    return SignMatrix.from_columns(cols)


def run_selftest(full: bool, seed: int) -> List[dict]:
    suites = []

    def suite(name, cases):
        total = bad = 0
        for a, b in cases:
            total += 1
            bad += a != b
        suites.append({"name": name, "cases": total, "disagreements": bad})

    m = 4 if full else 3
    suite(f"strict {m}x{m}: chain vs oracle",
          ((chain.minrank_le2_strict(S) is not None, oracle.minrank2_oracle(S))
           for S in chain.iter_strict_matrices(m, m)))
    g = 3 if full else 2
    suite(f"generalized {g}x{g}: reduction+chain vs oracle",
          ((bool(genreduce.minrank_le2(S)), oracle.minrank2_oracle(S))
           for S in (SignMatrix(tuple(tuple(v[i * g:(i + 1) * g]) for i in range(g)))
                     for v in product((-1, 0, 1), repeat=g * g))))
    rng = random.Random(seed)
    suite("random threshold matrices accepted",
          ((genreduce.minrank_le2(_threshold_matrix(rng, rng.randint(1, 8), rng.randint(1, 10))).ok, True)
           for _ in range(200)))
    return suites


def cmd_selftest(args, cfg):
    suites = run_selftest(args.full, cfg.rng_seed)
    ok = all(s["disagreements"] == 0 for s in suites)
    return {"command": "selftest", "full": args.full, "suites": suites, "ok": ok}, EXIT_OK if ok else EXIT_NO


def render_text(data, indent: int = 0) -> str:
    pad = "  " * indent
    lines = []
    for key, val in data.items():
        if isinstance(val, dict):
            lines.append(f"{pad}{key}:")
            lines.append(render_text(val, indent + 1))
        elif isinstance(val, list):
            lines.append(f"{pad}{key}:")
            for item in val:
                if isinstance(item, dict):
                    lines.append(pad + "  -")
                    lines.append(render_text(item, indent + 2))
                else:
                    lines.append(f"{pad}  {' '.join(map(str, item)) if isinstance(item, list) else item}")
        else:
            lines.append(f"{pad}{key}: {json.dumps(val) if val is None or isinstance(val, bool) else val}")
    return "\n".join(lines)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS)
    common.add_argument("--limit", type=int, default=argparse.SUPPRESS, help="oracle row limit")
    common.add_argument("--format", choices=("text", "json"), default=argparse.SUPPRESS)

    p = argparse.ArgumentParser(prog="signrank", description=__doc__.splitlines()[0])
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--limit", type=int, default=oracle.DEFAULT_ROW_LIMIT, help="oracle row limit")
    p.add_argument("--format", choices=("text", "json"), default="text")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn, help_):
        sp = sub.add_parser(name, parents=[common], help=help_)
        sp.set_defaults(func=fn)
        return sp

    add("minrank2", cmd_minrank2, "decide minrank <= 2").add_argument("matrix")
    sp = add("minrank-small", cmd_minrank_small, "decide minrank <= 0 or <= 1")
    sp.add_argument("-r", type=int, choices=(0, 1), required=True)
    sp.add_argument("matrix")
    add("maxrank", cmd_maxrank, "maximum rank").add_argument("matrix")
    add("reduce", cmd_reduce, "generalized -> strict reduction").add_argument("matrix")
    add("covectors", cmd_covectors, "covectors of a line arrangement").add_argument("arrangement")
    add("reconstruct", cmd_reconstruct, "vertex/edge covectors from region covectors").add_argument("covectors")
    sp = add("reduce-arrangement", cmd_reduce_arrangement, "sign matrix of an arrangement")
    sp.add_argument("lemma", choices=("main", "main2"))
    sp.add_argument("arrangement")
    sp.add_argument("--include-zero", action="store_true", help="add the all-zero covector row (main only)")
    sp = add("verify-witness", cmd_verify_witness, "check sign(P @ L) == S and rank <= 3")
    sp.add_argument("matrix")
    sp.add_argument("P")
    sp.add_argument("L")
    add("oracle", cmd_oracle, "brute-force minrank <= 2").add_argument("matrix")
    sp = add("selftest", cmd_selftest, "exhaustive agreement suites")
    sp.add_argument("--full", action="store_true", help="4x4 strict and 3x3 generalized suites")
    return p


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = Config(args.limit, args.seed, args.format)
        data, status = args.func(args, cfg)
    except InputError as exc:
        print(f"signrank: error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    if cfg.output_format == "json":
        print(json.dumps(data, indent=2))
    else:
        print(render_text(data))
    return status


if __name__ == "__main__":
    sys.exit(main())
