"""Command-line entry point.

Exit codes: 0 success / Exists / verified, 1 NotExists / violations /
proved none, 2 Unknown / budget exhausted, 3 usage or parse error.
Payloads go to stdout as JSON, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from collections import Counter
from pathlib import Path

from . import io
from .advisor import EXISTS, NOT_EXISTS, ProblemInstance, advise
from .algebra import StarterError, develop, doubling_lift, graceful_to_starter
from .construct import (
    BlockCert,
    ProjectionInput,
    RowSumMatrix,
    blowup,
    cn_factorize_blown,
    compose_equipartite,
    haggkvist_double,
    project,
    refine_blocks,
    rsm_apply,
    verify_blocks,
    walecki,
)
from .construct.circulant import circulant_ham_decomp
from .construct.haggkvist import as_template
from .corpus import corpus_check, default_entries, write_entry
from .groups import FiniteAbelianGroup
from .model import FactorizationCert, NotationError, parse_cycle_type, parse_host, parse_type_list
from .search import EXHAUSTED, FOUND, PROVED_NONE, SearchBudget, solve_exhaustive
from .search.hamdecomp import find_ham_decomp
from .search.rowsum import find_rsm
from .search.starters import find_starter
from .verify import verify_certificate

OK, NO, UNSURE, USAGE = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _emit(obj) -> None:
    print(json.dumps(obj, ensure_ascii=False))


def _ints(text: str) -> list[int]:
    try:
        return [int(x) for x in re.split(r"[,\s]+", text.strip()) if x]
    except ValueError:
        raise UsageError(f"expected a comma-separated list of integers, got {text!r}") from None


def _read(path: str):
    try:
        return io.load_path(path)
    except OSError as e:
        raise UsageError(f"cannot read {path}: {e.strerror}") from None


def _budget(args) -> SearchBudget:
    return SearchBudget.from_env(max_seconds=args.budget_seconds, max_nodes=args.budget_nodes,
                                 deterministic_seed=args.seed)


_STATUS_CODE = {FOUND: OK, PROVED_NONE: NO, EXHAUSTED: UNSURE}


# ---------------------------------------------------------------- construct


def _construct(args) -> int:
    what = args.what
    if what == "walecki":
        _emit(io.to_json(walecki(args.v)))
    elif what == "haggkvist":
        order = _ints(args.arc_order) if args.arc_order else None
        pair = haggkvist_double(args.n, parse_cycle_type(args.type), arc_order=order)
        _emit(io.to_json(as_template(args.n, pair)))
    elif what == "rsm":
        group = FiniteAbelianGroup.parse(args.group)
        m = _read_matrix(args.matrix, group, _ints(args.s), args.g)
        _emit(io.to_json(rsm_apply(m)))
    elif what == "project":
        p = ProjectionInput(tuple(_ints(args.cycle)), args.g, args.shift, args.reverse)
        _emit({"format": "projection.v1", "g": p.g, "n": p.n, "shift": p.shift, "reversed": p.reversed,
               "cycle": [list(x) for x in project(p)]})
    elif what == "cn":
        hd = circulant_ham_decomp(args.n, _ints(args.s), _budget(args))
        _emit(io.to_json(cn_factorize_blown(args.g, args.n, _ints(args.s), hd)))
    elif what == "blowup":
        cert = _read(args.cert)
        if not isinstance(cert, FactorizationCert):
            raise UsageError("--cert must be a cert.v1 document")
        bc = blowup(cert, args.n)
        if args.refine:
            _emit(io.to_json(refine_blocks(bc, _read(args.refine))))
        elif bc.n == 1:
            _emit(io.to_json(refine_blocks(bc)))
        else:
            _emit(io.to_json(bc))
    elif what == "compose":
        _emit(io.to_json(compose_equipartite(_read(args.eq), [_read(p) for p in args.parts])))
    elif what == "develop":
        _emit(io.to_json(develop(_read(args.starter), args.mode)))
    elif what == "double":
        r = doubling_lift(_read(args.starter))
        _emit({**io.to_json(r.starter), "doubled": list(r.doubled), "split": list(r.split)})
    elif what == "graceful":
        cycles = [tuple(-1 if x.strip() in ("inf", "-1") else int(x) for x in c.split(","))
                  for c in args.cycles]
        _emit(io.to_json(graceful_to_starter(args.v, cycles)))
    return OK


def _read_matrix(path: str, group, S, g) -> RowSumMatrix:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise UsageError(f"cannot read {path}: {e.strerror}") from None
    data = json.loads(text)
    if isinstance(data, dict):
        return io.from_json(data)
    return RowSumMatrix(group, tuple(S), g, tuple(tuple(r) for r in data))


# ---------------------------------------------------------------- verify


def _verify(args) -> int:
    obj = _read(args.file)
    if isinstance(obj, BlockCert):
        report = verify_blocks(obj)
    elif isinstance(obj, FactorizationCert):
        report = verify_certificate(obj)
    else:
        raise UsageError(f"{args.file} is neither a cert.v1 nor a blocks.v1 document")
    _emit(report.to_dict())
    return OK if report.ok else NO


# ---------------------------------------------------------------- search


def _search(args) -> int:
    b = _budget(args)
    if args.what == "op":
        out = solve_exhaustive(parse_host(args.host), parse_type_list(args.types), b,
                               symmetry=not args.no_symmetry)
    elif args.what == "starter":
        out = find_starter(FiniteAbelianGroup.parse(args.group), parse_cycle_type(args.type), args.kind, b)
    elif args.what == "rsm":
        out = find_rsm(FiniteAbelianGroup.parse(args.group), _ints(args.s), args.g, _ints(args.orders), b)
    else:
        out = find_ham_decomp(args.n, _ints(args.s), b)
    _emit(io.outcome_to_json(out))
    return _STATUS_CODE[out.status]


# ---------------------------------------------------------------- advise


_FACTOR_RE = re.compile(r"\s*(?:(\d+)\s*[x*]\s*)?(\[[^\]]*\]|\d+)\s*")


def parse_factor_terms(terms: list[str]) -> list[tuple[object, int]]:
    """Terms like ``6x[3]``, ``1x[5]``, ``2x[3^2,5]`` or ``4x7``; a bare length is uniform."""
    out: Counter = Counter()
    for term in terms:
        m = _FACTOR_RE.fullmatch(term)
        if not m:
            raise NotationError(f"bad factor term {term!r}")
        alpha = int(m[1]) if m[1] else 1
        body = m[2]
        spec = parse_cycle_type(body, min_length=2) if body.startswith("[") else int(body)
        out[spec] += alpha
    return list(out.items())


def _advise(args) -> int:
    pos = list(args.positional)
    kind = args.kind or (pos.pop(0) if pos else None)
    host = args.host or (pos.pop(0) if pos else None)
    terms = (args.factors or []) + pos
    if not kind or not host or not terms:
        raise UsageError("advise needs a kind, a host and at least one factor term")
    inst = ProblemInstance(kind, parse_host(host), tuple(parse_factor_terms(terms)))
    v = advise(inst)
    _emit({"instance": str(inst), **v.to_dict()})
    return {EXISTS: OK, NOT_EXISTS: NO}.get(v.status, UNSURE)


# ---------------------------------------------------------------- corpus


def _corpus(args) -> int:
    if args.what == "build":
        for e in default_entries(args.budget_seconds or 60.0):
            print(write_entry(args.dir, e), file=sys.stderr)
        return OK
    report = corpus_check(args.dir)
    _emit(report.to_dict())
    return OK if report.ok else NO


# ---------------------------------------------------------------- parser


def _add_budget(p):
    p.add_argument("--budget-seconds", type=float, default=None)
    p.add_argument("--budget-nodes", type=int, default=None)
    p.add_argument("--seed", type=int, default=0)


def build_parser() -> argparse.ArgumentParser:
    top = _Parser(prog="twofactor", description="Construct, search for and verify 2-factorizations.")
    sub = top.add_subparsers(dest="command", required=True, parser_class=_Parser)

    con = sub.add_parser("construct", help="explicit constructions (cert.v1 on stdout)")
    cs = con.add_subparsers(dest="what", required=True, parser_class=_Parser)
    p = cs.add_parser("walecki")
    p.add_argument("--v", type=int, required=True)
    p = cs.add_parser("haggkvist")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--type", required=True)
    p.add_argument("--arc-order", help="cycle lengths in arc order, e.g. 6,8,4,6")
    p = cs.add_parser("rsm")
    p.add_argument("--group", required=True)
    p.add_argument("--s", required=True)
    p.add_argument("--g", type=int, required=True)
    p.add_argument("--matrix", required=True, help="rsm.v1 file or a JSON list of rows")
    p = cs.add_parser("project")
    p.add_argument("--cycle", required=True)
    p.add_argument("--g", type=int, required=True)
    p.add_argument("--reverse", action="store_true")
    p.add_argument("--shift", type=int, default=0)
    p = cs.add_parser("cn", help="C_n-factorization of C_g[Z_n, ±S] from a Hamilton decomposition")
    p.add_argument("--g", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--s", required=True)
    _add_budget(p)
    p = cs.add_parser("blowup")
    p.add_argument("--cert", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--refine", help="cert.v1 factorization of C_g[n] to expand every block with")
    p = cs.add_parser("compose")
    p.add_argument("--eq", required=True)
    p.add_argument("--parts", nargs="+", required=True)
    p = cs.add_parser("develop")
    p.add_argument("--starter", required=True)
    p.add_argument("--mode", choices=("orbit", "development"), default="orbit")
    p = cs.add_parser("double")
    p.add_argument("--starter", required=True)
    p = cs.add_parser("graceful")
    p.add_argument("--v", type=int, required=True)
    p.add_argument("--cycles", nargs="+", required=True, help="cycles like inf,0,2,1")

    p = sub.add_parser("verify", help="check a cert.v1 or blocks.v1 document")
    p.add_argument("file")

    srch = sub.add_parser("search", help="exact searches (outcome JSON on stdout)")
    ss = srch.add_subparsers(dest="what", required=True, parser_class=_Parser)
    p = ss.add_parser("op")
    p.add_argument("--host", required=True)
    p.add_argument("--types", required=True, help='e.g. "[3,3],[3,3]" or "2x[3,3]"')
    p.add_argument("--no-symmetry", action="store_true")
    _add_budget(p)
    p = ss.add_parser("starter")
    p.add_argument("--group", required=True)
    p.add_argument("--type", required=True)
    p.add_argument("--kind", choices=("twofold", "two_starter"), default="two_starter")
    _add_budget(p)
    p = ss.add_parser("rsm")
    p.add_argument("--group", required=True)
    p.add_argument("--s", required=True)
    p.add_argument("--g", type=int, required=True)
    p.add_argument("--orders", required=True)
    _add_budget(p)
    p = ss.add_parser("hamdecomp")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--s", required=True)
    _add_budget(p)

    p = sub.add_parser("advise", help="existence verdict from the rule catalog")
    p.add_argument("--kind", choices=("OP", "HWP", "GOP"))
    p.add_argument("--host")
    p.add_argument("--factors", nargs="+")
    p.add_argument("positional", nargs="*", help="[KIND] [HOST] FACTOR...")

    p = sub.add_parser("corpus", help="build or check a certificate corpus directory")
    p.add_argument("what", choices=("build", "check"))
    p.add_argument("dir")
    p.add_argument("--budget-seconds", type=float, default=None)
    return top


_HANDLERS = {"construct": _construct, "verify": _verify, "search": _search, "advise": _advise, "corpus": _corpus}


def run(argv: list[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        return _HANDLERS[args.command](args)
    except UsageError as e:
        print(str(e), file=sys.stderr)
        return USAGE
    except (ValueError, StarterError, FileNotFoundError) as e:
        # NotationError, FormatError and the construction errors are all ValueErrors
        print(f"error: {e}", file=sys.stderr)
        return USAGE


def main() -> None:
    sys.exit(run())


__all__ = ["main", "parse_factor_terms", "run"]
