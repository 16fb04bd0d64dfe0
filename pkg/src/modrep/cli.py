"""Command-line interface: ``modrep <group> <command> ...``.

Output is JSON unless ``--format plain`` or ``--format csv`` (matrices) is
given.  Exit status: 0 success, 1 domain error or failed scenario, 2 usage
or parse error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import basicsets as bs
from . import clifford as cl
from . import fock
from . import partitions as pt
from .mullineux import mullineux, mullineux_fixed
from .scenarios import SCENARIOS, run_scenario


class UsageError(Exception):
    pass


def _partition(text: str) -> pt.Partition:
    try:
        return pt.parse_partition(text)
    except pt.PartitionError as exc:
        raise UsageError(str(exc)) from exc


def _json_default(obj):
    if isinstance(obj, (bs.DecompMatrixModel, bs.BasicSetDatum, fock.FockVector,
                        fock.DecompositionColumn, fock.OperatorWord, cl.BlockDescriptor)):
        return obj.to_json()
    if isinstance(obj, (cl.AnLabel, fock.VPolynomial)):
        return str(obj)
    if isinstance(obj, (set, frozenset)):
        return sorted(obj)
    return str(obj)


def _plain(obj) -> str:
    if isinstance(obj, pt.Partition):
        return str(obj)
    if isinstance(obj, (list, tuple)) and obj and all(isinstance(x, pt.Partition) for x in obj):
        return "\n".join(map(str, obj))
    if isinstance(obj, bool):
        return "true" if obj else "false"
    if isinstance(obj, (fock.FockVector, fock.OperatorWord, fock.VPolynomial)):
        return str(obj)
    if isinstance(obj, fock.DecompositionColumn):
        return "\n".join(f"{lam}\t{d}" for lam, d in sorted(obj.entries.items(), reverse=True))
    if isinstance(obj, bs.DecompMatrixModel):
        return obj.to_csv()
    return json.dumps(obj, default=_json_default, ensure_ascii=False)


def _emit(obj, fmt: str, out) -> None:
    if fmt == "csv":
        if not isinstance(obj, bs.DecompMatrixModel):
            raise UsageError("--format csv applies to matrix outputs only")
        out.write(obj.to_csv())
        return
    if fmt == "plain":
        out.write(_plain(obj).rstrip("\n") + "\n")
        return
    if isinstance(obj, pt.Partition):
        obj = list(obj)
    out.write(json.dumps(obj, default=_json_default, ensure_ascii=False) + "\n")


# -- partition -------------------------------------------------------------------

def cmd_partition(args):
    p = args.p
    if args.action == "conjugate":
        return pt.conjugate(_partition(args.lam))
    if args.action == "hooks":
        return pt.hook_lengths(_partition(args.lam))
    if args.action == "enumerate":
        if args.n is None:
            raise UsageError("enumerate needs --n")
        items = list(pt.partitions_of(args.n))
        if args.regular:
            items = [x for x in items if pt.is_p_regular(x, _need_p(p))]
        if args.core is not None:
            core = _partition(args.core)
            items = [x for x in items if pt.p_core(x, _need_p(p)) == core]
        return [list(x) for x in items]
    lam = _partition(args.lam)
    p = _need_p(p)
    if args.action == "core":
        cq = pt.core_quotient(lam, p)
        return {"core": list(cq.core), "quotient": [list(q) for q in cq.quotient], "weight": cq.weight}
    if args.action == "quotient":
        return [list(q) for q in pt.p_quotient(lam, p)]
    if args.action == "regularize":
        return pt.regularize(lam, p)
    raise UsageError(args.action)  # pragma: no cover


def _need_p(p):
    if p is None:
        raise UsageError("--p is required")
    return p


# -- mullineux -------------------------------------------------------------------

def cmd_mullineux(args):
    p = _need_p(args.p)
    if args.action == "map":
        return mullineux(_partition(args.lam), p)
    if args.n is None:
        raise UsageError("fixed needs --n")
    core = None if args.core is None else _partition(args.core)
    return [list(x) for x in mullineux_fixed(args.n, p, core)]


# -- fock ------------------------------------------------------------------------

def cmd_fock(args):
    p = _need_p(args.p)
    cache = args.cache
    if args.action == "ladder-word":
        lam = _partition(_need(args.lam, "--lambda"))
        w = fock.ladder_word(lam, p)
        return {"word": w.spec(), "printed": str(w)}
    if args.word is not None:
        try:
            w = fock.OperatorWord.parse(args.word, p)
        except fock.FockError as exc:
            raise UsageError(str(exc)) from exc
    else:
        w = fock.ladder_word(_partition(_need(args.lam, "--lambda")), p)
    x = fock.apply_word(w, cache=cache)
    if args.action == "apply-word":
        return x
    lam = _partition(_need(args.lam, "--lambda"))
    return fock.extract_decomposition_column(x, lam)


def _need(value, flag):
    if value is None:
        raise UsageError(f"{flag} is required")
    return value


# -- basicset --------------------------------------------------------------------

def _load_matrix(path):
    if path is None:
        raise UsageError("--matrix is required")
    try:
        return bs.DecompMatrixModel.load(path)
    except (OSError, json.JSONDecodeError, KeyError) as exc:
        raise UsageError(f"cannot read matrix {path}: {exc}") from exc


def _parse_rho(text: str) -> dict:
    rho = {}
    for item in text.split(";"):
        if not item.strip():
            continue
        if "=" not in item:
            raise UsageError(f"rho entries look like 'mu=lambda', got {item!r}")
        a, b = item.split("=", 1)
        rho[_partition(a)] = _partition(b)
    return rho


def cmd_basicset(args):
    if args.action == "unitriangularisable":
        D = _load_matrix(args.matrix)
        if len(D.rows) != len(D.cols):
            raise bs.BasicSetError("matrix is not square")
        res = bs.is_unitriangularisable(D.entries)
        out = {"unitriangularisable": res.ok, "enough_zeros": bs.has_enough_zeros(D.entries)}
        if res.ok:
            out["rows"] = [str(D.rows[i]) for i in res.row_order]
            out["cols"] = [str(D.cols[j]) for j in res.col_order]
        return out
    if args.action == "verify":
        D = _load_matrix(args.matrix)
        if args.datum:
            with open(args.datum) as fh:
                datum = bs.BasicSetDatum.from_json(json.load(fh))
            return {"unitriangular": bs.verify_unitriangular_basic_set(D, datum, allow_unknown=args.allow_unknown)}
        rows = D.rows if args.rows is None else [_partition(r) for r in args.rows.split(";")]
        return {"basic_set": bs.verify_basic_set(D, rows)}
    n, p = _need(args.n, "--n"), _need_p(args.p)
    order = bs.order_spec(args.order)
    core = None if args.core is None else _partition(args.core)
    datum = bs.build_tilde_basic_set(n, p, order, core)
    if args.action == "build-tilde":
        return {"n": n, "p": p, "order": order.kind,
                "B": [list(x) for x in reversed(datum.B)],
                "psi": [[list(x), list(datum.psi[x])] for x in reversed(datum.B)],
                "fixed": datum.meta["fixed"]}
    # swap
    if core is None:
        raise UsageError("swap needs --core")
    datum = bs.block_datum(datum, core)
    b1, b2 = bs.restrict_to_block(datum, core)
    rho = _parse_rho(_need(args.rho, "--rho"))
    D = _load_matrix(args.matrix) if args.matrix else \
        bs.partial_decomposition_matrix(n, p, core, cache=args.cache)
    new = bs.rho_swap(b1, b2, rho, D, datum)
    return {"B": [list(x) for x in reversed(new.B)],
            "psi": [[list(x), list(new.psi[x])] for x in reversed(new.B)],
            "restriction_ready": not bs.restriction_obstacles(new)}


# -- clifford ----------------------------------------------------------------------

def cmd_clifford(args):
    p = _need_p(args.p)
    if args.action == "blocks":
        return [b.to_json() for b in cl.blocks(_need(args.n, "--n"), p)]
    if args.action == "c-gamma":
        core = _partition(args.core or "")
        return [list(x) for x in cl.C_gamma(core, _need(args.n, "--n"), p)]
    if args.action == "shape":
        core = _partition(args.core or "")
        b = cl.block_descriptor(_need(args.n, "--n"), p, core)
        return [s.to_json() for s in cl.an_shape(b)]
    lam = _partition(_need(args.lam, "--lambda"))
    return {f"rho{s}(t{t})": str(v) for (s, t), v in cl.split_class_values(lam).items()}


# -- parser ------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--p", type=int)
    common.add_argument("--n", type=int)
    common.add_argument("--core", help='p-core, e.g. "3,1,1" or "" for the empty core')
    common.add_argument("--format", choices=("json", "plain", "csv"), default="json")
    common.add_argument("--cache", help="Fock cache directory (MODREP_CACHE overrides)")

    parser = argparse.ArgumentParser(prog="modrep", description=__doc__.splitlines()[0])
    groups = parser.add_subparsers(dest="group", required=True)

    g = groups.add_parser("partition", parents=[common], help="partition combinatorics")
    g.add_argument("action", choices=("conjugate", "core", "quotient", "hooks", "regularize", "enumerate"))
    g.add_argument("lam", nargs="?", default="", help='partition, e.g. "10,4,4,1"')
    g.add_argument("--regular", action="store_true", help="enumerate p-regular partitions only")
    g.set_defaults(func=cmd_partition)

    g = groups.add_parser("mullineux", parents=[common], help="the Mullineux map")
    g.add_argument("action", choices=("map", "fixed"))
    g.add_argument("lam", nargs="?", default="")
    g.set_defaults(func=cmd_mullineux)

    g = groups.add_parser("fock", parents=[common], help="Fock space words and columns")
    g.add_argument("action", choices=("apply-word", "ladder-word", "decomp-column"))
    g.add_argument("--word", help='word "i:a,i:a,..." read left to right as printed')
    g.add_argument("--lambda", dest="lam")
    g.set_defaults(func=cmd_fock)

    g = groups.add_parser("basicset", parents=[common], help="basic sets")
    g.add_argument("action", choices=("build-tilde", "verify", "swap", "unitriangularisable"))
    g.add_argument("--order", choices=("lex", "lexprime"), default="lex")
    g.add_argument("--matrix", help="matrix file (.json or .csv)")
    g.add_argument("--datum", help="basic set datum (.json) for verify")
    g.add_argument("--rows", help='rows forming B for verify, ";"-separated')
    g.add_argument("--allow-unknown", action="store_true")
    g.add_argument("--rho", help='swap map "mu=lambda;mu=lambda"')
    g.set_defaults(func=cmd_basicset)

    g = groups.add_parser("clifford", parents=[common], help="S_n / A_n block data")
    g.add_argument("action", choices=("blocks", "c-gamma", "shape", "split-values"))
    g.add_argument("--lambda", dest="lam")
    g.set_defaults(func=cmd_clifford)

    g = groups.add_parser("scenario", parents=[common], help="run a named end-to-end computation")
    g.add_argument("name", choices=sorted(SCENARIOS))
    g.set_defaults(func=None)
    return parser


def main(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.group == "scenario":
            report = run_scenario(args.name, cache=args.cache)
            if args.format == "plain":
                lines = [report["header"]]
                lines += [f"{'PASS' if s['ok'] else 'FAIL'}  {s['name']}" for s in report["steps"]]
                lines.append(("PASS: " if report["ok"] else "FAIL: ") + report["verdict"])
                out.write("\n".join(lines) + "\n")
            else:
                _emit(report, args.format, out)
            return 0 if report["ok"] else 1
        result = args.func(args)
        _emit(result, args.format, out)
        return 0
    except UsageError as exc:
        err.write(f"modrep: error: {exc}\n")
        return 2
    except fock.HypothesisNotSatisfied as exc:
        err.write(f"modrep: hypothesis not satisfied: {exc}\n")
        return 1
    except (ValueError, ArithmeticError) as exc:
        err.write(f"modrep: {exc}\n")
        return 1


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":  # pragma: no cover
    run()
