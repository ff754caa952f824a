"""Command-line interface: ``transmat <subcommand> ...``.

Exit codes: 0 verdict computed, 1 violations found where none were expected,
2 input or usage error.
"""

from __future__ import annotations

import argparse
import os
import sys
from typing import Any, Sequence

from . import bitset as bs
from . import jsonio
from .constructions import (CorpusSpec, all_matroids, build_corpus, free_product, named,
                            random_transversal)
from .core import DEFAULT_MAX_N, element_map
from .cyclic import DEFAULT_ENUM_LIMIT, cyclic_flats
from .errors import MatroidError, NotTransversalError
from .fundamental import METHODS, fundamental_by_method, fundamental_extension, is_fundamental
from .masonfn import IE_SIZE_CAP, INTERSECTIONS, UNIONS, alpha, beta, rhs_inclusion_exclusion
from .oracle import ORACLE_MAX_N, Disagreement, OracleReport, oracle_inclusion_exclusion, oracle_is_transversal
from .suite import SuiteOptions, random_pairs, run_check
from .transversal import (complete_presentation, delta_faces, is_transversal,
                          maximal_presentation)


class Exit(Exception):
    def __init__(self, code: int, payload: Any = None):
        super().__init__(code)
        self.code = code
        self.payload = payload


def _load(args, path):
    return jsonio.load(path, max_n=args.max_n)


def _parse_set(text: str, n: int) -> int:
    if not text.strip():
        return 0
    try:
        els = [int(t) for t in text.split(",")]
    except ValueError:
        raise MatroidError(f"--set must be comma-separated integers, got {text!r}") from None
    bad = [e for e in els if not 0 <= e < n]
    if bad:
        raise MatroidError(f"--set element {bad[0]} outside 0..{n - 1}")
    return bs.to_mask(els)


def _values(table, flats, full: bool) -> dict:
    keys = range(len(table.values)) if full else flats
    return {"values": {str(k): int(table.values[k]) for k in keys}}


# -- subcommands ---------------------------------------------------------------------

def cmd_show(args):
    L = _load(args, args.file)
    M = L.matroid
    return {"n": M.n, "rank": M.r, "form": L.form, "loops": bs.elements(M.loops()),
            "coloops": bs.elements(M.coloops()), "circuits": jsonio.lists(M.circuits()),
            "bases": len(M.bases())}


def cmd_cyclic_flats(args):
    Z = cyclic_flats(_load(args, args.file).matroid)
    return {"flats": [{"set": bs.elements(F), "rank": r} for F, r in Z.pairs()]}


def cmd_beta(args):
    M = _load(args, args.file).matroid
    bt = beta(M)
    return _values(bt, bt.zlattice.flats, args.full)


def cmd_alpha(args):
    M = _load(args, args.file).matroid
    at = alpha(M)
    return _values(at, at.zlattice.flats, args.full)


def _verdict_obj(v) -> dict:
    if v.is_transversal:
        return {"transversal": True, "certificate": {"presentation": v.presentation.to_lists()}}
    return {"transversal": False,
            "certificate": {"witness": bs.elements(v.witness), "beta": v.witness_beta}}


def cmd_is_transversal(args):
    return _verdict_obj(is_transversal(_load(args, args.file).matroid))


def cmd_max_presentation(args):
    M = _load(args, args.file).matroid
    try:
        return jsonio.presentation_obj(maximal_presentation(M))
    except NotTransversalError as exc:
        raise Exit(1, {"error": "not transversal", "witness": bs.elements(exc.witness),
                       "beta": exc.value}) from None


def cmd_complete_presentation(args):
    L = _load(args, args.file)
    if L.presentation is None:
        raise MatroidError(f"{args.file}: expected a presentation")
    M = _load(args, args.matroid).matroid if args.matroid else L.matroid
    return jsonio.presentation_obj(complete_presentation(M, L.presentation))


def _violation_obj(v) -> dict:
    return {"family": jsonio.lists(v.family), "lhs": v.lhs, "rhs": v.rhs}


def cmd_is_fundamental(args):
    M = _load(args, args.file).matroid
    if args.method == "antichain":
        v = is_fundamental(M, limit=args.limit)
        if v.is_fundamental:
            return {"fundamental": True, "basis": bs.elements(v.basis_certificate)}
        return {"fundamental": False, "violation": _violation_obj(v.violation)}
    if args.method == "all":
        verdicts = {m: fundamental_by_method(M, m, limit=args.limit, cap=args.cap) for m in METHODS}
        out = {"fundamental": verdicts["antichain"], "methods": verdicts}
        if len(set(verdicts.values())) != 1:
            raise Exit(1, out)
        return out
    return {"fundamental": fundamental_by_method(M, args.method, limit=args.limit, cap=args.cap),
            "method": args.method}


def cmd_faces(args):
    L = _load(args, args.file)
    A = L.presentation if L.presentation is not None else maximal_presentation(L.matroid)
    return {str(x): sorted(cols) for x, cols in delta_faces(A).items()}


def cmd_dual(args):
    L = _load(args, args.file)
    return jsonio.to_obj(L.matroid.dual(), L.form)


def _minor(args, op):
    L = _load(args, args.file)
    X = _parse_set(args.set, L.matroid.n)
    M = L.matroid
    kept = X if op == "restrict" else M.ground & ~X
    out = jsonio.to_obj(M.restrict(X) if op == "restrict" else M.contract(X), L.form)
    out["element_map"] = {str(k): v for k, v in element_map(kept).items()}
    return out


def cmd_restrict(args):
    return _minor(args, "restrict")


def cmd_contract(args):
    return _minor(args, "contract")


def cmd_free_product(args):
    a, b = _load(args, args.first), _load(args, args.second)
    return jsonio.to_obj(free_product(a.matroid, b.matroid, max_n=args.max_n), a.form)


def cmd_extend_fundamental(args):
    L = _load(args, args.file)
    try:
        ext, A = fundamental_extension(L.matroid)
    except NotTransversalError as exc:
        raise Exit(1, {"error": "not transversal", "witness": bs.elements(exc.witness),
                       "beta": exc.value}) from None
    out = jsonio.presentation_obj(A)
    out["fresh"] = list(range(L.matroid.n, ext.n))
    return out


def cmd_gen(args):
    fam = args.family
    if fam == "random-transversal":
        A, _ = random_transversal(args.n, args.r, args.seed)
        return jsonio.presentation_obj(A)
    if fam == "catalog":
        cat = all_matroids(args.n)
        if not 0 <= args.index < len(cat):
            raise MatroidError(f"--index must be in 0..{len(cat) - 1} for n={args.n}")
        return jsonio.to_obj(cat[args.index])
    if fam == "uniform":
        M = named("uniform", args.r, args.n)
    elif fam in ("free", "rank0"):
        M = named(fam, args.n)
    else:
        M = named(fam)
    return jsonio.to_obj(M, "circuits" if fam in ("mk4", "paper_p7", "parallel_pairs") else "bases")


def cmd_oracle(args):
    M = _load(args, args.file).matroid
    if args.check == "transversal":
        oracle = oracle_is_transversal(M, args.bound, fast=args.fast, max_n=args.oracle_max_n)
        proc = is_transversal(M).is_transversal
        out = {"oracle": oracle, "procedure": proc, "agree": oracle == proc}
        if oracle != proc:
            raise Exit(1, out)
        return out
    report = OracleReport()
    Z = cyclic_flats(M)
    bt = beta(M, Z)
    from .cyclic import antichains, filters
    for fam in antichains(Z, limit=args.limit):
        for mode in (UNIONS, INTERSECTIONS):
            _, rhs = oracle_inclusion_exclusion(M, fam, mode, cap=args.cap)
            got = rhs_inclusion_exclusion(M, fam, mode, cap=args.cap)
            report.instances_checked += 1
            if rhs != got:
                report.disagreements.append(Disagreement(str(jsonio.lists(fam)), mode, rhs, got))
    for fam in filters(Z, limit=args.limit):
        _, rhs = oracle_inclusion_exclusion(M, fam, UNIONS, cap=args.cap)
        got = sum(bt[F] for F in fam)
        report.instances_checked += 1
        if M.r - rhs != got:
            report.disagreements.append(Disagreement(str(jsonio.lists(fam)), "filter_beta_sum",
                                                     M.r - rhs, got))
    out = report.to_json()
    if report.disagreements:
        raise Exit(1, out)
    return out


def cmd_check(args):
    spec = CorpusSpec(seed=args.seed, max_n=args.max_n_corpus, random_n=(1, args.max_n_corpus),
                      free_product_max_n=args.max_n_corpus,
                      catalog_max_n=min(5, args.max_n_corpus))
    corpus = build_corpus(spec)
    pairs = random_pairs(args.pairs, args.seed, max_total=max(2, args.max_n_corpus), pool=corpus)
    opts = SuiteOptions(oracle_max_n=min(5, args.max_n_corpus), brylawski_cap=args.cap)
    report = run_check(corpus, pairs, jobs=args.jobs, opts=opts)
    out = report.to_json()
    if report.disagreements:
        raise Exit(1, out)
    return out


# -- parser --------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    # `check` reads --max-n as the corpus bound, so it gets a parent without the cap flag
    base = argparse.ArgumentParser(add_help=False)
    base.add_argument("--limit", type=int, default=DEFAULT_ENUM_LIMIT,
                        help=f"family enumeration limit (default {DEFAULT_ENUM_LIMIT})")
    base.add_argument("--cap", type=int, default=IE_SIZE_CAP,
                        help=f"inclusion-exclusion family size cap (default {IE_SIZE_CAP})")
    base.add_argument("--format", choices=("json", "pretty"), default="json")
    base.add_argument("--output", help="write output here instead of stdout")
    base.add_argument("--jobs", type=int, default=os.cpu_count() or 1,
                        help="worker processes (default: available CPUs)")
    common = argparse.ArgumentParser(add_help=False, parents=[base])
    common.add_argument("--max-n", type=int, default=DEFAULT_MAX_N,
                        help=f"ground-set size cap (default {DEFAULT_MAX_N})")

    p = argparse.ArgumentParser(prog="transmat", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, func, *files, parent=common):
        sp = sub.add_parser(name, parents=[parent])
        for f in files:
            sp.add_argument(f)
        sp.set_defaults(func=func)
        return sp

    add("show", cmd_show, "file")
    add("cyclic-flats", cmd_cyclic_flats, "file")
    add("beta", cmd_beta, "file").add_argument("--full", action="store_true",
                                               help="all subsets, not just cyclic flats")
    add("alpha", cmd_alpha, "file").add_argument("--full", action="store_true",
                                                 help="all subsets, not just cyclic flats")
    add("is-transversal", cmd_is_transversal, "file")
    add("max-presentation", cmd_max_presentation, "file")
    add("complete-presentation", cmd_complete_presentation, "file").add_argument(
        "--matroid", help="matroid the presentation should present (default: the one it presents)")
    add("is-fundamental", cmd_is_fundamental, "file").add_argument(
        "--method", choices=METHODS + ("all",), default="antichain")
    add("faces", cmd_faces, "file")
    add("dual", cmd_dual, "file")
    add("restrict", cmd_restrict, "file").add_argument("--set", required=True)
    add("contract", cmd_contract, "file").add_argument("--set", required=True)
    add("free-product", cmd_free_product, "first", "second")
    add("extend-fundamental", cmd_extend_fundamental, "file")
    g = add("gen", cmd_gen)
    g.add_argument("--family", required=True,
                   choices=("uniform", "mk4", "paper_p7", "parallel_pairs", "free", "rank0",
                            "random-transversal", "catalog"))
    g.add_argument("--n", type=int, default=0)
    g.add_argument("--r", type=int, default=0)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--index", type=int, default=0, help="catalog entry")
    o = add("oracle", cmd_oracle, "file")
    o.add_argument("--check", choices=("transversal", "ie"), default="transversal")
    o.add_argument("--bound", type=int, default=None, help="r_max for the transversal search")
    o.add_argument("--fast", action="store_true", help="prune with cyclic-flat column counts")
    o.add_argument("--oracle-max-n", type=int, default=ORACLE_MAX_N)
    c = add("check", cmd_check, parent=base)
    c.add_argument("--seed", type=int, default=0)
    c.add_argument("--max-n", dest="max_n_corpus", type=int, default=8,
                   help="largest corpus ground set (default 8)")
    c.add_argument("--pairs", type=int, default=30, help="free-product pairs to check")
    return p


def pretty(obj: Any, indent: int = 0) -> str:
    pad = "  " * indent
    if isinstance(obj, dict):
        lines = []
        for k, v in obj.items():
            if isinstance(v, (dict, list)) and v and any(isinstance(x, (dict, list)) for x in
                                                          (v.values() if isinstance(v, dict) else v)):
                lines.append(f"{pad}{k}:")
                lines.append(pretty(v, indent + 1))
            else:
                lines.append(f"{pad}{k}: {_scalar(v)}")
        return "\n".join(lines)
    if isinstance(obj, list):
        return "\n".join(pretty(x, indent) if isinstance(x, dict) else f"{pad}- {_scalar(x)}"
                         for x in obj)
    return pad + _scalar(obj)


def _scalar(v: Any) -> str:
    if isinstance(v, list):
        return "{" + ",".join(_scalar(x) for x in v) + "}" if all(isinstance(x, int) for x in v) \
            else "[" + ", ".join(_scalar(x) for x in v) + "]"
    if isinstance(v, dict):
        return ", ".join(f"{k}={_scalar(x)}" for k, x in v.items())
    return str(v).lower() if isinstance(v, bool) else str(v)


def _emit(args, payload) -> None:
    text = pretty(payload) if args.format == "pretty" else jsonio.dumps(payload)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    code = 0
    try:
        payload = args.func(args)
    except Exit as exc:
        code, payload = exc.code, exc.payload
    except (MatroidError, OSError) as exc:
        print(f"transmat {args.command}: {exc}", file=sys.stderr)
        return 2
    _emit(args, payload)
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
