"""Command line entry point.

Exit codes: 0 success, 1 a check failed (a witness is printed), 2 usage or
parse error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .combinatorics import DyckPath, area_to_dyck, dyck_to_hessenberg, hessenberg_to_dyck, partition
from .csf import csf_bruteforce, csf_cobipartite, csf_dyck, csf_listing, greedy_weight
from .errors import ChromsymError, TooLarge
from .graphs import Board, SimpleGraph, board_is_ferrers, ferrers_board, is_abelian, poset_from_hessenberg
from .listings import (
    PartListing,
    decompose_bico,
    greedy_weight_31free,
    lex_maximal_listing,
    matching_probabilities,
    poset_from_listing,
    unit_interval_hessenberg,
)
from .symfunc import SymFunc, convert

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _ints(text: str) -> tuple:
    try:
        return tuple(int(t) for t in text.split(",") if t.strip())
    except ValueError:
        raise UsageError(f"expected comma-separated integers, got {text!r}")


def _load_json(text: str):
    if text.startswith("@"):
        with open(text[1:]) as fh:
            return json.load(fh)
    return json.loads(text)


# ---------------------------------------------------------------------------
# shared input handling
# ---------------------------------------------------------------------------

def _add_source(p, symfunc=False):
    g = p.add_argument_group("input (pick one)")
    g.add_argument("--dyck", help="Dyck path as n/e steps")
    g.add_argument("--hessenberg", help="Hessenberg function, e.g. 3,3,5,5,5")
    g.add_argument("--area", help="area sequence, e.g. 0,1,2,2,0")
    g.add_argument("--listing", help="part listing JSON (or @file)")
    g.add_argument("--graph", help="edges like 1-2,2-3 (needs --vertices)")
    g.add_argument("--vertices", type=int)
    g.add_argument("--board", help="cells like (1,1),(2,2) (needs --rows/--cols)")
    g.add_argument("--rows", type=int)
    g.add_argument("--cols", type=int)
    if symfunc:
        g.add_argument("--symfunc", help="SymFunc JSON (or @file)")


def _path(args):
    if args.dyck:
        return DyckPath.parse(args.dyck)
    if args.hessenberg:
        return hessenberg_to_dyck(_ints(args.hessenberg))
    if args.area:
        return area_to_dyck(_ints(args.area))
    return None


def _listing(args):
    return PartListing.from_json(_load_json(args.listing)) if args.listing else None


def _source(args):
    """Return ``(kind, object)`` for the selected input."""
    given = [name for name in ("dyck", "hessenberg", "area", "listing", "graph", "board", "symfunc")
             if getattr(args, name, None) is not None]
    if len(given) != 1:
        raise UsageError("give exactly one input option")
    d = _path(args)
    if d is not None:
        return "dyck", d
    if args.listing:
        return "listing", _listing(args)
    if args.graph is not None:
        if not args.vertices:
            raise UsageError("--graph needs --vertices")
        return "graph", SimpleGraph.parse(args.vertices, args.graph)
    if args.board:
        if not (args.rows and args.cols):
            raise UsageError("--board needs --rows and --cols")
        return "board", Board.parse(args.rows, args.cols, args.board)
    return "symfunc", SymFunc.from_dict(_load_json(args.symfunc))


def _csf(kind, obj) -> SymFunc:
    if kind == "dyck":
        return csf_dyck(obj)
    if kind == "listing":
        return csf_listing(obj)
    if kind == "graph":
        return csf_bruteforce(obj)
    if kind == "board":
        return csf_cobipartite(obj)
    return convert(obj, "m")


def _greedy(kind, obj):
    if kind == "dyck":
        return greedy_weight(obj)
    if kind == "listing":
        return greedy_weight_31free(obj)
    return None


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------

def cmd_csf(args):
    kind, obj = _source(args)
    X = convert(_csf(kind, obj), args.basis)
    out = X.to_dict()
    lam = _greedy(kind, obj)
    if lam is not None:
        out["greedy_weight"] = list(lam)
    return EXIT_OK, out


def cmd_newton(args):
    from .newton import expand_support, is_m_convex, is_snp, newton_equals_permutahedron

    kind, obj = _source(args)
    X = _csf(kind, obj)
    S = expand_support(X, args.k)
    lam = partition(_ints(args.lam)) if args.lam else _greedy(kind, obj)
    out = {"k": args.k, "degree": X.degree, "points": len(S)}
    ok = True
    if lam is not None:
        eq = newton_equals_permutahedron(X, args.k, lam)
        out.update({"lambda": list(lam), "equals_permutahedron": eq})
        ok &= eq
    mc = is_m_convex(S)
    out["m_convex"] = mc.ok
    out["m_convex_witness"] = None if mc.ok else {"alpha": list(mc.witness[0]), "beta": list(mc.witness[1]), "i": mc.witness[2]}
    ok &= mc.ok
    if args.snp:
        snp = is_snp(S)
        out["snp"] = snp.ok
        out["snp_witness"] = None if snp.ok else list(snp.witness)
        ok &= snp.ok
    if args.points:
        out["support"] = [list(p) for p in sorted(S.points)]
    return (EXIT_OK if ok else EXIT_FAIL), out


def cmd_lorentzian(args):
    from .lorentzian import discrete_log_concavity, is_lorentzian, lorentzian_report, probe_stability

    kind, obj = _source(args)
    X = _csf(kind, obj)
    out = lorentzian_report(is_lorentzian(X, args.k, exhaustive=args.exhaustive,
                                          unrestricted=args.unrestricted))
    out["k"] = args.k
    ok = out["lorentzian"]
    if kind == "dyck":
        out["abelian"] = is_abelian(obj)
    if args.log_concavity:
        v = discrete_log_concavity(X, args.k)
        out["log_concavity"] = v.ok
        ok &= v.ok
    if args.stability:
        rep = probe_stability(X, args.k, args.stability, args.seed)
        out["stability"] = rep
        ok &= rep["failed"] == 0
    return (EXIT_OK if ok else EXIT_FAIL), out


def cmd_scan(args):
    from .scan import CHECKS, ScanConfig, run_scan

    checks = tuple(c.strip() for c in args.checks.split(",")) if args.checks else ("lorentzian",)
    bad = [c for c in checks if c not in CHECKS]
    if bad:
        raise UsageError(f"unknown checks {bad}; choose from {','.join(CHECKS)}")
    cfg = ScanConfig(args.n, args.k, checks, k_min=args.k_min, trials=args.trials, seed=args.seed,
                     workers=args.workers, force=args.force)
    report = run_scan(cfg, include_timing=args.timing)
    failed = any(s["fail"] for s in report["summary"].values())
    if args.output:
        from .scan import report_json

        with open(args.output, "w") as fh:
            fh.write(report_json(report, indent=1) + "\n")
    if args.summary_only:
        report = {k: v for k, v in report.items() if k != "instances"}
    return (EXIT_FAIL if failed else EXIT_OK), report


def cmd_zeta(args):
    from .combinatorics import enumerate_dyck, zeta
    from .scan import zeta_conjecture_check

    if args.all:
        results = {}
        for d in enumerate_dyck(args.all):
            v = zeta_conjecture_check(d)
            results[d.steps] = {"pass": v.ok, **v.detail}
        bad = [p for p, r in results.items() if not r["pass"]]
        return (EXIT_FAIL if bad else EXIT_OK), {"n": args.all, "checked": len(results), "failures": bad}
    if args.apply:
        return EXIT_OK, {"input": args.apply, "zeta": zeta(DyckPath.parse(args.apply)).steps}
    d = _path(args)
    if d is None:
        raise UsageError("give --dyck, --hessenberg, --area, --apply or --all")
    v = zeta_conjecture_check(d)
    return (EXIT_OK if v.ok else EXIT_FAIL), {"pass": v.ok, **v.detail}


def cmd_rook(args):
    from .polys import is_real_rooted
    from .rooks import (
        hit_numbers,
        hit_polynomial,
        permanent,
        raw_ulc_inequality,
        rook_numbers,
        ulc_inequality_check,
    )

    if args.matrix:
        A = [[int(ch) for ch in row.strip()] for row in args.matrix.split(";") if row.strip()]
        return EXIT_OK, {"permanent": permanent(A)}
    if args.ferrers:
        mu = partition(_ints(args.ferrers))
        B = ferrers_board(mu, args.rows, args.cols)
    elif args.board:
        if not (args.rows and args.cols):
            raise UsageError("--board needs --rows and --cols")
        B = Board.parse(args.rows, args.cols, args.board)
        mu = board_is_ferrers(B)
    else:
        raise UsageError("give --ferrers, --board or --matrix")
    r = rook_numbers(B)
    out = {"rows": B.n1, "cols": B.n2, "rook_numbers": list(r), "hit_numbers": list(hit_numbers(B)),
           "ferrers": list(mu) if mu else None}
    ok = True
    if mu:
        T = hit_polynomial(mu)
        out["hit_polynomial"] = T.to_strings()
        out["hit_polynomial_real_rooted"] = is_real_rooted(T)
    if args.ulc:
        n = B.n1 + B.n2
        holds, lhs, rhs = raw_ulc_inequality(r, n, args.ulc)
        out["raw_ulc"] = {"i": args.ulc, "holds": holds, "lhs": lhs, "rhs": rhs}
        if mu:
            out["ferrers_ulc"] = ulc_inequality_check(mu, args.ulc)
        ok = holds
    return (EXIT_OK if ok else EXIT_FAIL), out


def cmd_listing(args):
    L = _listing(args)
    d = _path(args)
    if L is not None:
        out = {"listing": str(L), "size": L.size, "greedy_weight": list(greedy_weight_31free(L))}
        pos = L.bico_positions()
        if pos:
            H = L.parts[pos[0]].graph
            out["q"] = [str(q) for q in matching_probabilities(H)]
            out["decomposition"] = [{"q": str(q), "listing": Lj.to_json()} for q, Lj in decompose_bico(L, pos[0])]
        else:
            P = poset_from_listing(L)
            out["hessenberg"] = list(unit_interval_hessenberg(P))
        return EXIT_OK, out
    if d is not None:
        a = lex_maximal_listing(poset_from_hessenberg(dyck_to_hessenberg(d)))
        return EXIT_OK, {"path": d.steps, "lex_maximal_listing": list(a), "d_prime": area_to_dyck(a).steps}
    raise UsageError("give --listing or a Dyck path")


def cmd_nonvanish(args):
    from .newton import nonvanishing_decision

    obj = _listing(args) or _path(args)
    if obj is None:
        raise UsageError("give a Dyck path or --listing")
    alpha = _ints(args.alpha)
    return EXIT_OK, {"alpha": list(alpha), "nonzero": nonvanishing_decision(obj, alpha)}


# ---------------------------------------------------------------------------
# output
# ---------------------------------------------------------------------------

def _pretty(obj, indent=0) -> str:
    pad = "  " * indent
    if isinstance(obj, dict):
        lines = []
        for k, v in obj.items():
            if isinstance(v, (dict, list)) and v and not all(isinstance(x, (int, str)) for x in v):
                lines.append(f"{pad}{k}:")
                lines.append(_pretty(v, indent + 1))
            else:
                lines.append(f"{pad}{k}: {_flat(v)}")
        return "\n".join(lines)
    if isinstance(obj, list):
        return "\n".join(_pretty(x, indent) if isinstance(x, dict) else f"{pad}- {_flat(x)}" for x in obj)
    return pad + _flat(obj)


def _flat(v) -> str:
    if isinstance(v, list):
        return "[" + ", ".join(_flat(x) for x in v) + "]"
    if isinstance(v, dict):
        return json.dumps(v, default=str)
    return str(v)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="chromsym", description=__doc__.splitlines()[0])
    ap.add_argument("--pretty", action="store_true", help="human readable output instead of JSON")
    # the flag is accepted after the subcommand too
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--pretty", action="store_true", default=argparse.SUPPRESS)
    sub = ap.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("csf", parents=[common], help="chromatic symmetric function")
    _add_source(p, symfunc=True)
    p.add_argument("--basis", choices=("m", "s", "e"), default="m")
    p.set_defaults(func=cmd_csf)

    p = sub.add_parser("newton", parents=[common], help="support, permutahedron, M-convexity, SNP")
    _add_source(p, symfunc=True)
    p.add_argument("-k", type=int, required=True)
    p.add_argument("--lambda", dest="lam", help="compare with this partition's permutahedron")
    p.add_argument("--snp", action="store_true", help="also run the convex hull SNP test")
    p.add_argument("--points", action="store_true", help="list the support points")
    p.set_defaults(func=cmd_newton)

    p = sub.add_parser("lorentzian", parents=[common], help="exact Lorentzian check")
    _add_source(p, symfunc=True)
    p.add_argument("-k", type=int, required=True)
    p.add_argument("--exhaustive", action="store_true", help="list every failing Hessian")
    p.add_argument("--unrestricted", action="store_true", help="visit unsorted alpha too")
    p.add_argument("--log-concavity", action="store_true")
    p.add_argument("--stability", type=int, default=0, metavar="TRIALS")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_lorentzian)

    p = sub.add_parser("scan", parents=[common], help="run checks over all Dyck paths of length n")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-k", type=int, required=True)
    p.add_argument("--k-min", type=int)
    p.add_argument("--checks", help="comma separated subset of the available checks")
    p.add_argument("--trials", type=int, default=20)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--force", action="store_true", help="allow n > 8 or k > 9")
    p.add_argument("--timing", action="store_true", help="include wall time in the report")
    p.add_argument("--output", help="also write the full JSON report here")
    p.add_argument("--summary-only", action="store_true")
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("zeta", parents=[common], help="zeta map and the listing correspondence")
    p.add_argument("--dyck")
    p.add_argument("--hessenberg")
    p.add_argument("--area")
    p.add_argument("--apply", help="just apply zeta to this path")
    p.add_argument("--all", type=int, metavar="N", help="check every path of length N")
    p.set_defaults(func=cmd_zeta)

    p = sub.add_parser("rook", parents=[common], help="rook and hit numbers, permanents")
    p.add_argument("--ferrers", help="partition, e.g. 2,2")
    p.add_argument("--board")
    p.add_argument("--rows", type=int)
    p.add_argument("--cols", type=int)
    p.add_argument("--ulc", type=int, metavar="I", help="test the ULC inequality at index I")
    p.add_argument("--matrix", help="0-1 rows separated by ';', e.g. 110;011;101")
    p.set_defaults(func=cmd_rook)

    p = sub.add_parser("listing", parents=[common], help="part listings and the bico decomposition")
    p.add_argument("--listing")
    p.add_argument("--dyck")
    p.add_argument("--hessenberg")
    p.add_argument("--area")
    p.set_defaults(func=cmd_listing)

    p = sub.add_parser("nonvanish", parents=[common], help="is a coefficient of X nonzero")
    p.add_argument("--dyck")
    p.add_argument("--hessenberg")
    p.add_argument("--area")
    p.add_argument("--listing")
    p.add_argument("--alpha", required=True)
    p.set_defaults(func=cmd_nonvanish)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        code, out = args.func(args)
    except TooLarge as exc:
        print(f"error: {exc} (use --force to override)", file=sys.stderr)
        return EXIT_USAGE
    except (UsageError, ChromsymError, json.JSONDecodeError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.pretty:
        print(_pretty(out))
    else:
        from .scan import stringify

        print(json.dumps(stringify(out), sort_keys=True))
    return code


if __name__ == "__main__":
    sys.exit(main())
