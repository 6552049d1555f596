"""Scan harness: run selected checks over every Dyck path of one length."""

from __future__ import annotations

import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from fractions import Fraction

from .combinatorics import DyckPath, area_to_dyck, dominance_leq, dyck_to_hessenberg, enumerate_dyck, zeta
from .csf import csf_dyck, greedy_weight
from .errors import ChromsymError, TooLarge
from .graphs import is_abelian, poset_from_hessenberg
from .listings import lex_maximal_listing
from .lorentzian import discrete_log_concavity, is_lorentzian, lorentzian_report, probe_stability
from .newton import Verdict, expand_support, is_m_convex, newton_equals_permutahedron

CHECKS = ("newton", "m_convex", "lorentzian", "log_concavity", "stability", "zeta", "greedy_dominance")
SCHEMA = 1
MAX_N, MAX_K = 8, 9


@dataclass(frozen=True)
class ScanConfig:
    n: int
    k: int
    checks: tuple = ("lorentzian",)
    k_min: int = None  # scan k_min..k; defaults to k alone
    trials: int = 20
    seed: int = 0
    workers: int = 1
    force: bool = False

    def __post_init__(self):
        object.__setattr__(self, "checks", tuple(c for c in CHECKS if c in set(self.checks)))
        if self.n < 1 or self.k < 1:
            raise ChromsymError("n and k must be positive")
        if not self.checks:
            raise ChromsymError("select at least one check")
        bad = set(self.checks) - set(CHECKS)
        if bad:
            raise ChromsymError(f"unknown checks {sorted(bad)}")
        if self.k_min is not None and not 1 <= self.k_min <= self.k:
            raise ChromsymError("k_min must lie in 1..k")
        if not self.force and (self.n > MAX_N or self.k > MAX_K):
            raise TooLarge(f"n > {MAX_N} or k > {MAX_K} needs force")

    @property
    def ks(self):
        return range(self.k_min or self.k, self.k + 1)


def zeta_conjecture_check(d: DyckPath) -> Verdict:
    """Does zeta map the path of the lex-maximal listing of P(d) back to d?"""
    P = poset_from_hessenberg(dyck_to_hessenberg(d))
    a = lex_maximal_listing(P)
    d_prime = area_to_dyck(a)
    image = zeta(d_prime)
    detail = {"listing": list(a), "d_prime": d_prime.steps, "zeta": image.steps, "expected": d.steps}
    return Verdict(image == d, None if image == d else d.steps, detail)


def _greedy_dominance(d, X) -> dict:
    lam = greedy_weight(d)
    support = X.support()
    bad = [list(mu) for mu in support if not dominance_leq(mu, lam)]
    ok = not bad and lam in support
    return {"pass": ok, "greedy": list(lam), "undominated": bad, "greedy_in_support": lam in support}


def check_instance(d: DyckPath, cfg: ScanConfig) -> dict:
    out = {}
    X = csf_dyck(d)
    lam = greedy_weight(d)
    abelian = is_abelian(d)
    for check in cfg.checks:
        try:
            if check == "greedy_dominance":
                out[check] = _greedy_dominance(d, X)
            elif check == "zeta":
                v = zeta_conjecture_check(d)
                out[check] = {"pass": v.ok, **v.detail}
            else:
                per_k = {}
                for k in cfg.ks:
                    per_k[str(k)] = _per_k(check, d, X, lam, k, cfg)
                out[check] = {"pass": all(r["pass"] for r in per_k.values()), "by_k": per_k}
                if check == "lorentzian":
                    out[check]["theorem"] = abelian
        except ChromsymError as exc:
            out[check] = {"pass": False, "error": f"{type(exc).__name__}: {exc}"}
    return out


def _per_k(check, d, X, lam, k, cfg) -> dict:
    if check == "newton":
        return {"pass": newton_equals_permutahedron(X, k, lam), "lambda": list(lam)}
    if check == "m_convex":
        v = is_m_convex(expand_support(X, k), method="scan")
        return {"pass": v.ok, "witness": None if v.ok else [list(v.witness[0]), list(v.witness[1]), v.witness[2]]}
    if check == "lorentzian":
        if X.degree < 2:
            # nonnegative forms of degree <= 1 with M-convex support are Lorentzian by definition
            mc = is_m_convex(expand_support(X, k)).ok
            return {"pass": mc, "m_convex": mc, "hessians_checked": 0,
                    "max_positive_eigenvalues": 0, "witness": None}
        rep = lorentzian_report(is_lorentzian(X, k))
        return {"pass": rep.pop("lorentzian"), **rep}
    if check == "log_concavity":
        v = discrete_log_concavity(X, k)
        return {"pass": v.ok, "witness": None if v.ok else [list(v.witness[0]), v.witness[1], v.witness[2]]}
    if check == "stability":
        rep = probe_stability(X, k, cfg.trials, cfg.seed)
        return {"pass": rep["failed"] == 0, **rep}
    raise ChromsymError(f"unknown check {check}")


def _run_one(args):
    steps, cfg = args
    return steps, check_instance(DyckPath(steps), cfg)


def run_scan(cfg: ScanConfig, include_timing: bool = False) -> dict:
    """Deterministic report; worker count never changes the output."""
    start = time.perf_counter()
    paths = [d.steps for d in enumerate_dyck(cfg.n, force=cfg.force)]
    jobs = [(p, cfg) for p in paths]
    if cfg.workers > 1:
        with ProcessPoolExecutor(max_workers=cfg.workers) as pool:
            results = dict(pool.map(_run_one, jobs, chunksize=max(1, len(jobs) // (4 * cfg.workers))))
    else:
        results = dict(map(_run_one, jobs))
    summary = {}
    for check in cfg.checks:
        passed = sum(1 for p in paths if results[p][check]["pass"])
        summary[check] = {"pass": passed, "fail": len(paths) - passed}
    report = {
        "schema": SCHEMA,
        "config": {k: v for k, v in asdict(cfg).items() if k not in ("workers", "force")},
        "instances": {p: results[p] for p in sorted(paths)},
        "instance_count": len(paths),
        "summary": summary,
    }
    if include_timing:
        report["timing_seconds"] = round(time.perf_counter() - start, 3)
    return report


def failures(report: dict) -> dict:
    """``{check: [path, ...]}`` for every failing instance."""
    out = {}
    for path, res in report["instances"].items():
        for check, r in res.items():
            if not r["pass"]:
                out.setdefault(check, []).append(path)
    return out


def stringify(obj):
    """Numbers become decimal strings; bools, None and strings stay as they are."""
    if isinstance(obj, bool) or obj is None or isinstance(obj, str):
        return obj
    if isinstance(obj, (int, float, Fraction)):
        return str(obj)
    if isinstance(obj, dict):
        return {str(k): stringify(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [stringify(v) for v in obj]
    return str(obj)


def report_json(report: dict, indent=None) -> str:
    return json.dumps(stringify(report), sort_keys=True, indent=indent)
