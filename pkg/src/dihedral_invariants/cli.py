"""Command-line front end.

Exit codes: 0 success, 1 a check failed, 2 usage error.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from . import betti, hilbert, invariants, syzygy, wlp
from .exactmath import CycloElement
from .group import GroupElement, GroupParams, ParameterError, act_on_polynomial, check_d, \
    valid_a_values

FORMATS = ("json", "csv", "latex", "text")
MAX_VERIFY_D = 40


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    d_values: list
    a: int | None = None
    t_values: list | None = None
    seed: int = 0
    trials: int = 5
    format: str = "text"
    output: str | None = None

    @property
    def d(self) -> int:
        return self.d_values[0]


def parse_range(text: str) -> list[int]:
    """'3..5' -> [3, 4, 5]; a single integer is a one-element range."""
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            lo, hi = int(lo), int(hi)
        else:
            lo = hi = int(text)
    except ValueError:
        raise UsageError(f"bad range {text!r}, expected LO..HI")
    if hi < lo:
        raise UsageError(f"empty range {text!r}")
    return list(range(lo, hi + 1))


def build_config(args) -> RunConfig:
    if getattr(args, "d_range", None):
        ds = parse_range(args.d_range)
    elif getattr(args, "d", None) is not None:
        ds = [args.d]
    else:
        raise UsageError("one of --d or --d-range is required")
    for d in ds:
        try:
            check_d(d)
        except ParameterError as exc:
            raise UsageError(str(exc))
    a = getattr(args, "a", None)
    if a is not None:
        for d in ds:
            try:
                GroupParams(d, a)
            except ParameterError as exc:
                raise UsageError(str(exc))
    t_values = None
    if getattr(args, "t_range", None):
        t_values = parse_range(args.t_range)
    elif getattr(args, "t", None) is not None:
        t_values = [args.t]
    trials = getattr(args, "trials", 5)
    if trials < 1:
        raise UsageError("trials must be ≥ 1")
    return RunConfig(d_values=ds, a=a, t_values=t_values, seed=getattr(args, "seed", 0),
                     trials=trials, format=args.format, output=args.output)


def _csv(rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerows(rows)
    return buf.getvalue().rstrip("\n")


def _json(obj) -> str:
    return json.dumps(obj, indent=2)


# -- subcommands: each returns (text, exit code) --

def cmd_basis(cfg: RunConfig):
    d = cfg.d
    t_values = cfg.t_values or [1]
    for t in t_values:
        if t < 1:
            raise UsageError("t must be ≥ 1")
    bases = {t: invariants.graded_basis(d, t) for t in t_values}
    if cfg.format == "json":
        obj = [{"d": d, "t": t, "basis": [b.to_json() for b in basis]} for t, basis in bases.items()]
        return _json(obj[0] if len(obj) == 1 else obj), 0
    if cfg.format == "csv":
        rows = [["d", "t", "kind", "lead", "mirror"]]
        for t, basis in bases.items():
            for b in basis:
                rows.append([d, t, b.kind, " ".join(map(str, b.lead)),
                             " ".join(map(str, b.mirror)) if b.mirror else ""])
        return _csv(rows), 0
    if cfg.format == "latex":
        blocks = []
        for t, basis in bases.items():
            body = ", ".join(b.to_latex() for b in basis)
            blocks.append(r"$\mathcal{B}_{%d} = \{%s\}$" % (2 * d * t, body))
        return "\n".join(blocks), 0
    lines = []
    for t, basis in bases.items():
        lines.append(f"# d={d} t={t} degree={2 * d * t} size={len(basis)}")
        lines += [b.to_text() for b in basis]
    return "\n".join(lines), 0


def cmd_hilbert(cfg: RunConfig):
    t_values = cfg.t_values if cfg.t_values is not None else list(range(0, 6))
    reports = [hilbert.hilbert_series(d).to_json(t_values) for d in cfg.d_values]
    if cfg.format == "json":
        return _json(reports[0] if len(reports) == 1 else reports), 0
    if cfg.format == "csv":
        rows = [["d", "t", "hf"]]
        for rep in reports:
            rows += [[rep["d"], t, v] for t, v in zip(t_values, rep["hf"])]
        return _csv(rows), 0
    if cfg.format == "latex":
        lines = []
        for d in cfg.d_values:
            hs = hilbert.hilbert_series(d)
            c = hs.hs_numerator.coeffs
            lines.append(r"$HS(z) = \frac{%d z^2 + %d z + %d}{(1-z)^3}$" % (c[2], c[1], c[0]))
            lines.append(r"$HF(t) = %s$ for $t = %s$" % (
                ", ".join(str(hs.hf(t)) for t in t_values), ", ".join(map(str, t_values))))
        return "\n".join(lines), 0
    lines = []
    for rep in reports:
        s = rep["surface"]
        lines.append(f"d={rep['d']}")
        lines.append("hf: " + ", ".join(str(v) for v in rep["hf"]))
        lines.append(f"hs numerator: {hilbert.hilbert_series(rep['d']).hs_numerator}")
        lines.append(f"surface: degree={s['degree']} codim={s['codim']} cm_type={s['cm_type']} "
                     f"h={s['h']} regularity={s['regularity']} gorenstein={s['gorenstein']}")
    return "\n".join(lines), 0


def cmd_wlp(cfg: RunConfig):
    reports = [wlp.wlp_failure_check(d, cfg.seed, cfg.trials, cfg.a) for d in cfg.d_values]
    code = 0 if all(r.certified for r in reports) else 1
    if cfg.format == "json":
        obj = [r.to_json() for r in reports]
        return _json(obj[0] if len(obj) == 1 else obj), code
    if cfg.format == "csv":
        fields = ["d", "mu", "bound_ok", "source_dim", "target_dim", "observed_rank",
                  "witness_verified", "trials", "seed", "certified"]
        rows = [fields] + [[r.to_json()[f] for f in fields] for r in reports]
        return _csv(rows), code
    lines = []
    for r in reports:
        if cfg.format == "latex":
            lines.append(r"$d=%d$: $\mu_{%d}=%d \le %d$, $\operatorname{rank}(\times L) = %d < %d$"
                         % (r.d, 2 * r.d, r.mu, 2 * r.d + 1, r.observed_rank,
                            min(r.source_dim, r.target_dim)))
        else:
            lines.append(f"d={r.d} mu={r.mu} bound_ok={r.bound_ok} "
                         f"map {r.source_dim} -> {r.target_dim} observed_rank={r.observed_rank} "
                         f"witness_verified={r.witness_verified} trials={r.trials} seed={r.seed} "
                         f"certified={r.certified}")
    return "\n".join(lines), code


def cmd_syzygy(cfg: RunConfig):
    blocks = []
    out_json = []
    rows = [["d", "kind", "relation"]]
    for d in cfg.d_values:
        rels = syzygy.surface_generators(d)
        nb = sum(r.kind == syzygy.BINOMIAL for r in rels)
        nt = len(rels) - nb
        ok = all(syzygy.verify_relation(r, d) for r in rels)
        out_json.append({"d": d, "count": len(rels), "binomials": nb, "trinomials": nt,
                         "verified": ok, "relations": [r.to_json() for r in rels]})
        rows += [[d, r.kind, r.to_text()] for r in rels]
        if cfg.format == "latex":
            blocks.append(f"% d={d}: {nb} binomials and {nt} trinomials\n" + syzygy.relations_latex(rels))
        else:
            blocks.append(f"# d={d}: {len(rels)} quadrics ({nb} binomials, {nt} trinomials), "
                          f"verified={ok}\n" + "\n".join(r.to_text() for r in rels))
    code = 0 if all(o["verified"] for o in out_json) else 1
    if cfg.format == "json":
        return _json(out_json[0] if len(out_json) == 1 else out_json), code
    if cfg.format == "csv":
        return _csv(rows), code
    return "\n".join(blocks), code


def cmd_betti(cfg: RunConfig):
    tables = [betti.betti_table(d) for d in cfg.d_values]
    checks = [betti.betti_structural_checks(d) for d in cfg.d_values]
    code = 0 if all(c["passed"] for c in checks) else 1
    if cfg.format == "json":
        obj = []
        for t, c in zip(tables, checks):
            o = t.to_json()
            o["kpolynomial"] = list(betti.kpolynomial(t).coeffs)
            o["checks"] = c["checks"]
            o["info"] = c["info"]
            obj.append(o)
        return _json(obj[0] if len(obj) == 1 else obj), code
    if cfg.format == "csv":
        rows = [["d", "i", "b_i1", "b_i2"]]
        for t in tables:
            rows += [[t.d, i, b1, b2] for i, (b1, b2) in enumerate(t.entries, start=1)]
        return _csv(rows), code
    if cfg.format == "latex":
        return "\n\n".join(betti.resolution_latex(t) + "\n" + betti.betti_latex_grid(t)
                           for t in tables), code
    return "\n\n".join(f"d={t.d} C={t.C} h={t.h}\n" + betti.betti_text(t) for t in tables), code


# -- verify --

def _check_hf(d: int, t_max: int = 3) -> bool:
    a_values = valid_a_values(d) if d <= 10 else valid_a_values(d)[:1]
    for t in range(1, t_max + 1):
        want = hilbert.hf_closed(d, t)
        if hilbert.hf_count_oracle(d, t) != want or len(invariants.graded_basis(d, t)) != want:
            return False
        if any(hilbert.hf_trace_oracle(d, a, t) != want for a in a_values):
            return False
    return True


def _check_basis_invariance(d: int) -> bool:
    p = GroupParams(d, valid_a_values(d)[0])
    generators = [GroupElement(1, False), GroupElement(0, True)]
    for inv in invariants.fundamental_invariants(d):
        f = {m: CycloElement(2 * d, [c]) for m, c in inv.polynomial().items()}
        for g in generators:
            if act_on_polynomial(g, f, p, 2 * d) != f:
                return False
    return True


def _check_relations(d: int) -> bool:
    return (all(syzygy.verify_relation(r, d) for r in syzygy.kernel_quadrics(d))
            and all(syzygy.verify_relation(r, d) for r in syzygy.surface_generators(d)))


BETTI_FIXTURES = {
    3: ((9, 0), (16, 0), (9, 0), (0, 1)),
    4: ((20, 0), (64, 0), (90, 0), (64, 0), (20, 0), (0, 1)),
    5: ((26, 0), (98, 0), (168, 0), (154, 0), (70, 0), (6, 7), (0, 2)),
}


def verify_one(d: int, seed: int, trials: int) -> dict:
    report = wlp.wlp_failure_check(d, seed, trials)
    checks = {
        "hf_three_way": _check_hf(d),
        "mu_bound": wlp.mu_bound_check(d),
        "basis_group_invariance": _check_basis_invariance(d),
        "wlp_certificate": report.certified,
        "quadric_count": len(syzygy.kernel_quadrics(d)) == syzygy.quadric_count_formula(d),
        "relations_verified": _check_relations(d),
        "kpolynomial_identity": betti.kpolynomial_check(d),
        "betti_structure": betti.betti_structural_checks(d)["passed"],
    }
    if d in BETTI_FIXTURES:
        checks["betti_fixture"] = betti.betti_table(d).entries == BETTI_FIXTURES[d]
    return {"d": d, "checks": checks, "passed": all(checks.values())}


def _workers(n_jobs: int) -> int:
    cap = os.environ.get("GT_THREADS")
    n = os.cpu_count() or 1
    if cap:
        try:
            n = min(n, max(1, int(cap)))
        except ValueError:
            raise UsageError(f"GT_THREADS must be an integer, got {cap!r}")
    return max(1, min(n, n_jobs))


def cmd_verify(cfg: RunConfig):
    if max(cfg.d_values) > MAX_VERIFY_D:
        raise UsageError(f"verify supports d up to {MAX_VERIFY_D}")
    workers = _workers(len(cfg.d_values))
    if workers == 1:
        results = [verify_one(d, cfg.seed, cfg.trials) for d in cfg.d_values]
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            futures = [pool.submit(verify_one, d, cfg.seed, cfg.trials) for d in cfg.d_values]
            results = [f.result() for f in futures]
    results.sort(key=lambda r: r["d"])
    passed = all(r["passed"] for r in results)
    code = 0 if passed else 1
    if cfg.format == "json":
        return _json({"seed": cfg.seed, "trials": cfg.trials, "passed": passed,
                      "results": results}), code
    rows = [(r["d"], name, ok) for r in results for name, ok in r["checks"].items()]
    if cfg.format == "csv":
        return _csv([["d", "check", "passed"]] + [list(x) for x in rows]), code
    if cfg.format == "latex":
        lines = [r"\begin{tabular}{rll}", r"$d$ & check & result \\ \hline"]
        for d, name, ok in rows:
            label = name.replace("_", r"\_")
            lines.append(f"{d} & {label} & {'pass' if ok else 'FAIL'} " + r"\\")
        lines.append(r"\end{tabular}")
        return "\n".join(lines), code
    lines = [f"d={d:<3} {name:<24} {'PASS' if ok else 'FAIL'}" for d, name, ok in rows]
    failing = [f"d={d}:{name}" for d, name, ok in rows if not ok]
    lines.append("all checks passed" if passed else "FAILED: " + ", ".join(failing))
    return "\n".join(lines), code


COMMANDS = {"basis": cmd_basis, "hilbert": cmd_hilbert, "wlp": cmd_wlp,
            "syzygy": cmd_syzygy, "betti": cmd_betti, "verify": cmd_verify}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gt-dihedral",
        description="Invariants of the extended dihedral group and the associated GT-surfaces.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, d_range=True, t=False, a=False, seed=False):
        p.add_argument("--d", type=int, help="group order parameter, d >= 3")
        if d_range:
            p.add_argument("--d-range", help="inclusive range LO..HI")
        if t:
            p.add_argument("--t", type=int)
            p.add_argument("--t-range", help="inclusive range LO..HI")
        if a:
            p.add_argument("--a", type=int, help="representation parameter (default: smallest valid)")
        if seed:
            p.add_argument("--seed", type=int, default=0)
            p.add_argument("--trials", type=int, default=5)
        p.add_argument("--format", choices=FORMATS, default="text")
        p.add_argument("--output", help="write to this file instead of stdout")

    common(sub.add_parser("basis", help="graded basis B_2dt"), d_range=False, t=True)
    common(sub.add_parser("hilbert", help="Hilbert function, series, surface invariants"), t=True)
    common(sub.add_parser("wlp", help="Togliatti / WLP-failure certificate"), a=True, seed=True)
    common(sub.add_parser("syzygy", help="minimal quadric generators of the surface ideal"))
    common(sub.add_parser("betti", help="graded Betti table"))
    common(sub.add_parser("verify", help="run every cross-check over a range of d"), seed=True)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = build_config(args)
        text, code = COMMANDS[args.command](cfg)
    except (UsageError, ParameterError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if cfg.output:
        with open(cfg.output, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
