"""Command-line interface.

Exit codes: 0 on success, 1 when the data or parameters are outside what
the operation can handle, 2 on usage errors.
"""

import argparse
import csv
import io
import json
import sys

from .chain import ModelParams, n_step_matrix, simulate_bernoulli_chain, simulate_uniform_chain, stationary_distribution, transition_matrix, lambda2, transition_counts, BinaryPath, RealPath
from .errors import CopulaChainError, DegenerateData, DomainError
from .estimation import (
    indicator_estimate,
    mean_estimate,
    mle_ci,
    mle_half,
    robust_estimate,
)
from .inference import lrt
from .mixing import decay
from .montecarlo import (
    StudyConfig,
    COMPARISON_ESTIMATORS,
    MLE_ESTIMATORS,
    lrt_grid,
    mc_estimator_comparison,
    mc_mle_study,
    symmetry_report,
    table_study,
)
from .pathio import path_to_csv, read_path_csv
from .svgchart import emit_svg

_FORMATS = {
    "simulate": "csv",
    "transition": "json",
    "mixing": "csv",
    "estimate": "json",
    "lrt": "json",
    "mc": "json",
    "compare": "json",
    "lrt-grid": "csv",
    "table": "csv",
    "plot": "svg",
}


def _cell(v):
    if v is None:
        return ""
    if isinstance(v, bool):
        return str(int(v))
    if isinstance(v, float):
        return repr(v)
    return str(v)


def _csv_text(header, rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([_cell(v) for v in row])
    return buf.getvalue()


def _json_text(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _floats(text: str) -> list[float]:
    try:
        return [float(tok) for tok in text.split(",") if tok.strip() != ""]
    except ValueError:
        raise DomainError(f"could not parse float list {text!r}") from None


def _ints(text: str) -> list[int]:
    try:
        return [int(tok) for tok in text.split(",") if tok.strip() != ""]
    except ValueError:
        raise DomainError(f"could not parse integer list {text!r}") from None


def _estimate_dict(est, parameter=None) -> dict:
    d = {
        "method": est.method,
        "point": est.point,
        "stderr": est.stderr,
        "ci": [est.ci_low, est.ci_high],
        "alpha": est.alpha,
        "n": est.n,
        "regime": est.regime.value if est.regime is not None else None,
        "boundary": False,
    }
    if parameter is not None:
        d = {"parameter": parameter, **d}
    return d


def _boundary_dict(method, point, alpha, n, parameter=None) -> dict:
    d = {
        "method": method,
        "point": point,
        "stderr": None,
        "ci": None,
        "alpha": alpha,
        "n": n,
        "regime": None,
        "boundary": True,
    }
    if parameter is not None:
        d = {"parameter": parameter, **d}
    return d


def _cmd_simulate(args) -> str:
    if args.marginal == "uniform":
        path = simulate_uniform_chain(args.a, args.n, args.seed)
    else:
        if args.p is None:
            raise DomainError("--p is required for the bernoulli marginal")
        path = simulate_bernoulli_chain(ModelParams(args.a, args.p), args.n, args.seed)
    return path_to_csv(path)


def _cmd_transition(args) -> str:
    params = ModelParams(args.a, args.p)
    one = transition_matrix(params)
    out = {
        "a": params.a,
        "p": params.p,
        "regime": params.regime.value,
        "lambda2": lambda2(params),
        "stationary": list(stationary_distribution(params)),
        "matrix": one.as_dict(),
    }
    if args.steps is not None:
        out["steps"] = args.steps
        out["matrix_n"] = n_step_matrix(params, args.steps).as_dict()
    return _json_text(out)


def _cmd_mixing(args) -> str:
    params = ModelParams(args.a, args.p)
    psi = decay(params, "psi", args.lags).values
    phi = decay(params, "phi", args.lags).values
    rows = [[k + 1, float(psi[k]), float(phi[k])] for k in range(args.lags)]
    return _csv_text(["n", "psi", "phi"], rows)


def _cmd_estimate(args) -> str:
    path = read_path_csv(args.input)
    method = args.method
    if method == "indicator":
        if not isinstance(path, RealPath):
            raise DomainError("the indicator method expects a path with values in [0, 1], not a binary one")
        try:
            est = indicator_estimate(path, args.alpha)
        except DegenerateData as e:
            return _json_text(_boundary_dict("indicator", e.point, args.alpha, path.n))
        return _json_text(_estimate_dict(est))
    if not isinstance(path, BinaryPath):
        raise DomainError(f"the {method} method expects a binary path")
    if method == "mle":
        counts = transition_counts(path)
        try:
            est_a, est_p = mle_ci(counts, args.alpha)
        except DegenerateData as e:
            return _json_text(
                [
                    _boundary_dict("mle", e.a, args.alpha, path.n, parameter="a"),
                    _boundary_dict("mle", e.p, args.alpha, path.n, parameter="p"),
                ]
            )
        return _json_text([_estimate_dict(est_a, "a"), _estimate_dict(est_p, "p")])
    if method == "mle-half":
        try:
            est = mle_half(transition_counts(path), args.alpha)
        except DegenerateData as e:
            return _json_text(_boundary_dict("mle-half", e.point, args.alpha, path.n))
        return _json_text(_estimate_dict(est))
    if method == "mean":
        try:
            est = mean_estimate(path, args.alpha)
        except DegenerateData as e:
            return _json_text(_boundary_dict("mean", e.point, args.alpha, path.n))
        return _json_text(_estimate_dict(est))
    est = robust_estimate(path, args.alpha, noise_seed=args.noise_seed)
    return _json_text(_estimate_dict(est))


def _cmd_lrt(args) -> str:
    path = read_path_csv(args.input)
    if not isinstance(path, BinaryPath):
        raise DomainError("the independence test expects a binary path")
    res = lrt(path, args.alpha)
    return _json_text(
        {
            "statistic": res.statistic,
            "df": res.df,
            "p_value": res.p_value,
            "alpha": res.alpha,
            "threshold": res.threshold,
            "decision": res.decision,
            "clamped": res.clamped,
            "regime": res.regime.value,
        }
    )


def _per_rep_rows(report):
    rows = []
    for r in report.rows:
        rows.append(
            [r.rep, r.estimator, r.point, r.ci_lo, r.ci_hi, r.covered, r.length, r.degenerate]
        )
    return _csv_text(
        ["rep", "estimator", "point", "ci_lo", "ci_hi", "covered", "length", "degenerate"], rows
    )


def _cmd_mc(args) -> str:
    cfg = StudyConfig(
        a=args.a,
        p=args.p,
        n=args.n,
        reps=args.reps,
        alpha=args.alpha,
        master_seed=args.seed,
        estimators=MLE_ESTIMATORS,
    )
    report = mc_mle_study(cfg, keep_rows=args.per_rep is not None)
    if args.per_rep:
        with open(args.per_rep, "w", encoding="utf-8") as fh:
            fh.write(_per_rep_rows(report))
    return _json_text(report.as_dict())


def _cmd_compare(args) -> str:
    cfg = StudyConfig(
        a=args.a,
        p=args.p,
        n=args.n,
        reps=args.reps,
        alpha=args.alpha,
        master_seed=args.seed,
        estimators=COMPARISON_ESTIMATORS,
    )
    report = mc_estimator_comparison(cfg, keep_rows=args.per_rep is not None)
    if args.per_rep:
        with open(args.per_rep, "w", encoding="utf-8") as fh:
            fh.write(_per_rep_rows(report))
    return _json_text(report.as_dict())


def _cmd_lrt_grid(args) -> str:
    cells = lrt_grid(_floats(args.a_values), _floats(args.p_values), args.n, args.seed, args.alpha)
    rows = []
    for c in cells:
        if c.degenerate:
            rows.append([c.a, c.p, None, None, "degenerate"])
        else:
            rows.append([c.a, c.p, c.result.statistic, c.result.p_value, c.result.decision])
    return _csv_text(["a", "p", "statistic", "p_value", "decision"], rows)


def _cmd_table(args) -> str:
    header, rows = table_study(args.which, _ints(args.n_values), args.reps, args.seed, args.alpha)
    return _csv_text(header, rows)


def _cmd_plot(args) -> str:
    if args.kind == "mixing":
        if args.p is None:
            raise DomainError("--p is required for the mixing plot")
        params = ModelParams(args.a, args.p)
        lags = list(range(1, args.lags + 1))
        psi = decay(params, "psi", args.lags).values
        phi = decay(params, "phi", args.lags).values
        return emit_svg(
            [("psi", list(zip(lags, psi))), ("phi", list(zip(lags, phi)))],
            title=f"Mixing decay at a={args.a}, p={args.p}",
            xlabel="lag",
            ylabel="coefficient",
        )
    rows = symmetry_report(args.a, _floats(args.p_values), args.n, args.reps, args.seed, args.alpha)
    return emit_svg(
        [
            ("simulated", [(r.p, r.mc_ciml) for r in rows]),
            ("closed form", [(r.p, r.closed_ciml) for r in rows]),
        ],
        title=f"Mean CI length for p at a={args.a}, n={args.n}",
        xlabel="p",
        ylabel="interval length",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="copulachain",
        description="Simulation and inference for two-state copula-based Markov chains.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--out", help="write output to this file instead of stdout")
        sp.add_argument("--format", help="output format (each command has a fixed native format)")

    sp = sub.add_parser("simulate", help="simulate a path and write it as CSV")
    sp.add_argument("--a", type=float, required=True)
    sp.add_argument("--p", type=float)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--marginal", choices=["bernoulli", "uniform"], default="bernoulli")
    common(sp)
    sp.set_defaults(func=_cmd_simulate)

    sp = sub.add_parser("transition", help="print the transition matrix as JSON")
    sp.add_argument("--a", type=float, required=True)
    sp.add_argument("--p", type=float, required=True)
    sp.add_argument("--steps", type=int)
    common(sp)
    sp.set_defaults(func=_cmd_transition)

    sp = sub.add_parser("mixing", help="closed-form mixing decay as CSV")
    sp.add_argument("--a", type=float, required=True)
    sp.add_argument("--p", type=float, required=True)
    sp.add_argument("--lags", type=int, default=50)
    common(sp)
    sp.set_defaults(func=_cmd_mixing)

    sp = sub.add_parser("estimate", help="estimate parameters from a path CSV")
    sp.add_argument("--input", required=True)
    sp.add_argument(
        "--method",
        choices=["mle", "mle-half", "mean", "robust", "indicator"],
        default="mle",
    )
    sp.add_argument("--alpha", type=float, default=0.05)
    sp.add_argument("--noise-seed", type=int, default=0)
    common(sp)
    sp.set_defaults(func=_cmd_estimate)

    sp = sub.add_parser("lrt", help="likelihood-ratio independence test on a path CSV")
    sp.add_argument("--input", required=True)
    sp.add_argument("--alpha", type=float, default=0.05)
    common(sp)
    sp.set_defaults(func=_cmd_lrt)

    sp = sub.add_parser("mc", help="replicated coverage study of the MLE intervals")
    sp.add_argument("--a", type=float, required=True)
    sp.add_argument("--p", type=float, required=True)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--reps", type=int, default=400)
    sp.add_argument("--alpha", type=float, default=0.05)
    sp.add_argument("--seed", type=int, default=20260814)
    sp.add_argument("--per-rep", help="also write one CSV row per replication to this file")
    common(sp)
    sp.set_defaults(func=_cmd_mc)

    sp = sub.add_parser("compare", help="coverage study comparing the three estimators of p")
    sp.add_argument("--a", type=float, required=True)
    sp.add_argument("--p", type=float, required=True)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--reps", type=int, default=400)
    sp.add_argument("--alpha", type=float, default=0.05)
    sp.add_argument("--seed", type=int, default=20260814)
    sp.add_argument("--per-rep", help="also write one CSV row per replication to this file")
    common(sp)
    sp.set_defaults(func=_cmd_compare)

    sp = sub.add_parser("lrt-grid", help="run the independence test across an (a, p) grid")
    sp.add_argument("--a-values", required=True)
    sp.add_argument("--p-values", required=True)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--seed", type=int, default=20260814)
    sp.add_argument("--alpha", type=float, default=0.05)
    common(sp)
    sp.set_defaults(func=_cmd_lrt_grid)

    sp = sub.add_parser("table", help="desk-scale reproduction of the study tables")
    sp.add_argument(
        "--which",
        choices=["mle-less", "mle-geq", "compare-less", "compare-geq"],
        required=True,
    )
    sp.add_argument("--n-values", default="499")
    sp.add_argument("--reps", type=int, default=100)
    sp.add_argument("--seed", type=int, default=20260814)
    sp.add_argument("--alpha", type=float, default=0.05)
    common(sp)
    sp.set_defaults(func=_cmd_table)

    sp = sub.add_parser("plot", help="render an SVG chart")
    sp.add_argument("--kind", choices=["symmetry", "mixing"], required=True)
    sp.add_argument("--a", type=float, required=True)
    sp.add_argument("--p", type=float)
    sp.add_argument("--p-values", default="0.1,0.2,0.3,0.4,0.5,0.6,0.7,0.8,0.9")
    sp.add_argument("--n", type=int, default=999)
    sp.add_argument("--reps", type=int, default=100)
    sp.add_argument("--lags", type=int, default=50)
    sp.add_argument("--seed", type=int, default=20260814)
    sp.add_argument("--alpha", type=float, default=0.05)
    common(sp)
    sp.set_defaults(func=_cmd_plot)

    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code) if e.code is not None else 0
    fmt = _FORMATS[args.command]
    if args.format is not None and args.format != fmt:
        sys.stderr.write(f"error: the {args.command} command only writes {fmt}\n")
        return 2
    try:
        text = args.func(args)
        _emit(text, args.out)
    except (CopulaChainError, OSError) as e:
        sys.stderr.write(f"{type(e).__name__}: {e}\n")
        return 1
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
