"""Command-line entry point: ``qzn diagnose | examples | cost``."""
from __future__ import annotations

import argparse
import json
import math
import sys
from typing import Sequence

from . import baselines, cost, dataio, madm, worked_examples
from .errors import IngestionError
from .fidelity import FidelityMode, ModeKind

EXIT_OK, EXIT_INPUT, EXIT_NUMERIC = 0, 1, 2
ALGORITHMS = ("qzn", "zn", "qfs")


def _num(v: float):
    return None if v is None or math.isnan(v) else float(v)


def _angle_records(m: madm.ZMatrix) -> list[dict]:
    da, db = madm.rotation_angles(m).degrees()
    return [
        {"label": label, "theta_a": [float(v) for v in ra], "theta_b": [float(v) for v in rb]}
        for label, ra, rb in zip(m.row_labels, da, db)
    ]


def diagnose_report(
    szm: madm.ZMatrix,
    rzm: madm.ZMatrix,
    algorithm: str = "qzn",
    mode: FidelityMode = FidelityMode(),
    workers: int | None = None,
) -> dict:
    """Run one algorithm and return the JSON-ready report."""
    if algorithm == "qzn":
        scores = madm.build_qfm(szm, rzm, mode, workers).values
        report = madm.decide(scores, rzm.row_labels, szm.row_labels)
    elif algorithm == "qfs":
        qfm, report = baselines.qfs_pipeline(szm, rzm, mode, workers)
        scores = qfm.values
    elif algorithm == "zn":
        pm, report = baselines.zn_pipeline(szm, rzm)
        scores = pm.values
    else:
        raise ValueError(f"unknown algorithm {algorithm!r}")
    config = {"algorithm": algorithm, **mode.to_dict()}
    if algorithm == "zn":
        config.update(mode="classical", shots=None, seed=None)
    return {
        "config": config,
        "angles": {"samples": _angle_records(szm), "references": _angle_records(rzm)},
        "scores": [[_num(v) for v in row] for row in scores],
        "decisions": [
            {"sample": d.sample, "reference": d.reference, "score": _num(d.score) if d.index is not None else None, "tie": d.tie}
            for d in report
        ],
    }


def render_text(report: dict) -> str:
    out = [f"algorithm: {report['config']['algorithm']}  mode: {report['config']['mode']}"]
    if report["config"].get("shots"):
        out[-1] += f"  shots: {report['config']['shots']}  seed: {report['config']['seed']}"
    for role in ("samples", "references"):
        out.append("")
        out.append(f"rotation angles, {role} (degrees)")
        for rec in report["angles"][role]:
            a = " ".join(f"{v:8.3f}" for v in rec["theta_a"])
            b = " ".join(f"{v:8.3f}" for v in rec["theta_b"])
            out.append(f"  {rec['label']:<16} A: {a}   B: {b}")
    out.append("")
    refs = [r["label"] for r in report["angles"]["references"]]
    out.append("scores (rows: samples, columns: " + ", ".join(refs) + ")")
    for rec, row in zip(report["angles"]["samples"], report["scores"]):
        cells = " ".join("     n/a" if v is None else f"{v:8.4f}" for v in row)
        out.append(f"  {rec['label']:<16} {cells}")
    out.append("")
    out.append("decisions")
    for d in report["decisions"]:
        tie = "  (tie)" if d["tie"] else ""
        score = "n/a" if d["score"] is None else f"{d['score']:.4f}"
        out.append(f"  {d['sample']} -> {d['reference']}  [{score}]{tie}")
    return "\n".join(out)


def cmd_diagnose(args) -> int:
    path = args.input or dataio.bundled_path("medical.json")
    try:
        szm, rzm = dataio.ingest(path, args.input_format)
    except IngestionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    try:
        mode = FidelityMode.parse(args.mode, args.shots, args.seed)
        report = diagnose_report(szm, rzm, args.algorithm, mode, args.workers)
    except (ValueError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    text = json.dumps(report, indent=2) if args.format == "json" else render_text(report)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return EXIT_OK


def cmd_examples(args) -> int:
    checks = worked_examples.replay()
    print(worked_examples.render(checks))
    return EXIT_OK if all(c.passed for c in checks) else EXIT_NUMERIC


def cmd_cost(args) -> int:
    try:
        base = cost.CostParams(args.m, args.n, 1, args.epsilon)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    series = cost.crossover_series(base, range(1, args.k_max + 1))
    try:
        cost.write_csv(series, args.out)
    except OSError as exc:
        print(f"error: cannot write {args.out}: {exc}", file=sys.stderr)
        return EXIT_INPUT
    k_star = cost.crossover_k(series)
    where = f"K* = {k_star}" if k_star is not None else "no crossover in range"
    print(f"wrote {len(series)} rows to {args.out}; {where} (1/eps = {base.repetitions})")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qzn", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("diagnose", help="match samples to references")
    p.add_argument("input", nargs="?", help="JSON or CSV document (default: bundled medical case)")
    p.add_argument("--input-format", choices=("json", "csv"), default=None)
    p.add_argument("--algorithm", choices=ALGORITHMS, default="qzn")
    p.add_argument("--mode", choices=[k.value for k in ModeKind], default="exact")
    p.add_argument("--shots", type=int, default=None)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--out", default=None)
    p.add_argument("--workers", type=int, default=None)
    p.set_defaults(func=cmd_diagnose)

    p = sub.add_parser("examples", help="replay the worked QZN examples")
    p.set_defaults(func=cmd_examples)

    p = sub.add_parser("cost", help="write the quantum/classical cost series as CSV")
    p.add_argument("--m", type=int, default=10000)
    p.add_argument("--n", type=int, default=10000)
    p.add_argument("--epsilon", type=float, default=0.002)
    p.add_argument("--k-max", type=int, default=10000)
    p.add_argument("--out", default="cost.csv")
    p.set_defaults(func=cmd_cost)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
