"""
Command-line front end.

Exit codes: 0 = all checks consistent, 2 = a violation or unexplained
equality certificate was produced, 1 = operational error (bad flags, cap
exceeded, I/O failure).
"""

from __future__ import annotations

import argparse
import csv
import dataclasses
import json
import sys
from pathlib import Path
from typing import IO, Optional

from . import graph6
from .enumeration import (
    CapExceeded,
    enumerate_c4free_by_edges,
    enumerate_c4free_by_order,
)
from .graph import make_snk
from .search import hill_climb
from .spectral import snk_cubic, snk_mu, spectral_radius
from .verify import (
    VerificationRecord,
    VerifySummary,
    srg_table_check,
    verify_conjecture,
    verify_in3,
    verify_k2k1,
    verify_small_m,
    verify_theorem1,
)

CSV_COLUMNS = ["graph6", "n", "m", "mu", "bound", "slack", "classification"]


class _RecordWriter:
    def __init__(self, path: Optional[str], fmt: str) -> None:
        self.fmt = fmt
        self.fh: Optional[IO[str]] = None
        self.csv = None
        if path:
            self.fh = open(path, "w", newline="")
            if fmt == "csv":
                self.csv = csv.writer(self.fh)
                self.csv.writerow(CSV_COLUMNS)

    def __call__(self, rec: VerificationRecord) -> None:
        if self.fh is None:
            return
        if self.csv is not None:
            self.csv.writerow(
                [rec.graph_id, rec.n, rec.m, repr(rec.mu), repr(rec.bound), repr(rec.slack), rec.classification]
            )
        else:
            self.fh.write(json.dumps(dataclasses.asdict(rec)) + "\n")

    def close(self) -> None:
        if self.fh:
            self.fh.close()


def emit_certificate(path: str, payload: dict) -> None:
    """Self-contained JSON certificate for a violation or equality case."""
    try:
        Path(path).write_text(json.dumps(payload, indent=2) + "\n")
    except OSError as exc:
        raise SystemExit(f"error: cannot write certificate to {path}: {exc}")


def _summary_json(summary: VerifySummary) -> dict:
    return {
        "check": summary.check,
        "param": summary.param,
        "count": summary.count,
        "max_mu": summary.max_mu,
        "max_mu_graph": summary.max_mu_graph,
        "min_slack": summary.min_slack if summary.count else None,
        "equalities": [dataclasses.asdict(r) for r in summary.equalities],
        "violations": [dataclasses.asdict(c) for c in summary.violations],
        "findings": summary.findings,
        "ok": summary.ok,
    }


def _equality_witness(rec: VerificationRecord) -> dict:
    g = graph6.decode(rec.graph_id).strip_isolated()
    wit: dict = {"classification": rec.classification}
    hubs = [u for u in range(g.n) if g.degree(u) == g.n - 1]
    if hubs:
        wit["hub"] = hubs[0]
        wit["matched_pairs"] = [
            [u, v] for u, v in g.edges() if hubs[0] not in (u, v)
        ]
    return wit


def _finish(args, summary: VerifySummary) -> int:
    recomputed = []
    for rec in summary.equalities:
        g = graph6.decode(rec.graph_id)
        mu2 = spectral_radius(g, args.tol / 10).mu
        recomputed.append(
            {
                "record": dataclasses.asdict(rec),
                "mu_tight": mu2,
                "witness": _equality_witness(rec),
            }
        )
    out = _summary_json(summary)
    out["equality_certificates"] = recomputed
    print(json.dumps(out, indent=2))
    if args.certificate:
        emit_certificate(
            args.certificate,
            {"summary": out},
        )
    return 0 if summary.ok else 2


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--tol", type=float, default=1e-12, help="eigensolver residual tolerance")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--output", help="per-graph record file")
    p.add_argument("--format", choices=["json", "csv", "graph6-lines"], default="json")
    p.add_argument("--certificate", help="write the summary certificate JSON here")
    p.add_argument("--force", action="store_true", help="override desk-scale caps")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="c4free", description=__doc__)
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify-th1", help="max mu over C4-free graphs with m edges vs sqrt(m)")
    p.add_argument("--m", type=int, required=True)
    _add_common(p)

    p = sub.add_parser("verify-th2", help="equality classification at m edges (expect stars, plus S_{9,1} at m=9)")
    p.add_argument("--m", type=int, required=True)
    _add_common(p)

    p = sub.add_parser("verify-small-m", help="witnesses of mu > sqrt(m) for 4 <= m <= 8")
    p.add_argument("--m", type=int, required=True)
    _add_common(p)

    p = sub.add_parser("verify-in3", help="mu^2 - mu <= n-1 over C4-free graphs of order n")
    p.add_argument("--n", type=int, required=True)
    _add_common(p)

    p = sub.add_parser("verify-conjecture", help="even-order cubic inequality over C4-free graphs")
    p.add_argument("--n", type=int, required=True)
    _add_common(p)

    p = sub.add_parser("verify-k2k1", help="mu^2 - mu <= k(n-1) over K_{2,k+1}-free graphs")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    _add_common(p)

    p = sub.add_parser("srg-table", help="exact identity check for the strongly regular table")
    _add_common(p)

    p = sub.add_parser("enumerate", help="stream C4-free graphs as graph6 lines")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--m", type=int, help="by edge count, no isolated vertices")
    g.add_argument("--n", type=int, help="by order, isolated vertices allowed")
    _add_common(p)

    p = sub.add_parser("search", help="hill-climb mu over C4-free graphs with m edges")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--restarts", type=int, default=5)
    p.add_argument("--seed", type=int, default=0)
    _add_common(p)

    p = sub.add_parser("snk", help="closed-form spectral radius of S_{n,k}")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    _add_common(p)

    return ap


def main(argv: Optional[list[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _dispatch(args)
    except CapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def _dispatch(args) -> int:
    if args.command == "srg-table":
        rows = srg_table_check()
        print(json.dumps(rows, indent=2))
        return 0 if all(r["ok"] for r in rows) else 2

    if args.command == "snk":
        mu = snk_mu(args.n, args.k)
        coeffs, _ = snk_cubic(args.n, args.k)
        print(json.dumps({"n": args.n, "k": args.k, "mu": mu, "cubic": list(coeffs)}, indent=2))
        return 0

    if args.command == "enumerate":
        if args.m is not None:
            stream = enumerate_c4free_by_edges(args.m, args.workers, args.force)
        else:
            stream = enumerate_c4free_by_order(args.n, args.workers, args.force)
        fh = open(args.output, "w") if args.output else sys.stdout
        try:
            for g in stream:
                fh.write(graph6.encode(g) + "\n")
        finally:
            if args.output:
                fh.close()
        return 0

    if args.command == "search":
        state = hill_climb(args.m, args.restarts, args.seed, args.tol, args.workers)
        out = {
            "m": args.m,
            "mu": state.mu,
            "graph6": graph6.encode(state.current.strip_isolated()),
            "seed": state.seed,
            "moves": state.moves,
        }
        print(json.dumps(out, indent=2))
        if args.output:
            Path(args.output).write_text(json.dumps(state.moves, indent=2) + "\n")
        return 0

    sink = _RecordWriter(args.output, args.format)
    try:
        if args.command == "verify-th1":
            summary = verify_theorem1(args.m, args.tol, args.workers, sink, args.force)
        elif args.command == "verify-th2":
            summary = verify_theorem1(args.m, args.tol, args.workers, sink, args.force)
            expected = {"equality-star"} | ({"equality-S91"} if args.m == 9 else set())
            for rec in summary.equalities:
                if rec.classification not in expected:
                    summary.findings.append(
                        f"unexpected equality class {rec.classification} at {rec.graph_id}"
                    )
        elif args.command == "verify-small-m":
            summary = verify_small_m(args.m, args.tol, args.workers, sink)
        elif args.command == "verify-in3":
            summary = verify_in3(args.n, args.tol, args.workers, sink, args.force)
        elif args.command == "verify-conjecture":
            summary = verify_conjecture(args.n, args.tol, args.workers, sink, args.force)
        elif args.command == "verify-k2k1":
            summary = verify_k2k1(args.n, args.k, args.tol, args.workers, sink, args.force)
        else:  # pragma: no cover
            raise ValueError(f"unhandled command {args.command}")
    finally:
        sink.close()
    return _finish(args, summary)


if __name__ == "__main__":
    raise SystemExit(main())
