"""Command-line front end: root listings, n_G table, stability report,
energy verification and the radial Rayleigh quotient.

Exit codes: 0 success, 1 usage or input error, 2 verification failure.
An optional JSON config file supplies defaults (keys = long flag names);
explicit flags win.  LSV_THREADS caps worker threads for per-type
classification; output is deterministic regardless of the thread count.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from typing import Optional, Sequence

import numpy as np

from . import __version__
from .energy import cone_inequality_value, energy_curve, second_variation_fd
from .flag import build_sigma
from .killing import classify, compute_n_G, group_name, n_g_closed_form
from .mesh import SphereMesh
from .rayleigh import (
    DEFAULT_CELLS_PER_DECADE,
    DEFAULT_DECADES,
    hardy_target,
    log_grid,
    rayleigh_infimum,
    support_widening_study,
)
from .render import FORMATS, render
from .roots import DynkinType, enumerate_roots, parabolic_grading, simple_types
from .sun import MatrixLieAlgebra

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_VERIFY = 2


class _Parser(argparse.ArgumentParser):
    """argparse maps usage errors to exit 2 by default; the contract wants 1."""

    def error(self, message: str):
        self.print_usage(sys.stderr)
        raise SystemExit((EXIT_USAGE, f"error: {message}"))


def _common_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=FORMATS, default=None, help="output format (default json)")
    p.add_argument("--out", default=None, help="write output to PATH instead of stdout")
    p.add_argument("--config", default=None, help="JSON config file; flags take precedence")


def _build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="lsv", description=__doc__)
    parser.add_argument("--version", action="version", version=f"lsv {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("roots", help="list all roots of a simple type")
    p.add_argument("--type", required=True, help="family letter A..G")
    p.add_argument("--rank", type=int, required=True)
    _common_flags(p)

    p = sub.add_parser("grading", help="partition the roots by their level over an index set")
    p.add_argument("--type", required=True)
    p.add_argument("--rank", type=int, required=True)
    p.add_argument("--indices", required=True, help="comma-separated 1-based simple-root indices")
    _common_flags(p)

    p = sub.add_parser("table1", help="computed n_G against the closed forms, one row per type")
    p.add_argument("--max-rank", type=int, default=None)
    p.add_argument("--families", default=None, help="subset of ABCDEFG, e.g. 'ABC'")
    _common_flags(p)

    p = sub.add_parser("stability-report", help="cominuscule norms versus 8 n_G for every type")
    p.add_argument("--max-rank", type=int, default=None)
    p.add_argument("--families", default=None)
    _common_flags(p)

    p = sub.add_parser("energy", help="measured versus predicted energies of exp(t sigma)")
    p.add_argument("--group", default=None, help="su2, su3, ...")
    p.add_argument("--degree", type=int, default=None)
    p.add_argument("--mesh", default=None, help="THETAxPHI, e.g. 128x256")
    p.add_argument("--t-steps", type=int, default=None)
    p.add_argument("--tol", type=float, default=None, help="identity deviation tolerance")
    p.add_argument("--check-cone", action="store_true", default=None,
                   help="also evaluate the cone inequality value")
    _common_flags(p)

    p = sub.add_parser("rayleigh", help="discrete radial Rayleigh infimum versus (n-1)^2/4")
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--decades", default=None, help="log10 support, e.g. '-8,8'")
    p.add_argument("--cells-per-decade", type=int, default=None)
    p.add_argument("--steps", type=int, default=None, help="support-widening study length")
    _common_flags(p)

    return parser


def _load_config(path: Optional[str]) -> dict:
    if not path:
        return {}
    with open(path, "r", encoding="utf-8") as fh:
        cfg = json.load(fh)
    if not isinstance(cfg, dict):
        raise ValueError("config file must hold a JSON object of flag values")
    return cfg


class Options:
    """Flag values resolved against a config file and defaults."""

    def __init__(self, args: argparse.Namespace):
        self._args = vars(args)
        self._cfg = _load_config(self._args.get("config"))
        self.resolved: dict = {}

    def get(self, flag: str, default=None, cast=None):
        key = flag.replace("-", "_")
        value = self._args.get(key)
        if value is None:
            value = self._cfg.get(flag, default)
        if cast is not None and value is not None:
            value = cast(value)
        self.resolved[flag] = value
        return value


def _threads() -> int:
    raw = os.environ.get("LSV_THREADS", "")
    if raw.strip():
        try:
            cap = int(raw)
        except ValueError as exc:
            raise ValueError(f"LSV_THREADS must be an integer, got {raw!r}") from exc
        if cap < 1:
            raise ValueError(f"LSV_THREADS must be >= 1, got {cap}")
        return cap
    return os.cpu_count() or 1


def _meta(opts: Options, **extra) -> dict:
    meta = {"version": __version__, "config": {k: opts.resolved[k] for k in sorted(opts.resolved)}}
    meta.update(extra)
    return meta


def _families(opts: Options) -> str:
    fams = opts.get("families", "ABCDEFG")
    fams = "".join(sorted(set(fams.upper())))
    for f in fams:
        if f not in "ABCDEFG":
            raise ValueError(f"unknown family {f!r} in --families")
    return fams


def _emit(doc: dict, opts: Options) -> None:
    text = render(doc, opts.get("format", "json"))
    out = opts.get("out")
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _cmd_roots(opts: Options) -> int:
    dynkin = DynkinType(opts.get("type", cast=str).upper(), opts.get("rank", cast=int))
    rs = enumerate_roots(dynkin)
    rows = [
        {"coeffs": " ".join(str(c) for c in r.coeffs), "height": r.height}
        for r in rs.all_roots
    ]
    doc = {
        "meta": _meta(
            opts,
            dynkin=str(dynkin),
            n_positive=len(rs.positive_roots),
            n_roots=len(rs.all_roots),
            cartan=[list(row) for row in rs.cartan],
        ),
        "rows": rows,
    }
    _emit(doc, opts)
    return EXIT_OK


def _cmd_grading(opts: Options) -> int:
    dynkin = DynkinType(opts.get("type", cast=str).upper(), opts.get("rank", cast=int))
    raw = str(opts.get("indices"))
    try:
        I = sorted({int(tok) for tok in raw.split(",") if tok.strip()})
    except ValueError as exc:
        raise ValueError(f"cannot parse --indices {raw!r}") from exc
    if not I:
        raise ValueError("--indices must name at least one simple root")
    rs = enumerate_roots(dynkin)
    grading = parabolic_grading(rs, I)
    rows = [
        {
            "level": level,
            "count": len(roots),
            "roots": "; ".join(" ".join(str(c) for c in r.coeffs) for r in roots),
        }
        for level, roots in grading.items()
    ]
    doc = {
        "meta": _meta(opts, dynkin=str(dynkin), indices=I,
                      note="level 0 also contains the Cartan subalgebra"),
        "rows": rows,
    }
    _emit(doc, opts)
    return EXIT_OK


def _cmd_table1(opts: Options) -> int:
    max_rank = opts.get("max-rank", 16, cast=int)
    if max_rank < 2:
        raise ValueError(f"table1 needs --max-rank >= 2, got {max_rank}")
    fams = _families(opts)
    rows = []
    ok = True
    for dynkin in simple_types(max_rank, fams):
        computed = compute_n_G(dynkin)
        expected = n_g_closed_form(dynkin)
        match = computed == expected
        ok = ok and match
        rows.append(
            {
                "type": str(dynkin),
                "group": group_name(dynkin),
                "n_G": int(computed) if computed.denominator == 1 else str(computed),
                "expected": expected,
                "match": match,
            }
        )
    doc = {"meta": _meta(opts, all_match=ok), "rows": rows}
    _emit(doc, opts)
    return EXIT_OK if ok else EXIT_VERIFY


def expected_excluded(max_rank: int, families: str = "ABCDEFG") -> list[str]:
    """Types up to max_rank with no failing cominuscule index: C_n for n >= 8
    plus the three types with no cominuscule index at all."""
    out = [str(d) for d in simple_types(max_rank, families)
           if (d.family == "C" and d.rank >= 8) or d.family in ("F", "G")
           or (d.family == "E" and d.rank == 8)]
    return sorted(out)


def _cmd_stability_report(opts: Options) -> int:
    max_rank = opts.get("max-rank", 16, cast=int)
    if max_rank < 1:
        raise ValueError(f"--max-rank must be >= 1, got {max_rank}")
    fams = _families(opts)
    types = simple_types(max_rank, fams)
    workers = min(_threads(), max(1, len(types)))
    with ThreadPoolExecutor(max_workers=workers) as pool:
        reports = list(pool.map(classify, types))
    reports.sort(key=lambda c: (c.dynkin.family, c.dynkin.rank))

    rows = []
    excluded = []
    for rep in reports:
        if rep.lemma_witness is None:
            excluded.append(str(rep.dynkin))
        rows.append(
            {
                "type": str(rep.dynkin),
                "group": group_name(rep.dynkin),
                "type_H": rep.is_type_H,
                "n_G": rep.n_G,
                "eight_n_G": 8 * rep.n_G,
                "cominuscule": ";".join(str(i) for i in sorted(rep.cominuscule)),
                "norms_sq": ";".join(str(v.norm_sq) for v in rep.verdicts),
                "margins": ";".join(str(v.margin) for v in rep.verdicts),
                "failing": ";".join(str(i) for i in rep.failing_indices),
                "witness": rep.lemma_witness,
            }
        )
    excluded = sorted(excluded)
    expected = expected_excluded(max_rank, fams)
    ok = excluded == expected
    doc = {
        "meta": _meta(
            opts,
            threads=workers,
            excluded=excluded,
            expected_excluded=expected,
            summary_match=ok,
        ),
        "rows": rows,
    }
    _emit(doc, opts)
    return EXIT_OK if ok else EXIT_VERIFY


def _cmd_energy(opts: Options) -> int:
    group = str(opts.get("group", "su2")).lower()
    if not group.startswith("su"):
        raise ValueError(f"unknown group {group!r}; expected su2, su3, ...")
    try:
        n = int(group[2:])
    except ValueError as exc:
        raise ValueError(f"unknown group {group!r}; expected su2, su3, ...") from exc
    degree = opts.get("degree", 1, cast=int)
    mesh_spec = str(opts.get("mesh", "128x256"))
    try:
        n_theta, n_phi = (int(tok) for tok in mesh_spec.lower().split("x"))
    except ValueError as exc:
        raise ValueError(f"cannot parse --mesh {mesh_spec!r}, expected THETAxPHI") from exc
    t_steps = opts.get("t-steps", 41, cast=int)
    if t_steps < 5:
        raise ValueError(f"--t-steps must be >= 5, got {t_steps}")
    tol = opts.get("tol", 1e-6, cast=float)
    check_cone = bool(opts.get("check-cone", False))

    mesh = SphereMesh(n_theta, n_phi)
    flag = build_sigma(MatrixLieAlgebra(n), degree, mesh)
    report = energy_curve(flag, t_samples=np.linspace(0.0, 2.0 * np.pi, t_steps))
    second_variation_fd(report)
    if check_cone:
        cone_inequality_value(flag, report)

    doc = report.to_dict()
    ok = report.max_rel_dev <= tol
    doc["meta"].update(_meta(opts, identity_ok=ok))
    if check_cone:
        doc["meta"]["cone_witness"] = bool(report.cone_value < 0 and degree > 0)
    _emit(doc, opts)
    return EXIT_OK if ok else EXIT_VERIFY


def _cmd_rayleigh(opts: Options) -> int:
    n = opts.get("n", 2, cast=int)
    if n < 2:
        raise ValueError(f"--n must be >= 2, got {n}")
    decades_raw = str(opts.get("decades", f"{DEFAULT_DECADES[0]},{DEFAULT_DECADES[1]}"))
    try:
        lo, hi = (int(tok) for tok in decades_raw.split(","))
    except ValueError as exc:
        raise ValueError(f"cannot parse --decades {decades_raw!r}") from exc
    cpd = opts.get("cells-per-decade", DEFAULT_CELLS_PER_DECADE, cast=int)
    steps = opts.get("steps", 3, cast=int)
    grid = log_grid((lo, hi), cpd)
    value = rayleigh_infimum(n, grid)
    rows = support_widening_study(n, (lo, hi), cpd, steps=steps) if steps > 1 else [
        {"rmin": grid.nodes[0], "rmax": grid.nodes[-1], "cells": grid.cells,
         "infimum": value, "target": hardy_target(n)}
    ]
    doc = {
        "meta": _meta(opts, infimum=value, target=hardy_target(n)),
        "rows": rows,
    }
    _emit(doc, opts)
    return EXIT_OK


_COMMANDS = {
    "roots": _cmd_roots,
    "grading": _cmd_grading,
    "table1": _cmd_table1,
    "stability-report": _cmd_stability_report,
    "energy": _cmd_energy,
    "rayleigh": _cmd_rayleigh,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        if isinstance(exc.code, tuple):
            code, message = exc.code
            print(message, file=sys.stderr)
            return code
        return EXIT_OK if not exc.code else EXIT_USAGE
    try:
        opts = Options(args)
        return _COMMANDS[args.command](opts)
    except (ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
