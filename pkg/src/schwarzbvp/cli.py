"""Command-line front end: parse a problem spec file, solve, verify, emit.

Exit codes: 0 all clauses pass, 1 verification failure (artifacts still
written), 2 schema violation, 3 admissibility failure, 4 solver error.
"""

import argparse
import json
import sys
import time
from pathlib import Path

import numpy as np

from . import catalog
from .disk_operators import SourceTerm
from .disk_solvers import (
    build_f_chain,
    make_higher_order_problem,
    solve_first_order,
    solve_higher_order,
    solve_special_case,
)
from .distributions import BoundaryDistribution
from .errors import (
    AdmissibilityError,
    DivergenceRiskError,
    SchwarzBVPError,
    SpecFileError,
)
from .disk_operators import DEFAULT_DISK_CFG
from .halfplane import DEFAULT_HP_CFG
from .fields import ComplexField, DiskGrid, HalfPlaneGrid
from .halfplane import (
    HPSourceTerm,
    solve_first_order_hp,
    solve_higher_order_hp,
    solve_mixed_hp,
)
from .polynomials import ZPolynomial
from .verify import Tolerances, chain_report, full_report

EXIT_PASS = 0
EXIT_VERIFY_FAIL = 1
EXIT_SCHEMA = 2
EXIT_ADMISSIBILITY = 3
EXIT_SOLVER = 4

_SOLVERS = {"first_order", "higher_order", "special_case", "chain", "mixed_hp"}


def _require(cond, path, message):
    if not cond:
        raise SpecFileError(path, message)


def _parse_source(raw, domain):
    if raw is None or raw.get("kind") == "zero":
        return SourceTerm.zero() if domain == "disk" else HPSourceTerm.zero()
    kind = raw.get("kind")
    coeffs = raw.get("coefficients", [])
    _require(isinstance(coeffs, list), "source.coefficients", "must be a list of [j,k,re,im]")
    triples = []
    for i, row in enumerate(coeffs):
        _require(
            isinstance(row, list) and len(row) == 4,
            f"source.coefficients[{i}]", "expected [j, k, re, im]",
        )
        triples.append((int(row[0]), int(row[1]), complex(row[2], row[3])))
    poly = ZPolynomial.from_terms(triples)
    if kind == "polynomial":
        _require(domain == "disk", "source.kind", "'polynomial' is a disk source")
        return SourceTerm(poly)
    if kind == "decayed_polynomial":
        _require(domain == "half_plane", "source.kind", "'decayed_polynomial' is a half-plane source")
        _require("s" in raw, "source.s", "decay exponent required")
        return HPSourceTerm(poly, float(raw["s"]))
    raise SpecFileError("source.kind", f"unknown source kind '{kind}'")


def _parse_boundary_entry(raw, domain, path):
    if raw is None or raw.get("type") == "zero":
        return None
    btype = raw.get("type")
    if btype == "dirac":
        _require("location" in raw, f"{path}.location", "required")
        carrier = "circle" if domain == "disk" else "line"
        return BoundaryDistribution.dirac(
            carrier,
            float(raw["location"]),
            complex(raw.get("weight_re", 1.0), raw.get("weight_im", 0.0)),
            int(raw.get("derivative_order", 0)),
        )
    if btype == "density":
        _require("form" in raw, f"{path}.form", "required")
        params = raw.get("params", {})
        if domain == "disk":
            return catalog.circle_density(raw["form"], params)
        return catalog.line_density(raw["form"], params)
    if btype == "htg":
        _require(domain == "half_plane", f"{path}.type", "'htg' entries are half-plane data")
        return catalog.htg_function(raw["form"], raw.get("params", {}))
    raise SpecFileError(f"{path}.type", f"unknown boundary type '{btype}'")


def parse_problem(path):
    """Load and validate a spec file; returns a dict of solver inputs."""
    p = Path(path)
    if not p.exists():
        raise SpecFileError("path", f"spec file {path} does not exist")
    try:
        raw = json.loads(p.read_text())
    except json.JSONDecodeError as e:
        raise SpecFileError("json", str(e))

    domain = raw.get("domain")
    _require(domain in ("disk", "half_plane"), "domain", "must be 'disk' or 'half_plane'")
    order = raw.get("order")
    _require(isinstance(order, int) and order >= 1, "order", "must be a positive integer")
    solver = raw.get("solver")
    _require(solver in _SOLVERS, "solver", f"must be one of {sorted(_SOLVERS)}")
    if solver in ("chain", "special_case"):
        _require(domain == "disk", "solver", f"'{solver}' runs on the disk")
    if solver == "mixed_hp":
        _require(domain == "half_plane", "solver", "'mixed_hp' runs on the half-plane")

    boundary_raw = raw.get("boundary", [])
    _require(
        isinstance(boundary_raw, list) and len(boundary_raw) == order,
        "boundary", f"boundary list length {len(boundary_raw)} must match order {order}",
    )
    constants = raw.get("point_conditions", [])
    _require(
        isinstance(constants, list) and len(constants) == order,
        "point_conditions", f"length {len(constants)} must match order {order}",
    )
    constants = [float(c) for c in constants]

    source = _parse_source(raw.get("source"), domain)

    boundary = []
    for k, entry in enumerate(boundary_raw):
        b = _parse_boundary_entry(entry, domain, f"boundary[{k}]")
        if domain == "half_plane" and k == 0 and b is not None and not hasattr(b, "h_b"):
            raise SpecFileError("boundary[0]", "half-plane order-0 datum must be an 'htg' entry")
        if domain == "half_plane" and solver == "higher_order" and k >= 1:
            _require(
                b is None or hasattr(b, "h_b"),
                f"boundary[{k}]", "higher-order half-plane data must be 'htg' entries",
            )
        boundary.append(b)

    outer = raw.get("outer", {})
    outer_h = None
    outer_c = 0.0
    if solver == "special_case":
        outer_h = _parse_boundary_entry(outer.get("h"), domain, "outer.h")
        outer_c = float(outer.get("c", 0.0))

    grid_raw = raw.get("grid", {})
    return {
        "domain": domain,
        "order": order,
        "solver": solver,
        "source": source,
        "boundary": boundary,
        "constants": constants,
        "outer_h": outer_h,
        "outer_c": outer_c,
        "seed": int(raw.get("seed", 0)),
        "grid_level": int(grid_raw.get("level", 0)),
        "j_max": int(grid_raw.get("j_max", 10)),
        "tolerance_scale": float(raw.get("tolerance_scale", 1.0)),
        "name": raw.get("name", p.stem),
    }


def _solve(spec):
    domain, solver = spec["domain"], spec["solver"]
    scale = 2 ** spec["grid_level"]
    if domain == "disk":
        cfg = DEFAULT_DISK_CFG.scaled(scale) if scale != 1 else None
        if solver == "first_order":
            return solve_first_order(spec["source"], spec["boundary"][0], spec["constants"][0], cfg), None
        if solver == "higher_order":
            problem = make_higher_order_problem(
                spec["order"], spec["source"], spec["boundary"], spec["constants"]
            )
            return solve_higher_order(problem, cfg), None
        if solver == "special_case":
            return (
                solve_special_case(
                    spec["order"], spec["outer_h"], spec["outer_c"],
                    spec["boundary"][0], spec["boundary"][1:], spec["constants"], cfg,
                ),
                None,
            )
        if solver == "chain":
            fields = build_f_chain(spec["boundary"], spec["constants"], spec["order"], cfg)
            return None, fields
    else:
        cfg = DEFAULT_HP_CFG.scaled(scale) if scale != 1 else None
        if solver == "first_order":
            return solve_first_order_hp(spec["source"], spec["boundary"][0], spec["constants"][0], cfg), None
        if solver == "higher_order":
            return (
                solve_higher_order_hp(
                    spec["source"], spec["boundary"][0], spec["boundary"][1:],
                    spec["constants"][0], cfg,
                ),
                None,
            )
        if solver == "mixed_hp":
            return (
                solve_mixed_hp(
                    spec["source"], spec["boundary"][0], spec["boundary"][1:], spec["constants"], cfg
                ),
                None,
            )
    raise SpecFileError("solver", f"solver '{solver}' incompatible with domain '{domain}'")


def _sample_grid(spec):
    if spec["domain"] == "disk":
        return DiskGrid.build(j_max=spec["j_max"], seed=spec["seed"])
    return HalfPlaneGrid.build(j_max=spec["j_max"], seed=spec["seed"])


def _fmt(x):
    return f"{x:.17g}"


def _write_samples(path, fields_by_name, pts):
    cols = ["x", "y"]
    for name in fields_by_name:
        cols += [f"re_{name}", f"im_{name}"]
    rows = [",".join(cols)]
    values = {name: fld.evaluate(pts) for name, fld in fields_by_name.items()}
    for i, z in enumerate(pts):
        row = [_fmt(z.real), _fmt(z.imag)]
        for name in fields_by_name:
            v = values[name][i]
            row += [_fmt(v.real), _fmt(v.imag)]
        rows.append(",".join(row))
    path.write_text("\n".join(rows) + "\n")


def run(spec, out_dir, report_format="text"):
    """Solve, verify, and write samples.csv, report, summary.txt."""
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    grid = _sample_grid(spec)
    pts = np.array(grid.interior)
    tolerances = Tolerances().scaled(spec["tolerance_scale"])

    t0 = time.time()
    solution, chain_fields = _solve(spec)

    if chain_fields is not None:
        fields_by_name = {"w": chain_fields[-1]}
        for k, fk in enumerate(chain_fields, start=1):
            fields_by_name[f"f{k}"] = fk
        report = chain_report(
            chain_fields, spec["boundary"], spec["constants"], grid, tolerances=tolerances
        )
    else:
        fields_by_name = {"w": solution.field}
        for i, term in enumerate(solution.field.terms):
            fields_by_name[f"term{i}_{term.kind}"] = ComplexField(
                solution.field.domain, [term]
            )
        report = full_report(solution.problem, solution, grid, tolerances=tolerances)
    report.runtimes["total"] = time.time() - t0

    _write_samples(out / "samples.csv", fields_by_name, pts)

    if report_format == "structured":
        (out / "report.json").write_text(json.dumps(report.to_dict(), indent=2) + "\n")
    else:
        (out / "report.txt").write_text("\n".join(report.summary_lines()) + "\n")

    summary = [
        f"problem: {spec['name']}",
        f"domain: {spec['domain']}  order: {spec['order']}  solver: {spec['solver']}",
        f"clauses: {sum(c.passed for c in report.clauses)}/{len(report.clauses)} passed",
        f"pde residual (max): {report.pde_residual_max:.3e}",
        "result: " + ("PASS" if report.passed else "FAIL"),
    ]
    if solution is not None and solution.diagnostics:
        summary.append("diagnostics:")
        summary.extend(f"  - {d}" for d in solution.diagnostics)
    (out / "summary.txt").write_text("\n".join(summary) + "\n")
    return EXIT_PASS if report.passed else EXIT_VERIFY_FAIL


def main(argv=None):
    parser = argparse.ArgumentParser(
        prog="schwarzbvp",
        description="Solve and verify Schwarz boundary value problems",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    sp = sub.add_parser("solve", help="solve a problem spec file and verify the solution")
    sp.add_argument("spec", help="problem spec file (JSON)")
    sp.add_argument("--out", required=True, help="output directory")
    sp.add_argument("--tolerance-scale", type=float, default=None)
    sp.add_argument("--grid-level", type=int, default=None)
    sp.add_argument("--report-format", choices=("text", "structured"), default="text")
    args = parser.parse_args(argv)

    try:
        spec = parse_problem(args.spec)
        if args.tolerance_scale is not None:
            spec["tolerance_scale"] = args.tolerance_scale
        if args.grid_level is not None:
            spec["grid_level"] = args.grid_level
        return run(spec, args.out, args.report_format)
    except SpecFileError as e:
        print(f"schema error: {e}", file=sys.stderr)
        return EXIT_SCHEMA
    except (AdmissibilityError, DivergenceRiskError) as e:
        print(f"admissibility error: {e}", file=sys.stderr)
        return EXIT_ADMISSIBILITY
    except SchwarzBVPError as e:
        print(f"solver error: {e}", file=sys.stderr)
        return EXIT_SOLVER


if __name__ == "__main__":
    sys.exit(main())
