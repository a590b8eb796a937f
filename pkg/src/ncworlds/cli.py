"""Batch command-line interface.

Subcommands:

* ``verify``     -- run the symbolic suites (electromagnetic identities,
                    Hamilton/Heisenberg/curvature, epsilon lemma, Jacobi
                    extension) and exit 0 iff every residual is zero.
* ``simulate``   -- evaluate the four theorem equations numerically on a
                    time-series triple (from a JSON file or a generated walk)
                    and report residual tracks.
* ``walk``       -- generate a +-sqrt(k*tau) walk (or load a series) and test
                    the diffusion identity [X, Xdot] = Jk exactly.
* ``identities`` -- seeded structural identity checks (epsilon identity,
                    Leibniz laws, product-rule defect, rewriting hygiene).

Exit codes: 0 all checks pass, 1 a check failed, 2 usage or input error.
Outputs are deterministic for a fixed config and seed; wall-clock timings
appear only in the human-readable format so json/csv stay byte-identical.
NCWORLDS_THREADS caps parallelism for the independent symbolic checks.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import discrete, emtheorem, flatworld
from .errors import NCWorldsError, ParseError
from .exprparse import parse
from .identities import IDENTITY_CHECKS, run_identities
from .reporting import CheckReport
from .veccalc import load_structure_constants

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2


def _f17(x) -> str:
    return format(float(x), ".17g")


def _threads() -> int:
    raw = os.environ.get("NCWORLDS_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def _write_output(text: str, path: str | None) -> None:
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}")


# -- verify ---------------------------------------------------------------------

_VERIFY_ALIASES = {
    "divb": "div_b",
    "div": "div_b",
    "accel": "acceleration",
}


def _canonical_check(name: str) -> str:
    key = name.strip().lower().replace("-", "").replace("_", "")
    return _VERIFY_ALIASES.get(key, name.strip().lower().replace("-", "_"))


def _epsilon_report() -> CheckReport:
    from .identities import check_epsilon_identity

    res = check_epsilon_identity()
    report = CheckReport("epsilon")
    from .algebra import Expression
    from .reporting import CheckRow

    report.rows.append(CheckRow(
        f"epsilon identity, {res.cases} quadruples",
        Expression.zero() if res.ok else Expression.from_scalar(1),
        res.cases, res.ok,
    ))
    return report


def _jacobi_report(tensor) -> CheckReport:
    import time

    from .algebra import Expression, generator
    from .emtheorem import jacobi_extension_check
    from .reporting import CheckRow
    from .veccalc import VectorExpr

    t0 = time.perf_counter()
    d = tensor.dim
    vecs = [VectorExpr([Expression.from_generator(generator(n, i))
                        for i in range(1, d + 1)]) for n in ("A", "B", "C")]
    residual = jacobi_extension_check(tensor, *vecs)
    report = CheckReport("jacobi")
    for k in range(1, d + 1):
        r = residual.component(k)
        report.rows.append(CheckRow(f"component {k}", r, 0, r.is_zero))
    report.wall_time = time.perf_counter() - t0
    return report


def _flat_reports(hamiltonian_text: str) -> list[CheckReport]:
    import time

    H = parse(hamiltonian_text)
    dim = max(
        [g.component for g in H.generators() if g.component is not None] or [1]
    )
    t0 = time.perf_counter()
    ham = flatworld.hamilton_check(flatworld.FlatContext(dim, H))
    ham.wall_time = time.perf_counter() - t0
    t0 = time.perf_counter()
    heis = flatworld.heisenberg_check()
    heis.wall_time = time.perf_counter() - t0
    t0 = time.perf_counter()
    curv = flatworld.curvature_report(flatworld.GaugeContext(2))
    curv.wall_time = time.perf_counter() - t0
    return [ham, heis, curv]


def cmd_verify(args) -> int:
    tensor = load_structure_constants(args.f_tensor)
    available = ["epsilon", "acceleration", "lorentz", "div_b", "faraday",
                 "ampere", "jacobi", "hamilton", "heisenberg", "curvature"]
    if args.only:
        names = [_canonical_check(n) for chunk in args.only for n in chunk.split(",")]
        unknown = [n for n in names if n not in available]
        if unknown:
            print(f"unknown checks: {', '.join(unknown)}; "
                  f"available: {', '.join(available)}", file=sys.stderr)
            return EXIT_USAGE
    else:
        names = available

    reports: list[CheckReport] = []
    em_names = [n for n in names if n in emtheorem.VERIFIERS]
    ctx = emtheorem.EMContext(tensor)
    if "epsilon" in names:
        reports.append(_epsilon_report())
    if em_names:
        reports.extend(emtheorem.run_suite(ctx, em_names, threads=_threads()))
    if "jacobi" in names:
        reports.append(_jacobi_report(tensor))
    flat_names = [n for n in names if n in ("hamilton", "heisenberg", "curvature")]
    if flat_names:
        by_name = {r.name: r for r in _flat_reports(args.hamiltonian)}
        reports.extend(by_name[n] for n in flat_names)

    ordered = sorted(reports, key=lambda r: names.index(r.name))
    ok = all(r.ok for r in ordered)
    _write_output(_render_verify(ordered, args.format), args.output)
    return EXIT_OK if ok else EXIT_CHECK_FAILED


def _render_verify(reports: list[CheckReport], fmt: str) -> str:
    if fmt == "json":
        return json.dumps({
            "ok": all(r.ok for r in reports),
            "checks": [r.to_dict() for r in reports],
        }, indent=2) + "\n"
    if fmt == "csv":
        lines = ["check,row,ok,terms_before,terms_after"]
        for r in reports:
            for row in r.rows:
                lines.append(f"{r.name},{row.name},{int(row.ok)},"
                             f"{row.terms_before},{row.residual.n_terms}")
        return "\n".join(lines) + "\n"
    lines = []
    for r in reports:
        status = "PASS" if r.ok else "FAIL"
        lines.append(f"[{status}] {r.name}  (terms {r.terms_before} -> "
                     f"{r.terms_after}, {r.wall_time * 1000:.1f} ms)")
        for row in r.rows:
            if not row.ok:
                lines.append(f"    FAIL {row.name}: residual {row.residual.text()}")
    n_fail = sum(0 if r.ok else 1 for r in reports)
    lines.append(f"{len(reports) - n_fail}/{len(reports)} checks passed")
    return "\n".join(lines) + "\n"


# -- simulate ---------------------------------------------------------------------


def _load_series(args) -> discrete.TimeSeries:
    if args.input:
        return discrete.TimeSeries.from_json(args.input)
    if args.walk:
        return discrete.generate_walk(args.seed, args.length, args.k, args.tau,
                                      dim=3, exact=False)
    raise NCWorldsError("simulate needs --input PATH or --walk")


def cmd_simulate(args) -> int:
    series = _load_series(args)
    report = discrete.numeric_theorem_residuals(series, threshold=args.threshold)
    fields = None
    if args.emit == "eb-fields":
        fields = {"B": discrete.discrete_B(series), "E": discrete.discrete_E(series)}
    _write_output(_render_simulate(report, fields, args.format), args.output)
    return EXIT_OK if report.ok else EXIT_CHECK_FAILED


def _render_simulate(report, fields, fmt: str) -> str:
    if fmt == "json":
        doc = report.to_dict()
        if fields:
            doc["fields"] = {
                name: {
                    str(power): {
                        "window": [ts.lo, ts.hi],
                        "values": [[float(x) for x in row] for row in ts.values],
                    }
                    for power, ts in el.terms.items()
                }
                for name, el in fields.items()
            }
        return json.dumps(doc, indent=2) + "\n"
    if fmt == "csv":
        lines = ["equation,j_power,t,residual"]
        for eq, power, t, value in report.to_rows():
            lines.append(f"{eq},{power},{t},{_f17(value)}")
        if fields:
            for name, el in fields.items():
                for power, ts in sorted(el.terms.items()):
                    for t in range(ts.lo, ts.hi + 1):
                        row = ts.values[t - ts.start]
                        for c, value in enumerate(row, start=1):
                            lines.append(f"{name}{c},{power},{t},{_f17(value)}")
        return "\n".join(lines) + "\n"
    lines = []
    for eq in report.equations:
        status = "PASS" if eq.max_scaled < report.threshold else "FAIL"
        powers = ",".join(f"J^{t.power}" for t in eq.tracks) or "-"
        lines.append(f"[{status}] {eq.equation:8s} max residual {_f17(eq.max_abs)} "
                     f"(scale {_f17(eq.scale)}, powers {powers})")
    lines.append(f"threshold {_f17(report.threshold)} -> "
                 f"{'all equations hold' if report.ok else 'THRESHOLD BREACH'}")
    if fields:
        for name, el in fields.items():
            for power, ts in sorted(el.terms.items()):
                lines.append(f"{name}: J^{power} window [{ts.lo},{ts.hi}] "
                             f"first sample {tuple(float(x) for x in ts.values[0])}")
    return "\n".join(lines) + "\n"


# -- walk --------------------------------------------------------------------------


def cmd_walk(args) -> int:
    if args.input:
        series = discrete.TimeSeries.from_json(args.input)
    else:
        series = discrete.generate_walk(args.seed, args.length, args.k, args.tau,
                                        dim=args.dim, exact=True)
    track = discrete.diffusion_track(series)
    k = Fraction(args.k)
    constant = all(v == k for row in track.values for v in row)
    # The commutator route must agree with the direct track: [X, Xdot] = (J, k).
    comm = discrete.brownian_commutator(series)
    comm_track = comm.terms.get(1)
    comm_matches = comm_track is not None and all(
        a == b for ra, rb in zip(track.values, comm_track.values)
        for a, b in zip(ra, rb))
    _write_output(_render_walk(series, track, k, constant, comm_matches,
                               args.format), args.output)
    return EXIT_OK if constant and comm_matches else EXIT_CHECK_FAILED


def _value_text(v) -> str:
    if isinstance(v, (int, Fraction)):
        return str(v)
    if isinstance(v, discrete.QuadraticSurd):
        return str(v.simplify()) if not v.b else repr(v)
    return _f17(v)


def _render_walk(series, track, k, constant, comm_matches, fmt: str) -> str:
    if fmt == "json":
        return json.dumps({
            "k": str(k),
            "tau": str(series.tau),
            "length": len(series),
            "dimension": series.dim,
            "constant": constant,
            "commutator_matches": comm_matches,
            "khat": [[_value_text(v) for v in row] for row in track.values],
        }, indent=2) + "\n"
    if fmt == "csv":
        lines = ["component,t,khat"]
        for t in range(track.lo, track.hi + 1):
            row = track.values[t - track.start]
            for c, v in enumerate(row, start=1):
                lines.append(f"{c},{t},{_value_text(v)}")
        return "\n".join(lines) + "\n"
    lines = [
        f"walk: length {len(series)}, dim {series.dim}, tau {series.tau}, "
        f"target k = {k}",
        f"[{'PASS' if constant else 'FAIL'}] khat = (X'-X)^2/tau is "
        f"{'constant ' + str(k) if constant else 'NOT constant'}",
        f"[{'PASS' if comm_matches else 'FAIL'}] [X, Xdot] = J*khat "
        f"(crossed-product route)",
    ]
    if not constant:
        preview = ", ".join(_value_text(v) for row in track.values[:8] for v in row)
        lines.append(f"    khat track starts: {preview}")
    return "\n".join(lines) + "\n"


# -- identities ----------------------------------------------------------------------


def cmd_identities(args) -> int:
    names = None
    if args.only:
        names = [n for chunk in args.only for n in chunk.split(",")]
        unknown = [n for n in names if n not in IDENTITY_CHECKS]
        if unknown:
            print(f"unknown identity checks: {', '.join(unknown)}; "
                  f"available: {', '.join(IDENTITY_CHECKS)}", file=sys.stderr)
            return EXIT_USAGE
    results = run_identities(seed=args.seed, cases=args.count, names=names)
    ok = all(r.ok for r in results)
    _write_output(_render_identities(results, args.format), args.output)
    return EXIT_OK if ok else EXIT_CHECK_FAILED


def _render_identities(results, fmt: str) -> str:
    if fmt == "json":
        return json.dumps({
            "ok": all(r.ok for r in results),
            "checks": [
                {"name": r.name, "cases": r.cases, "ok": r.ok,
                 "failures": r.failures}
                for r in results
            ],
        }, indent=2) + "\n"
    if fmt == "csv":
        lines = ["name,cases,ok,failures"]
        for r in results:
            lines.append(f"{r.name},{r.cases},{int(r.ok)},{len(r.failures)}")
        return "\n".join(lines) + "\n"
    lines = []
    for r in results:
        status = "PASS" if r.ok else "FAIL"
        lines.append(f"[{status}] {r.name} ({r.cases} cases)")
        for f in r.failures[:5]:
            lines.append(f"    {f}")
    return "\n".join(lines) + "\n"


# -- entry point -----------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ncworlds",
        description="Exact non-commutative calculus verifications and their "
                    "discrete time-series models.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--format", choices=("human", "json", "csv"),
                       default="human", help="output format")
        p.add_argument("--output", metavar="PATH", default=None,
                       help="write the report to a file instead of stdout")

    p_verify = sub.add_parser("verify", help="run the symbolic verification suites")
    p_verify.add_argument("--only", action="append", metavar="CHECK",
                          help="run only the named checks (comma-separable, repeatable)")
    p_verify.add_argument("--f-tensor", default="so3", metavar="PATH|so3",
                          help="structure constants: builtin 'so3' or a JSON file")
    p_verify.add_argument("--hamiltonian", default="P1^2/2 + X1^2", metavar="EXPR",
                          help="Hamiltonian for the flat-coordinate check "
                               "(plain-text expression syntax)")
    common(p_verify)

    p_sim = sub.add_parser("simulate", help="numeric theorem residuals on a series")
    p_sim.add_argument("--input", metavar="PATH", help="time-series JSON file")
    p_sim.add_argument("--walk", action="store_true",
                       help="generate a Brownian walk triple instead of reading a file")
    p_sim.add_argument("--seed", type=int, default=0)
    p_sim.add_argument("--length", type=int, default=64)
    p_sim.add_argument("--k", type=_fraction, default=Fraction(1))
    p_sim.add_argument("--tau", type=_fraction, default=Fraction(1))
    p_sim.add_argument("--threshold", type=float, default=1e-9)
    p_sim.add_argument("--emit", choices=("residuals", "eb-fields"),
                       default="residuals",
                       help="'eb-fields' adds E and B samples to the output")
    common(p_sim)

    p_walk = sub.add_parser("walk", help="diffusion-constant identity on a walk")
    p_walk.add_argument("--input", metavar="PATH", help="time-series JSON file")
    p_walk.add_argument("--seed", type=int, default=0)
    p_walk.add_argument("--length", type=int, default=64)
    p_walk.add_argument("--k", type=_fraction, default=Fraction(1))
    p_walk.add_argument("--tau", type=_fraction, default=Fraction(1))
    p_walk.add_argument("--dim", type=int, default=1)
    common(p_walk)

    p_id = sub.add_parser("identities", help="structural identity self-tests")
    p_id.add_argument("--seed", type=int, default=0)
    p_id.add_argument("--count", type=int, default=50,
                      help="randomized cases per check")
    p_id.add_argument("--only", action="append", metavar="CHECK")
    common(p_id)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    commands = {
        "verify": cmd_verify,
        "simulate": cmd_simulate,
        "walk": cmd_walk,
        "identities": cmd_identities,
    }
    try:
        return commands[args.command](args)
    except (NCWorldsError, ParseError) as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_USAGE
    except (OSError, ValueError, json.JSONDecodeError) as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    raise SystemExit(main())
