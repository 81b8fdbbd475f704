"""Command line interface.

Exit codes: 0 ok, 1 verification failure, 2 usage or parse error, 3 degenerate target.
"""

import argparse
import csv
import io
import sys

import numpy as np

from . import document
from .analysis import (
    DEFAULT_FS,
    DEFAULT_WINDOW,
    CATALOG_ROWS,
    matches_catalog,
    recomputed_rows,
    scaling_exponent,
    sweep,
    reference_catalog,
    time_cost,
)
from .error_model import ErrorParams, amplitude_error_generator, faulty_compose
from .exceptions import DegenerateTarget, InsufficientData
from .su2 import compose, infidelity, is_unitary
from .targets import ROBUSTNESS_LEVELS, TARGET_KINDS, TargetSpec

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_DEGENERATE = 0, 1, 2, 3

GENERATOR_TOL = 1e-4
TARGET_TOL = 1e-10
SLOPE_MIN = 3.5


class UsageError(Exception):
    pass


def _parse_range(text: str):
    try:
        lo, hi, n = text.split(":")
        n = int(n)
        lo, hi = float(lo), float(hi)
    except ValueError:
        raise UsageError(f"expected lo:hi:n, got {text!r}")
    if n < 1:
        raise UsageError("range needs n >= 1")
    return tuple(np.linspace(lo, hi, n)) if n > 1 else (lo,)


def _parse_list(text: str):
    try:
        return tuple(float(x) for x in text.split(",") if x.strip())
    except ValueError:
        raise UsageError(f"expected comma-separated numbers, got {text!r}")


def _parse_window(text: str):
    try:
        lo, hi = (float(x) for x in text.split(":"))
    except ValueError:
        raise UsageError(f"expected lo:hi, got {text!r}")
    if not 0 < lo < hi:
        raise UsageError("slope window needs 0 < lo < hi")
    return lo, hi


def _parse_matrix(text: str):
    try:
        entries = tuple(complex(x.strip().replace(" ", "")) for x in text.split(","))
    except ValueError:
        raise UsageError(f"cannot parse matrix entries {text!r}")
    if len(entries) != 4:
        raise UsageError("--matrix needs four entries a,b,c,d (row major)")
    return entries


def cmd_synth(args, out):
    scale = np.pi / 180 if args.degrees else 1.0
    theta = None if args.theta is None else args.theta * scale
    phi = None if args.phi is None else args.phi * scale
    matrix = _parse_matrix(args.matrix) if args.matrix else None
    try:
        target_spec = TargetSpec(args.kind, args.robust, theta=theta, phi=phi, matrix=matrix)
    except ValueError as exc:
        raise UsageError(str(exc))
    syn = target_spec.synthesize()
    doc = document.SequenceDocument(
        target=target_spec.describe(),
        robustness=target_spec.robustness,
        pulses=syn.pulses,
        target_matrix=tuple(complex(z) for z in np.asarray(syn.target).ravel()),
        provenance=tuple(q._asdict() for q in syn.quadrilaterals),
    )
    gnorm = float(np.linalg.norm(amplitude_error_generator(syn.pulses))) if syn.pulses else 0.0
    report = (
        f"target: {doc.target}\nrobustness: {doc.robustness}\n"
        f"N = {len(syn.pulses)}\nT = {time_cost(syn.pulses):.6f}\n"
        f"eps-generator norm = {gnorm:.3e}\n"
        f"closure residual = {syn.closure_residual:.3e}\n"
        f"target infidelity = {infidelity(syn.target, compose(syn.pulses)):.3e}\n"
    )
    for i, q in enumerate(syn.quadrilaterals):
        report += f"quadrilateral {i}: phi3={q.phi3:.6f} phi4={q.phi4:.6f} r={q.r:.6f} branch={q.branch}\n"
    if args.output:
        document.save(doc, args.output)
        out.write(report)
    else:
        out.write(document.dumps(doc))
        sys.stderr.write(report)
    return EXIT_OK


def _load(path):
    try:
        return document.load(path)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}")
    except document.DocumentError as exc:
        raise UsageError(f"{path}: {exc}")


def sweep_csv(grid) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["f", "epsilon", "infidelity"])
    for f, eps, value in grid.rows():
        writer.writerow([f"{f:.12g}", f"{eps:.12g}", f"{value:.12g}"])
    return buf.getvalue()


def cmd_sweep(args, out):
    doc = _load(args.file)
    target = doc.target_unitary
    if target is None:
        raise UsageError("document has no target_matrix")
    eps = _parse_range(args.eps)
    fs = _parse_list(args.f) if args.f is not None else DEFAULT_FS
    if not fs:
        raise UsageError("--f needs at least one value")
    grid = sweep(target, doc.pulses, eps, fs, workers=args.workers, target_id=doc.target)
    text = sweep_csv(grid)
    if args.output:
        with open(args.output, "w", newline="") as fh:
            fh.write(text)
        out.write(f"wrote {len(eps) * len(fs)} rows to {args.output}\n")
    else:
        out.write(text)
    return EXIT_OK


def verify_document(doc, window=DEFAULT_WINDOW):
    """``(name, passed, detail)`` for each check that applies to the document."""
    target = doc.target_unitary
    seq = doc.pulses
    results = []
    ideal = compose(seq)
    ok = is_unitary(ideal) and is_unitary(faulty_compose(seq, ErrorParams(window[1], window[1])))
    results.append(("unitarity", ok, ""))
    if target is None:
        results.append(("target reproduction", False, "no target_matrix in document"))
        return results
    inf = infidelity(target, ideal)
    results.append(("target reproduction", inf < TARGET_TOL, f"infidelity {inf:.3e}"))
    if not seq:
        results.append(("closure (eps-generator norm)", True, "empty sequence"))
    else:
        g = float(np.linalg.norm(amplitude_error_generator(seq)))
        results.append(("closure (eps-generator norm)", g < GENERATOR_TOL, f"|g| = {g:.3e}"))
    variables = ["epsilon"] + (["f"] if doc.robustness == "nested" else [])
    for var in variables:
        name = f"{'eps' if var == 'epsilon' else 'f'}-slope"
        try:
            slope = scaling_exponent(seq, target, var, window)
        except InsufficientData:
            results.append((name, True, "infidelity below numerical floor"))
            continue
        results.append((name, slope >= SLOPE_MIN, f"slope {slope:.3f}"))
    return results


def cmd_verify(args, out):
    doc = _load(args.file)
    window = _parse_window(args.slope_window) if args.slope_window else DEFAULT_WINDOW
    results = verify_document(doc, window)
    for name, passed, detail in results:
        out.write(f"{'PASS' if passed else 'FAIL'} {name}" + (f": {detail}" if detail else "") + "\n")
    return EXIT_OK if all(passed for _, passed, _ in results) else EXIT_FAIL


def table_rows(gates=("hadamard", "z")):
    """One row per published sequence: catalog N/T per gate, then the rebuilt N/T."""
    catalog = {(e.name, e.gate): e for e in reference_catalog()}
    built = {(e.name, e.gate): e for e in recomputed_rows()}
    rows = []
    for name in CATALOG_ROWS:
        row = [name]
        for gate in gates:
            ref = catalog.get((name, gate))
            row += ["--", "--"] if ref is None else [ref.pulse_count, ref.time_cost]
        if all(x == "--" for x in row[1:]):
            continue
        rob = next(e.robustness for (n, _), e in catalog.items() if n == name)
        row.append(", ".join(sorted(rob)))
        checks = []
        for gate in gates:
            mine = built.get((name, gate))
            if mine is None:
                row += ["", ""]
            else:
                row += [mine.pulse_count, f"{mine.time_cost:.3f}"]
                checks.append(matches_catalog(mine))
        row.append("" if not checks else ("ok" if all(checks) else "MISMATCH"))
        rows.append(row)
    return rows


def cmd_table(args, out):
    gates = (args.gate,) if args.gate else ("hadamard", "z")
    label = {"hadamard": "H", "z": "Z"}
    header = ["sequence"]
    for g in gates:
        header += [f"{label[g]}_N", f"{label[g]}_T"]
    header.append("robustness")
    for g in gates:
        header += [f"{label[g]}_N_built", f"{label[g]}_T_built"]
    header.append("check")
    rows = table_rows(gates)
    if args.csv:
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)
        return EXIT_OK
    widths = [max(len(str(x)) for x in col) for col in zip(header, *rows)]
    for r in [header] + rows:
        out.write("  ".join(str(x).ljust(w) for x, w in zip(r, widths)).rstrip() + "\n")
    checked = [r for r in rows if r[-1]]
    mismatches = sum(1 for r in checked if r[-1] == "MISMATCH")
    out.write(f"{len(rows)} catalog rows, {len(checked)} rebuilt, {mismatches} mismatches\n")
    return EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(prog="robustpulse", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("synth", help="synthesize a robust sequence")
    p.add_argument("kind", choices=TARGET_KINDS)
    p.add_argument("--phi", type=float)
    p.add_argument("--theta", type=float)
    p.add_argument("--matrix", help="row-major complex entries a,b,c,d, e.g. 0.7071,0.7071,0.7071,-0.7071")
    p.add_argument("--degrees", action="store_true", help="read --theta/--phi in degrees")
    p.add_argument("--robust", choices=ROBUSTNESS_LEVELS, default="ae")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_synth)

    p = sub.add_parser("sweep", help="infidelity grid as CSV (f,epsilon,infidelity)")
    p.add_argument("file")
    p.add_argument("--eps", default="-0.2:0.2:81", help="lo:hi:n")
    p.add_argument("--f", help="comma-separated off-resonance values (default 0,0.001,0.01,0.1)")
    p.add_argument("--workers", type=int, default=None)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("verify", help="check a sequence document")
    p.add_argument("file")
    p.add_argument("--slope-window", help="lo:hi (default 1e-3:1e-2)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("table", help="compare with the published pulse counts and time costs")
    p.add_argument("--gate", choices=["hadamard", "z"])
    p.add_argument("--csv", action="store_true")
    p.set_defaults(func=cmd_table)
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out)
    except UsageError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE
    except DegenerateTarget as exc:
        sys.stderr.write(f"degenerate target: {exc}\n")
        return EXIT_DEGENERATE


if __name__ == "__main__":
    sys.exit(main())
