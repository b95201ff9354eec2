"""Command-line front end.

Subcommands:

    orbits   --modulus N --level k [--label a0,a1,...]
    product  --modulus N --level k --a a0,... --b b0,... [--method M]
    fusion   --modulus N --level k --lambda c1,... --mu c1,... --nu c1,...
    verify   --kind KIND --modulus N --kmax K [--include-nonrow-b]
             [--format json|csv|text] [--out PATH] [--threads T]

Exit codes: 0 success (and zero violations for verify), 1 scan finished
with violations, 2 usage or validation error, 3 enumeration-cap or
numerical-drift failure.

On the wire, orbit labels are multiplicity vectors and weights are
fundamental-weight coefficient vectors; standard-form tuples only appear in
text output.  JSON stays integer-only unless --debug-raw is given.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys

from .core import (
    Params,
    enumerate_orbit,
    enumerate_labels,
    make_label,
    orbit_size,
    standard_form,
)
from .errors import BoundExceeded, NumericalDrift, OrbitFusionError
from .fusion import fusion_coefficient, fusion_coefficient_raw
from .product import METHODS, DEFAULT_METHOD, product
from .verify import SCAN_KINDS, Report, ScanSpec, run_scan
from .weights import Weight


def _parse_vector(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError:
        raise ValueError(f"expected a comma-separated integer vector, got {text!r}")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="orbitfusion",
        description="orbit structure constants, fusion coefficients, and verification scans",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    orbits = sub.add_parser("orbits", help="list orbit labels, or one orbit's elements")
    orbits.add_argument("--modulus", type=int, required=True)
    orbits.add_argument("--level", type=int, required=True)
    orbits.add_argument("--label", help="multiplicity vector a0,a1,...; enumerate its orbit")
    orbits.add_argument("--format", choices=("json", "text"), default="json")

    prod = sub.add_parser("product", help="expand the product of two orbits")
    prod.add_argument("--modulus", type=int, required=True)
    prod.add_argument("--level", type=int, required=True)
    prod.add_argument("--a", required=True, help="multiplicity vector of the first orbit")
    prod.add_argument("--b", required=True, help="multiplicity vector of the second orbit")
    prod.add_argument("--method", choices=METHODS, default=DEFAULT_METHOD)
    prod.add_argument("--format", choices=("json", "text"), default="json")

    fus = sub.add_parser("fusion", help="one su(N) level-k fusion coefficient")
    fus.add_argument("--modulus", type=int, required=True)
    fus.add_argument("--level", type=int, required=True)
    fus.add_argument("--lambda", dest="lam", required=True, help="weight coefficients c1,...")
    fus.add_argument("--mu", required=True)
    fus.add_argument("--nu", required=True)
    fus.add_argument("--debug-raw", action="store_true", help="include the raw complex sum")
    fus.add_argument("--format", choices=("json", "text"), default="json")

    ver = sub.add_parser("verify", help="run a verification scan")
    ver.add_argument("--kind", choices=SCAN_KINDS, required=True)
    ver.add_argument("--modulus", type=int, required=True)
    ver.add_argument("--kmax", type=int, required=True)
    ver.add_argument("--include-nonrow-b", action="store_true")
    ver.add_argument("--format", choices=("json", "csv", "text"), default="json")
    ver.add_argument("--out", default="-", help="output path, - for stdout")
    ver.add_argument("--threads", type=int, default=os.cpu_count() or 1)
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse already printed the diagnostic
        return int(exc.code or 0)
    try:
        if args.command == "orbits":
            return _cmd_orbits(args)
        if args.command == "product":
            return _cmd_product(args)
        if args.command == "fusion":
            return _cmd_fusion(args)
        return _cmd_verify(args)
    except (BoundExceeded, NumericalDrift) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (OrbitFusionError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def _cmd_orbits(args) -> int:
    params = Params(args.modulus, args.level)
    if args.label is not None:
        label = make_label(params, _parse_vector(args.label))
        elements = [list(t) for t in enumerate_orbit(label)]
        if args.format == "json":
            payload = {
                "label": list(label.mults),
                "size": orbit_size(label),
                "elements": elements,
            }
            print(json.dumps(payload, sort_keys=True))
        else:
            print(f"orbit {label}  size {orbit_size(label)}  standard form {standard_form(label)}")
            for t in elements:
                print(" ", tuple(t))
        return 0
    rows = [
        {"label": list(label.mults), "size": orbit_size(label)}
        for label in enumerate_labels(params)
    ]
    if args.format == "json":
        print(json.dumps(rows, sort_keys=True))
    else:
        print(f"{len(rows)} orbits for modulus {params.modulus}, level {params.level}")
        for label in enumerate_labels(params):
            print(f"  {label}  size {orbit_size(label):>6}  standard form {standard_form(label)}")
    return 0


def _cmd_product(args) -> int:
    params = Params(args.modulus, args.level)
    a = make_label(params, _parse_vector(args.a))
    b = make_label(params, _parse_vector(args.b))
    expansion = product(a, b, args.method)
    if args.format == "json":
        print(json.dumps({str(c): m for c, m in expansion.sorted_items()}))
    else:
        print(f"{a} x {b} = {expansion}")
    return 0


def _cmd_fusion(args) -> int:
    lam = Weight(_parse_vector(args.lam), args.level)
    mu = Weight(_parse_vector(args.mu), args.level)
    nu = Weight(_parse_vector(args.nu), args.level)
    if lam.modulus != args.modulus:
        raise ValueError(
            f"weights for modulus {args.modulus} need {args.modulus - 1} coefficients"
        )
    value = fusion_coefficient(lam, mu, nu)
    if args.debug_raw:
        raw = fusion_coefficient_raw(lam, mu, nu)
        if args.format == "json":
            print(json.dumps({"coefficient": value, "raw_re": raw.real, "raw_im": raw.imag}))
        else:
            print(f"coefficient {value} (raw {raw.real:+.12e} {raw.imag:+.12e}j)")
    elif args.format == "json":
        print(value)
    else:
        print(f"N_({args.mu}),({args.lam})^({args.nu}) at level {args.level} = {value}")
    return 0


def _cmd_verify(args) -> int:
    spec = ScanSpec(args.kind, args.modulus, args.kmax, args.include_nonrow_b)
    report = run_scan(spec, threads=max(1, args.threads))
    if args.format == "json":
        text = json.dumps(_report_dict(report), sort_keys=True, indent=2) + "\n"
    elif args.format == "csv":
        text = _report_csv(report)
    else:
        text = _report_text(report)
    if args.out == "-":
        sys.stdout.write(text)
    else:
        with open(args.out, "w", encoding="utf-8") as handle:
            handle.write(text)
    return 0 if report.passed else 1


def _violation_dict(v) -> dict:
    return {
        "k": v.k,
        "a": list(v.a),
        "b": list(v.b),
        "c": list(v.c),
        "lhs": v.lhs,
        "rhs": v.rhs,
    }


def _report_dict(report: Report) -> dict:
    spec = report.spec
    return {
        "kind": spec.kind,
        "modulus": spec.modulus,
        "k_max": spec.k_max,
        "include_nonrow_b": spec.include_nonrow_b,
        "cases_checked": report.cases_checked,
        "violations": [_violation_dict(v) for v in report.violations],
        "evidence": [_violation_dict(v) for v in report.evidence],
        "elapsed_ms": int(report.elapsed * 1000),
        "passed": report.passed,
    }


def _vec(entries) -> str:
    return "(%s)" % ",".join(str(e) for e in entries)


def _report_csv(report: Report) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(["k", "a", "b", "c", "lhs", "rhs", "status"])
    for v in report.violations:
        writer.writerow([v.k, _vec(v.a), _vec(v.b), _vec(v.c), v.lhs, v.rhs, "violation"])
    for v in report.evidence:
        writer.writerow([v.k, _vec(v.a), _vec(v.b), _vec(v.c), v.lhs, v.rhs, "evidence"])
    writer.writerow(
        [
            "summary",
            report.cases_checked,
            len(report.violations),
            len(report.evidence),
            "",
            "",
            "pass" if report.passed else "fail",
        ]
    )
    return buffer.getvalue()


def _report_text(report: Report) -> str:
    spec = report.spec
    lines = [
        f"scan {spec.kind}  modulus={spec.modulus}  k_max={spec.k_max}"
        f"  include_nonrow_b={str(spec.include_nonrow_b).lower()}",
        f"cases checked: {report.cases_checked}",
        f"violations: {len(report.violations)}",
    ]
    for v in report.violations:
        lines.append(
            f"  k={v.k}  a={_vec(v.a)}  b={_vec(v.b)}  c={_vec(v.c)}  lhs={v.lhs}  rhs={v.rhs}"
        )
    lines.append(f"evidence findings (not part of the claim): {len(report.evidence)}")
    for v in report.evidence:
        lines.append(
            f"  k={v.k}  a={_vec(v.a)}  b={_vec(v.b)}  c={_vec(v.c)}  lhs={v.lhs}  rhs={v.rhs}"
        )
    lines.append(f"elapsed: {int(report.elapsed * 1000)} ms")
    lines.append("result: PASS" if report.passed else "result: FAIL")
    return "\n".join(lines) + "\n"


if __name__ == "__main__":
    sys.exit(main())
