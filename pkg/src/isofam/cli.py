"""Command-line entry point.

Subcommands: enumerate, phi, basis, kostka, exceptional, verify, report.
Exit status is 0 on success, 1 when a verification check fails, 2 on usage
errors (argparse default).
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import excdata, family, phimap, symgrp, verify, zbasis

DEFAULT_D_MAX = 5


def _emit(text: str, out_path: str | None) -> None:
    if out_path:
        Path(out_path).write_text(text)
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _check_d(args, parser) -> int:
    d = args.d
    if d is None:
        parser.error("--d is required for this command")
    if not 0 <= d <= args.d_max:
        parser.error(f"--d must satisfy 0 <= d <= {args.d_max} (use --d-max to raise)")
    return d


def cmd_enumerate(args, parser) -> int:
    d = _check_d(args, parser)
    members = family.enumerate_family(d)
    if args.format == "json":
        _emit(family.family_to_json(d), args.out)
    elif args.format == "csv":
        lines = ["d,dim,basis,alpha"]
        for x in members:
            rec = x.to_json_dict()
            lines.append(
                f"{d},{x.dim},{';'.join(rec['basis'])},{';'.join(rec['alpha'])}"
            )
        _emit("\n".join(lines), args.out)
    else:
        lines = [f"family members for d={d}: {len(members)}"]
        lines += [f"  {x!r}  alpha={sorted(map(str, x.alpha))}" for x in members]
        _emit("\n".join(lines), args.out)
    return 0


def cmd_phi(args, parser) -> int:
    d = _check_d(args, parser)
    if args.format == "json":
        _emit(phimap.phi_pairs_to_json(d), args.out)
    else:
        lines = []
        for x in family.enumerate_family(d):
            lines.append(f"{x!r} -> {phimap.phi_vector(x)!r}")
        lines.append(f"union size: {len(phimap.tilde_v(d))}")
        _emit("\n".join(lines), args.out)
    return 0


def cmd_basis(args, parser) -> int:
    d = _check_d(args, parser)
    cert = zbasis.basis_matrix(d)
    if args.format == "csv":
        _emit(zbasis.certificate_to_csv(cert), args.out)
    elif args.format == "json":
        _emit(zbasis.certificate_to_json(cert), args.out)
    else:
        _emit(
            f"membership matrix d={d}: {len(cert.matrix)}x{len(cert.matrix)}, "
            f"determinant {cert.determinant}",
            args.out,
        )
    return 0


def cmd_kostka(args, parser) -> int:
    m = args.m
    if args.format == "json":
        _emit(symgrp.kostka_table_json(m), args.out)
    else:
        parts = symgrp.partitions(m)
        width = max(len(symgrp.partition_str(p)) for p in parts) + 2
        header = " " * width + "".join(
            symgrp.partition_str(p).rjust(width) for p in parts
        )
        lines = [header]
        for lam in parts:
            row = symgrp.partition_str(lam).ljust(width)
            row += "".join(
                str(symgrp.kostka(lam, mu)).rjust(width) for mu in parts
            )
            lines.append(row)
        _emit("\n".join(lines), args.out)
    return 0


def cmd_exceptional(args, parser) -> int:
    try:
        t = excdata.family_table(args.type, args.nc)
    except excdata.TableNotFound as exc:
        parser.error(str(exc))
    rep = excdata.verify_table(t)
    lines = []
    if args.format == "csv":
        _emit(t.to_csv(), args.out)
        body = None
    elif args.format == "json":
        payload = t.to_json_dict()
        payload["verification"] = [
            {"check": c.name, "passed": c.passed, "detail": c.detail}
            for c in rep.checks
        ]
        if t.n_c in excdata.CX_DEGREE:
            cc = excdata.cross_check_cx(t.n_c)
            payload["cross_check"] = {
                "passed": cc.passed,
                "column_partitions": cc.column_partitions,
                "row_partitions": cc.row_partitions,
            }
        _emit(json.dumps(payload, indent=2), args.out)
        body = None
    else:
        lines.append(t.to_csv().rstrip())
        lines.append("")
        for c in rep.checks:
            lines.append(
                f"{c.name}: {'PASS' if c.passed else 'FAIL'}"
                + (f" ({c.detail})" if c.detail else "")
            )
        if t.n_c in excdata.CX_DEGREE:
            cc = excdata.cross_check_cx(t.n_c)
            status = "PASS" if cc.passed else "FAIL"
            lines.append(f"symmetric-group block cross-check: {status}")
            for k, v in cc.column_partitions.items():
                lines.append(f"  column {k} <-> partition {v}")
        body = "\n".join(lines)
    if body is not None:
        _emit(body, args.out)
    ok = rep.passed and (
        t.n_c not in excdata.CX_DEGREE or excdata.cross_check_cx(t.n_c).passed
    )
    return 0 if ok else 1


def cmd_verify(args, parser) -> int:
    checks = verify.run_all(args.d_max)
    failed = [c for c in checks if not c.passed]
    if args.format == "json":
        payload = {
            "d_max": args.d_max,
            "passed": not failed,
            "checks": [
                {"name": c.name, "passed": c.passed, "detail": c.detail}
                for c in checks
            ],
        }
        _emit(json.dumps(payload, indent=2), args.out)
    else:
        lines = [c.line() for c in checks]
        lines.append(
            f"{len(checks) - len(failed)}/{len(checks)} checks passed (d_max={args.d_max})"
        )
        _emit("\n".join(lines), args.out)
    return 0 if not failed else 1


def cmd_report(args, parser) -> int:
    from . import report  # deferred: pulls in matplotlib

    outdir = args.out or "isofam-report"
    written = report.generate_report(args.d_max, outdir)
    sys.stdout.write("\n".join(str(p) for p in written) + "\n")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="isofam",
        description="Enumerate, verify and export the isotropic-subspace "
        "family machinery and the exceptional multiplicity tables.",
    )
    parser.add_argument("--d-max", type=int, default=DEFAULT_D_MAX,
                        help=f"upper bound on d (default {DEFAULT_D_MAX})")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, needs_d=False):
        p.add_argument("--d", type=int, default=None, help="space parameter d")
        p.add_argument("--format", choices=("json", "csv", "text"), default="text")
        p.add_argument("--out", default=None, help="output file (default stdout)")

    common(sub.add_parser("enumerate", help="list family members"))
    common(sub.add_parser("phi", help="member-to-vector table"))
    common(sub.add_parser("basis", help="membership-matrix certificate"))
    pk = sub.add_parser("kostka", help="Kostka table for the symmetric group")
    pk.add_argument("--m", type=int, required=True)
    pk.add_argument("--format", choices=("json", "text"), default="text")
    pk.add_argument("--out", default=None)
    pe = sub.add_parser("exceptional", help="show and verify a stored table")
    pe.add_argument("--type", default=None, help="Weyl type, e.g. F4")
    pe.add_argument("--nc", type=int, default=None, help="family size")
    pe.add_argument("--format", choices=("json", "csv", "text"), default="text")
    pe.add_argument("--out", default=None)
    pv = sub.add_parser("verify", help="run the full check suite")
    pv.add_argument("--format", choices=("json", "text"), default="text")
    pv.add_argument("--out", default=None)
    pr = sub.add_parser("report", help="render figures and delimited exports")
    pr.add_argument("--out", default=None, help="output directory")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handlers = {
        "enumerate": cmd_enumerate,
        "phi": cmd_phi,
        "basis": cmd_basis,
        "kostka": cmd_kostka,
        "exceptional": cmd_exceptional,
        "verify": cmd_verify,
        "report": cmd_report,
    }
    return handlers[args.command](args, parser)


if __name__ == "__main__":
    sys.exit(main())
