"""Command-line front end.

    interlacing zeros jacobi --alpha 6 --beta 5 -n 6
    interlacing extra-points mp --lambda 0.12 --phi 7/9pi -n 6
    interlacing classify pj --a -12.83 --b -5.85 -n 7 --format csv
    interlacing table T2
    interlacing scan conjecture1 default

Every emission is an object with ``schema_version``, ``command``, ``inputs``,
``payload`` and ``diagnostics``. CSV output flattens the payload into
``key,value`` rows with dotted keys (list positions are 1-based).

Exit codes: 0 success, 2 input error, 3 inadmissible parameters,
4 oracle mismatch (verification failed, or a table outside tolerance),
5 counterexample found.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass, field
from pathlib import Path

from . import families as fm
from . import recurrence as rc
from . import scan as sc
from .errors import DegenerateConfigurationError, InadmissibleError, InterlacingError, InvalidParameterError
from .interlace import Verdict

SCHEMA_VERSION = "1"

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_INADMISSIBLE = 3
EXIT_MISMATCH = 4
EXIT_COUNTEREXAMPLE = 5

_FLAGS = {"jacobi": ("alpha", "beta"), "mp": ("lambda", "phi"), "pj": ("a", "b")}


class UsageError(Exception):
    pass


@dataclass
class OutputRecord:
    command: str
    inputs: dict
    payload: dict
    diagnostics: list = field(default_factory=list)
    schema_version: str = SCHEMA_VERSION

    def to_dict(self) -> dict:
        return sc._clean(
            {
                "schema_version": self.schema_version,
                "command": self.command,
                "inputs": self.inputs,
                "payload": self.payload,
                "diagnostics": self.diagnostics,
            }
        )

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, ensure_ascii=False, indent=1)

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["key", "value"])
        w.writerow(["schema_version", self.schema_version])
        w.writerow(["command", self.command])
        d = self.to_dict()
        for prefix in ("inputs", "payload"):
            for key, value in _flatten(d[prefix], prefix):
                w.writerow([key, _cell(value)])
        for i, msg in enumerate(self.diagnostics, start=1):
            w.writerow([f"diagnostics.{i}", msg])
        return buf.getvalue()


def _flatten(obj, prefix):
    if isinstance(obj, dict):
        for k in sorted(obj):
            yield from _flatten(obj[k], f"{prefix}.{k}")
    elif isinstance(obj, list):
        if not obj:
            yield prefix, ""
        for i, v in enumerate(obj, start=1):
            yield from _flatten(v, f"{prefix}.{i}")
    else:
        yield prefix, obj


def _cell(v):
    if isinstance(v, bool):
        return "true" if v else "false"
    if v is None:
        return ""
    if isinstance(v, float):
        return repr(v)
    return str(v)


# --------------------------------------------------------------------------
# argument handling


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _family_args(p):
    p.add_argument("family", choices=sorted(_FLAGS))
    p.add_argument("--alpha", type=float)
    p.add_argument("--beta", type=float)
    p.add_argument("--lambda", dest="lambda_", type=float)
    p.add_argument("--phi", help="radians or a rational multiple of pi such as 7/9pi")
    # allow_abbrev is off, so --a / --b cannot be confused with each other
    p.add_argument("--a", type=float)
    p.add_argument("--b", type=float)
    p.add_argument("-n", type=int, required=True)


def _common(p):
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--out", metavar="FILE")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="interlacing", description=__doc__.split("\n\n")[0], allow_abbrev=False)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name, helptext in (
        ("zeros", "zeros of the degree-n polynomial"),
        ("extra-points", "the extra points E1 <= E2 and admissibility"),
        ("classify", "placement of E1, E2 and the completed-interlacing verdict"),
    ):
        p = sub.add_parser(name, help=helptext, allow_abbrev=False)
        _family_args(p)
        _common(p)
    p = sub.add_parser("table", help="reproduce one of the tables T2..T6", allow_abbrev=False)
    p.add_argument("table_id")
    _common(p)
    p = sub.add_parser("scan", help="run a parameter sweep", allow_abbrev=False)
    p.add_argument("kind", choices=("conjecture1", "conjecture2", "theorem"))
    p.add_argument("spec", help="grid file, or the name of a shipped grid ('default' for the kind's own)")
    p.add_argument("--workers", type=int, default=1)
    _common(p)
    return parser


def _family(args):
    names = _FLAGS[args.family]
    raw = {
        "alpha": args.alpha,
        "beta": args.beta,
        "lambda": args.lambda_,
        "phi": args.phi,
        "a": args.a,
        "b": args.b,
    }
    missing = [f"--{k}" for k in names if raw[k] is None]
    if missing:
        raise UsageError(f"{args.family} needs {' '.join(missing)}")
    extra = [f"--{k}" for k, v in raw.items() if v is not None and k not in names]
    if extra:
        raise UsageError(f"{' '.join(extra)} do not apply to {args.family}")
    params = {k: raw[k] for k in names}
    inputs = {"family": args.family, "n": args.n, **params}
    if args.family == "mp":
        try:
            params["phi"] = fm.parse_angle(params["phi"])
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    if args.n < 0:
        raise UsageError("-n must be non-negative")
    return fm.make_family(args.family, **params), inputs


# --------------------------------------------------------------------------
# commands; each returns (OutputRecord, exit code)


def cmd_zeros(family, n, inputs):
    table = family.recurrence(max(n, 1))
    zs = rc.zeros(table, n)
    return OutputRecord("zeros", inputs, {"degree": n, "zeros": list(zs)}), EXIT_OK


def _admissibility(family, n):
    if isinstance(family, fm.PseudoJacobi):
        adm = fm.pj_admissible(n, family.a, family.b)
        return {
            "admissible": adm.ok,
            "reason": adm.reason,
            "b_threshold": adm.b_threshold,
            "closed_form_agrees": adm.closed_form_ok == adm.ok,
        }
    if isinstance(family, fm.MeixnerPollaczek):
        (lo1, hi1), (lo2, hi2) = fm.mp_phi_window(n, family.lam)
        return {"admissible": fm.in_mp_phi_window(n, family.lam, family.phi), "window": [[lo1, hi1], [lo2, hi2]]}
    return {"admissible": True}


def cmd_extra_points(family, n, inputs):
    info = _admissibility(family, n)
    ep = family.extra_points(n)
    payload = {"e1": ep.e1, "e2": ep.e2, "discriminant": ep.discriminant, **info}
    diags = []
    if info.get("closed_form_agrees") is False:
        diags.append("closed-form |b| threshold disagrees with the discriminant test")
    return OutputRecord("extra-points", inputs, payload, diags), EXIT_OK


def cmd_classify(family, n, inputs):
    rec = sc.run_draw(family, n)
    payload = {
        "e1": rec.extra.e1,
        "e2": rec.extra.e2,
        "discriminant": rec.extra.discriminant,
        "sign_checks": rec.checks._asdict(),
        "p_zeros": list(rec.p_zeros),
        "g_zeros": list(rec.g_zeros),
        **sc.report_dict(rec.report),
    }
    rep = rec.report
    # the relation holds for these zeros, so an excluded configuration is a contradiction too
    bad = rep.mismatch or rep.verdict is Verdict.IMPOSSIBLE_CONFIG
    diags = [rep.detail] if rep.detail else []
    return OutputRecord("classify", inputs, payload, diags), EXIT_MISMATCH if bad else EXIT_OK


def cmd_table(table_id):
    report = sc.reproduce_table(table_id)
    diags = []
    for blk in report.blocks:
        for name, printed, computed, dev in blk.worst:
            diags.append(f"{blk.params}: {name} printed {printed} computed {computed:.15g} deviation {dev:.3g}")
        if not blk.verdict_match:
            diags.append(f"{blk.params}: verdict {blk.verdict} expected {blk.expected_verdict}")
        if not blk.statements_match:
            diags.append(f"{blk.params}: statements {blk.statements} expected {blk.expected_statements}")
    rec = OutputRecord("table", {"table_id": table_id}, report.to_dict(), diags)
    return rec, EXIT_OK if report.ok else EXIT_MISMATCH


def load_spec(kind: str, spec: str) -> sc.SweepSpec:
    path = Path(spec)
    if path.is_file():
        return sc.SweepSpec.from_file(path)
    stem = path.name.removesuffix(".grid")
    if stem == "default":
        if kind == "theorem":
            raise sc.SpecError("theorem sweeps have no single default; use theorem-jacobi, theorem-mp or theorem-pj")
        stem = kind
    return sc.default_spec(stem)


def cmd_scan(kind, spec_name, workers=1):
    spec = load_spec(kind, spec_name)
    if kind == "conjecture1":
        result = sc.scan_conjecture1(spec, workers)
    elif kind == "conjecture2":
        result = sc.scan_conjecture2(spec, workers)
    else:
        result = sc.theorem_sweep(spec, workers=workers)
    diags = [f"{len(result.failures)} draws failed numerically or were degenerate"] if result.failures else []
    inputs = {"kind": kind, "spec": spec_name, "family": spec.family, "seed": spec.seed}
    rec = OutputRecord("scan", inputs, result.to_dict(), diags)
    return rec, EXIT_COUNTEREXAMPLE if result.counterexamples else EXIT_OK


# --------------------------------------------------------------------------


def _error(command, exc, code, stream):
    body = {
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "error": {
            "type": type(exc).__name__,
            "reason": getattr(exc, "reason", None),
            "message": str(exc),
            "exit_code": code,
        },
    }
    print(json.dumps(body, sort_keys=True), file=stream)
    return code


def main(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    command = None
    try:
        args = parser.parse_args(argv)
        command = args.command
        if command in ("zeros", "extra-points", "classify"):
            family, inputs = _family(args)
            fn = {"zeros": cmd_zeros, "extra-points": cmd_extra_points, "classify": cmd_classify}[command]
            record, code = fn(family, args.n, inputs)
        elif command == "table":
            record, code = cmd_table(args.table_id)
        else:
            record, code = cmd_scan(args.kind, args.spec, args.workers)
    except UsageError as exc:
        return _error(command, exc, EXIT_INPUT, stderr)
    except InadmissibleError as exc:
        return _error(command, exc, EXIT_INADMISSIBLE, stderr)
    except DegenerateConfigurationError as exc:
        # hypotheses of the relation fail (e.g. a common zero): nothing to classify
        return _error(command, exc, EXIT_INADMISSIBLE, stderr)
    except (InvalidParameterError, InterlacingError, OSError) as exc:
        return _error(command, exc, EXIT_INPUT, stderr)
    text = record.to_json() if args.format == "json" else record.to_csv()
    if args.out:
        Path(args.out).write_text(text if text.endswith("\n") else text + "\n")
    else:
        stdout.write(text if text.endswith("\n") else text + "\n")
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
