"""``entangle-ring`` command line.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 malformed input.
Floats are printed in scientific notation with 17 significant digits so
output is byte-stable for fixed inputs and seeds.
"""
from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from .errors import ContractError, DomainError
from .hilbert import ORACLE_KMAX, molien_expand
from .invariants import all_values, basis_values, evaluate_all
from .positivity import (
    char_poly_coeffs,
    normalized_bounds,
    positivity_check,
    region_check,
    region_csv,
    region_sample,
    state_casimirs,
)
from .states import KINDS, DensityMatrix, FanoForm, fano_compose, fano_decompose, random_state
from .verification import CHECKS, run_checks

PURITY_TOL = 1e-10


class InputError(ValueError):
    pass


# --- formatting ---------------------------------------------------------------


def fmt_number(x) -> str:
    if isinstance(x, (bool, np.bool_)):
        return "true" if x else "false"
    if isinstance(x, (int, np.integer)):
        return str(int(x))
    return format(float(x), ".16e")


def dumps(obj, indent: int = 2, _level: int = 0) -> str:
    """JSON with every float in ``%.16e`` form."""
    pad = " " * (indent * (_level + 1))
    end = " " * (indent * _level)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [f"{pad}{json.dumps(str(k))}: {dumps(v, indent, _level + 1)}" for k, v in obj.items()]
        return "{\n" + ",\n".join(items) + "\n" + end + "}"
    if isinstance(obj, (list, tuple, np.ndarray)):
        seq = list(obj)
        if not seq:
            return "[]"
        if all(not isinstance(v, (dict, list, tuple, np.ndarray)) for v in seq):
            return "[" + ", ".join(dumps(v, indent, _level + 1) for v in seq) + "]"
        return "[\n" + ",\n".join(pad + dumps(v, indent, _level + 1) for v in seq) + "\n" + end + "]"
    if obj is None:
        return "null"
    if isinstance(obj, str):
        return json.dumps(obj)
    return fmt_number(obj)


def _flatten(obj, prefix="") -> dict:
    out = {}
    if isinstance(obj, dict):
        for k, v in obj.items():
            out.update(_flatten(v, f"{prefix}{k}."))
    elif isinstance(obj, (list, tuple, np.ndarray)):
        for i, v in enumerate(obj):
            out.update(_flatten(v, f"{prefix}{i}."))
    else:
        out[prefix[:-1]] = obj
    return out


def _cell(v) -> str:
    return v if isinstance(v, str) else ("" if v is None else fmt_number(v))


def emit(payload, fmt: str, out) -> None:
    if fmt == "json":
        out.write(dumps(payload) + "\n")
        return
    flat = _flatten(payload)
    if fmt == "csv":
        out.write(",".join(flat) + "\n")
        out.write(",".join(_cell(v) for v in flat.values()) + "\n")
    else:
        width = max((len(k) for k in flat), default=0)
        for k, v in flat.items():
            out.write(f"{k.ljust(width)}  {_cell(v)}\n")


# --- input --------------------------------------------------------------------


def _read_json(path: str):
    try:
        text = sys.stdin.read() if path == "-" else open(path, encoding="utf-8").read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"invalid JSON in {path}: {exc}") from exc


def load_state(path: str) -> DensityMatrix:
    """A state record, or a Fano record which is composed into a state."""
    data = _read_json(path)
    if not isinstance(data, dict):
        raise InputError("expected a JSON object")
    if "re" in data:
        return DensityMatrix.from_dict(data)
    if "a" in data:
        return fano_compose(FanoForm.from_dict(data))
    raise InputError("input is neither a state record (re/im) nor a Fano record (a/b/C)")


def load_fano(path: str) -> FanoForm:
    data = _read_json(path)
    if not isinstance(data, dict):
        raise InputError("expected a JSON object")
    return FanoForm.from_dict(data)


# --- subcommands --------------------------------------------------------------


def cmd_decompose(args, out):
    emit(fano_decompose(load_state(args.input)).to_dict(), args.format or "json", out)
    return 0


def cmd_compose(args, out):
    emit(fano_compose(load_fano(args.input)).to_dict(), args.format or "json", out)
    return 0


def cmd_invariants(args, out):
    rho = load_state(args.input)
    f = fano_decompose(rho)
    inv = evaluate_all(f)
    cas = state_casimirs(rho)
    payload = {
        "invariants": inv.as_dict(),
        "basis": basis_values(inv, cas).as_dict(),
        "casimirs": {"C2": cas.c2, "C3": cas.c3, "C4": cas.c4},
    }
    emit(payload, args.format or "json", out)
    return 0


def _require_unit_trace(rho):
    if not rho.unit_trace:
        raise InputError("state must have unit trace")


def cmd_positivity(args, out):
    rho = load_state(args.input)
    _require_unit_trace(rho)
    coeffs = char_poly_coeffs(rho)
    payload = {
        "S": coeffs.s.tolist(),
        "normalized_bounds": normalized_bounds(coeffs).tolist(),
        "status": positivity_check(rho).status,
    }
    if rho.dim == 4:
        cas = state_casimirs(rho)
        reg = region_check(cas)
        payload["casimirs"] = {"C2": cas.c2, "C3": cas.c3, "C4": cas.c4}
        payload["region"] = {"status": reg.status, "margins": reg.margins.tolist()}
    emit(payload, args.format or "json", out)
    return 0


def classify(rho: DensityMatrix) -> dict:
    _require_unit_trace(rho)
    out = {
        "purity": "pure" if abs(rho.purity() - 1.0) <= PURITY_TOL else "mixed",
        "positivity": positivity_check(rho).status,
    }
    if rho.dim == 4:
        out["region"] = region_check(state_casimirs(rho)).status
    return out


def cmd_classify(args, out):
    result = classify(load_state(args.input))
    fmt = args.format or "table"
    if fmt == "table":
        parts = [result["purity"], result["positivity"]]
        if "region" in result:
            parts.append(f"region:{result['region']}")
        out.write(", ".join(parts) + "\n")
    else:
        emit(result, fmt, out)
    return 0


def cmd_region_sample(args, out):
    rows = region_sample(args.n, args.seed, args.kind)
    if (args.format or "csv") == "csv":
        region_csv(rows, out)
    else:
        emit([r.__dict__ for r in rows], args.format, out)
    return 0


def cmd_molien(args, out):
    coeffs = list(molien_expand(args.kmax).coeffs)
    fmt = args.format or "json"
    if fmt == "json":
        out.write(dumps({"kmax": args.kmax, "coeffs": coeffs}) + "\n")
    else:
        sep = "," if fmt == "csv" else " "
        out.write(f"k{sep}d_k\n")
        for k, d in enumerate(coeffs):
            out.write(f"{k}{sep}{d}\n")
    return 0


def cmd_random_state(args, out):
    emit(random_state(args.dim, args.seed, args.kind).to_dict(), args.format or "json", out)
    return 0


def cmd_verify(args, out):
    names = [n for n in CHECKS if getattr(args, n)]
    if args.all or not names:
        names = list(CHECKS)
    report = run_checks(names, args.seed, trials=args.trials, kmax=args.kmax)
    fmt = args.format or "json"
    if fmt == "table":
        for name, res in report["checks"].items():
            out.write(f"{name:<14} {'PASS' if res['passed'] else 'FAIL'}  {res['seconds']:.2f}s\n")
    else:
        emit(report, fmt, out)
    return 0 if report["passed"] else 1


# --- parser -------------------------------------------------------------------


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="entangle-ring", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, handler, help_, *, needs_input=False, seeded=False):
        sp = sub.add_parser(name, help=help_)
        sp.set_defaults(handler=handler)
        sp.add_argument("--format", choices=("json", "csv", "table"))
        if needs_input:
            sp.add_argument("--input", default="-", metavar="PATH|-")
        if seeded:
            sp.add_argument("--seed", type=int, required=True)
        return sp

    add("decompose", cmd_decompose, "state JSON -> Fano form", needs_input=True)
    add("compose", cmd_compose, "Fano JSON -> state JSON", needs_input=True)
    add("invariants", cmd_invariants, "local invariants, K/J basis and Casimirs", needs_input=True)
    add("positivity", cmd_positivity, "S_k, normalized bounds and Casimir region", needs_input=True)
    add("classify", cmd_classify, "pure/mixed, positivity and region status", needs_input=True)

    sp = add("region-sample", cmd_region_sample, "CSV of Casimir triples of random states", seeded=True)
    sp.add_argument("--n", type=_positive_int, default=1000)
    sp.add_argument("--kind", choices=KINDS, default="hilbert-schmidt")

    sp = add("molien", cmd_molien, "Hilbert series coefficients")
    sp.add_argument("--kmax", type=int, default=16)

    sp = add("random-state", cmd_random_state, "seeded random state JSON", seeded=True)
    sp.add_argument("--dim", type=int, default=4)
    sp.add_argument("--kind", choices=KINDS, default="hilbert-schmidt")

    sp = add("verify", cmd_verify, "run the numerical verification suite", seeded=True)
    sp.add_argument("--all", action="store_true")
    for name in CHECKS:
        sp.add_argument(f"--{name}", action="store_true")
    sp.add_argument("--trials", type=_positive_int)
    sp.add_argument("--kmax", type=int)
    return p


def run(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.command == "verify" and args.kmax is not None and not 1 <= args.kmax <= ORACLE_KMAX:
        parser.print_usage(sys.stderr)
        print(f"entangle-ring: error: --kmax must be in 1..{ORACLE_KMAX} for verify", file=sys.stderr)
        return 2
    if args.command == "random-state" and args.dim < 2:
        print("entangle-ring: error: --dim must be >= 2", file=sys.stderr)
        return 2
    try:
        return args.handler(args, out)
    except (InputError, ContractError, DomainError) as exc:
        print(f"entangle-ring: {exc}", file=sys.stderr)
        return 3


def main() -> None:
    sys.exit(run())
