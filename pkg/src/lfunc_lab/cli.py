"""Command-line entry point: ``lfunc-lab <command> [options]``.

Exit codes: 0 success, 2 invalid input, 3 computation error, 4 I/O failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from pathlib import Path

import mpmath

from . import artin, galois, nctorus, selberg
from .dirichlet import (DEFAULT_PRECISION, LFunctionHandle, coeffs_from_euler, coeffs_to_csv,
                        compare, evaluate, product_handle)
from .errors import InvalidInput, LFuncError, MissingPrime, NormalFormMismatch, NotFound
from .primes import sieve

EXIT_OK, EXIT_INPUT, EXIT_COMPUTE, EXIT_IO = 0, 2, 3, 4
PRECISION_ENV = "LFUNC_LAB_PRECISION"


def _fmt(x) -> str:
    if isinstance(x, int):
        return str(x)
    if isinstance(x, (mpmath.mpf, mpmath.mpc)):
        return mpmath.nstr(x, 17, strip_zeros=False)
    return format(float(x), ".17g")


def _read_json(path: str):
    try:
        with open(path) as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise InvalidInput(f"{path}: {exc}") from exc


def _dump(doc) -> str:
    return json.dumps(doc, indent=2) + "\n"


def load_field(path: str) -> galois.FieldDescriptor:
    return galois.FieldDescriptor.from_json(_read_json(path))


def load_rep(path: str) -> artin.Representation:
    return artin.Representation.from_json(_read_json(path))


def load_handle(path: str) -> LFunctionHandle:
    return LFunctionHandle.from_json(_read_json(path))


def load_torus(path: str, strategy_arg: str | None):
    base = Path(path).parent

    def resolve(p):
        return load_handle(str(base / p))

    torus, strategy = nctorus.torus_from_json(_read_json(path), resolve)
    if strategy_arg:
        if os.path.exists(strategy_arg):
            doc, sbase = _read_json(strategy_arg), Path(strategy_arg).parent
        else:
            try:
                doc, sbase = json.loads(strategy_arg), Path.cwd()
            except json.JSONDecodeError as exc:
                raise InvalidInput(f"--strategy: {exc}") from exc
        strategy = nctorus.strategy_from_json(doc, lambda p: load_handle(str(sbase / p)))
    if strategy is None:
        raise InvalidInput("no strategy in torus document and no --strategy given")
    return torus, strategy


class Output:
    """Collects named artifacts and writes them deterministically."""

    def __init__(self, out: str | None):
        self.out = out
        self.primary: str | None = None
        self.extra: dict[str, str] = {}

    def emit(self) -> None:
        if self.out is None:
            sys.stdout.write(self.primary or "")
            return
        target = Path(self.out)
        target.parent.mkdir(parents=True, exist_ok=True)
        target.write_text(self.primary or "")
        for suffix, text in self.extra.items():
            target.with_suffix(suffix).write_text(text)


def _require(args, *names):
    for n in names:
        if getattr(args, n) in (None, []):
            raise InvalidInput(f"--{n.replace('_', '-')} is required for {args.command}")


def _check_bounds(args):
    if args.prime_bound < 2:
        raise InvalidInput("prime bound must be >= 2")
    if args.term_bound < 1:
        raise InvalidInput("term bound must be >= 1")
    if args.precision < 64:
        raise InvalidInput("precision must be >= 64 bits")


def _handle_output(handle: LFunctionHandle, args, out: Output) -> None:
    n = min(args.term_bound, args.prime_bound)
    table = coeffs_to_csv(coeffs_from_euler(handle, n))
    if args.format == "csv":
        out.primary = table
    else:
        out.primary = _dump(handle.to_json())
        out.extra[".csv"] = table


def cmd_frobenius(args, out: Output) -> int:
    _require(args, "field")
    fld = load_field(args.field)
    rows = []
    for p in sieve(args.prime_bound):
        try:
            c = galois.frobenius_class(fld, p)
            sd = galois.splitting_data(fld, p)
            rows.append({"p": p, "class": list(c.key) if isinstance(c.key, tuple) else c.key,
                         "order": c.order, "f": sd.residue_degree_f, "g": sd.factor_count_g})
        except galois.Ramified:
            rows.append({"p": p, "class": "ramified", "order": None, "f": None, "g": None})
    if args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["p", "class", "f", "g"])
        for r in rows:
            key = r["class"]
            w.writerow([r["p"], "+".join(map(str, key)) if isinstance(key, list) else key,
                        r["f"] if r["f"] is not None else "", r["g"] if r["g"] is not None else ""])
        out.primary = buf.getvalue()
    else:
        out.primary = _dump({"field": fld.label, "group_order": fld.group_order, "rows": rows})
    return EXIT_OK


def cmd_artin_l(args, out: Output) -> int:
    _require(args, "field", "rep")
    fld, rep = load_field(args.field), load_rep(args.rep[0])
    rep.validate_for(fld)
    _handle_output(artin.artin_handle(rep, fld, args.prime_bound, args.threads), args, out)
    return EXIT_OK


def cmd_dedekind(args, out: Output) -> int:
    _require(args, "field")
    fld = load_field(args.field)
    _handle_output(artin.dedekind_handle(fld, args.prime_bound, args.closure, args.threads),
                   args, out)
    return EXIT_OK


def cmd_torus_l(args, out: Output) -> int:
    _require(args, "torus")
    torus, strategy = load_torus(args.torus, args.strategy)
    handle = nctorus.torus_l_handle(torus, strategy, args.prime_bound, args.threads)
    _handle_output(handle, args, out)
    failures = sum(1 for why in handle.exclusions.values()
                   if why.startswith((NotFound.__name__, NormalFormMismatch.__name__)))
    return EXIT_COMPUTE if failures > len(handle.factors) else EXIT_OK


def cmd_compare(args, out: Output) -> int:
    _require(args, "left", "right")
    left = [load_handle(p) for p in args.left]
    right = [load_handle(p) for p in args.right]
    a = left[0] if len(left) == 1 else product_handle([(h, 1) for h in left])
    b = right[0] if len(right) == 1 else product_handle([(h, 1) for h in right])
    report = compare(a, b, args.prime_bound, min(args.term_bound, args.prime_bound))
    out.primary = _dump(report.to_json())
    return EXIT_OK


def cmd_factorization_check(args, out: Output) -> int:
    _require(args, "field")
    fld = load_field(args.field)
    irreps = artin.irreducible_reps(fld)
    rows = artin.regular_rep_identity_check(fld, irreps)
    if args.rep:
        rep = load_rep(args.rep[0])
    else:
        rep = max(irreps, key=lambda t: t[0].dimension)[0]
    literal = artin.literal_factorization_report(fld, rep, args.prime_bound, args.exponent)
    doc = {
        "field": fld.label,
        "group_order": fld.group_order,
        "regular_rep_identity": [
            {"class": list(r.key) if isinstance(r.key, tuple) else r.key, "order": r.order,
             "product": r.product.to_json(), "expected": r.expected.to_json(), "passed": r.passed}
            for r in rows],
        "all_classes_pass": all(r.passed for r in rows),
        "literal_report": literal.to_json(),
    }
    out.primary = _dump(doc)
    return EXIT_OK if doc["all_classes_pass"] else EXIT_COMPUTE


def cmd_selberg(args, out: Output) -> int:
    _require(args, "field")
    fld = load_field(args.field)
    spec = selberg.spectrum_from_field(fld, args.prime_bound, args.precision)
    rows = []
    for s in args.s or [2.0]:
        v = selberg.selberg_zeta(spec, s)
        lit = selberg.selberg_zeta_literal(spec, s)
        rows.append({"s": _fmt(s), "value": _fmt(v.value), "tail_bound": _fmt(v.tail_bound),
                     "literal_reading": _fmt(lit)})
    if args.format == "csv":
        out.primary = spec.to_csv()
    else:
        out.primary = _dump({"spectrum": json.loads(spec.to_json_text()), "values": rows,
                             "note": selberg.LITERAL_NOTE})
        out.extra[".spectrum.json"] = spec.to_json_text() + "\n"
    return EXIT_OK


def cmd_eval(args, out: Output) -> int:
    _require(args, "handle")
    h = load_handle(args.handle)
    rows = []
    for s in args.s or [2.0]:
        e = evaluate(h, s, args.prime_bound, args.precision)
        rows.append({"s": _fmt(s), "value": _fmt(e.value), "tail_bound": _fmt(e.tail_bound),
                     "poles": list(e.poles)})
    out.primary = _dump({"handle": h.label, "prime_bound": args.prime_bound,
                         "precision": args.precision, "values": rows})
    return EXIT_OK


def cmd_so_check(args, out: Output) -> int:
    _require(args, "blocks")
    doc = _read_json(args.blocks)
    try:
        blocks = [doc[k] for k in ("A", "B", "C", "D")]
    except (KeyError, TypeError) as exc:
        raise InvalidInput(f"blocks document needs A, B, C, D: {exc}") from exc
    bad = nctorus.so_mm_violations(*blocks)
    ok = nctorus.is_so_mm_Z(*blocks)
    out.primary = _dump({"in_so_mm_Z": ok, "violated": bad})
    return EXIT_OK


COMMANDS = {
    "frobenius": cmd_frobenius,
    "artin-l": cmd_artin_l,
    "dedekind": cmd_dedekind,
    "torus-l": cmd_torus_l,
    "compare": cmd_compare,
    "factorization-check": cmd_factorization_check,
    "selberg": cmd_selberg,
    "eval": cmd_eval,
    "so-check": cmd_so_check,
}


# -- presets ------------------------------------------------------------------

def seed_presets(directory: str) -> list[Path]:
    root = Path(directory)
    written = []

    def put(rel, doc):
        path = root / rel
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(_dump(doc))
        written.append(path)

    for name, make in galois.PRESET_FIELDS.items():
        fld = make()
        put(f"fields/{name}.json", fld.to_json())
        for rep, _ in artin.irreducible_reps(fld):
            slug = rep.label.replace("/", "_").replace("*", "x").replace(" ", "_")
            put(f"reps/{name}_{slug}.json", rep.to_json())
    put("reps/C2_quadratic.json", artin.quadratic_character(galois.gaussian_field()).to_json())
    golden = nctorus.golden_torus()
    put("tori/golden.json", golden.to_json(nctorus.Constant(1)))
    put("tori/golden_const3.json", golden.to_json(nctorus.Constant(3)))
    put("tori/golden_ordermod5.json", golden.to_json(nctorus.OrderMod(5)))
    put("tori/n0.json", nctorus.degenerate_torus().to_json(nctorus.Constant(1)))
    put("blocks/identity2.json", {"A": [[1, 0], [0, 1]], "B": [[0, 0], [0, 0]],
                                  "C": [[0, 0], [0, 0]], "D": [[1, 0], [0, 1]]})
    put("blocks/swap1.json", {"A": [[0]], "B": [[1]], "C": [[1]], "D": [[0]]})
    return written


def _default_precision() -> int:
    raw = os.environ.get(PRECISION_ENV)
    if raw is None:
        return DEFAULT_PRECISION
    try:
        return int(raw)
    except ValueError:
        return -1  # rejected by _check_bounds


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--field")
    common.add_argument("--rep", action="append")
    common.add_argument("--torus")
    common.add_argument("--strategy", help="strategy JSON text or path")
    common.add_argument("--handle")
    common.add_argument("--left", action="append", help="handle JSON; repeat to multiply")
    common.add_argument("--right", action="append", help="handle JSON; repeat to multiply")
    common.add_argument("--blocks", help="JSON with A, B, C, D blocks")
    common.add_argument("-P", "--prime-bound", type=int, default=100)
    common.add_argument("-N", "--term-bound", type=int, default=100)
    common.add_argument("--precision", type=int, default=_default_precision())
    common.add_argument("--s", type=float, action="append")
    common.add_argument("--format", choices=("json", "csv"), default="json")
    common.add_argument("--out")
    common.add_argument("--threads", type=int, default=1)
    common.add_argument("--closure", action="store_true",
                        help="dedekind: use the Galois closure")
    common.add_argument("--exponent", type=int,
                        help="factorization-check: exponent of the literal comparison")

    parser = argparse.ArgumentParser(prog="lfunc-lab", description=__doc__.splitlines()[0])
    parser.add_argument("--seed-presets", metavar="DIR",
                        help="write the built-in field/representation/torus presets to DIR")
    sub = parser.add_subparsers(dest="command")
    for name in COMMANDS:
        sub.add_parser(name, parents=[common])
    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        if args.seed_presets:
            for path in seed_presets(args.seed_presets):
                print(path)
            if args.command is None:
                return EXIT_OK
        if args.command is None:
            parser.print_usage(sys.stderr)
            return EXIT_INPUT
        _check_bounds(args)
        out = Output(args.out)
        code = COMMANDS[args.command](args, out)
        out.emit()
        return code
    except InvalidInput as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except OSError as exc:
        print(f"error: I/O failure: {exc}", file=sys.stderr)
        return EXIT_IO
    except (LFuncError, MissingPrime) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_COMPUTE


def main() -> None:
    sys.exit(run())
