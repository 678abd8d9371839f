"""Command-line experiments.  Output is CSV (default) or JSON, fully determined by
the flags and the seed."""

from __future__ import annotations

import argparse
import csv
import io
import json
import random
import sys

from . import __version__
from .errors import CrossCheckFailure, GuardExceeded
from .ffdiv import count_effective_divisors, enumerate_effective_divisors
from .gf import DEFAULT_GUARD_BITS, Field, format_poly, parse_poly as parse_fq_poly
from .groupstat import PRODUCT_GUARD, e_r_of_subspace, factor_group_order, growth_report, value_set
from .oracle import PowerOracle
from .polyrat import Poly, normalize_rat, parse_poly, random_monic
from .subspace import enumerate_Vm
from .tester import choose_params, naive_test, subspace_test, witness_profile

EXIT_OK, EXIT_CONFIG, EXIT_GUARD, EXIT_CROSSCHECK = 0, 2, 3, 4

GROWTH_COLUMNS = ["q", "n", "psi", "d", "m", "nu", "sizeA", "sizeAnu", "rho", "zero_hits", "poles", "E_order"]
TEST_COLUMNS = [
    "test", "q", "n", "psi", "e", "d", "c", "delta", "nu", "m",
    "verdict", "witness", "queries_f", "queries_g", "guaranteed",
]
ERS_COLUMNS = ["q", "n", "psi", "d", "m", "sizeA", "zero_hits", "poles", "E_order"]
COUNT_COLUMNS = ["q", "r", "count_exact", "count_cumulative", "bound_q2r"]
WITNESS_COLUMNS = ["q", "n", "psi", "e", "d", "witness_m"]
FIELD_COLUMNS = ["q", "n", "psi", "psi_coeffs", "group_order", "factorization"]


class ConfigError(ValueError):
    pass


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--q", type=int, default=2, help="prime base field size")
    common.add_argument("--n", type=int, help="extension degree")
    common.add_argument("--psi", help="modulus override, residues constant-first, e.g. 1,1,0,0,1")
    common.add_argument("--e", type=int, help="oracle exponent, a divisor of q^n - 1")
    common.add_argument("--d", type=int, help="degree of f and g")
    common.add_argument("--c", type=float, default=0.5, help="tuning constant in (0, 1]")
    common.add_argument("--nu", type=int, help="product-set fold (override)")
    common.add_argument("--m", type=int, help="subspace dimension (override / maximum)")
    common.add_argument("--r", type=int, default=6, help="maximum divisor degree (divlab)")
    common.add_argument("--f", help="element encodings of f, constant first")
    common.add_argument("--g", help="element encodings of g, constant first")
    common.add_argument("--seed", type=int, help="seed for random f, g")
    common.add_argument("--format", choices=["csv", "json"], default="csv")
    common.add_argument("--out", help="output path (default stdout)")
    common.add_argument("--guard-bits", type=int, default=DEFAULT_GUARD_BITS,
                        help="enumeration guard: sweeps over more than 2^bits points abort")

    parser = argparse.ArgumentParser(prog="ffidtest", description=__doc__)
    parser.add_argument("--version", action="version", version=f"ffidtest {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("field", parents=[common], help="print the field F_{q^n} and its modulus")
    sub.add_parser("etest", parents=[common], help="naive and subspace identity tests")
    sub.add_parser("ers", parents=[common], help="E_r(V_m) for m = 1..--m")
    sub.add_parser("pset", parents=[common], help="product-set growth over m <= --m, nu <= --nu")
    sub.add_parser("divlab", parents=[common], help="effective divisor counts of F_q(T)")
    sub.add_parser("witness", parents=[common], help="smallest m with a witness in V_m")
    sub.add_parser("verify", parents=[common], help="run the acceptance criteria")
    return parser


def _field(args) -> Field:
    psi = parse_fq_poly(args.psi) if args.psi else None
    n = args.n
    if n is None:
        if psi is None:
            raise ConfigError("--n (or --psi) is required")
        n = len(psi) - 1
    try:
        return Field(args.q, n, psi, guard_bits=args.guard_bits)
    except ValueError as exc:
        raise ConfigError(str(exc)) from None


def _check_e(F: Field, e: int | None) -> int:
    if e is None:
        raise ConfigError("--e is required")
    if e < 1 or F.group_order % e:
        raise ConfigError(f"--e {e} does not divide q^n - 1 = {F.group_order}")
    return e


def _pair(F: Field, args, rng: random.Random | None) -> tuple[Poly, Poly]:
    polys = []
    for text in (args.f, args.g):
        if text is not None:
            try:
                p = parse_poly(F, text)
            except ValueError as exc:
                raise ConfigError(str(exc)) from None
            if not p.is_monic():
                raise ConfigError(f"polynomial {text!r} is not monic")
        else:
            if rng is None:
                raise ConfigError("--seed is required when --f/--g are not given")
            p = random_monic(F, args.d or 1, rng)
        polys.append(p)
    f, g = polys
    if args.d is not None and (f.degree != args.d or g.degree != args.d):
        raise ConfigError("--d disagrees with the degrees of --f/--g")
    return f, g


def _coeff_field(F: Field, *polys: Poly) -> str:
    # F_q sits inside F_{q^n} as the encodings 0..q-1
    return "F_q" if all(c < F.q for p in polys for c in p.coeffs) else "F_q^n"


def _header(args, F: Field | None, **extra) -> dict:
    h = {"tool": f"ffidtest {__version__}", "command": args.command}
    if F is not None:
        h.update(q=F.q, n=F.n, psi=F.psi_encoding, psi_coeffs=format_poly(F.psi))
    h["seed"] = args.seed
    h.update(extra)
    return h


def _emit(args, header: dict, columns: list[str], rows: list[dict]) -> str:
    if args.format == "json":
        rows = [{k: row.get(k) for k in columns} for row in rows]
        return json.dumps({"header": header, "rows": rows}, indent=2) + "\n"
    buf = io.StringIO()
    for key, value in header.items():
        buf.write(f"# {key}={'' if value is None else value}\n")
    writer = csv.DictWriter(buf, fieldnames=columns, lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow({k: "" if row.get(k) is None else row[k] for k in columns})
    return buf.getvalue()


def _fmt(x: float) -> str:
    return f"{x:.6f}"


def cmd_field(args):
    F = _field(args)
    fact = factor_group_order(F)
    row = dict(q=F.q, n=F.n, psi=F.psi_encoding, psi_coeffs=format_poly(F.psi),
               group_order=F.group_order, factorization=str(fact))
    return _header(args, F), FIELD_COLUMNS, [row]


def cmd_etest(args):
    F = _field(args)
    e = _check_e(F, args.e)
    rng = random.Random(args.seed) if args.seed is not None else None
    f, g = _pair(F, args, rng)
    d = max(f.degree, g.degree)
    params = choose_params(F, e, d, args.c, args.nu, args.m)
    base = dict(q=F.q, n=F.n, psi=F.psi_encoding, e=e, d=d, c=args.c, delta=_fmt(params.delta))
    rows = []
    notes = list(params.flags)
    oF, oG = PowerOracle(F, f, e), PowerOracle(F, g, e)
    if e * d + 1 <= F.order:
        rep = naive_test(oF, oG, F, e, d)
        rows.append(dict(base, test="naive", verdict=rep.verdict, witness=rep.witness,
                         queries_f=rep.queries_f, queries_g=rep.queries_g, guaranteed=rep.guaranteed))
    else:
        notes.append("naive-skipped-field-too-small")
    rep = subspace_test(oF, oG, F, params.m, params.nu)
    notes.extend(rep.notes)
    rows.append(dict(base, test="subspace", nu=params.nu, m=params.m, verdict=rep.verdict,
                     witness=rep.witness, queries_f=rep.queries_f, queries_g=rep.queries_g,
                     guaranteed=rep.guaranteed))
    header = _header(args, F, f=str(f), g=str(g), coeffs=_coeff_field(F, f, g), flags=";".join(notes))
    return header, TEST_COLUMNS, rows


def cmd_ers(args):
    F = _field(args)
    rng = random.Random(args.seed) if args.seed is not None else None
    f, g = _pair(F, args, rng)
    fact = factor_group_order(F)
    rows = []
    for m in range(1, (args.m or min(F.n, 12)) + 1):
        summary = value_set(F, normalize_rat(F, f, g), enumerate_Vm(F, m))
        # E is undefined while r(V_m) has no nonzero value; leave the cell empty
        order = e_r_of_subspace(F, fact, f, g, m)[0].order if summary.values else None
        rows.append(dict(q=F.q, n=F.n, psi=F.psi_encoding, d=f.degree, m=m, sizeA=summary.size,
                         zero_hits=summary.zero_hits, poles=summary.poles, E_order=order))
    return _header(args, F, f=str(f), g=str(g), coeffs=_coeff_field(F, f, g)), ERS_COLUMNS, rows


def cmd_pset(args):
    F = _field(args)
    rng = random.Random(args.seed) if args.seed is not None else None
    f, g = _pair(F, args, rng)
    rows = []
    for m in range(1, (args.m or min(F.n, 6)) + 1):
        for nu in range(1, (args.nu or 2) + 1):
            rec = growth_report(F, f, g, m, nu, PRODUCT_GUARD)
            if not rec.floor_ok:
                raise CrossCheckFailure(f"preimage floor violated at m={m}: {rec}")
            rows.append(dict(q=F.q, n=F.n, psi=F.psi_encoding, d=rec.d, m=m, nu=nu, sizeA=rec.sizeA,
                             sizeAnu=rec.sizeAnu, rho=_fmt(rec.rho), zero_hits=rec.zero_hits,
                             poles=rec.poles, E_order=rec.E_order))
    return _header(args, F, f=str(f), g=str(g), coeffs=_coeff_field(F, f, g)), GROWTH_COLUMNS, rows


def cmd_divlab(args):
    q, r = args.q, args.r
    try:
        exact, cumulative = count_effective_divisors(q, r)
    except ValueError as exc:
        raise ConfigError(str(exc)) from None
    for k in range(min(r, 4) + 1):
        brute = len(enumerate_effective_divisors(q, k))
        if brute != cumulative[k]:
            raise CrossCheckFailure(f"degree <= {k}: DP gives {cumulative[k]}, enumeration {brute}")
    rows = []
    for k in range(r + 1):
        if cumulative[k] > q ** (2 * k):
            raise CrossCheckFailure(f"count {cumulative[k]} exceeds q^(2r) at r={k}")
        rows.append(dict(q=q, r=k, count_exact=exact[k], count_cumulative=cumulative[k], bound_q2r=q ** (2 * k)))
    header = {"tool": f"ffidtest {__version__}", "command": "divlab", "q": q, "seed": args.seed}
    return header, COUNT_COLUMNS, rows


def cmd_witness(args):
    F = _field(args)
    e = _check_e(F, args.e)
    rng = random.Random(args.seed) if args.seed is not None else None
    f, g = _pair(F, args, rng)
    m = witness_profile(F, f, g, e)
    row = dict(q=F.q, n=F.n, psi=F.psi_encoding, e=e, d=max(f.degree, g.degree), witness_m=m)
    return _header(args, F, f=str(f), g=str(g), coeffs=_coeff_field(F, f, g)), WITNESS_COLUMNS, [row]


def cmd_verify(args, out) -> int:
    from .acceptance import run_all

    failed = 0
    for res in run_all():
        out.write(res.line() + "\n")
        failed += not res.passed
    out.write(f"{'ALL PASS' if not failed else f'{failed} FAILED'}\n")
    return EXIT_OK if not failed else EXIT_CROSSCHECK


COMMANDS = {
    "field": cmd_field,
    "etest": cmd_etest,
    "ers": cmd_ers,
    "pset": cmd_pset,
    "divlab": cmd_divlab,
    "witness": cmd_witness,
}


def main(argv: list[str] | None = None, stdout=None) -> int:
    args = build_parser().parse_args(argv)
    out = stdout or sys.stdout
    try:
        if args.command == "verify":
            return cmd_verify(args, out)
        header, columns, rows = COMMANDS[args.command](args)
        text = _emit(args, header, columns, rows)
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except GuardExceeded as exc:
        print(f"guard exceeded: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except CrossCheckFailure as exc:
        print(f"cross-check failed: {exc}", file=sys.stderr)
        return EXIT_CROSSCHECK
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        out.write(text)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
