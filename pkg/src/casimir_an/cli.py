"""Command-line front end: ``casimir-an <command> [options]``.

Every command prints one record with the request echo, the result and a
status.  Exact rationals are written as ``"p/q"`` strings.  Exit codes: 0 ok,
1 verification failure, 2 bad input or unsupported class, 3 domain error.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from fractions import Fraction

from .eigenpoly import (DEFAULT, UNIT, PRINTED, closed_form, eval_closed, eval_from_cof,
                        free_value, n_min, theta, theta_power)
from .errors import CasimirError, DegenerateReferenceError, DomainError
from .lattice import format_partition, lambda_to_mu, parse_partition, require_dominant
from .orbit_char import BRUTEFORCE, FORMULA, ch_orbit, cof_to_json
from .orbits import enumerate_orbit, orbit_dimension
from .reps import ch_rep, cof_rep, orbital_decomposition, weyl_dim
from .suites import SUITES, run_suites

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_DOMAIN = 0, 1, 2, 3


class InputError(CasimirError, ValueError):
    pass


def parse_weight(text: str, rank: int):
    try:
        m = tuple(int(x) for x in text.replace(" ", "").split(","))
    except ValueError:
        raise InputError(f"weight must be comma-separated integers, got {text!r}") from None
    if len(m) != rank:
        raise InputError(f"weight has {len(m)} coefficients but rank is {rank}")
    return require_dominant(m)


def weight_echo(m) -> dict:
    return {"lambda": list(m), "mu": list(lambda_to_mu(m))}


def methods(choice: str) -> list[str]:
    return [FORMULA, BRUTEFORCE] if choice == "both" else [choice]


def cmd_orbit(args):
    m = parse_weight(args.weight, args.rank)
    result = {"dimension": orbit_dimension(m)}
    if args.list:
        result["elements"] = [list(a) for a in enumerate_orbit(m)]
    return {"rank": args.rank, "weight": weight_echo(m)}, result, "ok"


def cmd_chs(args):
    m = parse_weight(args.weight, args.rank)
    fn = (lambda meth: ch_rep(m, args.order, meth)) if args.rep else (
        lambda meth: ch_orbit(m, args.order, meth))
    exprs = {meth: fn(meth) for meth in methods(args.method)}
    if len(exprs) == 1:
        result = {"character": next(iter(exprs.values())).to_json()}
    else:
        result = {meth: e.to_json() for meth, e in exprs.items()}
        result["match"] = exprs[FORMULA] == exprs[BRUTEFORCE]
    request = {"rank": args.rank, "weight": weight_echo(m), "order": args.order,
               "method": args.method, "target": "representation" if args.rep else "orbit"}
    status = "ok" if result.get("match", True) else "fail"
    return request, result, status


def cmd_cof(args):
    m = parse_weight(args.weight, args.rank)
    request = {"rank": args.rank, "weight": weight_echo(m), "order": args.order,
               "method": args.method}
    if args.method == FORMULA:
        return request, {"cof": cof_to_json(cof_rep(m, args.order)),
                         "dimension": weyl_dim(m)}, "ok"
    from .orbit_char import cof_extract
    cofs = {meth: cof_extract(ch_rep(m, args.order, meth), args.order)
            for meth in methods(args.method)}
    result = {meth: cof_to_json(c) for meth, c in cofs.items()}
    if len(cofs) == 2:
        result["match"] = cofs[FORMULA] == cofs[BRUTEFORCE]
    else:
        result = {"cof": result[args.method]}
    result["dimension"] = weyl_dim(m)
    return request, result, "ok" if result.get("match", True) else "fail"


def cmd_decompose(args):
    m = parse_weight(args.weight, args.rank)
    d = orbital_decomposition(m)
    result = {"orbits": d.to_json(), "dimension": d.dimension(), "weyl_dimension": weyl_dim(m)}
    status = "ok" if result["dimension"] == result["weyl_dimension"] else "fail"
    return {"rank": args.rank, "weight": weight_echo(m)}, result, status


def parse_norm(text: str):
    if text in (DEFAULT, UNIT):
        return text
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise InputError(f"--norm must be default, unit or a rational, got {text!r}") from None


def cmd_eigen(args):
    m = parse_weight(args.weight, args.rank)
    cls = parse_partition(args.cls)
    norm = parse_norm(args.norm)
    request = {"rank": args.rank, "weight": weight_echo(m), "class": format_partition(cls),
               "norm": str(norm)}
    t = theta(m)
    result = {"theta": [str(x) for x in t],
              "Theta": {str(j): str(theta_power(j, m)) for j in range(2, sum(cls) + 1)}}
    if args.reference_value is not None:
        ref = Fraction(args.reference_value)
        request["reference_value"] = str(ref)
        result["from_cof"] = str(eval_from_cof(cls, m, ref))
    if cls in PRINTED or args.reference_value is None:
        form = closed_form(cls)
        result["closed_form"] = str(eval_closed(cls, m, norm))
        result["free_coefficient"] = {"alpha": form.free_alpha,
                                      "value": str(free_value(cls, args.rank, norm))}
        result["n_min"] = n_min(cls, norm)
    return request, result, "ok"


def cmd_verify(args):
    checks = run_suites(args.suite, args.rank_max, args.order_max, args.seed,
                        args.strict, args.jobs)
    failed = sum(not c.passed for c in checks)
    candidates = sum(len(c.erratum_candidates) for c in checks)
    result = {"checks": [c.to_json() for c in checks], "passed": len(checks) - failed,
              "failed": failed, "erratum_candidates": candidates}
    request = {"suite": args.suite, "rank_max": args.rank_max, "order_max": args.order_max,
               "seed": args.seed, "strict": args.strict}
    return request, result, "fail" if failed else "ok"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="casimir-an",
        description="Orbits, power-sum characters and Casimir eigenvalue polynomials of A_N.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, order=False, method=False):
        p.add_argument("--rank", type=int, required=True, help="rank N of A_N")
        p.add_argument("--weight", required=True,
                       help="comma-separated lambda coefficients r_1,...,r_N")
        if order:
            p.add_argument("--order", type=int, required=True, help="power s")
        if method:
            p.add_argument("--method", choices=[FORMULA, BRUTEFORCE, "both"], default=FORMULA)
        output(p)

    def output(p):
        p.add_argument("--format", choices=["json", "csv", "table"], default="json")
        p.add_argument("--timing", action="store_true", help="add wall-clock time to output")

    p = sub.add_parser("orbit", help="orbit dimension and elements")
    common(p)
    p.add_argument("--list", action="store_true", help="list the orbit's mu tuples")
    p.set_defaults(func=cmd_orbit)

    p = sub.add_parser("chs", help="power-sum character ch_s")
    common(p, order=True, method=True)
    p.add_argument("--rep", action="store_true",
                   help="character of the irreducible representation instead of the orbit")
    p.set_defaults(func=cmd_chs)

    p = sub.add_parser("cof", help="cof coefficients of the representation's ch_s")
    common(p, order=True, method=True)
    p.set_defaults(func=cmd_cof)

    p = sub.add_parser("decompose", help="orbital decomposition via Freudenthal")
    common(p)
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("eigen", help="eigenvalue polynomial of a partition class")
    common(p)
    p.add_argument("--class", dest="cls", required=True, help='partition class, e.g. "3,2"')
    p.add_argument("--norm", default=DEFAULT, help="default, unit or a rational value")
    p.add_argument("--reference-value", default=None,
                   help="also evaluate through cof ratios against lambda_k with this value")
    p.set_defaults(func=cmd_eigen)

    p = sub.add_parser("verify", help="batch verification sweeps")
    p.add_argument("--suite", choices=("all",) + SUITES, default="all")
    p.add_argument("--rank-max", type=int, default=6)
    p.add_argument("--order-max", type=int, default=7)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--strict", action="store_true",
                   help="fail on erratum candidates too")
    p.add_argument("--jobs", type=int, default=1)
    output(p)
    p.set_defaults(func=cmd_verify)
    return parser


def flatten(value, prefix="", rows=None):
    rows = [] if rows is None else rows
    if isinstance(value, dict):
        for k, v in value.items():
            flatten(v, f"{prefix}.{k}" if prefix else str(k), rows)
    elif isinstance(value, list) and any(isinstance(v, (dict, list)) for v in value):
        for i, v in enumerate(value):
            flatten(v, f"{prefix}[{i}]", rows)
    elif isinstance(value, list):
        rows.append((prefix, ",".join(map(str, value))))
    else:
        rows.append((prefix, "" if value is None else str(value).lower()
                     if isinstance(value, bool) else str(value)))
    return rows


def render(record: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(record, indent=2) + "\n"
    rows = flatten(record)
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["key", "value"])
        w.writerows(rows)
        return buf.getvalue()
    width = max(len(k) for k, _ in rows)
    return "".join(f"{k.ljust(width)}  {v}\n" for k, v in rows)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    start = time.perf_counter()
    try:
        request, result, status = args.func(args)
    except (DomainError, DegenerateReferenceError) as e:
        print(f"casimir-an: error: {e}", file=sys.stderr)
        return EXIT_DOMAIN
    except (CasimirError, ValueError) as e:
        print(f"casimir-an: error: {e}", file=sys.stderr)
        return EXIT_INPUT
    record = {"command": args.command, "request": request, "result": result, "status": status}
    if args.timing:
        record["timing"] = {"seconds": f"{time.perf_counter() - start:.6f}"}
    sys.stdout.write(render(record, args.format))
    return EXIT_OK if status == "ok" else EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
