"""Batch verification sweeps driven by ``casimir-an verify``.

Every check compares a closed formula against an independent route
(enumeration, brute-force expansion, numeric evaluation, exact fitting).
"""
from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product

from .eigenpoly import admissible_ranks, supported_classes, verify_class
from .lattice import all_partitions, format_partition
from .orbit_char import BRUTEFORCE, FORMULA, ch_orbit
from .orbits import iter_orbit_blocks, orbit_dimension
from .symfun import (audit_closed_rules, audit_printed_rules, eval_monomial,
                     eval_power_product, reduce_to_power, schur_check)

SUITES = ("orbits", "reductions", "schur", "eigen")


@dataclass
class Check:
    suite: str
    name: str
    passed: bool
    detail: dict = field(default_factory=dict)
    erratum_candidates: list = field(default_factory=list)

    def to_json(self) -> dict:
        return {"suite": self.suite, "name": self.name,
                "status": "pass" if self.passed else "fail",
                "detail": self.detail, "erratum_candidates": self.erratum_candidates}


def small_weights(N: int, top: int = 2):
    """All dominant weights with every lambda coefficient at most ``top``."""
    return list(product(range(top + 1), repeat=N))


def random_weight(rng: random.Random, N: int, q1_max: int) -> tuple[int, ...]:
    """A dominant weight with ``q_1 = sum r_i`` between 0 and ``q1_max``."""
    total = rng.randint(0, q1_max)
    r = [0] * N
    for _ in range(total):
        r[rng.randrange(N)] += 1
    return tuple(r)


def enumerated_size(m) -> int:
    return sum(len(b) for b in iter_orbit_blocks(m))


def orbit_counts(N: int, seed: int = 0, extra: int = 50, q1_max: int = 5) -> Check:
    rng = random.Random(seed * 7919 + N)
    weights = small_weights(N) + [random_weight(rng, N, q1_max) for _ in range(extra)]
    bad = [w for w in weights if orbit_dimension(w) != enumerated_size(w)]
    return Check("orbits", f"orbit sizes N={N}", not bad,
                 {"N": N, "weights": len(weights), "failures": [list(w) for w in bad]})


def chs_sweep(N: int, s: int, seed: int = 0, count: int = 5, q1_max: int = 4,
              max_orbit: int = 10 ** 5) -> Check:
    rng = random.Random(seed * 104729 + 31 * N + s)
    weights, tries = [], 0
    while len(weights) < count and tries < 50 * count:
        tries += 1
        w = random_weight(rng, N, q1_max)
        if orbit_dimension(w) <= max_orbit:
            weights.append(w)
    bad = [w for w in weights if ch_orbit(w, s, FORMULA) != ch_orbit(w, s, BRUTEFORCE)]
    return Check("orbits", f"ch_s formula vs brute force N={N} s={s}", not bad,
                 {"N": N, "s": s, "weights": [list(w) for w in weights],
                  "failures": [list(w) for w in bad]})


def random_rationals(rng: random.Random, n: int) -> list[Fraction]:
    return [Fraction(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(n)]


def reduction_check(s: int, seed: int = 0, samples: int = 20) -> Check:
    rng = random.Random(seed * 65537 + s)
    bad = []
    for p in all_partitions(s):
        expr = reduce_to_power(p)
        for _ in range(samples):
            x = random_rationals(rng, rng.randint(len(p), len(p) + 4))
            if eval_power_product(expr, x) != eval_monomial(p, x):
                bad.append(format_partition(p))
                break
    return Check("reductions", f"monomial to power sums s={s}", not bad,
                 {"s": s, "partitions": len(all_partitions(s)), "failures": bad})


def printed_rule_checks(order_max: int, strict: bool) -> list[Check]:
    closed = audit_closed_rules()
    out = [Check("reductions", "printed closed rules", not any(closed.values()),
                 {"rules": [format_partition(p) for p in closed],
                  "failures": [format_partition(p) for p, d in closed.items() if d]})]
    checks = audit_printed_rules(order_max)
    wrong = [c for c in checks if not c.ok]
    candidates = [{"rule": c.rule.label, "instance": format_partition(c.instance),
                   "values": c.values, "explained": c.explained,
                   "difference": str(c.difference)} for c in wrong]
    unexplained = [c for c in wrong if not c.explained]
    passed = not wrong if strict else not unexplained
    out.append(Check("reductions", "printed recursive rules", passed,
                     {"instances": len(checks), "mismatches": len(wrong),
                      "unexplained": len(unexplained)}, candidates))
    return out


def eigen_check(cls, N: int, seed: int = 0, strict: bool = False) -> Check:
    report = verify_class(cls, N, seed=seed)
    candidates = [m.to_json() for m in report.mismatches]
    passed = report.tier_a and (not strict or report.tier_b == "match")
    detail = {"class": format_partition(cls), "N": N, "tier_a": report.tier_a,
              "constant": None if report.constant is None else str(report.constant),
              "tier_b": report.tier_b, "sample_size": len(report.sample),
              "unexplained": len(report.unexplained)}
    return Check("eigen", f"class {format_partition(cls)} N={N}", passed, detail, candidates)


def _run(task):
    fn, args = task
    return fn(*args)


def plan(suite: str = "all", rank_max: int = 6, order_max: int = 7, seed: int = 0,
         strict: bool = False) -> list[tuple]:
    """Ordered list of ``(function, args)`` tasks for the requested suites."""
    wanted = SUITES if suite == "all" else (suite,)
    tasks = []
    if "orbits" in wanted:
        tasks += [(orbit_counts, (N, seed)) for N in range(1, rank_max + 1)]
        tasks += [(chs_sweep, (N, s, seed)) for N in range(1, rank_max + 1)
                  for s in range(2, order_max + 1)]
    if "reductions" in wanted:
        tasks += [(reduction_check, (s, seed)) for s in range(1, order_max + 1)]
        tasks += [(printed_rule_checks, (order_max, strict))]
    if "schur" in wanted:
        tasks += [(_schur, (k,)) for k in range(1, order_max + 1)]
    if "eigen" in wanted:
        tasks += [(eigen_check, (cls, N, seed, strict)) for cls in supported_classes()
                  if sum(cls) <= order_max for N in admissible_ranks(cls)]
    return tasks


def _schur(k: int) -> Check:
    r = schur_check(k)
    return Check("schur", f"h_{k} = S_{k}", r.equal,
                 {"k": k, "difference": {format_partition(p): str(v)
                                         for p, v in r.difference.items()}})


def run_suites(suite: str = "all", rank_max: int = 6, order_max: int = 7, seed: int = 0,
               strict: bool = False, jobs: int = 1) -> list[Check]:
    """Run the sweeps; results are in plan order whatever ``jobs`` is."""
    if suite != "all" and suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}")
    tasks = plan(suite, rank_max, order_max, seed, strict)
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_run, tasks))
    else:
        results = [_run(t) for t in tasks]
    out = []
    for r in results:
        out.extend(r if isinstance(r, list) else [r])
    return out
