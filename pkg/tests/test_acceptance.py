"""Exit criteria. Run ``pytest tests/test_acceptance.py`` or ``python tests/test_acceptance.py``.

Each criterion returns (ok, detail) and is timed; one PASS/FAIL line per
criterion is printed at the end of the pytest session.
"""
import random
import sys
import time
from fractions import Fraction
from math import isqrt
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from chernratio import (
    AmbientInvariants,
    CurveProductConfig,
    approximate_surface_ratio,
    asymptotic_ratio,
    chern_numbers,
    check_hypothesis,
    curve_product_invariants,
    enumerate_ge2,
    epsilon,
    f,
    ratio_at_scale,
    ratio_closed_form,
    required_scale,
)
from chernratio.bogomolov import surface_criterion
from chernratio.cli import main as cli_main
from chernratio.records import decimal_str, parse_rational
from conftest import random_config
from oracle import box_ge2

RESULTS: list[str] = []


def _instances(count=600, seed=500):
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        config = random_config(rng, n_range=(3, 10), genera=(2, 6), multiples=(1, 4))
        d = tuple(rng.randint(1, 9) for _ in range(config.n - 2))
        out.append((config, d))
    return out


def c1_endpoint_identities():
    bad = [
        m
        for m in range(4, 65)
        if f((1,) * m) != m or f((1,) * (m - 1) + (m * m,)) != 1 + epsilon(m)
    ]
    return not bad, f"M in [4,64], failures={bad}", 1.0


def c2_dual_path():
    mismatches = 0
    inst = _instances()
    for config, d in inst:
        if ratio_closed_form(config, d) != chern_numbers(curve_product_invariants(config), d).ratio:
            mismatches += 1
    return mismatches == 0 and len(inst) >= 500, f"{len(inst)} instances, {mismatches} mismatches", 5.0


def c3_concrete_value():
    config = CurveProductConfig.from_lists([2] * 6, [2] * 6)
    general = chern_numbers(curve_product_invariants(config), (1, 1, 1, 1)).ratio
    closed = ratio_closed_form(config, (1, 1, 1, 1))
    ok = general == closed == Fraction(162, 97)
    return ok, f"general={general}, closed={closed}", 1.0


def c4_strict_inequalities():
    violations = checked = 0
    for config, d in _instances():
        if config.n < 6:
            continue
        checked += 1
        inv = chern_numbers(curve_product_invariants(config), d)
        if not (inv.c2 > 0 and inv.c1sq > inv.c2 and 1 < inv.ratio < 2):
            violations += 1
    return violations == 0 and checked > 0, f"{checked} instances with N>=6, {violations} violations", 5.0


def c5_density_sweep():
    rng = random.Random(1995)
    tol = Fraction(1, 10**6)
    failures = 0
    for _ in range(100):
        target = Fraction(rng.randint(10500, 19500), 10000)
        res = approximate_surface_ratio(target, tol)
        # recompute from the returned vector only
        e = res.e.entries
        value = Fraction(sum(e) ** 2, sum(x * x for x in e))
        if abs(2 * value / (value + 1) - target) > tol:
            failures += 1
    return failures == 0, f"100 targets in [21/20, 39/20], tol=1e-6, failures={failures}", 10.0


def c6_convergence_witness():
    amb = curve_product_invariants(CurveProductConfig.from_lists([2] * 6, [2] * 6))
    e = (1, 1, 1, 3)
    tol = Fraction(1, 1000)
    d = required_scale(amb, e, tol)
    gap = abs(ratio_at_scale(amb, e, d) - asymptotic_ratio(e))
    return d <= 2**20 and gap <= tol, f"d={d}, gap={float(gap):.3e}", 1.0


def c7_finiteness():
    rng = random.Random(77)
    curve_nonempty = 0
    for _ in range(50):
        if enumerate_ge2(curve_product_invariants(random_config(rng))).vectors:
            curve_nonempty += 1

    mismatches = boundary = 0
    count = 60
    for _ in range(count):
        n = rng.randint(3, 6)
        b = rng.randint(1, 6)
        c2_h = rng.randint(0, 40)
        a = -rng.randint(0, 20)
        excess = b * rng.randint(1, 50) if rng.random() < 0.5 else rng.randint(1, 50 * b)
        amb = AmbientInvariants(n=n, c1sq_h=2 * c2_h + excess, c2_h=c2_h, a=a, b=b)
        rep = enumerate_ge2(amb)
        side = isqrt(rep.bound.numerator // rep.bound.denominator) + 1
        expected = box_ge2(amb.c1sq_h, amb.c2_h, amb.a, amb.b, n - 2, side)
        if {v.entries for v in rep.vectors} != expected:
            mismatches += 1
        for r, edge in zip(rep.ratios, rep.boundary):
            if edge:
                boundary += 1
                if r != 2:
                    mismatches += 1
    ok = curve_nonempty == 0 and mismatches == 0 and boundary > 0
    detail = f"curve ambients non-empty={curve_nonempty}; {count} synthetic, mismatches={mismatches}, boundary hits={boundary}"
    return ok, detail, 10.0


def c8_hypothesis_equivalence():
    bad = [
        (d, m)
        for d in range(1, 21)
        for m in range(1, 41)
        if check_hypothesis([d] * m, 2).satisfied != surface_criterion(m, d)
    ]
    return not bad, f"d in [1,20], m in [1,40], mismatches={len(bad)}", 1.0


def _capture(argv):
    import contextlib
    import io

    buf = io.StringIO()
    with contextlib.redirect_stdout(buf):
        code = cli_main(argv)
    return code, buf.getvalue()


def c9_cli_round_trip():
    import json

    g2 = ["--genera", "2,2,2,2,2,2", "--multiples", "2,2,2,2,2,2"]
    commands = [
        ["invariants", *g2],
        ["approximate", "--target", "1.337", "--tol", "1e-6"],
        ["approximate", "--target", "19/10", "--tol", "1e-6"],
        ["scale-sweep", *g2, "--e", "1,1,1,3", "--d-max", "65536"],
        ["enumerate", "--n", "4", "--c1sq-h", "50", "--c2-h", "10", "--a", "-5", "--b", "2"],
        ["hypothesis", "--dims", "1,1,1,1,1,1", "--dim-y", "2"],
    ]
    problems = []
    rationals = 0
    for argv in commands:
        code1, out1 = _capture(argv)
        code2, out2 = _capture(argv)
        if code1 != 0 or out1 != out2:
            problems.append(" ".join(argv[:1]))
        for line in out1.splitlines():
            rec = json.loads(line)
            for key, value in rec.items():
                if f"{key}_decimal" in rec:
                    rationals += 1
                    x = parse_rational(value)
                    if str(x) != value or decimal_str(x) != rec[f"{key}_decimal"]:
                        problems.append(f"{argv[0]}:{key}")
    return not problems, f"{rationals} rationals checked, problems={problems}", 5.0


CRITERIA = [
    ("1 endpoint identities", c1_endpoint_identities),
    ("2 dual-path oracle", c2_dual_path),
    ("3 concrete value 162/97", c3_concrete_value),
    ("4 strict inequalities", c4_strict_inequalities),
    ("5 density sweep", c5_density_sweep),
    ("6 convergence witness", c6_convergence_witness),
    ("7 finiteness", c7_finiteness),
    ("8 hypothesis equivalence", c8_hypothesis_equivalence),
    ("9 CLI round-trip", c9_cli_round_trip),
]


def evaluate(name, fn):
    start = time.perf_counter()
    ok, detail, budget = fn()
    elapsed = time.perf_counter() - start
    ok = ok and elapsed < budget
    line = f"{'PASS' if ok else 'FAIL'}  criterion {name}: {detail} ({elapsed:.2f}s, limit {budget:g}s)"
    return ok, line


@pytest.mark.parametrize("name, fn", CRITERIA, ids=[c[0] for c in CRITERIA])
def test_criterion(name, fn):
    ok, line = evaluate(name, fn)
    RESULTS.append(line)
    print(line)
    assert ok, line


if __name__ == "__main__":
    all_ok = True
    for name, fn in CRITERIA:
        ok, line = evaluate(name, fn)
        all_ok &= ok
        print(line)
    sys.exit(0 if all_ok else 1)
