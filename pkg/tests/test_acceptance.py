"""Acceptance criteria, one printed PASS/FAIL line each.

Run with ``pytest tests/test_acceptance.py -v`` or directly with
``python tests/test_acceptance.py``.
"""

import json
import re
import subprocess
import sys
import time

import pytest

from pfaffideal.algebra import PrimeField
from pfaffideal.verify import (
    DETERMINANTAL_CASES,
    verify_determinantal,
    verify_formulas,
    verify_h_equality_range,
    verify_main_theorem,
    verify_pfaffian_determinant,
    verify_polarization_laws,
    verify_ring_laws,
    verify_sphere_certificates,
    verify_term_order_laws,
)

P52_GENS = ["x[1,3]*x[2,4]", "x[1,3]*x[2,5]", "x[2,4]*x[3,5]", "x[3,5]*x[1,4]", "x[1,4]*x[2,5]"]


def _timed(fn):
    t0 = time.perf_counter()
    value = fn()
    return value, time.perf_counter() - t0


def crit_1():
    rep, secs = _timed(lambda: verify_main_theorem(5, 2))
    w = rep.witnesses
    ok = (
        rep.passed
        and w["generators"] == 5
        and sorted(w["min_gens"]) == sorted(P52_GENS)
        and (w["e"], w["krull_dim"], w["a"]) == (5, 7, -5)
        and secs < 1
    )
    return ok, f"(5,2) e={w.get('e')} d={w.get('krull_dim')} a={w.get('a')} in {secs:.2f}s"


def crit_2():
    details, ok = [], True
    for n, r in [(4, 2), (6, 2), (6, 3), (7, 2), (7, 3)]:
        rep, secs = _timed(lambda: verify_main_theorem(n, r))
        ok &= rep.passed and secs < 60
        details.append(f"({n},{r}) {secs:.2f}s")
    rep, secs = _timed(lambda: verify_main_theorem(8, 3, PrimeField()))
    ok &= rep.passed and secs < 300
    details.append(f"(8,3) prime {secs:.2f}s")
    return ok, ", ".join(details)


def crit_3():
    rep, secs = _timed(lambda: verify_formulas(10))
    return rep.passed and secs < 120, f"{len(rep.witnesses.get('cases', []))} complexes, {rep.witnesses.get('pairs')} ideal pairs in {secs:.2f}s"


def crit_4():
    rep, secs = _timed(lambda: verify_h_equality_range(4, 9))
    return rep.passed and secs < 120, f"{len(rep.witnesses.get('cases', []))} pairs in {secs:.2f}s"


def crit_5():
    rep, secs = _timed(lambda: verify_sphere_certificates(4, 8))
    return rep.passed and secs < 60, f"{len(rep.witnesses.get('cases', []))} complexes in {secs:.2f}s"


def crit_6():
    rep, secs = _timed(lambda: verify_pfaffian_determinant(8))
    ms = [c["m"] for c in rep.witnesses.get("cases", []) if c["ok"]]
    return rep.passed and ms == list(range(2, 9)) and secs < 30, f"m={ms} in {secs:.2f}s"


def crit_7():
    rep, secs = _timed(lambda: verify_polarization_laws(100))
    return rep.passed and rep.witnesses["instances"] == 100 and secs < 60, f"100 ideals in {secs:.2f}s"


def crit_8():
    t0 = time.perf_counter()
    reps = [verify_determinantal(h, r) for h, r in DETERMINANTAL_CASES]
    secs = time.perf_counter() - t0
    bad = [r.params for r in reps if not r.passed]
    return not bad and secs < 120, f"{len(reps)} polyominoes in {secs:.2f}s" + (f" failing {bad}" if bad else "")


def crit_9():
    a = verify_term_order_laws(1000)
    b = verify_ring_laws(1000)
    fails = a.witnesses["failures"] + b.witnesses["failures"]
    return a.passed and b.passed, f"2000 randomized cases, {fails} failures"


def _strip_timing(text):
    return re.sub(r'"timing_ms": [0-9.]+', '"timing_ms": 0', text)


def crit_10():
    outs = []
    for _ in range(2):
        proc = subprocess.run(
            [sys.executable, "-m", "pfaffideal", "suite", "--quick"], capture_output=True, text=True, check=False
        )
        outs.append((proc.returncode, _strip_timing(proc.stdout)))
    same = outs[0] == outs[1]
    ok = same and outs[0][0] == 0 and json.loads(outs[0][1])["pass"]
    return ok, "two suite --quick runs identical" if same else "suite output differs between runs"


CRITERIA = [crit_1, crit_2, crit_3, crit_4, crit_5, crit_6, crit_7, crit_8, crit_9, crit_10]


def _line(k, ok, detail):
    return f"criterion {k:2d}: {'PASS' if ok else 'FAIL'}  {detail}"


@pytest.mark.parametrize("k", range(1, len(CRITERIA) + 1))
def test_criterion(k, capsys):
    ok, detail = CRITERIA[k - 1]()
    with capsys.disabled():
        print("\n" + _line(k, ok, detail))
    assert ok, detail


if __name__ == "__main__":
    results = []
    for k, crit in enumerate(CRITERIA, start=1):
        ok, detail = crit()
        results.append(ok)
        print(_line(k, ok, detail), flush=True)
    sys.exit(0 if all(results) else 1)
