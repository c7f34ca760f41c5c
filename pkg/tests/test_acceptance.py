"""One test per acceptance criterion, each held to its time limit.

Every criterion prints a single line, e.g.
``criterion 3 [twisted derivations]: PASS 25/25 cases in 0.61 s (limit 60 s)``.
Run directly with ``python3 tests/test_acceptance.py`` for the summary alone.
"""
import sys
import time

import pytest

from qsphere import kernel, verify


def _run(k: int):
    t0 = time.perf_counter()
    report = verify.run_criterion(k)
    elapsed = time.perf_counter() - t0
    limit = verify.TIME_LIMITS[k]
    ok = report.passed and elapsed < limit
    npass = sum(c.passed for c in report.cases)
    line = (f"criterion {k} [{verify.CRITERION_TITLES[k]}]: {'PASS' if ok else 'FAIL'} "
            f"{npass}/{len(report.cases)} cases in {elapsed:.2f} s (limit {limit} s, backend {kernel.BACKEND})")
    return ok, elapsed, limit, report, line


@pytest.mark.parametrize("k", sorted(verify.CRITERIA))
def test_criterion(k, capsys):
    ok, elapsed, limit, report, line = _run(k)
    with capsys.disabled():
        print("\n" + line)
    failed = [f"{c.id}: {(c.residual or '')[:160]}" for c in report.failures()]
    assert report.passed, f"{len(failed)} failing cases, first: " + "; ".join(failed[:5])
    assert elapsed < limit, f"took {elapsed:.2f} s, limit {limit} s"


if __name__ == "__main__":
    results = [_run(k) for k in sorted(verify.CRITERIA)]
    for *_, line in results:
        print(line)
    sys.exit(0 if all(r[0] for r in results) else 1)
