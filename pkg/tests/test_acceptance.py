"""The eleven acceptance criteria, each driven through the command line.

Every test records one ``PASS``/``FAIL`` line; the lines are repeated in the
terminal summary.
"""

import csv
import io
import time

import pytest

from graphinertia import tables
from graphinertia.cli import run


def cli(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue().strip(), err.getvalue()


def verify(acceptance_line, label, *argv, budget):
    t0 = time.perf_counter()
    code, out, err = cli("verify", *argv)
    secs = time.perf_counter() - t0
    ok = code == 0 and out.startswith("PASS") and secs <= budget
    acceptance_line(f"{'PASS' if ok else 'FAIL'} {label} [{secs:.1f}s] {out or err}")
    return ok


def test_c01_table1_counts_and_lists(acceptance_line):
    t0 = time.perf_counter()
    counts = {}
    for k in range(4, 14):
        code, out, _ = cli("enumerate", "--class", "B0", "--max-n", "13", "--k", str(k))
        assert code == 0
        counts[k] = len(list(csv.DictReader(io.StringIO(out))))
    secs = time.perf_counter() - t0
    code, out, _ = cli("verify", "table1")
    ok = (counts == tables.TABLE1_COUNTS and sum(counts.values()) == 802 and code == 0
          and secs <= 60)
    acceptance_line(f"{'PASS' if ok else 'FAIL'} C1 table1 [{secs:.1f}s] "
                    f"counts {[counts[k] for k in range(4, 14)]}; {out}")
    assert ok


def test_c02_appendix_histogram(acceptance_line):
    assert verify(acceptance_line, "C2 appendix histogram", "appendix-hist", budget=60)


def test_c03_b0_empty_at_14(acceptance_line):
    assert verify(acceptance_line, "C3 B0 empty at n=14", "b0-empty-14", budget=60)


def test_c04_bminus_empty_at_14(acceptance_line):
    assert verify(acceptance_line, "C4 Bminus empty at n=14", "bminus-empty-14", budget=60)


def test_c05_printed_spectra(acceptance_line):
    assert verify(acceptance_line, "C5 spectra", "spectra", budget=5)


def test_c06_transformations(acceptance_line):
    assert verify(acceptance_line, "C6 transformations", "transforms", "--trials", "1000",
                  "--seed", "0", budget=60)


@pytest.mark.slow
def test_c07_exhaustive_theorems(acceptance_line):
    t0 = time.perf_counter()
    lines, ok = [], True
    for order in (5, 6, 7):
        for target in ("theorem-disconnected", "theorem-main"):
            code, out, _ = cli("verify", target, "--order", str(order))
            ok &= code == 0
            lines.append(out.split(":")[0].removeprefix("PASS ").removeprefix("FAIL "))
    secs = time.perf_counter() - t0
    ok &= secs <= 15 * 60
    acceptance_line(f"{'PASS' if ok else 'FAIL'} C7 exhaustive orders 5-7 [{secs:.1f}s] "
                    + ", ".join(lines))
    assert ok


def test_c08_oracle(acceptance_line):
    assert verify(acceptance_line, "C8 oracle", "oracle", "--order", "6", "--bstar", budget=600)


def test_c09_bstar_structure(acceptance_line):
    assert verify(acceptance_line, "C9 B* structure", "bstar-structure", budget=600)


def test_c10_gn_chain(acceptance_line):
    assert verify(acceptance_line, "C10 G_n chain", "gn-chain", budget=60)


def test_c11_bminus_patterns(acceptance_line):
    assert verify(acceptance_line, "C11 Bminus families", "bminus-patterns", budget=60)
