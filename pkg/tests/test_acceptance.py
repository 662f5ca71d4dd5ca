"""The eleven acceptance criteria; one pass/fail line per criterion is printed
(run with ``pytest -s`` or ``wittrep selftest`` to see them)."""
import pytest

from wittrep.acceptance import CRITERIA


@pytest.mark.parametrize("n,title,fn", CRITERIA, ids=[f"criterion_{n}" for n, _, _ in CRITERIA])
def test_criterion(n, title, fn, capsys):
    ok, detail = fn()
    with capsys.disabled():
        print(f"\ncriterion {n} ({title}): {'PASS' if ok else 'FAIL'} {detail}")
    assert ok, detail
