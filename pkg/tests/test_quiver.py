from pathlib import Path

import pytest

from wittrep.kernel import as_scalar
from wittrep.quiver import (QuiverGraph, build_block_quiver, catalog, classify_underlying_graph,
                            components, emit_dot, emit_tsv, no_concatenation, tits_matrix,
                            wild_witness)

GOLDEN = Path(__file__).parent / "golden"


def _q(n, edges):
    arr = {}
    for a, b in edges:
        arr[(as_scalar(a), as_scalar(b))] = arr.get((as_scalar(a), as_scalar(b)), 0) + 1
    return QuiverGraph(list(range(n)), arr)


def test_golden_dot_block0():
    got = emit_dot(build_block_quiver(0, 4))
    assert got == (GOLDEN / "block0_hw4.dot").read_text()


def test_tsv_header_and_rows():
    text = emit_tsv(build_block_quiver(0, 2))
    lines = text.splitlines()
    assert lines[0] == "source\ttarget\tmultiplicity"
    assert "-1\t0\t1" in lines and "0\t-1\t1" in lines


def test_solver_mode_agrees_with_closed_form():
    a = build_block_quiver(0, 3, mode="closed")
    b = build_block_quiver(0, 3, mode="solver", window=10)
    assert a.arrows == b.arrows


def test_block_connected_and_third_block():
    assert len(components(build_block_quiver(0, 12))) == 1
    q = build_block_quiver(as_scalar("1/3"), 6)
    assert len(components(q)) == 1
    # arrows only go up in weight in a generic block
    assert all((t - s).constant().sign() > 0 for s, t in q.arrows)


@pytest.mark.parametrize("name,tag,n,edges", catalog(10))
def test_catalog(name, tag, n, edges):
    c = classify_underlying_graph(_q(n, edges))
    assert (c.tag, c.name) == (tag, name)


def test_catalog_size():
    names = [c[0] for c in catalog(10)]
    assert len(names) == len(set(names)) == 38


def test_tits_matrix_double_edge():
    # opposite arrows count as a double edge, i.e. affine A1
    q = _q(2, [(0, 1), (1, 0)])
    assert tits_matrix(q)[0, 1] == -2
    assert str(classify_underlying_graph(q)) == "affine ~A1"


def test_wild_star():
    # five leaves on one vertex
    assert classify_underlying_graph(_q(6, [(0, k) for k in range(1, 6)])).tag == "wild"


def test_disconnected_rejected():
    with pytest.raises(ValueError):
        classify_underlying_graph(_q(3, [(0, 1)]))


def test_wild_witness_at_ten():
    q = build_block_quiver(0, 12)
    w = wild_witness(q, mu=10)
    want = {(as_scalar(a), as_scalar(b)) for a, b in ((7, 10), (7, 9), (6, 10), (6, 9), (6, 8))}
    assert set(w.arrows) == want
    assert no_concatenation(w)
    assert classify_underlying_graph(w).tag == "wild"


def test_no_witness_in_dynkin_quiver():
    assert wild_witness(_q(4, [(0, 1), (2, 1), (2, 3)])) is None


def test_bad_arrow_rejected():
    with pytest.raises(ValueError):
        QuiverGraph([0, 1], {(as_scalar(0), as_scalar(5)): 1})
