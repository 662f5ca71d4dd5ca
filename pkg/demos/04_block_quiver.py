"""
The Ext-quiver of the integral block
====================================

Arrows mu -> lam mark Ext^1(L(mu), L(lam)) != 0.  The block is connected,
and it contains a five-vertex subquiver without composable arrows whose
Tits form is indefinite, so the block is wild.
"""

from wittrep import build_block_quiver, classify_underlying_graph, wild_witness
from wittrep.quiver import components, emit_dot

q = build_block_quiver(0, 12)
print(f"{len(q.vertices)} vertices, {sum(q.arrows.values())} arrows, "
      f"{len(components(q))} component")

w = wild_witness(q, mu=10)
print("witness:", classify_underlying_graph(w))
print(emit_dot(w, name="witness"))

# the same classifier on a few textbook graphs
from wittrep.quiver import QuiverGraph
from wittrep.kernel import as_scalar


def path(n, extra=()):
    arr = {(as_scalar(i), as_scalar(i + 1)): 1 for i in range(n - 1)}
    arr.update({(as_scalar(a), as_scalar(b)): 1 for a, b in extra})
    return QuiverGraph(list(range(n)), arr)


print("path on 5 vertices:", classify_underlying_graph(path(5)))
print("4-cycle:", classify_underlying_graph(path(4, [(3, 0)])))
print("path plus a chord:", classify_underlying_graph(path(5, [(0, 2), (0, 3)])))
