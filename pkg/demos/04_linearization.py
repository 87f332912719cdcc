"""The 2-linearization of spans and spans of span maps.

The headline computation: spans of groupoids become matrices of intertwiner
spaces, span maps become matrices of linear operators, and collapsing all the
symmetry recovers the familiar matrix of a span of sets.
"""

import numpy as np

from lincat import (
    SpanMap,
    cyclic_group,
    degroupoidify,
    lambda_object,
    lambda_span,
    lambda_spanmap,
    one_object_groupoid,
    symmetric_group,
)
from lincat.suites import fig1_span, groupoidification_map, mixed_groupoid

print("=" * 70)
print("A span of sets is the special case with trivial automorphisms")
print("=" * 70)
fig1 = fig1_span()
res = lambda_span(fig1)
print("matrix of the three-points-over-two-points span:")
print(res.map.dims)
print("degroupoidification gives the same matrix with exact rationals:")
for row in degroupoidify(fig1):
    print(" ", [str(q) for q in row])

print()
print("=" * 70)
print("Nontrivial automorphisms: the basis is (object, irrep) pairs")
print("=" * 70)
bs3 = one_object_groupoid(symmetric_group(3))
obj = lambda_object(bs3)
print(f"the 2-vector space of B(S3) has basis of size {len(obj.basis)}:")
for label in obj.basis.labels:
    print("  (object, irrep index, dim) =", label)

print()
print("=" * 70)
print("Span maps become matrices of linear operators")
print("=" * 70)
print("identity span map on the set-span: every block is an identity")
ident = lambda_spanmap(SpanMap.identity(fig1))
print("  block (0,0):", ident.morphism.blocks[(0, 0)].real)

print()
print("a span map over the point recovers groupoid cardinality as a scalar:")
for apex, label in [
    (one_object_groupoid(cyclic_group(2)), "B(Z2)"),
    (mixed_groupoid(), "mixed {1, Z2, S3}"),
]:
    res = lambda_spanmap(groupoidification_map(apex))
    value = res.morphism.blocks[(0, 0)][0, 0]
    exact = sum(res.coefficients.values())
    print(f"  apex {label}: block = {value.real:.6f}, exactly {exact}")
