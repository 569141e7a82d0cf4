"""Bounding collections and the derived genus constraints.

A bounding collection is a signed set of simplices one dimension up whose
boundary reproduces the fundamental cycle of a wall-crossing collection.
When the seed invariant of the closed summand is nonzero, a verified
bounding forces at least one of its member surfaces to satisfy the genus
bound; members of positive self-intersection are first traded for
square-zero ones by blowing up, which strengthens the bound by the
self-intersection number.
"""

from surfcomplex import (
    BoundingCollection,
    HomologyClass,
    ManifoldModel,
    SWSeed,
    SpinCStructure,
    SurfaceClass,
    WallCrossingCollection,
    cone_bounding,
    connected_sum_catalog,
    derive_constraints,
    make_example_family,
    verify_bounding,
)

catalog, members = make_example_family("ex46", 2, [2, 2], [2, 2], [4, 4])

# A cone bounding: one surface disjoint from the whole collection.
host = catalog.with_surface(
    SurfaceClass("W", HomologyClass(), 0), disjoint_from=list(catalog.ids())
)
coll = WallCrossingCollection.create(host, members)
cone = cone_bounding(host, coll, "W")
print("cone bounding simplices:")
for coeff, verts in cone.terms:
    print(f"  {coeff:+d} * {verts}")
print(verify_bounding(host, coll, cone).text())

# The two-surface configuration: W misses one quadrant, W' the other.
host2 = catalog.with_surface(
    SurfaceClass("W", HomologyClass(), 0), disjoint_from=["S1+", "S1-", "S2+"]
).with_surface(
    SurfaceClass("W'", HomologyClass(), 1), disjoint_from=["S1+", "S1-", "S2-", "W"]
)
coll2 = WallCrossingCollection.create(host2, members)
two = BoundingCollection((
    (1, ("S1+", "S2+", "W")),
    (-1, ("S1-", "S2+", "W")),
    (1, ("S1+", "W", "W'")),
    (-1, ("S1-", "W", "W'")),
    (-1, ("S1+", "S2-", "W'")),
    (1, ("S1-", "S2-", "W'")),
))
print("\ntwo-surface configuration:")
print(verify_bounding(host2, coll2, two).text())

# Drop a simplex and the boundary no longer matches; the residual says where.
broken = BoundingCollection(two.terms[1:])
print("\nafter dropping one simplex:")
print(verify_bounding(host2, coll2, broken).text())

# Constraint report for the verified two-surface bounding.
report = derive_constraints(host2, coll2, two, SWSeed(1, "hypothetical seed"))
print()
print(report.text())

# A member of positive self-intersection: explicit positive classes on the
# closed summand, a cone vertex of square 3, and the blow-up route.
m_model = ManifoldModel(
    "M0",
    tuple((f"F{i}", 1) for i in (1, 2, 3)) + tuple((f"G{j}", -1) for j in (1, 2, 3)),
    euler=8,
    signature=0,
)
m_spinc = SpinCStructure.on(
    m_model, HomologyClass({"F1": 3, "F2": 3, "F3": 1, "G1": 1, "G2": 1, "G3": 1})
)
hostx = connected_sum_catalog(m_model, m_spinc, catalog)
hostx = hostx.with_surface(
    SurfaceClass("S", HomologyClass({"F1": 2, "G1": 1}), 5),
    disjoint_from=list(catalog.ids()),
)
collx = WallCrossingCollection.create(hostx, members, h_labels=("H1", "H2"))
bndx = cone_bounding(hostx, collx, "S", ambient="nonneg")
reportx = derive_constraints(hostx, collx, bndx, SWSeed(1, "hypothetical seed"))
print()
print(reportx.text())
