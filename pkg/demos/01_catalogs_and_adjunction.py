"""Surface catalogs and adjunction complexes.

A catalog is a finite stock of embedded-surface models in a blown-up
4-manifold: labeled homology classes with a genus, plus an explicit
disjointness relation.  From a catalog we build two flag complexes: the
ambient one (all square-zero surfaces, simplices = pairwise-disjoint
collections) and the adjunction complex (only the surfaces whose genus is
too small for their pairing with the characteristic class).
"""

from surfcomplex import (
    HomologyClass,
    SurfaceClass,
    build_adjunction_complex,
    chi_minus,
    formal_dimension,
    make_example_family,
    projective_sum_model,
    standard_spinc,
)

# Exact lattice arithmetic on 2CP^2 # 3(-CP^2): H's square to +1, E's to -1.
m = projective_sum_model(2, 3)
spinc = standard_spinc(m)
print(f"model {m.name}: b+ = {m.b_plus}, b- = {m.b_minus}, "
      f"euler = {m.euler}, signature = {m.signature}")
print("formal dimension of the standard structure:", formal_dimension(m, spinc))

a = HomologyClass({"H1": 2, "E1": 1, "E2": 1})
print(f"\n[{a}]^2 =", m.square(a), "   c1 . [{}] =".format(a), m.pairing(spinc.c1, a))
print("genus bound for genus 3:", chi_minus(3))

# Stock construction: degree-d curves summed with exceptional spheres give
# 2k surfaces violating the genus bound, pairwise disjoint across indices.
catalog, members = make_example_family("ex46", 2, [2, 2], [3, 3], [9, 9])
print(f"\ncatalog {catalog.sha256()[:12]} with {len(catalog.surfaces)} surfaces")
for s in catalog.surfaces:
    print(f"  {s.id:5} [{s.cls}]  genus {s.genus}")

built = build_adjunction_complex(catalog, max_dim=3)
print()
print(built.report_text())

# The adjunction complex here is a circle: four vertices, four edges.
K = built.adjunction
print("\nadjunction complex homology:")
for n in range(2):
    betti, torsion = K.homology(n)
    print(f"  H_{n}: betti {betti}, torsion {torsion}")

# Parallel copies never shrink the complex; they cone off the old star.
bigger = build_adjunction_complex(catalog.with_parallel_copy("S1+"), max_dim=3)
print("\nafter a parallel copy of S1+:",
      len(bigger.adjunction.simplices(1)), "edges,",
      len(bigger.adjunction.simplices(2)), "triangles")
