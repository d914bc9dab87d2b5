# The graphs G(lambda): one directed cycle per part, automorphism count z_lambda.
#
# Run with:  python demos/03_partition_graphs.py
from fractions import Fraction

from taupart import (
    Partition,
    brute_force_aut_count,
    build_graph,
    enumerate_partitions,
    export_dot,
    structural_aut_count,
    symmetry_number,
    z,
)
from taupart.graphs import automorphisms

lam = Partition(3, 2, 2, 1)
g = build_graph(lam)
print("G(3,2,2,1) adjacency:")
print(g.adjacency)
print(export_dot(g))

print("brute force:", brute_force_aut_count(g), " structural:", structural_aut_count(lam), " z:", z(lam))

# Automorphisms rotate cycles and swap cycles of equal length.
for rho in automorphisms(build_graph(Partition(2, 2)))[:8]:
    print("  ", rho.images)

# Symmetry numbers over all partitions of n add up to one.
for n in range(1, 9):
    total = sum((symmetry_number(l) for l in enumerate_partitions(n)), Fraction(0))
    print(f"n={n}: sum of symmetry numbers = {total}")
