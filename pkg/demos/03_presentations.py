# # Minimal presentations of monomial curves
#
# The defining ideal of t -> (t^n1, ..., t^ne) is generated by binomials.
# Two independent routes compute a generating set; factorization graphs then
# count how many generators any minimal set needs in each degree.

from semigroup_forge import (
    factorization_graph,
    lattice_kernel_basis,
    minimal_generating_set,
    mu_and_betti_degrees,
    toric_ideal_generators,
)
from semigroup_forge.presentation import ideals_equal

gens = (4, 9, 11)

# Kernel lattice of (4, 9, 11): a reduced integer basis.

print(lattice_kernel_basis(gens))

# Saturation of the lattice ideal versus elimination of the parameter.

A = toric_ideal_generators(gens, "saturation")
B = toric_ideal_generators(gens, "elimination")
print(len(A), len(B), "same ideal:", ideals_equal(A, B, gens))

# Betti degrees are the elements whose factorization graph is disconnected.

report = mu_and_betti_degrees(gens, A)
print("mu =", report.mu, "degrees", report.betti_degrees)
for s in report.betti_degrees:
    g = factorization_graph(gens, s)
    print(s, g.factorizations, "components", g.component_count)

# One generator per extra component gives a minimal set.

for f in minimal_generating_set(gens, A):
    print("  ", f)

# A four-generated example from the e=4 family: mu = 12.

print(mu_and_betti_degrees((35, 36, 41, 42), toric_ideal_generators((35, 36, 41, 42))).mu)
