# # Numerical semigroup invariants
#
# A numerical semigroup is given by coprime generators. Everything below is
# read off one Apery table, computed as shortest paths over the residues
# modulo the multiplicity.

from semigroup_forge import apery, concat_semigroup, new_semigroup, pseudo_frobenius
from semigroup_forge.semigroup import gaps

# Redundant generators are dropped: 5 = 2 + 3.

S = new_semigroup([2, 3, 5])
print(S, "multiplicity", S.multiplicity)

# The classic fixtures.

for gens in ([2, 3], [3, 4, 5], [4, 9, 11]):
    inv = pseudo_frobenius(new_semigroup(gens))
    print(gens, "F =", inv.frobenius, "genus =", inv.genus, "PF =", inv.pseudo_frobenius)

# Membership is a table lookup once the Apery set is known.

T = new_semigroup([35, 36, 41, 42])
print([x for x in range(170, 180) if x in T])
print("gaps above 160:", [g for g in gaps(T) if g > 160])

# The Apery set with respect to any element, not only the multiplicity.

table = apery(T, 36)
print(len(table), "elements, largest", max(table.entries))

# Pseudo-Frobenius numbers are the maximal Apery elements minus the modulus.

inv = pseudo_frobenius(T)
print("type", inv.type, "PF", inv.pseudo_frobenius)

# Two arithmetic progressions with a common difference. The flag says whether
# the concatenated list is already the minimal generating set.

print(concat_semigroup(10, 3, 2, 16, 2))
print(concat_semigroup(10, 3, 2, 17, 2))  # 20 = 2*10, so not minimal
