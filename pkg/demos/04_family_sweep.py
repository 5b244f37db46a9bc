# # Concatenation families with growing mu and type
#
# For e = 4 and e = 5 there are closed forms for the Apery set, the
# pseudo-Frobenius numbers and (for e = 5) an explicit generating set of the
# defining ideal. verify_family compares all of them with generic computation
# and records any disagreement instead of correcting it.

from semigroup_forge import closed_pf_e5, family, q5_generator_set, verify_family

p = family(5, 2)
print(p.n, p.generators)
print(sorted(closed_pf_e5(p))[:5], "...")

# The explicit e=5 generating set, by name.

for name, f in q5_generator_set(p).items():
    print(f"{name:>6}  {f}")

# A small sweep. Both mu and the type grow linearly in n.

print(f"{'e':>2} {'i':>2} {'n':>3} {'mu':>4} {'type':>5}  ok")
for e, i_values in ((4, range(2, 6)), (5, range(2, 4))):
    for i in i_values:
        r = verify_family(e, i)
        print(f"{e:>2} {i:>2} {r.params.n:>3} {r.mu:>4} {r.type:>5}  {r.all_match}")

for note in verify_family(5, 2, compute_mu=False).notes:
    print("note:", note)
