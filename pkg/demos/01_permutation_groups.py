"""
Permutations and groups from generators
=======================================

"""

# a permutation is a tuple: position i holds the image of point i
from fusionsys import compose, cycle_string, from_cycles, perm_order

r = from_cycles(4, [[0, 1, 2, 3]])     # the 4-cycle (0 1 2 3)
s = from_cycles(4, [[0, 2]])           # the transposition (0 2)
print("r =", r, "=", cycle_string(r))
print("s =", s, "=", cycle_string(s))

# composition acts on the right: (r * s)[i] = s[r[i]]
print("r * s =", cycle_string(compose(r, s)))
print("order of r:", perm_order(r))

# a group is the closure of its generators; every element is materialized
# and multiplication becomes integer table lookup
from fusionsys import generate_group

D8 = generate_group(4, [r, s])
print("|D8| =", D8.order)
print("elements:", sorted(cycle_string(g) for g in D8.elements))

# the catalog has the standard small groups ready-made
from fusionsys import symmetric, sylow_subgroup

G = symmetric(4)
print("|S4| =", G.order)

# a Sylow 2-subgroup: maximal 2-power order, here 8 out of 24
S = sylow_subgroup(G, 2)
print("|S| =", S.order)
print("S =", sorted(cycle_string(G.elements[i]) for i in S.indices))

# normalizer and centralizer of the subgroup generated by (0 1)(2 3)
from fusionsys import Subgroup, centralizer, normalizer

z = Subgroup(G, G.closure_indices([G.index_of(from_cycles(4, [[0, 1], [2, 3]]))]))
print("|N_G(z)| =", normalizer(G, z).order)
print("|C_G(z)| =", centralizer(G, z).order)
