"""
Walking the subgroup lattice
============================

"""

from collections import Counter

from fusionsys import (all_subgroups, chief_series_below, maximal_subgroups,
                       normal_subgroups, symmetric, psl2)

# every subgroup of S4, found by closing generator pairs upward
G = symmetric(4)
lat = all_subgroups(G)
print("S4 has", len(lat.all), "subgroups")
print("orders:", dict(Counter(H.order for H in lat.all)))

# the normal ones and the maximal ones
print("normal orders:", [H.order for H in normal_subgroups(G)])
print("maximal orders:", sorted(H.order for H in maximal_subgroups(G)))

# a chief series refines the normal structure; S4 is solvable, so every
# chief factor has prime-power order
for step in chief_series_below(G, normal_subgroups(G)[-1]):
    print("chief factor of order", step.order, "cyclic:", step.cyclic)

# bigger game: PSL(2,7), simple of order 168, has 179 subgroups
H = psl2(7)
lat7 = all_subgroups(H)
print("PSL(2,7) has", len(lat7.all), "subgroups")
print("orders:", dict(Counter(K.order for K in lat7.all)))
print("normal orders:", [K.order for K in normal_subgroups(H)])
