"""
The fusion system of S4 on its Sylow 2-subgroup
===============================================

"""

from fusionsys import (FusionContext, Subgroup, automizer, cycle_string,
                       essential_star, from_cycles, fusion_class,
                       fusion_p_core, morphisms, supersolvable_chain,
                       sylow_controls_fusion, symmetric)

G = symmetric(4)
ctx = FusionContext.build(G, 2)
S = ctx.S
print("|G| =", G.order, " |S| =", S.order)


def make(*cycle_lists):
    idx = [G.index_of(from_cycles(4, c)) for c in cycle_lists]
    return Subgroup(G, G.closure_indices(idx))


# conjugation fuses subgroups of S into classes
z = make([[0, 1], [2, 3]])
cls = fusion_class(ctx, z)
print("class of <(0 1)(2 3)> inside S has", len(cls.members), "members")

# morphisms P -> Q are the distinct conjugation maps; the count is
# |T_G(P, Q)| / |C_G(P)|
maps = morphisms(ctx, z, S)
print("maps <z> -> S:", len(maps))

# Aut_F(P) versus inner automorphisms: the Klein four-group V4 picks up the
# full symmetric group of its three involutions
v4 = make([[0, 1], [2, 3]], [[0, 2], [1, 3]])
pair = automizer(ctx, v4)
print("|Aut_F(V4)| =", pair.aut.order, " |Out_F(V4)| =", pair.out.order)

# the essential subgroups plus S generate all fusion (Alperin's family);
# for S4 at p=2 that family is {V4, S}
for H in essential_star(ctx):
    gens = ", ".join(cycle_string(G.elements[i]) for i in H.generating_indices())
    print("essential-star member of order", H.order, " gens:", gens)

# the largest subgroup normal in the whole system
print("fusion 2-core order:", fusion_p_core(ctx).order)

# no chain of strongly closed subgroups with cyclic steps exists here,
# and fusion in S4 is strictly richer than fusion inside S alone
print("supersolvable chain:", supersolvable_chain(ctx))
print("S controls fusion:", sylow_controls_fusion(ctx))
