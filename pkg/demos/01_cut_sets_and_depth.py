# %% [markdown]
# # Cut sets, dimension and depth
#
# The minimal primes of a binomial edge ideal are indexed by vertex sets whose
# removal gains a component for every vertex put back.  Dimension follows
# from them; depth needs the resolution.

# %%
from binedge.algebra import depth_and_cm, edge_betti
from binedge.graph import parse_graph
from binedge.primes import cut_sets

# two triangles sharing the edge 2-3, plus a third triangle on the same edge
g = parse_graph("5; 1-2,1-3,2-3,2-4,3-4,2-5,3-5")

# %%
pd = cut_sets(g)
for rec in pd.records:
    print(f"S={list(rec.s)!s:8} components={rec.c}  height={rec.height}")
print("dim S/J_G =", pd.krull_dim, " unmixed:", pd.unmixed)

# %% [markdown]
# Every minimal prime has the same height, yet the ring is not Cohen-Macaulay:
# the depth computed from the Betti table falls one short of the dimension.

# %%
table = edge_betti(g)
print(table.format())
rep = depth_and_cm(g, table=table)
print(f"depth={rep.depth}  dim={rep.dim}  Cohen-Macaulay={rep.cm}  verified={rep.verified}")
