# %% [markdown]
# # Chains of cliques
#
# A chain of cliques is a chordal graph whose facets line up so that each
# one's unique branch is the previous facet.  Closed graphs are chains; a fan
# of four triangles is a chain that is not closed.  We compare the Betti
# numbers of J_G with those of its initial ideal, recording evidence only.

# %%
from binedge.algebra import conjecture_probe
from binedge.graph import parse_graph

fan = parse_graph("6; 1-2,2-3,3-4,4-5,5-6,6-1,1-3,1-4,1-5")
probe = conjecture_probe(fan)
print("chain:", probe.chain_of_cliques, " closed:", probe.closed)
print("Betti equal:", probe.betti_equal, " extremal equal:", probe.extremal_equal)
print(probe.ideal_table.format())
print(probe.initial_table.format())

# %% [markdown]
# A second chain: K4 minus an edge with a pendant vertex at a degree-3 vertex.

# %%
other = conjecture_probe(parse_graph("5; 1-2,1-3,1-4,1-5,2-3,2-4"))
print("chain:", other.chain_of_cliques, " Betti equal:", other.betti_equal, " extremal equal:", other.extremal_equal)
print(other.ideal_table.format())
print(other.initial_table.format())
