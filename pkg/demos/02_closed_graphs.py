# %% [markdown]
# # Closed graphs and quadratic Groebner bases
#
# A labeling is closed when the defining binomials already form a Groebner
# basis.  We look for one, and compare with Buchberger's algorithm.

# %%
import itertools

from binedge.algebra import edge_ideal_gb
from binedge.graph import Graph, Labeling, facets_by_minimum, find_closed_labeling, is_closed_wrt, parse_graph

g = parse_graph("5; 1-4,4-2,2-4,4-5,2-5,5-3")
lab = find_closed_labeling(g)
print("closed labeling:", lab.perm)
print("facets after relabeling:", facets_by_minimum(g, lab))

# %%
for name, l in [("input", Labeling.identity(g.n)), ("closed", lab)]:
    gb = edge_ideal_gb(g, l)
    print(f"{name:>6}: max degree {gb.max_degree()}, quadratic={gb.is_quadratic()}")

# %% [markdown]
# The claw has no closed labeling at all: every one of its 24 labelings
# produces a cubic in the reduced basis.

# %%
claw = Graph.star(3)
degrees = {edge_ideal_gb(claw, Labeling(p)).max_degree() for p in itertools.permutations(range(1, 5))}
print("claw basis degrees over all labelings:", degrees)
print("any closed labeling:", any(is_closed_wrt(claw, Labeling(p)) for p in itertools.permutations(range(1, 5))))
