# %% [markdown]
# # Which closed graphs are Cohen-Macaulay?
#
# For a connected closed graph the answer is read off its maximal cliques:
# they must form a chain of intervals glued at single vertices.  The engine
# confirms the prediction and the invariants that come with it.

# %%
from binedge.algebra import edge_betti, edge_ideal_gb, hilbert_series_monomial, initial_betti
from binedge.classify import classify
from binedge.primes import ClosedCMStructure, cm_closed_primes

st = ClosedCMStructure.from_clique_sizes([3, 2, 4])
g = st.graph()
rep = classify(g)
print(rep.class_tag, "CM:", rep.cm, " type:", rep.cm_type, " multiplicity:", rep.multiplicity)
print("predicted h-vector:", rep.hilbert_numerator, " a-invariant:", rep.a_invariant)

# %%
gb = edge_ideal_gb(g)
hs = hilbert_series_monomial(gb.leading_monomials, 2 * g.n)
print("engine h-vector:", list(hs.reduced), " e =", hs.multiplicity, " a =", hs.a_invariant)

# %% [markdown]
# The Betti numbers of the ideal and its initial ideal coincide, and the last
# total Betti number is the type.

# %%
tj, ti = edge_betti(g), initial_betti(g)
print(tj.format())
print("same as initial ideal:", tj.same_numbers(ti), " last total:", tj.last_total)

# %%
for s, mult in cm_closed_primes(st):
    print(f"P_{list(s)}  multiplicity {mult}")
