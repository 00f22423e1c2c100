# %% [markdown]
# # Counting identities and an exhaustive census
#
# Multiplicities of CM closed graphs add up over minimal primes.  Rewritten
# in the clique sizes this becomes a counting identity we can check directly.

# %%
from binedge.classify import verify_multiplicity_identity, verify_power_identity

print(verify_multiplicity_identity([2, 1, 3]))
for r in (3, 6, 12):
    res = verify_power_identity(r)
    print(r, res.lhs, res.compositions_rhs, res.partitions_rhs)

# %% [markdown]
# Ordered parts make the power identity work; unordered parts undercount
# from r = 3 on.
#
# The census runs every classifier on every connected graph up to a size
# bound, with the algebra engine as a second opinion.

# %%
from binedge.census import census

recs = list(census(4))
print(len(recs), "graphs,", sum(not r.agrees for r in recs), "disagreements")
for r in recs:
    print(r.graph.to_text(), r.flags["closed"], r.engine.get("depth"), r.engine.get("cm"))
