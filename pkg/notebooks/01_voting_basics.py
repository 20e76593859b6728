# %% [markdown]
# # Two-level voting on a graph
#
# Each vertex looks at its closed neighbourhood (itself plus its neighbours)
# and votes yes when the opinion sum there is positive. The proposal passes
# when strictly more than half of the vertices vote yes.

# %%
from majdom import generators as gen
from majdom.exact import gamma_bruteforce
from majdom.graph import Configuration, tally_votes

c5 = gen.cycle(5)
conf = Configuration(c5, [1, 1, -1, 1, -1])
t = tally_votes(conf)
print("votes:", t.votes.astype(int), "yes:", t.yes_count, "accepted:", t.accepted)

# %% [markdown]
# The domination number is the smallest opinion sum that still gets the
# proposal through. On C5 a single net +1 is enough.

# %%
r = gamma_bruteforce(c5)
print("gamma(C5) =", r.gamma, "witness", r.witness)

# %% [markdown]
# Complete graphs: everybody sees everybody, so the answer is 1 or 2 by parity.

# %%
for n in range(2, 10):
    print(n, gamma_bruteforce(gen.complete(n)).gamma)

# %% [markdown]
# Negative values are possible on sparse graphs: a minority of +1 vertices
# placed well can carry a majority of the votes.

# %%
for n in (7, 9, 11, 13):
    print(f"C{n}", gamma_bruteforce(gen.cycle(n)).gamma)
