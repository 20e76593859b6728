# %% [markdown]
# # Complete and regular special cases

# %%
from majdom import generators as gen
from majdom.bench import feasible_degrees, formula_row
from majdom.exact import gamma_bruteforce
from majdom.heuristics import complete_heuristic, nearest_regular, regular_heuristic

g = gen.random_connected(10, 0.5, seed=2)
exact = gamma_bruteforce(g).gamma

# %% [markdown]
# Complete-graph route: start from K_n with (n-1)//2 opinions -1 on the
# vertices missing the most edges, then delete the missing edges.

# %%
out = complete_heuristic(g)
c = out.certificate
print(f"removed {c.k} edges (l={c.l}, s={c.s}, m={c.m}) -> [{c.lb}, {c.ub}], "
      f"found {out.result.gamma}, exact {exact}")

# %% [markdown]
# Regular-graph route: degree nearest the mean (parity permitting), a
# circulant target aligned to the input greedily, then replay the edit script.

# %%
target = nearest_regular(g)
print("degree", target.degree, "edit distance", target.distance)
out = regular_heuristic(g)
c = out.certificate
print(f"[{c.lb}, {c.ub}] found {out.result.gamma} exact {exact}")

# %% [markdown]
# The closed form for odd regular graphs, read with the unnamed denominator as
# the degree, against exhaustive search on circulants. Disagreements are
# expected and only reported.

# %%
for n in (5, 7, 9, 11):
    for k in feasible_degrees(n):
        print(formula_row(n, k, oracle=True).format())
