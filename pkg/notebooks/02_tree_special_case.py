# %% [markdown]
# # Trees: exact in polynomial time, then lifted to any connected graph
#
# `gamma_tree` runs a subtree merge instead of enumerating 2**n vectors.

# %%
import time

from majdom import generators as gen
from majdom.exact import gamma_bruteforce, gamma_tree
from majdom.heuristics import tree_heuristic

t = gen.random_tree(16, seed=3)
t0 = time.perf_counter(); fast = gamma_tree(t); t1 = time.perf_counter()
slow = gamma_bruteforce(t); t2 = time.perf_counter()
print(f"DP {fast.gamma} in {t1 - t0:.4f}s, oracle {slow.gamma} in {t2 - t1:.4f}s")

big = gen.random_tree(300, seed=1)
print("n=300 tree:", gamma_tree(big).gamma)

# %% [markdown]
# On a general graph: solve a BFS spanning tree, add the missing edges back
# and flip -1 opinions whenever a yes majority is lost. The certificate
# widens the tree's value by 4 per added edge below and 2 per edge that is
# not between two +1 vertices above.

# %%
g = gen.random_connected(11, 0.25, seed=8)
out = tree_heuristic(g)
exact = gamma_bruteforce(g).gamma
c = out.certificate
print(f"k={c.k} s={c.s} l={c.l} interval=[{c.lb}, {c.ub}] found={out.result.gamma} exact={exact}")
print("flipped vertices:", out.repair_log.vertices)
