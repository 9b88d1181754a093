# ---
# jupyter:
#   jupytext:
#     formats: py:percent
#     text_representation:
#       extension: .py
#       format_name: percent
# ---

# %% [markdown]
# # Glove markets
#
# With p left and q right glove holders a coalition is worth the number of
# pairs it can form.  The formulas assume the left side is the majority; other
# labelings go through `glove_relabeled`.

# %%
from intermediate_set.families import (
    glove_chain_cases,
    glove_core,
    glove_relabeled,
    intermediate_glove,
    intermediate_glove_relabeled,
    make_glove,
)
from intermediate_set.geometry import set_equal
from intermediate_set.solutions import core, intermediate

# %% [markdown]
# One left glove (player 1) and two right gloves (players 2 and 3).  In the
# standard labels the two right holders come first.

# %%
v, perm, p, q = glove_relabeled([1], [2, 3])
print("standard labels of players 1..3:", perm, " p, q =", p, q)
print("core:", core(v).vertex_list())
for comp in intermediate_glove_relabeled([1], [2, 3]).components:
    print(comp.label, comp.polytope.vertex_list())

# %% [markdown]
# The scarce side takes everything in the core.  With equal sides the core is
# the segment between the two incidence vectors.

# %%
print(glove_core(3, 1).vertex_list())
print(glove_core(2, 2).vertex_list())

# %% [markdown]
# Matching formula against the general chain engine, for every market with at
# most five players.

# %%
for p in range(1, 5):
    for q in range(1, p + 1):
        if p + q <= 5:
            ok = set_equal(intermediate_glove(p, q), intermediate(make_glove(p, q)))
            print(p, q, ok)

# %% [markdown]
# Each block of a chain falls into one case, decided by the glove counts
# before and after the block.  One infeasible block empties the component.

# %%
v = make_glove(2, 2)
M = intermediate(v)
for comp in M.components[:8]:
    print(f"{str(comp.label):24s}", glove_chain_cases(2, 2, comp.label), "empty" if comp.empty else "")
