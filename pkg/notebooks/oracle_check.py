# ---
# jupyter:
#   jupytext:
#     formats: py:percent
#     text_representation:
#       extension: .py
#       format_name: percent
# ---

# %% [markdown]
# # Superdifferentials of the Lovasz extension
#
# The oracle never looks at chain systems.  It evaluates the extension at
# probe points and collects the linear inequalities a supergradient must
# satisfy.  Comparing with the chain engine is the main cross-check.

# %%
from intermediate_set.generators import random_game
from intermediate_set.geometry import convex_hull, set_equal
from intermediate_set.oracle import (
    FanPoint,
    clarke_superdiff,
    frechet_superdiff,
    intersection_query,
    limiting_superdiff,
    validate_frechet,
)
from intermediate_set.solutions import chain_component, intermediate, weber

v = random_game(3, seed=11)
print(v)

# %% [markdown]
# Around each chain there is a point whose level sets are the chain's
# blocks.  The superdifferential there is that chain's component.

# %%
for comp in intermediate(v).components:
    x = FanPoint(comp.label).point
    same = set_equal(frechet_superdiff(v, x), chain_component(v, comp.label))
    print(f"{str(comp.label):22s} {x}  agrees: {same}")

# %% [markdown]
# Random rational directions do not find a supergradient that the finite
# probe set missed.

# %%
x = FanPoint(intermediate(v).components[5].label).point
P = frechet_superdiff(v, x)
print("violating direction:", None if P.is_empty() else validate_frechet(v, x, P, samples=500))

# %% [markdown]
# Limiting superdifferential against the intermediate set, Clarke against the
# Weber set, and the hull relation between the two.

# %%
L = limiting_superdiff(v)
print("limiting = M:", set_equal(L, intermediate(v)))
print("clarke = W:", set_equal(clarke_superdiff(v), weber(v)))
print("conv(limiting) = clarke:", set_equal(convex_hull(L), clarke_superdiff(v)))

# %% [markdown]
# An experiment without a general claim: do the inclusion-maximal limiting
# components meet exactly in the core?

# %%
for seed in range(8):
    inter, same = intersection_query(random_game(3, seed))
    print(seed, same)
