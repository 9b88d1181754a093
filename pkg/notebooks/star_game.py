# ---
# jupyter:
#   jupytext:
#     formats: py:percent
#     text_representation:
#       extension: .py
#       format_name: percent
# ---

# %% [markdown]
# # A symmetric three-player game
#
# Singletons are worth 0, pairs 2, the grand coalition 3.  The game is
# superadditive but not supermodular, so the core is smaller than the
# intermediate set, which in turn is smaller than the Weber set.

# %%
from fractions import Fraction

from intermediate_set import Game
from intermediate_set.classify import classify
from intermediate_set.solutions import core, intermediate, minimal_components, weber

v = Game.from_function(3, lambda A: Fraction([0, 0, 2, 3][bin(A).count("1")]))
c = classify(v)
print("supermodular:", c.supermodular, " superadditive:", c.superadditive)

# %% [markdown]
# The core is a single point and the Weber set a hexagon.

# %%
print("core:", core(v).vertex_list())
print("weber:", sorted(weber(v).points))

# %% [markdown]
# Every chain gives one component.  The chains {i, N} are empty: player i
# gets v({i}) = 0, the other two share the remaining 3, yet each of them can
# claim 2 by joining i.

# %%
M = intermediate(v)
for comp in M.components:
    print(f"{str(comp.label):22s}", "empty" if comp.empty else comp.polytope.vertex_list())

# %% [markdown]
# Dropping components inside other components leaves three segments through
# the core point.

# %%
for comp in minimal_components(M).components:
    print(comp.label, comp.polytope.vertex_list())

# %% [markdown]
# The same picture as SVG (written next to this script).

# %%
from intermediate_set.plot import plot_svg

with open("star_game.svg", "w") as fh:
    fh.write(plot_svg(v))
