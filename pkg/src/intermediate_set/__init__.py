"""Exact core, Weber set and intermediate set of transferable-utility games."""

from .game import (
    Chain,
    Game,
    GameError,
    additive_game,
    enumerate_chains,
    marginal_vector,
    ordered_bell,
    parse_game,
    unanimity_game,
)
from .geometry import HPolytope, PolyUnion, VPolytope, contains, is_empty, set_equal, subset
from .lovasz import decompose, lovasz_eval
from .solutions import (
    chain_component,
    core,
    imputations,
    intermediate,
    marginal_game,
    weber,
)

__all__ = [
    "Chain",
    "Game",
    "GameError",
    "HPolytope",
    "PolyUnion",
    "VPolytope",
    "additive_game",
    "chain_component",
    "contains",
    "core",
    "decompose",
    "enumerate_chains",
    "imputations",
    "intermediate",
    "is_empty",
    "lovasz_eval",
    "marginal_game",
    "marginal_vector",
    "ordered_bell",
    "parse_game",
    "set_equal",
    "subset",
    "unanimity_game",
    "weber",
]
