"""Exact-rational polyhedral computation."""

from .polytope import (
    Component,
    EmptyPolytopeError,
    GeometryError,
    HPolytope,
    PolyUnion,
    UnboundedError,
    VPolytope,
    contains,
    convex_hull,
    is_empty,
    minkowski_member,
    minkowski_witness,
    set_equal,
    subset,
    vertices,
)

__all__ = [
    "Component",
    "EmptyPolytopeError",
    "GeometryError",
    "HPolytope",
    "PolyUnion",
    "UnboundedError",
    "VPolytope",
    "contains",
    "convex_hull",
    "is_empty",
    "minkowski_member",
    "minkowski_witness",
    "set_equal",
    "subset",
    "vertices",
]
