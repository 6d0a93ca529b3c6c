"""Distinguishing numbers, fixing numbers and paint costs of trees."""

from symtree.graph import Coloring, Graph, RootedTree, Tree, center, eccentricities, parse_edge_list
from symtree.params import distinguishing_number, fixing_number

__version__ = "0.1.0"

__all__ = [
    "Coloring",
    "Graph",
    "RootedTree",
    "Tree",
    "center",
    "distinguishing_number",
    "eccentricities",
    "fixing_number",
    "parse_edge_list",
]
