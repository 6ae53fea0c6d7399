"""
Graph representation, graph6 codec and the family constructions
"""

from app.graphs.graph import Graph, VertexSet, complement, graph_from_edges
from app.graphs.graph6 import graph6_decode, graph6_encode

__all__ = ["Graph", "VertexSet", "complement", "graph_from_edges", "graph6_decode", "graph6_encode"]
