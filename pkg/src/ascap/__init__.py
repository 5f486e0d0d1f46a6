"""Almost self-centered and almost peripheral graphs: constructions,
isomorph-free enumeration, and exhaustive checks of extremal values."""

from .graph import Graph, from_graph6, to_graph6

__all__ = ["Graph", "from_graph6", "to_graph6"]
__version__ = "0.1.0"
