"""Graph associahedra, graph cubeahedra and the halohedron, in exact arithmetic."""

__version__ = "0.1.0"
