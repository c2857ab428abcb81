"""Graph embeddings on surfaces: faces, genus, strong embeddings, facial distance."""

from .bounds import euler_girth_bound, max_genus_ub, moore_bound_cubic, thm1_bound
from .embedding import (
    Embedding,
    FaceWalk,
    SurfaceKind,
    euler_characteristic,
    face_bfs_layers,
    facial_distance,
    is_polyhedral,
    is_strong,
    surface_of,
    trace_faces,
)
from .families import Instance, hex_cylinder, k33
from .graph import Graph, connectivity, girth, is_cubic, parse_graph, suppress_degree_two
from .homology import CycleSet, homologically_independent, is_surface_separating
from .planarity import NestedCertificate, NonPlanar, planar_embedding, prop1_certificate, verify_certificate
from .search import AboveCap, SearchResult, enumerate_rotations, min_genus, strong_genus

__version__ = "0.1.0"

__all__ = [
    "AboveCap",
    "CycleSet",
    "Embedding",
    "FaceWalk",
    "Graph",
    "Instance",
    "NestedCertificate",
    "NonPlanar",
    "SearchResult",
    "SurfaceKind",
    "connectivity",
    "enumerate_rotations",
    "euler_characteristic",
    "euler_girth_bound",
    "face_bfs_layers",
    "facial_distance",
    "girth",
    "hex_cylinder",
    "homologically_independent",
    "is_cubic",
    "is_polyhedral",
    "is_strong",
    "is_surface_separating",
    "k33",
    "max_genus_ub",
    "min_genus",
    "moore_bound_cubic",
    "parse_graph",
    "planar_embedding",
    "prop1_certificate",
    "strong_genus",
    "suppress_degree_two",
    "surface_of",
    "thm1_bound",
    "trace_faces",
    "verify_certificate",
]
