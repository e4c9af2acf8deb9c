"""Force-directed graph layout with centrality-weighted gravity.

The simulation combines pairwise repulsion, spring attraction along edges,
and a gravitational pull toward the drawing centroid whose per-vertex
strength comes from network centrality. Gravity is scaled up over the run,
which lets drawings untangle first and compact afterwards. Includes
drawing-quality metrics, random tree/forest generators, a circular-arc
edge post-pass, and an SVG renderer.
"""

from .arcs import ArcEdge, CircularArc, augment_with_dummies, fit_arc, layout_lombardi
from .centrality import (
    CENTRALITY_KINDS,
    DEFAULT_MASS_FLOOR,
    CentralityVector,
    MassVector,
    betweenness_centrality,
    closeness_centrality,
    compute_centrality,
    degree_centrality,
    normalize_mass,
    uniform_centrality,
)
from .engine import (
    LayoutConfig,
    LayoutState,
    Schedule,
    attractive_force,
    centroid,
    gravity_force,
    initialize_positions,
    net_impulse,
    repulsive_force,
    run_layout,
    schedule_gamma,
    step,
    terminal_gamma,
)
from .generators import generate_forest, generate_random_tree
from .graphs import (
    UNREACHABLE,
    DistanceVector,
    Graph,
    GraphParseError,
    bfs_distances,
    connected_components,
    parse_edge_list,
    parse_graph_json,
    serialize_edge_list,
    serialize_graph_json,
)
from .metrics import (
    DrawingMetrics,
    bounding_area,
    centrality_radius_correlation,
    compute_metrics,
    count_crossings,
    edge_length_stats,
    min_angular_resolution,
    spearman,
)
from .render import Color, RenderError, color_for, render_svg

__version__ = "0.1.0"

__all__ = [
    "ArcEdge",
    "CircularArc",
    "augment_with_dummies",
    "fit_arc",
    "layout_lombardi",
    "CENTRALITY_KINDS",
    "DEFAULT_MASS_FLOOR",
    "CentralityVector",
    "MassVector",
    "betweenness_centrality",
    "closeness_centrality",
    "compute_centrality",
    "degree_centrality",
    "normalize_mass",
    "uniform_centrality",
    "LayoutConfig",
    "LayoutState",
    "Schedule",
    "attractive_force",
    "centroid",
    "gravity_force",
    "initialize_positions",
    "net_impulse",
    "repulsive_force",
    "run_layout",
    "schedule_gamma",
    "step",
    "terminal_gamma",
    "generate_forest",
    "generate_random_tree",
    "UNREACHABLE",
    "DistanceVector",
    "Graph",
    "GraphParseError",
    "bfs_distances",
    "connected_components",
    "parse_edge_list",
    "parse_graph_json",
    "serialize_edge_list",
    "serialize_graph_json",
    "DrawingMetrics",
    "bounding_area",
    "centrality_radius_correlation",
    "compute_metrics",
    "count_crossings",
    "edge_length_stats",
    "min_angular_resolution",
    "spearman",
    "Color",
    "RenderError",
    "color_for",
    "render_svg",
]
