"""polyguard: exact-arithmetic polygon guarding and coloring algorithms.

Core surface:

- geom: rational points, robust predicates, polygons, triangulation
- visibility: visibility graphs and visibility polygons
- funnel: funnel guarding (simple/optimal) and conflict-free coloring
- weakvis: shortest path trees, max funnels, weak-visibility guarding
- polygoncf: decomposition and conflict-free coloring of simple polygons
- propercolor: 3/4-coloring of polygon visibility graphs
- udvg: unit disk visibility graphs of points, segments and polygons
- oracle: brute-force ground truth and exact/sampled verifiers
"""

from .geom import (Point, Polygon, Segment, pt, rat, orientation, validate,
                   point_in_polygon, segment_in_polygon, triangulate)
from .visibility import (VisibilityGraph, vertex_visible, visibility_graph,
                         visibility_polygon_of_point, visibility_polygon_of_edge)
from .funnel import (Funnel, funnel_from_polygon, upseg, guard_funnel_simple,
                     guard_funnel_optimal, ruler_color, cf_color_funnel)

__all__ = [
    "Point", "Polygon", "Segment", "pt", "rat", "orientation", "validate",
    "point_in_polygon", "segment_in_polygon", "triangulate",
    "VisibilityGraph", "vertex_visible", "visibility_graph",
    "visibility_polygon_of_point", "visibility_polygon_of_edge",
    "Funnel", "funnel_from_polygon", "upseg", "guard_funnel_simple",
    "guard_funnel_optimal", "ruler_color", "cf_color_funnel",
]
