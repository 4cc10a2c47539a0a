"""Exact universal geometric coefficients, shear coordinates and mutation fan
for the once-punctured torus exchange matrix ``[[0,2,-2],[-2,0,2],[2,-2,0]]``."""

from .farey import (
    INF,
    Edge,
    FareyRay,
    FareyTriangle,
    Ray,
    Triangle,
    Vertex,
    are_farey_neighbors,
    farey_neighbor_family,
    is_farey_triangle,
    locate_upper,
    standard_form,
    standardize,
)
from .fan import (
    BasisElement,
    Cone,
    RescaleMap,
    basis_expand,
    enumerate_universal_coeffs,
    fan_census,
    fan_sanity,
    g_vectors,
    intersect_is_common_face,
    locate_in_fan,
    phi,
    phi_inverse,
    ray_image_generators,
    rescale_cones,
)
from .mutation import (
    B,
    CoherenceResult,
    eta21,
    eta21_closed_form,
    is_b_coherent,
    mutate_matrix,
    mutation_map,
    sector_generators,
    sector_membership,
)
from .render import ProjectionConfig, render_fan_svg
from .surface import (
    T0,
    Curve,
    FalsifyResult,
    ProjectedLine,
    Triangulation,
    arcs_compatible,
    ccw,
    cl,
    curve_from_shear,
    curves_compatible,
    cw,
    falsify_null_tangle,
    find_separating_triangulation,
    flip,
    line,
    line_shear_positive,
    normalized_direction,
    shear_T0,
    shear_word_oracle,
    shear_wrt,
    signed_adjacency,
    tangle_shear,
    triangulation_from_arcs,
)

__version__ = "0.1.0"
