"""Automorphism groups, motion and distinguishing 2-colorings of rooted graphs."""

from .autgroup import (
    GroupSummary,
    Permutation,
    cycle_norm_of,
    enumerate_automorphisms,
    find_color_preserving_automorphism,
    motion_of,
    restrict_to_ball,
    stabilizer,
)
from .breaking import (
    BreakReport,
    Coloring,
    break_ball_actors,
    fixroot_pattern,
    full_pipeline,
    greedy_half_break,
    sequential_pair_break,
    verify_root_signature,
)
from .distnum import distinguishing_number, is_distinguishing
from .generators import GraphFamily, StretchedTreePlan, growth_profile, plan_stretched_tree, truncate
from .graph import (
    RootedGraph,
    SphereComponents,
    SphereDecomposition,
    ball_bound_radii,
    bfs_decompose,
    component_tree,
    sphere_bound_radii,
    sphere_components,
)
from .kernels import BACKEND
from .motion import check_motion_bound, expected_survivors, find_distinguishing_coloring

__version__ = "0.1.0"
