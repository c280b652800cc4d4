"""Optimal lattice-periodic h-hop colorings of infinite grid networks."""
from .coloring import Method, color_ncc1, color_ncc2, color_window, build_palette, decompose_ncc2, num_colors
from .geometry import GeneratorBasis, IntVec2, gauss_reduce, is_reduced
from .hops import RadioParams, build_hop_field
from .search import brute_force_optimal, find_optimal
from .validity import check_validity, check_vc1, check_vc2

__all__ = [
    "GeneratorBasis", "IntVec2", "Method", "RadioParams",
    "brute_force_optimal", "build_hop_field", "build_palette", "check_validity", "check_vc1", "check_vc2",
    "color_ncc1", "color_ncc2", "color_window", "decompose_ncc2", "find_optimal", "gauss_reduce",
    "is_reduced", "num_colors",
]
