"""Exact conjugacy class growth in affine Coxeter groups and other virtually abelian groups."""

from .coxeter import AffineCoxeterGroup, GroupElement, build_affine_group
from .growth import (
    Ball,
    ClassDescriptor,
    GrowthSeries,
    ball_enumerate,
    brute_force_class,
    class_contains,
    class_growth_series,
    conjugacy_descriptor,
    estimate_degree,
    exact_degree,
    zr_ball_count,
)
from .linalg import IntLattice, adapted_basis, hermite_normal_form, lattice_contains, matrix_rank
from .movement import dimension_profile, reflection_length, reflection_length_oracle
from .roots import RootSystem, build_root_system
from .vab import VabGroup, build_free_abelian, build_klein_bottle, build_sign_flip_group

__version__ = "0.1.0"
