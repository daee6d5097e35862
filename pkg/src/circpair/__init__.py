"""Circular Ferrero pairs over prime fields: circles, disks and block designs."""

from .designs import BibdParams, Design, circle_design, disk_design, disk_design_params, theorem_2_20_params, verify_bibd
from .disks import Disk, disk, disk_bruteforce, disk_fast, disk_orbit_decomposition, interior, tangent_radius_set
from .errors import AxiomError, DomainError, PreconditionError
from .ferrero import Orbit, PhiGroup, build_phi
from .field import FieldElement, PrimeField, is_prime
from .geometry import Circle, CircleFamily, all_circles, circle, circularity_bound, family, is_circular
from .nearring import ProjectionNearring, build_double_planar, build_projection_nearring, clay_interior, is_double_planar

__all__ = [
    "AxiomError",
    "BibdParams",
    "Circle",
    "CircleFamily",
    "Design",
    "Disk",
    "DomainError",
    "FieldElement",
    "Orbit",
    "PhiGroup",
    "PreconditionError",
    "PrimeField",
    "ProjectionNearring",
    "all_circles",
    "build_double_planar",
    "build_phi",
    "build_projection_nearring",
    "circle",
    "circle_design",
    "circularity_bound",
    "clay_interior",
    "disk",
    "disk_bruteforce",
    "disk_design",
    "disk_design_params",
    "disk_fast",
    "disk_orbit_decomposition",
    "family",
    "interior",
    "is_circular",
    "is_double_planar",
    "is_prime",
    "tangent_radius_set",
    "theorem_2_20_params",
    "verify_bibd",
]
