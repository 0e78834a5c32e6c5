"""Saturating sets of PG(n, q) over subfield towers, with exhaustive
certification and the covering-code correspondence."""

from .gftower import FieldSpec, FieldTower, build_tower, field_spec, split_prime_power
from .projgeom import Projectivity, Subspace, enumerate_points, theta
from .saturate import SaturatingSet, build_saturating_set, build_trivial_set
from .subgeom import Subgeometry, subgeometry_through_frame
from .verify import SaturationCertificate, main_bound, saturation_radius, simple_bound
from .covcode import LinearCodeSpec, covering_density, covering_radius, parity_check_matrix

__version__ = "0.1.0"

__all__ = [
    "FieldSpec",
    "FieldTower",
    "LinearCodeSpec",
    "Projectivity",
    "SaturatingSet",
    "SaturationCertificate",
    "Subgeometry",
    "Subspace",
    "build_saturating_set",
    "build_tower",
    "build_trivial_set",
    "covering_density",
    "covering_radius",
    "enumerate_points",
    "field_spec",
    "main_bound",
    "parity_check_matrix",
    "saturation_radius",
    "simple_bound",
    "split_prime_power",
    "subgeometry_through_frame",
    "theta",
]
