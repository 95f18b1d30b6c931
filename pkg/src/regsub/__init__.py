"""Exact enumeration and certification of regular subdivisions of planar point sets."""
from .associahedron import assoc_faces, catalan
from .census import enumerate_subdivisions, face_census, stratified_comparison, verify_main_theorem
from .geometry import Point2, PointConfiguration, angular_order, convex_hull, in_general_position, orientation
from .signatures import (Signature, build_well_formed, complete_extended_star, extended_star,
                         link_signature, negative_intervals, radial_convexification)
from .subdivision import HeightVector, Subdivision, face_dimension, is_regular, lift_subdivision

__version__ = "0.1.0"
