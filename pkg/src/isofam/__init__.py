"""Desk-scale exhaustive verification of a distinguished family of isotropic
subspaces over F2, its bijective vector labelling, the characteristic-function
Z-basis, and the unitriangular multiplicity tables of exceptional Weyl-group
families."""

from .f2core import Interval, QuotientModel, Vec, basis_vector, interval_vector, pairing
from .family import Subspace, enumerate_family, extend_to_lagrangian, is_in_family
from .phimap import phi_inverse, phi_vector, profile, reachable_set, tilde_v
from .symgrp import cx_multiplicities, kostka, unique_bijection
from .zbasis import BasisCertificate, basis_matrix, decompose, recompose
from .excdata import FamilyTable, cross_check_cx, family_table, verify_table

__all__ = [
    "Interval",
    "QuotientModel",
    "Vec",
    "basis_vector",
    "interval_vector",
    "pairing",
    "Subspace",
    "enumerate_family",
    "extend_to_lagrangian",
    "is_in_family",
    "phi_inverse",
    "phi_vector",
    "profile",
    "reachable_set",
    "tilde_v",
    "cx_multiplicities",
    "kostka",
    "unique_bijection",
    "BasisCertificate",
    "basis_matrix",
    "decompose",
    "recompose",
    "FamilyTable",
    "cross_check_cx",
    "family_table",
    "verify_table",
]

__version__ = "0.1.0"
