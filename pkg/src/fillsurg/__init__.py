"""Certificates and calculators for fillable positive contact surgery on knots."""

from fillsurg.braid import BraidWord, Permutation, closure_components, free_reduce, parse_braid, permutation
from fillsurg.catalog import KnotRecord, Reason, load_catalog, obstruct, verify_table
from fillsurg.certificates import (
    Certificate,
    CertificateReport,
    Factor,
    band,
    full_twist,
    load_certificate,
    node,
    parse_certificate,
    pretzel_certificate,
    twist_knot_certificate,
    validate,
)
from fillsurg.constructions import ConstructionVerdict, cable_rule, lens_rule, positive_braid_rule, satellite_rule
from fillsurg.disk import DiskClass, consistent_classes, gap_set, mu_bounds
from fillsurg.invariants import LaurentPoly, alexander, burau_reduced
from fillsurg.kernels import BACKEND
from fillsurg.torus import TorusReport, blowup_schedule, m_torus, mu_torus

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "BraidWord",
    "Certificate",
    "CertificateReport",
    "ConstructionVerdict",
    "DiskClass",
    "Factor",
    "KnotRecord",
    "LaurentPoly",
    "Permutation",
    "Reason",
    "TorusReport",
    "alexander",
    "band",
    "blowup_schedule",
    "burau_reduced",
    "cable_rule",
    "closure_components",
    "consistent_classes",
    "free_reduce",
    "full_twist",
    "gap_set",
    "lens_rule",
    "load_catalog",
    "load_certificate",
    "m_torus",
    "mu_bounds",
    "mu_torus",
    "node",
    "obstruct",
    "parse_braid",
    "parse_certificate",
    "permutation",
    "positive_braid_rule",
    "pretzel_certificate",
    "satellite_rule",
    "twist_knot_certificate",
    "validate",
    "verify_table",
]
