"""Invariants of the extended dihedral group D_2d x C_2d on k[x0, x1, x2],
the Togliatti systems they generate and the associated GT-surfaces."""

from .betti import betti_table, kpolynomial_check
from .group import GroupElement, GroupParams, ParameterError, elements
from .hilbert import hf_closed, hilbert_series, surface_invariants
from .invariants import fundamental_invariants, graded_basis, y_basis
from .syzygy import kernel_quadrics, surface_generators, verify_relation, w_index_set
from .wlp import wlp_failure_check, witness_verify

__version__ = "0.1.0"
