"""Exact computations for category O of the Witt algebra of vector fields on the line."""

__version__ = "0.1.0"

from .kernel import L, SQRT19, Scalar, format_scalar, parse_scalar
from .uea import casimir, d, parse_uea
from .gmod import check_module_axioms, find_iso, restricted_dual
from .standard import ext_family, feigin_fuchs, simple_module, verma
from .ext import ExtProblem, ModuleSpec, borel_h1_dim, ext_dim
from .quiver import build_block_quiver, classify_underlying_graph, wild_witness
from .whittaker import gamma, h1_member
from .tensor import BModule, DModule, build_tensor_module, simplicity_probe

__all__ = ["L", "SQRT19", "Scalar", "format_scalar", "parse_scalar", "casimir", "d", "parse_uea",
           "check_module_axioms", "find_iso", "restricted_dual", "ext_family", "feigin_fuchs",
           "simple_module", "verma", "ExtProblem", "ModuleSpec", "borel_h1_dim", "ext_dim",
           "build_block_quiver", "classify_underlying_graph", "wild_witness", "gamma",
           "h1_member", "BModule", "DModule", "build_tensor_module", "simplicity_probe"]
