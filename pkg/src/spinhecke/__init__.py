"""Exact computations in Hecke-Clifford algebras and their tensor duals."""

from .scalars import ONE, Q, SQRT2, Scalar, ZERO
from .kernel import BACKEND
from .tableaux import (
    OrdinaryTableau,
    ShiftedTableau,
    StrictPartition,
    enumerate_standard_ordinary,
    enumerate_standard_shifted,
    parse_partition,
    parse_tableau,
    partitions,
    strict_partitions,
)
from .algebra import (
    HElement,
    format_element,
    jm_elements,
    kappa_shifted,
    p_elem,
    rho,
    s_elem,
    sergeev_idempotent,
    sigma_t,
    tau,
)
from .tensor import WVector, act_h, act_q, basis_words, highest_weight_space, mt_space, vt
from .verify import VerificationReport, decomposition_table, reports_json, suite

__version__ = "0.1.0"
__all__ = [
    "BACKEND",
    "HElement",
    "ONE",
    "OrdinaryTableau",
    "Q",
    "SQRT2",
    "Scalar",
    "ShiftedTableau",
    "StrictPartition",
    "VerificationReport",
    "WVector",
    "ZERO",
    "__version__",
    "act_h",
    "act_q",
    "basis_words",
    "decomposition_table",
    "enumerate_standard_ordinary",
    "enumerate_standard_shifted",
    "format_element",
    "highest_weight_space",
    "jm_elements",
    "kappa_shifted",
    "mt_space",
    "p_elem",
    "parse_partition",
    "parse_tableau",
    "partitions",
    "reports_json",
    "rho",
    "s_elem",
    "sergeev_idempotent",
    "sigma_t",
    "strict_partitions",
    "suite",
    "tau",
    "vt",
]
