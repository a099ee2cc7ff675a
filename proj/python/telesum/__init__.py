"""Telescoped lattice-pair summation and series verification.

Thin re-export of the compiled core: enumeration of unimodular and det-n
lattice-vector pairs, the telescoping series evaluators with their exact
finite identities, the supporting number theory, and the JSON report runner.
"""

from ._core import (
    d111,
    detn_pairs,
    dirichlet_sigma,
    eisenstein,
    mt_scalar,
    report_json,
    scalar_kernels_exact,
    sigma1,
    sublattice_count,
    theorem1,
    theorem2,
    theorem3,
    theorem4,
    tree_cut,
    tropical_sums,
    unimodular_oracle,
    verify,
    zagier_chain,
    zeta,
)

__version__ = "0.1.0"

__all__ = [
    "d111",
    "detn_pairs",
    "dirichlet_sigma",
    "eisenstein",
    "mt_scalar",
    "report_json",
    "scalar_kernels_exact",
    "sigma1",
    "sublattice_count",
    "theorem1",
    "theorem2",
    "theorem3",
    "theorem4",
    "tree_cut",
    "tropical_sums",
    "unimodular_oracle",
    "verify",
    "zagier_chain",
    "zeta",
]
