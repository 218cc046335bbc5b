"""Exact packing tables, certified enclosures, and bound verification for q_ell.

The package computes, with exact integer and rational arithmetic:

* pattern occurrence counts ``c_q(p)`` and their closed forms inside layered
  permutations (:mod:`packdense.patterns`);
* the tables ``M_n`` / ``k_n`` for the patterns ``q_ell = 1(ell+1)ell...2``
  via the last-layer recurrence, with derived quantities ``c_{n,i}``,
  ``n_k`` and ``n'_k`` (:mod:`packdense.packing`);
* certified rational enclosures of the constants ``alpha`` and ``beta``
  (:mod:`packdense.analytic`);
* a registry of machine checks for the structural theorems, bounds and
  conjectures about these tables (:mod:`packdense.verifier`);
* independent brute-force oracles (:mod:`packdense.oracle`).
"""

from .analytic import (
    AffineBound,
    BoundExpr,
    Enclosures,
    RationalInterval,
    alpha_enclosure,
    beta_enclosure,
    check_beta_identity,
    check_beta_max_expression,
    decide,
    eval_bound,
    f_ell_at,
)
from .oracle import (
    OracleResult,
    brute_force_layered,
    brute_force_Mnq,
    density_monotonicity_probe,
    density_sequence,
)
from .packing import (
    CorruptTableError,
    CSeq,
    OverflowGuardError,
    PackingTable,
    TableError,
    TableInvariantError,
    TableVersionError,
    build_table,
    c_sequence,
    extend_table,
    first_n_with_k,
    last_n_with_k,
    load_table,
    max_safe_nmax,
    optimal_layer_profile,
    save_table,
    truncate_table,
    validate_table,
)
from .patterns import (
    ArithmeticOverflowError,
    LayerProfile,
    Permutation,
    count_layered_in_layered,
    count_occurrences,
    count_occurrences_naive,
    count_qell_in_layered,
    decompose_layers,
    identity,
    qell_pattern,
    same_type,
)
from .report import CheckReport, Verdict
from .verifier import (
    CHECK_IDS,
    CONJECTURE_CHECKS,
    bimodal_shape,
    counterexample_probe,
    exit_code,
    run_checks,
)

__version__ = "0.1.0"

__all__ = [
    "AffineBound",
    "ArithmeticOverflowError",
    "BoundExpr",
    "CHECK_IDS",
    "CONJECTURE_CHECKS",
    "CSeq",
    "CheckReport",
    "CorruptTableError",
    "Enclosures",
    "LayerProfile",
    "OracleResult",
    "OverflowGuardError",
    "PackingTable",
    "Permutation",
    "RationalInterval",
    "TableError",
    "TableInvariantError",
    "TableVersionError",
    "Verdict",
    "alpha_enclosure",
    "beta_enclosure",
    "bimodal_shape",
    "brute_force_Mnq",
    "brute_force_layered",
    "build_table",
    "c_sequence",
    "check_beta_identity",
    "check_beta_max_expression",
    "count_layered_in_layered",
    "count_occurrences",
    "count_occurrences_naive",
    "count_qell_in_layered",
    "counterexample_probe",
    "decide",
    "decompose_layers",
    "density_monotonicity_probe",
    "density_sequence",
    "eval_bound",
    "exit_code",
    "extend_table",
    "f_ell_at",
    "first_n_with_k",
    "identity",
    "last_n_with_k",
    "load_table",
    "max_safe_nmax",
    "optimal_layer_profile",
    "qell_pattern",
    "run_checks",
    "same_type",
    "save_table",
    "truncate_table",
    "validate_table",
    "__version__",
]
