"""Exact r-Bell, r-Stirling and derangement numbers with a verification harness
for their congruences and the periods of Bell numbers modulo primes."""

__version__ = "0.1.0"

from .exact_core import bell, binomial, derangement, enumerate_oracle, rbell, rstirling, StirlingKind, OracleKind
from .modular import PrimeModulus, mod_inverse, residue_seq, minimal_recurrence
from .congruences import CheckKind, Mutation, evaluate, run_check, counterexample_probe
from .periods import compute_np, is_period, minimal_period, digit_sum_falsifier

__all__ = [
    "__version__",
    "bell",
    "binomial",
    "derangement",
    "enumerate_oracle",
    "rbell",
    "rstirling",
    "StirlingKind",
    "OracleKind",
    "PrimeModulus",
    "mod_inverse",
    "residue_seq",
    "minimal_recurrence",
    "CheckKind",
    "Mutation",
    "evaluate",
    "run_check",
    "counterexample_probe",
    "compute_np",
    "is_period",
    "minimal_period",
    "digit_sum_falsifier",
]
