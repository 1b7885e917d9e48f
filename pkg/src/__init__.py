"""ReesType — exact relation-type computations for Rees algebras over F_p."""

from src.main import compute_relation_type, replicate_example21, run_perturbation

__all__ = ["compute_relation_type", "replicate_example21", "run_perturbation"]
