"""Exact Gröbner bases, violator spaces and Clarkson-style basis sampling."""

__version__ = "0.1.0"

from .buchberger import (GroebnerBasisResult, buchberger, format_lineage, is_groebner_basis,
                         longest_lineage, minimalize, reduce, reduced_groebner_basis)
from .gbviolator import GroebnerViolatorSpace, gb_violates, spark_basis, specialized_basis
from .pipeline import EscalationError, PipelineConfig, RunReport, run_spark, verify
from .poly import QQ, FiniteField, MonomialOrder, Polynomial, PolynomialRing, count_monomials
from .predictor import Prediction, constant_predict, oracle_predict
from .universe import oracle_universe, toric_universe, universe_size_bound
from .violator import (RoundCapExceeded, ViolatorSpace, basis2, brute_force_basis,
                       check_axioms, clarkson1)

__all__ = [
    "QQ", "FiniteField", "MonomialOrder", "Polynomial", "PolynomialRing", "count_monomials",
    "GroebnerBasisResult", "buchberger", "format_lineage", "is_groebner_basis",
    "longest_lineage", "minimalize", "reduce", "reduced_groebner_basis",
    "ViolatorSpace", "RoundCapExceeded", "basis2", "brute_force_basis", "check_axioms",
    "clarkson1", "GroebnerViolatorSpace", "gb_violates", "spark_basis", "specialized_basis",
    "oracle_universe", "toric_universe", "universe_size_bound",
    "Prediction", "constant_predict", "oracle_predict",
    "EscalationError", "PipelineConfig", "RunReport", "run_spark", "verify",
]
