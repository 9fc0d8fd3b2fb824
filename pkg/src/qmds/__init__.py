"""Quantum MDS codes from Hermitian self-orthogonal twisted GRS codes over GF(q^2)."""

from .construction import build, generator_matrix, hermitian_product, euclidean_product
from .failure import first_failure_point_bruteforce, first_failure_point_closed_form, is_failure_point
from .field import FieldContext, field_for_q, make_field
from .parameters import ConstructionParams, ParameterError, QuantumCodeParams, enumerate_params, validate
from .verification import Certificate, CertificationError, full_certificate

__all__ = [
    "Certificate",
    "CertificationError",
    "ConstructionParams",
    "FieldContext",
    "ParameterError",
    "QuantumCodeParams",
    "build",
    "enumerate_params",
    "euclidean_product",
    "field_for_q",
    "first_failure_point_bruteforce",
    "first_failure_point_closed_form",
    "full_certificate",
    "generator_matrix",
    "hermitian_product",
    "is_failure_point",
    "make_field",
    "validate",
]

__version__ = "0.1.0"
