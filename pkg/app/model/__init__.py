"""k-SSNP database model: schema, genotype matrix, virtual text, validation, ingestion."""
from app.model.alignment import infer_from_alignment, read_alignment
from app.model.generator import GeneratorParams, generate
from app.model.matrix import GenotypeMatrix, format_matrix, parse_matrix
from app.model.schema import Alpha, SsnpSchema, format_schema, parse_schema
from app.model.text import VirtualText, expand, pos_of, row_col_of, text_char
from app.model.validate import (
    ValidationReport,
    Violation,
    language_check_exhaustive,
    validate,
)

__all__ = [
    "Alpha",
    "GeneratorParams",
    "GenotypeMatrix",
    "SsnpSchema",
    "ValidationReport",
    "VirtualText",
    "Violation",
    "expand",
    "format_matrix",
    "format_schema",
    "generate",
    "infer_from_alignment",
    "language_check_exhaustive",
    "parse_matrix",
    "parse_schema",
    "pos_of",
    "read_alignment",
    "row_col_of",
    "text_char",
    "validate",
]
