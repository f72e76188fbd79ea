"""Regression corpus: the published examples, the group web and the polynomial family."""

from .entries import (
    EXAMPLE_IDS,
    CorpusEntry,
    ExpectedTensor,
    PolynomialWebParams,
    TensorPath,
    UnknownExample,
    all_examples,
    evaluate_expected,
    expand,
    instantiate_polynomial,
    load_example,
    parse_path,
    polynomial_texts,
    relative_deviation,
    run_regression,
)
from .errata import ERRATA, UNVERIFIED
from .export import export_corpus, web_text

__all__ = [
    "ERRATA",
    "EXAMPLE_IDS",
    "UNVERIFIED",
    "CorpusEntry",
    "ExpectedTensor",
    "PolynomialWebParams",
    "TensorPath",
    "UnknownExample",
    "all_examples",
    "evaluate_expected",
    "expand",
    "export_corpus",
    "instantiate_polynomial",
    "load_example",
    "parse_path",
    "polynomial_texts",
    "relative_deviation",
    "run_regression",
    "web_text",
]
