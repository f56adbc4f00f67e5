"""Arnold normal forms of corank <= 2, modality <= 2 hypersurface singularities."""

import json

from ._arnoldnf import ParseError, catalog_types, classify_json, classify_text, harness_json, milnor, normal_form

__all__ = ["ParseError", "catalog_types", "classify", "classify_text", "harness", "milnor", "normal_form"]


def classify(poly, vars=("x", "y"), truncation=None, trace=False, digits=10):
    """Classify a germ given as a polynomial string; returns the JSON record as a dict."""
    return json.loads(classify_json(poly, list(vars), truncation, trace, digits))


def harness(seed=1, count=1, types=()):
    return json.loads(harness_json(seed, count, list(types)))
