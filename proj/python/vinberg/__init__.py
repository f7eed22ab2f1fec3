"""Vinberg's algorithm for Lorentzian quadratic forms."""

import json

from ._vinberg import (
    FormDocument,
    Verdict,
    VinbergError,
    catalogue,
    catalogue_document,
    run,
    run_catalogue_entry,
    triangle_arithmeticity,
)

__all__ = [
    "FormDocument",
    "Verdict",
    "VinbergError",
    "analyze",
    "catalogue",
    "catalogue_document",
    "run",
    "run_catalogue_entry",
    "triangle_arithmeticity",
]


def analyze(document, **kwargs):
    """Run on a document (a FormDocument, a path, or a dict) and return the JSON report as a dict."""
    if isinstance(document, dict):
        document = FormDocument.parse(json.dumps(document))
    elif isinstance(document, str):
        document = FormDocument.read(document)
    return json.loads(run(document, **kwargs).report("json"))
