"""Stabilizer codes on finite groups with 2q qubits per site.

Thin python surface over the C++ core: group construction, spec parsing and
presets, stabilizer verification, degeneracy, word-metric queries, and the
dense ground-space oracle.
"""

from xxz._core import (
    AnalysisError,
    CodeSpec,
    Group,
    ParseError,
    QuditCodeSpec,
    ValidationError,
    ball,
    degeneracy,
    direct_product,
    from_cayley_table,
    ground_space_dim,
    load_spec,
    locality,
    make_cyclic,
    make_torus,
    parse_spec_text,
    serialize_spec,
    to_qudit_spec,
    verify,
    word_metric,
    __version__,
)

__all__ = [
    "AnalysisError",
    "CodeSpec",
    "Group",
    "ParseError",
    "QuditCodeSpec",
    "ValidationError",
    "ball",
    "degeneracy",
    "direct_product",
    "from_cayley_table",
    "ground_space_dim",
    "load_spec",
    "locality",
    "make_cyclic",
    "make_torus",
    "parse_spec_text",
    "serialize_spec",
    "to_qudit_spec",
    "verify",
    "word_metric",
    "__version__",
]
