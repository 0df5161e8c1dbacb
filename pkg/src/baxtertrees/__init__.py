"""Exact arithmetic in the four free operator algebras on decorated
trees, with their path combinatorics, word images, and splittings.

The top level re-exports the working vocabulary; the submodules carry
the full interfaces (`trees`, `scalars`, `baxter_core`, `paths`,
`counting`, `monomial`, `dendriform`, `verify`, `cli`).
"""

from .baxter_core import (
    LinComb, beta, beta_lc, circle, circle_lc, decompose, degraft, generator,
    graft, morphism, morphism_lc, recompose, star, star_lc,
    tree_lincomb_parser,
)
from .counting import (
    BiSeries, dim_formula, monomial_dims, monomial_series, sequence,
    series_coeffs,
)
from .dendriform import (
    dend_op, dt_dim, embed_dialgebra, embed_trialgebra, rb_dendriform,
)
from .errors import DomainError, ParseError
from .monomial import Word, parse_word, pi_map, pi_word, tilde_equiv
from .paths import (
    classify_path, decode_positive, decode_zero, encode_positive, encode_zero,
    from_colored_motzkin, parse_path, path_to_tree, render_path,
    restore_angles, rotate_from_motzkin, rotate_to_motzkin, strip_angles,
    to_colored_motzkin, to_plus_class, to_zero_class, tree_to_path,
)
from .scalars import LAMBDA, LambdaPoly, parse_poly
from .trees import (
    FAMILIES, INF, LEAF, Family, Node, PTree, bidegree, binary_trees,
    count_trees, enumerate_trees, is_valid, parse_family, parse_planar,
    parse_tree, planar_trees, render_planar, render_tree, validate,
)
from .verify import run_suite, run_suites

__all__ = [
    "LinComb", "beta", "beta_lc", "circle", "circle_lc", "decompose",
    "degraft", "generator", "graft", "morphism", "morphism_lc", "recompose",
    "star", "star_lc", "tree_lincomb_parser",
    "BiSeries", "dim_formula", "monomial_dims", "monomial_series", "sequence",
    "series_coeffs",
    "dend_op", "dt_dim", "embed_dialgebra", "embed_trialgebra",
    "rb_dendriform",
    "DomainError", "ParseError",
    "Word", "parse_word", "pi_map", "pi_word", "tilde_equiv",
    "classify_path", "decode_positive", "decode_zero", "encode_positive",
    "encode_zero", "from_colored_motzkin", "parse_path", "path_to_tree",
    "render_path", "restore_angles", "rotate_from_motzkin",
    "rotate_to_motzkin", "strip_angles", "to_colored_motzkin",
    "to_plus_class", "to_zero_class", "tree_to_path",
    "LAMBDA", "LambdaPoly", "parse_poly",
    "FAMILIES", "INF", "LEAF", "Family", "Node", "PTree", "bidegree",
    "binary_trees", "count_trees", "enumerate_trees", "is_valid",
    "parse_family", "parse_planar", "parse_tree", "planar_trees",
    "render_planar", "render_tree", "validate",
    "run_suite", "run_suites",
]
