"""Unique shortest normal forms in free inverse monoids.

A confluent rewriting system over the symmetrised alphabet Y = X ∪ X⁻¹
whose irreducible words are unique minimum-length representatives for
the word problem, together with classifiers for the recursive taxonomy
of formal idempotents, an independent Munn-tree equality oracle, a
bounded verifier that machine-checks confluence of the rule schemas, and
a command line front end (``fisnorm``).

All values are immutable and every operation is a pure function, so the
API can be used from concurrent tasks without locking.
"""

from .words import (
    Alphabet,
    Letter,
    OrderSpec,
    Word,
    WordSyntaxError,
    deg_lex_cmp,
    format_word,
    free_reduce,
    invert,
    parse_word,
    standard_alphabet,
)
from .idempotents import (
    Classification,
    IdempotentTree,
    NotAnIdempotentError,
    PrimeFactor,
    canonicalize_idempotent,
    classify,
    fir,
    first_return,
    is_canonical,
    is_idempotent,
    is_ordered_canonical,
    is_prime_canonical,
    parse_idempotent,
    walk_returns,
)
from .rewrite import (
    NormalizationTrace,
    RewriteStep,
    RuleInstance,
    apply_step,
    commutation_rule,
    contraction_rule,
    equal,
    find_redexes,
    is_irreducible,
    normal_form,
    normal_form_traced,
    reduce_once,
    validate_irr_structure,
)
from .munn import (
    MunnTree,
    class_representatives,
    munn_equal,
    munn_key,
    munn_minimal_length,
    munn_tree,
)
from .gsb import (
    Composition,
    Relation,
    TrivialityReport,
    VerificationReport,
    check_triviality,
    enumerate_rule_instances,
    find_compositions,
    verify_bounded,
)

__version__ = "0.1.0"
