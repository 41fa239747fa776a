"""Feature grammars: loading, sampling, parsing and tree utilities."""
from .chart import ParseError, UnknownTokenError, parse, parse_unique, words_of
from .features import FeatureBundle, FeatureSpec
from .loader import load_grammar, load_grammar_file, parse_lexicon, shipped_grammar, shipped_path
from .model import FeatureGrammar, GrammarError, LexEntry, Lexicon, Rule, Symbol
from .sampler import Sampler, SamplingError, get_sampler, sample_derivation
from .trees import (
    Derivation,
    Tree,
    TreeSyntaxError,
    coarsen,
    constituent_spans,
    delinearize,
    label_depth,
    linearize,
    pos_sequence,
    sentence_of,
    to_tree,
)
from .validate import check_derivation, is_valid

__all__ = [
    "Derivation", "FeatureBundle", "FeatureGrammar", "FeatureSpec", "GrammarError", "LexEntry",
    "Lexicon", "ParseError", "Rule", "Sampler", "SamplingError", "Symbol", "Tree", "TreeSyntaxError",
    "UnknownTokenError", "check_derivation", "coarsen", "constituent_spans", "delinearize",
    "get_sampler", "is_valid", "label_depth", "linearize", "load_grammar", "load_grammar_file",
    "parse", "parse_lexicon", "parse_unique", "pos_sequence", "sample_derivation", "sentence_of",
    "shipped_grammar", "shipped_path", "to_tree", "words_of",
]
