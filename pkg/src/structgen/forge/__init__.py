"""Dataset bundles and their derived variants."""
from .bundle import (
    COGS_LEX,
    COGS_STRUCT,
    COGS_TYPES,
    DISAMB,
    GEN_TYPES,
    IN_DISTRIBUTION,
    SPLITS,
    DatasetBundle,
    GenClass,
    GenType,
    Instance,
    TSVFormatError,
    cogs_split_paths,
    gen_type,
    load_cogs_tsv,
    write_cogs_tsv,
)
from .derive import (
    DERIVATIONS,
    DerivationError,
    derive_pos,
    derive_srl,
    derive_syntax,
    derive_syntax_enriched_input,
    unique_parse,
)
from .probe import make_probe_split
from .synth import CorpusSynthesizer, SynthConfig, SynthResult, argument_slots, synthesize

__all__ = [name for name in dir() if not name.startswith("_")]
