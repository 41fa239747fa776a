"""Question-answering views of COGS-style data."""
from .disamb import (
    CORPORA,
    DEFAULT_COUNTS,
    DEFAULT_GEN_CELL,
    AgreementCell,
    AmbiguousAttachment,
    Attachment,
    AttachmentError,
    ContradictoryAttachment,
    DisambBuilder,
    DisambConfig,
    GenerationExhausted,
    all_cells,
    build_cc_cp,
    build_rc_pp,
    candidate_trees,
    cell_of,
    parse_cell,
    resolve_attachment,
    token_features,
    tree_reading,
)
from .frames import FrameError, PredicateFrame, VerbForms, build_qa_base, extract_frames, frame_questions, generate_qa_base
from .instances import PRIM_QUESTION, QAInstance, load_qa_tsv, normalize_determiner, span_text, write_qa_tsv

__all__ = [name for name in dir() if not name.startswith("_")]
