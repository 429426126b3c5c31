"""Density scoring toolkit for Arabic-rhetoric literary devices.

Assessors mark device occurrences in a text; the toolkit validates the
annotations against the fixed 84-device catalogue, counts morphemes,
and reports the density score with its per-domain summary.
"""

from .annotation import (
    Annotation,
    Diagnostic,
    Document,
    DocumentError,
    EncodingError,
    FormatError,
    parse_document,
    serialize_document,
    validate_document,
)
from .concordance import (
    EmptyScores,
    InvalidConfig,
    SeparabilityReport,
    SimulationConfig,
    SimulationResult,
    analyze_ranges,
    simulate,
)
from .morphology import (
    Lexicon,
    MorphemeBreakdown,
    MorphemeCount,
    Segment,
    Token,
    count_morphemes,
    default_lexicon,
    segment_token,
    tokenize,
)
from .scoring import (
    ScoreReport,
    ValidationFailed,
    ZeroMorphemes,
    compute_density,
    effective_morphemes,
    render_summary,
    score_document,
)
from .taxonomy import (
    Device,
    DeviceCode,
    InvalidFilter,
    Taxonomy,
    UnknownDevice,
    export_taxonomy_json,
    get_device,
    list_devices,
    load_taxonomy,
)

__version__ = "0.1.0"
