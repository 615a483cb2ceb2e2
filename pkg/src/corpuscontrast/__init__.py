"""Contrastive corpus analysis toolkit.

Builds query-filtered corpora from document streams, scores word
associations between corpora, profiles corpora with emotion/VAD/age
lexicons, infers author gender from name tables, and tests differences
with chi-squared statistics.
"""

from .association import (
    AssocConfig,
    AssociationTable,
    association_score,
    build_association_table,
    contrast_table,
    strong_words,
    top_frequent_strong,
)
from .corpus import (
    Corpus,
    Document,
    DuplicateDocumentError,
    build_corpus,
    merge_corpora,
    tokenize,
)
from .ingest import (
    PipelineConfig,
    PipelineStats,
    SampleShortfallWarning,
    cap_per_user,
    filter_documents,
    matches_query,
    passes_filters,
    run_pipeline,
    sample_for_annotation,
)
from .lexicons import (
    AGE_GROUPS,
    EMOTION_LABELS,
    AgeLexicon,
    EmotionLexicon,
    LexiconFormatError,
    NameGenderTable,
    VadLexicon,
    VadScores,
    build_name_gender_table,
    load_age_lexicon,
    load_emotion_lexicon,
    load_vad_lexicon,
)
from .profiles import (
    AgeProfile,
    EmotionProfile,
    Gender,
    TrendBin,
    TrendCurve,
    VadExtremesProfile,
    age_profile,
    emotion_profile,
    infer_gender,
    profile_diff,
    split_by_gender,
    vad_extremes,
    vad_trend,
)
from .stats import Chi2Result, chi2_2x2, proportion_test

__version__ = "0.1.0"
