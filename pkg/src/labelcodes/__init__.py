"""Error-correcting codes for DNA labeling sequences.

A labeling sequence records, per position, which short label starts there.
This package implements the labeling channel model, systematic encoders
and decoders for single indel and single substitution errors on labeling
sequences, the classical codes they build on (VT, Tenengolts, zero-indel,
GF(11) Hamming), exact size bounds, and brute-force verification oracles.
"""
from .kernels import BACKEND
from .labeling import (
    Alphabet,
    AmbiguousLabeling,
    CapacityCount,
    DNA,
    EnumerationBudgetExceeded,
    FlankConvention,
    DEFAULT_FLANKS,
    InvalidLabeling,
    LabelSet,
    ZeroGraph,
    all_labels_set,
    check_path_unique,
    empirical_capacity,
    invert_labeling,
    label_framed,
    label_word,
    make_label_set,
    minimal_dna_set,
    phi,
    zero_graph,
)
from .classical import (
    DigitString,
    HammingParams,
    MultipleCandidates,
    NoCodeword,
    TenengoltsParams,
    UncorrectableSyndrome,
    VtParams,
    ZeroIndelParams,
    ZeroIndelUnion,
    base_convert,
    derivative,
    from_digits,
    hamming_decode,
    hamming_encode,
    hamming_params,
    hamming_redundancy,
    integrate,
    signature,
    tenengolts_class_of,
    tenengolts_decode,
    tenengolts_decode_enum,
    tenengolts_member,
    to_digits,
    vt_codewords,
    vt_decode_indel,
    vt_member,
    vt_syndrome,
    zero_indel_codewords,
    zero_indel_decode,
    zero_indel_member,
    zero_indel_union,
)
from .constructions import (
    AllLabelsCode,
    AmbiguousDecoding,
    E1Layout,
    E2Layout,
    HammingCosetSearchResult,
    NotDecodable,
    TenengoltsSearchResult,
    build_all_labels_deletion_code,
    coset_decode,
    decode_all_labels_deletion,
    decode_all_labels_deletion_enum,
    e1_decode,
    e1_decode_enum,
    e1_encode,
    e2_decode,
    e2_decode_enum,
    e2_encode,
    lift_code,
    search_hamming_coset,
    search_tenengolts_labeling_code,
)
from .bounds import (
    BoundRow,
    binary_upper_closed_form,
    brute_force_transversal_sum,
    count_zero_run_sequences,
    fractional_transversal_check,
    lower_bound_size,
    redundancy_gap_table,
    upper_bound_labeling,
    upper_bound_zero_deletion,
    zero_deletion_ball,
    zero_runs,
)
from .oracle import (
    ErrorSpec,
    VerificationReport,
    error_ball,
    exhaustive_decoder_check,
    is_labeling_code,
    simulate_channel,
)

__version__ = "0.1.0"
