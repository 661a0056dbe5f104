"""Zero-error codes, decoding and capacity for the discrete-time particle channel."""

from .capacity import CapacityResult, capacity, capacity_closed_form, capacity_curve, dominant_root
from .channel import enumerate_outputs, push_forward, reachable, reachable_membrane, simulate, transmit
from .codes import (
    ConstructionMethod,
    build_greedy,
    build_recursive,
    cardinality,
    normalize,
    rank,
    unrank,
)
from .decode import DecodeError, decode, decode_stream
from .model import BudgetExceeded, ChannelParams, Codebook, concat, is_zero_padded, weight
from .verify import (
    confusable,
    confusable_membrane,
    is_zero_error_padded,
    is_zero_error_sequences,
    max_zero_error_padded,
    membrane_equivalent,
)

__all__ = [
    "BudgetExceeded",
    "CapacityResult",
    "ChannelParams",
    "Codebook",
    "ConstructionMethod",
    "DecodeError",
    "build_greedy",
    "build_recursive",
    "capacity",
    "capacity_closed_form",
    "capacity_curve",
    "cardinality",
    "concat",
    "confusable",
    "confusable_membrane",
    "decode",
    "decode_stream",
    "dominant_root",
    "enumerate_outputs",
    "is_zero_error_padded",
    "is_zero_error_sequences",
    "is_zero_padded",
    "max_zero_error_padded",
    "membrane_equivalent",
    "normalize",
    "push_forward",
    "rank",
    "reachable",
    "reachable_membrane",
    "simulate",
    "transmit",
    "unrank",
    "weight",
]
