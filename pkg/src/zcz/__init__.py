"""Zero-correlation-zone and low-correlation sequence sets built by
interleaving perfect sequences with complete orthogonal sets."""

from .seqcore import (
    DeltaClaim,
    Sequence,
    SequenceSet,
    ShiftSequence,
    ZczClaim,
    left_shift,
    sets_shift_equivalent,
    shift_equivalent,
    shift_set,
)
from .correlate import (
    CorrelationProfile,
    ZczReport,
    autocorrelation,
    cross_correlation,
    energy,
    is_complete_orthogonal,
    is_perfect,
    max_correlation,
    measure_zcz,
    verify,
    zcz_bound,
)
from .interleave import associate, interleave, prop1_correlation
from .generators import (
    builtin_perfect,
    chu_perfect,
    fourier_set,
    hadamard12_paper,
    orthogonal_set,
    paley,
    paley2,
    sylvester,
)
from .construct import (
    HypothesisError,
    TheoremClaim,
    search_shift_sequence,
    theorem1_build,
    theorem2_build,
    theorem3_build,
    theorem4_build,
    theorem5_build,
)

__version__ = "0.1.0"
