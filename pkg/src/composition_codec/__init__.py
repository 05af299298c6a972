"""Codes for binary strings read back as substring-composition multisets.

The readout model is an idealized polymer mass spectrometer: of every
substring only the pair (number of zeros, number of ones) survives, and
the whole string is observed as the multiset of those compositions.  This
package provides

* ``compositions`` -- the multiset type, fragmentation, weight recovery,
  and a canonical text/JSON serialization;
* ``ballot`` -- the ballot-constrained pair-symbol sequences both
  codebooks are built from, with exact counting and rank/unrank;
* ``codebook`` -- a codebook whose members are uniquely determined by
  their composition multiset, at redundancy about half a log;
* ``reconstructor`` -- the deterministic codeword decoder and the
  exhaustive backtracking oracle;
* ``ecc`` -- the variant that also corrects one composition error, three
  redundant bits dearer;
* ``channel`` -- injection, enumeration, and seeded sampling of single
  composition errors;
* ``experiments`` and ``cli`` -- sweep harnesses and the
  ``composition-codec`` command-line tool.
"""

from . import ballot, channel, codebook, ecc, experiments, reconstructor
from .compositions import (
    Composition,
    CompositionMultiset,
    WeightProfile,
    bits_of,
    cumulative_weights,
    fragment,
    multiset_difference_size,
    multiset_subtract,
    parse,
    parse_json,
    serialize,
    serialize_json,
    sigma_direct,
    sigma_from_weights,
    weight_profile,
)
from .errors import CodecError

__version__ = "0.1.0"

__all__ = [
    "Composition",
    "CompositionMultiset",
    "WeightProfile",
    "CodecError",
    "ballot",
    "bits_of",
    "channel",
    "codebook",
    "cumulative_weights",
    "ecc",
    "experiments",
    "fragment",
    "multiset_difference_size",
    "multiset_subtract",
    "parse",
    "parse_json",
    "reconstructor",
    "serialize",
    "serialize_json",
    "sigma_direct",
    "sigma_from_weights",
    "weight_profile",
]
