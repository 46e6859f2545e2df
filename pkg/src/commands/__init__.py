"""__init__ importing all commands"""

from . import (
    filter_seq,
    hilbert_at,
    ideal_mm,
    maximal_lengths,
    mixed_table,
    positivity,
    superficial,
    theorem45,
    verify,
)
