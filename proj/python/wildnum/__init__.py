"""Exact iterated maps on rationals and integers.

The van Lamoen digit-sum map, the Collatz map, OEIS b-file I/O and a
bounded search over the digit-sum rule family, backed by a C++ core.
"""

from ._wildnum import (
    Rational,
    SequenceRecord,
    StepError,
    Trajectory,
    __version__,
    collatz_step,
    digit_sum,
    family_step,
    fictional_wild,
    generate,
    make_rational,
    paper48,
    read_bfile,
    search,
    trajectory,
    van_lamoen_step,
    verify,
    write_bfile,
)

__all__ = [
    "Rational",
    "SequenceRecord",
    "StepError",
    "Trajectory",
    "__version__",
    "collatz_step",
    "digit_sum",
    "family_step",
    "fictional_wild",
    "generate",
    "make_rational",
    "paper48",
    "read_bfile",
    "search",
    "trajectory",
    "van_lamoen_step",
    "verify",
    "write_bfile",
]
