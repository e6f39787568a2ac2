"""Exact rational toolkit for combinatorial-auction equilibria.

Everything crosses the boundary as text: instances and reports are the same
JSON documents the command-line tool reads and writes, with rationals as
strings like "3/2". Parse the results with the standard json module.
"""

from ._core import (
    IoError,
    brute,
    canonical,
    configlp,
    demand,
    digest,
    reduce,
    solve,
    validate,
    verify,
    version,
)

__all__ = [
    "IoError",
    "brute",
    "canonical",
    "configlp",
    "demand",
    "digest",
    "reduce",
    "solve",
    "validate",
    "verify",
    "version",
]

__version__ = version().split()[-1]
