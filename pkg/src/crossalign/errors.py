"""Exception taxonomy shared across the package.

The CLI maps these onto exit codes: validation problems exit 1, numeric
failures (NaN loss) exit 2, I/O errors exit 3.
"""


class CrossalignError(Exception):
    """Base class for package errors."""


class ValidationError(CrossalignError):
    """Rejected input: bad audio, manifest, config, spans, shapes."""


class ShapeError(ValidationError):
    """Tensor dimensions inconsistent with the operation's contract."""


class StateError(CrossalignError):
    """API misuse, e.g. backward requested before any forward pass."""


class NumericError(CrossalignError):
    """Non-finite value where a finite one is required (NaN/Inf loss)."""
