"""Error types shared across the package.

Three failure families, so callers (and the CLI) can map them to
distinct exit codes: bad user input, mathematically invalid objects,
and requests outside the supported range of the algorithms.
"""


class InputError(ValueError):
    """Malformed or inconsistent input (parse errors, degree mismatches)."""


class InvalidLatticeError(ValueError):
    """A lattice or polytope violates a structural requirement."""


class UnsupportedCaseError(ValueError):
    """Input is well-formed but outside the range this code handles."""


class GraphUnavailableError(RuntimeError):
    """No valid basis triple exists for the requested dual graph."""
