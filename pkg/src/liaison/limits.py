"""Global resource caps for intermediate polynomials.

Every polynomial construction is checked against a total-degree cap and a
term-count cap; blowing past either aborts with ResourceLimitError instead of
grinding on.  The caps are deliberately generous defaults for desk-scale
inputs and can be tightened from the CLI (--degree-cap).
"""

from .errors import ResourceLimitError

DEFAULT_DEGREE_CAP = 128
DEFAULT_TERM_CAP = 200_000

_degree_cap = DEFAULT_DEGREE_CAP
_term_cap = DEFAULT_TERM_CAP


def set_caps(degree=None, terms=None):
    """Set the degree and/or term-count caps; returns the previous pair."""
    global _degree_cap, _term_cap
    old = (_degree_cap, _term_cap)
    if degree is not None:
        if degree < 1:
            raise ValueError("degree cap must be positive")
        _degree_cap = degree
    if terms is not None:
        if terms < 1:
            raise ValueError("term cap must be positive")
        _term_cap = terms
    return old


def get_caps():
    return (_degree_cap, _term_cap)


def check_terms(n_terms, max_degree):
    if max_degree > _degree_cap:
        raise ResourceLimitError(
            f"polynomial degree {max_degree} exceeds cap {_degree_cap}"
        )
    if n_terms > _term_cap:
        raise ResourceLimitError(
            f"polynomial with {n_terms} terms exceeds cap {_term_cap}"
        )
