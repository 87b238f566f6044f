"""Shared hypothesis strategies."""

from hypothesis import strategies as st

from vdlab.polyring import Polynomial


def _cap_degree(m, max_deg):
    out, left = [], max_deg
    for e in m:
        out.append(min(e, left))
        left -= out[-1]
    return tuple(out)


def polynomials(nvars: int = 3, max_deg: int = 6, max_terms: int = 6, coeff=st.integers(-5, 5)):
    mono = st.lists(st.integers(0, max_deg), min_size=nvars, max_size=nvars).map(
        lambda m: _cap_degree(m, max_deg))
    return st.lists(st.tuples(mono, coeff), max_size=max_terms).map(lambda ts: Polynomial(nvars, ts))


def rationals():
    return st.fractions(min_value=-20, max_value=20, max_denominator=7)


def index_tuples(m: int, bound: int):
    """Strictly increasing tuples (0, ...) of length m with entries <= bound."""
    return st.lists(st.integers(1, bound), min_size=m - 1, max_size=m - 1, unique=True).map(
        lambda xs: (0,) + tuple(sorted(xs)))
