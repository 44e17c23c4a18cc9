from fractions import Fraction

from hypothesis import settings, strategies as st

from hermite_cx.exactnum import FieldElem
from hermite_cx.multipoly import Poly, monomial

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

rationals = st.fractions(min_value=-20, max_value=20, max_denominator=12)
field_elems = st.builds(FieldElem, rationals, rationals, rationals, rationals)
nonzero_field_elems = field_elems.filter(lambda x: not x.is_zero())
small_ints = st.integers(min_value=-5, max_value=5)


def polys_in(names, max_degree=4, max_terms=5, coeffs=small_ints):
    """Strategy for sparse polynomials in the given variables."""
    exps = st.tuples(*[st.integers(0, max_degree) for _ in names])
    term = st.tuples(exps, coeffs)

    def build(items):
        terms = {}
        for e, c in items:
            key = monomial(**dict(zip(names, e)))
            terms[key] = terms.get(key, 0) + c
        return Poly(terms)

    return st.lists(term, max_size=max_terms).map(build)


zz_polys = polys_in(("z", "zbar"))


ACCEPTANCE: dict = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[n]
        terminalreporter.write_line(f"criterion {n}: {'PASS' if ok else 'FAIL'}  {detail}")
