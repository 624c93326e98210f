import pytest
from hypothesis import given, settings, strategies as st

from finring.dsl import (
    Cyclic,
    GaloisField,
    ParseError,
    PolyQuotient,
    Product,
    ZeroRing,
    build_ring,
    parse_ring_spec,
)
from finring.morphisms import are_isomorphic
from finring.search import enumerate_rings


def test_examples():
    assert parse_ring_spec("Z4") == Cyclic(4)
    assert parse_ring_spec("Z2[x]/(x^2)") == PolyQuotient(Cyclic(2), (0, 0, 1))
    assert parse_ring_spec("0 * Z2[x]/(x^2)") == Product(
        ZeroRing(), PolyQuotient(Cyclic(2), (0, 0, 1)))
    assert parse_ring_spec("Z2 * Z3") == Product(Cyclic(2), Cyclic(3))


def test_grammar_details():
    assert parse_ring_spec(" Z2*Z3*Z5 ") == Product(
        Product(Cyclic(2), Cyclic(3)), Cyclic(5))
    assert parse_ring_spec("Z2*(Z3*Z5)") == Product(
        Cyclic(2), Product(Cyclic(3), Cyclic(5)))
    assert parse_ring_spec("GF(9)") == GaloisField(9)
    assert parse_ring_spec("Z4[x]/(x^2 + 2*x + 3)").poly == (3, 2, 1)
    assert parse_ring_spec("Z4[x]/(-1 + x^2)").poly == (-1, 0, 1)
    assert parse_ring_spec("Z3[x]/(x^2 + x - x + 1)").poly == (1, 0, 1)
    assert parse_ring_spec("Z2[x]/(x)[x]/(x^2)") == PolyQuotient(
        PolyQuotient(Cyclic(2), (0, 1)), (0, 0, 1))


@pytest.mark.parametrize("text, pos", [
    ("Z0", 0),
    ("GF(6)", 3),
    ("Z2[x]/(2x^2)", 2),
    ("Z2 x Z3", 3),
    ("Z2 *", 4),
    ("Z2[x]/(x^2", 10),
    ("Z2 $ Z3", 3),
])
def test_errors_report_position(text, pos):
    with pytest.raises(ParseError) as info:
        parse_ring_spec(text)
    assert info.value.position == pos


def test_dual_numbers_are_the_unique_class():
    R = build_ring("Z2[x]/(x^2)")
    assert sum(are_isomorphic(R, S) for S in enumerate_rings(4)) == 1


def test_built_labels_reparse():
    for text in ("Z2 * Z3", "(Z2 * Z3)[x]/(x^2 - 1)", "GF(4) * Z2"):
        R = build_ring(text)
        assert parse_ring_spec(R.label) == parse_ring_spec(text)


def polys():
    low = st.lists(st.integers(-5, 5), min_size=0, max_size=3)
    return low.map(lambda cs: tuple(cs) + (1,)).filter(lambda p: len(p) >= 2)


exprs = st.recursive(
    st.one_of(
        st.just(ZeroRing()),
        st.integers(1, 30).map(Cyclic),
        st.sampled_from([2, 3, 4, 5, 7, 8, 9, 16, 25, 27]).map(GaloisField),
    ),
    lambda children: st.one_of(
        st.builds(Product, children, children),
        st.builds(PolyQuotient, children, polys()),
    ),
    max_leaves=6,
)


@settings(max_examples=300)
@given(exprs)
def test_print_parse_roundtrip(expr):
    assert parse_ring_spec(str(expr)) == expr
