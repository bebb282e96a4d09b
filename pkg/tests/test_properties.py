"""Property-based checks on the group arithmetic, shapes and spectra."""
from fractions import Fraction as F

from hypothesis import given, settings
from hypothesis import strategies as st

from cccspectra.ccc import UnionShape, build_ccc, classes_commute, complete_union_shape
from cccspectra.closed_forms import Matrix, closed_energies, closed_spectrum
from cccspectra.groups import (IDENTITY, Element, GroupSpec, conjugacy_classes, elements,
                               inverse, multiply, power)
from cccspectra.spectra import (Spectrum, energy_report, format_rational, parse_rational,
                                spectra_of_union)

specs = st.one_of(
    st.builds(GroupSpec.dihedral, st.integers(3, 40)),
    st.builds(GroupSpec.dicyclic, st.integers(2, 30)),
    st.builds(GroupSpec.umeta, st.integers(2, 10), st.integers(2, 12)),
    st.builds(GroupSpec.vgroup, st.integers(2, 20)),
    st.builds(GroupSpec.semidihedral, st.integers(2, 20)),
)


@st.composite
def spec_and_elements(draw, k=3):
    spec = draw(specs)
    els = [Element(draw(st.integers(0, spec.x_order - 1)), draw(st.integers(0, spec.y_range - 1)))
           for _ in range(k)]
    return spec, els


@given(spec_and_elements())
def test_associative(data):
    spec, (p, q, r) = data
    assert multiply(spec, multiply(spec, p, q), r) == multiply(spec, p, multiply(spec, q, r))


@given(spec_and_elements(k=1))
def test_identity_and_inverse(data):
    spec, (p,) = data
    assert multiply(spec, p, IDENTITY) == multiply(spec, IDENTITY, p) == p
    q = inverse(spec, p)
    assert multiply(spec, p, q) == multiply(spec, q, p) == IDENTITY
    assert inverse(spec, q) == p


@given(spec_and_elements(k=1))
def test_element_order_divides_group_order(data):
    spec, (p,) = data
    assert power(spec, p, spec.order) == IDENTITY


@settings(max_examples=40, deadline=None)
@given(specs)
def test_class_equation(spec):
    classes = conjugacy_classes(spec)
    assert sum(c.size for c in classes) == spec.order == len(elements(spec))
    assert all(spec.order % c.size == 0 for c in classes)


@settings(max_examples=25, deadline=None)
@given(specs.filter(lambda s: not (s.family.value == "u" and s.m == 2)))
def test_ccc_is_union_of_cliques_with_symmetric_commuting(spec):
    g = build_ccc(spec)
    shape = complete_union_shape(g)
    assert shape.vertex_count == g.vertex_count and shape.edge_count == g.edge_count
    X, Y = g.vertices[0], g.vertices[-1]
    assert classes_commute(spec, X, Y) == classes_commute(spec, Y, X)


shapes = st.lists(st.integers(1, 40), min_size=1, max_size=50).map(UnionShape.from_sizes)


@given(shapes)
def test_trace_identities(shape):
    A, L, Q = spectra_of_union(shape)
    e = shape.edge_count
    assert A.total() == 0
    assert L.total() == Q.total() == 2 * e
    assert L.multiplicity(0) == shape.component_count
    assert len(A) == len(L) == len(Q) == shape.vertex_count
    # sum of squared adjacency eigenvalues is twice the edge count
    assert sum(v * v * k for v, k in A.entries) == 2 * e


@given(st.integers(1, 200))
def test_complete_graph_energies(k):
    r = energy_report(UnionShape.from_sizes([k]))
    assert r.E == r.LE == r.LE_plus == 2 * (k - 1)


@given(shapes)
def test_regular_unions_have_equal_energies(shape):
    # a union of equal cliques is regular, so L and Q deviations mirror A
    k = shape.parts[0][1]
    regular = UnionShape.from_sizes([k] * shape.component_count)
    r = energy_report(regular)
    assert r.E == r.LE == r.LE_plus


@given(st.lists(st.tuples(st.fractions(max_denominator=50), st.integers(0, 9)), max_size=12))
def test_spectrum_json_round_trip(pairs):
    s = Spectrum.from_pairs(pairs)
    assert Spectrum.from_json(s.to_json()) == s
    assert len(s) == sum(k for _, k in pairs)


@given(st.fractions())
def test_rational_round_trip(q):
    assert parse_rational(format_rational(q)) == q


@given(specs.filter(lambda s: not (s.family.value == "u" and s.m == 2)))
def test_closed_spectra_integral_and_sized(spec):
    r = closed_energies(spec)
    for w in Matrix:
        s = closed_spectrum(spec, w)
        assert s.is_integral()
        assert len(s) == r.vertex_count
    assert closed_spectrum(spec, Matrix.L).total() == 2 * r.edge_count
    assert r.E <= r.LE and r.LE_plus <= r.LE
    assert r.E >= 0 and r.LE >= F(0)
