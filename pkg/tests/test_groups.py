import pytest

from cccspectra.groups import (IDENTITY, Element, Family, GroupSpec, InvalidParameters,
                               NonCanonicalElement, center, center_brute, conjugacy_classes,
                               conjugacy_classes_brute, element_arrays, mul_arrays,
                               elements, inverse, is_abelian, multiply, noncentral_classes,
                               power, validate_presentation)

D5 = GroupSpec.dihedral(5)
Q8 = GroupSpec.dicyclic(2)
Q12 = GroupSpec.dicyclic(3)
V16 = GroupSpec.vgroup(2)


def small_specs():
    out = [GroupSpec.dihedral(n) for n in range(3, 13)]
    out += [GroupSpec.dicyclic(m) for m in range(2, 9)]
    out += [GroupSpec.umeta(n, m) for n in range(2, 5) for m in range(2, 8)]
    out += [GroupSpec.vgroup(n) for n in range(2, 7)]
    out += [GroupSpec.semidihedral(n) for n in range(2, 7)]
    return out


@pytest.mark.parametrize("family,n,m", [
    (Family.DIHEDRAL, 2, None), (Family.DICYCLIC, None, 1), (Family.UMETA, 1, 3),
    (Family.UMETA, 2, 1), (Family.VGROUP, 1, None), (Family.SEMIDIHEDRAL, 1, None),
    (Family.DIHEDRAL, 5, 3), (Family.DICYCLIC, 3, None), (Family.UMETA, 2, None),
])
def test_invalid_parameters(family, n, m):
    with pytest.raises(InvalidParameters):
        GroupSpec(family, n=n, m=m)


def test_non_integer_parameter_rejected():
    with pytest.raises(InvalidParameters):
        GroupSpec.dihedral(5.0)
    with pytest.raises(InvalidParameters):
        GroupSpec.dihedral(True)


def test_orders_and_labels():
    cases = [(GroupSpec.dihedral(5), 10, "D10"), (GroupSpec.dicyclic(5), 20, "Q20"),
             (GroupSpec.umeta(2, 5), 20, "U(2,5)"), (GroupSpec.vgroup(2), 16, "V16"),
             (GroupSpec.semidihedral(3), 24, "SD24")]
    for spec, order, label in cases:
        assert spec.order == order == len(elements(spec))
        assert spec.label == label


def test_family_parse():
    assert Family.parse("D2N") is Family.DIHEDRAL
    assert Family.parse("semidihedral") is Family.SEMIDIHEDRAL
    with pytest.raises(ValueError):
        Family.parse("s4")


def test_multiply_examples():
    assert multiply(D5, (0, 1), (1, 0)) == (4, 1)
    assert multiply(Q8, (0, 1), (0, 1)) == (2, 0)
    assert multiply(V16, (0, 1), (1, 0)) == (3, 3)
    for spec in small_specs():
        for g in elements(spec)[:12]:
            assert multiply(spec, IDENTITY, g) == g


def test_multiply_rejects_non_canonical():
    with pytest.raises(NonCanonicalElement):
        multiply(D5, (5, 0), (0, 0))
    with pytest.raises(NonCanonicalElement):
        multiply(D5, (0, 2), (0, 0))


def _inverse_by_search(spec, g):
    return [h for h in elements(spec)
            if multiply(spec, g, h) == IDENTITY and multiply(spec, h, g) == IDENTITY]


def test_inverse_examples():
    assert inverse(D5, (0, 0)) == (0, 0)
    assert inverse(D5, (2, 0)) == (3, 0)
    assert _inverse_by_search(Q12, (0, 1)) == [(3, 1)]
    assert inverse(Q12, (0, 1)) == (3, 1)


@pytest.mark.parametrize("spec", small_specs(), ids=str)
def test_inverse_matches_search(spec):
    for g in elements(spec):
        assert [inverse(spec, g)] == _inverse_by_search(spec, g)


def test_power():
    x = Element(1, 0)
    assert power(D5, x, 5) == IDENTITY
    assert power(D5, x, -1) == (4, 0)
    assert power(Q8, (0, 1), 4) == IDENTITY


@pytest.mark.parametrize("spec", small_specs(), ids=str)
def test_presentation_valid(spec):
    rep = validate_presentation(spec)
    assert rep.ok, rep.violations
    assert rep.order == spec.order


def test_presentation_sampled_above_cayley_limit():
    rep = validate_presentation(GroupSpec.umeta(12, 11))
    assert rep.ok and rep.order == 264


def test_presentation_detects_broken_law(monkeypatch):
    import cccspectra.groups as groups
    real = groups._mul

    def broken(spec, p, q):
        a, b = real(spec, p, q)
        # forget the twist: y x = x y
        return groups.Element((p[0] + q[0]) % spec.x_order, (p[1] + q[1]) % 2)

    monkeypatch.setattr(groups, "_mul", broken)
    assert not validate_presentation(D5).ok


def test_center_examples():
    assert center(D5) == {(0, 0)}
    assert center(Q8) == {(0, 0), (2, 0)}
    assert center(GroupSpec.dihedral(6)) == {(0, 0), (3, 0)}


@pytest.mark.parametrize("spec", small_specs(), ids=str)
def test_center_matches_brute_force(spec):
    assert center(spec) == center_brute(spec)


def test_umeta_m2_is_abelian():
    for n in range(2, 13):
        assert is_abelian(GroupSpec.umeta(n, 2))
    assert not is_abelian(GroupSpec.umeta(2, 3))


def test_class_examples():
    classes = conjugacy_classes(D5)
    members = [set(c.members) for c in classes]
    assert len(classes) == 4
    assert {(0, 0)} in members
    assert {(1, 0), (4, 0)} in members
    assert {(2, 0), (3, 0)} in members
    assert {(a, 1) for a in range(5)} in members
    assert len(noncentral_classes(D5)) == 3
    assert len(conjugacy_classes(Q8)) == 5
    assert len(noncentral_classes(Q8)) == 3
    assert classes[0].members == {(0, 0)}


@pytest.mark.parametrize("spec", small_specs(), ids=str)
def test_classes_partition_group(spec):
    classes = conjugacy_classes(spec)
    assert sum(c.size for c in classes) == spec.order
    assert set().union(*(c.members for c in classes)) == set(elements(spec))
    z = center(spec)
    for c in classes:
        assert spec.order % c.size == 0
        assert c.representative == min(c.members)
        assert (c.size == 1) == (c.representative in z)


@pytest.mark.parametrize("spec", small_specs(), ids=str)
def test_generator_orbits_match_full_conjugation(spec):
    assert conjugacy_classes(spec) == conjugacy_classes_brute(spec)


@pytest.mark.parametrize("spec", small_specs(), ids=str)
def test_vectorised_product_matches_scalar(spec):
    els = elements(spec)
    A, B = element_arrays(spec)
    assert [tuple(e) for e in els] == list(zip(A.tolist(), B.tolist()))
    for p in els[:: max(1, len(els) // 7)]:
        la, lb = mul_arrays(spec, p.a, p.b, A, B)
        ra, rb = mul_arrays(spec, A, B, p.a, p.b)
        assert list(zip(la.tolist(), lb.tolist())) == [multiply(spec, p, q) for q in els]
        assert list(zip(ra.tolist(), rb.tolist())) == [multiply(spec, q, p) for q in els]
