import pytest

from mckay_lab.exactnum import Cyclotomic, golden_ratio, golden_ratio_conjugate
from mckay_lab.groups import (
    Fp,
    GroupTooLargeError,
    binary_dihedral,
    binary_icosahedral,
    binary_octahedral,
    binary_tetrahedral,
    build_named_group,
    cyclic,
    generate_group,
    is_quaternion8,
    mat_trace,
    normalizer,
    special_linear_2,
    subgroup_from_indices,
    sylow,
    verify_presentation,
)

ONE = Cyclotomic.from_rational(1)
ZERO = Cyclotomic.from_rational(0)
NEG_I2 = ((-ONE, ZERO), (ZERO, -ONE))


def test_group_from_minus_identity():
    group = generate_group([NEG_I2])
    assert group.size == 2
    assert group.elements[0] == ((ONE, ZERO), (ZERO, ONE))


def test_builder_sizes():
    assert cyclic(7).size == 7
    assert cyclic(1).size == 1
    assert binary_dihedral(3).size == 12
    assert binary_tetrahedral().size == 24
    assert binary_octahedral().size == 48
    assert binary_icosahedral().size == 120
    for p in (2, 3, 5, 7):
        assert special_linear_2(p).size == p * (p * p - 1)


def test_cyclic_abelian():
    group = cyclic(7)
    assert group.is_abelian()
    assert group.conjugacy_classes().count == 7


def test_size_cap():
    order_ten = binary_icosahedral().elements[2]
    with pytest.raises(GroupTooLargeError):
        generate_group([order_ten], size_cap=3)


def test_named_builder_lookup():
    assert build_named_group("binary-icosahedral").size == 120
    assert build_named_group("cyclic-6").size == 6
    assert build_named_group("binary-dihedral-4").size == 16
    assert build_named_group("sl2-5").size == 120
    with pytest.raises(ValueError):
        build_named_group("mystery-group")
    with pytest.raises(ValueError):
        special_linear_2(17)


def test_shipped_presentations_verify():
    for group in (cyclic(5), binary_dihedral(3), binary_tetrahedral(),
                  binary_octahedral(), binary_icosahedral()):
        assignment, relations = group.presentation
        assert verify_presentation(group, assignment, relations), group.name


def test_tetrahedral_fails_octahedral_relations():
    group = binary_tetrahedral()
    assignment, _ = group.presentation
    assert not verify_presentation(group, assignment, ("RST", "R^2", "S^3", "T^4"))


def test_cyclic_presentation_trivial_word():
    group = cyclic(5)
    assignment, _ = group.presentation
    assert verify_presentation(group, assignment, ("R^5", "1"))
    assert not verify_presentation(group, assignment, ("R^3", "1"))


def test_conjugacy_class_sizes():
    classes = binary_icosahedral().conjugacy_classes()
    assert sorted(classes.sizes) == sorted((1, 12, 12, 20, 30, 20, 12, 1, 12))
    assert classes.sizes[0] == 1  # identity class first
    assert sum(classes.sizes) == 120
    for n in (4, 9):
        abelian = cyclic(n).conjugacy_classes()
        assert abelian.count == n and set(abelian.sizes) == {1}


def test_class_equation_everywhere():
    for group in (binary_dihedral(4), binary_tetrahedral(), special_linear_2(5)):
        classes = group.conjugacy_classes()
        assert sum(classes.sizes) == group.size
        assert classes.sizes[classes.class_of[0]] == 1


def test_sylow_sizes_on_icosahedral():
    group = binary_icosahedral()
    assert sylow(group, 2).size == 8
    assert sylow(group, 5).size == 5
    assert sylow(group, 3).size == 3
    assert sylow(group, 7).size == 1


def test_sylow_full_p_part():
    for group in (binary_octahedral(), special_linear_2(7)):
        for p in (2, 3, 7):
            s = sylow(group, p)
            part = 1
            while group.size % (part * p) == 0:
                part *= p
            assert s.size == part
            assert group.size % s.size == 0  # Lagrange


def test_normalizer_of_sylow2_in_icosahedral():
    group = binary_icosahedral()
    s2 = sylow(group, 2)
    n = normalizer(group, s2)
    assert n.size == 24
    assert n.size % s2.size == 0
    assert all(m in group.index_of for m in n.elements)


def test_normalizer_trivial_and_abelian():
    group = binary_icosahedral()
    trivial = subgroup_from_indices(group, [0])
    assert normalizer(group, trivial).size == group.size
    abelian = cyclic(12)
    s = sylow(abelian, 2)
    assert normalizer(abelian, s).size == 12


def test_normalizer_requires_subgroup():
    group = cyclic(5)
    other = cyclic(7)
    with pytest.raises(ValueError, match="not a subgroup"):
        normalizer(group, other)


def test_quaternion_recognition():
    group = binary_icosahedral()
    assert is_quaternion8(sylow(group, 2))
    assert not is_quaternion8(cyclic(8))
    q8 = binary_dihedral(2)
    orders = sorted(q8.order_of(i) for i in range(8))
    assert orders == [1, 2, 4, 4, 4, 4, 4, 4]  # profile {1,1,6} for orders {1,2,4}
    assert is_quaternion8(q8)
    assert not is_quaternion8(binary_dihedral(3))


def test_sylow_conjugates_odd_count():
    group = binary_icosahedral()
    s2 = sylow(group, 2)
    base = frozenset(group.index_of[m] for m in s2.elements)
    conjugates = set()
    for g in range(group.size):
        gi = group.inverse(g)
        conjugates.add(frozenset(group.mult(group.mult(g, x), gi) for x in base))
    assert all(len(c) == len(base) for c in conjugates)
    assert len(conjugates) % 2 == 1


def test_deterministic_enumeration():
    first = binary_icosahedral()
    second = binary_icosahedral()
    assert first.elements == second.elements
    assert first.conjugacy_classes() == second.conjugacy_classes()


def test_defining_character_traces():
    group = binary_icosahedral()
    values = group.defining_character()
    classes = group.conjugacy_classes()
    assert values[classes.class_of[0]] == 2
    assert any(v == -2 for v in values)  # the central involution
    order_ten_traces = {
        values[i]
        for i, rep in enumerate(classes.representatives)
        if group.order_of(rep) == 10
    }
    assert order_ten_traces == {golden_ratio(), golden_ratio_conjugate()}
    assert mat_trace(group.elements[0]) == 2


def test_defining_character_requires_su2_builder():
    with pytest.raises(ValueError):
        special_linear_2(5).defining_character()


def test_prime_field_scalars():
    a, b = Fp(5, 3), Fp(5, 4)
    assert (a * b).v == 2
    assert (a + b).v == 2
    assert (-a).v == 2
    assert hash(Fp(5, 8)) == hash(a)
