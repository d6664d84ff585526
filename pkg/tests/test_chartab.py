import random
from fractions import Fraction

from mckay_lab.chartab import character_table, dixon_prime, table_equivalent
from mckay_lab.exactnum import Cyclotomic, golden_ratio, golden_ratio_conjugate
from mckay_lab.groups import (
    binary_dihedral,
    binary_icosahedral,
    binary_octahedral,
    binary_tetrahedral,
    cyclic,
    normalizer,
    special_linear_2,
    sylow,
)

ZERO = Cyclotomic.from_rational(0)


def _lift_rows(rows):
    return [
        [Cyclotomic.from_rational(x) if isinstance(x, int) else x for x in row]
        for row in rows
    ]


def classical_icosahedral_table():
    phi, phip = golden_ratio(), golden_ratio_conjugate()
    sizes = [1, 12, 12, 20, 30, 20, 12, 1, 12]
    rows = _lift_rows([
        [1, 1, 1, 1, 1, 1, 1, 1, 1],
        [2, -phip, -phi, 1, 0, -1, phip, -2, phi],
        [2, -phi, -phip, 1, 0, -1, phi, -2, phip],
        [3, phi, phip, 0, -1, 0, phi, 3, phip],
        [3, phip, phi, 0, -1, 0, phip, 3, phi],
        [4, -1, -1, 1, 0, 1, -1, 4, -1],
        [4, -1, -1, -1, 0, 1, 1, -4, 1],
        [5, 0, 0, -1, 1, -1, 0, 5, 0],
        [6, 1, 1, 0, 0, 0, -1, -6, -1],
    ])
    return sizes, rows


def classical_normalizer_table():
    w = Cyclotomic.zeta(3)
    w2 = w * w
    sizes = [1, 4, 4, 6, 1, 4, 4]
    rows = _lift_rows([
        [1, 1, 1, 1, 1, 1, 1],
        [1, w2, w2, 1, 1, w, w],
        [1, w, w, 1, 1, w2, w2],
        [2, -1, 1, 0, -2, 1, -1],
        [2, -w, w, 0, -2, w2, -w2],
        [2, -w2, w2, 0, -2, w, -w],
        [3, 0, 0, -1, 3, 0, 0],
    ])
    return sizes, rows


def _exact_row_orthogonality(table):
    n = table.group.size
    sizes = table.class_sizes
    for a in range(table.count):
        for b in range(a, table.count):
            acc = ZERO
            for g in range(table.count):
                acc = acc + Fraction(sizes[g]) * table.entries[a][g] * table.entries[b][g].conjugate()
            assert acc == Cyclotomic.from_rational(n if a == b else 0)


def _exact_column_orthogonality(table):
    n = table.group.size
    sizes = table.class_sizes
    for g in range(table.count):
        for h in range(g, table.count):
            acc = ZERO
            for a in range(table.count):
                acc = acc + table.entries[a][g] * table.entries[a][h].conjugate()
            expect = Fraction(n, sizes[g]) if g == h else Fraction(0)
            assert acc == Cyclotomic.from_rational(expect)


def test_icosahedral_degrees_and_table():
    table = character_table(binary_icosahedral())
    assert table.degrees == (1, 2, 2, 3, 3, 4, 4, 5, 6)
    assert sum(d * d for d in table.degrees) == 120
    assert all(x == 1 for x in table.entries[0])  # trivial row first
    assert table_equivalent(table, classical_icosahedral_table())


def test_normalizer_table_matches_classical():
    group = binary_icosahedral()
    norm = normalizer(group, sylow(group, 2))
    table = character_table(norm)
    assert table.degrees == (1, 1, 1, 2, 2, 2, 3)
    assert table_equivalent(table, classical_normalizer_table())


def test_cyclic3_table():
    table = character_table(cyclic(3))
    assert table.degrees == (1, 1, 1)
    w = Cyclotomic.zeta(3)
    values = {entry for row in table.entries for entry in row}
    assert values == {Cyclotomic.from_rational(1), w, w * w}


def test_orthogonality_exact_on_battery():
    battery = [cyclic(6), binary_dihedral(3), binary_tetrahedral(),
               binary_octahedral(), special_linear_2(5)]
    for group in battery:
        table = character_table(group)
        _exact_row_orthogonality(table)
        _exact_column_orthogonality(table)


def test_degrees_divide_group_size():
    for group in (binary_dihedral(5), binary_octahedral(), special_linear_2(7)):
        table = character_table(group)
        assert all(group.size % d == 0 for d in table.degrees)


def test_entry_conductors_divide_exponent():
    group = special_linear_2(7)
    exponent = group.exponent()
    table = character_table(group)
    for row in table.entries:
        for entry in row:
            assert exponent % entry.conductor == 0


def test_defining_character_is_a_degree_2_row_with_trivial_kernel():
    group = binary_icosahedral()
    table = character_table(group)
    defining = tuple(group.defining_character())
    assert defining in table.entries
    assert table.degrees[table.entries.index(defining)] == 2
    # faithfulness: only the identity class takes the full trace 2
    assert sum(1 for v in defining if v == 2) == 1


def test_table_equivalent_shuffles():
    table = character_table(binary_tetrahedral())
    rng = random.Random(7)
    rows = list(table.entries)
    rng.shuffle(rows)
    assert table_equivalent(table, (list(table.class_sizes), rows))
    # permute columns consistently with their sizes
    order = list(range(table.count))
    rng.shuffle(order)
    sizes = [table.class_sizes[j] for j in order]
    rows2 = [[row[j] for j in order] for row in rows]
    assert table_equivalent(table, (sizes, rows2))


def test_table_equivalent_rejects_wrong_table():
    t_tetra = character_table(binary_tetrahedral())
    t_dihedral = character_table(binary_dihedral(4))  # same class count, size 16
    assert t_tetra.count == t_dihedral.count
    assert not table_equivalent(t_tetra, t_dihedral)
    broken = [list(r) for r in t_tetra.entries]
    broken[3][2] = broken[3][2] + 1
    assert not table_equivalent(t_tetra, (list(t_tetra.class_sizes), broken))


def test_dixon_prime_selection():
    assert dixon_prime(120, 60) == 61
    assert dixon_prime(24, 12) == 13
    assert dixon_prime(336, 168) == 337
    assert dixon_prime(48, 24) == 73


def test_recorded_prime_matches_selection():
    group = binary_icosahedral()
    table = character_table(group)
    assert table.dixon_prime == 61
