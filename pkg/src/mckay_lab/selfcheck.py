"""Programmatic acceptance battery behind the `selfcheck` CLI subcommand.

Each check returns (name, passed, detail) and pins the classical values it
tests; the pytest suite covers the same ground with finer-grained asserts.
"""

from __future__ import annotations

import cmath
from fractions import Fraction

from . import groups
from .adequiver import identify_affine_ade, mckay_quiver, quiver_checks, root_closure
from .chartab import character_table, table_equivalent
from .exactnum import Cyclotomic, golden_ratio, golden_ratio_conjugate
from .mckaycheck import battery_groups, mckay_check, primes_dividing
from .moonshine import (
    Decomposition,
    enumerate_decompositions,
    load_monster_dims,
    meaning_of_life,
    monster_order_check,
    verify_decomposition,
)
from .qseries import j_cube_root, j_invariant

J_COEFFS = {
    -1: 1,
    0: 744,
    1: 196884,
    2: 21493760,
    3: 864299970,
    4: 20245856256,
}

CLASSICAL_DECOMPOSITIONS = (
    Decomposition(1, ((0, 1),)),
    Decomposition(196884, ((0, 1), (1, 1))),
    Decomposition(21493760, ((0, 1), (1, 1), (2, 1))),
    Decomposition(864299970, ((0, 2), (1, 2), (2, 1), (3, 1))),
    Decomposition(20245856256, ((0, 3), (1, 3), (2, 1), (3, 2), (4, 1))),
    Decomposition(20245856256, ((0, 2), (1, 3), (2, 2), (3, 1), (5, 1))),
)


def check_j_expansion():
    series = j_invariant(20)
    bad = [k for k, v in J_COEFFS.items() if series.coefficient(k) != v]
    ok = not bad and all(
        series.coefficient(k).denominator == 1 for k in range(-1, 21)
    )
    return ok, "coefficients at q^-1..q^4 match; integral to order 20"


def check_special_values():
    series = j_invariant(30)
    at_i = series.eval_at(1j).value
    at_corner = series.eval_at(cmath.exp(2j * cmath.pi / 3)).value
    ok = abs(at_i - 1728) < 1e-6 and abs(at_corner) < 1e-6
    return ok, f"j(i)={at_i.real:.9f}, |j(corner)|={abs(at_corner):.2e}"


def check_moonshine_decompositions():
    dims = load_monster_dims()
    if not all(verify_decomposition(d, dims) for d in CLASSICAL_DECOMPOSITIONS):
        return False, "a classical decomposition failed to verify"
    found = enumerate_decompositions(20245856256, dims, 6, 3)
    vectors = {d.multiplicity_vector(6) for d in found}
    expected = {(3, 3, 1, 2, 1, 0), (2, 3, 2, 1, 0, 1)}
    ok = vectors == expected
    return ok, f"enumeration found exactly {len(found)} decompositions"


def check_monster_order():
    return monster_order_check(), "factorization and 196883 = 47*59*71"


def _classical_tables():
    phi = golden_ratio()
    phip = golden_ratio_conjugate()
    w = Cyclotomic.zeta(3)
    w2 = w * w

    def lift(rows):
        return [
            [Cyclotomic.from_rational(x) if isinstance(x, int) else x for x in row]
            for row in rows
        ]

    icosahedral = (
        [1, 12, 12, 20, 30, 20, 12, 1, 12],
        lift([
            [1, 1, 1, 1, 1, 1, 1, 1, 1],
            [2, -phip, -phi, 1, 0, -1, phip, -2, phi],
            [2, -phi, -phip, 1, 0, -1, phi, -2, phip],
            [3, phi, phip, 0, -1, 0, phi, 3, phip],
            [3, phip, phi, 0, -1, 0, phip, 3, phi],
            [4, -1, -1, 1, 0, 1, -1, 4, -1],
            [4, -1, -1, -1, 0, 1, 1, -4, 1],
            [5, 0, 0, -1, 1, -1, 0, 5, 0],
            [6, 1, 1, 0, 0, 0, -1, -6, -1],
        ]),
    )
    normalizer_table = (
        [1, 4, 4, 6, 1, 4, 4],
        lift([
            [1, 1, 1, 1, 1, 1, 1],
            [1, w2, w2, 1, 1, w, w],
            [1, w, w, 1, 1, w2, w2],
            [2, -1, 1, 0, -2, 1, -1],
            [2, -w, w, 0, -2, w2, -w2],
            [2, -w2, w2, 0, -2, w, -w],
            [3, 0, 0, -1, 3, 0, 0],
        ]),
    )
    return icosahedral, normalizer_table


def check_character_tables():
    group = groups.binary_icosahedral()
    table = character_table(group)
    icosahedral, normalizer_ref = _classical_tables()
    if sorted(table.degrees) != [1, 2, 2, 3, 3, 4, 4, 5, 6]:
        return False, f"unexpected degrees {table.degrees}"
    if sum(d * d for d in table.degrees) != 120:
        return False, "degree squares do not sum to the group size"
    if not table_equivalent(table, icosahedral):
        return False, "icosahedral table does not match the classical one"
    sylow2 = groups.sylow(group, 2)
    norm = groups.normalizer(group, sylow2)
    if not table_equivalent(character_table(norm), normalizer_ref):
        return False, "normalizer table does not match the classical one"
    return True, "both tables equivalent to their classical forms"


def check_correspondence():
    cases = (
        [(groups.cyclic(n), "A", n - 1) for n in range(3, 9)]
        + [(groups.binary_dihedral(n), "D", n + 2) for n in range(2, 6)]
        + [
            (groups.binary_tetrahedral(), "E", 6),
            (groups.binary_octahedral(), "E", 7),
            (groups.binary_icosahedral(), "E", 8),
        ]
    )
    for group, family, index in cases:
        quiver = mckay_quiver(character_table(group), group.defining_character())
        ade = identify_affine_ade(quiver)
        if (ade.family, ade.index) != (family, index):
            return False, f"{group.name}: got affine {ade.family}{ade.index}"
        if not quiver_checks(quiver, group.size).passed:
            return False, f"{group.name}: quiver checks failed"
    return True, f"all {len(cases)} builders identified with passing checks"


def check_conjecture_battery():
    group = groups.binary_icosahedral()
    report = mckay_check(group, 2)
    if not (
        report.sylow_size == 8
        and groups.is_quaternion8(groups.sylow(group, 2))
        and report.normalizer_size == 24
        and report.count_group == report.count_normalizer == 4
    ):
        return False, "worked example report mismatch"
    for grp in battery_groups():
        for p in primes_dividing(grp.size):
            if not mckay_check(grp, p).holds:
                return False, f"conjecture count mismatch for {grp.name}, p={p}"
    return True, "counts agree for every builder and prime"


def check_cube_root():
    series = j_cube_root(10)
    if series.coefficient(1) != 248:
        return False, f"q coefficient is {series.coefficient(1)}"
    cubed = series**3
    target = j_invariant(9).shift(1)
    ok = all(cubed.coefficient(k) == target.coefficient(k) for k in range(0, 11))
    return ok, "q coefficient 248; cube matches q*j exactly to order 10"


def check_meaning_of_life():
    tau = meaning_of_life("tau")
    j = meaning_of_life("j")
    return tau == 42 and j == 42, f"tau -> {tau}, j -> {j} (windows q^1..q^24)"


def check_property_suite():
    table = character_table(groups.binary_octahedral())
    n = table.group.size
    sizes = table.class_sizes
    for a in range(table.count):
        for b in range(table.count):
            acc = Cyclotomic.from_rational(0)
            for g in range(table.count):
                acc = acc + Fraction(sizes[g]) * table.entries[a][g] * table.entries[b][g].conjugate()
            if acc != Cyclotomic.from_rational(n if a == b else 0):
                return False, "orthogonality failure"
    a2 = root_closure([(1, -1, 0), (0, 1, -1)])
    if len(a2.roots) != 6:
        return False, f"A2 closure found {len(a2.roots)} roots"
    half = Fraction(1, 2)
    e8 = root_closure([
        (half, -half, -half, -half, -half, -half, -half, half),
        (1, 1, 0, 0, 0, 0, 0, 0),
        (-1, 1, 0, 0, 0, 0, 0, 0),
        (0, -1, 1, 0, 0, 0, 0, 0),
        (0, 0, -1, 1, 0, 0, 0, 0),
        (0, 0, 0, -1, 1, 0, 0, 0),
        (0, 0, 0, 0, -1, 1, 0, 0),
        (0, 0, 0, 0, 0, -1, 1, 0),
    ])
    if len(e8.roots) != 240:
        return False, f"largest exceptional closure found {len(e8.roots)} roots"
    return True, "orthogonality exact; root closures 6 and 240"


ALL_CHECKS = (
    ("j-expansion", check_j_expansion),
    ("special-values", check_special_values),
    ("moonshine-decompositions", check_moonshine_decompositions),
    ("monster-order", check_monster_order),
    ("character-tables", check_character_tables),
    ("mckay-correspondence", check_correspondence),
    ("mckay-conjecture", check_conjecture_battery),
    ("cube-root-of-j", check_cube_root),
    ("meaning-of-life", check_meaning_of_life),
    ("property-suite", check_property_suite),
)


def run_selfcheck(report=print) -> bool:
    all_ok = True
    for name, check in ALL_CHECKS:
        try:
            ok, detail = check()
        except Exception as exc:  # surface, keep running the rest
            ok, detail = False, f"exception: {exc}"
        all_ok = all_ok and ok
        report(f"{'PASS' if ok else 'FAIL'}  {name:26s} {detail}")
    return all_ok
