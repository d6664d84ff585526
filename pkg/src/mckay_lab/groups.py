"""Finite matrix groups over exact scalars.

Groups are built by breadth-first closure from generator matrices, either
2x2 over cyclotomic numbers (the finite subgroups of SU(2)) or over a prime
field (SL(2,p)).  Element ordering is deterministic: identity first, then
breadth-first discovery order with generators applied in the order given.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .exactnum import Cyclotomic, golden_ratio, sqrt5


class GroupTooLargeError(RuntimeError):
    pass


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


class Fp:
    """Residue in a prime field; exact scalar for SL(2,p) matrices."""

    __slots__ = ("p", "v")

    def __init__(self, p: int, v: int):
        self.p = p
        self.v = v % p

    def __add__(self, other):
        return Fp(self.p, self.v + other.v)

    def __sub__(self, other):
        return Fp(self.p, self.v - other.v)

    def __mul__(self, other):
        return Fp(self.p, self.v * other.v)

    def __neg__(self):
        return Fp(self.p, -self.v)

    def __eq__(self, other):
        return isinstance(other, Fp) and self.p == other.p and self.v == other.v

    def __hash__(self):
        return hash((self.p, self.v))

    def __repr__(self):
        return f"{self.v}(mod {self.p})"


def mat_mul(a, b):
    n, inner, m = len(a), len(b), len(b[0])
    out = []
    for i in range(n):
        row = []
        for j in range(m):
            s = a[i][0] * b[0][j]
            for k in range(1, inner):
                s = s + a[i][k] * b[k][j]
            row.append(s)
        out.append(tuple(row))
    return tuple(out)


def mat_trace(a):
    t = a[0][0]
    for i in range(1, len(a)):
        t = t + a[i][i]
    return t


@dataclass(frozen=True)
class ConjugacyClasses:
    class_of: tuple[int, ...]
    representatives: tuple[int, ...]
    sizes: tuple[int, ...]

    @property
    def count(self) -> int:
        return len(self.representatives)

    def members(self, c: int) -> list[int]:
        return [i for i, k in enumerate(self.class_of) if k == c]


class FiniteGroup:
    """Fully enumerated finite matrix group with on-demand multiplication."""

    def __init__(self, elements, generator_indices, name=None, has_defining_rep=False,
                 presentation=None):
        self.elements = list(elements)
        self.index_of = {m: i for i, m in enumerate(self.elements)}
        self.generators = tuple(generator_indices)
        self.name = name
        self.has_defining_rep = has_defining_rep
        self.presentation = presentation
        self._mult_cache: dict[tuple[int, int], int] = {}
        self._inverse: list[int] | None = None
        self._orders: list[int] | None = None
        self._classes: ConjugacyClasses | None = None

    @property
    def size(self) -> int:
        return len(self.elements)

    def __len__(self):
        return len(self.elements)

    def contains(self, matrix) -> bool:
        return matrix in self.index_of

    def mult(self, i: int, j: int) -> int:
        key = (i, j)
        cached = self._mult_cache.get(key)
        if cached is not None:
            return cached
        result = self.index_of[mat_mul(self.elements[i], self.elements[j])]
        self._mult_cache[key] = result
        return result

    def inverse(self, i: int) -> int:
        if self._inverse is None:
            self._inverse = [-1] * self.size
        if self._inverse[i] < 0:
            if i == 0:
                self._inverse[i] = 0
            else:
                prev, cur = i, self.mult(i, i)
                while cur != 0:
                    prev, cur = cur, self.mult(cur, i)
                self._inverse[i] = prev
        return self._inverse[i]

    def order_of(self, i: int) -> int:
        if self._orders is None:
            self._orders = [0] * self.size
        if not self._orders[i]:
            k, x = 1, i
            while x != 0:
                x = self.mult(x, i)
                k += 1
            self._orders[i] = k
        return self._orders[i]

    def exponent(self) -> int:
        e = 1
        for i in range(self.size):
            o = self.order_of(i)
            e = e * o // gcd(e, o)
        return e

    def is_abelian(self) -> bool:
        gens = self.generators
        return all(self.mult(a, b) == self.mult(b, a) for a in gens for b in gens)

    def conjugacy_classes(self) -> ConjugacyClasses:
        """Orbits under conjugation, ordered by minimal element index."""
        if self._classes is not None:
            return self._classes
        n = self.size
        gens = list(self.generators)
        gen_inv = [self.inverse(g) for g in gens]
        class_of = [-1] * n
        reps, sizes = [], []
        for i in range(n):
            if class_of[i] >= 0:
                continue
            c = len(reps)
            reps.append(i)
            orbit = [i]
            class_of[i] = c
            head = 0
            while head < len(orbit):
                x = orbit[head]
                head += 1
                for g, gi in zip(gens, gen_inv):
                    y = self.mult(self.mult(g, x), gi)
                    if class_of[y] < 0:
                        class_of[y] = c
                        orbit.append(y)
            sizes.append(len(orbit))
        self._classes = ConjugacyClasses(tuple(class_of), tuple(reps), tuple(sizes))
        return self._classes

    def defining_character(self) -> tuple[Cyclotomic, ...]:
        """Trace of a representative matrix on each conjugacy class."""
        if not self.has_defining_rep:
            raise ValueError(f"group {self.name!r} carries no defining 2-dimensional representation")
        classes = self.conjugacy_classes()
        return tuple(mat_trace(self.elements[r]) for r in classes.representatives)

    def __repr__(self):
        return f"FiniteGroup({self.name or 'anonymous'}, size={self.size})"


def _identity_from(generator, size_cap: int):
    cur = generator
    for _ in range(size_cap + 1):
        nxt = mat_mul(cur, generator)
        if nxt == generator:
            return cur
        cur = nxt
    raise GroupTooLargeError("group too large or infinite")


def generate_group(generators, size_cap: int = 10000, *, name=None,
                   has_defining_rep=False, presentation=None) -> FiniteGroup:
    """Breadth-first closure of the generators; identity gets index 0."""
    if not generators:
        raise ValueError("at least one generator required")
    identity = _identity_from(generators[0], size_cap)
    elements = [identity]
    index = {identity: 0}
    head = 0
    while head < len(elements):
        for g in generators:
            y = mat_mul(elements[head], g)
            if y not in index:
                if len(elements) >= size_cap:
                    raise GroupTooLargeError("group too large or infinite")
                index[y] = len(elements)
                elements.append(y)
        head += 1
    gen_indices = []
    for g in generators:
        gi = index[g]
        if gi not in gen_indices:
            gen_indices.append(gi)
    return FiniteGroup(elements, gen_indices, name=name,
                       has_defining_rep=has_defining_rep, presentation=presentation)


def _closure_indices(group: FiniteGroup, generator_indices) -> list[int]:
    """Subgroup generated by the given elements, as sorted parent indices."""
    gens = [g for g in generator_indices if g != 0]
    seen = {0}
    queue = [0]
    head = 0
    while head < len(queue):
        x = queue[head]
        head += 1
        for g in gens:
            y = group.mult(x, g)
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return sorted(seen)


def subgroup_from_indices(group: FiniteGroup, indices, *, name=None) -> FiniteGroup:
    """Re-enumerate a closed subset of a group as a standalone group."""
    closed = set(indices)
    closed.add(0)
    gens: list[int] = []
    reach = {0}
    for i in sorted(closed):
        if i in reach:
            continue
        gens.append(i)
        reach = set(_closure_indices(group, gens))
    gen_mats = [group.elements[i] for i in gens] or [group.elements[0]]
    sub = generate_group(gen_mats, size_cap=group.size, name=name,
                         has_defining_rep=group.has_defining_rep)
    if sub.size != len(closed):
        raise ValueError("index set is not closed under the group operation")
    return sub


_WORD_TOKEN = re.compile(r"([A-Za-z])(?:\^(\d+))?")


def _evaluate_word(group: FiniteGroup, assignment: dict[str, int], word: str) -> int:
    word = word.replace(" ", "")
    if word == "1":
        return 0
    if not re.fullmatch(r"(?:[A-Za-z](?:\^\d+)?)+", word):
        raise ValueError(f"malformed relation word {word!r}")
    result = 0
    for sym, exp in _WORD_TOKEN.findall(word):
        if sym not in assignment:
            raise ValueError(f"symbol {sym!r} not covered by the assignment")
        k = int(exp) if exp else 1
        for _ in range(k):
            result = group.mult(result, assignment[sym])
    return result


def verify_presentation(group: FiniteGroup, assignment, relations) -> bool:
    """Check that all relation words evaluate to one common element.

    The assignment maps symbols to elements (matrices or element indices);
    relations are words like "RST" or "T^5", with "1" for the identity.
    """
    idx_assignment = {}
    for sym, val in assignment.items():
        idx_assignment[sym] = val if isinstance(val, int) else group.index_of[val]
    values = [_evaluate_word(group, idx_assignment, w) for w in relations]
    return len(set(values)) <= 1


# ---------------------------------------------------------------------------
# Named builders: the finite subgroups of SU(2), and SL(2,p) over prime fields.

_Q_ZERO = Cyclotomic.from_rational(0)
_Q_ONE = Cyclotomic.from_rational(1)


def _quaternion_matrix(a, b, c, d):
    """SU(2) image of the unit quaternion a + bi + cj + dk."""
    i = Cyclotomic.zeta(4)
    a, b, c, d = (x if isinstance(x, Cyclotomic) else Cyclotomic.from_rational(x)
                  for x in (a, b, c, d))
    return ((a + b * i, c + d * i), (-c + d * i, a - b * i))


def cyclic(n: int) -> FiniteGroup:
    if n < 1:
        raise ValueError("cyclic group needs n >= 1")
    z = Cyclotomic.zeta(n)
    r = ((z, _Q_ZERO), (_Q_ZERO, z.conjugate()))
    presentation = ({"R": r}, (f"R^{n}", "1"))
    return generate_group([r], name=f"cyclic-{n}", has_defining_rep=True,
                          presentation=presentation)


def binary_dihedral(n: int) -> FiniteGroup:
    """Binary dihedral group of size 4n: a 2n-fold rotation and the j flip."""
    if n < 1:
        raise ValueError("binary dihedral group needs n >= 1")
    z = Cyclotomic.zeta(2 * n)
    r = ((z, _Q_ZERO), (_Q_ZERO, z.conjugate()))
    s = ((_Q_ZERO, _Q_ONE), (-_Q_ONE, _Q_ZERO))
    presentation = ({"R": r, "S": s}, (f"R^{n}", "S^2", "RSRS"))
    return generate_group([r, s], name=f"binary-dihedral-{n}", has_defining_rep=True,
                          presentation=presentation)


def binary_tetrahedral() -> FiniteGroup:
    half = Fraction(1, 2)
    r = _quaternion_matrix(0, 1, 0, 0)
    s = _quaternion_matrix(half, half, half, half)
    t = _quaternion_matrix(half, half, -half, half)
    presentation = ({"R": r, "S": s, "T": t}, ("RST", "R^2", "S^3", "T^3"))
    return generate_group([r, s], name="binary-tetrahedral", has_defining_rep=True,
                          presentation=presentation)


def binary_octahedral() -> FiniteGroup:
    half = Fraction(1, 2)
    z8 = Cyclotomic.zeta(8)
    inv_sqrt2 = (z8 + z8.conjugate()).inverse()
    t = ((z8, _Q_ZERO), (_Q_ZERO, z8.conjugate()))
    s = _quaternion_matrix(half, half, half, half)
    r = _quaternion_matrix(0, inv_sqrt2, inv_sqrt2, 0)
    presentation = ({"R": r, "S": s, "T": t}, ("RST", "R^2", "S^3", "T^4"))
    return generate_group([s, t], name="binary-octahedral", has_defining_rep=True,
                          presentation=presentation)


def binary_icosahedral() -> FiniteGroup:
    """Size-120 subgroup with all matrix entries in the 5th cyclotomic field."""
    z = Cyclotomic.zeta(5)
    inv_sqrt5 = sqrt5().inverse()
    t = ((-(z**3), _Q_ZERO), (_Q_ZERO, -(z**2)))
    r = tuple(
        tuple(-inv_sqrt5 * e for e in row)
        for row in ((-(z - z**4), z**2 - z**3), (z**2 - z**3, z - z**4))
    )
    # S is pinned down by the chained relation: R S T = R^2 forces S = -R^-1 T^-1.
    r3 = mat_mul(mat_mul(r, r), r)
    t9 = t
    for _ in range(8):
        t9 = mat_mul(t9, t)
    s = tuple(tuple(-e for e in row) for row in mat_mul(r3, t9))
    presentation = ({"R": r, "S": s, "T": t}, ("RST", "R^2", "S^3", "T^5"))
    return generate_group([s, t], name="binary-icosahedral", has_defining_rep=True,
                          presentation=presentation)


def special_linear_2(p: int) -> FiniteGroup:
    """SL(2,p) for a prime p <= 13, generated by the elementary matrices."""
    if not is_prime(p) or p > 13:
        raise ValueError("SL(2,p) builder needs a prime p <= 13")
    one, zero = Fp(p, 1), Fp(p, 0)
    a = ((one, one), (zero, one))
    b = ((zero, one), (-one, zero))
    return generate_group([a, b], name=f"sl2-{p}")


def build_named_group(name: str) -> FiniteGroup:
    """Builder lookup for CLI-style names like "binary-icosahedral" or "cyclic-6"."""
    fixed = {
        "binary-tetrahedral": binary_tetrahedral,
        "binary-octahedral": binary_octahedral,
        "binary-icosahedral": binary_icosahedral,
    }
    if name in fixed:
        return fixed[name]()
    m = re.fullmatch(r"cyclic-(\d+)", name)
    if m:
        return cyclic(int(m.group(1)))
    m = re.fullmatch(r"binary-dihedral-(\d+)", name)
    if m:
        return binary_dihedral(int(m.group(1)))
    m = re.fullmatch(r"sl2-(\d+)", name)
    if m:
        return special_linear_2(int(m.group(1)))
    raise ValueError(f"unknown group name: {name!r}")


BUILDER_NAMES = (
    "cyclic-N", "binary-dihedral-N", "binary-tetrahedral", "binary-octahedral",
    "binary-icosahedral", "sl2-P",
)


# ---------------------------------------------------------------------------
# Sylow subgroups, normalizers, and the quaternion-group test.

def sylow(group: FiniteGroup, p: int) -> FiniteGroup:
    """A Sylow p-subgroup, grown from a maximal p-element through normalizers."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    n = group.size
    target = 1
    while n % (target * p) == 0:
        target *= p
    if target == 1:
        return subgroup_from_indices(group, [0], name=f"{group.name}-sylow-{p}")
    seed, seed_order = 0, 1
    for i in range(n):
        o = group.order_of(i)
        if o > seed_order and _is_p_power(o, p):
            seed, seed_order = i, o
    current = set(_closure_indices(group, [seed]))
    while len(current) < target:
        normalizer_idx = _normalizer_indices(group, current)
        extender = next(
            x for x in normalizer_idx
            if x not in current and _is_p_power(group.order_of(x), p)
        )
        gens = _generating_subset(group, current) + [extender]
        current = set(_closure_indices(group, gens))
    return subgroup_from_indices(group, current, name=f"{group.name}-sylow-{p}")


def _is_p_power(n: int, p: int) -> bool:
    while n % p == 0:
        n //= p
    return n == 1


def _normalizer_indices(group: FiniteGroup, subgroup_indices: set[int]) -> list[int]:
    gens = _generating_subset(group, subgroup_indices)
    out = []
    for g in range(group.size):
        gi = group.inverse(g)
        if all(group.mult(group.mult(g, s), gi) in subgroup_indices for s in gens):
            out.append(g)
    return out


def _generating_subset(group: FiniteGroup, subgroup_indices: set[int]) -> list[int]:
    gens: list[int] = []
    reach = {0}
    for i in sorted(subgroup_indices):
        if i in reach:
            continue
        gens.append(i)
        reach = set(_closure_indices(group, gens))
        if len(reach) == len(subgroup_indices):
            break
    return gens or [0]


def normalizer(group: FiniteGroup, subgroup: FiniteGroup) -> FiniteGroup:
    """Largest subgroup of `group` whose conjugation fixes `subgroup` setwise."""
    try:
        indices = {group.index_of[m] for m in subgroup.elements}
    except KeyError:
        raise ValueError("not a subgroup: elements fall outside the ambient group")
    normalizer_idx = _normalizer_indices(group, indices)
    return subgroup_from_indices(group, normalizer_idx,
                                 name=f"normalizer-of-{subgroup.name}")


def is_quaternion8(group: FiniteGroup) -> bool:
    """True for the quaternion group: size 8, non-abelian, one involution."""
    if group.size != 8 or group.is_abelian():
        return False
    return sum(1 for i in range(8) if group.order_of(i) == 2) == 1
