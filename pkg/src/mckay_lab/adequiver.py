"""The McKay correspondence toolkit: tensor-decomposition quivers from
character data, identification of affine simply-laced Dynkin diagrams, and
root-system machinery (reflection closure, Dynkin diagrams from simple roots).

All arithmetic is exact; adjacency multiplicities are asserted to be integers
rather than rounded, and the eigenvalue-2 balance of the node dimensions is
checked with integer linear algebra.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .chartab import CharacterTable
from .exactnum import Cyclotomic


@dataclass(frozen=True)
class Quiver:
    adjacency: tuple[tuple[int, ...], ...]
    node_dims: tuple[int, ...]
    affine_node_index: int

    @property
    def node_count(self) -> int:
        return len(self.adjacency)


@dataclass(frozen=True)
class AffineADEType:
    family: str  # "A", "D" or "E"
    index: int
    affine: bool = True

    def __str__(self):
        return f"affine {self.family}{self.index}" if self.affine else f"{self.family}{self.index}"


def mckay_quiver(table: CharacterTable, defining_row) -> Quiver:
    """Adjacency of tensoring each irreducible with the defining 2-dim rep.

    Entry (i, j) is the multiplicity of irreducible j inside the tensor
    product of the defining representation with irreducible i, computed from
    the character inner product; each must come out a non-negative integer.
    """
    defining_row = tuple(defining_row)
    r = table.count
    if len(defining_row) != r:
        raise ValueError("defining character length does not match the class count")
    if defining_row[0] != 2:
        raise ValueError("defining character must have degree 2")
    sizes = table.class_sizes
    n = table.group.size
    adjacency = []
    for i in range(r):
        row = []
        for j in range(r):
            acc = Cyclotomic.from_rational(0)
            for g in range(r):
                acc = acc + (
                    Fraction(sizes[g])
                    * defining_row[g]
                    * table.entries[i][g]
                    * table.entries[j][g].conjugate()
                )
            if not acc.is_rational():
                raise ValueError("defining row is not a character")
            value = acc.rational_value() / n
            if value.denominator != 1 or value < 0:
                raise ValueError("defining row is not a character")
            row.append(int(value))
        adjacency.append(tuple(row))
    affine = next(i for i in range(r) if all(x == 1 for x in table.entries[i]))
    return Quiver(tuple(adjacency), tuple(table.degrees), affine)


# ---------------------------------------------------------------------------
# Affine A-D-E templates and identification by explicit isomorphism.

def _template_affine_a(n: int):
    nodes = n + 1
    adj = [[0] * nodes for _ in range(nodes)]
    if n == 1:
        adj[0][1] = adj[1][0] = 2
    else:
        for i in range(nodes):
            j = (i + 1) % nodes
            adj[i][j] = adj[j][i] = 1
    return adj


def _template_affine_d(n: int):
    # Central chain of n-3 nodes with a two-leaf fork at each end.
    nodes = n + 1
    adj = [[0] * nodes for _ in range(nodes)]
    chain = list(range(4, nodes))  # non-empty for every affine D_n, n >= 4

    def join(a, b):
        adj[a][b] = adj[b][a] = 1

    join(0, chain[0])
    join(1, chain[0])
    join(2, chain[-1])
    join(3, chain[-1])
    for a, b in zip(chain, chain[1:]):
        join(a, b)
    return adj


def _template_affine_e(n: int):
    # Star with three arms from a hub; arm lengths (counting nodes) by type.
    arms = {6: (2, 2, 2), 7: (1, 3, 3), 8: (1, 2, 5)}[n]
    nodes = 1 + sum(arms)
    adj = [[0] * nodes for _ in range(nodes)]
    next_node = 1
    for arm in arms:
        prev = 0
        for _ in range(arm):
            adj[prev][next_node] = adj[next_node][prev] = 1
            prev = next_node
            next_node += 1
    return adj


def _graph_isomorphic(a, b) -> bool:
    n = len(a)
    if len(b) != n:
        return False
    deg_a = [sum(row) for row in a]
    deg_b = [sum(row) for row in b]
    if sorted(deg_a) != sorted(deg_b):
        return False
    mapping = [-1] * n
    used = [False] * n
    order = sorted(range(n), key=lambda i: -deg_a[i])

    def backtrack(pos):
        if pos == n:
            return True
        i = order[pos]
        for j in range(n):
            if used[j] or deg_b[j] != deg_a[i]:
                continue
            if all(
                mapping[k] < 0 or b[j][mapping[k]] == a[i][k]
                for k in range(n)
            ):
                mapping[i] = j
                used[j] = True
                if backtrack(pos + 1):
                    return True
                mapping[i] = -1
                used[j] = False
        return False

    return backtrack(0)


def identify_affine_ade(quiver: Quiver) -> AffineADEType:
    """Match the quiver against the affine A-D-E adjacency templates."""
    adj = [list(row) for row in quiver.adjacency]
    n = len(adj)
    for i in range(n):
        for j in range(n):
            if adj[i][j] != adj[j][i]:
                raise ValueError("not an affine ADE diagram: adjacency not symmetric")
            if adj[i][j] not in (0, 1, 2):
                raise ValueError("not an affine ADE diagram: multiplicity above 2")
    candidates = []
    if n >= 2:
        candidates.append(("A", n - 1, _template_affine_a(n - 1)))
    if n >= 5:
        candidates.append(("D", n - 1, _template_affine_d(n - 1)))
    if n in (7, 8, 9):
        candidates.append(("E", n - 1, _template_affine_e(n - 1)))
    for family, index, template in candidates:
        if _graph_isomorphic(adj, template):
            return AffineADEType(family, index)
    raise ValueError("not an affine ADE diagram")


@dataclass(frozen=True)
class QuiverReport:
    checks: tuple[tuple[str, bool, str], ...]

    @property
    def passed(self) -> bool:
        return all(ok for _, ok, _ in self.checks)

    @property
    def failures(self) -> tuple[str, ...]:
        return tuple(name for name, ok, _ in self.checks if not ok)


def quiver_checks(quiver: Quiver, group_size: int) -> QuiverReport:
    """Integer sanity checks: sum of squared node dimensions equals the group
    size, and the dimension vector balances the adjacency at eigenvalue 2."""
    dims = quiver.node_dims
    adj = quiver.adjacency
    checks = []
    total = sum(d * d for d in dims)
    checks.append((
        "dimension-square-sum",
        total == group_size,
        f"sum of squares {total} vs group size {group_size}",
    ))
    balanced = all(
        sum(adj[i][j] * dims[j] for j in range(len(dims))) == 2 * dims[i]
        for i in range(len(dims))
    )
    checks.append((
        "eigenvalue-2-balance",
        balanced,
        "adjacency * dims == 2 * dims checked with exact integers",
    ))
    symmetric = all(
        adj[i][j] == adj[j][i] for i in range(len(dims)) for j in range(len(dims))
    )
    checks.append(("symmetry", symmetric, "adjacency symmetric"))
    return QuiverReport(tuple(checks))


# ---------------------------------------------------------------------------
# Root systems from simple roots.

Vector = tuple[Fraction, ...]


def _vec(v) -> Vector:
    return tuple(Fraction(x) for x in v)


def _dot(a: Vector, b: Vector) -> Fraction:
    return sum((x * y for x, y in zip(a, b)), Fraction(0))


def _reflect(beta: Vector, alpha: Vector) -> Vector:
    scale = 2 * _dot(alpha, beta) / _dot(alpha, alpha)
    return tuple(b - scale * a for a, b in zip(alpha, beta))


@dataclass(frozen=True)
class RootSystem:
    rank: int
    roots: frozenset[Vector]
    positive_roots: frozenset[Vector]
    simple_roots: tuple[Vector, ...]


def _rank_of(vectors) -> int:
    rows = [list(v) for v in vectors]
    rank = 0
    cols = len(rows[0]) if rows else 0
    for col in range(cols):
        pivot = next((r for r in range(rank, len(rows)) if rows[r][col] != 0), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = 1 / rows[rank][col]
        rows[rank] = [x * inv for x in rows[rank]]
        for r in range(len(rows)):
            if r != rank and rows[r][col] != 0:
                f = rows[r][col]
                rows[r] = [x - f * y for x, y in zip(rows[r], rows[rank])]
        rank += 1
    return rank


def _coordinates(basis, vector):
    """Solve vector = sum c_i basis_i exactly; None when outside the span."""
    dim = len(vector)
    k = len(basis)
    aug = [[basis[j][i] for j in range(k)] + [vector[i]] for i in range(dim)]
    pivots = []
    row = 0
    for col in range(k):
        pivot = next((r for r in range(row, dim) if aug[r][col] != 0), None)
        if pivot is None:
            return None
        aug[row], aug[pivot] = aug[pivot], aug[row]
        inv = 1 / aug[row][col]
        aug[row] = [x * inv for x in aug[row]]
        for r in range(dim):
            if r != row and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[row])]
        pivots.append(col)
        row += 1
    if any(aug[r][k] != 0 for r in range(row, dim)):
        return None
    coords = [Fraction(0)] * k
    for i, col in enumerate(pivots):
        coords[col] = aug[i][k]
    return coords


def root_closure(simple_roots, cap: int = 1000) -> RootSystem:
    """Close the simple roots under all root reflections.

    Positivity is decided lexicographically on the coordinates with respect
    to the input simple roots, which recovers the input as the simple set.
    """
    simples = [_vec(v) for v in simple_roots]
    if not simples:
        raise ValueError("need at least one simple root")
    if any(all(x == 0 for x in v) for v in simples):
        raise ValueError("roots must be non-zero")
    if _rank_of(simples) != len(simples):
        raise ValueError("simple roots must be linearly independent")
    for a in simples:
        for b in simples:
            coeff = 2 * _dot(a, b) / _dot(a, a)
            if coeff.denominator != 1:
                raise ValueError(f"non-integral reflection coefficient {coeff}")
    roots = set(simples)
    frontier = list(simples)
    while frontier:
        fresh = []
        for alpha in list(roots):
            for beta in frontier:
                for image in (_reflect(beta, alpha), _reflect(alpha, beta)):
                    if image not in roots:
                        roots.add(image)
                        fresh.append(image)
                        if len(roots) > cap:
                            raise ValueError("not a finite root system")
        frontier = fresh
    positive = set()
    for root in roots:
        coords = _coordinates(simples, root)
        if coords is None:
            raise ValueError("closure left the span of the simple roots")
        leading = next((c for c in coords if c != 0), Fraction(0))
        if leading > 0:
            positive.add(root)
    recovered = []
    for root in positive:
        decomposable = any(
            tuple(x - y for x, y in zip(root, other)) in positive
            for other in positive
            if other != root
        )
        if not decomposable:
            recovered.append(root)
    recovered.sort(key=lambda v: _coordinates(simples, v))
    return RootSystem(
        rank=len(simples),
        roots=frozenset(roots),
        positive_roots=frozenset(positive),
        simple_roots=tuple(recovered),
    )


@dataclass(frozen=True)
class DynkinEdge:
    i: int
    j: int
    multiplicity: int
    direction: tuple[int, int] | None  # (long node, short node) when lengths differ


@dataclass(frozen=True)
class DynkinDiagram:
    node_count: int
    edges: tuple[DynkinEdge, ...]


_ANGLE_TO_MULTIPLICITY = {
    Fraction(0): 0,
    Fraction(1, 4): 1,
    Fraction(1, 2): 2,
    Fraction(3, 4): 3,
}


def dynkin_from_simple_roots(simple_roots) -> DynkinDiagram:
    """Edges by the angle rule (none, single, double, triple for the four
    admissible angles), arrows from the longer root to the shorter."""
    simples = [_vec(v) for v in simple_roots]
    edges = []
    for i in range(len(simples)):
        for j in range(i + 1, len(simples)):
            ip = _dot(simples[i], simples[j])
            ni = _dot(simples[i], simples[i])
            nj = _dot(simples[j], simples[j])
            cos2 = ip * ip / (ni * nj)
            if cos2 not in _ANGLE_TO_MULTIPLICITY or (ip > 0 and cos2 != 0):
                raise ValueError(f"inadmissible angle between simple roots: cos^2 = {cos2}")
            multiplicity = _ANGLE_TO_MULTIPLICITY[cos2]
            if multiplicity == 0:
                continue
            direction = None
            if ni != nj:
                direction = (i, j) if ni > nj else (j, i)
            edges.append(DynkinEdge(i, j, multiplicity, direction))
    return DynkinDiagram(len(simples), tuple(edges))
