"""Complex character tables of finite groups, computed exactly.

The route is the classical one: class-sum structure constants give commuting
integer matrices whose simultaneous eigenvectors over a prime field F_l
(l = 1 mod exp(G), l large enough) are the central characters; degrees are
recovered from orthogonality, and entries are lifted to exact cyclotomic
numbers by a finite Fourier inversion along power maps.  No floating point
anywhere; orthogonality of the result is exact and testable.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, isqrt

from .exactnum import Cyclotomic
from .groups import ConjugacyClasses, FiniteGroup


@dataclass(frozen=True)
class CharacterTable:
    group: FiniteGroup
    classes: ConjugacyClasses
    entries: tuple[tuple[Cyclotomic, ...], ...]  # rows: irreducibles; col 0: identity
    degrees: tuple[int, ...]
    dixon_prime: int

    @property
    def count(self) -> int:
        return len(self.entries)

    @property
    def class_sizes(self) -> tuple[int, ...]:
        return self.classes.sizes


# ---------------------------------------------------------------------------
# Small dense linear algebra over F_l.

def _mat_vec_mod(m, v, l):
    return [sum(mi * vi for mi, vi in zip(row, v)) % l for row in m]


def _solve_mod(a_columns, b, l):
    """Solve sum_j x_j * a_columns[j] = b over F_l; requires consistency."""
    rows = len(b)
    cols = len(a_columns)
    aug = [[a_columns[j][i] % l for j in range(cols)] + [b[i] % l] for i in range(rows)]
    piv_rows = []
    row = 0
    for col in range(cols):
        pivot = next((r for r in range(row, rows) if aug[r][col]), None)
        if pivot is None:
            continue
        aug[row], aug[pivot] = aug[pivot], aug[row]
        inv = pow(aug[row][col], l - 2, l)
        aug[row] = [(x * inv) % l for x in aug[row]]
        for r in range(rows):
            if r != row and aug[r][col]:
                f = aug[r][col]
                aug[r] = [(x - f * y) % l for x, y in zip(aug[r], aug[row])]
        piv_rows.append((row, col))
        row += 1
    if any(aug[r][cols] for r in range(row, rows)):
        raise ArithmeticError("inconsistent linear system mod l")
    x = [0] * cols
    for r, c in piv_rows:
        x[c] = aug[r][cols]
    return x


def _nullspace_mod(m, l):
    """Basis of the kernel of the square matrix m over F_l."""
    k = len(m)
    a = [row[:] for row in m]
    pivots = {}
    row = 0
    for col in range(k):
        pivot = next((r for r in range(row, k) if a[r][col] % l), None)
        if pivot is None:
            continue
        a[row], a[pivot] = a[pivot], a[row]
        inv = pow(a[row][col], l - 2, l)
        a[row] = [(x * inv) % l for x in a[row]]
        for r in range(k):
            if r != row and a[r][col] % l:
                f = a[r][col]
                a[r] = [(x - f * y) % l for x, y in zip(a[r], a[row])]
        pivots[col] = row
        row += 1
    basis = []
    for col in range(k):
        if col in pivots:
            continue
        v = [0] * k
        v[col] = 1
        for pcol, prow in pivots.items():
            v[pcol] = (-a[prow][col]) % l
        basis.append(v)
    return basis


def _char_poly_mod(m, l):
    """Characteristic polynomial det(m - x I) by Lagrange interpolation."""
    k = len(m)
    if k + 1 > l:
        raise ArithmeticError("field too small for interpolation")
    xs = list(range(k + 1))
    ys = []
    for x in xs:
        a = [[(m[i][j] - (x if i == j else 0)) % l for j in range(k)] for i in range(k)]
        ys.append(_det_mod(a, l))
    # Lagrange interpolation to coefficient form.
    poly = [0] * (k + 1)
    for i, xi in enumerate(xs):
        num = [1]
        denom = 1
        for j, xj in enumerate(xs):
            if i == j:
                continue
            num = _poly_mul_mod(num, [-xj % l, 1], l)
            denom = denom * (xi - xj) % l
        scale = ys[i] * pow(denom, l - 2, l) % l
        for d, c in enumerate(num):
            poly[d] = (poly[d] + scale * c) % l
    return poly


def _poly_mul_mod(a, b, l):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % l
    return out


def _det_mod(a, l):
    k = len(a)
    a = [row[:] for row in a]
    det = 1
    for col in range(k):
        pivot = next((r for r in range(col, k) if a[r][col] % l), None)
        if pivot is None:
            return 0
        if pivot != col:
            a[col], a[pivot] = a[pivot], a[col]
            det = -det
        det = det * a[col][col] % l
        inv = pow(a[col][col], l - 2, l)
        for r in range(col + 1, k):
            if a[r][col]:
                f = a[r][col] * inv % l
                a[r] = [(x - f * y) % l for x, y in zip(a[r], a[col])]
    return det % l


def _poly_roots_mod(poly, l):
    roots = []
    for x in range(l):
        acc = 0
        for c in reversed(poly):
            acc = (acc * x + c) % l
        if acc == 0:
            roots.append(x)
    return roots


def _primitive_root(l):
    factors = set()
    m = l - 1
    d = 2
    while d * d <= m:
        if m % d == 0:
            factors.add(d)
            while m % d == 0:
                m //= d
        d += 1
    if m > 1:
        factors.add(m)
    for g in range(2, l):
        if all(pow(g, (l - 1) // q, l) != 1 for q in factors):
            return g
    raise ArithmeticError("no primitive root found")


def _is_prime(n):
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def dixon_prime(group_size: int, exponent: int, min_bound: int = 0) -> int:
    """Smallest prime = 1 mod exponent exceeding 2*sqrt(size) and min_bound."""
    bound = max(2 * isqrt(group_size) + 1, min_bound, 2)
    l = exponent + 1
    while True:
        if l > bound and (l - 1) % exponent == 0 and _is_prime(l):
            return l
        l += 1


# ---------------------------------------------------------------------------

def character_table(group: FiniteGroup) -> CharacterTable:
    """Exact character table; rows ordered trivial first, then by degree and
    by the complex embedding of the entries."""
    classes = group.conjugacy_classes()
    r = classes.count
    reps = classes.representatives
    sizes = classes.sizes
    n = group.size
    class_elements = [[] for _ in range(r)]
    for i, c in enumerate(classes.class_of):
        class_elements[c].append(i)
    inverse_class = [classes.class_of[group.inverse(rep)] for rep in reps]
    rep_orders = [group.order_of(rep) for rep in reps]
    exponent = 1
    for o in rep_orders:
        exponent = exponent * o // gcd(exponent, o)

    l = dixon_prime(n, exponent, min_bound=r + 1)

    # Class-sum structure constants: b[i][j][k] counts factorizations of a
    # fixed element of class k as (element of class i) * (element of class j).
    b = [[[0] * r for _ in range(r)] for _ in range(r)]
    for k in range(r):
        zk = reps[k]
        for i in range(r):
            row = b[i]
            for x in class_elements[i]:
                j = classes.class_of[group.mult(group.inverse(x), zk)]
                row[j][k] += 1

    # Simultaneous eigenspaces of the commuting matrices over F_l.
    subspaces = [[_unit_vector(r, i) for i in range(r)]]
    for i in range(1, r):
        if all(len(w) == 1 for w in subspaces):
            break
        matrix = [[b[i][j][k] % l for k in range(r)] for j in range(r)]
        refined = []
        for basis in subspaces:
            if len(basis) == 1:
                refined.append(basis)
                continue
            restricted = _restrict(matrix, basis, l)
            split = _split_eigenspaces(restricted, l)
            if len(split) == 1:
                refined.append(basis)
                continue
            for coord_vectors in split:
                refined.append([_combine(basis, cv, l) for cv in coord_vectors])
        subspaces = refined
    if any(len(w) != 1 for w in subspaces):
        raise ArithmeticError("class matrices failed to separate characters")

    rows_mod = []
    degrees = []
    sqrt_cap = isqrt(n)
    for (vec,) in subspaces:
        v0 = vec[0] % l
        if v0 == 0:
            raise ArithmeticError("central character vanished at the identity class")
        inv0 = pow(v0, l - 2, l)
        w = [x * inv0 % l for x in vec]
        s = sum(w[i] * w[inverse_class[i]] * pow(sizes[i], l - 2, l) for i in range(r)) % l
        dsq = n * pow(s, l - 2, l) % l
        degree = next((d for d in range(1, sqrt_cap + 1) if d * d % l == dsq), None)
        if degree is None:
            raise ArithmeticError("degree recovery failed")
        degrees.append(degree)
        rows_mod.append([degree * w[i] * pow(sizes[i], l - 2, l) % l for i in range(r)])

    # Lift entries from F_l to exact cyclotomic numbers along power maps.
    gamma = _primitive_root(l)
    theta = pow(gamma, (l - 1) // exponent, l)
    power_class = []
    for i in range(r):
        m = rep_orders[i]
        pc = [0] * m
        x = 0
        for t in range(m):
            pc[t] = classes.class_of[x]
            x = group.mult(x, reps[i])
        power_class.append(pc)

    entries = []
    for row_mod, degree in zip(rows_mod, degrees):
        row = []
        for i in range(r):
            m = rep_orders[i]
            z = pow(theta, exponent // m, l)
            zinv = pow(z, l - 2, l)
            minv = pow(m, l - 2, l)
            mults = {}
            for jj in range(m):
                acc = 0
                for t in range(m):
                    acc = (acc + row_mod[power_class[i][t]] * pow(zinv, jj * t % (l - 1), l)) % l
                mj = acc * minv % l
                if mj:
                    mults[jj] = mj
            if sum(mults.values()) != degree:
                raise ArithmeticError("character lift inconsistent with the degree")
            row.append(Cyclotomic(m, mults) if mults else Cyclotomic.from_rational(0))
        entries.append(tuple(row))

    order = sorted(range(len(entries)), key=lambda a: _row_sort_key(entries[a], degrees[a]))
    entries = tuple(entries[a] for a in order)
    degrees = tuple(degrees[a] for a in order)
    return CharacterTable(group, classes, entries, degrees, l)


def _unit_vector(r, i):
    v = [0] * r
    v[i] = 1
    return v


def _restrict(matrix, basis, l):
    columns = [list(v) for v in basis]
    out = []
    for v in basis:
        image = _mat_vec_mod(matrix, v, l)
        out.append(_solve_mod(columns, image, l))
    # out[j] holds coordinates of B*basis[j]; restricted matrix columns are these.
    k = len(basis)
    return [[out[j][i] for j in range(k)] for i in range(k)]


def _split_eigenspaces(matrix, l):
    k = len(matrix)
    poly = _char_poly_mod(matrix, l)
    pieces = []
    total = 0
    for lam in _poly_roots_mod(poly, l):
        shifted = [[(matrix[i][j] - (lam if i == j else 0)) % l for j in range(k)] for i in range(k)]
        kernel = _nullspace_mod(shifted, l)
        if kernel:
            pieces.append(kernel)
            total += len(kernel)
    if total != k:
        raise ArithmeticError("class matrix not diagonalizable over F_l")
    return pieces


def _combine(basis, coords, l):
    r = len(basis[0])
    out = [0] * r
    for c, vec in zip(coords, basis):
        if c:
            for i in range(r):
                out[i] = (out[i] + c * vec[i]) % l
    return out


def _row_sort_key(row, degree):
    if all(x == 1 for x in row):
        return (degree, 0, ())
    embedded = []
    for x in row:
        z = x.to_complex()
        embedded.append((round(z.real, 10), round(z.imag, 10)))
    return (degree, 1, tuple(embedded), tuple(str(x) for x in row))


# ---------------------------------------------------------------------------

def _as_table_data(table):
    if isinstance(table, CharacterTable):
        return list(table.classes.sizes), [list(row) for row in table.entries]
    sizes, rows = table
    return list(sizes), [list(row) for row in rows]


def table_equivalent(a, b) -> bool:
    """True when a row and column permutation maps one table to the other,
    with columns only matched between classes of equal size."""
    sizes_a, rows_a = _as_table_data(a)
    sizes_b, rows_b = _as_table_data(b)
    r = len(rows_a)
    if len(rows_b) != r or len(sizes_a) != r or len(sizes_b) != r:
        return False
    if sorted(sizes_a) != sorted(sizes_b):
        return False

    def fingerprint(rows, sizes, j):
        return (sizes[j], tuple(sorted(str(rows[i][j]) for i in range(r))))

    fp_a = [fingerprint(rows_a, sizes_a, j) for j in range(r)]
    fp_b = [fingerprint(rows_b, sizes_b, j) for j in range(r)]
    if sorted(fp_a) != sorted(fp_b):
        return False
    candidates = {j: [k for k in range(r) if fp_b[k] == fp_a[j]] for j in range(r)}
    column_order = sorted(range(r), key=lambda j: len(candidates[j]))
    target_rows = sorted(tuple(str(x) for x in row) for row in rows_b)
    assignment = [-1] * r
    used = [False] * r

    def backtrack(pos):
        if pos == r:
            mapped = []
            for row in rows_a:
                out = [""] * r
                for j in range(r):
                    out[assignment[j]] = str(row[j])
                mapped.append(tuple(out))
            return sorted(mapped) == target_rows
        j = column_order[pos]
        for k in candidates[j]:
            if used[k]:
                continue
            used[k] = True
            assignment[j] = k
            if backtrack(pos + 1):
                return True
            used[k] = False
            assignment[j] = -1
        return False

    return backtrack(0)
