"""Exact linear algebra over the rationals and over the integer lattice.

Everything here is exact: entries are Python ints or ``fractions.Fraction``,
never floats.  Rational routines (rank, kernel, span membership) run
fraction-free Bareiss elimination with a deterministic pivot rule, so results
are reproducible across runs and platforms.  Integer-lattice routines go
through a row-style Hermite normal form with an accumulated unimodular
transform.

Matrices are plain sequences of row sequences; vectors are plain sequences.
All functions leave their inputs untouched.
"""

from fractions import Fraction
from math import gcd, lcm


def _exact_div(a, b):
    q, r = divmod(a, b)
    if r:
        raise ArithmeticError("inexact division in fraction-free elimination")
    return q


def _int_rows(matrix):
    """Copy a rational matrix into integer rows by clearing denominators.

    Row scaling by a positive constant changes neither rank nor kernel.
    """
    rows = []
    width = None
    for row in matrix:
        frac = [Fraction(x) for x in row]
        if width is None:
            width = len(frac)
        elif len(frac) != width:
            raise ValueError("ragged matrix")
        scale = lcm(*(c.denominator for c in frac)) if frac else 1
        rows.append([int(c * scale) for c in frac])
    return rows


def _primitive(vector):
    """Scale a rational vector to coprime integers, first nonzero positive."""
    frac = [Fraction(x) for x in vector]
    denom = lcm(*(c.denominator for c in frac)) if frac else 1
    ints = [int(c * denom) for c in frac]
    g = gcd(*ints) if ints else 0
    if g == 0:
        return tuple(ints)
    lead = next(x for x in ints if x != 0)
    if lead < 0:
        g = -g
    return tuple(x // g for x in ints)


def _bareiss(rows):
    """Fraction-free forward elimination on integer rows (in place).

    Pivot rule: columns left to right, within a column the topmost unused
    row with a nonzero entry.  Returns the pivot positions ``(row, col)``.
    """
    m = len(rows)
    n = len(rows[0]) if m else 0
    pivots = []
    prev = 1
    r = 0
    for c in range(n):
        if r == m:
            break
        p = next((i for i in range(r, m) if rows[i][c] != 0), None)
        if p is None:
            continue
        if p != r:
            rows[r], rows[p] = rows[p], rows[r]
        piv = rows[r][c]
        for i in range(r + 1, m):
            ric = rows[i][c]
            if ric == 0 and prev == 1:
                continue
            row_i, row_r = rows[i], rows[r]
            for j in range(c + 1, n):
                row_i[j] = _exact_div(piv * row_i[j] - ric * row_r[j], prev)
            row_i[c] = 0
        prev = piv
        pivots.append((r, c))
        r += 1
    return pivots


def rank(matrix):
    """Exact rank of a rational matrix."""
    rows = _int_rows(matrix)
    if not rows or not rows[0]:
        return 0
    return len(_bareiss(rows))


def kernel_basis(matrix):
    """Deterministic basis of the right null space of a rational matrix.

    One basis vector per pivot-free column, taken in ascending column order
    following the reduced-echelon convention; each vector is scaled to
    coprime integer entries with positive leading entry.  Full column rank
    yields the empty list.
    """
    rows = _int_rows(matrix)
    if not rows:
        raise ValueError("matrix needs at least one row")
    n = len(rows[0])
    pivots = _bareiss(rows)
    pivot_cols = {c for _, c in pivots}
    basis = []
    for free in (c for c in range(n) if c not in pivot_cols):
        v = [Fraction(0)] * n
        v[free] = Fraction(1)
        for r, c in reversed(pivots):
            if c > free:
                continue
            s = sum(rows[r][j] * v[j] for j in range(c + 1, n) if v[j])
            v[c] = Fraction(-s, rows[r][c])
        basis.append(_primitive(v))
    return basis


def _sparse(vector):
    out = {}
    for i, x in enumerate(vector):
        c = Fraction(x)
        if c:
            out[i] = c
    return out


def _reduce_sparse(vec, combo, echelon):
    """Eliminate every echelon pivot from ``vec``, tracking the combination.

    Echelon vectors have strictly increasing support above their pivot, so
    repeatedly clearing the smallest pivoted coordinate terminates.
    """
    while True:
        hit = min((i for i in vec if i in echelon), default=None)
        if hit is None:
            return
        evec, ecombo = echelon[hit]
        factor = vec[hit] / evec[hit]
        for j, c in evec.items():
            new = vec.get(j, 0) - factor * c
            if new:
                vec[j] = new
            else:
                vec.pop(j, None)
        if combo is not None:
            for j, c in ecombo.items():
                new = combo.get(j, 0) + factor * c
                if new:
                    combo[j] = new
                else:
                    combo.pop(j, None)


def _span_solve(vectors, target, track):
    """Shared engine behind in_span / linear_combination.

    Feeds spanning vectors into an incremental sparse echelon and keeps the
    target residual fully reduced, so membership can be detected as soon as
    the residual vanishes.
    """
    dim = len(target)
    for s in vectors:
        if len(s) != dim:
            raise ValueError("vectors must all have the same length")
    res = _sparse(target)
    res_combo = {} if track else None
    echelon = {}
    if not res:
        return res_combo if track else True
    for idx, s in enumerate(vectors):
        vec = _sparse(s)
        combo = {idx: Fraction(1)} if track else None
        _reduce_sparse(vec, combo, echelon)
        if not vec:
            continue
        pivot = min(vec)
        echelon[pivot] = (vec, combo)
        if pivot in res:
            _reduce_sparse(res, res_combo, echelon)
            if not res:
                return res_combo if track else True
    return None if track else False


def in_span(vector, vectors):
    """Whether ``vector`` lies in the rational span of ``vectors``. Exact."""
    return _span_solve(vectors, vector, track=False)


def linear_combination(vectors, target):
    """Coefficients writing ``target`` as a combination of ``vectors``.

    Returns a list of Fractions (one per input vector) or None when the
    target is outside the span.
    """
    combo = _span_solve(vectors, target, track=True)
    if combo is None:
        return None
    coeffs = [Fraction(0)] * len(vectors)
    for i, c in combo.items():
        coeffs[i] = c
    return coeffs


def _validated_int_rows(matrix):
    rows = [list(row) for row in matrix]
    if rows:
        width = len(rows[0])
        for row in rows:
            if len(row) != width:
                raise ValueError("ragged matrix")
            for x in row:
                if x != int(x):
                    raise ValueError("integer matrix expected")
    return [[int(x) for x in row] for row in rows]


def row_hermite_normal_form(matrix):
    """Row-style Hermite normal form with its unimodular transform.

    Returns ``(H, U)`` with ``U @ matrix == H``, ``U`` unimodular over the
    integers, ``H`` in row echelon form with positive pivots and entries
    above each pivot reduced into ``[0, pivot)``.
    """
    rows = _validated_int_rows(matrix)
    m = len(rows)
    n = len(rows[0]) if m else 0
    unimod = [[int(i == j) for j in range(m)] for i in range(m)]
    r = 0
    for c in range(n):
        if r == m:
            break
        while True:
            nz = [i for i in range(r, m) if rows[i][c] != 0]
            if not nz:
                break
            best = min(nz, key=lambda i: abs(rows[i][c]))
            if best != r:
                rows[r], rows[best] = rows[best], rows[r]
                unimod[r], unimod[best] = unimod[best], unimod[r]
            done = True
            for i in range(r + 1, m):
                if rows[i][c] == 0:
                    continue
                q = rows[i][c] // rows[r][c]
                rows[i] = [a - q * b for a, b in zip(rows[i], rows[r])]
                unimod[i] = [a - q * b for a, b in zip(unimod[i], unimod[r])]
                if rows[i][c] != 0:
                    done = False
            if done:
                break
        if r < m and rows[r][c] != 0:
            if rows[r][c] < 0:
                rows[r] = [-a for a in rows[r]]
                unimod[r] = [-a for a in unimod[r]]
            for i in range(r):
                q = rows[i][c] // rows[r][c]
                if q:
                    rows[i] = [a - q * b for a, b in zip(rows[i], rows[r])]
                    unimod[i] = [a - q * b for a, b in zip(unimod[i], unimod[r])]
            r += 1
    hnf = tuple(tuple(row) for row in rows)
    transform = tuple(tuple(row) for row in unimod)
    return hnf, transform


def _sign_normalized(vector):
    lead = next((x for x in vector if x != 0), 0)
    if lead < 0:
        return tuple(-x for x in vector)
    return tuple(vector)


def lattice_kernel(matrix):
    """Z-basis of the integer kernel lattice ``{u : matrix @ u = 0}``.

    Computed from the Hermite normal form of the transpose: rows of the
    unimodular transform aligned with zero rows of the HNF generate the full
    integer kernel, not merely a finite-index sublattice.
    """
    rows = _validated_int_rows(matrix)
    if not rows or not rows[0]:
        raise ValueError("matrix must be nonempty")
    transposed = [list(col) for col in zip(*rows)]
    hnf, transform = row_hermite_normal_form(transposed)
    basis = []
    for h_row, u_row in zip(hnf, transform):
        if all(x == 0 for x in h_row):
            basis.append(_sign_normalized(u_row))
    return basis


def integer_solve(matrix, target):
    """Integer vector ``x`` with ``matrix @ x == target``, or None.

    Solvability over Z is decided through the Hermite normal form of the
    transpose: the columns of ``matrix`` and the nonzero rows of the HNF
    generate the same lattice, and membership in an echelon lattice basis is
    a greedy divisibility check.
    """
    rows = _validated_int_rows(matrix)
    if not rows:
        raise ValueError("matrix must be nonempty")
    if len(target) != len(rows):
        raise ValueError("target length must equal the matrix row count")
    ncols = len(rows[0])
    transposed = [list(col) for col in zip(*rows)]
    hnf, transform = row_hermite_normal_form(transposed)
    residual = [int(x) for x in target]
    coeffs = [0] * ncols
    for i, h_row in enumerate(hnf):
        pivot_col = next((j for j, x in enumerate(h_row) if x != 0), None)
        if pivot_col is None:
            break
        q, rem = divmod(residual[pivot_col], h_row[pivot_col])
        if rem:
            return None
        if q:
            residual = [a - q * b for a, b in zip(residual, h_row)]
        coeffs[i] = q
    if any(residual):
        return None
    solution = [0] * ncols
    for i, z in enumerate(coeffs):
        if z:
            for j, u in enumerate(transform[i]):
                solution[j] += z * u
    return tuple(solution)
