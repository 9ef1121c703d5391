"""Non-negative integer matrices as toric data: gradings, fibers, generators.

A matrix ``A`` with nonzero columns grades monomials by the multidegree
``A @ exponent``.  The fiber of a multidegree collects every monomial mapped
onto it; fibers are the finite-dimensional stage on which all kernel
computations of this package happen.
"""

from fractions import Fraction
from itertools import combinations

from .poly import SparsePolynomial


class ToricMatrix:
    """Immutable m x n matrix of non-negative integers with nonzero columns.

    Zero rows are allowed (they constrain nothing); a zero column would make
    every fiber infinite and is rejected.
    """

    __slots__ = ("rows",)

    def __init__(self, rows):
        rows = tuple(tuple(int(x) for x in row) for row in rows)
        if not rows:
            raise ValueError("matrix needs at least one row")
        width = len(rows[0])
        if any(len(row) != width for row in rows):
            raise ValueError("ragged matrix")
        if width == 0:
            raise ValueError("matrix needs at least one column")
        for row in rows:
            for x in row:
                if x < 0:
                    raise ValueError("negative entry")
        for j in range(width):
            if all(row[j] == 0 for row in rows):
                raise ValueError(f"zero column at index {j}")
        object.__setattr__(self, "rows", rows)

    def __setattr__(self, name, value):
        raise AttributeError("ToricMatrix is immutable")

    @property
    def m(self):
        return len(self.rows)

    @property
    def n(self):
        return len(self.rows[0])

    def column(self, j):
        return tuple(row[j] for row in self.rows)

    def columns(self):
        return tuple(self.column(j) for j in range(self.n))

    def multidegree(self, vector):
        """Apply the matrix to an integer vector (the grading map)."""
        if len(vector) != self.n:
            raise ValueError(f"vector length {len(vector)} != columns {self.n}")
        return tuple(
            sum(a * x for a, x in zip(row, vector)) for row in self.rows
        )

    def max_column_sum(self):
        return max(sum(self.column(j)) for j in range(self.n))

    def __eq__(self, other):
        return isinstance(other, ToricMatrix) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return f"ToricMatrix({[list(r) for r in self.rows]})"


class Fiber:
    """All monomials of one multidegree, in ascending lexicographic order."""

    __slots__ = ("sigma", "monomials", "_index")

    def __init__(self, sigma, monomials):
        self.sigma = tuple(int(x) for x in sigma)
        self.monomials = tuple(tuple(int(x) for x in b) for b in monomials)
        self._index = {b: i for i, b in enumerate(self.monomials)}

    def __len__(self):
        return len(self.monomials)

    def __iter__(self):
        return iter(self.monomials)

    def __eq__(self, other):
        return (
            isinstance(other, Fiber)
            and self.sigma == other.sigma
            and self.monomials == other.monomials
        )

    def __hash__(self):
        return hash((self.sigma, self.monomials))

    def __repr__(self):
        return f"Fiber(sigma={self.sigma}, size={len(self)})"

    @property
    def n(self):
        if not self.monomials:
            raise ValueError("empty fiber has no ambient dimension")
        return len(self.monomials[0])

    def index(self, exponent):
        try:
            return self._index[tuple(exponent)]
        except KeyError:
            raise KeyError(f"{tuple(exponent)} is not in the fiber of {self.sigma}")

    def coordinate_vector(self, p):
        """Coordinates of a polynomial supported on this fiber."""
        vec = [0] * len(self.monomials)
        for e, c in p.terms():
            vec[self.index(e)] = int(c) if c.denominator == 1 else c
        return tuple(vec)

    def polynomial_from_coordinates(self, coordinates):
        if len(coordinates) != len(self.monomials):
            raise ValueError("coordinate length does not match fiber size")
        n = self.n
        return SparsePolynomial(
            n, {b: c for b, c in zip(self.monomials, coordinates) if c}
        )


def enumerate_fiber(matrix, sigma):
    """Every exponent vector with the given multidegree, by backtracking.

    Variable ``j`` is bounded by ``min_i floor(sigma_i / A[i][j])`` over rows
    with a positive entry in column ``j``; since every column is nonzero the
    search space is finite and the enumeration is complete.  Results appear
    in ascending lexicographic order.
    """
    sigma = tuple(int(x) for x in sigma)
    if len(sigma) != matrix.m:
        raise ValueError(f"sigma length {len(sigma)} != rows {matrix.m}")
    if any(x < 0 for x in sigma):
        raise ValueError("multidegree entries must be non-negative")
    m, n = matrix.m, matrix.n
    cols = matrix.columns()
    # row_support[j][i]: some column >= j has a positive entry in row i
    row_support = [[False] * m for _ in range(n + 1)]
    for j in range(n - 1, -1, -1):
        for i in range(m):
            row_support[j][i] = row_support[j + 1][i] or cols[j][i] > 0

    found = []
    beta = [0] * n

    def extend(j, residual):
        if j == n:
            if all(x == 0 for x in residual):
                found.append(tuple(beta))
            return
        support = row_support[j]
        for i in range(m):
            if residual[i] > 0 and not support[i]:
                return
        col = cols[j]
        bound = min(residual[i] // col[i] for i in range(m) if col[i] > 0)
        for k in range(bound + 1):
            beta[j] = k
            extend(j + 1, [residual[i] - k * col[i] for i in range(m)])
        beta[j] = 0

    extend(0, list(sigma))
    return Fiber(sigma, found)


def _compositions(total, parts):
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def fibers_of_total_degree(matrix, degree):
    """All fibers meeting standard degree ``degree``, in multidegree order.

    Groups the degree-``degree`` monomials by multidegree and re-enumerates
    each resulting fiber in full, so fibers that mix standard degrees (which
    happens only for unequal column sums) still come back complete.
    """
    if degree < 0:
        raise ValueError("degree must be non-negative")
    sigmas = {matrix.multidegree(beta) for beta in _compositions(degree, matrix.n)}
    return [enumerate_fiber(matrix, sigma) for sigma in sorted(sigmas)]


def toric_generators(matrix, degree_bound):
    """Minimal homogeneous generators of the toric ideal up to a degree bound.

    Sweeps degrees ``1..degree_bound``; within each fiber with at least two
    monomials the differences against the lex-last monomial span the
    coefficient-sum-zero space, and a difference is emitted only when it is
    not already a combination of monomial multiples of earlier output.
    Completeness of the result is relative to the supplied bound.
    """
    from .symbolic import symbolic_generators

    return symbolic_generators(matrix, 1, degree_bound)


def default_degree_bound(matrix):
    """Fallback generating-degree bound: twice the largest column sum."""
    return 2 * matrix.max_column_sum()


def incidence_matrix(edges):
    """Vertex-by-edge 0/1 matrix of a simple graph.

    Rows follow sorted vertex labels; columns follow the edges sorted as
    label pairs.  Self-loops and an empty edge set are rejected.
    """
    normalized = set()
    for edge in edges:
        u, v = edge
        if u == v:
            raise ValueError(f"self-loop at {u!r}")
        normalized.add((u, v) if u <= v else (v, u))
    if not normalized:
        raise ValueError("empty edge set")
    columns = sorted(normalized)
    vertices = sorted({v for e in columns for v in e})
    rows = [
        [1 if vertex in edge else 0 for edge in columns] for vertex in vertices
    ]
    return ToricMatrix(rows)
