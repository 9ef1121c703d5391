"""Sparse multivariate polynomials over exact rationals.

Monomials are exponent tuples ``e = (e_1, ..., e_n)`` of non-negative ints;
a polynomial is a finite map from exponent tuples to nonzero Fractions.
Terms are kept in no particular order internally; every serialization and
rendering walks them in descending lexicographic exponent order (leading
term first).
"""

from dataclasses import dataclass
from fractions import Fraction


def _checked_exponent(exponent, n):
    e = tuple(int(x) for x in exponent)
    if len(e) != n:
        raise ValueError(f"exponent length {len(e)} != ambient {n}")
    if any(x < 0 for x in e):
        raise ValueError("negative exponent")
    return e


class SparsePolynomial:
    """Immutable sparse polynomial in ``n`` variables over Q."""

    __slots__ = ("n", "_terms")

    def __init__(self, n, terms=None):
        self.n = int(n)
        clean = {}
        if terms:
            for exponent, coeff in dict(terms).items():
                c = Fraction(coeff)
                if c:
                    clean[_checked_exponent(exponent, self.n)] = c
        self._terms = clean

    @classmethod
    def zero(cls, n):
        return cls(n)

    @classmethod
    def monomial(cls, exponent, coeff=1):
        return cls(len(tuple(exponent)), {tuple(exponent): coeff})

    def terms(self):
        """Pairs ``(exponent, coefficient)`` in descending lex order."""
        return [(e, self._terms[e]) for e in sorted(self._terms, reverse=True)]

    def support(self):
        return sorted(self._terms, reverse=True)

    def coefficient(self, exponent):
        return self._terms.get(tuple(exponent), Fraction(0))

    def coefficient_sum(self):
        return sum(self._terms.values(), Fraction(0))

    def total_degree(self):
        if not self._terms:
            raise ValueError("degree of the zero polynomial is undefined")
        return max(sum(e) for e in self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def __eq__(self, other):
        if not isinstance(other, SparsePolynomial):
            return NotImplemented
        return self.n == other.n and self._terms == other._terms

    def __hash__(self):
        return hash((self.n, frozenset(self._terms.items())))

    def _require_same_ambient(self, other):
        if self.n != other.n:
            raise ValueError(f"ambient mismatch: {self.n} vs {other.n}")

    def __add__(self, other):
        if not isinstance(other, SparsePolynomial):
            return NotImplemented
        self._require_same_ambient(other)
        terms = dict(self._terms)
        for e, c in other._terms.items():
            terms[e] = terms.get(e, Fraction(0)) + c
        return SparsePolynomial(self.n, terms)

    def __neg__(self):
        return SparsePolynomial(self.n, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        if not isinstance(other, SparsePolynomial):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, SparsePolynomial):
            self._require_same_ambient(other)
            terms = {}
            for e1, c1 in self._terms.items():
                for e2, c2 in other._terms.items():
                    e = tuple(a + b for a, b in zip(e1, e2))
                    terms[e] = terms.get(e, Fraction(0)) + c1 * c2
            return SparsePolynomial(self.n, terms)
        if isinstance(other, (int, Fraction)):
            return SparsePolynomial(
                self.n, {e: c * other for e, c in self._terms.items()}
            )
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = SparsePolynomial(self.n, {(0,) * self.n: 1})
        for _ in range(k):
            result = result * self
        return result

    def shift(self, exponent):
        """Multiply by the monomial with the given exponent."""
        e0 = _checked_exponent(exponent, self.n)
        return SparsePolynomial(
            self.n,
            {tuple(a + b for a, b in zip(e, e0)): c for e, c in self._terms.items()},
        )

    def __repr__(self):
        return f"SparsePolynomial({self.n}, {format_polynomial(self)!r})"

    def __str__(self):
        return format_polynomial(self)


def format_monomial(exponent, variable_prefix="e"):
    parts = []
    for i, p in enumerate(exponent):
        if p == 1:
            parts.append(f"{variable_prefix}{i + 1}")
        elif p > 1:
            parts.append(f"{variable_prefix}{i + 1}^{p}")
    return "*".join(parts) if parts else "1"


def format_polynomial(p, variable_prefix="e"):
    """Signed-monomial rendering, leading (lex-largest) term first."""
    if not p:
        return "0"
    pieces = []
    for exponent, coeff in p.terms():
        mono = format_monomial(exponent, variable_prefix)
        mag = abs(coeff)
        if mono == "1":
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}*{mono}"
        if not pieces:
            pieces.append(body if coeff > 0 else f"-{body}")
        else:
            pieces.append(f"+ {body}" if coeff > 0 else f"- {body}")
    return " ".join(pieces)


def polynomial_to_json_dict(p):
    """JSON form: {"n": int, "terms": [{"c": str, "e": [int, ...]}, ...]}."""
    return {
        "n": p.n,
        "terms": [{"c": str(c), "e": list(e)} for e, c in p.terms()],
    }


def polynomial_from_json_dict(data):
    return SparsePolynomial(
        data["n"], {tuple(t["e"]): Fraction(t["c"]) for t in data["terms"]}
    )


def partial_derivative(p, j):
    """Formal partial derivative with respect to variable index ``j`` (0-based)."""
    if not 0 <= j < p.n:
        raise IndexError(f"variable index {j} out of range for ambient {p.n}")
    terms = {}
    for e, c in p._terms.items():
        if e[j] == 0:
            continue
        shifted = e[:j] + (e[j] - 1,) + e[j + 1:]
        terms[shifted] = terms.get(shifted, Fraction(0)) + c * e[j]
    return SparsePolynomial(p.n, terms)


def fiber_components(p, matrix):
    """Split a polynomial into its multidegree-homogeneous components.

    Terms are grouped by the multidegree ``matrix @ exponent``; the pieces
    sum back to ``p``, and ``p`` is homogeneous for the matrix grading
    exactly when at most one piece comes back.  Components are listed in
    ascending multidegree order.
    """
    if p.n != matrix.n:
        raise ValueError(f"ambient mismatch: polynomial {p.n}, matrix {matrix.n}")
    buckets = {}
    for e, c in p._terms.items():
        buckets.setdefault(matrix.multidegree(e), {})[e] = c
    return [
        (sigma, SparsePolynomial(p.n, terms))
        for sigma, terms in sorted(buckets.items())
    ]


def positive_part(u):
    return tuple(x if x > 0 else 0 for x in u)


def negative_part(u):
    return tuple(-x if x < 0 else 0 for x in u)


@dataclass(frozen=True)
class LatticeBinomial:
    """Integer vector ``u`` with its binomial ``e^{u+} - e^{u-}``."""

    u: tuple

    def __post_init__(self):
        object.__setattr__(self, "u", tuple(int(x) for x in self.u))

    @property
    def n(self):
        return len(self.u)

    @property
    def u_plus(self):
        return positive_part(self.u)

    @property
    def u_minus(self):
        return negative_part(self.u)

    def polynomial(self):
        return SparsePolynomial(self.n, {self.u_plus: 1}) - SparsePolynomial(
            self.n, {self.u_minus: 1}
        )

    def scaled(self, factor):
        return LatticeBinomial(tuple(factor * x for x in self.u))


def lattice_multiple_cofactor(u, factor):
    """Polynomial ``g`` with ``f_{factor*u} = g * f_u``.

    The telescoping cofactor ``sgn(factor) * sum_i e^{i*u+ + (k-1-i)*u-}``
    for ``k = |factor|``; the zero factor yields the zero polynomial.
    """
    u = tuple(int(x) for x in u)
    n = len(u)
    k = abs(factor)
    if k == 0:
        return SparsePolynomial.zero(n)
    sign = 1 if factor > 0 else -1
    up, um = positive_part(u), negative_part(u)
    terms = {}
    for i in range(k):
        e = tuple(i * a + (k - 1 - i) * b for a, b in zip(up, um))
        terms[e] = terms.get(e, 0) + sign
    return SparsePolynomial(n, terms)


def rewrite_monomial_multiple(u, basis, coefficients):
    """Express a monomial multiple of ``f_u`` over basis binomials.

    Given ``u = sum_i coefficients[i] * basis[i].u`` (validated), returns
    ``(alpha, pieces)`` with ``pieces = [(beta_i, v_i), ...]`` such that

        e^alpha * f_u == sum_i e^{beta_i} * f_{v_i}

    holds as an exact polynomial identity, where ``v_i`` is the i-th basis
    vector scaled by its coefficient.  Zero coefficients are dropped from
    the output.
    """
    u = tuple(int(x) for x in u)
    if len(basis) != len(coefficients):
        raise ValueError("one coefficient per basis vector required")
    scaled = [b.scaled(c) for b, c in zip(basis, coefficients)]
    combined = [0] * len(u)
    for b in scaled:
        if b.n != len(u):
            raise ValueError("basis vector length mismatch")
        combined = [a + x for a, x in zip(combined, b.u)]
    if tuple(combined) != u:
        raise ValueError("coefficients do not express u over the basis")
    sum_plus = [0] * len(u)
    for b in scaled:
        sum_plus = [a + x for a, x in zip(sum_plus, b.u_plus)]
    alpha = tuple(a - x for a, x in zip(sum_plus, positive_part(u)))
    pieces = []
    for j, b in enumerate(scaled):
        if all(x == 0 for x in b.u):
            continue
        beta = [0] * len(u)
        for i, other in enumerate(scaled):
            if i < j:
                beta = [a + x for a, x in zip(beta, other.u_minus)]
            elif i > j:
                beta = [a + x for a, x in zip(beta, other.u_plus)]
        pieces.append((tuple(beta), b))
    return alpha, pieces
