"""Polynomial rings over exact fields, with homogeneous polynomial arithmetic.

A ring fixes the variable names, the coefficient field and the active
monomial order.  Polynomials are immutable; internally a dict mapping
exponent tuples to nonzero coefficients, exposed as a term list sorted
descending in the active order.
"""

from . import orders
from .fields import QQ
from .orders import DEGREVLEX, order_key


class RingMismatchError(ValueError):
    pass


class PolynomialRing:
    """k[x_1, ..., x_n] with a fixed monomial order."""

    def __init__(self, names, field=QQ, order=DEGREVLEX):
        names = tuple(names)
        if not names:
            raise ValueError("need at least one variable")
        if len(set(names)) != len(names):
            raise ValueError("variable names must be distinct")
        order_key(order)  # validate
        self.names = names
        self.field = field
        self.order = order

    @property
    def n(self):
        return len(self.names)

    @property
    def key(self):
        return order_key(self.order)

    def zero(self):
        return Polynomial(self, {})

    def one(self):
        return self.const(1)

    def const(self, c):
        c = c if not isinstance(c, int) else self.field(c)
        if c == self.field.zero:
            return self.zero()
        return Polynomial(self, {(0,) * self.n: c})

    def gens(self):
        return [self.variable(i) for i in range(self.n)]

    def variable(self, i):
        e = [0] * self.n
        e[i] = 1
        return self.monomial(tuple(e))

    def monomial(self, exps, coeff=1):
        exps = tuple(exps)
        if len(exps) != self.n or any(e < 0 for e in exps):
            raise ValueError("bad exponent vector %r" % (exps,))
        c = self.field(coeff) if isinstance(coeff, int) else coeff
        if c == self.field.zero:
            return self.zero()
        return Polynomial(self, {exps: c})

    def from_terms(self, terms):
        """Build a polynomial from (coeff, exps) pairs, collecting duplicates."""
        coeffs = {}
        zero = self.field.zero
        for c, e in terms:
            e = tuple(e)
            if len(e) != self.n:
                raise ValueError("bad exponent vector %r" % (e,))
            c = self.field(c) if isinstance(c, int) else c
            acc = coeffs.get(e, zero) + c
            if acc == zero:
                coeffs.pop(e, None)
            else:
                coeffs[e] = acc
        return Polynomial(self, coeffs)

    def drop_last(self, i):
        """The subring on the first n-i variables, same field and order."""
        if not 0 <= i <= self.n - 1:
            raise ValueError("cannot drop %d of %d variables" % (i, self.n))
        if i == 0:
            return self
        return PolynomialRing(self.names[: self.n - i], self.field, self.order)

    def format_monomial(self, exps):
        if not any(exps):
            return "1"
        parts = []
        for name, e in zip(self.names, exps):
            if e == 1:
                parts.append(name)
            elif e > 1:
                parts.append("%s^%d" % (name, e))
        return "*".join(parts)

    def __eq__(self, other):
        return (
            isinstance(other, PolynomialRing)
            and self.names == other.names
            and self.field == other.field
            and self.order == other.order
        )

    def __hash__(self):
        return hash((self.names, self.field, self.order))

    def __repr__(self):
        return "%s[%s]" % (self.field.name, ", ".join(self.names))


def _check_same_ring(f, g):
    if f.ring != g.ring:
        raise RingMismatchError("polynomials from different rings")


class Polynomial:
    """An element of a PolynomialRing; immutable."""

    __slots__ = ("ring", "coeffs", "_terms")

    def __init__(self, ring, coeffs):
        self.ring = ring
        self.coeffs = coeffs
        self._terms = None

    @property
    def terms(self):
        """Terms (coeff, exps) sorted descending in the ring's order."""
        if self._terms is None:
            key = self.ring.key
            self._terms = tuple(
                (self.coeffs[e], e)
                for e in sorted(self.coeffs, key=key, reverse=True)
            )
        return self._terms

    def is_zero(self):
        return not self.coeffs

    def leading_term(self):
        if not self.coeffs:
            raise ValueError("the zero polynomial has no leading term")
        e = max(self.coeffs, key=self.ring.key)
        return self.coeffs[e], e

    def leading_monomial(self):
        return self.leading_term()[1]

    def leading_coeff(self):
        return self.leading_term()[0]

    def degree(self):
        """Total degree; -1 for the zero polynomial."""
        if not self.coeffs:
            return -1
        return max(sum(e) for e in self.coeffs)

    def is_homogeneous(self):
        """Return (True, d) if all terms have total degree d, else (False, None).

        The zero polynomial is homogeneous of every degree; reported as
        (True, None).
        """
        degs = {sum(e) for e in self.coeffs}
        if not degs:
            return True, None
        if len(degs) == 1:
            return True, degs.pop()
        return False, None

    def __add__(self, other):
        _check_same_ring(self, other)
        zero = self.ring.field.zero
        coeffs = dict(self.coeffs)
        for e, c in other.coeffs.items():
            acc = coeffs.get(e, zero) + c
            if acc == zero:
                coeffs.pop(e, None)
            else:
                coeffs[e] = acc
        return Polynomial(self.ring, coeffs)

    def __neg__(self):
        return Polynomial(self.ring, {e: -c for e, c in self.coeffs.items()})

    def __sub__(self, other):
        _check_same_ring(self, other)
        zero = self.ring.field.zero
        coeffs = dict(self.coeffs)
        for e, c in other.coeffs.items():
            acc = coeffs.get(e, zero) - c
            if acc == zero:
                coeffs.pop(e, None)
            else:
                coeffs[e] = acc
        return Polynomial(self.ring, coeffs)

    def __mul__(self, other):
        _check_same_ring(self, other)
        zero = self.ring.field.zero
        coeffs = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                acc = coeffs.get(e, zero) + c1 * c2
                if acc == zero:
                    coeffs.pop(e, None)
                else:
                    coeffs[e] = acc
        return Polynomial(self.ring, coeffs)

    def scale(self, c):
        """Multiply by a scalar."""
        c = self.ring.field(c) if isinstance(c, int) else c
        if c == self.ring.field.zero:
            return self.ring.zero()
        return Polynomial(self.ring, {e: k * c for e, k in self.coeffs.items()})

    def mul_term(self, c, exps):
        """Multiply by the term c * x^exps."""
        if c == self.ring.field.zero:
            return self.ring.zero()
        return Polynomial(
            self.ring,
            {tuple(a + b for a, b in zip(e, exps)): k * c for e, k in self.coeffs.items()},
        )

    def monic(self):
        if not self.coeffs:
            return self
        lc = self.leading_coeff()
        one = self.ring.field.one
        if lc == one:
            return self
        return self.scale(one / lc)

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ring == other.ring and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.ring, frozenset(self.coeffs.items())))

    def __str__(self):
        if not self.coeffs:
            return "0"
        ring = self.ring
        field = ring.field
        out = []
        for c, e in self.terms:
            mono = ring.format_monomial(e)
            neg = _is_negative(c)
            mag = field.format(-c if neg else c)
            if mono == "1":
                body = mag
            elif mag == "1":
                body = mono
            else:
                body = "%s*%s" % (mag, mono)
            if not out:
                out.append("-" + body if neg else body)
            else:
                out.append(("- " if neg else "+ ") + body)
        return " ".join(out)

    __repr__ = __str__


def _is_negative(c):
    try:
        return c < 0
    except TypeError:
        return False  # GF(p) residues carry no sign


def matrix_is_invertible(field, rows):
    """Exact invertibility test of a square matrix over the field."""
    n = len(rows)
    m = [[field(v) if isinstance(v, int) else v for v in row] for row in rows]
    if any(len(row) != n for row in m):
        raise ValueError("matrix is not square")
    zero = field.zero
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col] != zero), None)
        if piv is None:
            return False
        m[col], m[piv] = m[piv], m[col]
        inv = field.one / m[col][col]
        for r in range(col + 1, n):
            if m[r][col] != zero:
                factor = m[r][col] * inv
                m[r] = [a - factor * b for a, b in zip(m[r], m[col])]
    return True


def apply_linear_change(f, rows):
    """Substitute x_j -> (row j of the matrix) . (x_1, ..., x_n).

    The matrix must be invertible over the coefficient field; degree and
    homogeneity are preserved.
    """
    ring = f.ring
    n = ring.n
    if len(rows) != n or any(len(r) != n for r in rows):
        raise ValueError("matrix must be %d x %d" % (n, n))
    if not matrix_is_invertible(ring.field, rows):
        raise ValueError("singular change of coordinates")
    images = [
        ring.from_terms((c, _unit(n, j)) for j, c in enumerate(row))
        for row in rows
    ]
    # cache powers of each variable image
    powers = [{0: ring.one()} for _ in range(n)]

    def power(i, e):
        cache = powers[i]
        if e not in cache:
            cache[e] = power(i, e - 1) * images[i]
        return cache[e]

    result = ring.zero()
    for c, exps in f.terms:
        term = ring.const(1).scale(c)
        for i, e in enumerate(exps):
            if e:
                term = term * power(i, e)
        result = result + term
    return result


def _unit(n, j):
    e = [0] * n
    e[j] = 1
    return tuple(e)
