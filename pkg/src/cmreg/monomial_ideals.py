"""Monomial ideal combinatorics.

Minimal generating sets, variable substitutions x_i = 0 or 1, Hilbert
series numerators N(t) with HS(S/J) = N(t)/(1-t)^n, top degrees of
ideal quotients, Krull dimension and the Borel-fixedness test.

Extended integers use the floats -inf/+inf alongside Python ints; the
conventions -inf < k < +inf and -inf + k = -inf come for free.
"""

from .orders import m_index, mono_divides

NEG_INF = float("-inf")
POS_INF = float("inf")

__all__ = [
    "NEG_INF",
    "POS_INF",
    "MonomialIdeal",
    "minimalize",
    "hilbert_numerator",
    "quotient_top_degree",
    "krull_dimension",
    "is_borel_fixed",
    "m_index",
    "divide_by_one_minus_t",
    "hilbert_function",
    "hilbert_polynomial_value",
    "standard_monomials",
]


def minimalize(gens):
    """Divisibility-minimal antichain generating the same monomial ideal."""
    gens = sorted(set(tuple(g) for g in gens), key=sum)
    minimal = []
    for g in gens:
        if not any(mono_divides(m, g) for m in minimal):
            minimal.append(g)
    return minimal


class MonomialIdeal:
    """A monomial ideal by its minimal generators, canonically sorted."""

    __slots__ = ("ring", "gens")

    def __init__(self, ring, gens):
        # gens assumed already minimal; use from_generators otherwise
        self.ring = ring
        self.gens = tuple(sorted(gens, key=ring.key, reverse=True))

    @classmethod
    def from_generators(cls, ring, gens):
        gens = [tuple(g) for g in gens]
        for g in gens:
            if len(g) != ring.n or any(e < 0 for e in g):
                raise ValueError("bad exponent vector %r" % (g,))
        return cls(ring, minimalize(gens))

    @property
    def n(self):
        return self.ring.n

    def is_zero(self):
        return not self.gens

    def is_unit(self):
        return len(self.gens) == 1 and not any(self.gens[0])

    def contains(self, mono):
        """True iff some minimal generator divides the monomial."""
        mono = tuple(mono)
        if len(mono) != self.n:
            raise ValueError("monomial from a different ring")
        return any(mono_divides(g, mono) for g in self.gens)

    def max_generator_degree(self):
        """d(J): the largest degree of a minimal generator; -inf if J = 0."""
        if not self.gens:
            return NEG_INF
        return max(sum(g) for g in self.gens)

    def set_vars_zero(self, i):
        """Substitute the last i variables by 0; result lives in n-i variables."""
        if not 0 <= i <= self.n - 1:
            raise ValueError("i must be in [0, %d]" % (self.n - 1))
        if i == 0:
            return self
        keep = self.n - i
        survivors = [g[:keep] for g in self.gens if not any(g[keep:])]
        return MonomialIdeal.from_generators(self.ring.drop_last(i), survivors)

    def set_var_one(self):
        """Substitute the last variable by 1; same ring, may become the unit ideal."""
        gens = [g[:-1] + (0,) for g in self.gens]
        return MonomialIdeal.from_generators(self.ring, gens)

    def __eq__(self, other):
        if not isinstance(other, MonomialIdeal):
            return NotImplemented
        return self.ring == other.ring and self.gens == other.gens

    def __hash__(self):
        return hash((self.ring, self.gens))

    def __repr__(self):
        if not self.gens:
            return "(0)"
        return "(%s)" % ", ".join(self.ring.format_monomial(g) for g in self.gens)


# ---------------------------------------------------------------------------
# univariate integer polynomials in t, as coefficient lists


def _trim(p):
    while p and p[-1] == 0:
        p.pop()
    return p


def _padd(p, q):
    out = [0] * max(len(p), len(q))
    for i, c in enumerate(p):
        out[i] += c
    for i, c in enumerate(q):
        out[i] += c
    return _trim(out)


def _psub(p, q):
    return _padd(p, [-c for c in q])


def _pshift(p, k):
    return [0] * k + list(p) if p else []


def poly_degree(p):
    return len(p) - 1 if p else NEG_INF


def divide_by_one_minus_t(p):
    """Return q with p = (1-t) q, or None if (1-t) does not divide p."""
    if not p:
        return []
    q = []
    acc = 0
    for c in p[:-1]:
        acc += c
        q.append(acc)
    if acc + p[-1] != 0:
        return None
    return _trim(q)


def hilbert_numerator(J):
    """Coefficients of N(t) with HS(S/J) = N(t)/(1-t)^n.

    Pivot recursion N(J) = N(J + (p)) + t N(J : p) on a most-frequent
    variable p, with memoization on the minimal generator sets.
    """
    memo = {}

    def recurse(gens):
        key = frozenset(gens)
        hit = memo.get(key)
        if hit is not None:
            return hit
        result = _numerator(gens, recurse)
        memo[key] = result
        return result

    return recurse(tuple(J.gens))


def _numerator(gens, recurse):
    if not gens:
        return [1]
    if any(not any(g) for g in gens):
        return []  # unit ideal
    if len(gens) == 1:
        n_t = [1]
        return _psub(n_t, _pshift([1], sum(gens[0])))
    nvars = len(gens[0])
    # pure-power base case: every generator involves a single variable
    if all(sum(1 for e in g if e > 0) == 1 for g in gens):
        out = [1]
        for g in gens:
            out = _psub(out, _pshift(out, sum(g)))
        return out
    # pivot among variables of mixed generators only, so both branches shrink
    mixed_support = {
        i
        for g in gens
        if sum(1 for e in g if e > 0) >= 2
        for i in range(nvars)
        if g[i] > 0
    }
    counts = {i: sum(1 for g in gens if g[i] > 0) for i in mixed_support}
    pivot = max(mixed_support, key=lambda i: (counts[i], -i))
    p = tuple(1 if i == pivot else 0 for i in range(nvars))
    plus = minimalize([g for g in gens if g[pivot] == 0] + [p])
    colon = minimalize(
        [g[:pivot] + (g[pivot] - 1,) + g[pivot + 1 :] if g[pivot] > 0 else g for g in gens]
    )
    return _padd(recurse(tuple(plus)), _pshift(recurse(tuple(colon)), 1))


def quotient_top_degree(J_sub, J_sup):
    """Top nonzero degree of J_sup/J_sub, i.e. a(J_sup/J_sub).

    Requires J_sub contained in J_sup.  Returns -inf when the ideals are
    equal, +inf when the quotient has infinitely many nonzero graded
    pieces, and the exact top degree otherwise.
    """
    if J_sub.ring != J_sup.ring:
        raise ValueError("ideals from different rings")
    for g in J_sub.gens:
        if not J_sup.contains(g):
            raise ValueError("containment J_sub <= J_sup violated")
    diff = _psub(hilbert_numerator(J_sub), hilbert_numerator(J_sup))
    if not diff:
        return NEG_INF
    for _ in range(J_sub.n):
        diff = divide_by_one_minus_t(diff)
        if diff is None:
            return POS_INF
    return poly_degree(diff)


def krull_dimension(J):
    """dim(S/J) = n minus the multiplicity of t = 1 in the numerator."""
    if J.is_unit():
        return -1  # the zero ring, by convention
    num = hilbert_numerator(J)
    mult = 0
    while True:
        q = divide_by_one_minus_t(num)
        if q is None:
            break
        num = q
        mult += 1
        if not num:
            break
    return J.n - mult


def is_borel_fixed(J, check_characteristic=True):
    """Single-step exchange criterion for Borel-fixedness (char 0 only).

    True iff for every minimal generator x^A, every j with A_j > 0 and
    every i < j, the exchange x^A x_i / x_j stays in J.
    """
    if check_characteristic and J.ring.field.characteristic != 0:
        raise ValueError("Borel-fixedness criterion requires characteristic 0")
    for g in J.gens:
        for j in range(J.n):
            if g[j] == 0:
                continue
            for i in range(j):
                swapped = list(g)
                swapped[j] -= 1
                swapped[i] += 1
                if not J.contains(tuple(swapped)):
                    return False
    return True


# ---------------------------------------------------------------------------
# Hilbert function and polynomial from the numerator


def _binom_poly(a, k):
    """binomial(a, k) as the polynomial a(a-1)...(a-k+1)/k!, any integer a."""
    if k == 0:
        return 1
    num = 1
    for i in range(k):
        num *= a - i
    den = 1
    for i in range(2, k + 1):
        den *= i
    return num // den if num % den == 0 else num / den


def hilbert_function(J, m):
    """dim of the degree-m piece of S/J (coefficient of t^m in N/(1-t)^n)."""
    if m < 0:
        return 0
    num = hilbert_numerator(J)
    n = J.n
    total = 0
    for j, c in enumerate(num):
        if j <= m:
            total += c * _binom_poly(m - j + n - 1, n - 1)
    return total

def hilbert_polynomial_value(J, m):
    """Value at m of the Hilbert polynomial of S/J."""
    num = hilbert_numerator(J)
    n = J.n
    # strip the full power of (1-t): N = (1-t)^(n-d) * reduced numerator
    reduced = list(num)
    d = n
    while True:
        q = divide_by_one_minus_t(reduced)
        if q is None:
            break
        reduced = q
        d -= 1
        if not reduced:
            break
    if d <= 0 or not reduced:
        return 0
    total = 0
    for j, c in enumerate(reduced):
        total += c * _binom_poly(m - j + d - 1, d - 1)
    return total


def standard_monomials(J, degree):
    """All degree-d monomials outside J (exponent tuples)."""
    out = []
    for exps in _compositions(degree, J.n):
        if not J.contains(exps):
            out.append(exps)
    return out


def _compositions(total, parts):
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest
