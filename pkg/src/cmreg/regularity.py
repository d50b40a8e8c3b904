"""Regularity and a*-invariants of homogeneous ideals.

The main route computes the substitution invariants c_i of the initial
ideal under degrevlex: c_i is the top degree of the quotient of the
ideal obtained by setting the last i variables to 0 and then the next
variable to 1.  Then

    reg_t(R/I)  = max{c_i : i <= t}         (all c_i finite)
    a*_t(R/I)   = max{c_i - i : i <= t}

and the ideal-side values are shifted by one in reg.  A +inf value of
some c_i means the variable sequence fails filter-regularity there; a
random change of coordinates repairs it.

The second route computes the generic initial ideal Gin(I) by Monte
Carlo (two agreeing random coordinate changes plus a Borel-fixedness
certificate) and reads the invariants off the degrees and top variable
indices of Min(Gin).
"""

import random
from dataclasses import dataclass
from typing import Optional

from .groebner import Ideal, initial_ideal, reduced_groebner_basis
from .monomial_ideals import (
    NEG_INF,
    POS_INF,
    MonomialIdeal,
    is_borel_fixed,
    krull_dimension,
    m_index,
    quotient_top_degree,
)
from .rings import apply_linear_change, matrix_is_invertible


class FilterRegularityFailure(Exception):
    """Some c_i = +inf: variable i fails filter-regularity."""

    def __init__(self, index):
        self.index = index
        super().__init__(
            "filter-regularity fails at substitution index %d (c_%d = +inf)"
            % (index, index)
        )


class CharacteristicError(ValueError):
    """A characteristic-0-only method was requested over a prime field."""


class GinAgreementError(RuntimeError):
    """Random draws did not stabilize within the draw cap."""

    def __init__(self, candidates, draws):
        self.candidates = candidates
        self.draws = draws
        super().__init__(
            "no two of %d random draws agreed on a Borel-fixed initial ideal; "
            "candidates: %s" % (draws, candidates)
        )


@dataclass
class GinResult:
    gin: MonomialIdeal
    draws_agreed: int
    borel_certified: bool
    matrices_seed: int
    draws_total: int


@dataclass
class RegularityReport:
    t: int
    c: tuple
    reg_ideal: object
    astar_ideal: object
    reg_quotient: object
    astar_quotient: object
    dim_quotient: int
    method: str
    initial_ideal: Optional[MonomialIdeal] = None
    gin: Optional[GinResult] = None
    seed: Optional[int] = None
    generic_retries: int = 0

    @property
    def is_full(self):
        return self.t >= self.dim_quotient


def _initial_of(I):
    """in(I) under the ring's order, for an Ideal or a MonomialIdeal."""
    if isinstance(I, MonomialIdeal):
        return I
    gb = reduced_groebner_basis(I)
    return initial_ideal(gb, I.ring)


def c_invariants(I, t):
    """The substitution invariants c_0, ..., c_t of in(I).

    Indices run up to n; the index-n entry is the degree-0 contribution
    of the residue field (0 for every proper ideal), which closes the
    list so that t = dim(R/I) always yields the full invariants.
    """
    J = _initial_of(I)
    n = J.n
    if not 0 <= t <= n:
        raise ValueError("t must be in [0, %d]" % n)
    if J.is_unit():
        raise ValueError("the unit ideal has no regularity invariants")
    values = []
    for i in range(min(t, n - 1) + 1):
        J_i = J.set_vars_zero(i)
        J_tilde = J_i.set_var_one()
        values.append(quotient_top_degree(J_i, J_tilde))
    if t == n:
        values.append(0)
    return values


def invariants_from_c(c_values, t, nonzero_ideal=True):
    """Partial invariants from a c-list; raises on a +inf entry."""
    window = c_values[: t + 1]
    for i, v in enumerate(window):
        if v == POS_INF:
            raise FilterRegularityFailure(i)
    reg_q = max(window, default=NEG_INF)
    astar_q = max((v - i for i, v in enumerate(window)), default=NEG_INF)
    if nonzero_ideal:
        return reg_q + 1, astar_q, reg_q, astar_q
    return NEG_INF, NEG_INF, reg_q, astar_q


def partial_invariants(I, t):
    """(reg_t(I), a*_t(I), reg_t(R/I), a*_t(R/I)) by the c-invariant route."""
    c = c_invariants(I, t)
    return invariants_from_c(c, t, nonzero_ideal=not I.is_zero())


def random_invertible_matrix(rng, n, field, bound=1000):
    """A random integer matrix, redrawn until invertible over the field."""
    while True:
        rows = [[rng.randint(-bound, bound) for _ in range(n)] for _ in range(n)]
        if matrix_is_invertible(field, rows):
            return rows


def transform_ideal(I, rows):
    """Apply an invertible linear change of coordinates to every generator."""
    return Ideal(I.ring, [apply_linear_change(g, rows) for g in I.generators])


def full_invariants(I, use_generic=True, seed=0, t=None, bound=1000, retry_cap=5):
    """Regularity report for a proper homogeneous ideal.

    Computes c-invariants at t = dim(R/I) (where the maxima stabilize,
    so the values are the full reg and a*).  On filter-regularity
    failure, retries in random coordinates when use_generic is set; reg
    and a* are coordinate-invariant, so the retried values are faithful.
    """
    J0 = _initial_of(I)
    if J0.is_unit():
        raise ValueError("the unit ideal has no regularity invariants")
    dim = krull_dimension(J0)
    t_eff = dim if t is None else t
    nonzero = bool(J0.gens)
    if isinstance(I, MonomialIdeal):
        ring = I.ring
        I = Ideal(ring, [ring.monomial(g) for g in I.gens])
    rng = random.Random(seed)
    current = I
    retries = 0
    while True:
        c = tuple(c_invariants(current, t_eff))
        try:
            reg_i, astar_i, reg_q, astar_q = invariants_from_c(
                c, t_eff, nonzero_ideal=nonzero
            )
            break
        except FilterRegularityFailure:
            if not use_generic or retries >= retry_cap:
                raise
            retries += 1
            m = random_invertible_matrix(rng, I.ring.n, I.ring.field, bound)
            current = transform_ideal(I, m)
    return RegularityReport(
        t=t_eff,
        c=c,
        reg_ideal=reg_i,
        astar_ideal=astar_i,
        reg_quotient=reg_q,
        astar_quotient=astar_q,
        dim_quotient=dim,
        method="c",
        initial_ideal=J0,
        seed=seed,
        generic_retries=retries,
    )


def generic_initial_ideal(I, seed=0, bound=1000, draw_cap=8):
    """Gin(I) by Monte Carlo: accept when two independent random
    coordinate changes give the same initial ideal and it is Borel-fixed."""
    if isinstance(I, MonomialIdeal):
        ring = I.ring
        I = Ideal(ring, [ring.monomial(g) for g in I.gens])
    ring = I.ring
    if ring.field.characteristic != 0:
        raise CharacteristicError(
            "generic initial ideals require characteristic 0"
        )
    rng = random.Random(seed)
    seen = {}
    draws = 0
    while draws < draw_cap:
        m = random_invertible_matrix(rng, ring.n, ring.field, bound)
        J = _initial_of(transform_ideal(I, m))
        draws += 1
        seen[J] = seen.get(J, 0) + 1
        if seen[J] >= 2 and is_borel_fixed(J):
            return GinResult(
                gin=J,
                draws_agreed=seen[J],
                borel_certified=True,
                matrices_seed=seed,
                draws_total=draws,
            )
    raise GinAgreementError(list(seen), draws)


def invariants_via_gin(I, t=None, seed=0, bound=1000, draw_cap=8):
    """Regularity report read off the minimal generators of Gin(I).

    c_i = max{deg x^A : x^A in Min(Gin), m(x^A) = n - i} - 1, so that
    reg_t(I) is the largest generator degree over m(x^A) >= n - t and
    a*_t(I) the largest deg + m over the same range, shifted by n + 1.
    """
    result = generic_initial_ideal(I, seed=seed, bound=bound, draw_cap=draw_cap)
    gin = result.gin
    n = gin.n
    t_eff = n if t is None else t
    if not 0 <= t_eff <= n:
        raise ValueError("t must be in [0, %d]" % n)
    c = []
    for i in range(min(t_eff, n - 1) + 1):
        degs = [sum(g) for g in gin.gens if m_index(g) == n - i]
        c.append(max(degs) - 1 if degs else NEG_INF)
    if t_eff == n:
        c.append(0)
    nonzero = bool(gin.gens)
    reg_i, astar_i, reg_q, astar_q = invariants_from_c(
        c, t_eff, nonzero_ideal=nonzero
    )
    return RegularityReport(
        t=t_eff,
        c=tuple(c),
        reg_ideal=reg_i,
        astar_ideal=astar_i,
        reg_quotient=reg_q,
        astar_quotient=astar_q,
        dim_quotient=krull_dimension(gin),
        method="gin",
        gin=result,
        seed=seed,
    )
