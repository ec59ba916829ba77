"""Counting nodal curves in a linear system on a fixed surface.

The family here is a projective space Y of curves on a fixed surface S, with
total space S x Y.  Writing c for the class of the line bundle cut out by the
system, K for the canonical class and X for the point class of c_2 of the
cotangent bundle, the node-polynomial classes specialize to v = c + h,
w1 = K, w2 = X, where h is the hyperplane class on Y.  Pushing down to Y
integrates the surface-degree-2 part and keeps the h power, so everything is
controlled by four Chern numbers:

    d = integral of c^2      k = integral of c*K
    s = integral of K^2      x = integral of c_2

For the projective plane with curves of degree m these are m^2, -3m, 9, 3.
The resulting a_q are quadratic polynomials in m, and the Severi degree
N_r(m), the number of degree-m plane curves with exactly r nodes through
m(m+3)/2 - r general points, equals P_r(a_1,...,a_r)/r! whenever r <= 8 and
m >= r/2 + 1.  Outside that range the polynomial is still computed; callers
decide what it means (``plane_validity`` exposes the range test).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from .bell import bell_value
from .exactpoly import Poly, Scalar
from .nodegen import node_polynomials

#: Integrals of the surface-degree-2 monomials c^i K^b X^c, keyed by (b, c)
#: with i = 2 - b - 2c.  Values name the ChernNumbers field that supplies
#: the integral.
_DEGREE2_FIELDS = {(0, 0): "d", (1, 0): "k", (2, 0): "s", (0, 1): "x"}


def _as_poly(value: Poly | Scalar, parameter: str) -> Poly:
    if isinstance(value, Poly):
        return value.in_context((parameter,)) if value.variables != (parameter,) else value
    return Poly.constant(value, (parameter,))


@dataclass(frozen=True)
class ChernNumbers:
    """The four surface invariants, as polynomials in one formal parameter."""

    d: Poly
    k: Poly
    s: Poly
    x: Poly
    parameter: str = "m"

    @classmethod
    def of(
        cls,
        d: Poly | Scalar,
        k: Poly | Scalar,
        s: Poly | Scalar,
        x: Poly | Scalar,
        parameter: str = "m",
    ) -> ChernNumbers:
        return cls(
            d=_as_poly(d, parameter),
            k=_as_poly(k, parameter),
            s=_as_poly(s, parameter),
            x=_as_poly(x, parameter),
            parameter=parameter,
        )

    @classmethod
    def plane(cls, parameter: str = "m") -> ChernNumbers:
        """Degree-m curves in the projective plane: (m^2, -3m, 9, 3)."""
        m = Poly.variable(parameter)
        return cls.of(m * m, -3 * m, 9, 3, parameter)

    def field(self, name: str) -> Poly:
        return {"d": self.d, "k": self.k, "s": self.s, "x": self.x}[name]


def pushforward_monomial(a: int, b: int, c: int, cn: ChernNumbers) -> Poly:
    """Pushforward of v^a * w1^b * w2^c down to Y, as a polynomial in h.

    Expand v = c + h; only the surface-degree-2 part survives integration
    over the fiber, contributing C(a, i) * (integral) * h^(a-i) with
    i = 2 - b - 2c.  Monomials whose w part already exceeds surface degree 2
    push to zero.
    """
    key = (b, c)
    if key not in _DEGREE2_FIELDS:
        return Poly.zero((cn.parameter, "h"))
    i = 2 - b - 2 * c
    if i < 0 or i > a:
        return Poly.zero((cn.parameter, "h"))
    h = Poly.variable("h")
    integral = cn.field(_DEGREE2_FIELDS[key])
    return (comb(a, i) * integral * h ** (a - i)).in_context((cn.parameter, "h"))


def surface_aq(q: int, cn: ChernNumbers) -> Poly:
    """The h^q coefficient of the pushforward of b_q; linear in (d, k, s, x)."""
    if not 1 <= q <= 8:
        raise ValueError(f"q must be in 1..8: {q}")
    bq = node_polynomials().b(q)
    total = Poly.zero((cn.parameter, "h"))
    for exps, coeff in bq.terms.items():
        a, b, c = exps
        total = total + coeff * pushforward_monomial(a, b, c, cn)
    # every surviving monomial of b_q lands in h^q exactly
    scalar = total.coefficient_of("h", q)
    assert total == scalar.in_context((cn.parameter, "h")) * Poly.variable("h") ** q, (
        f"pushforward of b_{q} is not concentrated in h^{q}"
    )
    return scalar


@lru_cache(maxsize=None)
def _plane_aq_cached(q: int, parameter: str) -> Poly:
    return surface_aq(q, ChernNumbers.plane(parameter))


def severi_degree(r: int, cn: ChernNumbers | None = None) -> Poly:
    """The node polynomial N_r as a polynomial in the parameter.

    N_r = P_r(a_1,...,a_r)/r!.  Defaults to the plane.  The polynomial may
    have rational coefficients (N_2 carries a 3/2), but its values at the
    integers in the validity range are the actual curve counts.
    """
    if not 0 <= r <= 8:
        raise ValueError(f"r must be in 0..8: {r}")
    if cn is None:
        cn = ChernNumbers.plane()
    if cn == ChernNumbers.plane(cn.parameter):
        aq = [_plane_aq_cached(q, cn.parameter) for q in range(1, r + 1)]
    else:
        aq = [surface_aq(q, cn) for q in range(1, r + 1)]
    one = Poly.constant(1, (cn.parameter,))
    return bell_value(r, aq, one) / factorial(r)


def plane_count(r: int, m: int) -> Fraction:
    """Value of the plane node polynomial N_r at degree m (exact)."""
    return severi_degree(r).evaluate({"m": m})


def plane_validity(r: int, m: int) -> bool:
    """Whether (r, m) lies in the proven range: r <= 8 and m >= r/2 + 1."""
    return r <= 8 and Fraction(m) >= Fraction(r, 2) + 1
