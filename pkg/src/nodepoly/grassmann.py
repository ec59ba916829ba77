"""Counting nodal plane curves on a threefold in four-space.

Here the family base Y is the Grassmannian of 2-planes in P^4 and the total
space is the tautological plane bundle over it.  A general degree-m threefold
cuts each plane in a degree-m curve, and the classes feeding the node
polynomials are

    v  = m*f        w1 = q1 - 3*f        w2 = q2 - 2*f*q1 + 3*f^2

where f is the pulled-back hyperplane class of P^4 and q1, q2 are the Chern
classes of the tautological quotient bundle.  On the bundle f^j = 0 for
j > 4, and integration over the fibers sends

    f^0, f^1 -> 0      f^2 -> 1      f^3 -> q1      f^4 -> q1^2 - q2

Classes on the Grassmannian are kept as free polynomials in q1, q2 with no
relation reduction; the only quotient-ring input needed is the table of
degree-6 integrals

    q1^6 -> 5      q1^4*q2 -> 3      q1^2*q2^2 -> 2      q2^3 -> 1

and every integration call sees only those four monomials.

The main outputs: the degree-18 polynomial in m counting 6-nodal plane
curves on a general degree-m threefold (valid for m >= 4); the degree-9
polynomial counting 3-nodal plane curves whose plane meets three general
lines; and the count of irreducible 6-nodal plane quintics on a general
quintic threefold, obtained by subtracting the reducible ones (conic+cubic
pairs, and line+binodal-quartic pairs counted via a Schubert-restricted run
of the same machinery).
"""

from __future__ import annotations

from functools import lru_cache
from math import factorial
from typing import Any

from .bell import bell_value
from .exactpoly import Poly, Scalar, evaluate_in
from .nodegen import node_polynomials

#: Fiber classes live in this context; m is the threefold degree parameter.
_FIBER_CONTEXT = ("m", "f", "q1", "q2")

#: Degree-6 integrals on the Grassmannian of 2-planes in P^4 (q1 has degree
#: 1 and q2 degree 2); exponents keyed as (e_q1, e_q2).
DEGREE6_INTEGRALS = {(6, 0): 5, (4, 1): 3, (2, 2): 2, (0, 3): 1}

#: Classical counts on a general quintic threefold, used as imported
#: constants by the irreducible-quintic pipeline.
SMOOTH_CONICS_ON_QUINTIC = 609250
LINES_ON_QUINTIC = 2875


def _truncate_f(poly: Poly) -> Poly:
    if "f" not in poly.variables:
        return poly
    i = poly.variables.index("f")
    kept = {exps: c for exps, c in poly.terms.items() if exps[i] <= 4}
    return Poly(poly.variables, kept)


class FiberClass:
    """A class on the tautological plane bundle: a polynomial in f, q1, q2.

    The fiber relation f^j = 0 for j > 4 is applied eagerly after every
    construction and product, so intermediate degrees stay bounded.
    """

    __slots__ = ("poly",)

    def __init__(self, poly: Poly | Scalar):
        if not isinstance(poly, Poly):
            poly = Poly.constant(poly, _FIBER_CONTEXT)
        self.poly = _truncate_f(poly.in_context(_FIBER_CONTEXT))

    @classmethod
    def one(cls) -> FiberClass:
        return cls(1)

    def __add__(self, other: Any) -> FiberClass:
        other = other.poly if isinstance(other, FiberClass) else other
        return FiberClass(self.poly + other)

    __radd__ = __add__

    def __sub__(self, other: Any) -> FiberClass:
        other = other.poly if isinstance(other, FiberClass) else other
        return FiberClass(self.poly - other)

    def __neg__(self) -> FiberClass:
        return FiberClass(-self.poly)

    def __mul__(self, other: Any) -> FiberClass:
        other = other.poly if isinstance(other, FiberClass) else other
        return FiberClass(self.poly * other)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> FiberClass:
        result = FiberClass.one()
        for _ in range(exponent):
            result = result * self
        return result

    def __eq__(self, other: Any) -> bool:
        return isinstance(other, FiberClass) and self.poly == other.poly

    def __repr__(self) -> str:
        return f"FiberClass({self.poly})"


def fiber_pushforward(c: FiberClass | Poly) -> Poly:
    """Integrate a bundle class over the plane fibers.

    Linear over the base: f^0 and f^1 die, f^2 -> 1, f^3 -> q1 and
    f^4 -> q1^2 - q2.  The result is a free polynomial in q1, q2 with
    coefficients polynomial in m.
    """
    poly = c.poly if isinstance(c, FiberClass) else _truncate_f(poly_in_fiber(c))
    q1 = Poly.variable("q1")
    q2 = Poly.variable("q2")
    images = {2: Poly.constant(1), 3: q1, 4: q1 * q1 - q2}
    total = Poly.zero(("q1", "q2", "m"))
    for j, image in images.items():
        total = total + poly.coefficient_of("f", j) * image
    return total.in_context(("q1", "q2", "m"))


def poly_in_fiber(poly: Poly) -> Poly:
    return poly.in_context(_FIBER_CONTEXT)


def _tautological_classes(v: FiberClass) -> dict[str, FiberClass]:
    f = FiberClass(Poly.variable("f"))
    q1 = FiberClass(Poly.variable("q1"))
    q2 = FiberClass(Poly.variable("q2"))
    return {"v": v, "w1": q1 - 3 * f, "w2": q2 - 2 * f * q1 + 3 * f * f}


def _aq_for(v: FiberClass, q: int) -> Poly:
    values = _tautological_classes(v)
    pushed = evaluate_in(node_polynomials().b(q), values, FiberClass.one())
    return fiber_pushforward(pushed)


@lru_cache(maxsize=None)
def grass_aq(q: int) -> Poly:
    """a_q for the family of all planes: the pushforward of b_q at v = m*f.

    Homogeneous of degree q in q1, q2 (degree 1 and 2), with coefficients
    polynomial in the threefold degree m.
    """
    if not 1 <= q <= 8:
        raise ValueError(f"q must be in 1..8: {q}")
    m = FiberClass(Poly.variable("m"))
    f = FiberClass(Poly.variable("f"))
    return _aq_for(m * f, q)


def grass_integrate(cls: Poly) -> Poly:
    """Integrate a degree-6 class over the Grassmannian.

    The input must be homogeneous of degree 6 in (q1, q2); its monomials are
    then exactly the four of the integral table.  Coefficients may involve
    m; the result is a polynomial in m (possibly constant).
    """
    cls = cls.in_context(("q1", "q2", "m"))
    total = Poly.zero(("m",))
    mvar = Poly.variable("m")
    for (e1, e2, em), coeff in cls.terms.items():
        if e1 + 2 * e2 != 6:
            raise ValueError(
                f"not a degree-6 class: monomial q1^{e1}*q2^{e2} has degree {e1 + 2 * e2}"
            )
        total = total + coeff * DEGREE6_INTEGRALS[(e1, e2)] * mvar**em
    return total


@lru_cache(maxsize=None)
def threefold_6nodal_symbolic() -> Poly:
    """The number of 6-nodal plane curves on a general degree-m threefold.

    A polynomial of degree 18 in m; the count is valid for m >= 4.
    """
    aq = [grass_aq(q) for q in range(1, 7)]
    cls = bell_value(6, aq, Poly.constant(1, ("m",))) / factorial(6)
    return grass_integrate(cls)


def threefold_6nodal(m: int) -> int:
    """Value of the 6-nodal count at integer degree m."""
    value = threefold_6nodal_symbolic().evaluate({"m": m})
    if value.denominator != 1:
        raise AssertionError(f"6-nodal count at m={m} is not an integer: {value}")
    return value.numerator


@lru_cache(maxsize=None)
def threefold_3nodal_lines() -> Poly:
    """3-nodal plane curves on a degree-m threefold whose plane meets three
    general lines; each line imposes the special Schubert class q1."""
    aq = [grass_aq(q) for q in range(1, 4)]
    cls = bell_value(3, aq, Poly.constant(1, ("m",))) / factorial(3)
    q1 = Poly.variable("q1")
    return grass_integrate(cls * q1**3)


@lru_cache(maxsize=None)
def line_restricted_multiplier() -> int:
    """Binodal residual quartics per line on a general quintic threefold.

    Restrict the family to the Schubert variety of planes through a fixed
    line; the residual quartic family has divisor class v' = 4*f + q1 and
    the same w1, w2.  Classes on the restriction are integrated through the
    ambient Grassmannian against the Schubert class (q1^2 - q2)^2, and the
    two-node formula contributes with a factor 1/2.
    """
    f = FiberClass(Poly.variable("f"))
    q1 = FiberClass(Poly.variable("q1"))
    v_line = 4 * f + q1
    a1 = _aq_for(v_line, 1)
    a2 = _aq_for(v_line, 2)
    q1p = Poly.variable("q1")
    q2p = Poly.variable("q2")
    schubert = (q1p * q1p - q2p) ** 2
    value = grass_integrate(schubert * (a1 * a1 + a2)).constant_value() / 2
    if value.denominator != 1:
        raise AssertionError(f"line multiplier is not an integer: {value}")
    return value.numerator


def quintic_irreducible() -> int:
    """Irreducible 6-nodal plane quintics on a general quintic threefold.

    All 6-nodal quintics, minus the conic+cubic pairs (one per conic), minus
    the line+binodal-quartic pairs (the per-line multiplier times the number
    of lines).
    """
    return (
        threefold_6nodal(5)
        - SMOOTH_CONICS_ON_QUINTIC
        - LINES_ON_QUINTIC * line_restricted_multiplier()
    )
