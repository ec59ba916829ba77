"""Counting nodal curves in a homology class on an abelian surface.

For an abelian surface of Picard number 1, the curves in a fixed homology
class of self-intersection d are parameterized by a projective bundle Y over
the dual surface, of dimension d/2 + 1.  The canonical class is trivial, so
w1 = w2 = 0 and each node polynomial b_q collapses to its pure power of v,
with v = l + h for a fiberwise theta-type class l and the tautological class
h on Y.  Integration over the first factor obeys

    l^2 -> d * (fundamental class)
    l^3 -> 6 * C1
    l^4 -> 12 * (C1^2 - 2*C2)
    l^i -> 0 otherwise

where C1, C2 are the Chern classes of the rank-d/2 direct-image bundle whose
projectivization is Y.  This route keeps every coefficient polynomial in d
(no division by d ever occurs).  Together with the top integrals

    integral C1^2 = d        integral C2 = d/2 - 1

and the Segre pushforwards of powers of h, the count of irreducible curves
of geometric genus g with r nodes through g general points becomes a
polynomial N_{g,r} in g of degree r+1, after substituting the adjunction
relation d = 2g + 2r - 2.

An independent route to the same numbers is the generating function

    sum_{r>=0} (N_{g,r}/g) q^r = ( sum_{k>=1} k*sigma_1(k)*q^(k-1) )^(g-1)

with sigma_1 the divisor sum; ``bryan_leung_count`` implements it with exact
integer series arithmetic and the suite checks the two routes agree.

Validity is a separate concern from computation: ``abelian_validity`` gives
the genus threshold under which the polynomial formulas are proven (it
depends on the multiple m of the primitive class), and ``k_very_ample_ok``
exposes the underlying line-bundle positivity test, including its K3 and
Enriques variants.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import Any, Mapping

from .bell import bell_value
from .exactpoly import Poly, Scalar
from .nodegen import node_polynomials

#: Basis of the base algebra with grades; ONE is the fundamental class.
_BASE_GRADE = {"one": 0, "C1": 1, "C1SQ": 2, "C2": 2}

_COEFF_CONTEXT = ("d", "h")


def _base_product(x: str, y: str) -> str | None:
    """Product in the graded base algebra; None means truncated to zero."""
    if x == "one":
        return y
    if y == "one":
        return x
    if x == "C1" and y == "C1":
        return "C1SQ"
    return None  # total grade exceeds 2


class YClass:
    """A class on the bundle Y: a polynomial in h over the graded base.

    Components map basis keys to polynomials in (d, h).  Sums and products
    stay in the algebra; base grade is capped at 2 and C1*C1 folds into
    C1SQ.  Total grade (h power plus base grade) is preserved by products,
    which is what makes the final integration a three-term affair.
    """

    __slots__ = ("components",)

    def __init__(self, components: Mapping[str, Poly | Scalar]):
        clean: dict[str, Poly] = {}
        for key, value in components.items():
            if key not in _BASE_GRADE:
                raise ValueError(f"unknown base element {key!r}")
            poly = value if isinstance(value, Poly) else Poly.constant(value, _COEFF_CONTEXT)
            poly = poly.in_context(_COEFF_CONTEXT)
            if not poly.is_zero():
                clean[key] = poly
        self.components = clean

    @classmethod
    def one(cls) -> YClass:
        return cls({"one": 1})

    @classmethod
    def zero(cls) -> YClass:
        return cls({})

    def component(self, key: str) -> Poly:
        return self.components.get(key, Poly.zero(_COEFF_CONTEXT))

    def __add__(self, other: Any) -> YClass:
        if not isinstance(other, YClass):
            return NotImplemented
        out = dict(self.components)
        for key, poly in other.components.items():
            out[key] = out.get(key, Poly.zero(_COEFF_CONTEXT)) + poly
        return YClass(out)

    def __sub__(self, other: Any) -> YClass:
        return self + (-other)

    def __neg__(self) -> YClass:
        return YClass({k: -p for k, p in self.components.items()})

    def __mul__(self, other: Any) -> YClass:
        if isinstance(other, (int, Fraction, Poly)):
            return YClass({k: p * other for k, p in self.components.items()})
        if not isinstance(other, YClass):
            return NotImplemented
        out: dict[str, Poly] = {}
        for k1, p1 in self.components.items():
            for k2, p2 in other.components.items():
                key = _base_product(k1, k2)
                if key is None:
                    continue
                out[key] = out.get(key, Poly.zero(_COEFF_CONTEXT)) + p1 * p2
        return YClass(out)

    def __rmul__(self, other: Any) -> YClass:
        return self.__mul__(other)

    def __pow__(self, exponent: int) -> YClass:
        result = YClass.one()
        for _ in range(exponent):
            result = result * self
        return result

    def __eq__(self, other: Any) -> bool:
        return isinstance(other, YClass) and self.components == other.components

    def __repr__(self) -> str:
        body = ", ".join(f"{k}: {p}" for k, p in sorted(self.components.items()))
        return f"YClass({{{body}}})"


def _pure_v_coefficient(q: int) -> Fraction:
    """Coefficient of v^(q+2) in b_q, the only term surviving w1 = w2 = 0."""
    bq = node_polynomials().b(q)
    return bq.terms.get((q + 2, 0, 0), Fraction(0))


@lru_cache(maxsize=None)
def abelian_aq(q: int) -> YClass:
    """a_q on the abelian family, polynomial in d (never rational in d).

    With w's zero, b_q = kappa_q * v^(q+2) and v = l + h; expanding the
    binomial and applying the l-integration table gives

        a_q = kappa_q * ( C(q+2,2)*d*h^q + 6*C(q+2,3)*C1*h^(q-1)
                          + 12*C(q+2,4)*(C1SQ - 2*C2)*h^(q-2) )
    """
    if not 1 <= q <= 8:
        raise ValueError(f"q must be in 1..8: {q}")
    kappa = _pure_v_coefficient(q)
    d = Poly.variable("d", _COEFF_CONTEXT)
    h = Poly.variable("h", _COEFF_CONTEXT)
    n = q + 2
    components: dict[str, Poly] = {"one": kappa * comb(n, 2) * d * h**q}
    if q >= 1:
        components["C1"] = kappa * comb(n, 3) * 6 * h ** (q - 1)
    if q >= 2:
        components["C1SQ"] = kappa * comb(n, 4) * 12 * h ** (q - 2)
        components["C2"] = kappa * comb(n, 4) * (-24) * h ** (q - 2)
    cls = YClass(components)
    for poly in cls.components.values():
        assert all(c.denominator == 1 for c in poly.terms.values()), (
            f"a_{q} picked up a rational coefficient; route bug"
        )
    return cls


def nodal_locus_class(r: int) -> YClass:
    """The class of the r-nodal locus on Y: P_r(a_1,...,a_r)/r!."""
    if not 0 <= r <= 8:
        raise ValueError(f"r must be in 0..8: {r}")
    aq = [abelian_aq(q) for q in range(1, r + 1)]
    return bell_value(r, aq, YClass.one()) * Fraction(1, factorial(r))


def _graded_parts(cls: YClass, r: int) -> dict[str, Poly]:
    """Split a pure total-grade-r class into base parts, checking that the
    h power attached to each base element is exactly r minus its grade."""
    h = Poly.variable("h", _COEFF_CONTEXT)
    parts: dict[str, Poly] = {}
    for key, poly in cls.components.items():
        j = _BASE_GRADE[key]
        scalar = poly.coefficient_of("h", r - j) if r - j >= 0 else Poly.zero(("d",))
        assert poly == scalar.in_context(_COEFF_CONTEXT) * h ** max(r - j, 0), (
            f"component {key} of the {r}-nodal class is not pure of total grade {r}"
        )
        parts[key] = scalar.in_context(("d",))
    return parts


def _integral_weights() -> dict[str, Poly]:
    """Weight of each base part in the point count through g general points.

    The g point conditions contribute h^g; pushing h^(g+r-j) to the dual
    surface gives the fundamental class, -C1, or C1^2 - C2 as j = 2, 1, 0,
    and the top integrals are integral C1SQ = d, integral C2 = d/2 - 1.
    """
    d = Poly.variable("d")
    return {
        "one": d - (d / 2 - 1),  # (C1SQ - C2) integrated
        "C1": -d,  # C1 * (-C1) integrated
        "C1SQ": d,
        "C2": d / 2 - 1,
    }


def _substitute_d(poly_in_d: Poly, r: int) -> Poly:
    g = Poly.variable("g")
    return poly_in_d.substitute({"d": 2 * g + 2 * r - 2}).in_context(("g",))


def _check_integer_valued(poly: Poly, var: str, count: int) -> None:
    # integer values at enough consecutive integers pin integrality everywhere
    for value in range(count):
        if poly.evaluate({var: value}).denominator != 1:
            raise AssertionError(f"{poly} is not integer-valued at {var}={value}")


def abelian_count(r: int) -> Poly:
    """N_{g,r} as a polynomial in g: curves of genus g with r nodes in the
    class, through g general points.  Degree r+1, integer-valued."""
    parts = _graded_parts(nodal_locus_class(r), r)
    weights = _integral_weights()
    total = Poly.zero(("d",))
    for key, scalar in parts.items():
        total = total + scalar * weights[key]
    result = _substitute_d(total, r)
    _check_integer_valued(result, "g", r + 3)
    return result


def fixed_class_count(r: int) -> Poly:
    """The fixed-linear-system variant: curves through g-2 general points in
    one linear equivalence class.  This is the fundamental-class coefficient
    of the grade-0 part of the r-nodal class; lower h powers push to zero."""
    parts = _graded_parts(nodal_locus_class(r), r)
    return _substitute_d(parts.get("one", Poly.zero(("d",))), r)


def divisor_sum(k: int) -> int:
    """sigma_1(k): the sum of the divisors of k."""
    if k < 1:
        raise ValueError(f"k must be positive: {k}")
    return sum(d for d in range(1, k + 1) if k % d == 0)


def _node_series(order: int) -> list[int]:
    """Coefficients of sum_{k>=1} k*sigma_1(k)*q^(k-1) up to q^order."""
    return [(j + 1) * divisor_sum(j + 1) for j in range(order + 1)]


def _series_mul(a: list, b: list, order: int) -> list:
    """Truncated product of series coefficient lists (ints or Fractions)."""
    out = [0] * (order + 1)
    for i, ai in enumerate(a):
        if ai == 0 or i > order:
            continue
        for j, bj in enumerate(b):
            if i + j > order:
                break
            out[i + j] += ai * bj
    return out


def bryan_leung_count(g: int, r: int) -> int:
    """N_{g,r} from the generating function: g times the q^r coefficient of
    the (g-1)-st power of sum k*sigma_1(k)*q^(k-1).  Exact integers."""
    if g < 1:
        raise ValueError(f"g must be at least 1: {g}")
    if r < 0:
        raise ValueError(f"r must be non-negative: {r}")
    base = _node_series(r)
    power = [1] + [0] * r
    e = g - 1
    sq = base
    while e:
        if e & 1:
            power = _series_mul(power, sq, r)
        sq = _series_mul(sq, sq, r)
        e >>= 1
    return g * power[r]


def bryan_leung_log_coefficients(count: int = 8) -> list[int]:
    """The integers b_r with log(sum k*sigma_1(k)*q^(k-1)) = sum b_r q^r/r!.

    These are 6, -12, 168, -2448, ... and encode the per-genus factorization
    of the counts: evaluating the node polynomials with a_r = (g-1)*b_r
    reproduces N_{g,r}/g.
    """
    series = [Fraction(c) for c in _node_series(count)]
    u = series[:]
    u[0] -= 1  # log(1 + u) with u the positive-order part
    log = [Fraction(0)] * (count + 1)
    term = [Fraction(1)] + [Fraction(0)] * count
    for i in range(1, count + 1):
        term = _series_mul(term, u, count)
        sign = Fraction((-1) ** (i + 1), i)
        for j in range(count + 1):
            log[j] += sign * term[j]
    out = []
    for rr in range(1, count + 1):
        value = log[rr] * factorial(rr)
        if value.denominator != 1:
            raise AssertionError(f"log coefficient b_{rr} is not an integer: {value}")
        out.append(value.numerator)
    return out


@dataclass(frozen=True)
class AbelianSetup:
    """Inputs of one count: target genus, node count, and the multiple of
    the primitive class; the self-intersection d follows by adjunction."""

    g: int
    r: int
    m: int = 1
    d: int = field(init=False)

    def __post_init__(self) -> None:
        if self.g < 2:
            raise ValueError(f"genus must be at least 2: {self.g}")
        if not 0 <= self.r <= 8:
            raise ValueError(f"node count must be in 0..8: {self.r}")
        if self.m < 1:
            raise ValueError(f"class multiple must be positive: {self.m}")
        object.__setattr__(self, "d", 2 * self.g + 2 * self.r - 2)


def abelian_validity(m: int, g: int, r: int) -> bool:
    """Whether the polynomial count is proven at (m, g, r).

    Primitive classes (m = 1) need g > 5r + 7; multiples need
    g > (3m^2 r + 3m^2 - 2mr + 2m + 2r - 2) / (2m - 2), compared exactly.
    """
    if m < 1:
        raise ValueError(f"class multiple must be positive: {m}")
    if m == 1:
        return g > 5 * r + 7
    threshold = Fraction(3 * m * m * r + 3 * m * m - 2 * m * r + 2 * m + 2 * r - 2, 2 * m - 2)
    return Fraction(g) > threshold


def k_very_ample_ok(surface: str, m: int, d: int, k: int) -> bool:
    """Positivity test guaranteeing k-very ampleness of the class.

    For an abelian surface: m = 1 with d > 4(k+1), or m >= 2 with
    (m-1)d > m^2(k+1).  A K3 surface weakens the primitive case to d >= 4k;
    an Enriques surface needs only d >= 4(k+1) for any m.
    """
    if surface not in ("abelian", "k3", "enriques"):
        raise ValueError(f"unknown surface kind {surface!r}")
    if m < 1:
        raise ValueError(f"class multiple must be positive: {m}")
    if k < 0:
        raise ValueError(f"k must be non-negative: {k}")
    if surface == "enriques":
        return d >= 4 * (k + 1)
    multiple_case = m >= 2 and (m - 1) * d > m * m * (k + 1)
    if surface == "k3":
        return (m == 1 and d >= 4 * k) or multiple_case
    return (m == 1 and d > 4 * (k + 1)) or multiple_case
