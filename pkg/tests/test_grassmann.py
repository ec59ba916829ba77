"""Tests for the threefold-in-four-space back end."""

from __future__ import annotations

from pathlib import Path

import pytest

from nodepoly.exactpoly import Poly, parse
from nodepoly.grassmann import (
    FiberClass,
    SMOOTH_CONICS_ON_QUINTIC,
    LINES_ON_QUINTIC,
    fiber_pushforward,
    grass_aq,
    grass_integrate,
    line_restricted_multiplier,
    quintic_irreducible,
    threefold_3nodal_lines,
    threefold_6nodal,
    threefold_6nodal_symbolic,
)

GOLDEN = Path(__file__).parent / "golden"

F = FiberClass(Poly.variable("f"))
Q1 = FiberClass(Poly.variable("q1"))


class TestFiberClasses:
    def test_truncation_is_eager(self):
        assert (F**5).poly.is_zero()
        assert (F**4 * F).poly.is_zero()
        assert not (F**4).poly.is_zero()

    def test_pushforward_table(self):
        assert fiber_pushforward(F * F) == parse("1", ("q1", "q2", "m"))
        assert fiber_pushforward(F) == Poly.zero()
        assert fiber_pushforward(FiberClass(1)) == Poly.zero()
        assert fiber_pushforward(F**3) == parse("q1", ("q1", "q2", "m"))
        assert fiber_pushforward(F**4) == parse("q1^2 - q2", ("q1", "q2", "m"))

    def test_pushforward_linearity(self):
        assert fiber_pushforward(Q1 * F**3) == parse("q1^2", ("q1", "q2", "m"))
        combo = 3 * F * F - 2 * F**3
        assert fiber_pushforward(combo) == parse("3 - 2*q1", ("q1", "q2", "m"))


class TestIntegration:
    def test_table_values(self):
        q1 = Poly.variable("q1")
        q2 = Poly.variable("q2")
        assert grass_integrate(q1**6) == 5
        assert grass_integrate(q1**4 * q2) == 3
        assert grass_integrate(q1**2 * q2**2) == 2
        assert grass_integrate(q2**3) == 1

    def test_schubert_self_intersection(self):
        q1 = Poly.variable("q1")
        q2 = Poly.variable("q2")
        assert grass_integrate((q1 * q1 - q2) ** 2 * q1 * q1) == 1
        assert grass_integrate((q1 * q1 - q2) ** 2 * q2) == 0

    def test_wrong_degree_rejected(self):
        q1 = Poly.variable("q1")
        with pytest.raises(ValueError):
            grass_integrate(q1**5)


class TestAq:
    @pytest.mark.parametrize("q", range(1, 7))
    def test_homogeneous_of_degree_q(self, q):
        aq = grass_aq(q)
        for (e1, e2, _em) in aq.terms:
            assert e1 + 2 * e2 == q

    def test_vanishes_at_m_zero(self):
        # every node polynomial carries a factor v, and v = m*f
        for q in range(1, 7):
            aq = grass_aq(q)
            assert aq.substitute({"m": Poly.constant(0)}).is_zero()

    def test_a1_leading_fiber_term(self):
        # the m^3 part of a_1 comes from v^3 = m^3 f^3 alone, pushing to q1
        a1 = grass_aq(1)
        m3_part = {exps: c for exps, c in a1.terms.items() if exps[2] == 3}
        assert m3_part == {(1, 0, 3): 1}


class TestCounts:
    def test_printed_degree18_polynomial(self):
        golden = (GOLDEN / "threefold_6nodal.txt").read_text().strip()
        assert str(threefold_6nodal_symbolic()) == golden

    def test_value_at_5(self):
        assert threefold_6nodal(5) == 21617125

    def test_symbolic_matches_numeric_pipeline(self):
        symbolic = threefold_6nodal_symbolic()
        assert symbolic.evaluate({"m": 5}) == threefold_6nodal(5)
        assert symbolic.evaluate({"m": 4}) == threefold_6nodal(4)

    def test_printed_degree9_polynomial(self):
        golden = (GOLDEN / "threefold_lines3.txt").read_text().strip()
        assert str(threefold_3nodal_lines()) == golden

    def test_lines3_leading_term(self):
        poly = threefold_3nodal_lines()
        assert poly.degree_in("m") == 9
        from fractions import Fraction

        assert poly.terms.get((9,)) == Fraction(5, 6)

    def test_line_multiplier(self):
        assert line_restricted_multiplier() == 1185

    def test_irreducible_pipeline(self):
        assert SMOOTH_CONICS_ON_QUINTIC == 609250
        assert LINES_ON_QUINTIC == 2875
        assert quintic_irreducible() == 21617125 - 609250 - 2875 * 1185
        assert quintic_irreducible() == 17601000
