from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from graphlaplace.poly import (
    MultiPoly,
    InterpolationError,
    add,
    eval_at,
    format_poly,
    interpolate_q,
    mul,
    negate,
    negate_v,
    parse_poly,
    partial_eval,
    poly_from_json,
    poly_to_json,
    potts_substitute,
    scale,
    shift_yz,
    truncate_top,
    unshift_yz,
    yz_degree,
)

V3 = ("q", "y", "z")
q, y, z = (MultiPoly.var(V3, s) for s in V3)
Q, Vv = MultiPoly.var(("q", "v"), "q"), MultiPoly.var(("q", "v"), "v")

# B of the single edge [1,2] on two vertices, from the brute-force coloring
# oracle (see test_invariants): q + ((q^2 - q)/2)(y + z)
B12 = q + scale(q * q - q, Fraction(1, 2)) * (y + z)

fractions = st.fractions(min_value=-5, max_value=5, max_denominator=4)


@st.composite
def polys(draw, variables=V3, max_deg=3, max_terms=5):
    terms = draw(st.dictionaries(
        st.tuples(*[st.integers(0, max_deg)] * len(variables)), fractions, max_size=max_terms
    ))
    return MultiPoly(variables, terms)


def to_sympy(p):
    syms = sympy.symbols(p.variables)
    expr = sympy.Integer(0)
    for e, c in p.terms.items():
        t = sympy.Rational(c.numerator, c.denominator)
        for s, d in zip(syms, e):
            t *= s**d
        expr += t
    return sympy.expand(expr)


class TestArithmetic:
    def test_examples(self):
        assert (q + y) + (q - y) == 2 * q
        assert (y + z) * (y - z) == y * y - z * z
        assert scale(q, 0).is_zero()
        assert add(q, y) == q + y and mul(q, y) == q * y and negate(q) == -q

    def test_zero_terms_never_stored(self):
        p = MultiPoly(V3, {(1, 0, 0): 1, (0, 1, 0): 0})
        assert p.terms == {(1, 0, 0): 1}
        assert (q - q).terms == {}

    def test_variable_mismatch(self):
        with pytest.raises(ValueError, match="variable mismatch"):
            q + Q

    @settings(max_examples=60)
    @given(polys(), polys(), polys())
    def test_ring_axioms(self, a, b, c):
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a * b == b * a
        assert a - a == MultiPoly.zero(V3)

    @settings(max_examples=60)
    @given(polys(), polys())
    def test_against_sympy(self, a, b):
        assert to_sympy(a * b) == sympy.expand(to_sympy(a) * to_sympy(b))
        assert to_sympy(a - b) == sympy.expand(to_sympy(a) - to_sympy(b))

    def test_power(self):
        assert (q + 1) ** 3 == q * q * q + 3 * q * q + 3 * q + 1
        assert (q + 1) ** 0 == 1


class TestTruncation:
    def test_single_edge_example(self):
        assert truncate_top(B12, 1) == scale(q * q - q, Fraction(1, 2)) * (y + z)
        assert truncate_top(B12, 0) == q
        assert truncate_top(q**3 * y * z * z, 2).is_zero()

    @given(polys())
    def test_parts_reconstitute(self, p):
        parts = [truncate_top(p, d) for d in range(yz_degree(p) + 1)]
        assert sum(parts, MultiPoly.zero(V3)) == p


class TestSubstitution:
    def test_shift_examples(self):
        assert shift_yz(y + z) == y + z - 2
        assert shift_yz(q) == q
        assert shift_yz(y * z) == y * z - y - z + 1

    @given(polys())
    def test_shift_inverse(self, p):
        assert shift_yz(unshift_yz(p)) == p
        assert unshift_yz(shift_yz(p)) == p

    @settings(max_examples=40)
    @given(polys())
    def test_shift_against_sympy(self, p):
        ys, zs = sympy.symbols("y z")
        assert to_sympy(shift_yz(p)) == sympy.expand(to_sympy(p).subs({ys: ys - 1, zs: zs - 1}, simultaneous=True))

    def test_negate_v(self):
        assert negate_v(Q * Q + Q * Vv) == Q * Q - Q * Vv

    def test_partial_eval(self):
        chi = partial_eval(partial_eval(B12, "y", 0), "z", 1)
        qq = MultiPoly.var(("q",), "q")
        assert chi == qq + scale(qq * qq - qq, Fraction(1, 2))
        assert chi.variables == ("q",)

    def test_eval_at(self):
        assert eval_at(q * q, q=-1, y=0, z=0) == 1
        qq = MultiPoly.var(("q",), "q")
        assert eval_at(qq * qq, q=-1) == 1
        with pytest.raises(ValueError, match="no value"):
            eval_at(q * q, q=1)
        with pytest.raises(ValueError, match="unknown variable"):
            partial_eval(q, "v", 1)


class TestInterpolation:
    def test_squares(self):
        one = MultiPoly.constant((), 1)
        pts = [(x, scale(one, x * x)) for x in (1, 2, 3)]
        assert interpolate_q(pts, 2) == MultiPoly(("q",), {(2,): 1})

    def test_constant(self):
        pts = [(x, MultiPoly.constant(("y",), 7)) for x in (1, 2, 3, 4)]
        assert interpolate_q(pts, 2) == MultiPoly.constant(("q", "y"), 7)

    def test_bernardi_single_edge(self):
        # values of B_[1,2] at q = 1, 2, 3: counted colorings (y counts up, z down)
        Y, Z = MultiPoly.var(("y", "z"), "y"), MultiPoly.var(("y", "z"), "z")
        pts = [
            (1, MultiPoly.constant(("y", "z"), 1)),
            (2, 2 + Y + Z),
            (3, 3 + 3 * Y + 3 * Z),
            (4, 4 + 6 * Y + 6 * Z),
        ]
        assert interpolate_q(pts, 2) == B12

    def test_inconsistent_witness(self):
        one = MultiPoly.constant((), 1)
        pts = [(x, scale(one, x**3)) for x in (1, 2, 3, 4)]
        with pytest.raises(InterpolationError):
            interpolate_q(pts, 2)

    def test_too_few_points(self):
        with pytest.raises(ValueError):
            interpolate_q([(1, MultiPoly.constant((), 1))], 1)

    @settings(max_examples=40)
    @given(polys(("q", "y"), max_deg=4))
    def test_recovers_and_reevaluates(self, p):
        pts = [(x, partial_eval(p, "q", x)) for x in range(-2, 4)]
        r = interpolate_q(pts, 4)
        assert r == p
        for x in (7, 11, -9):
            assert partial_eval(r, "q", x) == partial_eval(p, "q", x)


class TestPotts:
    def test_single_edge(self):
        C = MultiPoly(("q", "y"), {(1, 0): 1, (2, 1): 1, (1, 1): -1})  # q + (q^2 - q) y
        assert potts_substitute(C, 1) == Q * Q + Q * Vv

    def test_edgeless(self):
        assert potts_substitute(MultiPoly(("q", "y"), {(3, 0): 1}), 0) == Q**3

    def test_v_zero_is_y_one(self):
        C = MultiPoly(("q", "y"), {(1, 0): 2, (2, 1): 1, (1, 2): -3})
        Z = potts_substitute(C, 3)
        assert partial_eval(Z, "v", 0) == partial_eval(C, "y", 1)

    def test_degree_check(self):
        with pytest.raises(ValueError, match="exceeds"):
            potts_substitute(MultiPoly(("q", "y"), {(0, 2): 1}), 1)


class TestSerialization:
    def test_format(self):
        assert format_poly(B12) == "1/2*q^2*y + 1/2*q^2*z - 1/2*q*y - 1/2*q*z + q"
        assert format_poly(MultiPoly.zero(V3)) == "0"
        assert format_poly(-q + 1) == "-q + 1"

    def test_json_order(self):
        data = poly_to_json(B12)
        assert [t["exponents"] for t in data["terms"]] == [[2, 1, 0], [2, 0, 1], [1, 1, 0], [1, 0, 1], [1, 0, 0]]
        assert data["terms"][0]["coefficient"] == "1/2"

    @given(polys())
    def test_round_trips(self, p):
        assert parse_poly(format_poly(p), V3) == p
        assert poly_from_json(poly_to_json(p)) == p

    def test_parse_loose(self):
        assert parse_poly("q**2 - 3/2*q*y+ 1", V3) == q * q - scale(q * y, Fraction(3, 2)) + 1
        with pytest.raises(ValueError):
            parse_poly("q + w", V3)
