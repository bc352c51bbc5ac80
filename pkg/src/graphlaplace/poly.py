"""Exact sparse multivariate polynomials over the rationals.

A :class:`MultiPoly` is a fixed tuple of variable names plus a dict mapping
exponent tuples to nonzero :class:`fractions.Fraction` coefficients::

    (q**2 - q)/2 * y   ->  variables ("q", "y", "z"),
                           {(2, 1, 0): 1/2, (1, 1, 0): -1/2}

Arithmetic between polynomials over different variable tuples raises
``ValueError``.  A polynomial over the empty tuple is a plain rational.

Printing and JSON output list monomials in graded lexicographic order,
highest total degree first, so output is reproducible.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Mapping, Sequence, Tuple

BERNARDI_VARS = ("q", "y", "z")
POTTS_VARS = ("q", "v")
CHROMATIC_VARS = ("q", "y")

Exponent = Tuple[int, ...]


def _monomial_key(exps: Exponent):
    return (sum(exps), exps)


class MultiPoly:
    __slots__ = ("variables", "terms", "_hash")

    def __init__(self, variables: Sequence[str], terms: Mapping[Exponent, object] | None = None):
        self.variables = tuple(variables)
        clean = {}
        for exps, c in (terms or {}).items():
            exps = tuple(exps)
            if len(exps) != len(self.variables):
                raise ValueError(f"exponent {exps} does not match variables {self.variables}")
            c = Fraction(c)
            if c:
                clean[exps] = clean.get(exps, 0) + c
                if not clean[exps]:
                    del clean[exps]
        self.terms = clean
        self._hash = None

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, variables: Sequence[str]) -> "MultiPoly":
        return cls(variables)

    @classmethod
    def constant(cls, variables: Sequence[str], value) -> "MultiPoly":
        return cls(variables, {(0,) * len(variables): value})

    @classmethod
    def var(cls, variables: Sequence[str], name: str) -> "MultiPoly":
        variables = tuple(variables)
        exps = [0] * len(variables)
        exps[_index(variables, name)] = 1
        return cls(variables, {tuple(exps): 1})

    @classmethod
    def _raw(cls, variables: Tuple[str, ...], terms: dict) -> "MultiPoly":
        # trusted path: terms already clean
        p = cls.__new__(cls)
        p.variables = variables
        p.terms = terms
        p._hash = None
        return p

    # -- queries -------------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def degree(self, name: str) -> int:
        i = _index(self.variables, name)
        return max((e[i] for e in self.terms), default=-1)

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: _monomial_key(t[0]), reverse=True)

    def __eq__(self, other) -> bool:
        if isinstance(other, MultiPoly):
            return self.variables == other.variables and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            if not other:
                return not self.terms
            return self.terms == {(0,) * len(self.variables): Fraction(other)}
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.variables, frozenset(self.terms.items())))
        return self._hash

    def __repr__(self) -> str:
        return f"MultiPoly({self.variables}, {format_poly(self)!r})"

    def __str__(self) -> str:
        return format_poly(self)

    # -- ring operations -----------------------------------------------------

    def _coerce(self, other) -> "MultiPoly":
        if isinstance(other, MultiPoly):
            if other.variables != self.variables:
                raise ValueError(f"variable mismatch: {self.variables} vs {other.variables}")
            return other
        if isinstance(other, (int, Fraction)):
            return MultiPoly.constant(self.variables, other)
        raise TypeError(f"cannot combine MultiPoly with {type(other).__name__}")

    def __add__(self, other) -> "MultiPoly":
        other = self._coerce(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return MultiPoly._raw(self.variables, out)

    __radd__ = __add__

    def __neg__(self) -> "MultiPoly":
        return MultiPoly._raw(self.variables, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other) -> "MultiPoly":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "MultiPoly":
        return self._coerce(other) - self

    def __mul__(self, other) -> "MultiPoly":
        if isinstance(other, (int, Fraction)):
            return scale(self, other)
        other = self._coerce(other)
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = out.get(e, 0) + c1 * c2
                if s:
                    out[e] = s
                else:
                    del out[e]
        return MultiPoly._raw(self.variables, out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "MultiPoly":
        if exponent < 0:
            raise ValueError("negative powers are not polynomials")
        result = MultiPoly.constant(self.variables, 1)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result


def _index(variables: Sequence[str], name: str) -> int:
    try:
        return list(variables).index(name)
    except ValueError:
        raise ValueError(f"unknown variable {name!r}; have {tuple(variables)}") from None


# ---------------------------------------------------------------------------
# functional interface


def add(p: MultiPoly, r: MultiPoly) -> MultiPoly:
    return p + r


def mul(p: MultiPoly, r: MultiPoly) -> MultiPoly:
    return p * r


def negate(p: MultiPoly) -> MultiPoly:
    return -p


def scale(p: MultiPoly, c) -> MultiPoly:
    c = Fraction(c)
    if not c:
        return MultiPoly._raw(p.variables, {})
    return MultiPoly._raw(p.variables, {e: v * c for e, v in p.terms.items()})


def yz_degree(p: MultiPoly) -> int:
    """Largest total degree in y and z, -1 for the zero polynomial."""
    iy, iz = _index(p.variables, "y"), _index(p.variables, "z")
    return max((e[iy] + e[iz] for e in p.terms), default=-1)


def truncate_top(p: MultiPoly, k: int) -> MultiPoly:
    """The part of ``p`` whose monomials have y-degree + z-degree exactly k."""
    iy, iz = _index(p.variables, "y"), _index(p.variables, "z")
    return MultiPoly._raw(
        p.variables, {e: c for e, c in p.terms.items() if e[iy] + e[iz] == k}
    )


def substitute(p: MultiPoly, images: Mapping[str, MultiPoly]) -> MultiPoly:
    """Replace each named variable by a polynomial over the same variables."""
    idx = {_index(p.variables, name): img for name, img in images.items()}
    one = MultiPoly.constant(p.variables, 1)
    powers: dict = {}
    out = MultiPoly.zero(p.variables)
    for exps, c in p.terms.items():
        kept = list(exps)
        term = one
        for i, img in idx.items():
            d = exps[i]
            kept[i] = 0
            if d:
                key = (i, d)
                if key not in powers:
                    powers[key] = img**d
                term = term * powers[key]
        out = out + term * MultiPoly._raw(p.variables, {tuple(kept): c})
    return out


def _shift(p: MultiPoly, by: int) -> MultiPoly:
    y = MultiPoly.var(p.variables, "y")
    z = MultiPoly.var(p.variables, "z")
    return substitute(p, {"y": y + by, "z": z + by})


def shift_yz(p: MultiPoly) -> MultiPoly:
    """y -> y - 1, z -> z - 1."""
    return _shift(p, -1)


def unshift_yz(p: MultiPoly) -> MultiPoly:
    """Inverse of :func:`shift_yz`: y -> y + 1, z -> z + 1."""
    return _shift(p, 1)


def negate_v(p: MultiPoly) -> MultiPoly:
    """v -> -v."""
    iv = _index(p.variables, "v")
    return MultiPoly._raw(
        p.variables, {e: (-c if e[iv] % 2 else c) for e, c in p.terms.items()}
    )


def swap_yz(p: MultiPoly) -> MultiPoly:
    iy, iz = _index(p.variables, "y"), _index(p.variables, "z")
    out = {}
    for e, c in p.terms.items():
        e2 = list(e)
        e2[iy], e2[iz] = e[iz], e[iy]
        out[tuple(e2)] = c
    return MultiPoly._raw(p.variables, out)


def partial_eval(p: MultiPoly, name: str, value) -> MultiPoly:
    """Substitute a rational for one variable and drop it from the variable list."""
    i = _index(p.variables, name)
    value = Fraction(value)
    variables = p.variables[:i] + p.variables[i + 1:]
    out: dict = {}
    for e, c in p.terms.items():
        e2 = e[:i] + e[i + 1:]
        s = out.get(e2, 0) + c * value ** e[i]
        if s:
            out[e2] = s
        else:
            out.pop(e2, None)
    return MultiPoly._raw(variables, out)


def eval_at(p: MultiPoly, assignment: Mapping[str, object] | None = None, **values) -> Fraction:
    """Evaluate at a full assignment of rationals to variables."""
    values = {**(assignment or {}), **values}
    missing = [v for v in p.variables if v not in values]
    if missing:
        raise ValueError(f"no value given for {missing}")
    for name in values:
        _index(p.variables, name)
    point = [Fraction(values[v]) for v in p.variables]
    total = Fraction(0)
    for e, c in p.terms.items():
        t = c
        for x, d in zip(point, e):
            if d:
                t *= x**d
        total += t
    return total


def extend_q(p: MultiPoly, q_power: int = 0) -> MultiPoly:
    """Embed ``p`` as a polynomial over ("q",) + p.variables, times q^q_power."""
    return MultiPoly._raw(
        ("q",) + p.variables, {(q_power,) + e: c for e, c in p.terms.items()}
    )


class InterpolationError(ArithmeticError):
    """Supplied points are not consistent with the degree bound."""


def interpolate_q(points: Sequence[Tuple[int, MultiPoly]], degree: int) -> MultiPoly:
    """Reconstruct a polynomial in q of degree <= ``degree`` whose value at each
    integer ``q_i`` is the polynomial ``P_i`` in the remaining variables.

    The first ``degree + 1`` points determine the answer (Newton divided
    differences); every further point is checked against it.
    """
    if len(points) < degree + 1:
        raise ValueError(f"need at least {degree + 1} points, got {len(points)}")
    xs = [Fraction(x) for x, _ in points]
    if len(set(xs)) != len(xs):
        raise ValueError("interpolation nodes must be distinct")
    rest_vars = points[0][1].variables
    if any(p.variables != rest_vars for _, p in points):
        raise ValueError("all point values must share one variable list")
    m = degree + 1
    # divided-difference table over polynomial values
    coeffs = [p for _, p in points[:m]]
    for j in range(1, m):
        for i in range(m - 1, j - 1, -1):
            coeffs[i] = scale(coeffs[i] - coeffs[i - 1], 1 / (xs[i] - xs[i - j]))
    variables = ("q",) + rest_vars
    q = MultiPoly.var(variables, "q")
    result = extend_q(coeffs[m - 1])
    for i in range(m - 2, -1, -1):
        result = result * (q - xs[i]) + extend_q(coeffs[i])
    for x, value in points[m:]:
        if partial_eval(result, "q", x) != value:
            raise InterpolationError(
                f"point q={x} disagrees with the degree-{degree} interpolant"
            )
    return result


def potts_substitute(c: MultiPoly, k: int) -> MultiPoly:
    """Z(q, v) = (v + 1)^k C(q, 1/(v + 1)) for C over (q, y) with y-degree <= k."""
    if c.variables != CHROMATIC_VARS:
        raise ValueError(f"expected variables {CHROMATIC_VARS}, got {c.variables}")
    if c.degree("y") > k:
        raise ValueError(f"y-degree {c.degree('y')} exceeds edge count {k}")
    v1 = MultiPoly(POTTS_VARS, {(0, 1): 1, (0, 0): 1})
    powers = [v1**i for i in range(k + 1)]
    out = MultiPoly.zero(POTTS_VARS)
    for (s, i), coef in c.terms.items():
        out = out + powers[k - i] * MultiPoly._raw(POTTS_VARS, {(s, 0): coef})
    return out


# ---------------------------------------------------------------------------
# text and JSON forms


def _format_coeff(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_poly(p: MultiPoly) -> str:
    """Canonical expanded form, e.g. ``1/2*q^2*y - 1/2*q*y + q``."""
    if not p.terms:
        return "0"
    parts = []
    for exps, c in p.sorted_terms():
        factors = []
        for name, d in zip(p.variables, exps):
            if d == 1:
                factors.append(name)
            elif d > 1:
                factors.append(f"{name}^{d}")
        mag = abs(c)
        if not factors:
            body = _format_coeff(mag)
        elif mag == 1:
            body = "*".join(factors)
        else:
            body = "*".join([_format_coeff(mag)] + factors)
        if not parts:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append((" - " if c < 0 else " + ") + body)
    return "".join(parts)


_TERM_SPLIT = re.compile(r"\s*([+-])\s*")


def parse_poly(text: str, variables: Sequence[str]) -> MultiPoly:
    """Inverse of :func:`format_poly` (also accepts ``**`` and loose spacing)."""
    variables = tuple(variables)
    s = text.strip().replace("**", "^")
    if not s:
        raise ValueError("empty polynomial string")
    if s[0] not in "+-":
        s = "+" + s
    pieces = _TERM_SPLIT.split(s)
    # pieces: ['', sign, term, sign, term, ...]
    if pieces[0].strip():
        raise ValueError(f"cannot parse polynomial {text!r}")
    result: dict = {}
    for sign, term in zip(pieces[1::2], pieces[2::2]):
        if not term:
            raise ValueError(f"dangling sign in {text!r}")
        coef = Fraction(1)
        exps = [0] * len(variables)
        for factor in term.split("*"):
            factor = factor.strip()
            if not factor:
                raise ValueError(f"empty factor in {text!r}")
            if factor[0].isdigit():
                coef *= Fraction(factor)
                continue
            name, _, power = factor.partition("^")
            i = _index(variables, name)
            exps[i] += int(power) if power else 1
        if sign == "-":
            coef = -coef
        e = tuple(exps)
        result[e] = result.get(e, 0) + coef
    return MultiPoly(variables, result)


def poly_to_json(p: MultiPoly) -> dict:
    return {
        "variables": list(p.variables),
        "terms": [
            {"exponents": list(e), "coefficient": _format_coeff(c)}
            for e, c in p.sorted_terms()
        ],
    }


def poly_from_json(data: Mapping) -> MultiPoly:
    return MultiPoly(
        data["variables"],
        {tuple(t["exponents"]): Fraction(t["coefficient"]) for t in data["terms"]},
    )


def sum_polys(polys: Iterable[MultiPoly], variables: Sequence[str]) -> MultiPoly:
    total = MultiPoly.zero(variables)
    for p in polys:
        total = total + p
    return total
