"""Sparse exact polynomials over the rationals.

Two shapes cover everything in this package: bivariate polynomials in x and y
with non-negative exponents (Tutte polynomials) and univariate Laurent
polynomials whose exponents may be negative (a Tutte polynomial restricted to
a curve).  Coefficients are ``fractions.Fraction`` values, never floats, and
zero coefficients are never stored, so equality of the term maps is equality
of polynomials.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping

from .errors import DivisionByZeroError, ParseError

Rational = Fraction


def rational(value) -> Fraction:
    """Coerce ints, Fractions and "p/q" strings to an exact rational."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        if "." in value or "e" in value.lower():
            raise ParseError(f"write rationals as p/q, not {value!r}")
        try:
            return Fraction(value)
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"not a rational number: {value!r}") from exc
    if isinstance(value, float):
        raise ParseError("floats are not accepted; use p/q strings")
    raise ParseError(f"cannot interpret {value!r} as a rational")


def _clean(terms: Mapping) -> dict:
    return {key: Fraction(c) for key, c in terms.items() if c != 0}


class BivariatePoly:
    """Polynomial in x and y with exact rational coefficients.

    Terms are stored as a map from (x-exponent, y-exponent) to a nonzero
    coefficient.  The serialized form orders terms lexicographically by
    exponent pair, which keeps all outputs deterministic.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[tuple[int, int], Fraction] | None = None):
        self.terms = _clean(terms or {})

    @classmethod
    def zero(cls) -> "BivariatePoly":
        return cls()

    @classmethod
    def constant(cls, c) -> "BivariatePoly":
        return cls({(0, 0): rational(c)})

    @classmethod
    def monomial(cls, xexp: int, yexp: int, c=1) -> "BivariatePoly":
        if xexp < 0 or yexp < 0:
            raise ValueError("bivariate exponents must be non-negative")
        return cls({(xexp, yexp): rational(c)})

    @classmethod
    def x(cls) -> "BivariatePoly":
        return cls.monomial(1, 0)

    @classmethod
    def y(cls) -> "BivariatePoly":
        return cls.monomial(0, 1)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, BivariatePoly):
            return self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == BivariatePoly.constant(other)
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other) -> "BivariatePoly":
        other = self._coerce(other)
        out = dict(self.terms)
        for key, c in other.terms.items():
            out[key] = out.get(key, Fraction(0)) + c
        return BivariatePoly(out)

    __radd__ = __add__

    def __neg__(self) -> "BivariatePoly":
        return BivariatePoly({k: -c for k, c in self.terms.items()})

    def __sub__(self, other) -> "BivariatePoly":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "BivariatePoly":
        return self._coerce(other) - self

    def __mul__(self, other) -> "BivariatePoly":
        other = self._coerce(other)
        out: dict[tuple[int, int], Fraction] = {}
        for (ax, ay), ac in self.terms.items():
            for (bx, by), bc in other.terms.items():
                key = (ax + bx, ay + by)
                out[key] = out.get(key, Fraction(0)) + ac * bc
        return BivariatePoly(out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "BivariatePoly":
        if exponent < 0:
            raise ValueError("negative powers of a polynomial are not defined")
        result = BivariatePoly.constant(1)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    @staticmethod
    def _coerce(value) -> "BivariatePoly":
        if isinstance(value, BivariatePoly):
            return value
        return BivariatePoly.constant(rational(value))

    def evaluate(self, a, b) -> Fraction:
        a, b = rational(a), rational(b)
        total = Fraction(0)
        for (xe, ye), c in self.terms.items():
            total += c * a**xe * b**ye
        return total

    def at_x(self, value) -> "BivariatePoly":
        """Substitute a rational for x, leaving a polynomial in y."""
        value = rational(value)
        out: dict[tuple[int, int], Fraction] = {}
        for (xe, ye), c in self.terms.items():
            key = (0, ye)
            out[key] = out.get(key, Fraction(0)) + c * value**xe
        return BivariatePoly(out)

    def at_y(self, value) -> "BivariatePoly":
        """Substitute a rational for y, leaving a polynomial in x."""
        value = rational(value)
        out: dict[tuple[int, int], Fraction] = {}
        for (xe, ye), c in self.terms.items():
            key = (xe, 0)
            out[key] = out.get(key, Fraction(0)) + c * value**ye
        return BivariatePoly(out)

    def degree_x(self) -> int:
        return max((xe for xe, _ in self.terms), default=0)

    def degree_y(self) -> int:
        return max((ye for _, ye in self.terms), default=0)

    def to_json_obj(self) -> list[dict]:
        return [
            {"xexp": xe, "yexp": ye, "num": str(c.numerator), "den": str(c.denominator)}
            for (xe, ye), c in sorted(self.terms.items())
        ]

    @classmethod
    def from_json_obj(cls, obj: Iterable[dict]) -> "BivariatePoly":
        terms = {}
        for item in obj:
            key = (int(item["xexp"]), int(item["yexp"]))
            terms[key] = Fraction(int(item["num"]), int(item["den"]))
        return cls(terms)

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for (xe, ye), c in sorted(self.terms.items(), reverse=True):
            mono = "".join(
                f"{v}^{e}" if e > 1 else v
                for v, e in (("x", xe), ("y", ye))
                if e
            )
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append(f"-{mono}")
            else:
                parts.append(f"{c}*{mono}")
        text = " + ".join(parts)
        return text.replace("+ -", "- ")


def hyperbola_restriction(poly: "BivariatePoly", alpha) -> "LaurentPoly":
    """Substitute x = 1 + alpha/z and y = 1 + z into a bivariate polynomial.

    Pure polynomial algebra (binomial expansion), independent of any subset
    enumeration; the result is a Laurent polynomial in z.
    """
    from math import comb

    alpha = rational(alpha)
    if alpha == 0:
        raise DivisionByZeroError("hyperbola parameter must be nonzero")
    out: dict[int, Fraction] = {}
    for (xe, ye), c in poly.terms.items():
        for s in range(xe + 1):
            left = c * comb(xe, s) * alpha**s
            for t in range(ye + 1):
                e = t - s
                out[e] = out.get(e, Fraction(0)) + left * comb(ye, t)
    return LaurentPoly(out)


def line_y_restriction(poly: "BivariatePoly", c) -> "LaurentPoly":
    """Substitute y = c and x = 1 + z; the result is a polynomial in z."""
    from math import comb

    restricted = poly.at_y(c)
    out: dict[int, Fraction] = {}
    for (xe, _), coeff in restricted.terms.items():
        for s in range(xe + 1):
            out[s] = out.get(s, Fraction(0)) + coeff * comb(xe, s)
    return LaurentPoly(out)


class LaurentPoly:
    """Univariate polynomial with integer (possibly negative) exponents."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[int, Fraction] | None = None):
        self.terms = _clean(terms or {})

    @classmethod
    def zero(cls) -> "LaurentPoly":
        return cls()

    @classmethod
    def constant(cls, c) -> "LaurentPoly":
        return cls({0: rational(c)})

    @classmethod
    def monomial(cls, exp: int, c=1) -> "LaurentPoly":
        return cls({exp: rational(c)})

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, LaurentPoly):
            return self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == LaurentPoly.constant(other)
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other) -> "LaurentPoly":
        other = self._coerce(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, Fraction(0)) + c
        return LaurentPoly(out)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly({e: -c for e, c in self.terms.items()})

    def __sub__(self, other) -> "LaurentPoly":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "LaurentPoly":
        return self._coerce(other) - self

    def __mul__(self, other) -> "LaurentPoly":
        other = self._coerce(other)
        out: dict[int, Fraction] = {}
        for ae, ac in self.terms.items():
            for be, bc in other.terms.items():
                out[ae + be] = out.get(ae + be, Fraction(0)) + ac * bc
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "LaurentPoly":
        if exponent < 0:
            raise ValueError("negative powers of a polynomial are not defined")
        result = LaurentPoly.constant(1)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    @staticmethod
    def _coerce(value) -> "LaurentPoly":
        if isinstance(value, LaurentPoly):
            return value
        return LaurentPoly.constant(rational(value))

    def shift(self, offset: int) -> "LaurentPoly":
        """Multiply by z**offset."""
        return LaurentPoly({e + offset: c for e, c in self.terms.items()})

    def evaluate(self, value) -> Fraction:
        value = rational(value)
        if value == 0 and self.min_exponent() < 0:
            raise DivisionByZeroError("Laurent polynomial with negative exponents evaluated at 0")
        total = Fraction(0)
        for e, c in self.terms.items():
            total += c * value**e
        return total

    def compose_shift(self, offset) -> "LaurentPoly":
        """Substitute z -> z + offset; requires non-negative exponents."""
        if self.min_exponent() < 0:
            raise ValueError("shift substitution needs non-negative exponents")
        offset = rational(offset)
        base = LaurentPoly({1: Fraction(1), 0: offset})
        out = LaurentPoly.zero()
        for e, c in self.terms.items():
            out = out + c * base**e
        return out

    def min_exponent(self) -> int:
        return min(self.terms, default=0)

    def max_exponent(self) -> int:
        return max(self.terms, default=0)

    def to_json_obj(self) -> list[dict]:
        return [
            {"exp": e, "num": str(c.numerator), "den": str(c.denominator)}
            for e, c in sorted(self.terms.items())
        ]

    @classmethod
    def from_json_obj(cls, obj: Iterable[dict]) -> "LaurentPoly":
        return cls({int(item["exp"]): Fraction(int(item["num"]), int(item["den"])) for item in obj})

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e, c in sorted(self.terms.items(), reverse=True):
            if e == 0:
                parts.append(str(c))
            else:
                mono = "z" if e == 1 else f"z^{e}"
                if c == 1:
                    parts.append(mono)
                elif c == -1:
                    parts.append(f"-{mono}")
                else:
                    parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")
