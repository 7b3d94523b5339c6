"""Exact coefficient arithmetic.

Two layers: Poly, a sparse integer polynomial in the fixed variables
q, y, z; and BinPoly, a polynomial in one integer argument n stored in
the binomial basis C(n, 0), C(n, 1), ...  BinPoly coefficients may be
plain ints or Polys, and evaluation extends to negative n through
C(-n, k) = (-1)^k C(n + k - 1, k), so no floating point ever appears.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Any, Iterator, Mapping

VARS = ("q", "y", "z")
_VAR_INDEX = {v: i for i, v in enumerate(VARS)}

Expt = tuple[int, int, int]


class Poly:
    """Immutable sparse polynomial over the integers in q, y, z."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Expt, int] | None = None):
        data: dict[Expt, int] = {}
        for expt, coeff in (terms or {}).items():
            e = tuple(expt)
            if len(e) != 3 or any(not isinstance(x, int) or x < 0 for x in e):
                raise ValueError(f"bad exponent vector {expt!r}")
            if not isinstance(coeff, int):
                raise ValueError(f"coefficients must be ints, got {coeff!r}")
            if coeff:
                data[e] = data.get(e, 0) + coeff
        self.terms: dict[Expt, int] = {e: c for e, c in data.items() if c}

    @classmethod
    def constant(cls, c: int) -> "Poly":
        return cls({(0, 0, 0): c}) if c else cls()

    @classmethod
    def variable(cls, name: str) -> "Poly":
        if name not in _VAR_INDEX:
            raise ValueError(f"unknown variable {name!r}, have {VARS}")
        e = [0, 0, 0]
        e[_VAR_INDEX[name]] = 1
        return cls({tuple(e): 1})

    def _coerce(self, other: Any) -> "Poly | None":
        if isinstance(other, Poly):
            return other
        if isinstance(other, int):
            return Poly.constant(other)
        return None

    def __add__(self, other: Any) -> "Poly":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out = dict(self.terms)
        for e, c in o.terms.items():
            out[e] = out.get(e, 0) + c
        return Poly(out)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly({e: -c for e, c in self.terms.items()})

    def __sub__(self, other: Any) -> "Poly":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other: Any) -> "Poly":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other: Any) -> "Poly":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out: dict[Expt, int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in o.terms.items():
                e = (e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2])
                out[e] = out.get(e, 0) + c1 * c2
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, power: int) -> "Poly":
        if not isinstance(power, int) or power < 0:
            raise ValueError(f"exponent must be a non-negative int, got {power!r}")
        out = Poly.constant(1)
        for _ in range(power):
            out = out * self
        return out

    def __eq__(self, other: Any) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.terms == o.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_constant(self) -> bool:
        return all(e == (0, 0, 0) for e in self.terms)

    def constant_value(self) -> int:
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return self.terms.get((0, 0, 0), 0)

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(e) for e in self.terms), default=-1)

    def substitute(self, values: Mapping[str, int]) -> "Poly":
        """Replace some variables by integers."""
        repl = []
        for name, val in values.items():
            if name not in _VAR_INDEX:
                raise ValueError(f"unknown variable {name!r}")
            if not isinstance(val, int):
                raise ValueError(f"substitution values must be ints, got {val!r}")
            repl.append((_VAR_INDEX[name], val))
        out: dict[Expt, int] = {}
        for e, c in self.terms.items():
            exps = list(e)
            for i, val in repl:
                c *= val ** exps[i]
                exps[i] = 0
            key = tuple(exps)
            out[key] = out.get(key, 0) + c
        return Poly(out)

    def coefficient_of(self, name: str, power: int) -> "Poly":
        """Coefficient of name**power, viewed as a polynomial in that variable."""
        i = _VAR_INDEX[name]
        out: dict[Expt, int] = {}
        for e, c in self.terms.items():
            if e[i] == power:
                key = tuple(0 if j == i else x for j, x in enumerate(e))
                out[key] = c
        return Poly(out)

    def content(self) -> int:
        """Gcd of the integer coefficients; 0 for the zero polynomial."""
        return math.gcd(*self.terms.values()) if self.terms else 0

    def _sorted_terms(self) -> Iterator[tuple[Expt, int]]:
        # highest total degree first, then exponent vectors descending,
        # so q-heavy monomials precede y- and z-heavy ones of equal degree
        for e in sorted(self.terms, key=lambda e: (sum(e), e), reverse=True):
            yield e, self.terms[e]

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for e, c in self._sorted_terms():
            factors = []
            for name, exp in zip(VARS, e):
                if exp == 1:
                    factors.append(name)
                elif exp > 1:
                    factors.append(f"{name}^{exp}")
            if not factors:
                body = str(abs(c))
            elif abs(c) == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(abs(c))] + factors)
            sign = "-" if c < 0 else "+"
            pieces.append((sign, body))
        first_sign, first_body = pieces[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in pieces[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self) -> str:
        return f"Poly({self})"


Q = Poly.variable("q")
Y = Poly.variable("y")
Z = Poly.variable("z")


def binomial(n: int, k: int) -> int:
    """C(n, k) for any integer n, via the reflection at negative n."""
    if k < 0:
        return 0
    if n >= 0:
        return math.comb(n, k)
    return (-1) ** k * math.comb(-n + k - 1, k)


def falling_coeffs(k: int) -> list[int]:
    """Coefficients c with n(n-1)...(n-k+1) = sum c[j] n^j, length k+1."""
    coeffs = [1]
    for i in range(k):
        nxt = [0] * (len(coeffs) + 1)
        for j, c in enumerate(coeffs):
            nxt[j + 1] += c
            nxt[j] -= i * c
        coeffs = nxt
    return coeffs


def _is_zero(c: Any) -> bool:
    return c == 0


def _signed_body(c: Any, base: str) -> tuple[str, str]:
    """Split a coefficient*base term into a sign and a magnitude string."""
    if isinstance(c, Poly) and len(c.terms) == 1:
        # single monomial: pull its sign out like an integer's
        ((e, cc),) = c.terms.items()
        if cc < 0:
            sign, mag = "-", str(Poly({e: -cc}))
        else:
            sign, mag = "+", str(c)
        if mag == "1":
            return sign, base if base else "1"
        return sign, f"{mag}*{base}" if base else mag
    if isinstance(c, Poly):
        text = f"({c})"
        return "+", f"{text}*{base}" if base else text
    sign = "-" if c < 0 else "+"
    mag = abs(c)
    if not base:
        return sign, str(mag)
    if mag == 1:
        return sign, base
    return sign, f"{mag}*{base}"


@dataclass(frozen=True)
class BinPoly:
    """Polynomial in n written in the binomial basis.

    coeffs[k] multiplies C(n, k); trailing zeros are trimmed so equal
    polynomials have equal tuples.  Coefficients are ints or Polys.
    """

    coeffs: tuple[Any, ...]

    def __post_init__(self):
        cleaned = []
        for c in self.coeffs:
            if isinstance(c, Poly) and c.is_constant():
                c = c.constant_value()
            cleaned.append(c)
        while cleaned and _is_zero(cleaned[-1]):
            cleaned.pop()
        object.__setattr__(self, "coeffs", tuple(cleaned))

    def coefficient(self, k: int) -> Any:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def degree(self) -> int:
        return len(self.coeffs) - 1

    def eval(self, n: int) -> Any:
        """Exact value at an integer, of the coefficient ring's type."""
        total: Any = 0
        for k, c in enumerate(self.coeffs):
            if not _is_zero(c):
                total = total + c * binomial(n, k)
        return total

    def __add__(self, other: "BinPoly") -> "BinPoly":
        if not isinstance(other, BinPoly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        merged = list(a)
        for k, c in enumerate(b):
            merged[k] = merged[k] + c
        return BinPoly(tuple(merged))

    def scale(self, factor: Any) -> "BinPoly":
        return BinPoly(tuple(factor * c for c in self.coeffs))

    def binomial_str(self, var: str = "n") -> str:
        if not self.coeffs:
            return "0"
        pieces = []
        for k, c in enumerate(self.coeffs):
            if _is_zero(c):
                continue
            base = f"C({var},{k})" if k else ""
            pieces.append(_signed_body(c, base))
        first_sign, first_body = pieces[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in pieces[1:]:
            out += f" {sign} {body}"
        return out

    def monomial_str(self, var: str = "n") -> str:
        """Render in powers of the argument over one integer denominator."""
        if not self.coeffs:
            return "0"
        d = self.degree()
        denom = math.factorial(d)
        numer: list[Any] = [0] * (d + 1)
        for k, c in enumerate(self.coeffs):
            if _is_zero(c):
                continue
            scale = denom // math.factorial(k)
            for j, fc in enumerate(falling_coeffs(k)):
                if fc:
                    numer[j] = numer[j] + c * (scale * fc)
        ints = []
        for c in numer:
            ints.append(c.content() if isinstance(c, Poly) else abs(c))
        g = math.gcd(denom, *ints) if ints else denom
        if g > 1:
            denom //= g
            numer = [c // g if isinstance(c, int) else
                     Poly({e: cc // g for e, cc in c.terms.items()}) for c in numer]

        pieces = []
        for j in range(d, -1, -1):
            c = numer[j]
            if _is_zero(c):
                continue
            base = "" if j == 0 else (var if j == 1 else f"{var}^{j}")
            pieces.append(_signed_body(c, base))
        if not pieces:
            return "0"
        first_sign, first_body = pieces[0]
        body = ("-" if first_sign == "-" else "") + first_body
        for sign, piece in pieces[1:]:
            body += f" {sign} {piece}"
        return f"({body})/{denom}" if denom > 1 else body

    def __str__(self) -> str:
        return self.binomial_str()
