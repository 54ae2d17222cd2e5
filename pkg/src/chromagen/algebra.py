"""Exact polynomial and rational-function arithmetic for the color variable c
and the series variable z.

Everything here is exact: coefficients are arbitrary-precision rationals
(`fractions.Fraction`), there is no floating point anywhere, and all values
are immutable, so they are safe to share across threads.

Three rings are provided:

* ``PolyC``   -- univariate polynomials in c over Q (dense tuple of coefficients),
* ``PolyZC``  -- bivariate polynomials in z and c over Q (sparse dict keyed by
  (z-degree, c-degree)),
* ``RatFunc`` -- the fraction field of PolyZC, kept in a canonical normalized
  form (numerator and denominator coprime, denominator with content 1 and a
  positive coefficient on its first term in the canonical term order).

The canonical term order on PolyZC lists terms by ascending z-degree and,
within one z-degree, descending c-degree.  Sign normalization makes the
first (leading) coefficient in that listing positive, so denominators such
as 1 - (c-1)z keep their familiar "1 + ..." shape while pure-c factors like
c - 1 keep a positive coefficient on c.

On top of the rings sit the two solver-grade operations the rest of the
package needs: a fraction-free (Bareiss) linear solver over PolyZC whose
solutions come back as normalized RatFuncs, and exact extraction of power
series coefficients in z.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Iterable, Mapping, Sequence, Union

# Coefficient field: arbitrary-precision rationals from the standard library.
Rat = Fraction

Scalar = Union[int, Fraction]


class InexactDivisionError(ArithmeticError):
    """Raised when an exact polynomial division leaves a remainder."""


class SingularSystemError(ArithmeticError):
    """Raised when the symbolic linear system has a singular matrix."""


def _as_rat(value: Scalar) -> Fraction:
    # floats are rejected: they would silently break exactness
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"expected an int or Fraction coefficient, got {type(value).__name__}")


# ---------------------------------------------------------------------------
# Univariate polynomials in c
# ---------------------------------------------------------------------------

class PolyC:
    """Polynomial in the color variable c with rational coefficients.

    Coefficients are stored densely, index = degree, with trailing zeros
    stripped; the zero polynomial has an empty coefficient tuple and
    degree -1.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        cs = [_as_rat(x) for x in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "_coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("PolyC is immutable")

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls) -> "PolyC":
        return cls()

    @classmethod
    def one(cls) -> "PolyC":
        return cls((1,))

    @classmethod
    def c(cls) -> "PolyC":
        """The variable c itself."""
        return cls((0, 1))

    @classmethod
    def constant(cls, value: Scalar) -> "PolyC":
        return cls((_as_rat(value),))

    @classmethod
    def monomial(cls, degree: int, coeff: Scalar = 1) -> "PolyC":
        if degree < 0:
            raise ValueError("degree must be nonnegative")
        return cls((0,) * degree + (_as_rat(coeff),))

    # -- inspection ---------------------------------------------------------

    @property
    def coefficients(self) -> tuple[Fraction, ...]:
        return self._coeffs

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self._coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self._coeffs

    @property
    def leading_coefficient(self) -> Fraction:
        return self._coeffs[-1] if self._coeffs else Fraction(0)

    @property
    def is_monic(self) -> bool:
        return bool(self._coeffs) and self._coeffs[-1] == 1

    def coefficient(self, degree: int) -> Fraction:
        if 0 <= degree < len(self._coeffs):
            return self._coeffs[degree]
        return Fraction(0)

    def __call__(self, x: Scalar) -> Fraction:
        """Evaluate at x by Horner's rule."""
        x = _as_rat(x)
        acc = Fraction(0)
        for coeff in reversed(self._coeffs):
            acc = acc * x + coeff
        return acc

    # -- ring operations ----------------------------------------------------

    def _coerce(self, other) -> "PolyC | None":
        if isinstance(other, PolyC):
            return other
        if isinstance(other, (int, Fraction)):
            return PolyC.constant(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self._coeffs, other._coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, x in enumerate(b):
            out[i] += x
        return PolyC(out)

    __radd__ = __add__

    def __neg__(self):
        return PolyC(tuple(-x for x in self._coeffs))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self._coeffs, other._coeffs
        if not a or not b:
            return PolyC.zero()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x == 0:
                continue
            for j, y in enumerate(b):
                out[i + j] += x * y
        return PolyC(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = PolyC.one()
        for _ in range(n):
            result = result * self
        return result

    def divmod(self, other: "PolyC") -> tuple["PolyC", "PolyC"]:
        """Quotient and remainder over the field Q."""
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self._coeffs)
        db = other.degree
        lead = other._coeffs[-1]
        if len(rem) - 1 < db:
            return PolyC.zero(), self
        quot = [Fraction(0)] * (len(rem) - db)
        for i in range(len(quot) - 1, -1, -1):
            q = rem[i + db] / lead
            if q == 0:
                continue
            quot[i] = q
            for j, bj in enumerate(other._coeffs):
                rem[i + j] -= q * bj
        return PolyC(quot), PolyC(rem[:db])

    def exact_div(self, other: "PolyC") -> "PolyC":
        """Exact quotient; raises InexactDivisionError on a nonzero remainder."""
        quot, rem = self.divmod(other)
        if not rem.is_zero:
            raise InexactDivisionError("inexact division")
        return quot

    # -- normalization helpers ----------------------------------------------

    def content(self) -> Fraction:
        """Positive rational q with self/q primitive (integer, coprime coefficients)."""
        if self.is_zero:
            return Fraction(0)
        num_gcd = 0
        den_lcm = 1
        for coeff in self._coeffs:
            if coeff == 0:
                continue
            num_gcd = _gcd_int(num_gcd, abs(coeff.numerator))
            den_lcm = _lcm_int(den_lcm, coeff.denominator)
        return Fraction(num_gcd, den_lcm)

    def scaled(self, factor: Scalar) -> "PolyC":
        factor = _as_rat(factor)
        return PolyC(tuple(x * factor for x in self._coeffs))

    # -- comparison / hashing / display --------------------------------------

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self):
        return hash(("PolyC", self._coeffs))

    def to_text(self, var: str = "c") -> str:
        """Descending powers, explicit '*' and '^': e.g. 'c^2-4*c+5'."""
        if self.is_zero:
            return "0"
        parts: list[str] = []
        for deg in range(self.degree, -1, -1):
            coeff = self._coeffs[deg]
            if coeff == 0:
                continue
            parts.append(_monomial_text(coeff, ((var, deg),), bool(parts)))
        return "".join(parts)

    def __str__(self):
        return self.to_text()

    def __repr__(self):
        return f"PolyC({self.to_text()!r})"


def _gcd_int(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return abs(a)


def _lcm_int(a: int, b: int) -> int:
    return a // _gcd_int(a, b) * b


def _monomial_text(coeff: Fraction, vars_degs: Sequence[tuple[str, int]],
                   joined: bool) -> str:
    """One monomial like '-4*c' or '+3/2*c^2*z', with a sign when joined."""
    factors = [f"{v}^{d}" if d > 1 else v for (v, d) in vars_degs if d > 0]
    mag = abs(coeff)
    if not factors:
        body = str(mag)
    elif mag == 1:
        body = "*".join(factors)
    else:
        body = "*".join([str(mag)] + factors)
    if coeff < 0:
        return "-" + body
    return ("+" if joined else "") + body


def polyc_gcd(a: PolyC, b: PolyC) -> PolyC:
    """Monic-free gcd in Q[c]: primitive integer coefficients, positive leading one."""
    while not b.is_zero:
        a, b = b, a.divmod(b)[1]
    if a.is_zero:
        return a
    a = a.scaled(1 / a.content())
    if a.leading_coefficient < 0:
        a = -a
    return a


def falling_factorial_poly(s: int, gamma: int) -> PolyC:
    """(c-s)(c-s-1)...(c-s-gamma+1): the number of ways to give gamma color
    classes distinct colors chosen outside a palette of s already-used ones."""
    if s < 0 or gamma < 0:
        raise ValueError("s and gamma must be nonnegative")
    result = PolyC.one()
    for i in range(gamma):
        result = result * PolyC((-(s + i), 1))
    return result


# ---------------------------------------------------------------------------
# Bivariate polynomials in z and c
# ---------------------------------------------------------------------------

class PolyZC:
    """Sparse bivariate polynomial in z and c over Q.

    Terms live in a mapping (z-degree, c-degree) -> nonzero coefficient.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[tuple[int, int], Scalar] |
                 Iterable[tuple[tuple[int, int], Scalar]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        table: dict[tuple[int, int], Fraction] = {}
        for (dz, dc), coeff in items:
            if dz < 0 or dc < 0:
                raise ValueError("exponents must be nonnegative")
            coeff = _as_rat(coeff)
            if coeff == 0:
                continue
            key = (dz, dc)
            acc = table.get(key, Fraction(0)) + coeff
            if acc == 0:
                table.pop(key, None)
            else:
                table[key] = acc
        object.__setattr__(self, "_terms", table)

    def __setattr__(self, name, value):
        raise AttributeError("PolyZC is immutable")

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls) -> "PolyZC":
        return cls()

    @classmethod
    def one(cls) -> "PolyZC":
        return cls({(0, 0): 1})

    @classmethod
    def z(cls) -> "PolyZC":
        return cls({(1, 0): 1})

    @classmethod
    def c(cls) -> "PolyZC":
        return cls({(0, 1): 1})

    @classmethod
    def constant(cls, value: Scalar) -> "PolyZC":
        return cls({(0, 0): _as_rat(value)})

    @classmethod
    def from_polyc(cls, p: PolyC, z_degree: int = 0) -> "PolyZC":
        """Embed a PolyC, optionally multiplied by z^z_degree."""
        return cls({(z_degree, dc): coeff for dc, coeff in enumerate(p.coefficients)})

    @classmethod
    def from_z_coefficients(cls, coeffs: Sequence[PolyC]) -> "PolyZC":
        terms: dict[tuple[int, int], Fraction] = {}
        for dz, p in enumerate(coeffs):
            for dc, coeff in enumerate(p.coefficients):
                if coeff != 0:
                    terms[(dz, dc)] = coeff
        return cls(terms)

    # -- inspection ---------------------------------------------------------

    def items(self) -> list[tuple[tuple[int, int], Fraction]]:
        """Terms sorted ascending in the canonical (z-degree, c-degree) order."""
        return sorted(self._terms.items())

    @property
    def is_zero(self) -> bool:
        return not self._terms

    @property
    def z_degree(self) -> int:
        return max((dz for (dz, _) in self._terms), default=-1)

    @property
    def c_degree(self) -> int:
        return max((dc for (_, dc) in self._terms), default=-1)

    def z_coefficient(self, dz: int) -> PolyC:
        """The PolyC coefficient of z^dz."""
        coeffs: dict[int, Fraction] = {}
        for (tz, tc), coeff in self._terms.items():
            if tz == dz:
                coeffs[tc] = coeff
        if not coeffs:
            return PolyC.zero()
        out = [Fraction(0)] * (max(coeffs) + 1)
        for dc, coeff in coeffs.items():
            out[dc] = coeff
        return PolyC(out)

    def z_coefficients(self) -> list[PolyC]:
        """Dense list of PolyC coefficients indexed by z-degree."""
        if self.is_zero:
            return []
        return [self.z_coefficient(dz) for dz in range(self.z_degree + 1)]

    def canonical_leading_term(self) -> tuple[tuple[int, int], Fraction]:
        """First term in the canonical listing (z ascending, c descending)."""
        key = min(self._terms, key=lambda k: (k[0], -k[1]))
        return key, self._terms[key]

    # -- ring operations ----------------------------------------------------

    def _coerce(self, other) -> "PolyZC | None":
        if isinstance(other, PolyZC):
            return other
        if isinstance(other, PolyC):
            return PolyZC.from_polyc(other)
        if isinstance(other, (int, Fraction)):
            return PolyZC.constant(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return PolyZC(itertools.chain(self._terms.items(), other._terms.items()))

    __radd__ = __add__

    def __neg__(self):
        return PolyZC({key: -coeff for key, coeff in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out: dict[tuple[int, int], Fraction] = {}
        for (az, ac), x in self._terms.items():
            for (bz, bc), y in other._terms.items():
                key = (az + bz, ac + bc)
                acc = out.get(key, Fraction(0)) + x * y
                if acc == 0:
                    out.pop(key, None)
                else:
                    out[key] = acc
        return PolyZC(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = PolyZC.one()
        for _ in range(n):
            result = result * self
        return result

    def exact_div(self, other) -> "PolyZC":
        """Exact quotient in Q[z,c]; raises InexactDivisionError otherwise.

        Long division in z with PolyC coefficients: every partial quotient
        must itself be an exact PolyC division, which holds exactly when the
        divisor divides self in the ring.
        """
        other = self._coerce(other)
        if other is None:
            raise TypeError("cannot divide PolyZC by this operand")
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        if self.is_zero:
            return PolyZC.zero()
        rem = self.z_coefficients()
        div = other.z_coefficients()
        db = len(div) - 1
        lead = div[db]
        if len(rem) - 1 < db:
            raise InexactDivisionError("inexact division")
        quot: list[PolyC] = [PolyC.zero()] * (len(rem) - db)
        for i in range(len(quot) - 1, -1, -1):
            if rem[i + db].is_zero:
                continue
            q = rem[i + db].exact_div(lead)
            quot[i] = q
            for j in range(db + 1):
                rem[i + j] = rem[i + j] - q * div[j]
        if any(not p.is_zero for p in rem):
            raise InexactDivisionError("inexact division")
        return PolyZC.from_z_coefficients(quot)

    # -- normalization helpers ----------------------------------------------

    def content(self) -> Fraction:
        """Positive rational q with self/q primitive (integer, coprime coefficients)."""
        if self.is_zero:
            return Fraction(0)
        num_gcd = 0
        den_lcm = 1
        for coeff in self._terms.values():
            num_gcd = _gcd_int(num_gcd, abs(coeff.numerator))
            den_lcm = _lcm_int(den_lcm, coeff.denominator)
        return Fraction(num_gcd, den_lcm)

    def scaled(self, factor: Scalar) -> "PolyZC":
        factor = _as_rat(factor)
        if factor == 0:
            return PolyZC.zero()
        return PolyZC({key: coeff * factor for key, coeff in self._terms.items()})

    # -- comparison / hashing / display --------------------------------------

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(("PolyZC", frozenset(self._terms.items())))

    def to_text(self, zvar: str = "z", cvar: str = "c") -> str:
        """Grouped by ascending power of z, constant chunk first.

        Multi-term z-coefficients are parenthesized, e.g. '1+(-c+1)*z'.
        """
        if self.is_zero:
            return "0"
        parts: list[str] = []
        for dz, p in enumerate(self.z_coefficients()):
            if p.is_zero:
                continue
            nonzero = [(dc, coeff) for dc, coeff in enumerate(p.coefficients) if coeff != 0]
            if dz == 0:
                text = p.to_text(cvar)
                parts.append(text if not parts else
                             ("+" + text if not text.startswith("-") else text))
            elif len(nonzero) == 1:
                dc, coeff = nonzero[0]
                parts.append(_monomial_text(coeff, ((cvar, dc), (zvar, dz)), bool(parts)))
            else:
                joiner = "+" if parts else ""
                zpart = f"{zvar}^{dz}" if dz > 1 else zvar
                parts.append(f"{joiner}({p.to_text(cvar)})*{zpart}")
        return "".join(parts)

    def __str__(self):
        return self.to_text()

    def __repr__(self):
        return f"PolyZC({self.to_text()!r})"


# ---------------------------------------------------------------------------
# Bivariate gcd
# ---------------------------------------------------------------------------

def _content_in_c(p: PolyZC) -> PolyC:
    """gcd in Q[c] of the PolyC coefficients of p viewed as a polynomial in z."""
    acc = PolyC.zero()
    for q in p.z_coefficients():
        acc = polyc_gcd(acc, q)
    return acc


def _pseudo_remainder(a: list[PolyC], b: list[PolyC]) -> list[PolyC]:
    """prem(a, b) over Q[c][z]: remainder of lc(b)^(deg a - deg b + 1) * a by b.

    Inputs and output are dense z-coefficient lists (no trailing zero PolyC).
    """
    db = len(b) - 1
    lead = b[db]
    rem = list(a)
    scale_left = len(a) - len(b) + 1
    while rem and len(rem) - 1 >= db:
        top = rem[-1]
        rem = [p * lead for p in rem[:-1]]
        scale_left -= 1
        shift = len(rem) - db
        for j in range(db):
            rem[shift + j] = rem[shift + j] - top * b[j]
        while rem and rem[-1].is_zero:
            rem.pop()
    factor = lead ** scale_left
    if scale_left > 0 and rem:
        rem = [p * factor for p in rem]
    return rem


def _subresultant_gcd(a: list[PolyC], b: list[PolyC]) -> list[PolyC]:
    """Subresultant polynomial-remainder sequence in z over Q[c].

    Inputs are z-primitive, deg_z(a) >= deg_z(b) >= 0, b nonzero; returns the
    last nonzero remainder (whose z-primitive part is the gcd of a and b).
    """
    g = PolyC.one()
    h = PolyC.one()
    while True:
        d = (len(a) - 1) - (len(b) - 1)
        rem = _pseudo_remainder(a, b)
        if not rem:
            return b
        divisor = g * h ** d
        rem = [p.exact_div(divisor) for p in rem]
        a, b = b, rem
        g = a[-1]
        if d == 1:
            h = g
        elif d > 1:
            h = (g ** d).exact_div(h ** (d - 1))


def bivar_gcd(a: PolyZC, b: PolyZC) -> PolyZC:
    """Greatest common divisor in Q[z,c], primitive with canonical sign.

    Splits off the content in c, runs a subresultant remainder sequence in z
    on the primitive parts, and normalizes the result to integer coprime
    coefficients with a positive coefficient on its smallest term.
    """
    if a.is_zero and b.is_zero:
        raise ValueError("gcd of two zero polynomials is undefined")
    if a.is_zero:
        return _normalize_primitive(b)
    if b.is_zero:
        return _normalize_primitive(a)

    ca, cb = _content_in_c(a), _content_in_c(b)
    pa = a.exact_div(PolyZC.from_polyc(ca))
    pb = b.exact_div(PolyZC.from_polyc(cb))
    gc = polyc_gcd(ca, cb)

    la, lb = pa.z_coefficients(), pb.z_coefficients()
    if len(la) < len(lb):
        la, lb = lb, la
    raw = _subresultant_gcd(la, lb)
    gp = PolyZC.from_z_coefficients(raw)
    gp = gp.exact_div(PolyZC.from_polyc(_content_in_c(gp)))

    return _normalize_primitive(PolyZC.from_polyc(gc) * gp)


def _normalize_primitive(p: PolyZC) -> PolyZC:
    """Scale to content 1 and make the canonical leading coefficient positive."""
    if p.is_zero:
        return p
    p = p.scaled(1 / p.content())
    if p.canonical_leading_term()[1] < 0:
        p = -p
    return p


# ---------------------------------------------------------------------------
# Rational functions in z and c
# ---------------------------------------------------------------------------

class RatFunc:
    """Normalized ratio of two PolyZC values.

    Invariants after construction: denominator nonzero and nonvanishing at
    z = 0 (so a power series in z exists), numerator and denominator coprime,
    denominator primitive (content 1) with a positive canonical leading
    coefficient.  The zero function is 0/1.
    """

    __slots__ = ("_num", "_den")

    def __init__(self, num, den=1):
        num = _as_polyzc(num)
        den = _as_polyzc(den)
        if den.is_zero:
            raise ZeroDivisionError("zero denominator")
        if num.is_zero:
            num, den = PolyZC.zero(), PolyZC.one()
        else:
            g = bivar_gcd(num, den)
            num = num.exact_div(g)
            den = den.exact_div(g)
            scale = 1 / den.content()
            if den.canonical_leading_term()[1] < 0:
                scale = -scale
            num = num.scaled(scale)
            den = den.scaled(scale)
        if den.z_coefficient(0).is_zero:
            raise ValueError("denominator vanishes at z=0; no power series exists")
        object.__setattr__(self, "_num", num)
        object.__setattr__(self, "_den", den)

    def __setattr__(self, name, value):
        raise AttributeError("RatFunc is immutable")

    @property
    def numerator(self) -> PolyZC:
        return self._num

    @property
    def denominator(self) -> PolyZC:
        return self._den

    @property
    def is_zero(self) -> bool:
        return self._num.is_zero

    def _coerce(self, other) -> "RatFunc | None":
        if isinstance(other, RatFunc):
            return other
        if isinstance(other, (int, Fraction, PolyC, PolyZC)):
            return RatFunc(_as_polyzc(other))
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return RatFunc(self._num * other._den + other._num * self._den,
                       self._den * other._den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self._num, self._den)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return RatFunc(self._num * other._num, self._den * other._den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if other.is_zero:
            raise ZeroDivisionError("division by the zero rational function")
        return RatFunc(self._num * other._den, self._den * other._num)

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._num == other._num and self._den == other._den

    def __hash__(self):
        return hash(("RatFunc", self._num, self._den))

    def to_text(self, zvar: str = "z", cvar: str = "c") -> str:
        num = self._num.to_text(zvar, cvar)
        if self._den == PolyZC.one():
            return num
        return f"({num})/({self._den.to_text(zvar, cvar)})"

    def __str__(self):
        return self.to_text()

    def __repr__(self):
        return f"RatFunc({self.to_text()!r})"


def _as_polyzc(value) -> PolyZC:
    if isinstance(value, PolyZC):
        return value
    if isinstance(value, PolyC):
        return PolyZC.from_polyc(value)
    if isinstance(value, (int, Fraction)):
        return PolyZC.constant(value)
    raise TypeError(f"cannot interpret {type(value).__name__} as a PolyZC")


# ---------------------------------------------------------------------------
# Fraction-free linear solver
# ---------------------------------------------------------------------------

def solve_linear_system(matrix: Sequence[Sequence[PolyZC]],
                        rhs: Sequence[PolyZC]) -> list[RatFunc]:
    """Exact solution of A x = b over the fraction field of Q[z,c].

    Bareiss one-step fraction-free elimination on the augmented matrix keeps
    every intermediate entry polynomial; a fraction-free back substitution
    then produces each solution entry as (polynomial) / det(A), normalized
    once through the gcd.  Raises SingularSystemError when det(A) = 0.
    """
    n = len(matrix)
    if n == 0:
        return []
    if any(len(row) != n for row in matrix) or len(rhs) != n:
        raise ValueError("matrix must be square and match the right-hand side")
    aug = [[_as_polyzc(e) for e in row] + [_as_polyzc(b)]
           for row, b in zip(matrix, rhs)]

    prev = PolyZC.one()
    for k in range(n):
        if aug[k][k].is_zero:
            for r in range(k + 1, n):
                if not aug[r][k].is_zero:
                    aug[k], aug[r] = aug[r], aug[k]
                    break
            else:
                raise SingularSystemError("singular system")
        pivot = aug[k][k]
        for i in range(k + 1, n):
            row_i = aug[i]
            head = row_i[k]
            for j in range(k + 1, n + 1):
                row_i[j] = (pivot * row_i[j] - head * aug[k][j]).exact_div(prev)
            row_i[k] = PolyZC.zero()
        prev = pivot

    det = aug[n - 1][n - 1]
    if det.is_zero:
        raise SingularSystemError("singular system")

    # Back substitution with the common denominator det: numerators stay
    # polynomial by Cramer's rule, so each division below is exact.
    numerators: list[PolyZC] = [PolyZC.zero()] * n
    for i in range(n - 1, -1, -1):
        acc = aug[i][n] * det
        for j in range(i + 1, n):
            acc = acc - aug[i][j] * numerators[j]
        numerators[i] = acc.exact_div(aug[i][i])
    return [RatFunc(num, det) for num in numerators]


# ---------------------------------------------------------------------------
# Power series extraction
# ---------------------------------------------------------------------------

def series_coefficients(f: RatFunc, order: int) -> list[PolyC]:
    """Coefficients of z^0 .. z^order of the power series of f around z = 0.

    Uses the division recurrence p_n = (num_n - sum_{j>=1} den_j p_{n-j}) / den_0,
    exact at every step.  Requires den(z=0) nonzero (a RatFunc invariant); for
    the generating functions built here den_0 is a nonzero rational, so every
    coefficient is a genuine PolyC.
    """
    if order < 0:
        raise ValueError("order must be nonnegative")
    num = f.numerator.z_coefficients()
    den = f.denominator.z_coefficients()
    d0 = den[0]
    coeffs: list[PolyC] = []
    for k in range(order + 1):
        acc = num[k] if k < len(num) else PolyC.zero()
        for j in range(1, min(k, len(den) - 1) + 1):
            acc = acc - den[j] * coeffs[k - j]
        coeffs.append(acc.exact_div(d0))
    return coeffs
