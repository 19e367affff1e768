"""Exact complex scalars with rational real and imaginary parts.

All arithmetic in the package is carried out in the field Q(i) so that
results such as -85+30i are reproduced bit-exactly.  Scalars are immutable;
``fractions.Fraction`` keeps each component in lowest terms.
"""

from __future__ import annotations

import re as _re
from fractions import Fraction

from .errors import ParseError

RationalLike = int | Fraction


def _frac(x: RationalLike) -> Fraction:
    if isinstance(x, bool) or not isinstance(x, (int, Fraction)):
        raise TypeError(f"expected an integer or Fraction, got {type(x).__name__}")
    return Fraction(x)


class GaussianRational:
    """A complex number re + im*i with exact rational components."""

    __slots__ = ("re", "im")

    def __init__(self, re: RationalLike = 0, im: RationalLike = 0):
        object.__setattr__(self, "re", _frac(re))
        object.__setattr__(self, "im", _frac(im))

    def __setattr__(self, name, value):
        raise AttributeError("GaussianRational is immutable")

    # -- predicates ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.re and not self.im

    def is_real(self) -> bool:
        return not self.im

    def __bool__(self) -> bool:
        return not self.is_zero()

    # -- field arithmetic ---------------------------------------------------

    @staticmethod
    def _coerce(other) -> "GaussianRational | None":
        if isinstance(other, GaussianRational):
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return GaussianRational(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(
            self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        n = o.abs_squared()
        if not n:
            raise ZeroDivisionError("division by zero GaussianRational")
        return GaussianRational(
            (self.re * o.re + self.im * o.im) / n, (self.im * o.re - self.re * o.im) / n
        )

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return (ONE / self) ** (-exponent)
        result = ONE
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def abs_squared(self) -> Fraction:
        """|z|^2, always an exact rational."""
        return self.re * self.re + self.im * self.im

    # -- comparison / hashing -----------------------------------------------

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        if not self.im:
            return hash(self.re)
        return hash((self.re, self.im))

    # -- text and JSON forms --------------------------------------------------

    def __repr__(self):
        return f"GaussianRational({self.re!r}, {self.im!r})"

    def __str__(self):
        if self.is_zero():
            return "0"
        parts = []
        if self.re:
            parts.append(str(self.re))
        if self.im:
            sign = "-" if self.im < 0 else ("+" if parts else "")
            mag = abs(self.im)
            parts.append(f"{sign}{'' if mag == 1 else mag}i")
        return "".join(parts)

    _TERM = _re.compile(
        r"""(?P<sign>[+-]?)            # leading sign
            (?P<num>\d+(?:/\d+)?)?     # optional rational magnitude
            (?P<imag>i)?               # imaginary marker
            """,
        _re.VERBOSE,
    )

    @classmethod
    def parse(cls, text: str) -> "GaussianRational":
        """Parse literals like "2", "-1i", "2-1i", "1/2+3/4i", "-i".

        No floating point forms are accepted; this keeps every CLI input
        inside the exact field.
        """
        s = text.strip().replace(" ", "")
        if not s:
            raise ParseError("empty scalar literal")
        re_part = Fraction(0)
        im_part = Fraction(0)
        pos = 0
        seen = 0
        while pos < len(s):
            m = cls._TERM.match(s, pos)
            if not m or m.end() == pos or (m["num"] is None and m["imag"] is None):
                raise ParseError(f"bad scalar literal: {text!r}")
            mag = Fraction(m["num"]) if m["num"] is not None else Fraction(1)
            if m["sign"] == "-":
                mag = -mag
            if m["imag"]:
                im_part += mag
            else:
                re_part += mag
            pos = m.end()
            seen += 1
            if seen > 2:
                raise ParseError(f"bad scalar literal: {text!r}")
        return cls(re_part, im_part)

    def to_json(self) -> dict:
        return {"re": str(self.re), "im": str(self.im)}

    @classmethod
    def from_json(cls, obj) -> "GaussianRational":
        if not isinstance(obj, dict) or set(obj) - {"re", "im"}:
            raise ParseError(f"bad scalar object: {obj!r}")
        try:
            return cls(Fraction(str(obj.get("re", 0))), Fraction(str(obj.get("im", 0))))
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"bad scalar object: {obj!r}") from exc


ZERO = GaussianRational(0)
ONE = GaussianRational(1)
I = GaussianRational(0, 1)


def gauss(re: RationalLike = 0, im: RationalLike = 0) -> GaussianRational:
    """Shorthand constructor used heavily in tests."""
    return GaussianRational(re, im)
