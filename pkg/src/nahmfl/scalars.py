"""Exact and floating complex scalars.

Weights are always exact `fractions.Fraction`.  Eigenvalues, positions and
operator coefficients are either Gaussian rationals (:class:`QQi`, exact) or
Python ``complex`` (floating).  Exact values survive JSON round trips
bit-identically; floating comparisons always go through an explicit
tolerance.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Union

#: default tolerance for floating-point predicates ("is an integer", equality)
DEFAULT_TOL = 1e-9


class QQi:
    """A Gaussian rational: ``re + im*i`` with ``re``, ``im`` exact fractions.

    Arithmetic with ``int``/``Fraction``/``QQi`` stays exact; mixing with
    ``float``/``complex`` falls back to ``complex``.
    """

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", Fraction(re))
        object.__setattr__(self, "im", Fraction(im))

    def __setattr__(self, name, value):
        raise AttributeError("QQi is immutable")

    # -- conversions ------------------------------------------------------

    def __complex__(self) -> complex:
        return complex(float(self.re), float(self.im))

    @property
    def is_real(self) -> bool:
        return self.im == 0

    def is_integer(self) -> bool:
        return self.im == 0 and self.re.denominator == 1

    def conjugate(self) -> "QQi":
        return QQi(self.re, -self.im)

    # -- arithmetic -------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, QQi):
            return other
        if isinstance(other, (int, Fraction)):
            return QQi(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return complex(self) + other
        return QQi(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __neg__(self):
        return QQi(-self.re, -self.im)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return complex(self) - other
        return QQi(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return complex(self) * other
        return QQi(self.re * o.re - self.im * o.im,
                   self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return complex(self) / other
        n = o.re * o.re + o.im * o.im
        if n == 0:
            raise ZeroDivisionError("division by zero QQi")
        return QQi((self.re * o.re + self.im * o.im) / n,
                   (self.im * o.re - self.re * o.im) / n)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return other / complex(self)
        return o / self

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("QQi powers must be nonnegative integers")
        out = QQi(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, QQi):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, Fraction)):
            return self.im == 0 and self.re == other
        if isinstance(other, (float, complex)):
            return complex(self) == other
        return NotImplemented

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __bool__(self):
        return self.re != 0 or self.im != 0

    def __repr__(self):
        if self.im == 0:
            return f"QQi({self.re})"
        return f"QQi({self.re}, {self.im})"


#: a scalar is exact (QQi) or floating (complex)
Cx = Union[QQi, complex]


def is_exact(x: Cx) -> bool:
    return isinstance(x, QQi)


def as_complex(x: Cx) -> complex:
    return complex(x)


def cx_eq(a: Cx, b: Cx, tol: float = 0.0) -> bool:
    """Equality of scalars; exact when both sides are exact, else within tol."""
    if isinstance(a, QQi) and isinstance(b, QQi):
        return a == b
    return abs(complex(a) - complex(b)) <= tol


def is_integer_scalar(x: Cx, tol: float = DEFAULT_TOL) -> bool:
    """Whether x is an integer; floating values use distance-to-nearest < tol."""
    if isinstance(x, QQi):
        return x.is_integer()
    z = complex(x)
    return abs(z.imag) < tol and abs(z.real - round(z.real)) < tol


def real_part(x: Cx):
    """Real part, exact (Fraction) for exact input, float otherwise."""
    if isinstance(x, QQi):
        return x.re
    return complex(x).real


def parse_rational(text) -> Fraction:
    """Parse an exact rational from "p/q", "p" or an int."""
    if isinstance(text, int):
        return Fraction(text)
    if isinstance(text, Fraction):
        return text
    if isinstance(text, str):
        return Fraction(text.strip())
    raise ValueError(f"not an exact rational: {text!r}")


def rational_to_str(q: Fraction) -> str:
    return str(q)


def scalar_to_json(x: Cx):
    """Serialize as [re, im]; rational strings for exact, decimals otherwise."""
    if isinstance(x, QQi):
        return [str(x.re), str(x.im)]
    z = complex(x)
    return [z.real, z.imag]


def scalar_from_json(v) -> Cx:
    """Parse [re, im] where each part is a rational string or a number.

    A bare number or string is accepted as a purely real scalar.  Mixing an
    exact string with a float degrades the whole scalar to floating.
    """
    if isinstance(v, (int, str)):
        v = [v, 0]
    elif isinstance(v, float):
        v = [v, 0.0]
    if not isinstance(v, (list, tuple)) or len(v) != 2:
        raise ValueError(f"complex scalar must be a [re, im] pair, got {v!r}")
    re, im = v
    exact = all(isinstance(p, (int, str)) for p in (re, im))
    if exact:
        return QQi(parse_rational(re), parse_rational(im))
    return complex(float(Fraction(re) if isinstance(re, str) else re),
                   float(Fraction(im) if isinstance(im, str) else im))


def format_float(x: float) -> str:
    """17 significant digits, enough to round-trip an IEEE double."""
    return format(x, ".17g")
