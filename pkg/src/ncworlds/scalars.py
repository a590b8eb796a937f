"""Exact scalar coefficients: Gaussian rationals extended by commuting parameters.

A :class:`Scalar` is an element of Q(i)(tau, hbar, dt, h, k, ...), i.e. a
rational function in the declared commuting parameter symbols whose
coefficients are Gaussian rationals.  Arithmetic is exact and the internal
representation is canonical (numerator/denominator reduced by their gcd), so
equality -- and therefore zero-testing of symbolic expressions built on top
of these coefficients -- is decidable.

Internally a scalar is stored either as a bare Gaussian rational (the common
case: plain numbers like 1/2 or 3i) or as a sympy ``FracElement`` over the
current parameter field.  Constants are two orders of magnitude cheaper than
field elements, and demotion back to the constant form keeps the
representation canonical across the two.
"""

from __future__ import annotations

from fractions import Fraction

from sympy.polys.domains import QQ, QQ_I
from sympy.polys.fields import field as _frac_field

DEFAULT_PARAMETERS = ("tau", "hbar", "dt", "h", "k")

# 'i' is the imaginary unit, 'J' the shift symbol; neither may be a parameter.
_RESERVED_NAMES = frozenset({"i", "J"})


class _ParameterSpace:
    """Append-only registry of parameter names and the fields built on them.

    Names are never removed, so the generator list of any older field is a
    prefix of every newer one and elements lift by zero-padding exponent
    tuples.
    """

    def __init__(self) -> None:
        self._names: list[str] = list(DEFAULT_PARAMETERS)
        self._fields: dict[int, object] = {}

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(self._names)

    def declare(self, name: str) -> None:
        if not isinstance(name, str) or not name.isidentifier():
            raise ValueError(f"parameter name must be an identifier: {name!r}")
        if name in _RESERVED_NAMES:
            raise ValueError(f"{name!r} is reserved and cannot be a parameter")
        if name not in self._names:
            self._names.append(name)

    def field(self):
        n = len(self._names)
        if n not in self._fields:
            self._fields[n] = _frac_field(list(self._names), QQ_I)[0]
        return self._fields[n]


_SPACE = _ParameterSpace()


def declare_parameter(name: str) -> "Scalar":
    """Register ``name`` as a commuting parameter and return it as a Scalar."""
    _SPACE.declare(name)
    return parameter(name)


def parameter_names() -> tuple[str, ...]:
    return _SPACE.names


def _gauss(value) -> object:
    """Coerce an int or Fraction to a Gaussian rational."""
    if isinstance(value, int):
        return QQ_I(value, 0)
    if isinstance(value, Fraction):
        return QQ_I(QQ(value.numerator, value.denominator))
    raise TypeError(f"cannot coerce {type(value).__name__} to a scalar")


def _lift(element, target_field):
    """Re-express a FracElement in a field whose generators extend its own."""
    src = element.field
    if src is target_field:
        return element
    pad = len(target_field.gens) - len(src.gens)
    src_names = [str(s) for s in src.symbols]
    dst_names = [str(s) for s in target_field.symbols]
    if pad < 0 or src_names != dst_names[: len(src_names)]:
        raise ValueError("parameter fields are not nested; cannot lift")
    zeros = (0,) * pad
    num = target_field.ring.from_dict({m + zeros: c for m, c in element.numer.terms()})
    den = target_field.ring.from_dict({m + zeros: c for m, c in element.denom.terms()})
    return target_field.raw_new(num, den)


class Scalar:
    """Immutable exact coefficient: Gaussian rational times a rational function
    in the declared parameters. No floating point is involved anywhere."""

    __slots__ = ("_const", "_frac")

    def __init__(self, value=0):
        if isinstance(value, Scalar):
            self._const, self._frac = value._const, value._frac
        else:
            self._const, self._frac = _gauss(value), None

    @staticmethod
    def _from_const(c) -> "Scalar":
        s = Scalar.__new__(Scalar)
        s._const, s._frac = c, None
        return s

    @staticmethod
    def _from_frac(el) -> "Scalar":
        # Demote ground elements so equal values share one representation.
        if el.numer.is_ground and el.denom.is_ground:
            zm = el.field.ring.zero_monom
            num = el.numer.get(zm, QQ_I.zero)
            den = el.denom.get(zm, QQ_I.one)
            return Scalar._from_const(num / den)
        s = Scalar.__new__(Scalar)
        s._const, s._frac = None, el
        return s

    # -- constructors -----------------------------------------------------

    @staticmethod
    def rational(numerator: int, denominator: int = 1) -> "Scalar":
        return Scalar(Fraction(numerator, denominator))

    @staticmethod
    def imaginary() -> "Scalar":
        return Scalar._from_const(QQ_I(0, 1))

    # -- structure --------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return self._frac is None and not self._const

    @property
    def is_one(self) -> bool:
        return self._const is not None and self._const == QQ_I.one

    @property
    def is_constant(self) -> bool:
        """True when no parameter symbol occurs (a bare Gaussian rational)."""
        return self._frac is None

    def as_fraction(self) -> Fraction:
        """The value as a plain Fraction; fails on parameters or imaginary part."""
        if self._frac is not None:
            raise ValueError(f"not a rational constant: {self}")
        c = self._const
        if c.y:
            raise ValueError(f"not a real rational: {self}")
        return Fraction(int(c.x.numerator), int(c.x.denominator))

    def _as_frac_in(self, fld):
        if self._frac is not None:
            return _lift(self._frac, fld)
        return fld.ground_new(self._const)

    def _common_field(self, other: "Scalar"):
        fa = self._frac.field if self._frac is not None else None
        fb = other._frac.field if other._frac is not None else None
        if fa is None:
            return fb
        if fb is None or fa is fb:
            return fa
        return fa if len(fa.gens) >= len(fb.gens) else fb

    # -- arithmetic -------------------------------------------------------

    @staticmethod
    def _coerce(value):
        if isinstance(value, Scalar):
            return value
        if isinstance(value, (int, Fraction)):
            return Scalar(value)
        return None

    def _binary(self, other, op):
        rhs = Scalar._coerce(other)
        if rhs is None:
            return NotImplemented
        fld = self._common_field(rhs)
        if fld is None:
            return op(self._const, rhs._const), None
        return None, op(self._as_frac_in(fld), rhs._as_frac_in(fld))

    @staticmethod
    def _wrap(pair):
        if pair is NotImplemented:
            return NotImplemented
        c, f = pair
        return Scalar._from_const(c) if f is None else Scalar._from_frac(f)

    def __add__(self, other):
        return Scalar._wrap(self._binary(other, lambda a, b: a + b))

    __radd__ = __add__

    def __sub__(self, other):
        return Scalar._wrap(self._binary(other, lambda a, b: a - b))

    def __rsub__(self, other):
        return Scalar._wrap(self._binary(other, lambda a, b: b - a))

    def __mul__(self, other):
        return Scalar._wrap(self._binary(other, lambda a, b: a * b))

    __rmul__ = __mul__

    def __truediv__(self, other):
        rhs = Scalar._coerce(other)
        if rhs is None:
            return NotImplemented
        if rhs.is_zero:
            raise ZeroDivisionError("scalar division by zero")
        return Scalar._wrap(self._binary(rhs, lambda a, b: a / b))

    def __rtruediv__(self, other):
        lhs = Scalar._coerce(other)
        if lhs is None:
            return NotImplemented
        return lhs / self

    def __neg__(self):
        if self._frac is None:
            return Scalar._from_const(-self._const)
        return Scalar._from_frac(-self._frac)

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return Scalar(1) / (self ** (-exponent))
        out = Scalar(1)
        base = self
        n = exponent
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        rhs = Scalar._coerce(other)
        if rhs is None:
            return NotImplemented
        if (self._frac is None) != (rhs._frac is None):
            # Demotion keeps constants out of the frac form, so kinds differ
            # only for genuinely different values.
            return False
        if self._frac is None:
            return self._const == rhs._const
        fld = self._common_field(rhs)
        return self._as_frac_in(fld) == rhs._as_frac_in(fld)

    def __hash__(self):
        if self._frac is None:
            return hash(self._const)
        return hash(self._frac)

    def __bool__(self):
        return not self.is_zero

    # -- text form ----------------------------------------------------------
    # The output is valid input for the expression parser; see exprparse.

    def text(self) -> str:
        if self._frac is None:
            return _gauss_text(self._const)
        num, den = self._frac.numer, self._frac.denom
        num_text, num_terms = _poly_text(num)
        if den == den.ring.one:
            return f"({num_text})" if num_terms > 1 else num_text
        den_text, _ = _poly_text(den)
        num_part = f"({num_text})" if num_terms > 1 else num_text
        return f"{num_part}/({den_text})"

    def __str__(self):
        return self.text()

    def __repr__(self):
        return f"Scalar({self.text()})"


def _fraction_text(q) -> str:
    return str(Fraction(int(q.numerator), int(q.denominator)))


def _gauss_text(c) -> str:
    re, im = c.x, c.y
    if not im:
        return _fraction_text(re)
    if not re:
        if im == 1:
            return "i"
        if im == -1:
            return "-i"
        return f"{_fraction_text(im)}*i"
    im_text = "i" if abs(im) == 1 else f"{_fraction_text(abs(im))}*i"
    sign = "+" if im > 0 else "-"
    return f"({_fraction_text(re)} {sign} {im_text})"


def _poly_text(poly) -> tuple[str, int]:
    """Render a PolyElement; returns (text, number of terms)."""
    gens = [g.name for g in poly.ring.symbols] if hasattr(poly.ring, "symbols") else None
    if gens is None:  # pragma: no cover - sympy always exposes symbols
        gens = [str(g) for g in poly.ring.gens]
    terms = sorted(poly.terms(), key=lambda t: t[0], reverse=True)
    if not terms:
        return "0", 1
    pieces = []
    for monom, coeff in terms:
        factors = []
        for name, exp in zip(gens, monom):
            if exp == 1:
                factors.append(name)
            elif exp > 1:
                factors.append(f"{name}^{exp}")
        ctext = _gauss_text(coeff)
        if not factors:
            pieces.append(ctext)
        elif ctext == "1":
            pieces.append("*".join(factors))
        elif ctext == "-1":
            pieces.append("-" + "*".join(factors))
        else:
            pieces.append(ctext + "*" + "*".join(factors))
    out = pieces[0]
    for piece in pieces[1:]:
        if piece.startswith("-") and not piece.startswith("(-"):
            out += " - " + piece[1:]
        else:
            out += " + " + piece
    return out, len(terms)


def parameter(name: str) -> Scalar:
    """The declared parameter ``name`` as a Scalar."""
    names = _SPACE.names
    if name not in names:
        raise ValueError(
            f"unknown parameter {name!r}; declare it with declare_parameter() first"
        )
    fld = _SPACE.field()
    return Scalar._from_frac(fld.gens[names.index(name)])


ZERO = Scalar(0)
ONE = Scalar(1)
I = Scalar.imaginary()


def coerce_scalar(value) -> Scalar:
    """Coerce ints, Fractions, and Scalars to Scalar (TypeError otherwise)."""
    s = Scalar._coerce(value)
    if s is None:
        raise TypeError(f"cannot use {type(value).__name__} as a scalar")
    return s
