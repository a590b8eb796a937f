"""Free non-commutative algebra: generators, words, and exact formal sums.

A :class:`Generator` is an atomic non-commuting symbol (base name, optional
component index, number of overdots, number of primes) or the distinguished
shift symbol ``J``.  A word is a tuple of generators, the empty word being
the multiplicative unit.  An :class:`Expression` is a finite formal sum of
scalar-weighted words with like terms always collected, which makes it the
universal value of the symbolic engine: the free algebra before any
relations are imposed.

Derivations live here too: ``commutator`` (every map [.,N] is a derivation)
and ``dot_derivative`` (the formal overdot, d(J) = 0, extended by the
Leibniz rule).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Iterator

from .scalars import Scalar, coerce_scalar

KIND_ORDINARY = "ordinary"
KIND_SHIFT = "shift"


class Generator:
    """Interned atomic symbol. Use :func:`generator` or :data:`J` to obtain one."""

    __slots__ = ("kind", "name", "component", "dot_order", "shift_order", "_key")

    def __init__(self, kind, name, component, dot_order, shift_order):
        self.kind = kind
        self.name = name
        self.component = component
        self.dot_order = dot_order
        self.shift_order = shift_order
        # Shift symbol sorts before everything; ordinary generators by
        # (name, component, dots, primes).  Stable across runs by construction.
        if kind == KIND_SHIFT:
            self._key = (0, "", 0, 0, 0)
        else:
            self._key = (1, name, component if component is not None else 0,
                         dot_order, shift_order)

    @property
    def is_shift(self) -> bool:
        return self.kind == KIND_SHIFT

    @property
    def sort_key(self):
        return self._key

    def dotted(self, n: int = 1) -> "Generator":
        if self.is_shift:
            raise ValueError("the shift symbol carries no dot order")
        return generator(self.name, self.component, self.dot_order + n, self.shift_order)

    def shifted(self, n: int = 1) -> "Generator":
        if self.is_shift:
            raise ValueError("the shift symbol carries no shift order")
        return generator(self.name, self.component, self.dot_order, self.shift_order + n)

    def text(self) -> str:
        if self.is_shift:
            return "J"
        out = self.name
        if self.component is not None:
            out += str(self.component)
        return out + "." * self.dot_order + "'" * self.shift_order

    def __eq__(self, other):
        return self is other or (
            isinstance(other, Generator)
            and self.kind == other.kind
            and self.name == other.name
            and self.component == other.component
            and self.dot_order == other.dot_order
            and self.shift_order == other.shift_order
        )

    def __hash__(self):
        return hash((self.kind, self.name, self.component, self.dot_order, self.shift_order))

    def __repr__(self):
        return f"<gen {self.text()}>"


_GEN_CACHE: dict[tuple, Generator] = {}


def generator(name: str, component: int | None = None, dot: int = 0, shift: int = 0) -> Generator:
    """The interned ordinary generator with the given attributes."""
    if not name or not name.isalpha():
        raise ValueError(f"generator base name must be alphabetic: {name!r}")
    if name == "J":
        raise ValueError("'J' is reserved for the shift symbol")
    if "dot" in name:
        raise ValueError("generator base names may not contain 'dot' (text-syntax markup)")
    from .scalars import parameter_names

    if name in parameter_names():
        raise ValueError(f"{name!r} names a commuting parameter, not a generator")
    if component is not None and component < 1:
        raise ValueError("component index must be >= 1")
    if dot < 0 or shift < 0:
        raise ValueError("dot/shift orders must be >= 0")
    key = (name, component, dot, shift)
    hit = _GEN_CACHE.get(key)
    if hit is None:
        hit = _GEN_CACHE[key] = Generator(KIND_ORDINARY, name, component, dot, shift)
    return hit


J = Generator(KIND_SHIFT, None, None, 0, 0)

Word = tuple  # tuple[Generator, ...]; () is the multiplicative unit

EMPTY_WORD: Word = ()


def word_text(word: Word) -> str:
    if not word:
        return "1"
    return "*".join(g.text() for g in word)


def word_sort_key(word: Word):
    return (len(word), tuple(g.sort_key for g in word))


def _coerce_coeff(value) -> Scalar:
    return value if isinstance(value, Scalar) else coerce_scalar(value)


class Expression:
    """Finite formal sum of scalar-weighted words. Immutable; zero coefficients
    never stored; each word appears at most once."""

    __slots__ = ("_terms",)

    def __init__(self, terms: dict | None = None):
        # Trusted constructor: callers must pass a collected dict without zeros.
        self._terms = terms or {}

    # -- builders ----------------------------------------------------------

    @staticmethod
    def from_terms(pairs: Iterable[tuple[Word, object]]) -> "Expression":
        acc: dict = {}
        for word, coeff in pairs:
            _accumulate(acc, word, _coerce_coeff(coeff))
        return Expression(acc)

    @staticmethod
    def zero() -> "Expression":
        return _ZERO_EXPR

    @staticmethod
    def from_scalar(value) -> "Expression":
        c = _coerce_coeff(value)
        return Expression({EMPTY_WORD: c}) if not c.is_zero else _ZERO_EXPR

    @staticmethod
    def from_generator(g: Generator) -> "Expression":
        return Expression({(g,): Scalar(1)})

    @staticmethod
    def from_word(word: Word, coeff=1) -> "Expression":
        c = _coerce_coeff(coeff)
        return Expression({tuple(word): c}) if not c.is_zero else _ZERO_EXPR

    # -- inspection ---------------------------------------------------------

    def terms(self) -> Iterator[tuple[Word, Scalar]]:
        """Terms in the canonical word order (deterministic across runs)."""
        return iter(sorted(self._terms.items(), key=lambda kv: word_sort_key(kv[0])))

    @property
    def n_terms(self) -> int:
        return len(self._terms)

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def coefficient(self, word: Word) -> Scalar:
        return self._terms.get(tuple(word), Scalar(0))

    def generators(self) -> set[Generator]:
        out: set[Generator] = set()
        for word in self._terms:
            out.update(word)
        return out

    def as_scalar(self) -> Scalar:
        """The value as a Scalar; fails unless every word is the unit."""
        if not self._terms:
            return Scalar(0)
        if len(self._terms) == 1 and EMPTY_WORD in self._terms:
            return self._terms[EMPTY_WORD]
        raise ValueError(f"not a scalar expression: {self}")

    # -- ring operations -----------------------------------------------------

    @staticmethod
    def _coerce(value):
        if isinstance(value, Expression):
            return value
        if isinstance(value, Generator):
            return Expression.from_generator(value)
        if isinstance(value, (Scalar, int, Fraction)):
            return Expression.from_scalar(value)
        return None

    def __add__(self, other):
        rhs = Expression._coerce(other)
        if rhs is None:
            return NotImplemented
        if not self._terms:
            return rhs
        if not rhs._terms:
            return self
        acc = dict(self._terms)
        for word, coeff in rhs._terms.items():
            _accumulate(acc, word, coeff)
        return Expression(acc)

    __radd__ = __add__

    def __sub__(self, other):
        rhs = Expression._coerce(other)
        if rhs is None:
            return NotImplemented
        return self + (-rhs)

    def __rsub__(self, other):
        rhs = Expression._coerce(other)
        if rhs is None:
            return NotImplemented
        return rhs + (-self)

    def __neg__(self):
        return Expression({w: -c for w, c in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, (Scalar, int, Fraction)):
            return self._scaled(_coerce_coeff(other))
        rhs = Expression._coerce(other)
        if rhs is None:
            return NotImplemented
        acc: dict = {}
        for w1, c1 in self._terms.items():
            for w2, c2 in rhs._terms.items():
                _accumulate(acc, w1 + w2, c1 * c2)
        return Expression(acc)

    def __rmul__(self, other):
        if isinstance(other, (Scalar, int, Fraction)):
            return self._scaled(_coerce_coeff(other))
        rhs = Expression._coerce(other)
        if rhs is None:
            return NotImplemented
        return rhs * self

    def __truediv__(self, other):
        if isinstance(other, (Scalar, int, Fraction)):
            c = _coerce_coeff(other)
            if c.is_zero:
                raise ZeroDivisionError("division by zero scalar")
            return self._scaled(Scalar(1) / c)
        if isinstance(other, Expression):
            return self / other.as_scalar()
        return NotImplemented

    def _scaled(self, c: Scalar) -> "Expression":
        if c.is_zero:
            return _ZERO_EXPR
        return Expression({w: v * c for w, v in self._terms.items()})

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        out = Expression.from_scalar(1)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        rhs = Expression._coerce(other)
        if rhs is None:
            return NotImplemented
        return self._terms == rhs._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __bool__(self):
        return bool(self._terms)

    # -- text form -----------------------------------------------------------

    def text(self) -> str:
        if not self._terms:
            return "0"
        pieces = []
        for word, coeff in self.terms():
            ctext = coeff.text()
            if not word:
                pieces.append(ctext)
            elif ctext == "1":
                pieces.append(word_text(word))
            elif ctext == "-1":
                pieces.append("-" + word_text(word))
            else:
                pieces.append(ctext + "*" + word_text(word))
        out = pieces[0]
        for piece in pieces[1:]:
            if piece.startswith("-") and not piece.startswith("(-"):
                out += " - " + piece[1:]
            else:
                out += " + " + piece
        return out

    def __str__(self):
        return self.text()

    def __repr__(self):
        return f"Expression({self.text()})"


def _accumulate(acc: dict, word: Word, coeff: Scalar) -> None:
    old = acc.get(word)
    if old is None:
        if not coeff.is_zero:
            acc[word] = coeff
        return
    new = old + coeff
    if new.is_zero:
        del acc[word]
    else:
        acc[word] = new


_ZERO_EXPR = Expression({})


def expr(value) -> Expression:
    """Coerce a Generator, Scalar, int, or Fraction to an Expression."""
    out = Expression._coerce(value)
    if out is None:
        raise TypeError(f"cannot use {type(value).__name__} as an expression")
    return out


def commutator(a, b) -> Expression:
    """[a, b] = ab - ba."""
    ea, eb = expr(a), expr(b)
    return ea * eb - eb * ea


def dot_derivative(e: Expression) -> Expression:
    """The formal overdot: raises dot_order on each ordinary generator in turn
    (Leibniz rule), annihilates J and the unit, and is scalar-linear."""
    acc: dict = {}
    for word, coeff in expr(e)._terms.items():
        for pos, g in enumerate(word):
            if g.is_shift:
                continue
            new_word = word[:pos] + (g.dotted(),) + word[pos + 1:]
            _accumulate(acc, new_word, coeff)
    return Expression(acc)


def substitute(e: Expression, target: Generator, replacement) -> Expression:
    """Replace every occurrence of ``target`` in every word by ``replacement``,
    expanding multilinearly."""
    rep = expr(replacement)
    out = Expression.zero()
    for word, coeff in expr(e)._terms.items():
        if target not in word:
            out = out + Expression.from_word(word, coeff)
            continue
        piece = Expression.from_scalar(coeff)
        segment: list[Generator] = []
        for g in word:
            if g == target:
                piece = piece * Expression.from_word(tuple(segment)) * rep
                segment = []
            else:
                segment.append(g)
        piece = piece * Expression.from_word(tuple(segment))
        out = out + piece
    return out
