"""Concrete numeric model: J-powers acting on time series.

The crossed-product algebra realizes the shift relation fJ = Jf' with actual
data: an element is a finite sum of (J^m, series) pairs and multiplication
twists by the shift, (J^m, f)(J^n, g) = (J^(m+n), shift(f, n) * g).  The
symbolic free-algebra identities specialize through Xdot_i -> (J, dX_i/tau),
so every equation of the symbolic theorem must hold pointwise here on
arbitrary series -- which is what this module measures.

Windows only ever shrink: each shift or difference loses exactly one sample
from the top, and operations on windows shorter than required raise
WindowTooShort instead of padding (padding would fabricate data and break
the exact identities at the boundary).

tau is kept explicit everywhere; the tau = 1 specialization recovers the
compact closed forms B = J^2 d(X') x d(X) and
E = J^2 d^2(X) - J^3 d(X'') x (d(X') x d(X)).

Arithmetic is generic over the sample type: floats for long random series,
ints/Fractions for exact runs, and exact quadratic surds a + b*sqrt(r) so
that Brownian walks with irrational step (e.g. k*tau = 3) still satisfy
[X, Xdot] = Jk with zero tolerance.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from fractions import Fraction
from math import isqrt, sqrt
from typing import Callable, Iterable, Sequence

from .errors import DimensionMismatch, InvalidParameter, WindowTooShort


class QuadraticSurd:
    """Exact number a + b*sqrt(r) with rational a, b and fixed radicand r."""

    __slots__ = ("a", "b", "r")

    def __init__(self, a, b, r):
        self.a = Fraction(a)
        self.b = Fraction(b)
        self.r = Fraction(r)

    def _parts(self, other):
        if isinstance(other, QuadraticSurd):
            if other.r != self.r and other.b:
                raise TypeError("mixed radicands are not supported")
            return other.a, other.b
        if isinstance(other, (int, Fraction)):
            return Fraction(other), Fraction(0)
        return None

    def __add__(self, other):
        p = self._parts(other)
        if p is None:
            return NotImplemented
        return QuadraticSurd(self.a + p[0], self.b + p[1], self.r)

    __radd__ = __add__

    def __sub__(self, other):
        p = self._parts(other)
        if p is None:
            return NotImplemented
        return QuadraticSurd(self.a - p[0], self.b - p[1], self.r)

    def __rsub__(self, other):
        p = self._parts(other)
        if p is None:
            return NotImplemented
        return QuadraticSurd(p[0] - self.a, p[1] - self.b, self.r)

    def __mul__(self, other):
        p = self._parts(other)
        if p is None:
            return NotImplemented
        a, b = p
        return QuadraticSurd(self.a * a + self.b * b * self.r,
                             self.a * b + self.b * a, self.r)

    __rmul__ = __mul__

    def __truediv__(self, other):
        p = self._parts(other)
        if p is None:
            return NotImplemented
        a, b = p
        norm = a * a - b * b * self.r
        if not norm:
            raise ZeroDivisionError("division by zero surd")
        inv_a, inv_b = a / norm, -b / norm
        return self * QuadraticSurd(inv_a, inv_b, self.r)

    def __rtruediv__(self, other):
        p = self._parts(other)
        if p is None:
            return NotImplemented
        return QuadraticSurd(p[0], p[1], self.r) / self

    def __neg__(self):
        return QuadraticSurd(-self.a, -self.b, self.r)

    def __eq__(self, other):
        if isinstance(other, QuadraticSurd):
            return self.a == other.a and self.b == other.b and (
                not self.b or self.r == other.r)
        if isinstance(other, (int, Fraction)):
            return not self.b and self.a == other
        return NotImplemented

    def __bool__(self):
        return bool(self.a or self.b)

    def __float__(self):
        return float(self.a) + float(self.b) * sqrt(float(self.r))

    def __abs__(self):
        return abs(float(self))

    def simplify(self):
        """Collapse to a Fraction when the irrational part is absent."""
        return self.a if not self.b else self

    def __repr__(self):
        return f"({self.a} + {self.b}*sqrt({self.r}))"


def _simplify(value):
    return value.simplify() if isinstance(value, QuadraticSurd) else value


def exact_sqrt(q: Fraction):
    """sqrt of a positive rational: a Fraction when q is a perfect square,
    otherwise an exact QuadraticSurd."""
    q = Fraction(q)
    if q <= 0:
        raise InvalidParameter("exact_sqrt needs a positive rational")
    rn, rd = isqrt(q.numerator), isqrt(q.denominator)
    if rn * rn == q.numerator and rd * rd == q.denominator:
        return Fraction(rn, rd)
    return QuadraticSurd(0, 1, q)


class TimeSeries:
    """Finite sequence of d-vectors with a sample period and a valid window.

    ``values[i]`` is the sample at absolute time ``start + i``; the valid
    window is [start, start + len - 1].  Instances are immutable.
    """

    __slots__ = ("tau", "dim", "start", "values")

    def __init__(self, values: Sequence, tau=1, dim: int | None = None, start: int = 0):
        rows = []
        for v in values:
            row = tuple(v) if isinstance(v, (tuple, list)) else (v,)
            rows.append(row)
        if not rows:
            raise WindowTooShort("a time series needs at least one sample")
        d = dim if dim is not None else len(rows[0])
        if any(len(r) != d for r in rows):
            raise DimensionMismatch("ragged time series")
        self.values = tuple(rows)
        self.dim = d
        self.tau = Fraction(tau)
        self.start = start
        if self.tau <= 0:
            raise InvalidParameter("tau must be positive")

    # -- window ----------------------------------------------------------

    @property
    def lo(self) -> int:
        return self.start

    @property
    def hi(self) -> int:
        return self.start + len(self.values) - 1

    def __len__(self):
        return len(self.values)

    def at(self, t: int):
        if not self.lo <= t <= self.hi:
            raise WindowTooShort(f"t={t} outside valid window [{self.lo}, {self.hi}]")
        v = self.values[t - self.start]
        return v[0] if self.dim == 1 else v

    def require(self, n: int, what: str) -> None:
        if len(self.values) < n:
            raise WindowTooShort(
                f"{what} needs a window of at least {n} samples, have {len(self.values)}"
            )

    # -- shift / difference ------------------------------------------------

    def shift(self, n: int) -> "TimeSeries":
        """shift(f, n)(t) = f(t + n); the window loses n samples from the top."""
        if n == 0:
            return self
        if n >= len(self.values):
            raise WindowTooShort(f"cannot shift by {n}: window has {len(self.values)} samples")
        return TimeSeries(self.values[n:], self.tau, self.dim, self.start)

    def delta(self) -> "TimeSeries":
        """Classical forward difference f(t+1) - f(t)."""
        self.require(2, "difference")
        rows = [
            tuple(b - a for a, b in zip(r0, r1))
            for r0, r1 in zip(self.values, self.values[1:])
        ]
        return TimeSeries(rows, self.tau, self.dim, self.start)

    # -- pointwise algebra ----------------------------------------------------

    def _common(self, other: "TimeSeries"):
        lo = max(self.lo, other.lo)
        hi = min(self.hi, other.hi)
        if lo > hi:
            raise WindowTooShort("valid windows do not overlap")
        return lo, hi

    def _zip(self, other: "TimeSeries", fn: Callable) -> "TimeSeries":
        lo, hi = self._common(other)
        a, b = self, other
        if a.dim != b.dim:
            if a.dim == 1:
                rows = [tuple(fn(a.values[t - a.start][0], y) for y in b.values[t - b.start])
                        for t in range(lo, hi + 1)]
                return TimeSeries(rows, self.tau, b.dim, lo)
            if b.dim == 1:
                rows = [tuple(fn(x, b.values[t - b.start][0]) for x in a.values[t - a.start])
                        for t in range(lo, hi + 1)]
                return TimeSeries(rows, self.tau, a.dim, lo)
            raise DimensionMismatch(f"dimensions differ: {a.dim} vs {b.dim}")
        rows = [tuple(fn(x, y) for x, y in zip(a.values[t - a.start], b.values[t - b.start]))
                for t in range(lo, hi + 1)]
        return TimeSeries(rows, self.tau, a.dim, lo)

    def __add__(self, other):
        return self._zip(other, lambda x, y: _simplify(x + y))

    def __sub__(self, other):
        return self._zip(other, lambda x, y: _simplify(x - y))

    def __neg__(self):
        return self.map(lambda x: -x)

    def hadamard(self, other: "TimeSeries") -> "TimeSeries":
        """Pointwise product, broadcasting a scalar series over a vector one."""
        return self._zip(other, lambda x, y: _simplify(x * y))

    def scale(self, c) -> "TimeSeries":
        return self.map(lambda x: _simplify(x * c))

    def map(self, fn) -> "TimeSeries":
        rows = [tuple(fn(x) for x in row) for row in self.values]
        return TimeSeries(rows, self.tau, self.dim, self.start)

    def component(self, i: int) -> "TimeSeries":
        if not 1 <= i <= self.dim:
            raise DimensionMismatch(f"component {i} outside 1..{self.dim}")
        return TimeSeries([(r[i - 1],) for r in self.values], self.tau, 1, self.start)

    def dot(self, other: "TimeSeries") -> "TimeSeries":
        if self.dim != other.dim:
            raise DimensionMismatch("dot product needs equal dimensions")
        lo, hi = self._common(other)
        rows = []
        for t in range(lo, hi + 1):
            ra, rb = self.values[t - self.start], other.values[t - other.start]
            acc = ra[0] * rb[0]
            for x, y in zip(ra[1:], rb[1:]):
                acc = acc + x * y
            rows.append((_simplify(acc),))
        return TimeSeries(rows, self.tau, 1, lo)

    def cross(self, other: "TimeSeries") -> "TimeSeries":
        if self.dim != 3 or other.dim != 3:
            raise DimensionMismatch("cross product needs dimension 3")
        lo, hi = self._common(other)
        rows = []
        for t in range(lo, hi + 1):
            a = self.values[t - self.start]
            b = other.values[t - other.start]
            rows.append((
                _simplify(a[1] * b[2] - a[2] * b[1]),
                _simplify(a[2] * b[0] - a[0] * b[2]),
                _simplify(a[0] * b[1] - a[1] * b[0]),
            ))
        return TimeSeries(rows, self.tau, 3, lo)

    # -- measurement -------------------------------------------------------------

    def max_abs(self) -> float:
        return max((abs(float(x)) for row in self.values for x in row), default=0.0)

    def is_exact_zero(self) -> bool:
        return all(not x for row in self.values for x in row)

    # -- interchange ---------------------------------------------------------------

    @staticmethod
    def from_json_dict(doc: dict) -> "TimeSeries":
        tau_raw = doc.get("tau", "1")
        tau = Fraction(tau_raw) if isinstance(tau_raw, str) else Fraction(tau_raw)
        dim = doc.get("dimension")
        values = doc.get("values")
        if not isinstance(values, list) or not values:
            raise ValueError("time-series document needs a non-empty 'values' list")
        return TimeSeries(values, tau=tau, dim=dim)

    @staticmethod
    def from_json(path: str) -> "TimeSeries":
        with open(path, "r", encoding="utf-8") as fh:
            return TimeSeries.from_json_dict(json.load(fh))

    def to_json_dict(self) -> dict:
        return {
            "tau": str(self.tau),
            "dimension": self.dim,
            "values": [[float(x) for x in row] for row in self.values],
        }

    def __repr__(self):
        return (f"<TimeSeries dim={self.dim} tau={self.tau} "
                f"window=[{self.lo},{self.hi}]>")


def _combine_mul(f: TimeSeries, g: TimeSeries) -> TimeSeries:
    return f.hadamard(g)


def _combine_cross(f: TimeSeries, g: TimeSeries) -> TimeSeries:
    return f.cross(g)


def _combine_dot(f: TimeSeries, g: TimeSeries) -> TimeSeries:
    return f.dot(g)


class JElement:
    """Finite sum of (J-power, series) pairs under the crossed product."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict[int, TimeSeries]):
        for m in terms:
            if m < 0:
                raise ValueError("J-powers must be >= 0")
        self.terms = dict(terms)

    @staticmethod
    def of(series: TimeSeries, power: int = 0) -> "JElement":
        return JElement({power: series})

    @property
    def powers(self) -> tuple[int, ...]:
        return tuple(sorted(self.terms))

    def component(self, i: int) -> "JElement":
        return JElement({m: f.component(i) for m, f in self.terms.items()})

    def __add__(self, other: "JElement"):
        if not isinstance(other, JElement):
            return NotImplemented
        out = dict(self.terms)
        for m, g in other.terms.items():
            out[m] = out[m] + g if m in out else g
        return JElement(out)

    def __sub__(self, other: "JElement"):
        if not isinstance(other, JElement):
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        return JElement({m: -f for m, f in self.terms.items()})

    def scale(self, c) -> "JElement":
        return JElement({m: f.scale(c) for m, f in self.terms.items()})

    def mul(self, other: "JElement", combine=_combine_mul) -> "JElement":
        """(J^m, f)(J^n, g) = (J^(m+n), shift(f, n) . g) where . is the given
        pointwise combiner (hadamard by default, cross/dot for vectors)."""
        out: dict[int, TimeSeries] = {}
        for m, f in self.terms.items():
            for n, g in other.terms.items():
                piece = combine(f.shift(n), g)
                key = m + n
                out[key] = out[key] + piece if key in out else piece
        return JElement(out)

    def __mul__(self, other):
        if isinstance(other, JElement):
            return self.mul(other)
        return NotImplemented

    def jdot(self) -> "JElement":
        """[F, J/tau]: the discrete time derivative, (J^m, f) -> (J^(m+1), d(f)/tau)."""
        out: dict[int, TimeSeries] = {}
        for m, f in self.terms.items():
            piece = f.delta().scale(Fraction(1, 1) / f.tau)
            key = m + 1
            out[key] = out[key] + piece if key in out else piece
        return JElement(out)

    def trim(self) -> "JElement":
        """Drop powers whose series is exactly zero."""
        return JElement({m: f for m, f in self.terms.items() if not f.is_exact_zero()})

    def max_abs(self) -> float:
        return max((f.max_abs() for f in self.terms.values()), default=0.0)

    def is_exact_zero(self) -> bool:
        return all(f.is_exact_zero() for f in self.terms.values())

    def __repr__(self):
        inner = ", ".join(f"J^{m}: {f!r}" for m, f in sorted(self.terms.items()))
        return f"JElement({inner})"


def cross_j(u: JElement, v: JElement) -> JElement:
    return u.mul(v, _combine_cross)


def dot_j(u: JElement, v: JElement) -> JElement:
    return u.mul(v, _combine_dot)


def commutator_j(a: JElement, b: JElement) -> JElement:
    return a * b - b * a


def residual_terms(a: JElement, b: JElement) -> dict[int, TimeSeries]:
    """Per-power difference a - b on common windows; powers present on one
    side only count in full."""
    out: dict[int, TimeSeries] = {}
    for m in set(a.terms) | set(b.terms):
        if m in a.terms and m in b.terms:
            out[m] = a.terms[m] - b.terms[m]
        elif m in a.terms:
            out[m] = a.terms[m]
        else:
            out[m] = -b.terms[m]
    return out


def max_difference(a: JElement, b: JElement) -> float:
    return max((f.max_abs() for f in residual_terms(a, b).values()), default=0.0)


# -- the model's derivative and field constructions -----------------------------


def xdot(X: TimeSeries) -> JElement:
    """Xdot = J * d(X)/tau, the discrete velocity."""
    X.require(2, "xdot")
    return JElement({1: X.delta().scale(Fraction(1, 1) / X.tau)})


def brownian_commutator(X: TimeSeries) -> JElement:
    """[X, Xdot] computed in the crossed product; equals (J, d(X)^2/tau).

    For a walk with steps +-sqrt(k*tau) the series is the constant k: the
    diffusion constant read off as a structural property of the process.
    """
    X.require(2, "brownian commutator")
    xe = JElement.of(X)
    xd = xdot(X)
    return xe * xd - xd * xe


def discrete_B(X: TimeSeries) -> JElement:
    """B = Xdot x Xdot = (J^2, d(X') x d(X) / tau^2)."""
    if X.dim != 3:
        raise DimensionMismatch("discrete B needs 3 components")
    X.require(3, "discrete B")
    xd = xdot(X)
    return cross_j(xd, xd)


def discrete_E(X: TimeSeries) -> JElement:
    """Closed form: E = (J^2, d^2(X)/tau^2) - (J^3, d(X'') x (d(X') x d(X)) / tau^3)."""
    if X.dim != 3:
        raise DimensionMismatch("discrete E needs 3 components")
    X.require(4, "discrete E")
    d = X.delta().scale(Fraction(1, 1) / X.tau)
    d2 = d.delta().scale(Fraction(1, 1) / X.tau)
    triple = d.shift(2).cross(d.shift(1).cross(d))
    return JElement({2: d2}) - JElement({3: triple})


def discrete_E_definitional(X: TimeSeries) -> JElement:
    """E = Xddot - Xdot x (Xdot x Xdot) evaluated with crossed products; the
    independent route the closed form is checked against."""
    if X.dim != 3:
        raise DimensionMismatch("discrete E needs 3 components")
    X.require(4, "discrete E")
    xd = xdot(X)
    return xd.jdot() - cross_j(xd, cross_j(xd, xd))


def generate_walk(seed: int, length: int, k, tau, dim: int = 1,
                  exact: bool = True) -> TimeSeries:
    """Deterministic +-sqrt(k*tau) walk per component, started at zero.

    The same seed always yields the same series (signs come from a seeded
    Mersenne twister, one bit per component per step, components first).
    """
    k, tau = Fraction(k), Fraction(tau)
    if length < 2:
        raise InvalidParameter("walk length must be >= 2")
    if k <= 0 or tau <= 0:
        raise InvalidParameter("k and tau must be positive")
    if dim < 1:
        raise InvalidParameter("dimension must be >= 1")
    step = exact_sqrt(k * tau)
    if not exact:
        step = float(step)
    rng = random.Random(seed)
    zero = 0 if exact else 0.0
    rows = [tuple([zero] * dim)]
    current = list(rows[0])
    for _ in range(length - 1):
        for c in range(dim):
            sign = 1 if rng.getrandbits(1) else -1
            current[c] = _simplify(current[c] + (step if sign > 0 else -step))
        rows.append(tuple(current))
    return TimeSeries(rows, tau=tau, dim=dim)


def diffusion_track(X: TimeSeries) -> TimeSeries:
    """The observed diffusion constant (X(t+1) - X(t))^2 / tau per component."""
    X.require(2, "diffusion track")
    d = X.delta()
    return d.hadamard(d).scale(Fraction(1, 1) / X.tau)


# -- verification reports ---------------------------------------------------------


@dataclass
class ResidualTrack:
    equation: str
    power: int
    track: TimeSeries          # dim 1: max |residual| across components per t
    max_abs: float
    exact_zero: bool


@dataclass
class EquationResult:
    equation: str
    tracks: list[ResidualTrack]
    scale: float

    @property
    def max_abs(self) -> float:
        return max((t.max_abs for t in self.tracks), default=0.0)

    @property
    def max_scaled(self) -> float:
        return self.max_abs / self.scale

    @property
    def exact_zero(self) -> bool:
        return all(t.exact_zero for t in self.tracks)


@dataclass
class NumericReport:
    equations: list[EquationResult] = field(default_factory=list)
    threshold: float = 1e-9

    @property
    def max_scaled(self) -> float:
        return max((e.max_scaled for e in self.equations), default=0.0)

    @property
    def ok(self) -> bool:
        return self.max_scaled < self.threshold

    def to_rows(self) -> list[tuple]:
        """CSV rows (equation, j_power, t, residual)."""
        rows = []
        for eq in self.equations:
            for tr in eq.tracks:
                for t in range(tr.track.lo, tr.track.hi + 1):
                    rows.append((eq.equation, tr.power, t, float(tr.track.at(t))))
        return rows

    def to_dict(self) -> dict:
        return {
            "threshold": self.threshold,
            "ok": self.ok,
            "equations": [
                {
                    "equation": eq.equation,
                    "scale": eq.scale,
                    "max_abs": eq.max_abs,
                    "max_scaled": eq.max_scaled,
                    "exact_zero": eq.exact_zero,
                    "powers": [tr.power for tr in eq.tracks],
                }
                for eq in self.equations
            ],
        }


def _abs_track(parts: list[JElement], power: int) -> tuple[TimeSeries, float, bool]:
    """Combine scalar residual JElements: max |value| across components at
    each t for one J-power."""
    series = [p.terms[power] for p in parts if power in p.terms]
    lo = max(s.lo for s in series)
    hi = min(s.hi for s in series)
    if lo > hi:
        raise WindowTooShort("residual windows do not overlap")
    tau = series[0].tau
    rows = []
    exact = True
    for t in range(lo, hi + 1):
        vals = [s.at(t) for s in series]
        if any(v for v in vals):
            exact = False
        rows.append((max(abs(float(v)) for v in vals),))
    track = TimeSeries(rows, tau=tau, dim=1, start=lo)
    return track, track.max_abs(), exact


def _equation_result(name: str, residual_components: list[JElement],
                     scale_parts: Iterable[JElement]) -> EquationResult:
    scale = max(1.0, max((p.max_abs() for p in scale_parts), default=0.0))
    powers = sorted({m for p in residual_components for m in p.terms})
    tracks = []
    for m in powers:
        track, mx, exact = _abs_track(residual_components, m)
        tracks.append(ResidualTrack(name, m, track, mx, exact))
    return EquationResult(name, tracks, scale)


def _epsilon_sign(i: int, j: int, k: int) -> int:
    perm = (i, j, k)
    if len(set(perm)) < 3:
        return 0
    return 1 if perm in ((1, 2, 3), (2, 3, 1), (3, 1, 2)) else -1


def j_partial(F: JElement, xd_i: JElement) -> JElement:
    """Spatial derivative in the model: [F, Xdot_i]."""
    return F * xd_i - xd_i * F


def j_partial_t(F: JElement, xd_components: list[JElement]) -> JElement:
    """Temporal derivative: F-dot - sum_i Xdot_i * [F, Xdot_i]."""
    acc = F.jdot()
    for xi in xd_components:
        acc = acc - xi * j_partial(F, xi)
    return acc


def j_curl_component(E: JElement, xd_components: list[JElement], k: int) -> JElement:
    out = None
    for i in (1, 2, 3):
        for j in (1, 2, 3):
            s = _epsilon_sign(i, j, k)
            if not s:
                continue
            piece = j_partial(E.component(j), xd_components[i - 1]).scale(s)
            out = piece if out is None else out + piece
    return out


def j_laplacian(F: JElement, xd_components: list[JElement]) -> JElement:
    acc = None
    for xi in xd_components:
        piece = j_partial(j_partial(F, xi), xi)
        acc = piece if acc is None else acc + piece
    return acc


def numeric_theorem_residuals(X: TimeSeries, threshold: float = 1e-9) -> NumericReport:
    """Evaluate the four theorem equations as identities of JElements on X
    and report the residual per equation per J-power (max over components)."""
    if X.dim != 3:
        raise DimensionMismatch("the theorem needs 3 components")
    X.require(6, "theorem residuals")
    xd = xdot(X)
    xd_c = [xd.component(i) for i in (1, 2, 3)]
    B = discrete_B(X)
    E = discrete_E(X)
    report = NumericReport(threshold=threshold)

    # 1. Lorentz: Xddot = E + Xdot x B
    ddot = xd.jdot()
    xb = cross_j(xd, B)
    res1 = [ddot.component(i) - E.component(i) - xb.component(i) for i in (1, 2, 3)]
    report.equations.append(_equation_result(
        "lorentz", res1,
        [ddot.component(i) for i in (1, 2, 3)]
        + [E.component(i) for i in (1, 2, 3)]
        + [xb.component(i) for i in (1, 2, 3)],
    ))

    # 2. div B = 0
    div_parts = [j_partial(B.component(i), xd_c[i - 1]) for i in (1, 2, 3)]
    div = div_parts[0] + div_parts[1] + div_parts[2]
    report.equations.append(_equation_result("div_b", [div], div_parts))

    # 3. Faraday: dt(B) + curl E = B x B
    dtB = j_partial_t(B, xd_c)
    bb = cross_j(B, B)
    res3, scale3 = [], []
    for k in (1, 2, 3):
        curl_k = j_curl_component(E, xd_c, k)
        res3.append(dtB.component(k) + curl_k - bb.component(k))
        scale3.extend([dtB.component(k), curl_k, bb.component(k)])
    report.equations.append(_equation_result("faraday", res3, scale3))

    # 4. Ampere: dt(E) - curl B = (dt^2 - laplacian) Xdot
    dtE = j_partial_t(E, xd_c)
    dt2 = j_partial_t(j_partial_t(xd, xd_c), xd_c)
    res4, scale4 = [], []
    for k in (1, 2, 3):
        curl_k = j_curl_component(B, xd_c, k)
        lap_k = j_laplacian(xd.component(k), xd_c)
        res4.append(dtE.component(k) - curl_k - dt2.component(k) + lap_k)
        scale4.extend([dtE.component(k), curl_k, dt2.component(k), lap_k])
    report.equations.append(_equation_result("ampere", res4, scale4))
    return report


@dataclass
class PartialCheckReport:
    spatial_max: float
    temporal_max: float
    spatial_exact: bool
    temporal_exact: bool

    @property
    def max_abs(self) -> float:
        return max(self.spatial_max, self.temporal_max)

    @property
    def ok(self) -> bool:
        return self.max_abs < 1e-12


def discrete_partial_checks(F: TimeSeries, X: TimeSeries) -> PartialCheckReport:
    """Check the closed forms of the model's derivatives against their
    definitional computations, pointwise:

    * spatial: [F, Xdot_i] against Fdot * d_i  (per component i)
    * temporal: Fdot - sum_i Xdot_i [F, Xdot_i] against
      (J, d(F)/tau) - (J^2, (d' . d) d(F) / tau^3)
    """
    if F.dim != 1:
        raise DimensionMismatch("F must be a scalar series")
    F.require(4, "partial checks")
    X.require(4, "partial checks")
    fe = JElement.of(F)
    xd = xdot(X)
    xd_c = [xd.component(i) for i in range(1, X.dim + 1)]
    inv_tau = Fraction(1, 1) / X.tau

    spatial_max, spatial_exact = 0.0, True
    fdot = fe.jdot()
    for i in range(1, X.dim + 1):
        definitional = j_partial(fe, xd_c[i - 1])
        d_i = JElement.of(X.component(i).delta())  # raw difference X_i' - X_i
        closed = fdot * d_i
        diff = max_difference(definitional, closed)
        spatial_max = max(spatial_max, diff)
        spatial_exact = spatial_exact and (definitional - closed).is_exact_zero()

    definitional_t = j_partial_t(fe, xd_c)
    d = X.delta().scale(inv_tau)
    dF = F.delta().scale(inv_tau)
    closed_t = JElement({1: dF}) - JElement({2: d.shift(1).dot(d).hadamard(dF).scale(X.tau)})
    temporal_max = max_difference(definitional_t, closed_t)
    temporal_exact = (definitional_t - closed_t).is_exact_zero()
    return PartialCheckReport(spatial_max, temporal_max, spatial_exact, temporal_exact)
