"""Quotient algebras as terminating confluent rewrite systems.

Two rule shapes are supported, exactly the ones the engine needs:

* shift rules ``g*J -> J*g'`` for every ordinary generator ``g`` (``g'``
  raises the shift order by one), which move the shift symbol maximally to
  the left -- one application per clock tick;
* scalar-commutator rules ``a*b -> b*a + c`` for ordered generator pairs
  with ``a`` above ``b`` in the total generator order, where ``c = [a, b]``
  is a central Scalar (``c = 0`` encodes a commuting pair).

Both shapes strictly decrease a well-founded measure (J displacement plus
inversion count plus word length for the delta terms), so rewriting always
terminates.  Local confluence is checked at construction by resolving every
overlapping critical pair; inconsistent user-supplied rule sets are rejected
rather than silently producing order-dependent normal forms.
"""

from __future__ import annotations

from typing import Iterable, Mapping

from .algebra import (
    EMPTY_WORD,
    Expression,
    Generator,
    J,
    Word,
    expr,
    generator,
    word_text,
)
from .errors import InconsistentRelations, UnknownGenerator
from .scalars import Scalar, coerce_scalar

MODE_FREE = "free"
MODE_SHIFT = "shift"
MODE_FLAT = "flat"
MODE_CUSTOM = "custom"


class RelationSet:
    """A confluent rewrite system defining a quotient of the free algebra.

    Instances are immutable after construction.  ``normalize`` and
    ``is_zero`` are exposed both as methods and as module functions.
    """

    __slots__ = ("mode", "_shift", "_rules", "_declared", "_priority", "_cache")

    def __init__(self, mode, shift_rules, rules, declared, priority, check=True):
        self.mode = mode
        self._shift = shift_rules
        self._priority = dict(priority or {})
        self._declared = None if declared is None else frozenset(declared)
        self._rules = self._orient(rules or {})
        self._cache: dict[Word, dict] = {}
        if check:
            self._check_critical_pairs()

    # -- constructors --------------------------------------------------------

    @staticmethod
    def free() -> "RelationSet":
        """No relations; normalization only collects like terms."""
        return RelationSet(MODE_FREE, False, {}, None, {}, check=False)

    @staticmethod
    def shift() -> "RelationSet":
        """Only the schematic shift rules g*J -> J*g'; covers every generator."""
        return RelationSet(MODE_SHIFT, True, {}, None, {}, check=False)

    @staticmethod
    def flat(dim: int) -> "RelationSet":
        """The Weyl relations [X_i,X_j] = [P_i,P_j] = 0, [X_i,P_j] = delta_ij,
        with normal order putting positions left of momenta."""
        if dim < 1:
            raise ValueError("flat mode needs dimension >= 1")
        xs = [generator("X", i) for i in range(1, dim + 1)]
        ps = [generator("P", i) for i in range(1, dim + 1)]
        rules: dict = {}
        for a in range(dim):
            for b in range(dim):
                if a > b:
                    rules[(xs[a], xs[b])] = 0
                    rules[(ps[a], ps[b])] = 0
                # P_i past X_j: [P_i, X_j] = -delta_ij
                rules[(ps[a], xs[b])] = -1 if a == b else 0
        return RelationSet(MODE_FLAT, False, rules, xs + ps, {"X": 0, "P": 1})

    @staticmethod
    def custom(
        declared: Iterable[Generator],
        commutators: Mapping[tuple[Generator, Generator], object] | None = None,
        shift_rules: bool = False,
        priority: Mapping[str, int] | None = None,
    ) -> "RelationSet":
        """User-supplied relations: ``commutators[(a, b)] = [a, b]`` for the
        pairs that get a rule; declared generators without rules are inert."""
        return RelationSet(MODE_CUSTOM, shift_rules, dict(commutators or {}),
                           list(declared), priority)

    # -- generator order ------------------------------------------------------

    def sort_key(self, g: Generator):
        base = g.sort_key
        if g.is_shift or not self._priority:
            return base
        return (base[0], self._priority.get(g.name, 0)) + base[1:]

    def _orient(self, raw: Mapping) -> dict:
        rules: dict = {}
        for (a, b), value in raw.items():
            c = coerce_scalar(value)
            if a == b:
                if not c.is_zero:
                    raise InconsistentRelations(f"[{a.text()},{a.text()}] must be 0")
                continue
            if a.is_shift or b.is_shift:
                raise InconsistentRelations("commutator rules must not involve J")
            if self.sort_key(a) > self.sort_key(b):
                key, val = (a, b), c
            else:
                key, val = (b, a), -c
            if key in rules and rules[key] != val:
                raise InconsistentRelations(
                    f"conflicting values for [{key[0].text()},{key[1].text()}]"
                )
            rules[key] = val
        return rules

    # -- coverage -------------------------------------------------------------

    def covers(self, g: Generator) -> bool:
        if self._declared is None:
            return True
        return g in self._declared or (g.is_shift and self._shift)

    def check_coverage(self, e: Expression) -> None:
        if self._declared is None:
            return
        missing = sorted(
            (g for g in e.generators() if not self.covers(g)),
            key=lambda g: g.sort_key,
        )
        if missing:
            names = ", ".join(g.text() for g in missing)
            raise UnknownGenerator(
                f"no declared relation behavior for: {names} (mode={self.mode})"
            )

    # -- rewriting -------------------------------------------------------------

    def _shift_normal(self, word: Word) -> Word:
        """Move every J maximally left in one pass; each ordinary generator
        gains one shift order per J initially to its right."""
        n_j = sum(1 for g in word if g.is_shift)
        if n_j == 0:
            return word
        out = [J] * n_j
        seen_right = n_j
        body = []
        for g in word:
            if g.is_shift:
                seen_right -= 1
            else:
                body.append(g.shifted(seen_right) if seen_right else g)
        # nothing moved: word was already J-normal
        if not body and len(out) == len(word):
            return word
        return tuple(out) + tuple(body)

    def _find_redex(self, word: Word) -> int | None:
        rules = self._rules
        if not rules:
            return None
        for i in range(len(word) - 1):
            if (word[i], word[i + 1]) in rules:
                return i
        return None

    def _normal_word(self, word: Word) -> dict:
        """Normal form of a single word as a {word: Scalar} mapping (memoized)."""
        cached = self._cache.get(word)
        if cached is not None:
            return cached
        work = word
        if self._shift:
            work = self._shift_normal(work)
        i = self._find_redex(work)
        if i is None:
            result = {work: coerce_scalar(1)}
        else:
            a, b = work[i], work[i + 1]
            c = self._rules[(a, b)]
            result = dict(self._normal_word(work[:i] + (b, a) + work[i + 2:]))
            if not c.is_zero:
                for w, v in self._normal_word(work[:i] + work[i + 2:]).items():
                    _merge(result, w, v * c)
        self._cache[word] = result
        return result

    def normalize(self, e: Expression) -> Expression:
        self.check_coverage(e)
        acc: dict = {}
        for word, coeff in e._terms.items():
            for w, v in self._normal_word(word).items():
                _merge(acc, w, coeff * v)
        return Expression(acc)

    def is_zero(self, e: Expression) -> bool:
        return self.normalize(e).is_zero

    # -- single-step rewriting (used by the randomized strategy and the
    #    critical-pair check) ---------------------------------------------------

    def _redexes(self, word: Word) -> list[tuple[str, int]]:
        out: list[tuple[str, int]] = []
        for i in range(len(word) - 1):
            if self._shift and not word[i].is_shift and word[i + 1].is_shift:
                out.append(("shift", i))
            if (word[i], word[i + 1]) in self._rules:
                out.append(("comm", i))
        return out

    def _apply_step(self, word: Word, redex: tuple[str, int]) -> list[tuple[Word, Scalar]]:
        kind, i = redex
        if kind == "shift":
            g = word[i]
            return [(word[:i] + (J, g.shifted()) + word[i + 2:], coerce_scalar(1))]
        a, b = word[i], word[i + 1]
        c = self._rules[(a, b)]
        out = [(word[:i] + (b, a) + word[i + 2:], coerce_scalar(1))]
        if not c.is_zero:
            out.append((word[:i] + word[i + 2:], c))
        return out

    # -- local confluence -------------------------------------------------------

    def _check_critical_pairs(self) -> None:
        pairs = list(self._rules)
        by_head = {}
        for a, b in pairs:
            by_head.setdefault(a, []).append(b)
        for a, b in pairs:
            # comm/comm overlap on a*b*c
            for c in by_head.get(b, ()):
                word = (a, b, c)
                self._assert_joinable(word, ("comm", 0), ("comm", 1))
            # comm/shift overlap on a*b*J
            if self._shift:
                word = (a, b, J)
                self._assert_joinable(word, ("comm", 0), ("shift", 1))

    def _assert_joinable(self, word: Word, left, right) -> None:
        lhs = self._resolve(self._apply_step(word, left))
        rhs = self._resolve(self._apply_step(word, right))
        if lhs != rhs:
            raise InconsistentRelations(
                f"critical pair {word_text(word)} does not resolve: "
                f"{lhs.text()} vs {rhs.text()}"
            )

    def _resolve(self, terms: list[tuple[Word, Scalar]]) -> Expression:
        acc: dict = {}
        for word, coeff in terms:
            try:
                nf = self._normal_word(word)
            except UnknownGenerator:
                raise
            for w, v in nf.items():
                _merge(acc, w, coeff * v)
        return Expression(acc)

    def __repr__(self):
        n = len(self._rules)
        return f"<RelationSet mode={self.mode} rules={n} shift={self._shift}>"


def _merge(acc: dict, word: Word, coeff: Scalar) -> None:
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


def normalize(e, relations: RelationSet) -> Expression:
    """Unique normal form of ``e`` in the quotient defined by ``relations``."""
    return relations.normalize(expr(e))


def is_zero(e, relations: RelationSet) -> bool:
    """True iff ``e`` is the zero element of the quotient algebra."""
    return relations.is_zero(expr(e))


def normalize_randomized(e, relations: RelationSet, rng) -> Expression:
    """Normalize by applying single rewrite steps at positions chosen by
    ``rng`` until no redex remains.  Confluence makes the result independent
    of the choices; tests compare it against :func:`normalize`."""
    relations.check_coverage(expr(e))
    terms: dict = dict(expr(e)._terms)
    while True:
        candidates = []
        for word in terms:
            for redex in relations._redexes(word):
                candidates.append((word, redex))
        if not candidates:
            break
        word, redex = candidates[rng.randrange(len(candidates))]
        coeff = terms.pop(word)
        for w, v in relations._apply_step(word, redex):
            _merge(terms, w, coeff * v)
    return Expression(terms)
