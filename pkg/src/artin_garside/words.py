"""
Positive words in an Artin monoid and two decision procedures for them.

A word is a tuple of generator indices (``(3, 2, 1)`` is ``x3 x2 x1``). Two
engines answer equality and divisibility questions:

* BFS closure enumerates the equivalence class of a word under the braid
  relations. It is exact and simple, and it is the oracle for everything
  else, but classes grow exponentially with length.
* Subword reversing rewrites a fraction ``u^-1 v``, replacing the leftmost
  ``s^-1 t`` by ``v' u'^-1`` where ``s v' = t u'`` is the relation of order
  ``m_st``. On a spherical Artin presentation it terminates with
  ``v'' u''^-1`` and ``u v'' = v u''`` is the least common right multiple.

Both engines consume a :class:`Budget`; running out raises
:class:`BudgetExhausted`, which never stands in for a ``False`` answer.
"""

from __future__ import annotations

import functools
from collections import deque
from dataclasses import dataclass
from typing import Iterator, Sequence

from .coxeter import CoxeterGraph, DomainError

Word = tuple[int, ...]

ENGINES = ("reversing", "bfs", "both")


class BudgetExhausted(Exception):
    def __init__(self, resource: str, limit: int):
        super().__init__(f"{resource} exceeded its budget of {limit}")
        self.resource = resource
        self.limit = limit


class NotADivisor(ValueError):
    pass


class EngineError(RuntimeError):
    """Results that contradict monoid theory, e.g. the two engines disagreeing."""


@dataclass(frozen=True)
class Budget:
    max_class_size: int = 10**6
    max_reversal_steps: int = 10**7

    def __post_init__(self):
        if self.max_class_size <= 0 or self.max_reversal_steps <= 0:
            raise ValueError("budgets must be strictly positive")

    def scaled(self, factor: int) -> Budget:
        return Budget(self.max_class_size * factor, self.max_reversal_steps * factor)


DEFAULT_BUDGET = Budget()


@dataclass(frozen=True)
class Fraction:
    """The formal expression ``denominator^-1 * numerator``."""

    denominator: Word
    numerator: Word


# -- word helpers ----------------------------------------------------------------

def alternating(s: int, t: int, k: int) -> Word:
    """``s t s t ...`` with ``k`` letters."""
    return tuple(s if i % 2 == 0 else t for i in range(k))


def check_word(w: Sequence[int], g: CoxeterGraph) -> Word:
    w = tuple(w)
    for a in w:
        if not (isinstance(a, int) and 1 <= a <= g.rank):
            raise DomainError(f"letter {a!r} is not a generator of a rank {g.rank} graph")
    return w


def parse_word(text: str, g: CoxeterGraph | None = None) -> Word:
    """Parse ``"x3 x2 x1"`` or ``"3 2 1"``; an empty string (or ``ε``) is the identity."""
    text = text.strip()
    if text in ("", "ε", "e", "1"):
        return ()
    letters = []
    for tok in text.replace(",", " ").replace("·", " ").split():
        body = tok[1:] if tok[:1] in ("x", "X") else tok
        if not body.isdigit() or int(body) < 1:
            raise DomainError(f"bad word token {tok!r}")
        letters.append(int(body))
    w = tuple(letters)
    return check_word(w, g) if g is not None else w


def format_word(w: Sequence[int]) -> str:
    return " ".join(f"x{a}" for a in w)


@functools.lru_cache(maxsize=256)
def _complements(g: CoxeterGraph) -> dict[tuple[int, int], tuple[Word, Word]]:
    # (s, t) -> (v, u) with s.v = t.u, both of length m_st - 1
    table = {}
    for s in g.vertices:
        for t in g.vertices:
            if s != t:
                m = g.m(s, t)
                table[s, t] = (alternating(t, s, m - 1), alternating(s, t, m - 1))
    return table


# -- BFS closure ---------------------------------------------------------------

def _neighbors(w: Word, g: CoxeterGraph) -> list[Word]:
    out = []
    n = len(w)
    for p in range(n - 1):
        s, t = w[p], w[p + 1]
        if s == t:
            continue
        m = g.m(s, t)
        if p + m <= n and w[p:p + m] == alternating(s, t, m):
            out.append(w[:p] + alternating(t, s, m) + w[p + m:])
    return out


def rewrite_neighbors(w: Sequence[int], g: CoxeterGraph) -> set[Word]:
    """Words obtained from ``w`` by applying one braid relation at one position."""
    return set(_neighbors(check_word(w, g), g))


def walk_class(w: Sequence[int], g: CoxeterGraph, budget: Budget = DEFAULT_BUDGET) -> Iterator[Word]:
    """Yield the equivalence class of ``w`` in BFS order, ``w`` first.

    Raises BudgetExhausted once more than ``budget.max_class_size`` words are seen.
    """
    w = check_word(w, g)
    seen = {w}
    queue = deque([w])
    while queue:
        v = queue.popleft()
        yield v
        for u in _neighbors(v, g):
            if u not in seen:
                seen.add(u)
                if len(seen) > budget.max_class_size:
                    raise BudgetExhausted("class size", budget.max_class_size)
                queue.append(u)


def equivalence_class(w: Sequence[int], g: CoxeterGraph, budget: Budget = DEFAULT_BUDGET) -> frozenset[Word]:
    return frozenset(walk_class(w, g, budget))


# -- reversing -----------------------------------------------------------------

def reverse_counting(f: Fraction, g: CoxeterGraph, budget: Budget = DEFAULT_BUDGET) -> tuple[Fraction, int]:
    """Reverse ``f`` to a terminal fraction; also return the number of steps taken.

    The result ``(den', num')`` satisfies ``den . num' == num . den'``.
    """
    den = check_word(f.denominator, g)
    num = check_word(f.numerator, g)
    comp = _complements(g)
    limit = budget.max_reversal_steps
    # Signed letters; `todo` is a stack whose top is the next letter to the right.
    # `done` never contains a negative letter followed by a positive one, so the
    # leftmost pattern s^-1 t always sits at the junction of the two stacks.
    todo = list(reversed(num))
    todo.extend(-a for a in den)
    done: list[int] = []
    steps = 0
    while todo:
        a = todo.pop()
        if a > 0 and done and done[-1] < 0:
            s = -done.pop()
            steps += 1
            if steps > limit:
                raise BudgetExhausted("reversal steps", limit)
            if s != a:
                v, u = comp[s, a]
                todo.extend(-b for b in u)
                todo.extend(reversed(v))
        else:
            done.append(a)
    new_num = tuple(a for a in done if a > 0)
    new_den = tuple(-a for a in reversed(done) if a < 0)
    return Fraction(new_den, new_num), steps


def reverse_fraction(f: Fraction, g: CoxeterGraph, budget: Budget = DEFAULT_BUDGET) -> Fraction:
    return reverse_counting(f, g, budget)[0]


# -- divisibility and equality ---------------------------------------------------

def _check_engine(engine: str):
    if engine not in ENGINES:
        raise ValueError(f"unknown engine {engine!r}; expected one of {ENGINES}")


def _combine(name: str, run_rev, run_bfs, engine: str):
    _check_engine(engine)
    if engine == "reversing":
        return run_rev()
    if engine == "bfs":
        return run_bfs()
    results = []
    for run in (run_rev, run_bfs):
        try:
            results.append(run())
        except BudgetExhausted as exc:
            results.append(exc)
    done = [r for r in results if not isinstance(r, BudgetExhausted)]
    if not done:
        raise results[0]
    if len(done) == 2 and done[0] != done[1]:
        raise EngineError(f"{name}: reversing says {done[0]}, BFS says {done[1]}")
    return done[0]


def _left_divides_bfs(u: Word, w: Word, g: CoxeterGraph, budget: Budget) -> bool:
    if len(u) > len(w):
        return False
    # class(w) is closed under rewriting inside the prefix, so a literal prefix suffices
    return any(v[:len(u)] == u for v in walk_class(w, g, budget))


def left_divides(u: Sequence[int], w: Sequence[int], g: CoxeterGraph,
                 budget: Budget = DEFAULT_BUDGET, engine: str = "reversing") -> bool:
    """True iff ``w == u . r`` for some positive word ``r``."""
    u, w = check_word(u, g), check_word(w, g)
    return _combine(
        "left_divides",
        lambda: len(u) <= len(w) and not reverse_fraction(Fraction(u, w), g, budget).denominator,
        lambda: _left_divides_bfs(u, w, g, budget),
        engine)


def right_divides(u: Sequence[int], w: Sequence[int], g: CoxeterGraph,
                  budget: Budget = DEFAULT_BUDGET, engine: str = "reversing") -> bool:
    """True iff ``w == l . u``; relations are closed under reversal, so mirror ``left_divides``."""
    return left_divides(tuple(u)[::-1], tuple(w)[::-1], g, budget, engine)


def words_equal(u: Sequence[int], w: Sequence[int], g: CoxeterGraph,
                budget: Budget = DEFAULT_BUDGET, engine: str = "reversing") -> bool:
    u, w = check_word(u, g), check_word(w, g)
    if len(u) != len(w):
        return False
    return _combine(
        "words_equal",
        lambda: left_divides(u, w, g, budget),
        lambda: any(v == w for v in walk_class(u, g, budget)),
        engine)


def right_quotient(prefix: Sequence[int], w: Sequence[int], g: CoxeterGraph,
                   budget: Budget = DEFAULT_BUDGET, engine: str = "reversing") -> Word:
    """The word ``r`` with ``w == prefix . r``; raises NotADivisor if there is none."""
    prefix, w = check_word(prefix, g), check_word(w, g)
    _check_engine(engine)
    if engine != "bfs":
        f = reverse_fraction(Fraction(prefix, w), g, budget)
        if f.denominator:
            raise NotADivisor(f"{format_word(prefix) or 'ε'} does not left-divide {format_word(w) or 'ε'}")
        if engine == "reversing":
            return f.numerator
    if len(prefix) <= len(w):
        for v in walk_class(w, g, budget):
            if v[:len(prefix)] == prefix:
                r = v[len(prefix):]
                if engine == "both" and not words_equal(r, f.numerator, g, budget):
                    raise EngineError("right_quotient: engines returned inequivalent quotients")
                return r
    if engine == "both":
        raise EngineError("right_quotient: reversing found a quotient, BFS did not")
    raise NotADivisor(f"{format_word(prefix) or 'ε'} does not left-divide {format_word(w) or 'ε'}")


def common_left_multiple(u: Sequence[int], w: Sequence[int], g: CoxeterGraph,
                         budget: Budget = DEFAULT_BUDGET) -> Word:
    """Least common multiple having both ``u`` and ``w`` as left divisors."""
    u, w = check_word(u, g), check_word(w, g)
    return u + reverse_fraction(Fraction(u, w), g, budget).numerator


# -- class-level predicates -------------------------------------------------------

def _has_adjacent(v: Word, letter: int | None) -> bool:
    return any(a == b and (letter is None or a == letter) for a, b in zip(v, v[1:]))


def is_square_free(w: Sequence[int], g: CoxeterGraph, budget: Budget = DEFAULT_BUDGET) -> bool:
    """True iff no word equivalent to ``w`` contains a generator twice in a row."""
    return not any(_has_adjacent(v, None) for v in walk_class(w, g, budget))


def has_square_factor(w: Sequence[int], letter: int, g: CoxeterGraph, budget: Budget = DEFAULT_BUDGET) -> bool:
    """True iff ``x_letter^2`` is a factor of ``w``."""
    return any(_has_adjacent(v, letter) for v in walk_class(w, g, budget))


def is_rigid(w: Sequence[int], g: CoxeterGraph, budget: Budget = DEFAULT_BUDGET) -> bool:
    # the class is a singleton iff no relation applies to w itself
    return not _neighbors(check_word(w, g), g)


def lexmin_representative(w: Sequence[int], g: CoxeterGraph, budget: Budget = DEFAULT_BUDGET) -> Word:
    """Lexicographically least word of the class (x1 < x2 < ...).

    Built greedily: the least generator left-dividing the remainder is the
    next letter, then divide it off.
    """
    rest = check_word(w, g)
    out = []
    while rest:
        for a in g.vertices:
            f = reverse_fraction(Fraction((a,), rest), g, budget)
            if not f.denominator:
                out.append(a)
                rest = f.numerator
                break
        else:
            raise EngineError(f"no generator left-divides {format_word(rest)}")
    return tuple(out)


def garside_head(w: Sequence[int], i: int, j: int, g: CoxeterGraph,
                 budget: Budget = DEFAULT_BUDGET) -> Word | None:
    """If ``x_i`` and ``x_j`` both left-divide ``w``, return ``Z`` with
    ``w == (x_i x_j x_i ...) . Z`` (``m_ij`` letters); otherwise None.
    """
    w = check_word(w, g)
    if i == j:
        raise DomainError("garside_head needs two distinct generators")
    check_word((i, j), g)
    if not (left_divides((i,), w, g, budget) and left_divides((j,), w, g, budget)):
        return None
    try:
        return right_quotient(alternating(i, j, g.m(i, j)), w, g, budget)
    except NotADivisor:
        raise EngineError(f"x{i} and x{j} divide {format_word(w)} but their lcm does not") from None
