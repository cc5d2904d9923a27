"""
Garside elements, relative Garside elements and their characterizing checks.

For an inclusion ``G' ⊂ G`` adding one vertex ``x_n`` the relative element
``R`` is the right quotient in ``Delta(G) = Delta(G') . R``. Conjugation
``x_i R = R x_sigma(i)`` sends the old vertices bijectively onto all
vertices but one, ``m``, and ``x_m`` is the only letter ``R`` ends with.
"""

from __future__ import annotations

import enum
import logging
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from .coxeter import (
    EMPTY_GRAPH, CatalogId, CoxeterGraph, DomainError, GraphEmbedding,
    catalog_graph, catalog_parts, disjoint_union, expected_length, relabel_word,
)
from .formulas import delta_formula
from .words import (
    DEFAULT_BUDGET, Budget, BudgetExhausted, EngineError, Word,
    check_word, common_left_multiple, format_word, has_square_factor,
    is_square_free, left_divides, right_divides, right_quotient, words_equal,
)

log = logging.getLogger(__name__)


class Status(str, enum.Enum):
    PASS = "pass"
    FAIL = "fail"
    SKIPPED = "budget-skipped"

    @classmethod
    def of(cls, ok: bool) -> Status:
        return cls.PASS if ok else cls.FAIL


@dataclass(frozen=True)
class PartialPermutation:
    """An injective map between sets of generator indices, stored as sorted pairs."""

    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self):
        dom = [a for a, _ in self.pairs]
        cod = [b for _, b in self.pairs]
        if len(set(dom)) != len(dom):
            raise ValueError(f"{self.pairs} assigns two images to one index")
        if len(set(cod)) != len(cod):
            raise ValueError(f"{self.pairs} is not injective")
        if list(self.pairs) != sorted(self.pairs):
            object.__setattr__(self, "pairs", tuple(sorted(self.pairs)))

    @classmethod
    def from_mapping(cls, mapping: Mapping[int, int]) -> PartialPermutation:
        return cls(tuple(sorted(mapping.items())))

    @property
    def mapping(self) -> dict[int, int]:
        return dict(self.pairs)

    @property
    def domain(self) -> frozenset[int]:
        return frozenset(a for a, _ in self.pairs)

    @property
    def codomain(self) -> frozenset[int]:
        return frozenset(b for _, b in self.pairs)

    def __call__(self, i: int) -> int:
        return self.mapping[i]

    def restrict(self, domain: Iterable[int]) -> PartialPermutation:
        keep = set(domain)
        return PartialPermutation(tuple(p for p in self.pairs if p[0] in keep))

    def is_total(self, n: int) -> bool:
        full = frozenset(range(1, n + 1))
        return self.domain == full and self.codomain == full

    def is_involution(self) -> bool:
        mp = self.mapping
        return self.domain == self.codomain and all(mp[mp[a]] == a for a in mp)

    def __str__(self):
        return " ".join(f"{a}↦{b}" for a, b in self.pairs)


# -- Garside elements ----------------------------------------------------------

def delta_by_lcm(g: CoxeterGraph, budget: Budget = DEFAULT_BUDGET) -> Word:
    """Fold ``common_left_multiple`` over ``x1, ..., xn``.

    On a non-spherical graph reversing does not terminate and the budget
    runs out.
    """
    w: Word = ()
    for i in g.vertices:
        w = common_left_multiple(w, (i,), g, budget)
    return w


def delta_of_union(parts: Sequence[CoxeterGraph], budget: Budget = DEFAULT_BUDGET,
                   verify: bool = True) -> Word:
    """Concatenate the components' Garside words inside their disjoint union.

    With ``verify`` the result is checked against ``delta_by_lcm`` of the union.
    """
    union = EMPTY_GRAPH
    pieces: list[tuple[Word, GraphEmbedding]] = []
    for part in parts:
        union, e_old, e_new = disjoint_union(union, part)
        pieces = [(w, e.compose(e_old)) for w, e in pieces]
        pieces.append((garside_element(part, budget), e_new))
    w = sum((relabel_word(d, e) for d, e in pieces), ())
    if verify and not words_equal(w, delta_by_lcm(union, budget), union, budget):
        raise EngineError(f"product of component Garside elements is not Delta of {union}")
    return w


def garside_element(g: CoxeterGraph, budget: Budget = DEFAULT_BUDGET) -> Word:
    """Family formula for catalog graphs, component product for unions, lcm otherwise."""
    parts = catalog_parts(g)
    if parts is None:
        return delta_by_lcm(g, budget)
    if len(parts) == 1:
        return delta_formula(parts[0])
    return delta_of_union([catalog_graph(p) for p in parts], budget, verify=False)


def relative_by_quotient(e: GraphEmbedding, budget: Budget = DEFAULT_BUDGET) -> Word:
    """``Delta(target)`` divided on the left by the relabeled ``Delta(source)``."""
    small = relabel_word(garside_element(e.source, budget), e)
    return right_quotient(small, garside_element(e.target, budget), e.target, budget)


def sigma_permutation(w: Sequence[int], g: CoxeterGraph, budget: Budget = DEFAULT_BUDGET,
                      engine: str = "reversing") -> PartialPermutation:
    """All pairs ``(i, j)`` with ``x_i w == w x_j``."""
    w = check_word(w, g)
    pairs = []
    for i in g.vertices:
        js = [j for j in g.vertices if words_equal((i,) + w, w + (j,), g, budget, engine)]
        if len(js) > 1:
            raise EngineError(f"x{i} conjugates to several generators {js}; cancellativity fails")
        if js:
            pairs.append((i, js[0]))
    try:
        return PartialPermutation(tuple(pairs))
    except ValueError as exc:
        raise EngineError(str(exc)) from None


@dataclass(frozen=True)
class GarsideRecord:
    graph: CoxeterGraph
    delta: Word
    length: int
    sigma: PartialPermutation | None
    note: str = ""


def build_garside_record(cid: CatalogId | str, budget: Budget = DEFAULT_BUDGET) -> GarsideRecord:
    if isinstance(cid, str):
        cid = CatalogId.parse(cid)
    g = catalog_graph(cid)
    delta = delta_formula(cid)
    for i in g.vertices:
        if not left_divides((i,), delta, g, budget):
            raise EngineError(f"x{i} does not left-divide the formula for Delta({cid})")
    try:
        sigma = sigma_permutation(delta, g, budget)
    except BudgetExhausted as exc:
        return GarsideRecord(g, delta, len(delta), None, f"sigma not extracted: {exc}")
    if not (sigma.is_total(g.rank) and sigma.is_involution()):
        raise EngineError(f"sigma of Delta({cid}) is not a total involution: {sigma}")
    return GarsideRecord(g, delta, len(delta), sigma)


# -- relative elements ---------------------------------------------------------

def _new_vertex(e: GraphEmbedding) -> int:
    new = e.new_vertices
    if len(new) != 1:
        raise DomainError(f"inclusion must add exactly one vertex, adds {new}")
    return new[0]


@dataclass(frozen=True)
class RelativeRecord:
    embedding: GraphEmbedding
    relative: Word
    sigma_rel: PartialPermutation
    m: int | None

    @property
    def larger(self) -> CoxeterGraph:
        return self.embedding.target

    @property
    def new_vertex(self) -> int:
        return _new_vertex(self.embedding)


def _split_sigma(e: GraphEmbedding, sigma: PartialPermutation) -> tuple[PartialPermutation, int | None]:
    rel = sigma.restrict(e.image)
    missing = set(e.target.vertices) - rel.codomain
    m = missing.pop() if rel.domain == e.image and len(missing) == 1 else None
    return rel, m


def relative_record(e: GraphEmbedding, relative: Sequence[int] | None = None,
                    budget: Budget = DEFAULT_BUDGET) -> RelativeRecord:
    """Assemble the relative element of ``e`` (by quotient unless given) with its sigma and m."""
    _new_vertex(e)
    g = e.target
    rel = relative_by_quotient(e, budget) if relative is None else check_word(relative, g)
    sigma_rel, m = _split_sigma(e, sigma_permutation(rel, g, budget))
    return RelativeRecord(e, rel, sigma_rel, m)


@dataclass
class RelativeCheck:
    """Outcome of the four characterizing properties of a relative element."""

    items: dict[str, tuple[Status, str]] = field(default_factory=dict)

    ITEMS = ("square_free", "unique_head", "sigma_bijection", "unique_tail")

    @property
    def ok(self) -> bool:
        return all(s is not Status.FAIL for s, _ in self.items.values())

    @property
    def complete(self) -> bool:
        return all(s is Status.PASS for s, _ in self.items.values())

    def __str__(self):
        return ", ".join(f"{k}={s.value}" for k, (s, _) in self.items.items())


def check_relative_properties(rec: RelativeRecord, budget: Budget = DEFAULT_BUDGET,
                              max_square_free_length: int = 20) -> RelativeCheck:
    """Square-freeness, the unique first letter x_n, the sigma bijection onto all
    vertices but m, and the unique last letter x_m.

    Square-freeness needs class enumeration, so it is skipped above
    ``max_square_free_length`` letters or when the class budget runs out.
    """
    g, w, n = rec.larger, rec.relative, rec.new_vertex
    out = RelativeCheck()

    def item(name, run):
        try:
            out.items[name] = run()
        except BudgetExhausted as exc:
            out.items[name] = (Status.SKIPPED, str(exc))

    def square_free():
        if len(w) > max_square_free_length:
            return Status.SKIPPED, f"length {len(w)} > {max_square_free_length}"
        return Status.of(is_square_free(w, g, budget)), ""

    def head():
        heads = [i for i in g.vertices if left_divides((i,), w, g, budget)]
        return Status.of(heads == [n]), f"left divisors {heads}"

    def bijection():
        ok = rec.sigma_rel.domain == rec.embedding.image and rec.m is not None
        return Status.of(ok), f"sigma {rec.sigma_rel}, m={rec.m}"

    def tail():
        tails = [j for j in g.vertices if right_divides((j,), w, g, budget)]
        return Status.of(rec.m is not None and tails == [rec.m]), f"right divisors {tails}"

    item("square_free", square_free)
    item("unique_head", head)
    item("sigma_bijection", bijection)
    item("unique_tail", tail)
    return out


def _conjugation_bijective(u: Word, e: GraphEmbedding, budget: Budget) -> bool:
    rel = sigma_permutation(u, e.target, budget).restrict(e.image)
    return rel.domain == e.image and len(rel.codomain) == len(e.image)


def certify_relative_squarefree(u: Sequence[int], e: GraphEmbedding, budget: Budget = DEFAULT_BUDGET) -> bool:
    """Accept ``u`` as the relative element of ``e`` from three conditions:
    no ``x_m^2`` factor, ``x_n`` is its only first letter, and conjugation sends
    the old vertices bijectively onto all but one vertex.

    ``m`` comes from the true relative element. An accepted ``u`` must equal it;
    a mismatch is logged and reported as False.
    """
    g = e.target
    u = check_word(u, g)
    n = _new_vertex(e)
    true = relative_record(e, budget=budget)
    if true.m is None:
        raise EngineError(f"relative element of {e.source} ⊂ {g} has no well-defined m")
    accepted = (
        not has_square_factor(u, true.m, g, budget)
        and [i for i in g.vertices if left_divides((i,), u, g, budget)] == [n]
        and _conjugation_bijective(u, e, budget)
    )
    if accepted and not words_equal(u, true.relative, g, budget):
        log.warning("%s satisfies the conditions but differs from %s",
                    format_word(u), format_word(true.relative))
        return False
    return accepted


def certify_relative_length(u: Sequence[int], e: GraphEmbedding, budget: Budget = DEFAULT_BUDGET) -> bool:
    """Accept ``u`` if ``x_n`` left-divides it, conjugation is a bijection as above,
    and ``|u| = l(target) - l(source)`` from the reflection counts.
    """
    g = e.target
    u = check_word(u, g)
    n = _new_vertex(e)
    expected = expected_length(g) - expected_length(e.source)
    return (
        len(u) == expected
        and left_divides((n,), u, g, budget)
        and _conjugation_bijective(u, e, budget)
    )
