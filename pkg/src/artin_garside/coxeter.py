"""
Coxeter graphs, the catalog of connected spherical types, and the inclusion
chains along which Garside elements are factored.

Vertices are numbered 1..n so that a letter ``i`` in a word is the generator
``x_i``. A graph is stored as its full Coxeter matrix; ``m(i, j) == 2`` means
the two generators commute and no edge is drawn.

Catalog labelings::

    A_n   x1 - x2 - ... - xn
    B_n   x1 =4= x2 - ... - xn
    D_n   x1 - ... - x(n-2) < x(n-1), xn        (D3 is the fork at x1)
    E_n   x1 - x2 - x3 - x5 - ... - xn, with x4 hanging off x3
    F4    x1 - x2 =4= x3 - x4
    G2    x1 =6= x2
    H_n   x1 =5= x2 - ... - xn
    I2(p) x1 =p= x2
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Sequence


class DomainError(ValueError):
    """An argument lies outside the range an operation is defined on."""


class GraphParseError(ValueError):
    def __init__(self, line_no: int, line: str, reason: str):
        super().__init__(f"line {line_no}: {reason}: {line!r}")
        self.line_no = line_no
        self.line = line
        self.reason = reason


@dataclass(frozen=True)
class CoxeterGraph:
    """A symmetric Coxeter matrix with finite entries.

    ``label`` is informational (catalog name or ``"A1xA1"`` for unions) and
    does not take part in equality.
    """

    orders: tuple[tuple[int, ...], ...]
    label: str | None = field(default=None, compare=False)

    def __post_init__(self):
        n = len(self.orders)
        for i, row in enumerate(self.orders):
            if len(row) != n:
                raise DomainError(f"row {i + 1} has {len(row)} entries, expected {n}")
            for j, m in enumerate(row):
                if not isinstance(m, int) or isinstance(m, bool):
                    raise DomainError(f"order m({i + 1},{j + 1}) = {m!r} is not a finite integer")
                if i == j and m != 1:
                    raise DomainError(f"diagonal entry m({i + 1},{i + 1}) must be 1, got {m}")
                if i != j and m < 2:
                    raise DomainError(f"off-diagonal entry m({i + 1},{j + 1}) must be >= 2, got {m}")
                if m != self.orders[j][i]:
                    raise DomainError(f"matrix is not symmetric at ({i + 1},{j + 1})")

    @classmethod
    def from_edges(cls, rank: int, edges: Iterable[tuple[int, int, int]], label: str | None = None) -> CoxeterGraph:
        if rank < 0:
            raise DomainError(f"rank must be nonnegative, got {rank}")
        rows = [[1 if i == j else 2 for j in range(rank)] for i in range(rank)]
        for i, j, m in edges:
            if not (1 <= i <= rank and 1 <= j <= rank) or i == j:
                raise DomainError(f"bad edge ({i}, {j}) for rank {rank}")
            rows[i - 1][j - 1] = rows[j - 1][i - 1] = m
        return cls(tuple(tuple(r) for r in rows), label)

    @property
    def rank(self) -> int:
        return len(self.orders)

    @property
    def vertices(self) -> range:
        return range(1, self.rank + 1)

    def m(self, i: int, j: int) -> int:
        return self.orders[i - 1][j - 1]

    def edges(self) -> list[tuple[int, int, int]]:
        """Pairs with ``m >= 3``, as ``(i, j, m)`` with ``i < j``."""
        return [(i, j, self.m(i, j)) for i in self.vertices for j in self.vertices
                if i < j and self.m(i, j) >= 3]

    def relabeled(self, perm: Sequence[int]) -> tuple[CoxeterGraph, GraphEmbedding]:
        """Renumber vertex ``i`` as ``perm[i - 1]``; returns the new graph and the isomorphism."""
        n = self.rank
        if sorted(perm) != list(range(1, n + 1)):
            raise DomainError(f"{list(perm)} is not a permutation of 1..{n}")
        rows = [[0] * n for _ in range(n)]
        for i in self.vertices:
            for j in self.vertices:
                rows[perm[i - 1] - 1][perm[j - 1] - 1] = self.m(i, j)
        g = CoxeterGraph(tuple(tuple(r) for r in rows))
        return g, GraphEmbedding(self, g, tuple(perm))

    def to_text(self) -> str:
        lines = [f"rank {self.rank}"]
        lines += [f"edge {i} {j} {m}" for i, j, m in self.edges()]
        return "\n".join(lines) + "\n"

    def __str__(self):
        return self.label or f"CoxeterGraph(rank={self.rank}, edges={self.edges()})"


EMPTY_GRAPH = CoxeterGraph((), "")


@dataclass(frozen=True)
class GraphEmbedding:
    """A label-preserving injective vertex map ``source -> target``.

    ``vertex_map[i - 1]`` is the image of source vertex ``i``.
    """

    source: CoxeterGraph
    target: CoxeterGraph
    vertex_map: tuple[int, ...]

    def __post_init__(self):
        f = self.vertex_map
        if len(f) != self.source.rank:
            raise DomainError(f"vertex map has {len(f)} entries for a rank {self.source.rank} source")
        if len(set(f)) != len(f):
            raise DomainError(f"vertex map {f} is not injective")
        for k in f:
            if not 1 <= k <= self.target.rank:
                raise DomainError(f"image {k} is not a vertex of the target")
        for i in self.source.vertices:
            for j in self.source.vertices:
                if self.target.m(f[i - 1], f[j - 1]) != self.source.m(i, j):
                    raise DomainError(
                        f"map does not preserve m({i},{j}) = {self.source.m(i, j)}: "
                        f"target has m({f[i - 1]},{f[j - 1]}) = {self.target.m(f[i - 1], f[j - 1])}")

    def __call__(self, i: int) -> int:
        return self.vertex_map[i - 1]

    @property
    def image(self) -> frozenset[int]:
        return frozenset(self.vertex_map)

    @property
    def new_vertices(self) -> list[int]:
        return [v for v in self.target.vertices if v not in self.image]

    def compose(self, after: GraphEmbedding) -> GraphEmbedding:
        """``after . self``: first this map, then ``after``."""
        if after.source != self.target:
            raise DomainError("embeddings are not composable")
        return GraphEmbedding(self.source, after.target, tuple(after(k) for k in self.vertex_map))

    @classmethod
    def identity_prefix(cls, source: CoxeterGraph, target: CoxeterGraph) -> GraphEmbedding:
        return cls(source, target, tuple(source.vertices))


def relabel_word(w: Sequence[int], e: GraphEmbedding) -> tuple[int, ...]:
    """Letterwise image of ``w`` under the embedding."""
    out = []
    for a in w:
        if not 1 <= a <= e.source.rank:
            raise DomainError(f"letter x{a} is not a vertex of the source graph")
        out.append(e.vertex_map[a - 1])
    return tuple(out)


def find_embedding(source: CoxeterGraph, target: CoxeterGraph) -> GraphEmbedding | None:
    """First label-preserving embedding in lexicographic order of vertex maps, or None."""
    n, N = source.rank, target.rank
    chosen: list[int] = []

    def extend() -> bool:
        i = len(chosen) + 1
        if i > n:
            return True
        for k in range(1, N + 1):
            if k in chosen:
                continue
            if all(target.m(chosen[j - 1], k) == source.m(j, i) for j in range(1, i)):
                chosen.append(k)
                if extend():
                    return True
                chosen.pop()
        return False

    if n <= N and extend():
        return GraphEmbedding(source, target, tuple(chosen))
    return None


# -- catalog -------------------------------------------------------------------

_CATALOG_RE = re.compile(r"^\s*(I2)\s*\(\s*(\d+)\s*\)\s*$|^\s*([ABDEFGH])\s*(\d+)\s*$")


@dataclass(frozen=True, order=True)
class CatalogId:
    family: str
    parameter: int

    def __post_init__(self):
        f, n = self.family, self.parameter
        ok = {
            "A": n >= 1,
            "B": n >= 2,
            "D": n >= 3,  # D3 is admitted as the base of the D-series
            "E": n in (6, 7, 8),
            "F": n == 4,
            "G": n == 2,
            "H": n in (3, 4),
            "I2": n >= 5 and n != 6,
        }.get(f)
        if ok is None:
            raise DomainError(f"unknown family {f!r}")
        if not ok:
            raise DomainError(f"{f} does not admit parameter {n}")

    @classmethod
    def parse(cls, text: str) -> CatalogId:
        mt = _CATALOG_RE.match(text)
        if not mt:
            raise DomainError(f"not a catalog name: {text!r}")
        if mt.group(1):
            return cls("I2", int(mt.group(2)))
        return cls(mt.group(3), int(mt.group(4)))

    @property
    def rank(self) -> int:
        return 2 if self.family == "I2" else self.parameter

    def __str__(self):
        if self.family == "I2":
            return f"I2({self.parameter})"
        return f"{self.family}{self.parameter}"


def _chain_edges(n: int) -> list[tuple[int, int, int]]:
    return [(k, k + 1, 3) for k in range(1, n)]


def catalog_graph(cid: CatalogId | str) -> CoxeterGraph:
    if isinstance(cid, str):
        cid = CatalogId.parse(cid)
    f, n = cid.family, cid.parameter
    if f == "A":
        edges = _chain_edges(n)
    elif f == "B":
        edges = [(1, 2, 4)] + _chain_edges(n)[1:]
    elif f == "D":
        edges = _chain_edges(n - 2) + [(n - 2, n - 1, 3), (n - 2, n, 3)]
    elif f == "E":
        edges = [(1, 2, 3), (2, 3, 3), (3, 4, 3), (3, 5, 3)] + [(k, k + 1, 3) for k in range(5, n)]
    elif f == "F":
        edges = [(1, 2, 3), (2, 3, 4), (3, 4, 3)]
    elif f == "G":
        edges = [(1, 2, 6)]
    elif f == "H":
        edges = [(1, 2, 5)] + _chain_edges(n)[1:]
    else:
        edges = [(1, 2, n)]
    return CoxeterGraph.from_edges(cid.rank, edges, str(cid))


def expected_reflection_count(cid: CatalogId | str) -> int:
    """Length of the Garside element, i.e. the number of reflections of the Coxeter group."""
    if isinstance(cid, str):
        cid = CatalogId.parse(cid)
    f, n = cid.family, cid.parameter
    if f == "A":
        return n * (n + 1) // 2
    if f == "B":
        return n * n
    if f == "D":
        return n * n - n
    if f == "I2":
        return n
    return {("E", 6): 36, ("E", 7): 63, ("E", 8): 120, ("F", 4): 24,
            ("G", 2): 6, ("H", 3): 15, ("H", 4): 60}[f, n]


def catalog_parts(g: CoxeterGraph) -> list[CatalogId] | None:
    """Catalog components of ``g`` if its label names them and the graph matches; else None."""
    if g.rank == 0:
        return []
    if not g.label:
        return None
    try:
        parts = [CatalogId.parse(p) for p in g.label.split("x")]
    except DomainError:
        return None
    rebuilt = EMPTY_GRAPH
    for p in parts:
        rebuilt = disjoint_union(rebuilt, catalog_graph(p))[0]
    return parts if rebuilt == g else None


def expected_length(g: CoxeterGraph) -> int:
    """Expected Garside length of a catalog graph or a labeled union of catalog graphs."""
    parts = catalog_parts(g)
    if parts is None:
        raise DomainError(f"{g} is not a catalog graph or union of catalog graphs")
    return sum(expected_reflection_count(p) for p in parts)


def disjoint_union(g1: CoxeterGraph, g2: CoxeterGraph) -> tuple[CoxeterGraph, GraphEmbedding, GraphEmbedding]:
    """Union with ``g1`` on 1..n1 and ``g2`` shifted to n1+1..n1+n2; ``m = 2`` across parts."""
    n1, n2 = g1.rank, g2.rank
    edges = g1.edges() + [(i + n1, j + n1, m) for i, j, m in g2.edges()]
    if n1 == 0:
        label = g2.label
    elif n2 == 0:
        label = g1.label
    elif g1.label and g2.label:
        label = f"{g1.label}x{g2.label}"
    else:
        label = None
    g = CoxeterGraph.from_edges(n1 + n2, edges, label)
    e1 = GraphEmbedding(g1, g, tuple(range(1, n1 + 1)))
    e2 = GraphEmbedding(g2, g, tuple(range(n1 + 1, n1 + n2 + 1)))
    return g, e1, e2


# -- inclusion chains ----------------------------------------------------------

@dataclass(frozen=True)
class ChainStep:
    """One graph of an inclusion chain, with the embedding of its predecessor."""

    id: CatalogId
    graph: CoxeterGraph
    embedding: GraphEmbedding


def _chain_ids(cid: CatalogId) -> list[tuple[CatalogId, tuple[int, ...] | None]]:
    f, n = cid.family, cid.parameter
    A = lambda k: CatalogId("A", k)  # noqa: E731
    if f == "A":
        return [(A(k), None) for k in range(1, n + 1)]
    if f == "B":
        return [(A(1), None)] + [(CatalogId("B", k), None) for k in range(2, n + 1)]
    if f == "D":
        return [(A(k), None) for k in range(1, n)] + [(cid, None)]
    if f in ("G", "I2"):
        return [(A(1), None), (cid, None)]
    if f == "F":
        # B3 sits on {x1,x2,x3} with its doubled edge on x2-x3
        return _chain_ids(CatalogId("B", 3)) + [(cid, (3, 2, 1))]
    if f == "H":
        steps = [(A(1), None), (CatalogId("I2", 5), None), (CatalogId("H", 3), None)]
        return steps + ([(cid, None)] if n == 4 else [])
    # E_n over D5: D5 occupies x1..x5 in the E labeling
    return _chain_ids(CatalogId("D", 5)) + [(CatalogId("E", k), None) for k in range(6, n + 1)]


def inclusion_chain(cid: CatalogId | str) -> list[ChainStep]:
    """Graphs ``G_1 ⊂ G_2 ⊂ ... ⊂ G_k = catalog_graph(cid)``, each adding one vertex.

    Step 0 embeds the empty graph into A1.
    """
    if isinstance(cid, str):
        cid = CatalogId.parse(cid)
    out: list[ChainStep] = []
    prev = EMPTY_GRAPH
    for sid, vmap in _chain_ids(cid):
        g = catalog_graph(sid)
        e = GraphEmbedding(prev, g, vmap if vmap is not None else tuple(prev.vertices))
        out.append(ChainStep(sid, g, e))
        prev = g
    return out


# -- text formats --------------------------------------------------------------

def parse_graph(text: str) -> CoxeterGraph:
    """Parse ``rank N`` followed by ``edge i j m`` lines; ``#`` starts a comment."""
    rank = None
    entries: dict[tuple[int, int], int] = {}
    for line_no, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tok = line.split()
        if tok[0] == "rank":
            if rank is not None:
                raise GraphParseError(line_no, raw, "rank given twice")
            if len(tok) != 2 or not tok[1].isdigit():
                raise GraphParseError(line_no, raw, "expected 'rank N'")
            rank = int(tok[1])
        elif tok[0] == "edge":
            if rank is None:
                raise GraphParseError(line_no, raw, "edge before rank")
            if len(tok) != 4:
                raise GraphParseError(line_no, raw, "expected 'edge i j m'")
            if tok[3].lower() in ("inf", "infinity", "oo", "∞"):
                raise GraphParseError(line_no, raw, "infinite orders are not supported")
            try:
                i, j, m = (int(t) for t in tok[1:])
            except ValueError:
                raise GraphParseError(line_no, raw, "non-integer field") from None
            if not (1 <= i <= rank and 1 <= j <= rank) or i == j:
                raise GraphParseError(line_no, raw, f"vertices must be distinct and in 1..{rank}")
            if m < 2:
                raise GraphParseError(line_no, raw, "order must be >= 2")
            key = (min(i, j), max(i, j))
            if entries.get(key, m) != m:
                raise GraphParseError(line_no, raw, f"conflicts with earlier order {entries[key]}")
            entries[key] = m
        else:
            raise GraphParseError(line_no, raw, f"unknown directive {tok[0]!r}")
    if rank is None:
        raise GraphParseError(0, "", "missing 'rank N'")
    return CoxeterGraph.from_edges(rank, [(i, j, m) for (i, j), m in entries.items()])


def parse_graph_arg(arg: str) -> CoxeterGraph:
    """A catalog name (``E7``, ``I2(5)``), a union like ``A1xA1``, or ``@path`` to a graph file."""
    if arg.startswith("@"):
        return parse_graph(Path(arg[1:]).read_text())
    g = EMPTY_GRAPH
    for part in arg.split("x"):
        g = disjoint_union(g, catalog_graph(CatalogId.parse(part)))[0]
    return g


def catalog_id_of(g: CoxeterGraph) -> CatalogId | None:
    parts = catalog_parts(g)
    return parts[0] if parts is not None and len(parts) == 1 else None


def standard_ids(max_rank: int = 8, dihedral: Iterable[int] = (5, 7, 8, 9, 10, 11, 12)) -> list[CatalogId]:
    """A1..An, B2..Bn, D3..Dn, E6-E8, F4, G2, H3, H4 and the given I2(p)."""
    ids = [CatalogId("A", n) for n in range(1, max_rank + 1)]
    ids += [CatalogId("B", n) for n in range(2, max_rank + 1)]
    ids += [CatalogId("D", n) for n in range(3, max_rank + 1)]
    ids += [CatalogId("E", n) for n in (6, 7, 8) if n <= max_rank]
    ids += [CatalogId("F", 4), CatalogId("G", 2), CatalogId("H", 3), CatalogId("H", 4)]
    ids += [CatalogId("I2", p) for p in dihedral]
    return ids
