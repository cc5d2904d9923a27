"""Timing the BFS closure against subword reversing on fixed workloads."""

from __future__ import annotations

import csv
import io
import time
from dataclasses import dataclass

from .coxeter import catalog_graph
from .formulas import R4, V8, delta_formula
from .garside import delta_by_lcm
from .words import (
    DEFAULT_BUDGET, Budget, BudgetExhausted, Fraction, Word,
    reverse_counting, walk_class,
)


@dataclass(frozen=True)
class Instance:
    graph: str
    kind: str  # "eq", "class" or "lcm"
    words: tuple[Word, ...] = ()
    engines: tuple[str, ...] = ("bfs", "reversing")


def _delta(c: str) -> Word:
    return delta_formula(c)


INSTANCES: dict[str, Instance] = {
    "eq-A3-delta": Instance("A3", "eq", (_delta("A3"), (1, 3, 2, 1, 3, 2))),
    "eq-A4-delta": Instance("A4", "eq", (_delta("A4"), tuple(reversed(_delta("A4"))))),
    "eq-B3-delta": Instance("B3", "eq", (_delta("B3"), tuple(reversed(_delta("B3"))))),
    "eq-D4-delta": Instance("D4", "eq", (_delta("D4"), tuple(reversed(_delta("D4"))))),
    "eq-H3-delta": Instance("H3", "eq", (_delta("H3"), tuple(reversed(_delta("H3"))))),
    "neq-A4-conj": Instance("A4", "eq", ((1,) + _delta("A4"), _delta("A4") + (1,))),
    "eq-F4-lemma": Instance("F4", "eq", ((1,) + R4, R4 + (1,))),
    "eq-E8-lemma": Instance("E8", "eq", ((7,) + V8, V8 + (7,)), ("reversing",)),
    "eq-E8-delta": Instance("E8", "eq", (_delta("E8"), tuple(reversed(_delta("E8")))), ("reversing",)),
    "class-A3-delta": Instance("A3", "class", (_delta("A3"),), ("bfs",)),
    "class-A4-delta": Instance("A4", "class", (_delta("A4"),), ("bfs",)),
    "class-B3-delta": Instance("B3", "class", (_delta("B3"),), ("bfs",)),
    "lcm-E8": Instance("E8", "lcm", (), ("reversing",)),
    "lcm-H4": Instance("H4", "lcm", (), ("reversing",)),
}


@dataclass(frozen=True)
class BenchRecord:
    instance: str
    engine: str
    seconds: float
    count: int
    outcome: str


def _bfs_eq(u: Word, w: Word, g, budget) -> tuple[str, int]:
    if len(u) != len(w):
        return "false", 0
    n = 0
    for v in walk_class(u, g, budget):
        n += 1
        if v == w:
            return "true", n
    return "false", n


def _rev_eq(u: Word, w: Word, g, budget) -> tuple[str, int]:
    if len(u) != len(w):
        return "false", 0
    f, steps = reverse_counting(Fraction(u, w), g, budget)
    return ("false" if f.denominator else "true"), steps


def _measure(inst: Instance, engine: str, budget: Budget) -> tuple[str, int]:
    g = catalog_graph(inst.graph)
    if inst.kind == "eq":
        return (_bfs_eq if engine == "bfs" else _rev_eq)(*inst.words, g, budget)
    if inst.kind == "class":
        n = sum(1 for _ in walk_class(inst.words[0], g, budget))
        return "complete", n
    w = delta_by_lcm(g, budget)
    return f"length={len(w)}", len(w)


def run_instance(name: str, engines=("bfs", "reversing"), budget: Budget = DEFAULT_BUDGET) -> list[BenchRecord]:
    inst = INSTANCES[name]
    rows = []
    for engine in engines:
        if engine not in inst.engines:
            continue
        t0 = time.perf_counter()
        try:
            outcome, count = _measure(inst, engine, budget)
        except BudgetExhausted as exc:
            outcome, count = "budget-exhausted", exc.limit
        rows.append(BenchRecord(name, engine, time.perf_counter() - t0, count, outcome))
    return rows


def to_csv(rows: list[BenchRecord]) -> str:
    buf = io.StringIO()
    out = csv.writer(buf, lineterminator="\n")
    out.writerow(["instance", "engine", "seconds", "count", "outcome"])
    for r in rows:
        out.writerow([r.instance, r.engine, f"{r.seconds:.6f}", r.count, r.outcome])
    return buf.getvalue()
