"""
The catalog verification suite: every family formula, the relative
factorizations, the characterizing properties of each chain step, the
commutation tables and the two long commutation lemmas.

Entries are plain ``(name, anchor, function, args)`` tuples so they can be
shipped to worker processes; results come back in suite order.
"""

from __future__ import annotations

import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import Callable

from .coxeter import (
    catalog_graph, disjoint_union, expected_reflection_count,
    inclusion_chain, relabel_word, standard_ids,
)
from .formulas import R4, S3, S4, V6, V7, V8, delta_formula, relative_formula
from .garside import (
    Status, build_garside_record, certify_relative_length,
    check_relative_properties, delta_by_lcm, delta_of_union, relative_record,
)
from .words import (
    Budget, BudgetExhausted, equivalence_class, format_word, is_rigid,
    left_divides, words_equal,
)

Outcome = tuple[Status, str]


def _worst(statuses) -> Status:
    statuses = list(statuses)
    if Status.FAIL in statuses:
        return Status.FAIL
    if Status.SKIPPED in statuses:
        return Status.SKIPPED
    return Status.PASS


def _guard(fn: Callable[[], Outcome]) -> Outcome:
    try:
        return fn()
    except BudgetExhausted as exc:
        return Status.SKIPPED, str(exc)


# -- check functions (module level so they pickle) -------------------------------

def check_length_table(ids: list[str], budget: Budget) -> Outcome:
    bad = [f"{c}: {len(delta_formula(c))} != {expected_reflection_count(c)}"
           for c in ids if len(delta_formula(c)) != expected_reflection_count(c)]
    return Status.of(not bad), "; ".join(bad) or f"{len(ids)} types match"


def check_delta_family(ids: list[str], budget: Budget) -> Outcome:
    statuses, notes = [], []
    for c in ids:
        g, d = catalog_graph(c), delta_formula(c)
        if len(d) != expected_reflection_count(c):
            statuses.append(Status.FAIL)
            notes.append(f"{c}: length {len(d)}")
            continue

        def one():
            if not all(left_divides((i,), d, g, budget) for i in g.vertices):
                return Status.FAIL, f"{c}: a generator does not left-divide"
            return Status.of(words_equal(d, delta_by_lcm(g, budget), g, budget)), f"{c}: formula vs lcm"

        s, note = _guard(one)
        statuses.append(s)
        if s is not Status.PASS:
            notes.append(note)
    return _worst(statuses), "; ".join(notes) or f"{', '.join(ids)}: formula equals lcm"


def check_union_lemma(pairs: list[tuple[str, str]], budget: Budget) -> Outcome:
    statuses, notes = [], []
    for a, b in pairs:
        ga, gb = catalog_graph(a), catalog_graph(b)

        def one():
            g, ea, eb = disjoint_union(ga, gb)
            da, db = relabel_word(delta_formula(a), ea), relabel_word(delta_formula(b), eb)
            w = delta_of_union([ga, gb], budget)
            ok = words_equal(w, da + db, g, budget) and words_equal(da + db, db + da, g, budget)
            return Status.of(ok), f"{a}x{b}"

        s, note = _guard(one)
        statuses.append(s)
        if s is not Status.PASS:
            notes.append(note)
    return _worst(statuses), "; ".join(notes) or f"{len(pairs)} unions"


def check_factorizations(ids: list[str], budget: Budget) -> Outcome:
    statuses, notes = [], []
    for c in ids:
        chain = inclusion_chain(c)
        for k in range(1, len(chain)):
            small, step = chain[k - 1], chain[k]

            def one():
                w = relabel_word(delta_formula(small.id), step.embedding) + relative_formula(c, k)
                return Status.of(words_equal(w, delta_formula(step.id), step.graph, budget)), \
                    f"{c} step {k}: {small.id} ⊂ {step.id}"

            s, note = _guard(one)
            statuses.append(s)
            if s is not Status.PASS:
                notes.append(note)
    return _worst(statuses), "; ".join(notes) or f"{len(statuses)} steps"


def check_relative_step(cid: str, k: int, budget: Budget) -> Outcome:
    def run():
        step = inclusion_chain(cid)[k]
        rec = relative_record(step.embedding, relative_formula(cid, k), budget)
        report = check_relative_properties(rec, budget)
        return _worst(s for s, _ in report.items.values()), f"{report}; m={rec.m}"
    return _guard(run)


def check_commutations(graph: str, word: tuple[int, ...], table: dict[int, int], budget: Budget) -> Outcome:
    g = catalog_graph(graph)
    statuses, bad = [], []
    for i, j in table.items():
        s, _ = _guard(lambda: (Status.of(words_equal((i,) + word, word + (j,), g, budget)), ""))
        statuses.append(s)
        if s is not Status.PASS:
            bad.append(f"x{i}->x{j}: {s.value}")
    return _worst(statuses), "; ".join(bad) or " ".join(f"x{i}->x{j}" for i, j in table.items())


def check_relative_length(cid: str, budget: Budget) -> Outcome:
    chain = inclusion_chain(cid)
    u = relative_formula(cid, len(chain) - 1)
    e = chain[-1].embedding
    expected = expected_reflection_count(chain[-1].id) - expected_reflection_count(chain[-2].id)
    return _guard(lambda: (Status.of(certify_relative_length(u, e, budget)),
                           f"length {len(u)}, expected {expected}"))


def check_sigma_involutions(ids: list[str], budget: Budget) -> Outcome:
    statuses, notes = [], []
    for c in ids:
        rec = build_garside_record(c, budget)
        if rec.sigma is None:
            statuses.append(Status.SKIPPED)
            notes.append(f"{c}: {rec.note}")
        else:
            statuses.append(Status.PASS)
    return _worst(statuses), "; ".join(notes) or f"{len(ids)} involutions"


def check_rigidity(budget: Budget) -> Outcome:
    g = catalog_graph("A3")

    def run():
        cls = equivalence_class((2, 1, 3, 2), g, budget)
        ok = is_rigid((3, 2, 1), g, budget) and not is_rigid((2, 1, 3, 2), g, budget) \
            and cls == {(2, 1, 3, 2), (2, 3, 1, 2)}
        return Status.of(ok), "class of x2x1x3x2: " + ", ".join(sorted(format_word(v) for v in cls))
    return _guard(run)


# -- suite definition ------------------------------------------------------------

FAMILY_ANCHORS = {
    "A": "Delta(A_n)=x_1(x_2x_1)...(x_n...x_1)",
    "B": "Delta(B_n)=x_1(x_2x_1x_2)(x_3x_2x_1x_2x_3)...(x_n...x_2x_1x_2...x_n)",
    "D": "Delta(D_n)=Delta(A_(n-1))(x_nx_(n-2)...x_1)(x_(n-1)x_(n-2)...x_2)(x_nx_(n-2)...x_3)...",
    "I2": "Delta(I_2(p))=x_1x_2x_1... (p letters), Delta(G_2)=x_1x_2x_1x_2x_1x_2",
    "F": "Delta(F_4)=x_1x_2x_1 T_3 x_4 T_3 x_4 T_3 x_4",
    "H": "Delta(H_3)=x_1x_2x_1x_2x_1 S_3, Delta(H_4)=x_1x_2x_1x_2x_1 S_3 S_4",
    "E": "Delta(E_n)=Delta(A_4)Delta(D_5,A_4)V_6[V_7[V_8]]",
}

COMMUTATIONS = [
    ("F4", "R4", R4, {1: 1, 2: 2, 3: 3}, "x_iR_4=R_4x_i, i=1,2,3"),
    ("H3", "S3", S3, {1: 2, 2: 1}, "x_1S_3=S_3x_2, x_2S_3=S_3x_1"),
    ("H4", "S4", S4, {1: 1, 2: 2, 3: 3}, "x_iS_4=S_4x_i, i=1,2,3"),
    ("E6", "V6", V6, {1: 6, 2: 5, 3: 3, 4: 2, 5: 4},
     "x_1V_6=V_6x_6, x_2V_6=V_6x_5, x_3V_6=V_6x_3, x_4V_6=V_6x_2, x_5V_6=V_6x_4"),
    ("E7", "V7", V7, {1: 6, 2: 5, 3: 3, 4: 4, 5: 2, 6: 1},
     "x_iV_7=V_7x_(7-i), i=1,2,5,6; x_iV_7=V_7x_i, i=3,4"),
    ("E8", "V8", V8, {i: i for i in range(1, 8)}, "x_iV_8=V_8x_i, i=1,...,7"),
]

LENGTH_ANCHORS = {
    "F4": "l(R_4)=15=24-9=l(F_4)-l(B_3)",
    "H3": "l(S_3)=10=15-5=l(H_3)-l(I_2(5))",
    "H4": "l(S_4)=45=60-15=l(H_4)-l(H_3)",
    "E6": "l(V_6)=16=36-20=l(E_6)-l(D_5)",
    "E7": "l(V_7)=27=63-36=l(E_7)-l(E_6)",
    "E8": "l(V_8)=57=120-63=l(E_8)-l(E_7)",
}

UNION_PAIRS = [("A1", "A1"), ("A2", "A1"), ("B3", "A2"), ("H3", "I2(5)"), ("D4", "G2")]


@dataclass(frozen=True)
class Check:
    name: str
    anchor: str
    fn: Callable[..., Outcome]
    args: tuple = ()


def build_suite(max_rank: int = 8) -> list[Check]:
    ids = standard_ids(max_rank)
    names = [str(c) for c in ids]
    suite = [Check("length-table", "l(Gamma) = number of reflections", check_length_table, (names,))]
    by_family: dict[str, list[str]] = {}
    for c in ids:
        by_family.setdefault("I2" if c.family == "G" else c.family, []).append(str(c))
    for fam, anchor in FAMILY_ANCHORS.items():
        if fam not in by_family:
            continue
        suite.append(Check(f"delta-formula {fam}", anchor, check_delta_family, (by_family[fam],)))
    suite.append(Check("union-lemma", "Delta(G)=Delta(G_1)Delta(G_2)=Delta(G_2)Delta(G_1)",
                       check_union_lemma, (UNION_PAIRS,)))
    suite.append(Check("relative-factorization", "Delta(G_n)=Delta(G_(n-1))Delta(G_n,G_(n-1))",
                       check_factorizations, (names,)))
    seen = set()
    for c in ids:
        chain = inclusion_chain(c)
        for k in range(len(chain)):
            step = chain[k]
            key = (step.embedding.source, step.graph, step.embedding.vertex_map)
            if key in seen:
                continue
            seen.add(key)
            sub = str(chain[k - 1].id) if k else "empty"
            suite.append(Check(f"relative-properties {step.id}/{sub}",
                               "R_n square free; x_i|_L R_n iff i=n; x_iR_n=R_nx_sigma(i); x_j|_R R_n iff j=m",
                               check_relative_step, (str(c), k)))
    for graph, label, word, table, anchor in COMMUTATIONS:
        if graph not in names:
            continue
        suite.append(Check(f"commutation {label} in {graph}", anchor, check_commutations, (graph, word, table)))
    for cid, anchor in LENGTH_ANCHORS.items():
        if cid not in names:
            continue
        suite.append(Check(f"relative-length {cid}", anchor, check_relative_length, (cid,)))
    suite.append(Check("lemma F4", "x_1R_4=R_4x_1", check_commutations, ("F4", R4, {1: 1})))
    if "E8" in names:
        suite.append(Check("lemma E8", "x_7V_8=V_8x_7", check_commutations, ("E8", V8, {7: 7})))
    suite.append(Check("sigma-involution", "x_iDelta=Delta x_sigma(i), sigma^2=1", check_sigma_involutions, (names,)))
    suite.append(Check("rigidity", "x_3x_2x_1 rigid; x_2x_1x_3x_2=x_2x_3x_1x_2", check_rigidity))
    return suite


# -- running and reporting -------------------------------------------------------

@dataclass
class Entry:
    name: str
    anchor: str
    status: Status
    detail: str
    seconds: float = 0.0


@dataclass
class VerificationReport:
    entries: list[Entry] = field(default_factory=list)

    def counts(self) -> dict[str, int]:
        out = {s.value: 0 for s in Status}
        for e in self.entries:
            out[e.status.value] += 1
        return out

    @property
    def exit_code(self) -> int:
        c = self.counts()
        if c[Status.FAIL.value]:
            return 1
        return 2 if c[Status.SKIPPED.value] else 0

    def to_text(self) -> str:
        lines = [f"[{e.status.value}] {e.name}: {e.detail}  <{e.anchor}>" for e in self.entries]
        c = self.counts()
        lines.append(f"{len(self.entries)} checks: " + ", ".join(f"{v} {k}" for k, v in c.items()))
        return "\n".join(lines)

    def to_machine(self, timing: bool = True) -> str:
        lines = []
        for e in self.entries:
            fields = [f"check={json.dumps(e.name)}", f"status={e.status.value}",
                      f"anchor={json.dumps(e.anchor)}", f"detail={json.dumps(e.detail)}"]
            if timing:
                fields.append(f"seconds={e.seconds:.3f}")
            lines.append(" ".join(fields))
        lines.append("summary " + " ".join(f"{k}={v}" for k, v in self.counts().items()))
        return "\n".join(lines)

    def to_json(self) -> str:
        return json.dumps({"entries": [{**asdict(e), "status": e.status.value} for e in self.entries],
                           "summary": self.counts()}, indent=2)


def _run(check: Check, budget: Budget) -> Entry:
    t0 = time.perf_counter()
    status, detail = check.fn(*check.args, budget)
    return Entry(check.name, check.anchor, status, detail, time.perf_counter() - t0)


def run_suite(budget: Budget, jobs: int = 1, suite: list[Check] | None = None) -> VerificationReport:
    suite = build_suite() if suite is None else suite
    if jobs <= 1:
        return VerificationReport([_run(c, budget) for c in suite])
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return VerificationReport(list(pool.map(_run, suite, [budget] * len(suite))))
