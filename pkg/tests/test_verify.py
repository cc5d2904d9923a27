from artin_garside import bench
from artin_garside.garside import Status
from artin_garside.verify import VerificationReport, Entry, build_suite, run_suite
from artin_garside.words import DEFAULT_BUDGET, Budget


def test_suite_shape():
    suite = build_suite()
    names = [c.name for c in suite]
    assert len(names) == len(set(names))
    assert "relative-properties A1/empty" in names
    assert "lemma E8" in names and "rigidity" in names
    assert all(c.anchor for c in suite)


def test_default_run_has_no_failures():
    report = run_suite(DEFAULT_BUDGET)
    counts = report.counts()
    assert counts["fail"] == 0, report.to_text()
    by_name = {e.name: e for e in report.entries}
    assert by_name["length-table"].status is Status.PASS
    assert by_name["commutation R4 in F4"].status is Status.PASS
    # only long square-freeness checks may be skipped
    for e in report.entries:
        if e.status is Status.SKIPPED:
            assert e.name.startswith("relative-properties"), e


def test_report_is_deterministic():
    suite = build_suite(max_rank=4)
    a = run_suite(DEFAULT_BUDGET, suite=suite).to_machine(timing=False)
    b = run_suite(DEFAULT_BUDGET, jobs=2, suite=suite).to_machine(timing=False)
    assert a == b


def test_tiny_budget_skips_but_never_fails():
    report = run_suite(Budget(max_class_size=10), suite=build_suite(max_rank=5))
    assert report.counts()["fail"] == 0
    assert report.counts()["budget-skipped"] > 0
    assert report.exit_code == 2


def test_exit_codes():
    ok = Entry("a", "x", Status.PASS, "")
    assert VerificationReport([ok]).exit_code == 0
    assert VerificationReport([ok, Entry("b", "x", Status.SKIPPED, "")]).exit_code == 2
    assert VerificationReport([ok, Entry("c", "x", Status.FAIL, ""),
                               Entry("b", "x", Status.SKIPPED, "")]).exit_code == 1


def test_bench_engines_agree():
    for name, inst in bench.INSTANCES.items():
        if inst.kind != "eq" or len(inst.engines) < 2:
            continue
        rows = bench.run_instance(name)
        assert len({r.outcome for r in rows}) == 1, rows
    assert bench.run_instance("neq-A4-conj", ("reversing",))[0].outcome == "false"


def test_bench_budget_row():
    rows = bench.run_instance("class-A4-delta", ("bfs",), Budget(max_class_size=10))
    assert rows[0].outcome == "budget-exhausted" and rows[0].count == 10
