import json

import pytest
from hypothesis import given, strategies as st

from conftest import NONCOMMUTATIVE, SMALL
from ringgraph.corpus import get_ring, load_corpus
from ringgraph.graphcore import build_delta, build_gamma
from ringgraph.ringcore import FiniteRing, center, make_Zn
from ringgraph.verify import (
    CHECK_IDS,
    EXCLUDED,
    CheckResult,
    Status,
    SuiteReport,
    check_axioms,
    check_delta_theorems,
    check_diameter_theorem,
    check_isoclinism_proposition,
    delta_degree_formula,
    diameter_hypothesis,
    gamma_degree_formula,
    run_suite,
)


def mutant(R, x, y, v):
    mul = [list(row) for row in R.mul]
    mul[x][y] = v
    return FiniteRing(R.name + "-mut", R.add, mul, R.names, R.generators, checked=False)


@given(st.sampled_from(SMALL), st.data())
def test_degree_formulas_match_graphs(name, data):
    R = get_ring(name)
    r = data.draw(st.integers(0, R.order - 1))
    G = build_gamma(R, r)
    D = build_delta(R, r)
    for x in R.elements:
        assert G.degrees[x] == gamma_degree_formula(R, x, r)
        if x not in center(R):
            assert D.degrees[D.vertex_of(x)] == delta_degree_formula(R, x, r)


def test_commutative_corpus_skips_everything_noncommutative():
    rep = run_suite(load_corpus("Z2..Z9"), "all")
    assert rep.exit_code() == 0
    assert not rep.failures
    for res in rep.results:
        if res.check.startswith(("delta.", "commuting.", "diameter", "shape.nonregular", "shape.star",
                                 "shape.lollipop", "isoclinism")):
            assert res.status is Status.SKIP, res


def test_degree_suite_on_integers():
    rep = run_suite(load_corpus("Z2..Z9"), "degree")
    assert {r.status for r in rep.results} <= {Status.PASS, Status.SKIP}


def test_default_corpus_is_clean():
    rep = run_suite(load_corpus("default"), "all")
    assert rep.failures == []
    assert rep.exit_code() == 0
    assert not rep.by_status(Status.UNDECIDED)


def test_mutant_fails_with_replayable_witness():
    E9 = get_ring("E9")
    M = mutant(E9, 4, 7, (E9.mul[4][7] + 1) % 9)
    rep = run_suite([M], "all")
    assert rep.exit_code() == 1
    ax = [r for r in rep.failures if r.check == "axioms"]
    assert ax and ax[0].witness["ring"] == "E9-mut"
    w = ax[0].witness
    x, y, z = w["triple"]
    assert w["axiom"] in {"left_distributive", "right_distributive", "mul_associative"}
    mul = M.mul
    if w["axiom"] == "left_distributive":
        assert mul[x][M.add[y][z]] != M.add[mul[x][y]][mul[x][z]]


def test_mutant_breaks_graph_checks_too():
    # drop the axioms check: the graph-level checks alone must still notice
    E4 = get_ring("E4")
    M = mutant(E4, 1, 2, 0)
    rep = run_suite([M], [c for c in CHECK_IDS if c != "axioms"])
    assert rep.failures
    assert all(f.witness for f in rep.failures)


def test_report_is_deterministic():
    corpus = load_corpus("E4,F4,E9,F9,UT2Z2,Z2xE4")
    a = run_suite(corpus, "all").to_json()
    b = run_suite(corpus, "all").to_json()
    c = run_suite(corpus, "all", workers=2).to_json()
    assert a == b == c


def test_report_json_shape():
    rep = run_suite(load_corpus("E4,F4"), "all")
    doc = json.loads(rep.to_json())
    assert doc["corpus"] == ["E4", "F4"]
    assert set(doc["summary"]) == {s.value for s in Status}
    assert sum(doc["summary"].values()) == len(doc["results"])
    assert {"check", "ring", "r", "status", "section", "witness"} <= set(doc["results"][0])
    assert "total" in rep.to_table()


def test_unknown_check_rejected():
    with pytest.raises(ValueError):
        run_suite([make_Zn(2)], "nonsense")


def test_exit_codes():
    ring = "X"
    ok = CheckResult("c", ring, None, "ALL", Status.PASS)
    und = CheckResult("c", ring, None, "ALL", Status.UNDECIDED)
    bad = CheckResult("c", ring, None, "ALL", Status.FAIL, witness={"pair": [1, 2]})
    assert SuiteReport((ring,), (ok,)).exit_code() == 0
    assert SuiteReport((ring,), (ok, und)).exit_code() == 3
    assert SuiteReport((ring,), (und, bad)).exit_code() == 1
    with pytest.raises(ValueError):
        CheckResult("c", ring, None, "ALL", Status.FAIL)


def test_axioms_check(E4):
    assert check_axioms(E4)[0].status is Status.PASS


def test_delta_claims_on_order_9(E9):
    by = {(r.check, r.r_name): r for r in check_delta_theorems(E9)}
    assert by[("delta.one_regular_iff", "a+2b")].status is Status.PASS
    assert by[("delta.six_regular_iff", "0")].status is Status.PASS


def test_excluded_orders_are_reported_not_judged():
    res = check_delta_theorems(get_ring("Z2xE4"))
    excluded = [r for r in res if r.section == EXCLUDED]
    assert excluded
    assert all(r.status is Status.SKIP for r in excluded)


def test_diameter_hypotheses():
    E9 = get_ring("E9")
    # order 9: 3r = 0 and every noncentral centralizer has order 3
    assert all(diameter_hypothesis(E9, r) is None for r in E9.elements)
    E25 = get_ring("E25")
    r = E25.element("a+4b")
    assert diameter_hypothesis(E25, r) is not None
    res = [x for x in check_diameter_theorem(E25) if x.r == r]
    assert res and res[0].status is Status.PASS


def test_rank3_ring_exercises_second_diameter_branch():
    R = get_ring("E27r3")
    qualifying = [r for r in R.elements if diameter_hypothesis(R, r)]
    assert qualifying
    passed = [x for x in check_diameter_theorem(R) if x.status is Status.PASS]
    assert passed


@pytest.mark.parametrize("pair", [("E4", "F4"), ("E9", "F9")])
def test_isoclinism_check(pair):
    res = check_isoclinism_proposition(get_ring(pair[0]), get_ring(pair[1]))
    assert res.status is Status.PASS


def test_isoclinism_check_skips_mismatched_centres():
    res = check_isoclinism_proposition(get_ring("UT2Z2"), get_ring("E4"))
    assert res.status is Status.SKIP


@pytest.mark.parametrize("name", NONCOMMUTATIVE)
def test_no_failures_per_ring(name):
    rep = run_suite([get_ring(name)], "all")
    assert rep.failures == []


def test_check_crash_becomes_failure():
    # 0 * 1 = 1 makes 0 non-central, so the centre is empty
    M = mutant(make_Zn(2), 0, 1, 1)
    rep = run_suite([M], "all")
    assert rep.exit_code() == 1
    assert all(f.witness for f in rep.failures)
