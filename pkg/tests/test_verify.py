import json

import pytest

from permrel.presentation import build_presentation
from permrel.verify import (
    BOUNDED,
    CATALOG,
    FAIL,
    INCONCLUSIVE,
    PASS,
    Prover,
    SuiteConfig,
    Z,
    applicable,
    move_identities,
    run_check,
    run_suite,
)


def test_catalog_contains_named_checks():
    for cid in [
        "lemma-ij-i", "lemma-ij-ii", "lemma-ij-iii", "lemma-ij-iv", "lemma-z2central", "lemma-central4",
        "lemma-squares-i", "lemma-squares-ii", "lemma-normalf-coverage", "lemma-normalf2-commute",
        "lemma-even1-bounded", "lemma-even2-bounded", "lemma-preliminar-spot", "prop-centrality-criterion",
        "lemma-canc-bounded", "thm-i-group", "thm-iv-witness", "thm-iv-Y", "thm-v-eta-witness",
    ]:
        assert cid in CATALOG


def test_applicability(alt):
    assert "lemma-ij-iii" in applicable(alt(4)) and "lemma-ij-iii" not in applicable(alt(5))
    assert "thm-iv-witness" in applicable(alt(5)) and "thm-iv-witness" not in applicable(alt(4))
    assert "lemma-even1-bounded" in applicable(alt(6))
    assert applicable(build_presentation(4, "symmetric")) == []


def test_spec_examples(alt):
    assert run_check("lemma-ij-i", alt(4)).verdict == PASS
    assert run_check("lemma-z2central", alt(5)).verdict == PASS
    res = run_check("thm-iv-witness", alt(5))
    assert res.verdict == PASS and "not_equal" in res.details


def test_bounded_label(alt):
    res = run_check("lemma-preliminar-spot", alt(6), max_len=2)
    assert res.label == BOUNDED and res.params["L"] == 2


def test_run_check_errors(alt):
    with pytest.raises(KeyError):
        run_check("no-such-check", alt(4))
    with pytest.raises(ValueError):
        run_check("lemma-ij-iii", alt(5))
    with pytest.raises(ValueError):
        run_check("lemma-ij-i", build_presentation(4, "symmetric"))
    with pytest.raises(ValueError):
        run_check("lemma-ij-i", alt(4), budget=0)


def test_budget_one_never_fails(alt):
    rep = run_suite(alt(4), SuiteConfig(budget=1))
    assert rep.totals[FAIL] == 0
    assert rep.totals[INCONCLUSIVE] > rep.totals["checks"] // 2


def test_checks_are_order_independent(alt):
    ids = ["lemma-squares-ii", "lemma-ij-i", "thm-iv-Y"]
    a = run_suite(alt(4), SuiteConfig(ids)).to_dict()["checks"]
    b = run_suite(alt(4), SuiteConfig(list(reversed(ids)))).to_dict()["checks"]
    assert sorted(a, key=lambda r: r["id"]) == sorted(b, key=lambda r: r["id"])


def test_report_json(alt):
    rep = run_suite(alt(4), SuiteConfig(["lemma-ij-i", "lemma-canc-bounded"]))
    data = json.loads(rep.to_json())
    assert list(data) == ["presentation", "checks", "totals"]
    assert list(data["checks"][0])[:5] == ["id", "params", "verdict", "cost", "details"]
    assert data["totals"] == {"checks": 2, "pass": 2, "fail": 0, "inconclusive": 0}
    assert "seconds" in json.loads(rep.to_json(timing=True))
    assert json.dumps(data, indent=2, ensure_ascii=False) == rep.to_json()


def test_prover_memo_uses_symmetry(alt):
    pr = Prover(alt(5), 10**6)
    for i in range(1, 6):
        for j in range(1, 6):
            if i != j:
                assert pr.equal((i, j) + Z, Z + (i, j)).verdict == "equal"
    assert pr.queries == 20 and len(pr.memo) == 1


def test_move_identities_count():
    assert len(move_identities(4)) == 24 + 12 + 12
