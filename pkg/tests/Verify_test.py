import json
from fractions import Fraction

import pytest

from locochrome.solvers.bounds import ratio_bound
from locochrome.utils import Budget, SolverError
from locochrome.verify import CLAIMS, FAIL, PASS, RECIPES, SCHEMA, SKIPPED, Bound, Row, VerificationReport, \
    battery, decide, jsonable, run_recipe


def _statuses(report):
    return set(row.status for row in report.rows)


@pytest.mark.parametrize(
    'relation,computed,expected,verdict',
    [('eq', 3, 3, True), ('le', Fraction(5, 2), 3, True), ('gt', 2, 3, False), ('lt', Fraction(1, 3), 1, True),
     ('ge', True, True, True), ('le', 5, ratio_bound(Fraction(5, 2)), True),
     ('ge', 6, ratio_bound(Fraction(5, 2)), True), ('le', 27, ratio_bound(3), False)
     ]
)
def test_decide(relation, computed, expected, verdict):
    assert decide(relation, computed, expected) is verdict


def test_decide_undecided_inside_interval():
    bound = Bound(Fraction(3), False, Fraction(29, 10), Fraction(31, 10))
    assert decide('le', 3, bound) is None
    assert decide('eq', 3, bound) is None
    assert decide('eq', 4, bound) is False


def test_jsonable():
    assert jsonable(Fraction(5, 2)) == '5/2'
    assert jsonable(Fraction(4)) == '4'
    assert jsonable({'k': [Fraction(1, 3), None, True]}) == {'k': ['1/3', None, True]}
    assert jsonable(ratio_bound(2)) == '4'


def test_claims_are_well_formed():
    for key, claim in CLAIMS.items():
        assert claim.key == key
        assert key.split('.')[0] in RECIPES
        assert claim.relation in ('eq', 'le', 'ge', 'lt', 'gt')
        assert claim.provenance in ('stated', 'derived')


def test_battery():
    names = [name for name, _ in battery()]
    assert names[0] == 'P4' and 'petersen' in names and 'U(5,3)' not in names
    assert 'U(5,3)' in [name for name, _ in battery(full=True)]


def test_run_recipe_rejects_unknown():
    with pytest.raises(ValueError):
        run_recipe('thm-99')


def test_ratio_e():
    report = run_recipe('ratio-e', timing=False)
    assert report.passed and report.exit_code == 0
    assert len(report.rows) == 7
    assert _statuses(report) == {PASS}


def test_k1k():
    report = run_recipe('k1k', {'k': 3}, timing=False)
    assert report.passed
    rows = {row.key: row for row in report.rows}
    assert rows['k1k.classes'].computed == 5
    assert rows['k1k.classes'].expected == 5


def test_k1k_budget_exhausted():
    report = run_recipe('k1k', {'k': 3}, budget=Budget(work_units=1), timing=False)
    assert report.exhausted and not report.passed
    assert report.exit_code == 3
    assert _statuses(report) == {SKIPPED}


def test_ratio_b_multi():
    report = run_recipe('ratio-b', {'m': 5, 'h': 4, 'r': 2}, timing=False)
    assert report.passed, report.to_text()
    assert [row.key for row in report.rows] == ['ratio-b.multi_local', 'ratio-b.multi_psi', 'ratio-b.multi_alpha',
                                                'ratio-b.multi_lower', 'ratio-b.multi_upper']


def test_small_seeded_recipes():
    assert run_recipe('kk', {'max_ground': 5, 'families_per_size': 50}, seed=3, timing=False).passed
    assert run_recipe('ratio-a', {'count': 8, 'max_n': 6}, seed=3, timing=False).passed
    assert run_recipe('lp-oracle', {'random_count': 2, 'max_n': 5}, seed=3, timing=False).passed


def test_ratio_a_records_undecided_comparisons(monkeypatch):
    def undecidable(d):
        raise SolverError('cannot decide at the working precision')

    monkeypatch.setattr('locochrome.verify.verify_ratio', undecidable)
    report = run_recipe('ratio-a', {'count': 8, 'max_n': 6}, seed=3, timing=False)
    rows = {row.key: row for row in report.rows}
    assert rows['ratio-a.bound[dC3]'].status == FAIL
    assert 'cannot decide' in rows['ratio-a.bound[dC5]'].reason
    assert rows['ratio-a.violations'].status == PASS
    assert rows['ratio-a.undecided'].status == FAIL and rows['ratio-a.undecided'].computed > 0
    assert report.exit_code == 1


def test_report_is_reproducible():
    first = run_recipe('ratio-a', {'count': 5, 'max_n': 5}, seed=11, timing=False)
    second = run_recipe('ratio-a', {'count': 5, 'max_n': 5}, seed=11, timing=False)
    assert first.to_json() == second.to_json()
    payload = json.loads(first.to_json())
    assert payload['schema'] == SCHEMA
    assert payload['seed'] == 11
    assert payload['wall_time_s'] == 0.0
    assert payload['params'] == {'count': 5, 'max_n': 5}
    assert set(payload['graphs']) == {'dC3', 'dC5'}
    assert all(h.startswith('sha256:') for h in payload['graphs'].values())


def test_report_failure_exit_code():
    row = Row('ratio-e.close', 'statement', 'gt', Fraction(27, 10), Fraction(2), FAIL, None, 'derived')
    report = VerificationReport('ratio-e', {}, [row], {}, 1024, 0.0, True)
    assert report.exit_code == 1
    assert report.failures == [row]
    assert '[fail] ratio-e.close: 2 > 27/10' in report.to_text()


@pytest.mark.slow
@pytest.mark.parametrize(
    'theorem,params',
    [('unicolor', {}), ('ratio-b', {}), ('ratio-b', {'h': 5, 'r': 2}), ('ize', {}), ('frakceq', {}),
     ('sampler', {'trials': 20000}), ('gap1', {}), ('ratio-a', {}), ('kk', {}), ('lp-oracle', {})
     ]
)
def test_acceptance(theorem, params):
    report = run_recipe(theorem, params)
    assert not report.failures, report.to_text()


if __name__ == "__main__":
    pass
