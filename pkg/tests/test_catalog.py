import json
import math

import jsonschema
import pytest

from logint import basis, catalog, specfun
from logint.errors import DomainError

G = specfun.catalan()
LN2 = math.log(2.0)


def test_lookup_values():
    assert catalog.lookup("4.227.2").closed() == pytest.approx(-G, abs=1e-15)
    assert catalog.lookup("4.223.1").closed() == pytest.approx(math.pi**2 / 12, abs=1e-15)
    assert catalog.lookup("4.227.2").closed_form.symbolic() == "-G"


def test_unknown_entry():
    with pytest.raises(catalog.UnknownEntryError):
        catalog.lookup("9.999.9")


def test_ids_are_unique_and_ordered():
    ids = [e.id for e in catalog.entries()]
    assert len(ids) == len(set(ids))
    assert ids.index("4.231.2") < ids.index("4.231.11")
    assert sorted(ids[-3:]) == ["digamma_half.first_form", "entry_42317.harmonic_form", "g_n.at_one"]


def test_closed_form_matches_value_at_defaults():
    for e in catalog.entries():
        assert e.closed() == pytest.approx(e.closed_form.to_float(), abs=1e-13), e.id


def test_params_are_validated():
    e = catalog.lookup("4.231.7")
    with pytest.raises(DomainError):
        e.resolve({"n": -1})
    with pytest.raises(DomainError):
        e.resolve({"a": 0.0})
    with pytest.raises(DomainError):
        e.resolve({"zeta": 1})
    assert e.resolve({"b": 2}) == {"n": 1, "a": 1.0, "b": 2.0}


def test_grids_have_three_points():
    for e in catalog.entries():
        if e.params:
            assert len(e.parameter_grid()) == 3, e.id
            for kw in e.parameter_grid():
                e.resolve(kw)


@pytest.mark.parametrize("entry_id", ["4.231.1", "4.227.2", "4.224.4", "3.747.7"])
def test_verify_examples(entry_id):
    r = catalog.verify_entry(entry_id)
    assert r.passed
    assert r.abs_diff <= 1e-10
    assert r.numeric.converged


def test_verify_with_parameters():
    r = catalog.verify_entry("4.231.7", {"n": 3, "a": 1.0, "b": 2.0})
    assert r.passed
    assert r.closed == basis.entry_42317(3, 1.0, 2.0)


def test_verify_all_passes_with_errata_flagged():
    summary = catalog.verify_all(1e-10)
    assert summary.n_fail == 0
    assert summary.n_pass == len(catalog.entries())
    flagged = {r.id for r in summary.reports if r.erratum_flag}
    assert flagged == {
        "4.231.13", "4.231.19", "4.227.1",
        "g_n.at_one", "entry_42317.harmonic_form", "digamma_half.first_form",
    }


def test_errata_printed_values_disagree_with_oracle():
    for r in catalog.verify_all(1e-10).reports:
        if r.erratum_flag:
            assert r.printed_deviation > 1e-3, r.id


def test_unreachable_tolerance_is_not_silent():
    summary = catalog.verify_all(1e-30)
    for r in summary.reports:
        if not r.passed:
            assert r.reason
    failed = [r for r in summary.reports if not r.passed]
    assert failed
    assert all(r.numeric is None or not r.numeric.converged or r.abs_diff > 1e-30 for r in failed)


@pytest.mark.parametrize("u", [math.pi / 8, math.pi / 4, 3 * math.pi / 8])
def test_log_tan_identity(u):
    e = catalog.lookup("4.227.1")
    r = catalog.verify_entry("4.227.1", {"u": u})
    assert r.passed
    lob = specfun.lobachevsky
    assert e.closed({"u": u}) == pytest.approx(lob(u) + lob(math.pi / 2 - u) - math.pi / 2 * LN2, abs=1e-14)
    assert abs(e.printed_closed({"u": u}) - r.numeric.value) == pytest.approx(math.pi * LN2, abs=1e-10)


def test_export_validates_and_round_trips():
    text = catalog.export_json()
    doc = json.loads(text)
    jsonschema.validate(doc, catalog.SCHEMA)
    assert json.dumps(doc, indent=2) == text
    assert catalog.export_json() == text
    assert len(doc["entries"]) == len(catalog.entries())
    assert sum(d["printed_differs"] for d in doc["entries"]) == 6


def test_verify_json_is_serializable():
    doc = catalog.verify_all(1e-10).to_json()
    assert json.loads(json.dumps(doc)) == doc
