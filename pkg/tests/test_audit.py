from math import comb

import pytest

from subchains.audit import CLAIMS, PUBLISHED_C, run_audit


@pytest.fixture(scope="module")
def report():
    return run_audit()


def by_id(report):
    return {e.claim_id: e for e in report.entries}


def test_catalog_is_fixed_and_unique(report):
    ids = [c.claim_id for c in CLAIMS]
    assert len(ids) == len(set(ids))
    assert [e.claim_id for e in report.entries] == ids
    assert len(ids) >= 25


def test_status_follows_comparison(report):
    for e in report.entries:
        assert e.status in {"MATCH", "MISMATCH"}
    s = report.summary
    assert s["MATCH"] + s["MISMATCH"] + s["NOT_COMPARABLE"] == len(report.entries)


@pytest.mark.parametrize("claim, computed, status", [
    ("h_S4", 232, "MATCH"),
    ("g_S4", 44, "MATCH"),
    ("census_S5_maximal", {"12": 10, "20": 6, "24": 5, "60": 1}, "MATCH"),
    ("h_D10", 14, "MISMATCH"),
    ("h_C4", 4, "MISMATCH"),
    ("g_A4", 7, "MATCH"),
    ("tail_trivial_r8", True, "MATCH"),
    ("bound_S5_floor", True, "MATCH"),
    ("h_S5_published_c_sum", 4154, "MATCH"),
    ("type_order20_maximal_listing", "F20", "MISMATCH"),
    ("type_order20_maximal_table", "F20", "MATCH"),
])
def test_selected_entries(report, claim, computed, status):
    e = by_id(report)[claim]
    assert e.computed_value == computed
    assert e.status == status


def test_ledger_tail_is_binomial(report):
    entries = by_id(report)
    for r in range(8, 23):
        assert entries[f"c_{r}"].computed_value == (-1) ** (r - 1) * comb(22, r)
    assert len(PUBLISHED_C) == 22


def test_headline_values_are_cross_checked(report, lattice_of):
    """Audit values for A5 and S5 come from the DP; confirm them by inclusion-exclusion."""
    from subchains.chains import chain_counts, h_by_inclusion_exclusion
    entries = by_id(report)
    for spec in ("A5", "S5"):
        lat = lattice_of(spec)
        assert entries[f"h_{spec}"].computed_value == h_by_inclusion_exclusion(lat)[0]
        assert entries[f"g_{spec}"].computed_value == chain_counts(lat).g


def test_details_block(report):
    ie = report.details["s5_inclusion_exclusion"]
    assert ie["k"] == 22 and ie["trivial_tail_rank"] == 8
    assert ie["ranks"][0]["intersections"] == {"D12": 10, "F20": 6, "S4": 5, "A5": 1}
    assert ie["ranks"][1]["intersections"] == {"C2": 90, "C4": 45, "V4": 45, "S3": 40,
                                               "D10": 6, "A4": 5}
