"""Unit tests for the integral catalog."""

import math

import numpy as np
import pytest

from hankel_dual.catalog import (
    TOLERANCES,
    ParamPoint,
    all_entries,
    all_failures,
    catalog_metadata,
    control_seed,
    entry_by_id,
    failure_by_id,
    heron_area,
    l1_l2,
)
from hankel_dual.errors import ParameterError, UnknownIdError


def test_catalog_counts():
    assert len(all_entries()) == 40
    assert len(all_failures()) == 16


def test_entry_ids_unique_and_ordered():
    ids = [e.id for e in all_entries()]
    assert len(set(ids)) == 40
    assert ids == sorted(ids, key=lambda i: (int(i[1:3]), i[3:]))


def test_every_entry_has_three_point_grid():
    for e in all_entries():
        assert len(e.default_grid) >= 3, e.id
        for p in e.default_grid:
            assert not e.violations(p), (e.id, p.label())


def test_tolerance_classes():
    assert TOLERANCES == {"Decaying": 1e-9, "Oscillatory": 1e-7, "Singular": 1e-6}
    for e in all_entries():
        assert e.tol_class in TOLERANCES
        assert e.tolerance == TOLERANCES[e.tol_class]


def test_provenance_is_table_citation():
    cited = [e for e in all_entries() if e.provenance.startswith("GR 6.5")]
    assert len(cited) >= 39  # one classical formula predates the table numbering
    for e in all_entries():
        assert e.provenance
    for s in all_failures():
        assert s.provenance.startswith("GR 6.5"), s.id


def test_groups_partition():
    by_group = {}
    for e in all_entries():
        by_group.setdefault(e.group, []).append(e.id)
    assert sorted(by_group) == [2, 3, 4, 5, 6]
    assert sum(len(v) for v in by_group.values()) == 40


def test_lookup_by_id():
    e = entry_by_id("T03")
    assert e.id == "T03"
    s = failure_by_id("S6512_1a")
    assert s.id == "S6512_1a"
    with pytest.raises(UnknownIdError):
        entry_by_id("T99")
    with pytest.raises(UnknownIdError):
        failure_by_id("nope")


def test_param_point():
    p = ParamPoint.of(nu=0.5, z=2)
    assert p["nu"] == 0.5
    assert p.get("a") is None
    assert p.as_dict() == {"nu": 0.5, "z": 2.0}
    assert "nu=0.5" in p.label()
    with pytest.raises(ParameterError):
        ParamPoint.of(bogus=1.0)
    with pytest.raises(KeyError):
        p["a"]


def test_constraint_violation_raises_before_quadrature():
    e = entry_by_id("T03")
    bad = ParamPoint.of(nu=5.0, z=1.0)  # above the convergence bound
    assert e.violations(bad)
    with pytest.raises(ParameterError):
        e.lhs(bad)


def test_heron_area_pythagorean_exact():
    assert heron_area(3.0, 4.0, 5.0) == 6.0


def test_heron_area_symmetric():
    import itertools

    vals = {heron_area(*perm) for perm in itertools.permutations((2.0, 3.0, 4.0))}
    assert len(vals) == 1


def test_heron_area_degenerate_and_violated():
    assert heron_area(1.0, 2.0, 3.0) == 0.0  # collinear
    assert heron_area(1.0, 1.0, 5.0) == 0.0  # triangle inequality violated


def test_l1_l2_identities():
    rng = np.random.default_rng(7)
    for _ in range(25):
        a, b, c = rng.uniform(0.1, 5.0, size=3)
        l1, l2 = l1_l2(a, b, c)
        assert 0.0 < l1 <= l2
        assert abs(l1 * l2 - b * c) < 1e-12 * (1.0 + b * c)
        s = a * a + b * b + c * c
        assert abs(l1 * l1 + l2 * l2 - s) < 1e-12 * (1.0 + s)
        s1 = math.hypot(a, b + c)
        s2 = math.hypot(a, b - c)
        assert abs((l2 * l2 - l1 * l1) - s1 * s2) < 1e-11 * (1.0 + s1 * s2)


def test_control_seed_admissible():
    from hankel_dual.hankel import check_condition

    seed = control_seed()
    v = check_condition(seed)
    assert v.admissible
    assert v.failing_endpoint is None


def test_failure_seeds_declare_expected_endpoint():
    endpoints = {s.expected_endpoint for s in all_failures()}
    assert endpoints <= {"Zero", "Infinity", "Both"}
    # the corpus exercises failures at both endpoints
    assert "Zero" in endpoints and "Infinity" in endpoints


def test_metadata_schema():
    meta = catalog_metadata()
    assert meta["schema_version"] == 1
    assert len(meta["entries"]) == 40
    assert len(meta["failures"]) == 16
    for e in meta["entries"]:
        assert set(e) == {
            "id", "group", "description", "provenance", "tol_class",
            "tolerance", "pieces", "default_grid",
        }
        assert len(e["default_grid"]) >= 3
    for s in meta["failures"]:
        assert set(s) == {
            "id", "provenance", "description", "expected_endpoint",
            "declared_zero_exponent", "declared_inf_exponent",
        }


@pytest.mark.parametrize("entry_id", ["T02a", "T03", "T04", "T21", "T23", "T28a"])
def test_lhs_matches_rhs_smoke(entry_id):
    # cheap smoke at loose tolerance; the full grid runs in the
    # acceptance suite at class tolerances
    e = entry_by_id(entry_id)
    p = e.default_grid[0]
    res = e.lhs(p, tol=1e-5)
    rhs = float(e.rhs(p))
    assert res.converged
    assert abs(res.value - rhs) / (1.0 + abs(rhs)) <= 1e-5
