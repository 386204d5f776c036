"""Each verification check at its smallest parameters, plus report plumbing."""

import json

import pytest

from spinhecke.tableaux import ShiftedTableau, StrictPartition
from spinhecke.verify import (
    VerificationReport,
    decomposition_csv,
    decomposition_table,
    lambda_jobs,
    reports_json,
    run_jobs,
    suite,
    suite_jobs,
    verify_branching,
    verify_howe,
    verify_jm_commutation,
    verify_jm_spectrum,
    verify_kappa_image,
    verify_nazarov_identity,
    verify_sergeev_idempotent,
    verify_sigma_module,
    verify_specht_centralizer,
    verify_spin_relations,
    verify_symmetrizer_proportionality,
    verify_tau_span,
    verify_young_idempotent,
)

T21 = ShiftedTableau(((1, 2), (3,)))


def test_spin_relations():
    assert verify_spin_relations(4).status == "pass"


def test_jm_commutation():
    assert verify_jm_commutation(4).status == "pass"


def test_nazarov_identity_reports_the_squared_relation():
    rep = verify_nazarov_identity(4)
    assert rep.status == "pass"
    assert any("x_m^2 = 2 pi_m^2" in w for w in rep.witnesses)


def test_tau_span_dimension_is_factorial():
    rep = verify_tau_span(4)
    assert rep.status == "pass"
    assert "dim = 24" in rep.witnesses


def test_symmetrizer_ratio_is_recorded():
    rep = verify_symmetrizer_proportionality((2,))
    assert rep.status == "pass"
    # hand expansion: (2 - s)(1 + s) = 1 + s, so the ratio is 1
    assert rep.witnesses == ["t=1,2: ratio = 1"]
    assert verify_symmetrizer_proportionality((2, 1)).status == "pass"


def test_kappa_image():
    rep = verify_kappa_image(T21, 2)
    assert rep.status == "pass"
    assert "dim kappa_t(M) = 8" in rep.witnesses


def test_specht_centralizer_dims():
    rep = verify_specht_centralizer(StrictPartition((2, 1)), 2)
    assert rep.status == "pass"
    assert "dim = 8" in rep.witnesses
    assert "centralizer dim = 4 (even 2, odd 2)" in rep.witnesses
    assert "standard fillings alone span dim 8 of 8" in rep.notes


def test_young_idempotent_two_cell_constant():
    rep = verify_young_idempotent(ShiftedTableau(((1, 2),)), 1)
    assert rep.status == "pass"
    # hand oracle: e_t = 2(1 + s), e_t^2 = 4 e_t
    assert "e_t^2 = 4 e_t" in rep.witnesses
    assert "dim e_t H e_t = 2" in rep.witnesses
    assert "row" in rep.notes


def test_sergeev_idempotent_eigenvalues():
    rep = verify_sergeev_idempotent(3)
    assert rep.status == "pass"
    assert any("pi_2^2 e_k = 1 e_k" in w for w in rep.witnesses)
    assert any("pi_3^2 e_k = 3 e_k" in w for w in rep.witnesses)
    assert "dim A_k e_k = 4" in rep.witnesses
    # both candidate formulas are reported; the normalization one matches
    assert "normalization" in rep.notes


def test_sigma_module_sign():
    rep = verify_sigma_module(T21, 2)
    assert rep.status == "pass"
    assert "centralizer dim = 2 = 2^1" in rep.witnesses
    # the row-swap identity holds with + sqrt2, uniformly
    assert "+sqrt2" in rep.notes


def test_jm_spectrum_final_factor():
    rep = verify_jm_spectrum((2, 1))
    assert rep.status == "pass"
    # entry 3 at cell (2,2): 2*2 - 2*1/2 = 3
    assert any("final factor eigenvalue = 3" in w for w in rep.witnesses)


def test_howe_and_branching_small():
    assert verify_howe(1, 2).status == "pass"
    assert verify_howe(2, 2).status == "pass"
    assert verify_branching(2, 2).status == "pass"
    assert verify_branching(2, 3).status == "pass"


def test_decomposition_totals():
    rows, rep = decomposition_table(1, 2)
    assert rep.status == "pass"
    assert sum(r["dim_qspan"] for r in rows) == 4
    rows2, rep2 = decomposition_table(2, 2)
    assert rep2.status == "pass"
    # only strict shapes appear; (2) alone carries the whole 4^2
    assert [r["lambda"] for r in rows2] == ["2"]
    assert sum(r["dim_qspan"] for r in rows2) == 16


def test_decomposition_csv_header():
    rows, _ = decomposition_table(1, 2)
    text = decomposition_csv(rows)
    assert text.splitlines()[0] == "lambda,dim_M,dim_R,g,delta,dim_qspan"


def test_delta_bookkeeping():
    # delta(lambda) = length mod 2; an odd number of rows leaves one
    # unpaired Clifford direction
    rows, _ = decomposition_table(2, 3)
    by_shape = {r["lambda"]: r for r in rows}
    assert by_shape["3"]["delta"] == 1
    assert by_shape["2,1"]["delta"] == 0


def test_suite_structure_and_determinism():
    reports = suite(2)
    ids = [r.check_id for r in reports]
    assert ids[0] == "spin_relations"
    assert "decomposition" in ids
    assert all(r.status == "pass" for r in reports)
    assert reports_json(reports) == reports_json(suite(2))


def test_suite_gating_marks_skipped():
    jobs = suite_jobs(6)
    skipped = [rep.check_id for fn, rep in jobs if fn is None]
    assert "tau_span" in skipped
    assert "howe_supercommutation" in skipped
    run = [fn.__name__ for fn, _ in jobs if fn is not None]
    assert run == ["verify_spin_relations", "verify_jm_commutation",
                   "verify_nazarov_identity"]
    # forcing re-enables every check
    forced = suite_jobs(6, allow_large=True)
    assert all(fn is not None for fn, _ in forced)


def test_lambda_jobs_cover_the_per_shape_checks():
    jobs = lambda_jobs(StrictPartition((2, 1)))
    names = [fn.__name__ for fn, _ in jobs if fn is not None]
    assert names == ["verify_kappa_image", "verify_specht_centralizer",
                     "verify_jm_spectrum", "verify_sigma_module",
                     "verify_young_idempotent"]


def test_run_jobs_workers_match_sequential():
    jobs = suite_jobs(2)
    seq = run_jobs(jobs, workers=1)
    par = run_jobs(jobs, workers=3)
    assert reports_json(seq) == reports_json(par)


def test_run_jobs_timings_fill_elapsed():
    jobs = [(verify_spin_relations, (2,))]
    rep = run_jobs(jobs, timings=True)[0]
    assert isinstance(rep.elapsed_ms, int)
    rep2 = run_jobs(jobs)[0]
    assert rep2.elapsed_ms is None


def test_reports_json_shape():
    fail = VerificationReport("demo", {"k": 1}, "fail", ["bad instance"], "")
    doc = json.loads(reports_json([fail]))
    assert doc["all_pass"] is False
    assert doc["checks"][0]["check_id"] == "demo"
    assert doc["checks"][0]["witnesses"] == ["bad instance"]
    assert not fail.passed
    ok = VerificationReport("demo", {}, "pass")
    assert ok.passed
    skipped = VerificationReport("demo", {}, "skipped", [], "gated")
    assert skipped.passed
