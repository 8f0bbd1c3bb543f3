import pytest

from logcap.instance import coboundary_shift
from logcap.verifier import CHECK_IDS, run_all, run_check


def test_e1_all_checks_pass(e1):
    rep = run_all(e1)
    assert rep.ok
    assert [v.check_id for v in rep.verdicts] == list(CHECK_IDS)
    assert all(v.status == "pass" for v in rep.verdicts)


def test_e1_key_quantities(e1):
    rep = run_all(e1)
    by_id = {v.check_id: v for v in rep.verdicts}
    assert rep.delta == {}  # delta = 0
    assert by_id["V6"].witness["trace_image_order"] == 1
    assert by_id["V9"].witness["index"] == 2
    assert by_id["V1"].witness["exhaustive"] is True
    assert by_id["V1"].witness["elements_checked"] == 32
    assert rep.certificate_hash is not None


def test_inst33_all_checks_pass(inst33):
    rep = run_all(inst33)
    assert rep.ok
    by_id = {v.check_id: v for v in rep.verdicts}
    assert by_id["V8"].witness["boundary_order"] == 3
    assert by_id["V9"].witness["index"] == 9


def test_trivial_torsion_everything_vacuous(trivial_atilde):
    rep = run_all(trivial_atilde)
    assert rep.ok
    by_id = {v.check_id: v for v in rep.verdicts}
    assert by_id["V6"].witness["trace_image_order"] == 1
    assert by_id["V5"].witness["omega_image_order"] == 1


def test_h1_failure_gates_all_checks(h1_violating):
    rep = run_all(h1_violating)
    assert not rep.ok
    for v in rep.verdicts:
        assert v.status == "hypothesis-failed"
        assert "H1" in v.witness["failed_validation"]


def test_single_check_gating(h1_violating):
    v = run_check(h1_violating, "V1")
    assert v.status == "hypothesis-failed"


def test_single_check_runs(e1):
    v = run_check(e1, "V9")
    assert v.status == "pass" and v.witness["index"] == 2


def test_unknown_check_id_rejected(e1):
    with pytest.raises(ValueError):
        run_check(e1, "V11")


def test_forced_run_on_corrupted_cocycle_emits_witness(corrupted):
    # gated by default
    gated = run_all(corrupted)
    assert all(v.status == "hypothesis-failed" for v in gated.verdicts)
    # forced: the broken factor set breaks the transfer/trace diagram
    rep = run_all(corrupted, force=True)
    by_id = {v.check_id: v for v in rep.verdicts}
    assert by_id["V1"].status == "fail"
    w = by_id["V1"].witness
    assert set(w) == {"element", "transfer", "trace_of_log"}
    assert w["transfer"] != w["trace_of_log"]


def test_verdicts_invariant_under_coboundary_shift(inst33, rng):
    from logcap.forge import random_admissible_shift

    base = run_all(inst33)
    base_statuses = [(v.check_id, v.status) for v in base.verdicts]
    for _ in range(3):
        shifted = coboundary_shift(inst33, random_admissible_shift(inst33, rng))
        rep = run_all(shifted)
        assert [(v.check_id, v.status) for v in rep.verdicts] == base_statuses


def test_oracle_check_skipped_above_bound(e1):
    v = run_check(e1, "V10", oracle_bound=16)
    assert v.status == "skipped"
    assert "exceeds bound" in v.witness["reason"]


def test_v1_generator_mode_agrees_with_exhaustive(e1, inst33):
    for inst in (e1, inst33):
        gen_based = run_check(inst, "V1", oracle_bound=1)
        exhaustive = run_check(inst, "V1", oracle_bound=2**12)
        assert gen_based.witness["exhaustive"] is False
        assert exhaustive.witness["exhaustive"] is True
        assert gen_based.status == exhaustive.status == "pass"
        assert gen_based.witness["elements_checked"] < exhaustive.witness["elements_checked"]


def test_report_serialization_roundtrip(e1):
    import json

    rep = run_all(e1)
    payload = rep.to_dict()
    text = json.dumps(payload, sort_keys=True)
    again = json.loads(text)
    assert again["checks"][0]["check"] == "V1"
    assert again["validation"]["ok"] is True


def test_markdown_report_contains_table(e1):
    from logcap.verifier import report_markdown

    rep = run_all(e1)
    md = report_markdown("e1", rep)
    assert "| V1 | pass |" in md
    assert "certificate:" in md
