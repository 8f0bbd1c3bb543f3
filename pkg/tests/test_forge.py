import itertools
import json
import random

import pytest

from logcap.extension import UElement, transfer, u_order
from logcap.forge import (
    CeilingExceededError,
    ComponentSpec,
    OracleBoundError,
    SearchParams,
    build_corpus,
    enumerate_instances,
    estimate_space,
    oracle_group,
    random_admissible_shift,
    random_instance,
)
from logcap.instance import (
    RejectedShiftError,
    build_instance,
    coboundary_shift,
    instance_to_dict,
    validate,
)


def test_enumerate_unique_instance_for_trivial_torsion():
    params = SearchParams(2, 3, ((2,),), ((),))
    insts = list(enumerate_instances(params))
    assert len(insts) == 1
    assert insts[0].cocycle.entries == ()


def test_enumerate_finds_the_canonical_small_instance(e1):
    params = SearchParams(2, 3, ((2,),), ((2,),))
    insts = list(enumerate_instances(params))
    assert len(insts) == 1
    assert insts[0] == e1


def test_enumerate_streams_are_deterministic():
    params = SearchParams(2, 4, ((2,), (4,)), ((), (2,), (4,)))
    a = [instance_to_dict(i) for i in enumerate_instances(params)]
    b = [instance_to_dict(i) for i in enumerate_instances(params)]
    assert a == b and len(a) > 0


def test_enumerate_emits_only_valid_instances():
    params = SearchParams(2, 4, ((4,),), ((2, 2),))
    insts = list(enumerate_instances(params))
    assert len(insts) > 0
    for inst in insts:
        assert validate(inst).ok


def test_enumerate_skips_precision_starved_shapes():
    params = SearchParams(2, 4, ((2,),), ((8,),))
    assert list(enumerate_instances(params)) == []


def test_ceiling_refusal_carries_estimate():
    params = SearchParams(3, 3, ((3, 3),), ((3, 3),), ceiling=1000)
    with pytest.raises(CeilingExceededError) as exc:
        list(enumerate_instances(params))
    assert exc.value.estimate > 1000


def test_emitted_instances_not_coboundary_related():
    """Exhaust every admissible transversal move on a shape with several
    classes and check the emitted representatives stay distinct."""
    params = SearchParams(2, 4, ((4,),), ((2,),))
    insts = list(enumerate_instances(params))
    assert insts
    tables = {inst.cocycle.entries for inst in insts}
    assert len(tables) == len(insts)
    for inst in insts:
        t = inst.torsion_rank
        group = inst.group
        value_space = list(itertools.product(*(range(o) for o in inst.module.atilde_orders)))
        for values in itertools.product(value_space, repeat=len(group.nonidentity())):
            c = dict(zip(group.nonidentity(), values))
            try:
                shifted = coboundary_shift(inst, c)
            except RejectedShiftError:
                continue
            if shifted.cocycle.entries != inst.cocycle.entries:
                assert shifted.cocycle.entries not in tables


def test_random_instance_reproducible_and_valid():
    params = SearchParams(2, 4, ((2, 2),), ((4,),), seed=5)
    a = random_instance(params)
    b = random_instance(params)
    assert a is not None and a == b
    assert validate(a).ok


def test_random_instance_none_when_nothing_exists():
    # G = Z/2 with torsion (2, 2) admits no instance satisfying H1
    params = SearchParams(2, 4, ((2,),), ((2, 2),), seed=1, attempt_budget=60)
    assert random_instance(params) is None


def test_random_instance_trivial_torsion_always_succeeds():
    # the zero factor set is always valid when the torsion part is trivial
    for seed in range(8):
        params = SearchParams(2, 3, ((2,), (4,)), ((),), seed=seed)
        inst = random_instance(params)
        assert inst is not None and validate(inst).ok


def test_random_instances_validate_in_bulk():
    ok = 0
    for seed in range(20):
        params = SearchParams(3, 3, ((3,),), ((3,),), seed=seed)
        inst = random_instance(params)
        if inst is not None:
            assert validate(inst).ok
            ok += 1
    assert ok > 10


def test_random_admissible_shift_never_rejected(inst33, e1, rng):
    for inst in (inst33, e1):
        for _ in range(10):
            c = random_admissible_shift(inst, rng)
            coboundary_shift(inst, c)  # must not raise


# -- the oracle ------------------------------------------------------------------


def test_oracle_e1_facts(e1):
    facts = oracle_group(e1)
    assert facts.u_order == 32
    assert facts.u_tilde_order == 4
    assert facts.derived == {(0, 0), (1, 0)}
    assert facts.derived_degree_zero == {(0, 0)}
    assert facts.degree_zero_index == 2
    assert facts.gamma_commutators == {(0, 0), (1, 0)}


def test_oracle_transfer_matches_formula(e1):
    facts = oracle_group(e1)
    for (a, g), want in facts.transfer.items():
        assert transfer(e1, UElement(e1, a, g)) == want


def test_oracle_trivial_group():
    inst = build_instance(2, 2, [], [], [], {})
    facts = oracle_group(inst)
    assert facts.u_order == 4
    assert facts.derived == {(0,)}
    assert facts.degree_zero_index == 1


def test_oracle_bound_refusal(inst33):
    assert u_order(inst33) == 729
    with pytest.raises(OracleBoundError):
        oracle_group(inst33, bound=512)


def test_oracle_derived_matches_formula_on_samples():
    from logcap.extension import derived_subgroup

    rnd = random.Random(17)
    for seed in range(6):
        params = SearchParams(2, 4, ((2, 2),), ((2, 2),), seed=seed)
        inst = random_instance(params)
        if inst is None:
            continue
        facts = oracle_group(inst)
        formula = {inst.a_reduce(v) for v in derived_subgroup(inst).elements()}
        assert formula == set(facts.derived)


# -- corpus building -------------------------------------------------------------


def test_build_corpus_deterministic(tmp_path):
    params = SearchParams(2, 3, ((2,),), ((), (2,)), seed=3)
    comps = [ComponentSpec((2,), ()), ComponentSpec((2,), (2,))]
    m1 = build_corpus(params, comps, tmp_path / "a")
    m2 = build_corpus(params, comps, tmp_path / "b")
    assert m1 == m2
    text1 = (tmp_path / "a" / "manifest.json").read_text()
    text2 = (tmp_path / "b" / "manifest.json").read_text()
    assert text1 == text2
    names = [f["name"] for c in m1["components"] for f in c["files"]]
    for n in names:
        assert (tmp_path / "a" / n).read_text() == (tmp_path / "b" / n).read_text()


def test_build_corpus_records_exclusions(tmp_path):
    params = SearchParams(2, 3, ((2,),), ((8,),))
    manifest = build_corpus(params, [ComponentSpec((2,), (8,))], tmp_path)
    comp = manifest["components"][0]
    assert comp["mode"] == "excluded"
    assert "precision" in comp["skip_reason"]
    assert comp["count"] == 0


def test_build_corpus_sampled_mode(tmp_path):
    params = SearchParams(2, 4, ((2, 2),), ((4,),), seed=9, samples=2)
    manifest = build_corpus(
        params, [ComponentSpec((2, 2), (4,), mode="sample")], tmp_path
    )
    comp = manifest["components"][0]
    assert comp["mode"] == "sample"
    assert comp["exhausted"] is False
    assert 1 <= comp["count"] <= 2


def test_estimate_space_zero_for_precision_starved():
    params = SearchParams(2, 4, (), ())
    assert estimate_space(params, (2,), (8,)) == 0
