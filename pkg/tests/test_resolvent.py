import random

import pytest

from logcap.groupring import GroupRingElt, OmegaRingElt, trace_element
from logcap.instance import build_instance
from logcap.lattice import Submodule, quotient_order
from logcap.resolvent import (
    CertificateError,
    RelationCertificate,
    ResolventElt,
    boundary_module,
    certificate_determinants,
    context,
    delta,
    ig_star_b,
    lambda_generation_holds,
    omega_act,
    omega_ring_act,
    relation_matrices,
    star_act,
    trace,
)


def ring_elt(inst, coeffs):
    return GroupRingElt(inst.group, inst.ring, coeffs)


def random_ring_elt(inst, rnd):
    return ring_elt(
        inst, {g: rnd.randrange(inst.ring.modulus) for g in inst.group.elements()}
    )


def random_b_elt(inst, rnd):
    a = tuple(rnd.randrange(o) for o in inst.coordinate_orders())
    lam = tuple(rnd.randrange(inst.ring.modulus) for _ in range(inst.group.size() - 1))
    return ResolventElt(inst, a, lam)


# -- the star action -----------------------------------------------------------


def test_star_on_module_part_is_module_action(e1):
    alpha_gamma = ResolventElt.from_a(e1, (1, 1))
    out = star_act(e1, ring_elt(e1, {(1,): 1}), alpha_gamma)
    assert out.a == e1.act((1,), (1, 1)) and not any(out.lam)


def test_star_e1_tau_on_tau_minus_one(e1):
    b = ResolventElt.basis_tau(e1, (1,))
    out = star_act(e1, ring_elt(e1, {(1,): 1}), b)
    # tau * (tau - 1) = a_{tau,tau} + (1 - 1) - (tau - 1) = -(tau - 1)
    assert out.a == (0, 0)
    assert out.lam == (7,)


def test_star_identity_fixes_everything(e1, rng):
    one = GroupRingElt.one(e1.group, e1.ring)
    for _ in range(10):
        b = random_b_elt(e1, rng)
        assert star_act(e1, one, b) == b


@pytest.mark.parametrize("fixture", ["e1", "inst33"])
def test_star_action_is_associative(fixture, rng, request):
    inst = request.getfixturevalue(fixture)
    for _ in range(12):
        x = random_ring_elt(inst, rng)
        y = random_ring_elt(inst, rng)
        b = random_b_elt(inst, rng)
        assert star_act(inst, x * y, b) == star_act(inst, x, star_act(inst, y, b))


# -- the omega operator -----------------------------------------------------------


def test_omega_kills_module_part(e1, rng):
    for _ in range(5):
        a = tuple(rng.randrange(o) for o in e1.coordinate_orders())
        out = omega_act(e1, ResolventElt.from_a(e1, a))
        assert out.is_zero()


def test_omega_e1_on_tau_minus_one(e1):
    out = omega_act(e1, ResolventElt.basis_tau(e1, (1,)))
    assert out.a == (1, 0) and not any(out.lam)


@pytest.mark.parametrize("fixture", ["e1", "inst33", "trivial_atilde"])
def test_omega_squared_is_zero(fixture, rng, request):
    inst = request.getfixturevalue(fixture)
    for _ in range(10):
        b = random_b_elt(inst, rng)
        assert omega_act(inst, omega_act(inst, b)).is_zero()


def test_omega_commutes_with_star(e1, inst33, rng):
    for inst in (e1, inst33):
        for _ in range(10):
            x = random_ring_elt(inst, rng)
            b = random_b_elt(inst, rng)
            assert omega_act(inst, star_act(inst, x, b)) == star_act(
                inst, x, omega_act(inst, b)
            )


def test_omega_ring_action(e1, rng):
    w = OmegaRingElt.omega(e1.group, e1.ring)
    for _ in range(5):
        b = random_b_elt(e1, rng)
        assert omega_ring_act(e1, w, b) == omega_act(e1, b)
        assert omega_ring_act(e1, w * w, b).is_zero()


# -- the trace ---------------------------------------------------------------------


def test_trace_e1_examples(e1):
    assert trace(e1, ResolventElt.basis_tau(e1, (1,))) == (0, 0)
    assert trace(e1, ResolventElt.from_a(e1, (0, 1))) == (1, 2)


def test_trace_is_norm_on_torsion_with_trivial_action(inst33):
    # the (3,3) fixture acts trivially on its torsion: Tr(a) = |G| a = 0
    alpha = ResolventElt.from_a(inst33, inst33.atilde_embed((1,)))
    assert trace(inst33, alpha) == inst33.a_scale(inst33.group.size(), inst33.atilde_embed((1,)))


# -- distinguished submodules --------------------------------------------------------


def test_ig_star_b_trivial_group():
    inst = build_instance(2, 2, [], [], [], {})
    assert ig_star_b(inst) == Submodule.from_generators(inst.ring, 1, [])


def test_ig_star_b_e1_explicit(e1):
    # I_G * B = torsion + 2 I_G: (tau-1)*gamma = -alpha, (tau-1)*(tau-1) = -2(tau-1)
    ctx = context(e1)
    expected = ctx.span_b([[1, 0, 0], [0, 0, 2]])
    assert ig_star_b(e1) == expected


@pytest.mark.parametrize("fixture", ["e1", "inst33", "trivial_atilde"])
def test_index_of_ig_b_in_degree_zero_is_group_order(fixture, request):
    inst = request.getfixturevalue(fixture)
    ctx = context(inst)
    assert quotient_order(ctx.b_tilde_in_b(), ig_star_b(inst)) == inst.group.size()


def test_ig_b_decomposes_through_degree_zero_part(e1, inst33):
    for inst in (e1, inst33):
        ctx = context(inst)
        ig_gamma = ctx.ig_gamma_a()
        gamma_part = ctx.span_b([row + (0,) * (inst.group.size() - 1) for row in ig_gamma.basis])
        assert ig_star_b(inst) == ig_star_b(inst, degree_zero=True) + gamma_part


@pytest.mark.parametrize("fixture", ["e1", "inst33"])
def test_index_modulo_ig_bt_plus_omega_bt_is_group_order(fixture, request):
    inst = request.getfixturevalue(fixture)
    ctx = context(inst)
    omega_rows = [omega_act(inst, b).to_vec() for b in ctx.bt_basis_elements()]
    ig_bt_gens = []
    for tau in inst.group.generators():
        x = ring_elt(inst, {tau: 1, inst.group.identity(): -1})
        for b in ctx.bt_basis_elements():
            ig_bt_gens.append(star_act(inst, x, b).to_vec())
    denom = ctx.span_b(list(omega_rows) + ig_bt_gens)
    assert quotient_order(ctx.b_tilde_in_b(), denom) == inst.group.size()


def test_lambda_generation_holds_on_fixtures(e1, inst33, trivial_atilde):
    for inst in (e1, inst33, trivial_atilde):
        assert lambda_generation_holds(inst)


# -- relation certificates --------------------------------------------------------------


def test_e1_certificate_matches_hand_computation(e1):
    cert = relation_matrices(e1)
    tau, one = (1,), (0,)
    assert cert.m_matrix[0][0] == ring_elt(e1, {one: 1, tau: 1})
    assert cert.n_matrix[0][0].is_zero()
    assert cert.lam_matrix[0][0] == ring_elt(e1, {one: 1, tau: 1})
    assert cert.mu_vector[0].is_zero()


def test_certificate_determinism(e1, inst33):
    for inst in (e1, inst33):
        c1 = relation_matrices(inst)
        c2 = relation_matrices(inst)
        assert c1 == c2
        assert c1.content_hash() == c2.content_hash()


def test_certificate_augmentation_pattern(inst33):
    cert = relation_matrices(inst33)
    s = cert.size()
    for i in range(s):
        for j in range(s):
            want = inst33.group.orders[i] if i == j else 0
            assert cert.m_matrix[i][j].augmentation() == want % inst33.ring.modulus
            assert cert.lam_matrix[i][j].augmentation() == want % inst33.ring.modulus


def test_certificate_residuals_verify_by_substitution(inst33):
    cert = relation_matrices(inst33)
    gens = inst33.group.generators()
    b = [ResolventElt.basis_tau(inst33, t) for t in gens]
    zero = GroupRingElt.zero(inst33.group, inst33.ring)
    for i in range(cert.size()):
        o_i = inst33.group.orders[i]
        resid = b[i].scale(o_i)
        for j in range(cert.size()):
            diag = GroupRingElt.scalar(inst33.group, inst33.ring, o_i) if i == j else zero
            mu_ij = diag - cert.m_matrix[i][j]
            resid = resid - star_act(inst33, mu_ij, b[j])
            resid = resid - omega_act(
                inst33, star_act(inst33, cert.n_matrix[i][j], b[j])
            )
        assert resid.is_zero()
        # gamma form: o_i b_i = sum lam_ij * b_j + mu_i * gamma
        resid = b[i].scale(o_i)
        for j in range(cert.size()):
            diag = GroupRingElt.scalar(inst33.group, inst33.ring, o_i) if i == j else zero
            lam_ij = diag - cert.lam_matrix[i][j]
            resid = resid - star_act(inst33, lam_ij, b[j])
        gamma_elt = ResolventElt.from_a(inst33, inst33.gamma())
        resid = resid - star_act(inst33, cert.mu_vector[i], gamma_elt)
        assert resid.is_zero()


def test_certificate_dets_equal_trace(e1, inst33):
    for inst in (e1, inst33):
        cert = relation_matrices(inst)
        tr = trace_element(inst.group, inst.ring)
        dm, dl = certificate_determinants(inst, cert)
        assert dm == tr and dl == tr


def test_delta_e1_is_zero(e1):
    cert = relation_matrices(e1)
    assert delta(e1, cert).is_zero()


def test_delta_rejects_scaled_certificate(e1):
    # det M = 5 * Tr arises from the relation 2 b = 3(tau-1) * b, a valid
    # relation whose determinant normalization was skipped
    tau, one = (1,), (0,)
    m = ring_elt(e1, {one: 5, tau: -3})
    cert = RelationCertificate(
        m_matrix=((m,),),
        n_matrix=((GroupRingElt.zero(e1.group, e1.ring),),),
        lam_matrix=((m,),),
        mu_vector=(GroupRingElt.zero(e1.group, e1.ring),),
    )
    with pytest.raises(CertificateError, match="kappa"):
        delta(e1, cert)


def test_delta_rejects_non_trace_multiple(e1):
    tau, one = (1,), (0,)
    m = ring_elt(e1, {one: 1, tau: 2})
    cert = RelationCertificate(
        m_matrix=((m,),),
        n_matrix=((GroupRingElt.zero(e1.group, e1.ring),),),
        lam_matrix=((m,),),
        mu_vector=(GroupRingElt.zero(e1.group, e1.ring),),
    )
    with pytest.raises(CertificateError, match="annihilate"):
        delta(e1, cert)


def test_trace_equals_omega_delta_on_generators(inst33):
    cert = relation_matrices(inst33)
    d = delta(inst33, cert)
    ctx = context(inst33)
    for b in ctx.bt_basis_elements():
        got = omega_act(inst33, star_act(inst33, d, b))
        assert trace(inst33, b) == got.a and not any(got.lam)


def test_trivial_group_certificate():
    inst = build_instance(2, 2, [], [], [], {})
    cert = relation_matrices(inst)
    assert cert.size() == 0
    assert delta(inst, cert).is_zero()


# -- the boundary module -------------------------------------------------------------


def test_boundary_module_cyclic_group_is_zero(e1):
    assert boundary_module(e1) == e1.zero_a()


def test_boundary_module_symmetric_cocycle_is_zero():
    inst = build_instance(
        2, 4, [2, 2], [2],
        [[[1, 0], [1, 1]], [[1, 0], [0, 1]]],
        {},
    )
    assert boundary_module(inst) == inst.zero_a()


def test_boundary_module_inst33_matches_commutators(inst33):
    from logcap.extension import UElement

    bm = boundary_module(inst33)
    assert bm.order() // inst33.zero_a().order() == 3
    # the generators are exactly the transversal commutators [u_sigma, u_tau]
    sigma, tau = inst33.group.generators()
    u_s = UElement(inst33, inst33.a_zero(), sigma)
    u_t = UElement(inst33, inst33.a_zero(), tau)
    comm = u_s * u_t * u_s.inverse() * u_t.inverse()
    assert comm.tau == inst33.group.identity()
    assert comm.a in bm
    assert bm == inst33.span_a([comm.a])
