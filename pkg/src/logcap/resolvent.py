"""The resolvent module B = A + I_G with its twisted actions.

Coordinates of B are fixed once per instance: the torsion generators of A,
then gamma, then the augmentation-ideal basis (tau - 1) for tau != 1 in the
canonical element order.  The G-action is the linearized twist

    sigma * a = a^sigma,     sigma * (tau - 1) = f(sigma, tau) + sigma(tau - 1),

and the Gamma-operator w = gamma - 1 kills A and sends (tau - 1) to
(1 - tau) * gamma.  Everything here is a module computation over Z/l^n; the
relation solver produces certificates (M, N) with e_i b_i = sum mu_ij * b_j
+ w * sum nu_ij * b_j, normalized so that det M is exactly the trace.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple, TYPE_CHECKING

from .groupring import (
    GElt,
    GroupRingElt,
    OmegaRingElt,
    det_ring,
    trace_element,
)
from .lattice import Submodule, solve

if TYPE_CHECKING:
    from .instance import Instance

Vec = Tuple[int, ...]


class InternalInvariantError(RuntimeError):
    """An identity that must hold on validated data failed; indicates a bug
    or an unvalidated instance."""


class InfeasibleRelationError(RuntimeError):
    """The relation system has no solution (generation or H1 failure)."""


class CertificateError(RuntimeError):
    """A relation certificate violates a required determinant identity."""


class PrecisionModelError(CertificateError):
    """The degree of det M disagrees with |G|: the coefficient precision
    cannot represent the instance (or the certificate is foreign)."""


@dataclass(frozen=True)
class ResolventElt:
    """An element a + sum lam_tau (tau - 1) of B, coordinates canonical."""

    instance: "Instance"
    a: Vec
    lam: Vec

    def __post_init__(self):
        inst = self.instance
        if len(self.a) != inst.dim_a or len(self.lam) != inst.group.size() - 1:
            raise ValueError("coordinates do not fit the instance")
        N = inst.ring.modulus
        object.__setattr__(self, "a", inst.a_reduce(self.a))
        object.__setattr__(self, "lam", tuple(x % N for x in self.lam))

    def deg(self) -> int:
        return self.instance.deg(self.a)

    def to_vec(self) -> Vec:
        return self.a + self.lam

    @classmethod
    def from_vec(cls, inst: "Instance", vec: Sequence[int]) -> "ResolventElt":
        d = inst.dim_a
        return cls(inst, tuple(vec[:d]), tuple(vec[d:]))

    @classmethod
    def from_a(cls, inst: "Instance", a: Sequence[int]) -> "ResolventElt":
        return cls(inst, tuple(a), (0,) * (inst.group.size() - 1))

    @classmethod
    def basis_tau(cls, inst: "Instance", tau: GElt) -> "ResolventElt":
        """The element tau - 1 for tau != 1."""
        lam = [0] * (inst.group.size() - 1)
        lam[inst.group.nonidentity().index(tau)] = 1
        return cls(inst, inst.a_zero(), tuple(lam))

    def __add__(self, other: "ResolventElt") -> "ResolventElt":
        inst = self.instance
        return ResolventElt(
            inst,
            inst.a_add(self.a, other.a),
            tuple(x + y for x, y in zip(self.lam, other.lam)),
        )

    def __sub__(self, other: "ResolventElt") -> "ResolventElt":
        inst = self.instance
        return ResolventElt(
            inst,
            inst.a_sub(self.a, other.a),
            tuple(x - y for x, y in zip(self.lam, other.lam)),
        )

    def __neg__(self) -> "ResolventElt":
        return ResolventElt(
            self.instance, self.instance.a_neg(self.a), tuple(-x for x in self.lam)
        )

    def scale(self, c: int) -> "ResolventElt":
        return ResolventElt(
            self.instance,
            self.instance.a_scale(c, self.a),
            tuple(c * x for x in self.lam),
        )

    def is_zero(self) -> bool:
        return not any(self.a) and not any(self.lam)


# -- per-instance context -----------------------------------------------------


class _Context:
    """Cached coordinate machinery of B for one instance."""

    def __init__(self, inst: "Instance"):
        self.inst = inst
        self.ring = inst.ring
        self.N = self.ring.modulus
        self.group = inst.group
        self.t = inst.torsion_rank
        self.nonid = inst.group.nonidentity()
        self.nonid_index = {g: i for i, g in enumerate(self.nonid)}
        self.dim_a = inst.dim_a
        self.dim_b = inst.dim_a + len(self.nonid)
        # degree-zero coordinates: torsion block then lambda block (gamma dropped)
        self.dim_bt = self.t + len(self.nonid)
        self._star: Dict[GElt, tuple] = {}

    # coordinate helpers ----------------------------------------------

    def b_vec(self, elt: ResolventElt) -> Vec:
        return elt.to_vec()

    def bt_vec(self, elt: ResolventElt) -> Vec:
        if elt.a[-1] % self.N:
            raise InternalInvariantError("element has nonzero degree")
        return elt.a[: self.t] + elt.lam

    def elt_from_bt(self, vec: Sequence[int]) -> ResolventElt:
        a = tuple(vec[: self.t]) + (0,)
        return ResolventElt(self.inst, a, tuple(vec[self.t :]))

    def lam_vec(self, coeffs: Dict[GElt, int]) -> Vec:
        out = [0] * len(self.nonid)
        for g, c in coeffs.items():
            if g in self.nonid_index:
                out[self.nonid_index[g]] += c
        return tuple(out)

    # actions ------------------------------------------------------------

    def star_matrix(self, sigma: GElt) -> tuple:
        if sigma in self._star:
            return self._star[sigma]
        inst = self.inst
        rows = []
        for i in range(self.dim_a):
            e_i = tuple(1 if j == i else 0 for j in range(self.dim_a))
            rows.append(inst.act(sigma, e_i) + (0,) * len(self.nonid))
        one = self.group.identity()
        for tau in self.nonid:
            a_part = inst.cocycle_in_a(sigma, tau)
            lam = {}
            st = self.group.mul(sigma, tau)
            if st != one:
                lam[st] = lam.get(st, 0) + 1
            if sigma != one:
                lam[sigma] = lam.get(sigma, 0) - 1
            rows.append(a_part + self.lam_vec(lam))
        mat = tuple(tuple(x % self.N for x in r) for r in rows)
        self._star[sigma] = mat
        return mat

    def apply_matrix(self, vec: Sequence[int], mat: Sequence[Sequence[int]], width: int) -> list:
        out = [0] * width
        for i, c in enumerate(vec):
            if c:
                row = mat[i]
                for j in range(width):
                    out[j] = (out[j] + c * row[j]) % self.N
        return out

    def star_elt(self, sigma: GElt, b: ResolventElt) -> ResolventElt:
        vec = self.apply_matrix(b.to_vec(), self.star_matrix(sigma), self.dim_b)
        return ResolventElt.from_vec(self.inst, vec)

    def omega_matrix(self) -> tuple:
        if "omega" in self.inst._cache:
            return self.inst._cache["omega"]
        rows = [(0,) * self.dim_b for _ in range(self.dim_a)]
        out = list(rows)
        for tau in self.nonid:
            a_tau = self.inst.a_tau(tau)
            if a_tau[-1] % self.N:
                raise InternalInvariantError("(1 - tau) * gamma has nonzero degree")
            out.append(a_tau + (0,) * len(self.nonid))
        mat = tuple(tuple(r) for r in out)
        self.inst._cache["omega"] = mat
        return mat

    # distinguished submodules ------------------------------------------

    def relation_rows_b(self) -> List[list]:
        rows = []
        for i, o in enumerate(self.inst.module.atilde_orders):
            row = [0] * self.dim_b
            row[i] = o
            rows.append(row)
        return rows

    def relation_rows_bt(self) -> List[list]:
        rows = []
        for i, o in enumerate(self.inst.module.atilde_orders):
            row = [0] * self.dim_bt
            row[i] = o
            rows.append(row)
        return rows

    def span_b(self, gens: Sequence[Sequence[int]]) -> Submodule:
        return Submodule.from_generators(
            self.ring, self.dim_b, list(gens) + self.relation_rows_b()
        )

    def span_bt(self, gens: Sequence[Sequence[int]]) -> Submodule:
        return Submodule.from_generators(
            self.ring, self.dim_bt, list(gens) + self.relation_rows_bt()
        )

    def b_basis_elements(self) -> List[ResolventElt]:
        out = []
        for i in range(self.dim_a):
            a = tuple(1 if j == i else 0 for j in range(self.dim_a))
            out.append(ResolventElt.from_a(self.inst, a))
        for tau in self.nonid:
            out.append(ResolventElt.basis_tau(self.inst, tau))
        return out

    def bt_basis_elements(self) -> List[ResolventElt]:
        out = []
        for i in range(self.t):
            a = tuple(1 if j == i else 0 for j in range(self.dim_a))
            out.append(ResolventElt.from_a(self.inst, a))
        for tau in self.nonid:
            out.append(ResolventElt.basis_tau(self.inst, tau))
        return out

    def b_tilde_in_b(self) -> Submodule:
        return self.span_b([e.to_vec() for e in self.bt_basis_elements()])

    def atilde_in_b(self) -> Submodule:
        gens = []
        for i in range(self.t):
            row = [0] * self.dim_b
            row[i] = 1
            gens.append(row)
        return self.span_b(gens)

    def ig_squared_in_b(self) -> Submodule:
        """Products (g - 1)(h - 1) of the plain group ring, embedded in B."""
        one = self.group.identity()
        gens = []
        for g in self.nonid:
            for h in self.nonid:
                lam: Dict[GElt, int] = {}
                gh = self.group.mul(g, h)
                if gh != one:
                    lam[gh] = lam.get(gh, 0) + 1
                lam[g] = lam.get(g, 0) - 1
                lam[h] = lam.get(h, 0) - 1
                gens.append((0,) * self.dim_a + self.lam_vec(lam))
        return self.span_b(gens)

    def ig_gamma_a(self) -> Submodule:
        """I_G * gamma = the span of all (1 - tau) * gamma inside A."""
        return self.inst.span_a([self.inst.a_tau(tau) for tau in self.group.elements()])


def context(inst: "Instance") -> _Context:
    ctx = inst._cache.get("resolvent")
    if ctx is None:
        ctx = _Context(inst)
        inst._cache["resolvent"] = ctx
    return ctx


# -- public operations ---------------------------------------------------------


def star_act(inst: "Instance", x: GroupRingElt, b: ResolventElt) -> ResolventElt:
    """The linearized twisted action of a group-ring element on B."""
    ctx = context(inst)
    acc = ResolventElt.from_vec(inst, (0,) * ctx.dim_b)
    for g, c in x.coeffs.items():
        acc = acc + ctx.star_elt(g, b).scale(c)
    return acc


def omega_act(inst: "Instance", b: ResolventElt) -> ResolventElt:
    """w * b for w = gamma - 1: zero on A, (tau - 1) -> (1 - tau) * gamma."""
    ctx = context(inst)
    vec = ctx.apply_matrix(b.to_vec(), ctx.omega_matrix(), ctx.dim_b)
    return ResolventElt.from_vec(inst, vec)


def omega_ring_act(inst: "Instance", x: OmegaRingElt, b: ResolventElt) -> ResolventElt:
    return star_act(inst, x.r0, b) + omega_act(inst, star_act(inst, x.r1, b))


def trace(inst: "Instance", b: ResolventElt) -> Vec:
    """Tr * b; the augmentation-ideal component must cancel, leaving an
    element of A."""
    out = star_act(inst, trace_element(inst.group, inst.ring), b)
    if any(out.lam):
        raise InternalInvariantError("trace left a nonzero I_G component")
    return out.a


def ig_star_b(inst: "Instance", degree_zero: bool = False) -> Submodule:
    """The submodule I_G * B (or I_G * B-tilde) in B coordinates."""
    ctx = context(inst)
    basis = ctx.bt_basis_elements() if degree_zero else ctx.b_basis_elements()
    gens = []
    for tau in inst.group.generators():
        one_elt = GroupRingElt.of(inst.group, inst.ring, tau) - GroupRingElt.one(
            inst.group, inst.ring
        )
        for b in basis:
            gens.append(star_act(inst, one_elt, b).to_vec())
    return ctx.span_b(gens)


def boundary_module(inst: "Instance") -> Submodule:
    """The span of the antisymmetrized factor-set values on generator pairs."""
    gens = []
    ggens = inst.group.generators()
    for i in range(len(ggens)):
        for j in range(i + 1, len(ggens)):
            gens.append(
                inst.a_sub(
                    inst.cocycle_in_a(ggens[i], ggens[j]),
                    inst.cocycle_in_a(ggens[j], ggens[i]),
                )
            )
    return inst.span_a(gens)


# -- relation certificates ------------------------------------------------------


@dataclass(frozen=True)
class RelationCertificate:
    """Verified relations e_i b_i = sum mu_ij * b_j + w * sum nu_ij * b_j,
    together with the gamma-form e_i b_i = sum lam_ij * b_j + mu_i * gamma.

    M has entries e_i delta_ij - mu_ij and satisfies det M = Tr exactly;
    the same holds for the gamma-form matrix.  Certificates are not unique;
    every downstream identity is asserted for the one actually produced.
    """

    m_matrix: tuple
    n_matrix: tuple
    lam_matrix: tuple
    mu_vector: tuple

    def size(self) -> int:
        return len(self.m_matrix)

    def to_dict(self) -> dict:
        def ser_elt(x: GroupRingElt):
            return {",".join(map(str, g)): c for g, c in sorted(x.coeffs.items())}

        return {
            "M": [[ser_elt(x) for x in row] for row in self.m_matrix],
            "N": [[ser_elt(x) for x in row] for row in self.n_matrix],
            "lambda": [[ser_elt(x) for x in row] for row in self.lam_matrix],
            "mu": [ser_elt(x) for x in self.mu_vector],
        }

    def content_hash(self) -> str:
        payload = json.dumps(self.to_dict(), sort_keys=True, separators=(",", ":"))
        return hashlib.sha256(payload.encode()).hexdigest()


def _ring_vec(ctx: _Context, x: GroupRingElt) -> Vec:
    return tuple(x.coefficient(g) % ctx.N for g in ctx.group.elements())


def _ig_elt(ctx: _Context, tau: GElt, c: int = 1) -> GroupRingElt:
    one = ctx.group.identity()
    return GroupRingElt(ctx.group, ctx.ring, {tau: c, one: -c})


def lambda_generation_holds(inst: "Instance") -> bool:
    """Whether the b_i = tau_i - 1 generate the degree-zero part over the
    omega-extended group ring."""
    ctx = context(inst)
    gens = []
    for tau_i in inst.group.generators():
        b_i = ResolventElt.basis_tau(inst, tau_i)
        for g in inst.group.elements():
            moved = ctx.star_elt(g, b_i)
            gens.append(ctx.bt_vec(moved))
            gens.append(ctx.bt_vec(omega_act(inst, moved)))
    span = ctx.span_bt(gens)
    return span == ctx.span_bt([ctx.bt_vec(e) for e in ctx.bt_basis_elements()])


def _omega_image_rows(ctx: _Context) -> List[Vec]:
    """Generators of w * B-tilde in degree-zero coordinates."""
    inst = ctx.inst
    rows = []
    for tau in ctx.group.elements():
        a_tau = inst.a_tau(tau)
        rows.append(a_tau[: ctx.t] + (0,) * len(ctx.nonid))
    return rows


def _star_bt(ctx: _Context, x: GroupRingElt, b: ResolventElt) -> Vec:
    return ctx.bt_vec(star_act(ctx.inst, x, b))


def _solve_mu_row(
    ctx: _Context,
    i: int,
    b_elts: List[ResolventElt],
    cofactors: Optional[List[GroupRingElt]],
    use_gamma_form: bool,
) -> Optional[List[GroupRingElt]]:
    """Solve for the I_G entries of relation row i.

    Without cofactors, solves modulo (w * B-tilde + torsion); with them,
    appends the group-ring coordinates of the determinant constraint
    sum_j mu_ij * C_ij = e_i * C_ii - Tr so the certificate's matrix has
    determinant exactly the trace.  In the gamma form the complement
    unknown is mu_i * gamma rather than an omega term.
    """
    inst = ctx.inst
    group = ctx.group
    s = group.rank
    o_i = group.orders[i]
    det_cols = group.size() if cofactors is not None else 0

    rows = []
    unknown_count = 0
    for j in range(s):
        for tau in ctx.nonid:
            contrib = list(_star_bt(ctx, _ig_elt(ctx, tau), b_elts[j]))
            if cofactors is not None:
                contrib += list(_ring_vec(ctx, _ig_elt(ctx, tau) * cofactors[j]))
            rows.append(contrib)
            unknown_count += 1
    mu_block = unknown_count

    if use_gamma_form:
        # gamma-form complement: coefficients of mu_i over the I_G basis
        gamma_elt = ResolventElt.from_a(inst, inst.gamma())
        for tau in ctx.nonid:
            moved = star_act(inst, _ig_elt(ctx, tau), gamma_elt)
            rows.append(list(ctx.bt_vec(moved)) + [0] * det_cols)
    else:
        # omega terms are solved afterwards; quotient them out here
        for r in _omega_image_rows(ctx):
            rows.append(list(r) + [0] * det_cols)
    for r in ctx.relation_rows_bt():
        rows.append(list(r) + [0] * det_cols)

    target = list(ctx.bt_vec(b_elts[i].scale(o_i)))
    if cofactors is not None:
        tr = trace_element(group, inst.ring)
        rhs = cofactors[i].scale(o_i) - tr
        target += list(_ring_vec(ctx, rhs))

    sol = solve(rows, target, ctx.ring)
    if sol is None:
        return None
    out = []
    k = 0
    for j in range(s):
        coeffs = GroupRingElt.zero(group, inst.ring)
        for tau in ctx.nonid:
            c = sol[k]
            k += 1
            if c:
                coeffs = coeffs + _ig_elt(ctx, tau, c)
        out.append(coeffs)
    if use_gamma_form:
        mu_i = GroupRingElt.zero(group, inst.ring)
        for tau in ctx.nonid:
            c = sol[mu_block + ctx.nonid_index[tau]]
            if c:
                mu_i = mu_i + _ig_elt(ctx, tau, c)
        out.append(mu_i)
    return out


def _solve_nu_row(
    ctx: _Context, i: int, b_elts: List[ResolventElt], mu_row: List[GroupRingElt]
) -> Optional[List[GroupRingElt]]:
    inst = ctx.inst
    group = ctx.group
    s = group.rank
    o_i = group.orders[i]
    residual = b_elts[i].scale(o_i)
    for j in range(s):
        residual = residual - star_act(inst, mu_row[j], b_elts[j])
    rows = []
    for j in range(s):
        for g in group.elements():
            moved = ctx.star_elt(g, b_elts[j])
            rows.append(list(ctx.bt_vec(omega_act(inst, moved))))
    for r in ctx.relation_rows_bt():
        rows.append(list(r))
    sol = solve(rows, list(ctx.bt_vec(residual)), ctx.ring)
    if sol is None:
        return None
    out = []
    k = 0
    for j in range(s):
        coeffs = {}
        for g in group.elements():
            c = sol[k]
            k += 1
            if c:
                coeffs[g] = c
        out.append(GroupRingElt(group, inst.ring, coeffs))
    return out


def _cofactor_row(ctx: _Context, m_rows: List[List[GroupRingElt]], i: int, s: int):
    """Signed minors along row i of the matrix whose other rows are fixed."""
    if s == 1:
        return [GroupRingElt.one(ctx.group, ctx.ring)]
    cof = []
    other = [m_rows[r] for r in range(s) if r != i]
    for j in range(s):
        minor = [[row[c] for c in range(s) if c != j] for row in other]
        d = det_ring(minor)
        if (i + j) % 2:
            d = -d
        cof.append(d)
    return cof


def _diag_entry(ctx: _Context, i: int, j: int, o_i: int, mu: GroupRingElt) -> GroupRingElt:
    base = GroupRingElt.scalar(ctx.group, ctx.ring, o_i) if i == j else GroupRingElt.zero(
        ctx.group, ctx.ring
    )
    return base - mu


def _solve_form(ctx: _Context, b_elts: List[ResolventElt], use_gamma_form: bool):
    """All relation rows, with the determinant constraint imposed on one row.

    Rows other than the constrained one are solved first (deterministic
    order), the constrained row then absorbs det M = Tr as extra linear
    conditions.  Constraining the last row works on every instance we
    generate; earlier rows are tried as fallbacks.
    """
    group = ctx.group
    s = group.rank
    if s == 0:
        return [], []
    for constrained in range(s - 1, -1, -1):
        mu_rows: List[Optional[List[GroupRingElt]]] = [None] * s
        ok = True
        for i in range(s):
            if i == constrained:
                continue
            mu = _solve_mu_row(ctx, i, b_elts, None, use_gamma_form)
            if mu is None:
                ok = False
                break
            mu_rows[i] = mu
        if not ok:
            continue
        m_rows = []
        for i in range(s):
            if i == constrained:
                m_rows.append([None] * s)
            else:
                m_rows.append(
                    [_diag_entry(ctx, i, j, group.orders[i], mu_rows[i][j]) for j in range(s)]
                )
        cof = _cofactor_row(ctx, m_rows, constrained, s)
        mu = _solve_mu_row(ctx, constrained, b_elts, cof, use_gamma_form)
        if mu is None:
            continue
        mu_rows[constrained] = mu
        return mu_rows, [constrained]
    raise InfeasibleRelationError(
        "no relation certificate with det M = Tr exists for any constrained row"
    )


def relation_matrices(inst: "Instance") -> RelationCertificate:
    """Solve the defining relations of the b_i = tau_i - 1 in both forms and
    return the verified certificate."""
    ctx = context(inst)
    group = ctx.group
    s = group.rank
    if s > 0 and not lambda_generation_holds(inst):
        raise InfeasibleRelationError(
            "the b_i do not generate the degree-zero part; relations cannot close"
        )
    b_elts = [ResolventElt.basis_tau(inst, tau) for tau in group.generators()]

    mu_rows, _ = _solve_form(ctx, b_elts, use_gamma_form=False)
    nu_rows = []
    for i in range(s):
        nu = _solve_nu_row(ctx, i, b_elts, mu_rows[i])
        if nu is None:
            raise InfeasibleRelationError(f"omega complement of row {i} is infeasible")
        nu_rows.append(nu)

    lam_full, _ = _solve_form(ctx, b_elts, use_gamma_form=True)
    lam_rows = [row[:s] for row in lam_full]
    mu_vec = [row[s] for row in lam_full]

    m_matrix = tuple(
        tuple(_diag_entry(ctx, i, j, group.orders[i], mu_rows[i][j]) for j in range(s))
        for i in range(s)
    )
    lam_matrix = tuple(
        tuple(_diag_entry(ctx, i, j, group.orders[i], lam_rows[i][j]) for j in range(s))
        for i in range(s)
    )
    cert = RelationCertificate(
        m_matrix=m_matrix,
        n_matrix=tuple(tuple(row) for row in nu_rows),
        lam_matrix=lam_matrix,
        mu_vector=tuple(mu_vec),
    )
    _verify_certificate(inst, cert, b_elts, mu_rows, lam_rows)
    return cert


def _verify_certificate(inst, cert, b_elts, mu_rows, lam_rows):
    ctx = context(inst)
    group = ctx.group
    s = group.rank
    for i in range(s):
        resid = b_elts[i].scale(group.orders[i])
        for j in range(s):
            resid = resid - star_act(inst, mu_rows[i][j], b_elts[j])
            resid = resid - omega_act(inst, star_act(inst, cert.n_matrix[i][j], b_elts[j]))
        if not resid.is_zero():
            raise CertificateError(f"nonzero residual in omega-form row {i}")
        resid = b_elts[i].scale(group.orders[i])
        for j in range(s):
            resid = resid - star_act(inst, lam_rows[i][j], b_elts[j])
        gamma_elt = ResolventElt.from_a(inst, inst.gamma())
        resid = resid - star_act(inst, cert.mu_vector[i], gamma_elt)
        if not resid.is_zero():
            raise CertificateError(f"nonzero residual in gamma-form row {i}")


def certificate_determinants(inst: "Instance", cert: RelationCertificate):
    """det of both certificate matrices over the plain group ring."""
    group = inst.group
    ring = inst.ring
    if cert.size() == 0:
        one = GroupRingElt.one(group, ring)
        return one, one
    return det_ring([list(r) for r in cert.m_matrix]), det_ring(
        [list(r) for r in cert.lam_matrix]
    )


def delta(inst: "Instance", cert: RelationCertificate) -> GroupRingElt:
    """Extract the operator d with Tr = w d on the degree-zero part.

    Computes det(M - w N) in the omega-truncated ring, asserts that its
    degree-zero part is exactly the trace (any scalar multiple or a wrong
    augmentation means the certificate or the precision model is broken),
    and returns minus the omega part.
    """
    group = inst.group
    ring = inst.ring
    tr = trace_element(group, ring)
    if cert.size() == 0:
        d0 = GroupRingElt.one(group, ring)
        d1 = GroupRingElt.zero(group, ring)
    else:
        om = [
            [OmegaRingElt(cert.m_matrix[i][j], -cert.n_matrix[i][j]) for j in range(cert.size())]
            for i in range(cert.size())
        ]
        d = det_ring(om)
        d0, d1 = d.r0, d.r1
    kappa = d0.trace_multiple()
    if kappa is None:
        raise CertificateError("det M does not annihilate the augmentation ideal")
    if d0.augmentation() != group.size() % ring.modulus:
        raise PrecisionModelError(
            f"deg det M = {d0.augmentation()} differs from |G| = {group.size()}"
        )
    if d0 != tr:
        raise CertificateError(f"det M = {kappa} * Tr with kappa != 1")
    return -d1
