"""The extension group U realized on A x G through the factor set.

Multiplication is (a, s) * (b, t) = (a + s*b + f(s, t), st); associativity
is exactly the factor-set identity, so these functions are meaningful on
validated instances only (the verifier exercises them on broken data too,
where failures are the point).

The transfer is computed against the fixed transversal u_t = (0, t); other
transversals are reachable through coboundary shifts of the instance.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Tuple, TYPE_CHECKING

from .lattice import Submodule
from .resolvent import ResolventElt

if TYPE_CHECKING:
    from .instance import Instance

from .groupring import GElt

Vec = Tuple[int, ...]


class InstanceMismatchError(ValueError):
    """Raised when group elements from different instances are combined."""


@dataclass(frozen=True)
class UElement:
    """An element (a, tau) of the extension group of one instance."""

    instance: "Instance"
    a: Vec
    tau: GElt

    def __post_init__(self):
        if len(self.a) != self.instance.dim_a or not self.instance.group.contains(self.tau):
            raise ValueError("components do not fit the instance")
        object.__setattr__(self, "a", self.instance.a_reduce(self.a))

    def _check(self, other: "UElement") -> None:
        if self.instance != other.instance:
            raise InstanceMismatchError("elements of different extension groups")

    def __mul__(self, other: "UElement") -> "UElement":
        self._check(other)
        inst = self.instance
        a = inst.a_add(self.a, inst.act(self.tau, other.a))
        a = inst.a_add(a, inst.cocycle_in_a(self.tau, other.tau))
        return UElement(inst, a, inst.group.mul(self.tau, other.tau))

    def inverse(self) -> "UElement":
        inst = self.instance
        ti = inst.group.inv(self.tau)
        b = inst.a_neg(
            inst.a_add(
                inst.act(ti, self.a),
                inst.act(ti, inst.cocycle_in_a(self.tau, ti)),
            )
        )
        return UElement(inst, b, ti)

    def deg(self) -> int:
        return self.instance.deg(self.a)


def u_identity(inst: "Instance") -> UElement:
    return UElement(inst, inst.a_zero(), inst.group.identity())


def u_mul(x: UElement, y: UElement) -> UElement:
    return x * y


def u_elements(inst: "Instance"):
    """All of U in a deterministic order (A coordinates outer, G inner)."""
    import itertools

    orders = inst.coordinate_orders()
    for a in itertools.product(*(range(o) for o in orders)):
        for g in inst.group.elements():
            yield UElement(inst, a, g)


def u_order(inst: "Instance") -> int:
    out = inst.group.size() * inst.ring.modulus
    for o in inst.module.atilde_orders:
        out *= o
    return out


def derived_subgroup(inst: "Instance", degree_zero: bool = False) -> Submodule:
    """The commutator subgroup as a submodule of A.

    Generated by (1 - tau) * a over the group generators and module
    generators, together with the antisymmetrized factor set values;
    with ``degree_zero`` the module generators are restricted to the
    torsion part (commutators taken inside the degree-zero subgroup).
    """
    gens = []
    t = inst.torsion_rank
    module_gens = [tuple(1 if j == i else 0 for j in range(inst.dim_a)) for i in range(t)]
    if not degree_zero:
        module_gens.append(inst.gamma())
    for tau in inst.group.generators():
        for a in module_gens:
            gens.append(inst.a_sub(a, inst.act(tau, a)))
    for s in inst.group.elements():
        for g in inst.group.elements():
            gens.append(
                inst.a_sub(inst.cocycle_in_a(s, g), inst.cocycle_in_a(g, s))
            )
    return inst.span_a(gens)


def transfer(inst: "Instance", u: UElement) -> Vec:
    """The transfer of u into A against the transversal u_t = (0, t).

    u * u_t = u_{st} * (x_t, 1) forces x_t = (st)^-1 * (a + f(s, t)); the
    transfer is the sum of the x_t, constant on cosets of the derived
    subgroup and a homomorphism there.
    """
    if u.instance != inst:
        raise InstanceMismatchError("element does not belong to this instance")
    group = inst.group
    out = inst.a_zero()
    for g in group.elements():
        prod_g_inv = group.inv(group.mul(u.tau, g))
        term = inst.act(prod_g_inv, inst.a_add(u.a, inst.cocycle_in_a(u.tau, g)))
        out = inst.a_add(out, term)
    return out


def log_iso(inst: "Instance", u: UElement) -> ResolventElt:
    """(a, tau) -> a + (tau - 1), a representative of the logarithm class.

    Descends to an isomorphism from U modulo its derived subgroup onto the
    resolvent module modulo its augmentation submodule.
    """
    if u.instance != inst:
        raise InstanceMismatchError("element does not belong to this instance")
    lam = [0] * (inst.group.size() - 1)
    if u.tau != inst.group.identity():
        lam[inst.group.nonidentity().index(u.tau)] = 1
    return ResolventElt(inst, u.a, tuple(lam))
