"""The finite instance data: (l, n, G, A, factor set).

A is a coordinatized module T x (Z/l^n), where T is the torsion part with
declared invariant factors and the last coordinate is the distinguished
generator gamma with deg(gamma) = 1.  G acts through one matrix per cyclic
generator; matrices act on row vectors from the right.  The factor set
takes values in the torsion part and is normalized, satisfies the standard
associativity identity, and vanishes on inverse pairs (the transversal
convention u_{t^-1} = u_t^-1).

Validation failures are data, not exceptions: ``validate`` returns a named
report and loaders accept arithmetically broken files as long as they are
structurally well formed.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Dict, Sequence, Tuple

from .groupring import AbelianLGroup, GElt, GroupRingElt, _is_l_power
from .lattice import Submodule, ZModRing

Vec = Tuple[int, ...]


class SchemaError(ValueError):
    """Structurally malformed instance data (bad JSON shape, keys, ranges)."""


class RejectedShiftError(ValueError):
    """A coboundary shift that would break the inverse convention."""


@dataclass(frozen=True)
class ClassModule:
    """Coordinates and G-action of the module A = T + (Z/l^n) * gamma."""

    atilde_orders: Tuple[int, ...]
    action: Tuple[Tuple[Tuple[int, ...], ...], ...]  # one (t+1)x(t+1) matrix per generator

    @property
    def torsion_rank(self) -> int:
        return len(self.atilde_orders)

    @property
    def dim(self) -> int:
        return len(self.atilde_orders) + 1

    def coordinate_orders(self, ring: ZModRing) -> Tuple[int, ...]:
        return self.atilde_orders + (ring.modulus,)


@dataclass(frozen=True)
class Cocycle:
    """Factor set table; entries is a sorted tuple of (sigma, tau, value)."""

    entries: Tuple[Tuple[GElt, GElt, Vec], ...]
    _table: dict = field(default=None, compare=False, repr=False, hash=False)

    def __post_init__(self):
        object.__setattr__(self, "_table", {(s, t): v for (s, t, v) in self.entries})

    @classmethod
    def from_table(cls, table: Dict[Tuple[GElt, GElt], Vec]) -> "Cocycle":
        entries = tuple(
            sorted((s, t, tuple(v)) for (s, t), v in table.items() if any(v))
        )
        return cls(entries)

    def value(self, sigma: GElt, tau: GElt, width: int) -> Vec:
        return self._table.get((sigma, tau), (0,) * width)


@dataclass(frozen=True)
class Instance:
    prime: int
    precision: int
    group: AbelianLGroup
    module: ClassModule
    cocycle: Cocycle
    _cache: dict = field(default_factory=dict, compare=False, repr=False, hash=False)

    # -- basic coordinates ---------------------------------------------

    @property
    def ring(self) -> ZModRing:
        return ZModRing(self.prime, self.precision)

    @property
    def dim_a(self) -> int:
        return self.module.dim

    @property
    def torsion_rank(self) -> int:
        return self.module.torsion_rank

    def coordinate_orders(self) -> Tuple[int, ...]:
        return self.module.coordinate_orders(self.ring)

    def a_reduce(self, vec: Sequence[int]) -> Vec:
        return tuple(x % o for x, o in zip(vec, self.coordinate_orders()))

    def a_add(self, x: Sequence[int], y: Sequence[int]) -> Vec:
        return self.a_reduce([a + b for a, b in zip(x, y)])

    def a_sub(self, x: Sequence[int], y: Sequence[int]) -> Vec:
        return self.a_reduce([a - b for a, b in zip(x, y)])

    def a_neg(self, x: Sequence[int]) -> Vec:
        return self.a_reduce([-a for a in x])

    def a_scale(self, c: int, x: Sequence[int]) -> Vec:
        return self.a_reduce([c * a for a in x])

    def a_zero(self) -> Vec:
        return (0,) * self.dim_a

    def gamma(self) -> Vec:
        return (0,) * self.torsion_rank + (1,)

    def deg(self, vec: Sequence[int]) -> int:
        return vec[-1] % self.ring.modulus

    def atilde_embed(self, t_vec: Sequence[int]) -> Vec:
        return self.a_reduce(tuple(t_vec) + (0,))

    def atilde_reduce(self, t_vec: Sequence[int]) -> Vec:
        return tuple(x % o for x, o in zip(t_vec, self.module.atilde_orders))

    # -- the G-action ----------------------------------------------------

    def action_matrix(self, g: GElt):
        """Row-action matrix of an arbitrary group element (cached)."""
        cache = self._cache.setdefault("act", {})
        if g in cache:
            return cache[g]
        N = self.ring.modulus
        d = self.dim_a
        mat = [[1 if i == j else 0 for j in range(d)] for i in range(d)]
        for gen_index, k in enumerate(g):
            base = self.module.action[gen_index]
            for _ in range(k):
                mat = [
                    [sum(mat[i][r] * base[r][j] for r in range(d)) % N for j in range(d)]
                    for i in range(d)
                ]
        mat = tuple(tuple(row) for row in mat)
        cache[g] = mat
        return mat

    def act(self, g: GElt, vec: Sequence[int]) -> Vec:
        mat = self.action_matrix(g)
        d = self.dim_a
        return self.a_reduce([sum(vec[i] * mat[i][j] for i in range(d)) for j in range(d)])

    def act_ring(self, x: GroupRingElt, vec: Sequence[int]) -> Vec:
        out = self.a_zero()
        for g, c in x.coeffs.items():
            out = self.a_add(out, self.a_scale(c, self.act(g, vec)))
        return out

    def a_tau(self, tau: GElt) -> Vec:
        """(1 - tau) * gamma, the basic commutator of the Gamma-lift."""
        g = self.gamma()
        return self.a_sub(g, self.act(tau, g))

    def atilde_act(self, g: GElt, t_vec: Sequence[int]) -> Vec:
        """The action restricted to the torsion part (block structure)."""
        full = self.act(g, self.atilde_embed(t_vec))
        return full[: self.torsion_rank]

    def cocycle_value(self, sigma: GElt, tau: GElt) -> Vec:
        return self.cocycle.value(sigma, tau, self.torsion_rank)

    def cocycle_in_a(self, sigma: GElt, tau: GElt) -> Vec:
        return self.atilde_embed(self.cocycle_value(sigma, tau))

    # -- submodules of A ---------------------------------------------------

    def relation_rows_a(self):
        """Rows spanning coordinate torsion: d_i * e_i for the torsion part."""
        rows = []
        d = self.dim_a
        for i, o in enumerate(self.module.atilde_orders):
            row = [0] * d
            row[i] = o
            rows.append(row)
        return rows

    def span_a(self, gens: Sequence[Sequence[int]]) -> Submodule:
        return Submodule.from_generators(
            self.ring, self.dim_a, list(gens) + self.relation_rows_a()
        )

    def zero_a(self) -> Submodule:
        return self.span_a([])

    def atilde_submodule(self) -> Submodule:
        gens = []
        for i in range(self.torsion_rank):
            row = [0] * self.dim_a
            row[i] = 1
            gens.append(row)
        return self.span_a(gens)

    def atilde_order(self) -> int:
        out = 1
        for o in self.module.atilde_orders:
            out *= o
        return out

    def atilde_exponent(self) -> int:
        return max(self.module.atilde_orders, default=1)


# -- construction -----------------------------------------------------------


def build_instance(
    prime: int,
    precision: int,
    g_orders: Sequence[int],
    atilde_orders: Sequence[int],
    action: Sequence[Sequence[Sequence[int]]],
    cocycle_table: Dict[Tuple[GElt, GElt], Sequence[int]],
) -> Instance:
    """Canonicalize raw data into an Instance, raising SchemaError on
    structural problems.  Arithmetic invariants are left to ``validate``."""
    try:
        group = AbelianLGroup(prime, g_orders)
    except ValueError as e:
        raise SchemaError(str(e)) from None
    ring = ZModRing(prime, precision)
    t = len(atilde_orders)
    for o in atilde_orders:
        if not _is_l_power(o, prime) or o < prime:
            raise SchemaError(f"torsion order {o} is not a positive power of {prime}")
        if o > ring.modulus:
            raise SchemaError(f"torsion order {o} exceeds the coefficient modulus {ring.modulus}")
    d = t + 1
    if len(action) != group.rank:
        raise SchemaError(
            f"expected {group.rank} action matrices (one per generator), got {len(action)}"
        )
    mats = []
    for k, m in enumerate(action):
        if len(m) != d or any(len(r) != d for r in m):
            raise SchemaError(f"action matrix tau_{k + 1} is not {d}x{d}")
        mats.append(tuple(tuple(x % ring.modulus for x in r) for r in m))
    table = {}
    for (s, g), v in cocycle_table.items():
        s = tuple(s)
        g = tuple(g)
        if not group.contains(s) or not group.contains(g):
            raise SchemaError(f"cocycle key ({s}, {g}) is not a pair of group elements")
        if len(v) != t:
            raise SchemaError(f"cocycle value for ({s}, {g}) has length {len(v)}, expected {t}")
        table[(s, g)] = tuple(x % o for x, o in zip(v, atilde_orders))
    inst = Instance(
        prime=prime,
        precision=precision,
        group=group,
        module=ClassModule(tuple(int(o) for o in atilde_orders), tuple(mats)),
        cocycle=Cocycle.from_table(table),
    )
    return inst


# -- validation ---------------------------------------------------------------


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


@dataclass(frozen=True)
class ValidationReport:
    checks: Tuple[CheckResult, ...]

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def failed_names(self) -> Tuple[str, ...]:
        return tuple(c.name for c in self.checks if not c.passed)

    def to_dict(self) -> dict:
        return {
            "ok": self.ok,
            "checks": [
                {"name": c.name, "passed": c.passed, "detail": c.detail} for c in self.checks
            ],
        }


def validate(inst: Instance) -> ValidationReport:
    """Run every structural invariant plus the arithmetic hypothesis H1."""
    checks = []
    ring = inst.ring
    N = ring.modulus
    group = inst.group
    t = inst.torsion_rank
    d = inst.dim_a
    orders = inst.module.atilde_orders

    m_at = 0
    e = inst.atilde_exponent()
    while inst.prime**m_at < e:
        m_at += 1
    m_g = 0
    while inst.prime**m_g < group.exponent():
        m_g += 1
    ok = inst.precision >= m_at + m_g + 1
    checks.append(
        CheckResult(
            "precision-rule",
            ok,
            "" if ok else f"n = {inst.precision} < {m_at} + {m_g} + 1",
        )
    )

    # block structure: torsion rows have zero gamma column, gamma row fixes
    # the gamma coordinate; equivalently the action preserves degrees and
    # (1 - tau) * gamma lies in the torsion part
    bad = []
    for k, m in enumerate(inst.module.action):
        for i in range(t):
            if m[i][t] % N:
                bad.append(f"tau_{k + 1} row {i} has gamma component {m[i][t]}")
        if m[t][t] % N != 1:
            bad.append(f"tau_{k + 1} moves deg: gamma coefficient {m[t][t]}")
    checks.append(CheckResult("action-block-structure", not bad, "; ".join(bad)))

    bad = []
    for k, m in enumerate(inst.module.action):
        for i in range(t):
            for j in range(t):
                if (orders[i] * m[i][j]) % orders[j]:
                    bad.append(f"tau_{k + 1}[{i}][{j}] breaks torsion")
    checks.append(CheckResult("action-well-defined", not bad, "; ".join(bad)))

    gens = group.generators()
    bad = []
    for a in range(len(gens)):
        for b in range(a + 1, len(gens)):
            for i in range(d):
                e_i = tuple(1 if j == i else 0 for j in range(d))
                lhs = inst.act(gens[b], inst.act(gens[a], e_i))
                rhs = inst.act(gens[a], inst.act(gens[b], e_i))
                if lhs != rhs:
                    bad.append(f"tau_{a + 1} and tau_{b + 1} disagree on e_{i}")
                    break
    checks.append(CheckResult("action-commutes", not bad, "; ".join(bad)))

    bad = []
    for k, o in enumerate(group.orders):
        for i in range(d):
            e_i = tuple(1 if j == i else 0 for j in range(d))
            v = e_i
            for _ in range(o):
                v = inst.act(gens[k], v)
            if v != e_i:
                bad.append(f"tau_{k + 1}^{o} is not the identity on e_{i}")
    checks.append(CheckResult("action-order", not bad, "; ".join(bad)))

    # factor set checks
    one = group.identity()
    bad = []
    for g in group.elements():
        if any(inst.cocycle_value(one, g)) or any(inst.cocycle_value(g, one)):
            bad.append(f"nonzero entry at identity pair with {g}")
    checks.append(CheckResult("cocycle-normalized", not bad, "; ".join(bad)))

    bad = []
    for s in group.elements():
        for g in group.elements():
            for r in group.elements():
                lhs = inst.atilde_act(s, inst.cocycle_value(g, r))
                lhs = _t_sub(inst, lhs, inst.cocycle_value(group.mul(s, g), r))
                lhs = _t_add(inst, lhs, inst.cocycle_value(s, group.mul(g, r)))
                lhs = _t_sub(inst, lhs, inst.cocycle_value(s, g))
                if any(lhs):
                    bad.append(f"triple ({s}, {g}, {r})")
        if len(bad) > 3:
            break
    checks.append(CheckResult("cocycle-identity", not bad, "; ".join(bad[:4])))

    bad = []
    for g in group.elements():
        if any(inst.cocycle_value(g, group.inv(g))):
            bad.append(f"nonzero at ({g}, {group.inv(g)})")
    checks.append(CheckResult("cocycle-inverse-convention", not bad, "; ".join(bad)))

    # H1: the derived subgroup of the extension must be the whole torsion part
    from . import extension

    u_prime = extension.derived_subgroup(inst)
    atilde = inst.atilde_submodule()
    ok = u_prime == atilde
    checks.append(
        CheckResult(
            "H1",
            ok,
            "" if ok else f"derived subgroup has order {u_prime.order() // inst.zero_a().order()}"
            f" inside torsion of order {inst.atilde_order()}",
        )
    )

    # consequence of H1, checked explicitly: the degree-zero quotient has order |G|
    u_t = inst.atilde_order() * group.size()
    u_prime_order = u_prime.order() // inst.zero_a().order()
    ok = u_prime_order != 0 and u_t // u_prime_order == group.size()
    checks.append(
        CheckResult(
            "degree-zero-index",
            ok,
            "" if ok else f"index {u_t // max(u_prime_order, 1)} != |G| = {group.size()}",
        )
    )

    return ValidationReport(tuple(checks))


def _t_add(inst: Instance, x: Vec, y: Vec) -> Vec:
    return tuple((a + b) % o for a, b, o in zip(x, y, inst.module.atilde_orders))


def _t_sub(inst: Instance, x: Vec, y: Vec) -> Vec:
    return tuple((a - b) % o for a, b, o in zip(x, y, inst.module.atilde_orders))


# -- coboundary shifts -------------------------------------------------------


def coboundary_shift(inst: Instance, c: Dict[GElt, Sequence[int]]) -> Instance:
    """Re-choose the transversal by c: the factor set moves by the coboundary
    c_s + s*c_t - c_{st}.  The shift must keep the inverse convention."""
    group = inst.group
    one = group.identity()
    cmap = {}
    for g, v in c.items():
        g = tuple(g)
        if not group.contains(g):
            raise SchemaError(f"shift key {g} is not a group element")
        if len(v) != inst.torsion_rank:
            raise SchemaError(f"shift value for {g} has wrong length")
        cmap[g] = inst.atilde_reduce(v)
    if any(cmap.get(one, ())):
        raise SchemaError("shift must vanish at the identity")

    def cval(g: GElt) -> Vec:
        return cmap.get(g, (0,) * inst.torsion_rank)

    new_table = {}
    for s in group.elements():
        for g in group.elements():
            v = inst.cocycle_value(s, g)
            v = _t_add(inst, v, cval(s))
            v = _t_add(inst, v, inst.atilde_act(s, cval(g)))
            v = _t_sub(inst, v, cval(group.mul(s, g)))
            new_table[(s, g)] = v
    for g in group.elements():
        if any(new_table[(g, group.inv(g))]):
            raise RejectedShiftError(
                f"shift breaks the inverse convention at ({g}, {group.inv(g)})"
            )
    return Instance(
        prime=inst.prime,
        precision=inst.precision,
        group=inst.group,
        module=inst.module,
        cocycle=Cocycle.from_table(new_table),
    )


# -- file format --------------------------------------------------------------

_TOP_KEYS = {"prime", "precision", "G", "A", "cocycle"}


def _parse_gelt(key: str, group, what: str) -> GElt:
    # group only needs .rank and .contains; cocycle keys use a pair view
    try:
        parts = tuple(int(x) for x in key.split(",")) if key else ()
    except ValueError:
        raise SchemaError(f"{what}: cannot parse group element {key!r}") from None
    if len(parts) != group.rank or not group.contains(parts):
        raise SchemaError(f"{what}: {key!r} is not a valid group element")
    return parts


def instance_to_dict(inst: Instance) -> dict:
    action = {}
    for k, m in enumerate(inst.module.action):
        action[f"tau_{k + 1}"] = [list(r) for r in m]
    cocycle = {}
    for s, g, v in inst.cocycle.entries:
        key = ",".join(map(str, s + g))
        cocycle[key] = list(v)
    return {
        "prime": inst.prime,
        "precision": inst.precision,
        "G": {"orders": list(inst.group.orders)},
        "A": {"atilde_orders": list(inst.module.atilde_orders), "action": action},
        "cocycle": cocycle,
    }


def instance_from_dict(data: dict) -> Instance:
    if not isinstance(data, dict):
        raise SchemaError("top level must be an object")
    unknown = set(data) - _TOP_KEYS
    if unknown:
        raise SchemaError(f"unknown top-level keys: {sorted(unknown)}")
    missing = _TOP_KEYS - set(data)
    if missing:
        raise SchemaError(f"missing top-level keys: {sorted(missing)}")
    prime = data["prime"]
    precision = data["precision"]
    if not isinstance(prime, int) or not isinstance(precision, int):
        raise SchemaError("prime and precision must be integers")
    gsec = data["G"]
    if not isinstance(gsec, dict) or set(gsec) != {"orders"}:
        raise SchemaError("G must be an object with exactly the key 'orders'")
    g_orders = gsec["orders"]
    if not isinstance(g_orders, list) or not all(isinstance(x, int) for x in g_orders):
        raise SchemaError("G.orders must be a list of integers")
    asec = data["A"]
    if not isinstance(asec, dict) or set(asec) != {"atilde_orders", "action"}:
        raise SchemaError("A must be an object with keys 'atilde_orders' and 'action'")
    at_orders = asec["atilde_orders"]
    if not isinstance(at_orders, list) or not all(isinstance(x, int) for x in at_orders):
        raise SchemaError("A.atilde_orders must be a list of integers")
    action_sec = asec["action"]
    if not isinstance(action_sec, dict):
        raise SchemaError("A.action must be an object")
    expected = [f"tau_{i + 1}" for i in range(len(g_orders))]
    if set(action_sec) != set(expected):
        raise SchemaError(f"A.action keys must be exactly {expected}")
    action = []
    for k in expected:
        m = action_sec[k]
        if not isinstance(m, list) or not all(
            isinstance(r, list) and all(isinstance(x, int) for x in r) for r in m
        ):
            raise SchemaError(f"A.action.{k} must be a row-major integer matrix")
        action.append(m)
    csec = data["cocycle"]
    if not isinstance(csec, dict):
        raise SchemaError("cocycle must be an object")
    try:
        group = AbelianLGroup(prime, g_orders)
    except ValueError as e:
        raise SchemaError(str(e)) from None
    table = {}
    for key, v in csec.items():
        if not isinstance(key, str):
            raise SchemaError("cocycle keys must be strings")
        flat = _parse_gelt(key, _PairGroup(group), f"cocycle key {key!r}")
        s_elt, t_elt = flat[: group.rank], flat[group.rank :]
        if not isinstance(v, list) or not all(isinstance(x, int) for x in v):
            raise SchemaError(f"cocycle value for {key!r} must be a list of integers")
        table[(s_elt, t_elt)] = v
    return build_instance(prime, precision, g_orders, at_orders, action, table)


class _PairGroup:
    """Helper so cocycle keys 'sigma,tau' parse as one 2s-long exponent vector."""

    def __init__(self, group: AbelianLGroup):
        self.rank = 2 * group.rank
        self._group = group

    def contains(self, flat) -> bool:
        r = self._group.rank
        return (
            len(flat) == 2 * r
            and self._group.contains(flat[:r])
            and self._group.contains(flat[r:])
        )


def load_instance(path) -> Instance:
    with open(path, "r", encoding="utf-8") as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as e:
            raise SchemaError(f"{path}: invalid JSON at line {e.lineno}, column {e.colno}") from None
    try:
        return instance_from_dict(data)
    except SchemaError as e:
        raise SchemaError(f"{path}: {e}") from None


def save_instance(inst: Instance, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(instance_to_dict(inst), fh, indent=2, sort_keys=True)
        fh.write("\n")
