"""Construction of valid instances, and the enumeration oracle.

Enumeration is exact rather than rejection-based: for a fixed action
configuration the admissible factor sets form a finite module (the
associativity identity, normalization and the inverse convention are all
linear), so we solve for that module once, walk its elements, and keep one
canonical representative per coboundary class.  Actions are enumerated
directly from the torsion structure (entry steps forced by well-definedness,
powers and commutators checked on the nose).

The oracle at the bottom knows nothing about any of that: it materializes
the extension group, takes commutators of all pairs, computes transfers by
the coset-product definition, and counts.  Its only shared ingredient is
the group law itself.
"""

from __future__ import annotations

import hashlib
import itertools
import json
import random
from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .groupring import AbelianLGroup, GElt
from .instance import Instance, build_instance, instance_to_dict, validate
from .lattice import Submodule, ZModRing, preimage
from .resolvent import boundary_module

Vec = Tuple[int, ...]


class CeilingExceededError(RuntimeError):
    def __init__(self, estimate: int, ceiling: int, exact: bool = True):
        bound = "" if exact else "at least "
        super().__init__(
            f"estimated search space of {bound}{estimate} factor sets exceeds ceiling {ceiling}"
        )
        self.estimate = estimate
        self.ceiling = ceiling
        self.exact = exact


class OracleBoundError(RuntimeError):
    pass


@dataclass(frozen=True)
class SearchParams:
    prime: int
    precision: int
    g_orders_list: Tuple[Tuple[int, ...], ...]
    atilde_orders_list: Tuple[Tuple[int, ...], ...]
    oracle_bound: int = 2**12
    seed: int = 0
    ceiling: int = 50_000
    samples: int = 3
    attempt_budget: int = 400


# -- action configurations ------------------------------------------------------


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def _torsion_endomorphisms(d: Tuple[int, ...]):
    """All well-defined matrices on the torsion module, entry (i, j) running
    over the multiples of d_j / gcd(d_i, d_j) below d_j."""
    t = len(d)
    ranges = []
    for i in range(t):
        for j in range(t):
            step = d[j] // _gcd(d[i], d[j])
            ranges.append([step * k for k in range(_gcd(d[i], d[j]))])
    for flat in itertools.product(*ranges):
        yield tuple(tuple(flat[i * t + j] for j in range(t)) for i in range(t))


def _t_mat_mul(a, b, d):
    t = len(d)
    return tuple(
        tuple(sum(a[i][r] * b[r][j] for r in range(t)) % d[j] for j in range(t))
        for i in range(t)
    )


def _t_mat_pow(p, k, d):
    t = len(d)
    out = tuple(tuple(1 if i == j else 0 for j in range(t)) for i in range(t))
    for _ in range(k):
        out = _t_mat_mul(out, p, d)
    return out


def _t_identity(d):
    t = len(d)
    return tuple(tuple(1 if i == j else 0 for j in range(t)) for i in range(t))


def _generator_candidates(d: Tuple[int, ...], order: int):
    """(P, q) with P^order = 1 on the torsion and q * (1 + P + ... + P^(o-1)) = 0."""
    t = len(d)
    out = []
    for p in _torsion_endomorphisms(d):
        if _t_mat_pow(p, order, d) != _t_identity(d):
            continue
        # norm matrix 1 + P + ... + P^(order-1)
        acc = _t_identity(d)
        total = [[0] * t for _ in range(t)]
        for _ in range(order):
            for i in range(t):
                for j in range(t):
                    total[i][j] = (total[i][j] + acc[i][j]) % d[j]
            acc = _t_mat_mul(acc, p, d)
        for q in itertools.product(*(range(o) for o in d)):
            if all(
                sum(q[i] * total[i][j] for i in range(t)) % d[j] == 0 for j in range(t)
            ):
                out.append((p, q))
    return out


def _full_matrix(p, q, t: int, modulus: int):
    rows = []
    for i in range(t):
        rows.append([p[i][j] % modulus for j in range(t)] + [0])
    rows.append([q[j] % modulus for j in range(t)] + [1])
    return rows


def _actions_commute(mats, d, modulus) -> bool:
    t = len(d)
    dim = t + 1
    orders = list(d) + [modulus]

    def mul(a, b):
        return [
            [sum(a[i][r] * b[r][j] for r in range(dim)) % modulus for j in range(dim)]
            for i in range(dim)
        ]

    for x in range(len(mats)):
        for y in range(x + 1, len(mats)):
            ab = mul(mats[x], mats[y])
            ba = mul(mats[y], mats[x])
            for i in range(dim):
                for j in range(dim):
                    if (ab[i][j] - ba[i][j]) % orders[j]:
                        return False
    return True


def action_configurations(prime: int, precision: int, g_orders, atilde_orders):
    """All commuting tuples of admissible generator actions, in a fixed order."""
    d = tuple(atilde_orders)
    modulus = prime**precision
    per_gen = [_generator_candidates(d, o) for o in g_orders]
    configs = []
    for combo in itertools.product(*per_gen):
        mats = [_full_matrix(p, q, len(d), modulus) for (p, q) in combo]
        if _actions_commute(mats, d, modulus):
            configs.append(tuple(tuple(tuple(r) for r in m) for m in mats))
    return configs


# -- factor set solution spaces ---------------------------------------------------


class _CocycleSpace:
    """The module of convention-compliant factor sets for one action config.

    Variables are the table entries on nonidentity pairs; the associativity
    identity on nonidentity triples, together with vanishing on inverse
    pairs, cuts out a submodule over Z/exp(T).  Tables are enumerated by
    closing the reduced generators under addition, so there is no blowup
    from torsion coordinates of smaller order.
    """

    def __init__(self, prime, precision, g_orders, atilde_orders, action):
        self.group = AbelianLGroup(prime, g_orders)
        self.d = tuple(atilde_orders)
        self.t = len(self.d)
        self.exp = max(self.d, default=prime)
        self.ring = ZModRing(prime, _log_exp(self.exp, prime))
        self.nonid = self.group.nonidentity()
        self.pairs = [(s, g) for s in self.nonid for g in self.nonid]
        self.pair_index = {p: i for i, p in enumerate(self.pairs)}
        self.nvars = len(self.pairs) * self.t
        inst = build_instance(
            prime, precision, g_orders, atilde_orders, action, {}
        )
        self._p_mats = {
            g: [row[: self.t] for row in inst.action_matrix(g)[: self.t]]
            for g in self.group.elements()
        }
        self._sub = self._solve()
        self._order_cache: Optional[int] = None

    def _var(self, pair, i) -> int:
        return self.pair_index[pair] * self.t + i

    def _solve(self) -> Submodule:
        group = self.group
        one = group.identity()
        cols: List[List[int]] = []  # one coefficient column per condition coordinate
        orders: List[int] = []

        def new_col(coord_order):
            cols.append([0] * self.nvars)
            orders.append(coord_order)
            return cols[-1]

        for s in self.nonid:
            p_s = self._p_mats[s]
            for g in self.nonid:
                for r in self.nonid:
                    sg = group.mul(s, g)
                    gr = group.mul(g, r)
                    for j in range(self.t):
                        col = new_col(self.d[j])
                        # s * a_{g,r}: value coordinate i feeds target j via P_s
                        for i in range(self.t):
                            c = p_s[i][j]
                            if c:
                                col[self._var((g, r), i)] = (
                                    col[self._var((g, r), i)] + c
                                )
                        if sg != one:
                            col[self._var((sg, r), j)] -= 1
                        if gr != one:
                            col[self._var((s, gr), j)] += 1
                        col[self._var((s, g), j)] -= 1
        for g in self.nonid:
            gi = group.inv(g)
            for j in range(self.t):
                col = new_col(self.d[j])
                col[self._var((g, gi), j)] += 1

        if not cols:
            return Submodule.from_generators(
                self.ring, self.nvars, [_unit(self.nvars, k) for k in range(self.nvars)]
            )
        width = len(cols)
        rows = [[cols[c][v] % self.ring.modulus for c in range(width)] for v in range(self.nvars)]
        rel_rows = []
        for c in range(width):
            row = [0] * width
            row[c] = orders[c] % self.ring.modulus
            rel_rows.append(row)
        target_rel = Submodule.from_generators(self.ring, width, rel_rows)
        return preimage(rows, target_rel, self.ring)

    def _reduce_table(self, vec: Sequence[int]) -> Vec:
        return tuple(
            x % self.d[k % self.t] for k, x in enumerate(vec)
        )

    def count(self) -> int:
        if self._order_cache is None:
            torsion = Submodule.from_generators(
                self.ring,
                self.nvars,
                [
                    _scaled_unit(self.nvars, k, self.d[k % self.t])
                    for k in range(self.nvars)
                ],
            )
            self._order_cache = self._sub.order() // torsion.order()
        return self._order_cache

    def tables(self) -> List[Vec]:
        """All factor-set vectors, sorted."""
        gens = [self._reduce_table(r) for r in self._sub.basis]
        return sorted(_closure(gens, self.d, self.t, self.nvars))

    def coboundaries(self) -> List[Vec]:
        """The subgroup of shifts of the table by admissible transversal moves."""
        group = self.group
        nshift = len(self.nonid) * self.t
        cols: List[List[int]] = []
        orders: List[int] = []
        for tau in self.nonid:
            ti = group.inv(tau)
            p_t = self._p_mats[tau]
            for j in range(self.t):
                col = [0] * nshift
                col[self.nonid.index(tau) * self.t + j] += 1
                for i in range(self.t):
                    c = p_t[i][j]
                    if c:
                        col[self.nonid.index(ti) * self.t + i] += c
                cols.append(col)
                orders.append(self.d[j])
        if cols:
            width = len(cols)
            rows = [
                [cols[c][v] % self.ring.modulus for c in range(width)]
                for v in range(nshift)
            ]
            rel_rows = []
            for c in range(width):
                row = [0] * width
                row[c] = orders[c] % self.ring.modulus
                rel_rows.append(row)
            target_rel = Submodule.from_generators(self.ring, width, rel_rows)
            admissible = preimage(rows, target_rel, self.ring)
        else:
            admissible = Submodule.from_generators(
                self.ring, nshift, [_unit(nshift, k) for k in range(nshift)]
            )
        gens = []
        one = self.group.identity()
        for c_row in admissible.basis:
            table = [0] * self.nvars
            cvals = {
                tau: tuple(c_row[k * self.t : (k + 1) * self.t])
                for k, tau in enumerate(self.nonid)
            }
            for (s, g) in self.pairs:
                sg = self.group.mul(s, g)
                p_s = self._p_mats[s]
                for j in range(self.t):
                    v = cvals[s][j]
                    v += sum(cvals[g][i] * p_s[i][j] for i in range(self.t))
                    if sg != one:
                        v -= cvals[sg][j]
                    table[self._var((s, g), j)] = v
            gens.append(self._reduce_table(table))
        return sorted(_closure(gens, self.d, self.t, self.nvars))

    def canonical_tables(self) -> List[Vec]:
        """One lexicographically minimal representative per coboundary class."""
        shifts = self.coboundaries()
        seen = set()
        out = []
        for z in self.tables():
            if z in seen:
                continue
            out.append(z)
            for w in shifts:
                seen.add(
                    tuple((a + b) % self.d[k % self.t] for k, (a, b) in enumerate(zip(z, w)))
                )
        return out

    def table_to_dict(self, vec: Vec) -> Dict[Tuple[GElt, GElt], Vec]:
        return {
            pair: tuple(vec[self.pair_index[pair] * self.t + i] for i in range(self.t))
            for pair in self.pairs
        }


def _log_exp(e: int, prime: int) -> int:
    n = 0
    while prime**n < e:
        n += 1
    return max(n, 1)


def _unit(n, k):
    row = [0] * n
    row[k] = 1
    return row


def _scaled_unit(n, k, c):
    row = [0] * n
    row[k] = c
    return row


def _closure(gens: Iterable[Vec], d: Tuple[int, ...], t: int, width: int) -> set:
    zero = (0,) * width
    out = {zero}
    frontier = [zero]
    gens = list(dict.fromkeys(gens))
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = tuple((a + b) % d[k % t] for k, (a, b) in enumerate(zip(x, g)))
                if y not in out:
                    out.add(y)
                    nxt.append(y)
        frontier = nxt
    return out


# -- enumeration and sampling ------------------------------------------------------


def _precision_floor(prime, atilde_orders, g_orders) -> int:
    m_at = _log_exp(max(atilde_orders, default=1), prime) if atilde_orders else 0
    m_g = _log_exp(max(g_orders, default=1), prime) if g_orders else 0
    return m_at + m_g + 1


def estimate_space(params: SearchParams, g_orders, atilde_orders, abort_above=None):
    """The number of factor sets the enumeration must walk.

    With ``abort_above`` set, stops counting once the running total passes
    it and returns (total_so_far, False); the flag reports exactness.
    """
    if params.precision < _precision_floor(params.prime, atilde_orders, g_orders):
        return 0 if abort_above is None else (0, True)
    total = 0
    for action in action_configurations(
        params.prime, params.precision, g_orders, atilde_orders
    ):
        space = _CocycleSpace(
            params.prime, params.precision, g_orders, atilde_orders, action
        )
        total += space.count()
        if abort_above is not None and total > abort_above:
            return total, False
    return total if abort_above is None else (total, True)


def enumerate_instances(params: SearchParams, g_orders=None, atilde_orders=None):
    """All validate-passing instances, one per coboundary class, in a
    deterministic order.  Refuses up front when the space is too large."""
    combos = (
        [(tuple(g_orders), tuple(atilde_orders))]
        if g_orders is not None
        else [
            (g, a)
            for g in params.g_orders_list
            for a in params.atilde_orders_list
        ]
    )
    estimate = 0
    work = []
    for g, a in combos:
        if params.precision < _precision_floor(params.prime, a, g):
            continue
        configs = action_configurations(params.prime, params.precision, g, a)
        spaces = []
        for cfg in configs:
            space = _CocycleSpace(params.prime, params.precision, g, a, cfg)
            estimate += space.count()
            if estimate > params.ceiling:
                raise CeilingExceededError(estimate, params.ceiling, exact=False)
            spaces.append(space)
        work.append((g, a, configs, spaces))
    for g, a, configs, spaces in work:
        for cfg, space in zip(configs, spaces):
            for table_vec in space.canonical_tables():
                inst = build_instance(
                    params.prime,
                    params.precision,
                    g,
                    a,
                    cfg,
                    space.table_to_dict(table_vec),
                )
                if validate(inst).ok:
                    yield inst


def random_instance(params: SearchParams, g_orders=None, atilde_orders=None) -> Optional[Instance]:
    """Seed-reproducible rejection sampling over action configurations and
    factor-set modules; returns the first validate-passing instance."""
    rng = random.Random(params.seed)
    combos = (
        [(tuple(g_orders), tuple(atilde_orders))]
        if g_orders is not None
        else [(g, a) for g in params.g_orders_list for a in params.atilde_orders_list]
    )
    combos = [
        (g, a)
        for g, a in combos
        if params.precision >= _precision_floor(params.prime, a, g)
    ]
    if not combos:
        return None
    cache: Dict[tuple, tuple] = {}
    for _ in range(params.attempt_budget):
        g, a = combos[rng.randrange(len(combos))]
        key = (g, a)
        if key not in cache:
            configs = action_configurations(params.prime, params.precision, g, a)
            cache[key] = (configs, {})
        configs, spaces = cache[key]
        if not configs:
            continue
        ci = rng.randrange(len(configs))
        if ci not in spaces:
            spaces[ci] = _CocycleSpace(
                params.prime, params.precision, g, a, configs[ci]
            )
        space = spaces[ci]
        basis = space._sub.basis
        vec = [0] * space.nvars
        for row in basis:
            c = rng.randrange(space.ring.modulus)
            for k in range(space.nvars):
                vec[k] += c * row[k]
        table_vec = space._reduce_table(vec)
        inst = build_instance(
            params.prime, params.precision, g, a, configs[ci], space.table_to_dict(table_vec)
        )
        if validate(inst).ok:
            return inst
    return None


def random_admissible_shift(inst: Instance, rng: random.Random) -> Dict[GElt, Vec]:
    """A random transversal move c (c_1 = 0, c_tau = -tau * c_{tau^-1}),
    suitable for coboundary_shift without rejection."""
    group = inst.group
    shift: Dict[GElt, Vec] = {}
    done = set()
    for tau in group.nonidentity():
        if tau in done:
            continue
        ti = group.inv(tau)
        if tau == ti:
            # (1 + tau) c = 0: sample from the kernel by scanning candidates
            candidates = []
            for v in itertools.product(*(range(o) for o in inst.module.atilde_orders)):
                s = inst.atilde_act(tau, v)
                if all((x + y) % o == 0 for x, y, o in zip(v, s, inst.module.atilde_orders)):
                    candidates.append(v)
            shift[tau] = candidates[rng.randrange(len(candidates))]
            done.add(tau)
        else:
            v = tuple(rng.randrange(o) for o in inst.module.atilde_orders)
            shift[tau] = v
            minus_tv = tuple(
                (-x) % o
                for x, o in zip(inst.atilde_act(group.inv(tau), v), inst.module.atilde_orders)
            )
            shift[ti] = minus_tv
            done.add(tau)
            done.add(ti)
    return shift


# -- the enumeration oracle ---------------------------------------------------------


@dataclass(frozen=True)
class OracleFacts:
    u_order: int
    u_tilde_order: int
    derived: frozenset
    derived_degree_zero: frozenset
    transfer: dict = field(hash=False)
    degree_zero_index: int = 0
    gamma_commutators: frozenset = frozenset()


def oracle_group(inst: Instance, bound: int = 2**12) -> OracleFacts:
    """Materialize the extension group and compute everything by counting.

    Commutator subgroups come from all-pairs commutators closed under
    addition; transfers use the coset-product definition against the
    standard transversal.  No resolvent machinery is involved.
    """
    from .extension import u_order

    n_u = u_order(inst)
    if n_u > bound:
        raise OracleBoundError(f"|U| = {n_u} exceeds the oracle bound {bound}")

    orders = inst.coordinate_orders()
    group = inst.group
    gelts = group.elements()
    a_elts = list(itertools.product(*(range(o) for o in orders)))
    gmul = {(x, y): group.mul(x, y) for x in gelts for y in gelts}
    ginv = {x: group.inv(x) for x in gelts}
    act = {
        g: {a: inst.act(g, a) for a in a_elts} for g in gelts
    }
    coc = {(s, g): inst.cocycle_in_a(s, g) for s in gelts for g in gelts}

    def add(x, y):
        return tuple((p + q) % o for p, q, o in zip(x, y, orders))

    def mul(u, v):
        a, s = u
        b, t = v
        return (add(add(a, act[s][b]), coc[s, t]), gmul[s, t])

    elements = [(a, g) for a in a_elts for g in gelts]
    identity = (tuple(0 for _ in orders), group.identity())
    inv = {}
    for u in elements:
        a, s = u
        si = ginv[s]
        b = tuple((-x) % o for x, o in zip(add(act[si][a], act[si][coc[s, si]]), orders))
        cand = (b, si)
        if mul(u, cand) != identity:
            raise AssertionError("oracle inverse failed verification")
        inv[u] = cand

    def commutator_span(pool):
        vals = set()
        for u in pool:
            for v in pool:
                c = mul(mul(u, v), inv[mul(v, u)])
                if c[1] != group.identity():
                    raise AssertionError("commutator left the abelian normal subgroup")
                vals.add(c[0])
        return _abelian_closure(vals, orders)

    derived = commutator_span(elements)
    degree_zero = [u for u in elements if u[0][-1] % inst.ring.modulus == 0]
    derived_dz = commutator_span(degree_zero)

    transversal = {g: (tuple(0 for _ in orders), g) for g in gelts}
    transfer = {}
    for u in elements:
        acc = identity
        for g in gelts:
            w = mul(u, transversal[g])
            rep = transversal[w[1]]
            acc = mul(acc, mul(inv[rep], w))
        if acc[1] != group.identity():
            raise AssertionError("transfer product left the module")
        transfer[u] = acc[0]

    gamma_lift = (inst.gamma(), group.identity())
    gamma_comms = set()
    for g in gelts:
        c = mul(mul(gamma_lift, transversal[g]), inv[mul(transversal[g], gamma_lift)])
        gamma_comms.add(c[0])

    return OracleFacts(
        u_order=n_u,
        u_tilde_order=len(degree_zero),
        derived=frozenset(derived),
        derived_degree_zero=frozenset(derived_dz),
        transfer=transfer,
        degree_zero_index=len(degree_zero) // len(derived),
        gamma_commutators=frozenset(_abelian_closure(gamma_comms, orders)),
    )


def _abelian_closure(vals, orders) -> set:
    zero = tuple(0 for _ in orders)
    out = {zero}
    frontier = [zero]
    gens = sorted(set(vals))
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = tuple((a + b) % o for a, b, o in zip(x, g, orders))
                if y not in out:
                    out.add(y)
                    nxt.append(y)
        frontier = nxt
    return out


# -- corpus building ------------------------------------------------------------


@dataclass
class ComponentSpec:
    g_orders: Tuple[int, ...]
    atilde_orders: Tuple[int, ...]
    mode: str = "auto"  # auto | exhaustive | sample
    samples: Optional[int] = None  # overrides SearchParams.samples


def _instance_name(inst: Instance, index: int) -> str:
    g = "x".join(map(str, inst.group.orders)) or "1"
    a = "x".join(map(str, inst.module.atilde_orders)) or "0"
    return f"p{inst.prime}_n{inst.precision}_G{g}_A{a}_{index:03d}.json"


def build_corpus(params: SearchParams, components: Sequence[ComponentSpec], out_dir) -> dict:
    """Write instance files plus a manifest recording how each component of
    the search space was covered (exhausted, sampled, or excluded)."""
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    manifest = {
        "prime": params.prime,
        "precision": params.precision,
        "oracle_bound": params.oracle_bound,
        "seed": params.seed,
        "ceiling": params.ceiling,
        "components": [],
    }
    for comp in components:
        entry = {
            "G": list(comp.g_orders),
            "Atilde": list(comp.atilde_orders),
            "mode": comp.mode,
            "files": [],
            "count": 0,
            "nonzero_boundary": 0,
        }
        floor = _precision_floor(params.prime, comp.atilde_orders, comp.g_orders)
        if params.precision < floor:
            entry["mode"] = "excluded"
            entry["exhausted"] = False
            entry["skip_reason"] = (
                f"precision {params.precision} below the floor {floor} for this shape"
            )
            manifest["components"].append(entry)
            continue
        estimate, exact = estimate_space(
            params, comp.g_orders, comp.atilde_orders, abort_above=params.ceiling
        )
        entry["estimate"] = estimate
        entry["estimate_exact"] = exact
        mode = comp.mode
        if mode == "auto":
            mode = "exhaustive" if exact and estimate <= params.ceiling else "sample"
        entry["mode"] = mode
        instances: List[Instance] = []
        if mode == "exhaustive":
            instances = list(
                enumerate_instances(params, comp.g_orders, comp.atilde_orders)
            )
            entry["exhausted"] = True
        else:
            entry["exhausted"] = False
            seen = set()
            n_samples = comp.samples if comp.samples is not None else params.samples
            for k in range(n_samples):
                p_k = SearchParams(
                    prime=params.prime,
                    precision=params.precision,
                    g_orders_list=(comp.g_orders,),
                    atilde_orders_list=(comp.atilde_orders,),
                    oracle_bound=params.oracle_bound,
                    seed=params.seed + 7919 * k,
                    ceiling=params.ceiling,
                    attempt_budget=params.attempt_budget,
                )
                inst = random_instance(p_k, comp.g_orders, comp.atilde_orders)
                if inst is None:
                    continue
                key = json.dumps(instance_to_dict(inst), sort_keys=True)
                if key not in seen:
                    seen.add(key)
                    instances.append(inst)
        for idx, inst in enumerate(instances):
            name = _instance_name(inst, idx)
            payload = json.dumps(instance_to_dict(inst), indent=2, sort_keys=True) + "\n"
            (out / name).write_text(payload, encoding="utf-8")
            entry["files"].append(
                {"name": name, "sha256": hashlib.sha256(payload.encode()).hexdigest()}
            )
            entry["count"] += 1
            if inst.group.rank >= 2:
                if boundary_module(inst).order() > inst.zero_a().order():
                    entry["nonzero_boundary"] += 1
        manifest["components"].append(entry)
    (out / "manifest.json").write_text(
        json.dumps(manifest, indent=2, sort_keys=True) + "\n", encoding="utf-8"
    )
    return manifest
