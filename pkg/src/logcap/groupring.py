"""Finite abelian l-groups, their group rings over Z/l^n, and the
omega-truncated extension (Z/l^n)[G][w]/(w^2).

Group elements are exponent vectors against a fixed decomposition into
cyclic factors; the lexicographic order on those vectors is the canonical
iteration order used everywhere (coefficient maps, coordinatizations,
report output), so results are reproducible byte for byte.
"""

from __future__ import annotations

import itertools
from typing import Dict, Sequence, Tuple

from .lattice import ModulusMismatchError, ZModRing, _is_prime

GElt = Tuple[int, ...]


class RingSizeError(ValueError):
    """Raised when a determinant is requested above the configured bound."""


class AbelianLGroup:
    """Direct product of cyclic groups of l-power orders."""

    __slots__ = ("prime", "orders", "_elements")

    def __init__(self, prime: int, orders: Sequence[int]):
        if not _is_prime(prime):
            raise ValueError(f"{prime} is not prime")
        for o in orders:
            if o < prime or not _is_l_power(o, prime):
                raise ValueError(f"cyclic factor order {o} is not a positive power of {prime}")
        self.prime = prime
        self.orders = tuple(int(o) for o in orders)
        self._elements = tuple(itertools.product(*(range(o) for o in self.orders)))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, AbelianLGroup)
            and self.prime == other.prime
            and self.orders == other.orders
        )

    def __hash__(self) -> int:
        return hash((self.prime, self.orders))

    def __repr__(self) -> str:
        return f"AbelianLGroup({self.prime}, {self.orders})"

    @property
    def rank(self) -> int:
        return len(self.orders)

    def size(self) -> int:
        out = 1
        for o in self.orders:
            out *= o
        return out

    def exponent(self) -> int:
        return max(self.orders, default=1)

    def identity(self) -> GElt:
        return (0,) * len(self.orders)

    def elements(self) -> Tuple[GElt, ...]:
        return self._elements

    def nonidentity(self) -> Tuple[GElt, ...]:
        return self._elements[1:]

    def generators(self) -> Tuple[GElt, ...]:
        return tuple(
            tuple(1 if j == i else 0 for j in range(len(self.orders)))
            for i in range(len(self.orders))
        )

    def mul(self, a: GElt, b: GElt) -> GElt:
        return tuple((x + y) % o for x, y, o in zip(a, b, self.orders))

    def inv(self, a: GElt) -> GElt:
        return tuple((-x) % o for x, o in zip(a, self.orders))

    def power(self, a: GElt, k: int) -> GElt:
        return tuple((x * k) % o for x, o in zip(a, self.orders))

    def element_order(self, a: GElt) -> int:
        # order of x in Z/o is o / gcd(o, x); the group order is their lcm,
        # which for l-powers is just the maximum
        out = 1
        for x, o in zip(a, self.orders):
            if x % o:
                out = max(out, o // _gcd(x % o, o))
        return out

    def contains(self, a) -> bool:
        return (
            isinstance(a, tuple)
            and len(a) == len(self.orders)
            and all(isinstance(x, int) and 0 <= x < o for x, o in zip(a, self.orders))
        )


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def _is_l_power(o: int, l: int) -> bool:
    if o < 1:
        return False
    while o % l == 0:
        o //= l
    return o == 1


class GroupRingElt:
    """An element of (Z/l^n)[G]; absent coefficients are zero."""

    __slots__ = ("group", "ring", "coeffs")

    def __init__(self, group: AbelianLGroup, ring: ZModRing, coeffs: Dict[GElt, int] | None = None):
        if group.prime != ring.prime:
            raise ModulusMismatchError("group and coefficient ring use different primes")
        self.group = group
        self.ring = ring
        clean: Dict[GElt, int] = {}
        for g, c in (coeffs or {}).items():
            if not group.contains(g):
                raise ValueError(f"{g} is not an element of {group}")
            c %= ring.modulus
            if c:
                clean[g] = c
        self.coeffs = clean

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, group: AbelianLGroup, ring: ZModRing) -> "GroupRingElt":
        return cls(group, ring, {})

    @classmethod
    def one(cls, group: AbelianLGroup, ring: ZModRing) -> "GroupRingElt":
        return cls(group, ring, {group.identity(): 1})

    @classmethod
    def scalar(cls, group: AbelianLGroup, ring: ZModRing, c: int) -> "GroupRingElt":
        return cls(group, ring, {group.identity(): c})

    @classmethod
    def of(cls, group: AbelianLGroup, ring: ZModRing, g: GElt) -> "GroupRingElt":
        return cls(group, ring, {g: 1})

    # -- ring structure -----------------------------------------------

    def _check(self, other: "GroupRingElt") -> None:
        if self.group != other.group or self.ring != other.ring:
            raise ModulusMismatchError("group ring elements over different (G, l, n)")

    def __add__(self, other: "GroupRingElt") -> "GroupRingElt":
        self._check(other)
        out = dict(self.coeffs)
        for g, c in other.coeffs.items():
            out[g] = out.get(g, 0) + c
        return GroupRingElt(self.group, self.ring, out)

    def __sub__(self, other: "GroupRingElt") -> "GroupRingElt":
        self._check(other)
        out = dict(self.coeffs)
        for g, c in other.coeffs.items():
            out[g] = out.get(g, 0) - c
        return GroupRingElt(self.group, self.ring, out)

    def __neg__(self) -> "GroupRingElt":
        return GroupRingElt(self.group, self.ring, {g: -c for g, c in self.coeffs.items()})

    def __mul__(self, other: "GroupRingElt") -> "GroupRingElt":
        self._check(other)
        out: Dict[GElt, int] = {}
        mul = self.group.mul
        for g, c in self.coeffs.items():
            for h, d in other.coeffs.items():
                k = mul(g, h)
                out[k] = out.get(k, 0) + c * d
        return GroupRingElt(self.group, self.ring, out)

    def scale(self, c: int) -> "GroupRingElt":
        return GroupRingElt(self.group, self.ring, {g: c * v for g, v in self.coeffs.items()})

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, GroupRingElt)
            and self.group == other.group
            and self.ring == other.ring
            and self.coeffs == other.coeffs
        )

    def __hash__(self) -> int:
        return hash((self.group, self.ring, tuple(sorted(self.coeffs.items()))))

    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, g: GElt) -> int:
        return self.coeffs.get(g, 0)

    def augmentation(self) -> int:
        """Sum of coefficients: the degree map of the group algebra."""
        return sum(self.coeffs.values()) % self.ring.modulus

    def in_augmentation_ideal(self) -> bool:
        return self.augmentation() == 0

    def items(self):
        """Coefficients in the canonical element order (zero entries skipped)."""
        for g in self.group.elements():
            c = self.coeffs.get(g, 0)
            if c:
                yield g, c

    def trace_multiple(self):
        """If self = c * (sum of all group elements), return c, else None."""
        vals = {self.coeffs.get(g, 0) for g in self.group.elements()}
        if len(vals) == 1:
            return vals.pop()
        return None

    def __repr__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = [f"{c}*{g}" for g, c in self.items()]
        return " + ".join(parts)


def trace_element(group: AbelianLGroup, ring: ZModRing) -> GroupRingElt:
    """The full trace: coefficient 1 on every group element."""
    return GroupRingElt(group, ring, {g: 1 for g in group.elements()})


def augmentation_ideal_basis(group: AbelianLGroup, ring: ZModRing):
    """The canonical module basis {g - 1 : g != 1} of the augmentation ideal."""
    one = group.identity()
    return tuple(
        GroupRingElt(group, ring, {g: 1, one: -1}) for g in group.nonidentity()
    )


class OmegaRingElt:
    """r0 + w*r1 in (Z/l^n)[G][w]/(w^2)."""

    __slots__ = ("r0", "r1")

    def __init__(self, r0: GroupRingElt, r1: GroupRingElt):
        r0._check(r1)
        self.r0 = r0
        self.r1 = r1

    @classmethod
    def from_parts(cls, r0: GroupRingElt, r1: GroupRingElt | None = None) -> "OmegaRingElt":
        return cls(r0, r1 if r1 is not None else GroupRingElt.zero(r0.group, r0.ring))

    @classmethod
    def omega(cls, group: AbelianLGroup, ring: ZModRing) -> "OmegaRingElt":
        return cls(GroupRingElt.zero(group, ring), GroupRingElt.one(group, ring))

    @classmethod
    def zero(cls, group: AbelianLGroup, ring: ZModRing) -> "OmegaRingElt":
        z = GroupRingElt.zero(group, ring)
        return cls(z, z)

    @classmethod
    def one(cls, group: AbelianLGroup, ring: ZModRing) -> "OmegaRingElt":
        return cls(GroupRingElt.one(group, ring), GroupRingElt.zero(group, ring))

    def __add__(self, other: "OmegaRingElt") -> "OmegaRingElt":
        return OmegaRingElt(self.r0 + other.r0, self.r1 + other.r1)

    def __sub__(self, other: "OmegaRingElt") -> "OmegaRingElt":
        return OmegaRingElt(self.r0 - other.r0, self.r1 - other.r1)

    def __neg__(self) -> "OmegaRingElt":
        return OmegaRingElt(-self.r0, -self.r1)

    def __mul__(self, other: "OmegaRingElt") -> "OmegaRingElt":
        # (a + wb)(c + wd) = ac + w(ad + bc); the w^2 term is discarded
        return OmegaRingElt(self.r0 * other.r0, self.r0 * other.r1 + self.r1 * other.r0)

    def __eq__(self, other) -> bool:
        return isinstance(other, OmegaRingElt) and self.r0 == other.r0 and self.r1 == other.r1

    def __hash__(self) -> int:
        return hash((self.r0, self.r1))

    def is_zero(self) -> bool:
        return self.r0.is_zero() and self.r1.is_zero()

    def __repr__(self) -> str:
        return f"({self.r0}) + w*({self.r1})"


def _one_like(x):
    if isinstance(x, OmegaRingElt):
        return OmegaRingElt.one(x.r0.group, x.r0.ring)
    return GroupRingElt.one(x.group, x.ring)


DET_DIMENSION_BOUND = 4


def det_ring(m: Sequence[Sequence], bound: int = DET_DIMENSION_BOUND):
    """Determinant by cofactor expansion over a commutative coefficient ring.

    Works for GroupRingElt and OmegaRingElt entries alike; fraction-free
    elimination is not an option here because the ring has zero divisors.
    """
    s = len(m)
    for row in m:
        if len(row) != s:
            raise RingSizeError("determinant of a non-square matrix")
    if s > bound:
        raise RingSizeError(f"matrix dimension {s} exceeds determinant bound {bound}")
    if s == 0:
        raise RingSizeError("cannot infer the ring of an empty matrix; use a 1x1 or larger")
    return _det_rec([list(r) for r in m])


def _det_rec(m):
    s = len(m)
    if s == 1:
        return m[0][0]
    acc = None
    for j in range(s):
        minor = [row[:j] + row[j + 1 :] for row in m[1:]]
        term = m[0][j] * _det_rec(minor)
        if j % 2:
            term = -term
        acc = term if acc is None else acc + term
    return acc


def adjugate(m: Sequence[Sequence], bound: int = DET_DIMENSION_BOUND):
    """The transposed cofactor matrix: adjugate(m) * m = det(m) * identity."""
    s = len(m)
    for row in m:
        if len(row) != s:
            raise RingSizeError("adjugate of a non-square matrix")
    if s > bound:
        raise RingSizeError(f"matrix dimension {s} exceeds adjugate bound {bound}")
    if s == 0:
        raise RingSizeError("adjugate of an empty matrix is not defined here")
    if s == 1:
        return [[_one_like(m[0][0])]]
    adj = [[None] * s for _ in range(s)]
    for i in range(s):
        for j in range(s):
            minor = [
                [m[r][c] for c in range(s) if c != j] for r in range(s) if r != i
            ]
            cof = _det_rec(minor)
            if (i + j) % 2:
                cof = -cof
            adj[j][i] = cof
    return adj


def mat_mul(a, b):
    s = len(a)
    t = len(b[0])
    k = len(b)
    out = []
    for i in range(s):
        row = []
        for j in range(t):
            acc = None
            for r in range(k):
                term = a[i][r] * b[r][j]
                acc = term if acc is None else acc + term
            row.append(acc)
        out.append(row)
    return out


def mat_identity(group: AbelianLGroup, ring: ZModRing, s: int):
    one = GroupRingElt.one(group, ring)
    zero = GroupRingElt.zero(group, ring)
    return [[one if i == j else zero for j in range(s)] for i in range(s)]
