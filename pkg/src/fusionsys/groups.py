"""Finite permutation groups with fully materialized element sets.

Everything is exact and deterministic.  A group stores all of its elements as
image tuples sorted lexicographically (so the identity is always element 0),
and every search in the package walks that order; any "least witness" reported
anywhere is therefore reproducible run to run.

Multiplication, inversion and conjugation index tables are built lazily as
numpy arrays; the hot subgroup-level scans (normalizers, transporters, cores)
are vectorized over them.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .errors import CapacityError, ValidationError
from .limits import DEFAULT_LIMITS, Limits
from .perms import (Perm, compose, cycle_string, identity, inverse,
                    perm_order, validate_perm)

__all__ = [
    "Group", "Subgroup", "GroupMap", "StructureFlags",
    "generate_group", "conjugate_subgroup", "normalizer", "centralizer",
    "core", "sylow_subgroup", "quotient_group", "subgroup_product",
    "structure_flags", "subgroup_label", "is_prime", "p_part",
]


def is_prime(n: int) -> bool:
    if not isinstance(n, int) or n < 2:
        return False
    for q in range(2, math.isqrt(n) + 1):
        if n % q == 0:
            return False
    return True


def p_part(n: int, p: int) -> int:
    """The largest power of p dividing n."""
    m = 1
    while n % p == 0:
        n //= p
        m *= p
    return m


class Group:
    """A finite permutation group on ``{0, ..., degree-1}``.

    Construct through :func:`generate_group` (or the catalog); the constructor
    itself trusts its arguments.  Elements are sorted lexicographically and
    index 0 is the identity.
    """

    def __init__(self, degree: int, generators: tuple[Perm, ...],
                 elements: tuple[Perm, ...]):
        self.degree = degree
        self.generators = generators
        self.elements = elements
        self.order = len(elements)
        self._index: dict[Perm, int] = {p: i for i, p in enumerate(elements)}
        if elements[0] != identity(degree):
            raise ValidationError("element 0 must be the identity; "
                                  "construct groups through generate_group")
        self._mul: np.ndarray | None = None
        self._inv: np.ndarray | None = None
        self._conj: np.ndarray | None = None
        self._mul_rows: list[list[int]] | None = None
        self._orders: tuple[int, ...] | None = None
        self._lattice_cache: dict = {}

    # -- basic access -------------------------------------------------------

    def index_of(self, perm: Perm) -> int:
        try:
            return self._index[perm]
        except KeyError:
            raise ValidationError(
                f"permutation {cycle_string(perm)} is not an element "
                f"of this group") from None

    def __contains__(self, perm: Perm) -> bool:
        return perm in self._index

    def __len__(self) -> int:
        return self.order

    def __repr__(self) -> str:
        gens = ", ".join(cycle_string(g) for g in self.generators) or "()"
        return f"<Group of order {self.order} on {self.degree} points <{gens}>>"

    # -- index tables (lazy) --------------------------------------------------

    def _dtype(self):
        return np.int16 if self.order <= 32000 else np.int32

    @property
    def mul_table(self) -> np.ndarray:
        """``mul_table[i, j]`` is the index of ``elements[i] * elements[j]``."""
        if self._mul is None:
            n = self.order
            P = np.array(self.elements, dtype=np.int64)
            table = np.empty((n, n), dtype=self._dtype())
            lookup = {p: i for i, p in enumerate(self.elements)}
            for i in range(n):
                rows = P[:, P[i]].tolist()  # rows[j] = elements[i] * elements[j]
                ti = table[i]
                for j in range(n):
                    ti[j] = lookup[tuple(rows[j])]
            self._mul = table
        return self._mul

    @property
    def mul_rows(self) -> list[list[int]]:
        """The multiplication table as nested lists (fast scalar access)."""
        if self._mul_rows is None:
            self._mul_rows = self.mul_table.tolist()
        return self._mul_rows

    @property
    def inv_vector(self) -> np.ndarray:
        if self._inv is None:
            self._inv = np.argmax(self.mul_table == 0, axis=1).astype(self._dtype())
        return self._inv

    @property
    def conj_table(self) -> np.ndarray:
        """``conj_table[g, i]`` is the index of ``elements[g]^-1 *
        elements[i] * elements[g]``."""
        if self._conj is None:
            mul = self.mul_table
            inv = self.inv_vector
            n = self.order
            table = np.empty((n, n), dtype=self._dtype())
            for g in range(n):
                table[g] = mul[mul[inv[g]], g]
            self._conj = table
        return self._conj

    @property
    def element_orders(self) -> tuple[int, ...]:
        if self._orders is None:
            self._orders = tuple(perm_order(p) for p in self.elements)
        return self._orders

    # -- distinguished subgroups ---------------------------------------------

    def trivial_subgroup(self) -> "Subgroup":
        return Subgroup._from_closed(self, (0,))

    def full_subgroup(self) -> "Subgroup":
        return Subgroup._from_closed(self, tuple(range(self.order)))

    def closure_indices(self, seed: Iterable[int]) -> tuple[int, ...]:
        """Indices of the subgroup generated by the given element indices."""
        mul = self.mul_rows
        gens = sorted(set(seed) - {0})
        if not gens:
            return (0,)
        members = {0}
        members.update(gens)
        frontier = list(members)
        while frontier:
            nxt = []
            for x in frontier:
                row = mul[x]
                for g in gens:
                    y = row[g]
                    if y not in members:
                        members.add(y)
                        nxt.append(y)
            frontier = nxt
        return tuple(sorted(members))


class Subgroup:
    """A subgroup of a parent :class:`Group`, stored as sorted element indices.

    The public constructor verifies closure (and therefore Lagrange); internal
    code that already knows the set is closed uses ``_from_closed``.
    Subgroups compare by member set within the same parent; comparing across
    parents raises ValidationError rather than silently returning False.
    """

    __slots__ = ("parent", "indices", "index_set", "order", "_gens")

    def __init__(self, parent: Group, members: Iterable):
        idx = _member_indices(parent, members)
        _check_closed(parent, idx)
        self.parent = parent
        self.indices = idx
        self.index_set = frozenset(idx)
        self.order = len(idx)
        self._gens: tuple[int, ...] | None = None
        if parent.order % self.order != 0:
            raise ValidationError(  # unreachable for a closed set; kept as a guard
                f"subgroup order {self.order} does not divide {parent.order}")

    @classmethod
    def _from_closed(cls, parent: Group, indices: tuple[int, ...]) -> "Subgroup":
        obj = object.__new__(cls)
        obj.parent = parent
        obj.indices = indices
        obj.index_set = frozenset(indices)
        obj.order = len(indices)
        obj._gens = None
        return obj

    # -- members -------------------------------------------------------------

    @property
    def members(self) -> tuple[Perm, ...]:
        els = self.parent.elements
        return tuple(els[i] for i in self.indices)

    def contains_perm(self, perm: Perm) -> bool:
        i = self.parent._index.get(perm)
        return i is not None and i in self.index_set

    def contains(self, other: "Subgroup") -> bool:
        self._same_parent(other)
        return other.index_set <= self.index_set

    def generating_indices(self) -> tuple[int, ...]:
        """A small deterministic generating set (greedy over sorted indices)."""
        if self._gens is None:
            gens: list[int] = []
            covered: set[int] = {0}
            for i in self.indices:
                if i not in covered:
                    gens.append(i)
                    covered = set(self.parent.closure_indices(gens))
            self._gens = tuple(gens)
        return self._gens

    @property
    def generators(self) -> tuple[Perm, ...]:
        els = self.parent.elements
        return tuple(els[i] for i in self.generating_indices())

    def as_group(self) -> Group:
        """This subgroup re-anchored as a Group in its own right."""
        gens = self.generators or (identity(self.parent.degree),)
        return Group(self.parent.degree, gens, self.members)

    # -- comparisons ----------------------------------------------------------

    def _same_parent(self, other: "Subgroup") -> None:
        if self.parent is not other.parent:
            raise ValidationError(
                "subgroups anchored to different parent groups cannot be "
                "compared; move one across with explicit membership first")

    def __eq__(self, other) -> bool:
        if not isinstance(other, Subgroup):
            return NotImplemented
        self._same_parent(other)
        return self.indices == other.indices

    def __hash__(self) -> int:
        return hash((id(self.parent), self.indices))

    @property
    def sort_key(self) -> tuple[int, tuple[int, ...]]:
        return (self.order, self.indices)

    def __repr__(self) -> str:
        gens = ", ".join(cycle_string(g) for g in self.generators) or "()"
        return f"<Subgroup of order {self.order} <{gens}>>"


def _member_indices(parent: Group, members: Iterable) -> tuple[int, ...]:
    idx: set[int] = set()
    for m in members:
        if isinstance(m, int) and not isinstance(m, bool):
            if not 0 <= m < parent.order:
                raise ValidationError(f"element index {m} out of range")
            idx.add(m)
        else:
            idx.add(parent.index_of(tuple(m)))
    if not idx:
        raise ValidationError("a subgroup needs at least the identity")
    return tuple(sorted(idx))


def _check_closed(parent: Group, indices: tuple[int, ...]) -> None:
    if 0 not in indices:
        raise ValidationError("member set does not contain the identity")
    mul = parent.mul_rows
    index_set = set(indices)
    for a in indices:
        row = mul[a]
        for b in indices:
            if row[b] not in index_set:
                raise ValidationError(
                    "member set is not closed under multiplication "
                    f"(product of elements {a} and {b} falls outside)")


@dataclass(frozen=True)
class GroupMap:
    """A map between (sub)groups given by an explicit pointwise assignment.

    ``assignment`` maps source member permutations to target permutations.
    ``inducing_element`` records one group element whose conjugation induces
    the map, when there is one (fusion morphisms); quotient projections leave
    it None.
    """

    source: object
    target: object
    assignment: dict
    inducing_element: Perm | None = None

    def apply(self, perm: Perm) -> Perm:
        try:
            return self.assignment[perm]
        except KeyError:
            raise ValidationError(
                f"{cycle_string(perm)} is not in the domain of this map") from None

    def assignment_key(self) -> tuple[tuple[Perm, Perm], ...]:
        """Canonical form: (source, image) pairs sorted by source."""
        return tuple(sorted(self.assignment.items()))

    def is_homomorphism(self) -> bool:
        items = list(self.assignment.items())
        amap = self.assignment
        for x, fx in items:
            for y, fy in items:
                if amap.get(compose(x, y)) != compose(fx, fy):
                    return False
        return True

    def kernel_members(self) -> tuple[Perm, ...]:
        n = len(next(iter(self.assignment.values())))
        e = identity(n)
        return tuple(sorted(x for x, fx in self.assignment.items() if fx == e))

    def __repr__(self) -> str:
        return (f"<GroupMap on {len(self.assignment)} elements"
                + (f" induced by {cycle_string(self.inducing_element)}"
                   if self.inducing_element is not None else "") + ">")


# -- construction -------------------------------------------------------------

def generate_group(degree: int, generators: Sequence, *,
                   limits: Limits = DEFAULT_LIMITS) -> Group:
    """Close a generating set of permutations into a Group.

    Generators are validated; the degree cap and order cap are enforced.
    A group with no generators is the trivial group on ``degree`` points.
    """
    if not isinstance(degree, int) or degree < 1:
        raise ValidationError(f"degree must be a positive integer, got {degree!r}")
    if degree > limits.degree_cap:
        raise CapacityError(
            f"degree {degree} exceeds the cap of {limits.degree_cap} points",
            cap_name="degree_cap", cap_value=limits.degree_cap, reached=degree)
    gens: list[Perm] = []
    for raw in generators:
        g = validate_perm(raw)
        if len(g) != degree:
            raise ValidationError(
                f"generator {cycle_string(g)} has degree {len(g)}, expected {degree}")
        if g not in gens:
            gens.append(g)
    e = identity(degree)
    seen: set[Perm] = {e}
    frontier: list[Perm] = [e]
    while frontier:
        nxt: list[Perm] = []
        for x in frontier:
            for g in gens:
                y = compose(x, g)
                if y not in seen:
                    if len(seen) >= limits.order_cap:
                        raise CapacityError(
                            f"group order exceeds the cap of {limits.order_cap}",
                            cap_name="order_cap", cap_value=limits.order_cap,
                            reached=len(seen) + 1)
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return Group(degree, tuple(gens), tuple(sorted(seen)))


# -- pointwise operators -------------------------------------------------------

def _as_index_array(H: Subgroup) -> np.ndarray:
    return np.fromiter(H.indices, dtype=np.int64, count=H.order)


def _mask(G: Group, indices) -> np.ndarray:
    m = np.zeros(G.order, dtype=bool)
    m[list(indices)] = True
    return m


def conjugate_subgroup(H: Subgroup, g: Perm) -> Subgroup:
    """The conjugate ``H^g`` inside the same parent."""
    G = H.parent
    gi = G.index_of(g)
    row = G.conj_table[gi]
    img = tuple(sorted(int(row[i]) for i in H.indices))
    return Subgroup._from_closed(G, img)


def normalizer(G: Group, H: Subgroup) -> Subgroup:
    """``N_G(H)``, computed by a vectorized conjugation scan."""
    _check_anchor(G, H)
    idx = _as_index_array(H)
    images = np.sort(G.conj_table[:, idx], axis=1)
    ok = (images == idx[np.newaxis, :]).all(axis=1)
    return Subgroup._from_closed(G, tuple(int(i) for i in np.flatnonzero(ok)))


def centralizer(G: Group, H: Subgroup) -> Subgroup:
    """``C_G(H)``: everything that fixes each member of H under conjugation."""
    _check_anchor(G, H)
    idx = _as_index_array(H)
    ok = (G.conj_table[:, idx] == idx[np.newaxis, :]).all(axis=1)
    return Subgroup._from_closed(G, tuple(int(i) for i in np.flatnonzero(ok)))


def core(G: Group, H: Subgroup) -> Subgroup:
    """The largest normal subgroup of G contained in H."""
    _check_anchor(G, H)
    idx = _as_index_array(H)
    in_H = _mask(G, H.indices)
    # member k of H survives iff every conjugate of it stays inside H
    keep = in_H[G.conj_table[:, idx]].all(axis=0)
    return Subgroup._from_closed(G, tuple(int(i) for i in idx[keep]))


def subgroup_product(A: Subgroup, B: Subgroup) -> Subgroup:
    """The set product ``AB`` as a subgroup.

    Valid only when the product is closed (e.g. one factor normalizes the
    other); closure is re-checked and ValidationError raised otherwise.
    """
    A._same_parent(B)
    G = A.parent
    mul = G.mul_rows
    prod = {mul[a][b] for a in A.indices for b in B.indices}
    sub = tuple(sorted(prod))
    _check_closed(G, sub)
    return Subgroup._from_closed(G, sub)


def _check_anchor(G: Group, H: Subgroup) -> None:
    if H.parent is not G:
        raise ValidationError("subgroup is not anchored to this group")


# -- Sylow subgroups -----------------------------------------------------------

def sylow_subgroup(G: Group, p: int, *, _offset: int = 0) -> Subgroup:
    """A Sylow p-subgroup, found by normalizer climbing.

    Deterministic: at each step the least eligible p-element is adjoined.
    ``_offset`` rotates that choice and exists so tests can reach different
    conjugates; all return values for the same group are conjugate.
    If p does not divide the order, the trivial subgroup is returned.
    """
    if not is_prime(p):
        raise ValidationError(f"p must be prime, got {p}")
    target = p_part(G.order, p)
    orders = G.element_orders
    current = G.trivial_subgroup()
    steps = 0
    while current.order < target:
        steps += 1
        if steps > 2 * len(bin(target)):
            return _sylow_exhaustive(G, p, target)
        N = normalizer(G, current)
        candidates = [i for i in N.indices
                      if i not in current.index_set
                      and orders[i] != 1 and p_part(orders[i], p) == orders[i]]
        if not candidates:
            return _sylow_exhaustive(G, p, target)
        pick = candidates[_offset % len(candidates)] if current.order == 1 \
            else candidates[0]
        grown = G.closure_indices(list(current.indices) + [pick])
        current = Subgroup._from_closed(G, grown)
    return current


def _sylow_exhaustive(G: Group, p: int, target: int) -> Subgroup:
    """Fallback: breadth-first growth through all p-subgroups (tiny groups only)."""
    warnings.warn(
        f"sylow_subgroup fell back to exhaustive search for a group of order "
        f"{G.order} at p={p}", RuntimeWarning, stacklevel=3)
    orders = G.element_orders
    p_elts = [i for i in range(G.order)
              if orders[i] != 1 and p_part(orders[i], p) == orders[i]]
    seen = {(0,)}
    layer = [(0,)]
    best = (0,)
    while layer:
        nxt = []
        for sub in layer:
            if len(sub) == target:
                return Subgroup._from_closed(G, sub)
            member_set = set(sub)
            for x in p_elts:
                if x in member_set:
                    continue
                grown = G.closure_indices(list(sub) + [x])
                if p_part(len(grown), p) != len(grown):
                    continue
                if grown not in seen:
                    seen.add(grown)
                    nxt.append(grown)
                    if len(grown) > len(best):
                        best = grown
        layer = nxt
    return Subgroup._from_closed(G, best)


# -- quotients -----------------------------------------------------------------

def quotient_group(G: Group, N: Subgroup, *,
                   limits: Limits = DEFAULT_LIMITS) -> tuple[Group, GroupMap]:
    """The quotient ``G/N`` acting on right cosets, with its projection.

    N must be normal; a violating conjugator is named otherwise.  The
    projection map is re-checked to be a homomorphism with kernel exactly N.
    """
    _check_anchor(G, N)
    conj = G.conj_table
    n_idx = _as_index_array(N)
    for g in G.generators:
        gi = G.index_of(g)
        img = np.sort(conj[gi, n_idx])
        if not (img == n_idx).all():
            raise ValidationError(
                f"subgroup is not normal: conjugation by {cycle_string(g)} "
                f"moves it")
    index = G.order // N.order
    if index > limits.degree_cap:
        raise CapacityError(
            f"quotient degree {index} exceeds the cap of {limits.degree_cap}",
            cap_name="degree_cap", cap_value=limits.degree_cap, reached=index)
    mul = G.mul_rows
    coset_of = [-1] * G.order
    reps: list[int] = []
    for i in range(G.order):
        if coset_of[i] == -1:
            c = len(reps)
            reps.append(i)
            for n in N.indices:
                coset_of[mul[n][i]] = c
    # the permutation each x in G induces on the coset space
    images: dict[Perm, Perm] = {}
    for xi, x in enumerate(G.elements):
        images[x] = tuple(coset_of[mul[r][xi]] for r in reps)
    quot_elements = tuple(sorted(set(images.values())))
    gen_imgs: list[Perm] = []
    for g in G.generators:
        img = images[g]
        if img not in gen_imgs and img != identity(index):
            gen_imgs.append(img)
    Q = Group(index, tuple(gen_imgs), quot_elements)
    proj = GroupMap(source=G, target=Q, assignment=images)
    if tuple(sorted(proj.kernel_members())) != N.members:
        raise ValidationError("projection kernel does not match N")  # guard
    return Q, proj


# -- structure flags -----------------------------------------------------------

@dataclass(frozen=True)
class StructureFlags:
    """Cheap isomorphism-invariant fingerprints of a (sub)group."""

    order: int
    abelian: bool
    cyclic: bool
    elementary_abelian: bool
    exponent: int
    involutions: int
    prime_power_base: int | None  # q when the order is q^k with k >= 1

    def is_p_group(self, p: int) -> bool:
        return self.order == 1 or self.prime_power_base == p


def structure_flags(H) -> StructureFlags:
    """Flags for a Group or Subgroup."""
    if isinstance(H, Group):
        members = H.elements
        orders = H.element_orders
        gens = H.generators
    elif isinstance(H, Subgroup):
        members = H.members
        all_orders = H.parent.element_orders
        orders = tuple(all_orders[i] for i in H.indices)
        gens = H.generators
    else:
        raise ValidationError(f"expected a Group or Subgroup, got {type(H).__name__}")
    n = len(members)
    abelian = all(compose(a, b) == compose(b, a)
                  for i, a in enumerate(gens) for b in gens[i + 1:])
    exponent = math.lcm(*orders) if orders else 1
    cyclic = max(orders, default=1) == n
    elem_ab = abelian and (n == 1 or (is_prime(exponent) and exponent == min(
        o for o in orders if o > 1)))
    base = None
    if n > 1:
        q = min(q for q in range(2, n + 1) if n % q == 0)
        if p_part(n, q) == n:
            base = q
    return StructureFlags(order=n, abelian=abelian, cyclic=cyclic,
                          elementary_abelian=elem_ab, exponent=exponent,
                          involutions=sum(1 for o in orders if o == 2),
                          prime_power_base=base)


def subgroup_label(H) -> str:
    """A short human label: 1, C6, V4, E8, D8, Q8, or G<n> as a fallback."""
    f = structure_flags(H)
    if f.order == 1:
        return "1"
    if f.cyclic:
        return f"C{f.order}"
    if f.elementary_abelian:
        return "V4" if f.order == 4 else f"E{f.order}"
    if f.abelian:
        return f"A{f.order}ab"
    if f.order == 8 and f.involutions == 1:
        return "Q8"
    if f.involutions >= 2:
        orders = (H.element_orders if isinstance(H, Group)
                  else tuple(H.parent.element_orders[i] for i in H.indices))
        if max(orders) == f.order // 2:
            return f"D{f.order}"
    return f"G{f.order}"
