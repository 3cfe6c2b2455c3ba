"""Built-in group families, each realized on a small natural point set.

Naming convention: dihedral and dicyclic groups are named by their ORDER
(``dihedral(8)`` is the symmetry group of the square), never by the polygon
index.  ``builtin_group`` parses textual specs like ``"dihedral(8)"`` or
``"direct_product(symmetric(3), cyclic(3))"``.
"""

from __future__ import annotations

import re

from .errors import CapacityError, ValidationError
from .groups import Group, generate_group, is_prime
from .limits import DEFAULT_LIMITS, Limits
from .perms import Perm, identity

__all__ = [
    "cyclic", "dihedral", "dicyclic", "symmetric", "alternating",
    "elementary_abelian", "heisenberg", "frobenius21", "psl2",
    "direct_product", "builtin_group", "BUILTIN_FAMILIES",
]


def cyclic(n: int, *, limits: Limits = DEFAULT_LIMITS) -> Group:
    """Cyclic group of order n, as an n-cycle on n points."""
    if not isinstance(n, int) or n < 1:
        raise ValidationError(f"cyclic order must be a positive integer, got {n!r}")
    if n == 1:
        return generate_group(1, [], limits=limits)
    gen = tuple((i + 1) % n for i in range(n))
    return generate_group(n, [gen], limits=limits)


def dihedral(order: int, *, limits: Limits = DEFAULT_LIMITS) -> Group:
    """Dihedral group named by its order (order = 2n, n >= 2)."""
    if not isinstance(order, int) or order < 4 or order % 2:
        raise ValidationError(
            f"dihedral order must be an even integer >= 4, got {order!r}")
    n = order // 2
    if n == 2:
        # the Klein four group, realized on 4 points
        return generate_group(4, [(1, 0, 2, 3), (0, 1, 3, 2)], limits=limits)
    rot = tuple((i + 1) % n for i in range(n))
    ref = tuple((n - i) % n for i in range(n))
    return generate_group(n, [rot, ref], limits=limits)


def dicyclic(order: int, *, limits: Limits = DEFAULT_LIMITS) -> Group:
    """Dicyclic group of the given order (order = 4n, n >= 2 gives Q8, ...).

    Realized by its right regular representation:  elements are a^i b^j with
    a of order 2n, b^2 = a^n and b^-1 a b = a^-1.  ``dicyclic(8)`` is the
    quaternion group.
    """
    if not isinstance(order, int) or order < 8 or order % 4:
        raise ValidationError(
            f"dicyclic order must be a multiple of 4 and >= 8, got {order!r}")
    two_n = order // 2

    def idx(i: int, j: int) -> int:
        return j * two_n + (i % two_n)

    def right_mul(k: int, l: int) -> Perm:
        # (a^i b^j) * (a^k b^l)
        images = [0] * order
        for j in (0, 1):
            for i in range(two_n):
                if j == 0:
                    ni, nj = i + k, l
                else:
                    ni, nj = i - k, 1 + l
                if nj == 2:
                    ni, nj = ni + two_n // 2, 0
                images[idx(i, j)] = idx(ni, nj)
        return tuple(images)

    a = right_mul(1, 0)
    b = right_mul(0, 1)
    G = generate_group(order, [a, b], limits=limits)
    if G.order != order:
        raise ValidationError("dicyclic construction produced the wrong order")
    return G


def symmetric(n: int, *, limits: Limits = DEFAULT_LIMITS) -> Group:
    if not isinstance(n, int) or n < 1:
        raise ValidationError(f"symmetric degree must be a positive integer, got {n!r}")
    if n == 1:
        return generate_group(1, [], limits=limits)
    gens = [(1, 0) + tuple(range(2, n)), tuple(range(1, n)) + (0,)]
    if n == 2:
        gens = [(1, 0)]
    return generate_group(n, gens, limits=limits)


def alternating(n: int, *, limits: Limits = DEFAULT_LIMITS) -> Group:
    if not isinstance(n, int) or n < 3:
        raise ValidationError(f"alternating degree must be >= 3, got {n!r}")
    gens = []
    for i in range(n - 2):
        images = list(range(n))
        images[i], images[i + 1], images[i + 2] = images[i + 1], images[i + 2], images[i]
        gens.append(tuple(images))
    return generate_group(n, gens, limits=limits)


def elementary_abelian(p: int, k: int, *, limits: Limits = DEFAULT_LIMITS) -> Group:
    """(C_p)^k as k disjoint p-cycles."""
    if not is_prime(p):
        raise ValidationError(f"p must be prime, got {p!r}")
    if not isinstance(k, int) or k < 1:
        raise ValidationError(f"rank must be a positive integer, got {k!r}")
    degree = p * k
    gens = []
    for block in range(k):
        images = list(range(degree))
        for i in range(p):
            images[block * p + i] = block * p + (i + 1) % p
        gens.append(tuple(images))
    return generate_group(degree, gens, limits=limits)


def heisenberg(p: int, *, limits: Limits = DEFAULT_LIMITS) -> Group:
    """Unitriangular 3x3 matrices over F_p, acting on the p^3 column vectors.

    Order p^3; for odd p the exponent is p (extraspecial of exponent p).
    """
    if not is_prime(p):
        raise ValidationError(f"p must be prime, got {p!r}")
    degree = p ** 3

    def encode(x: int, y: int, z: int) -> int:
        return (x * p + y) * p + z

    def matrix_perm(a: int, b: int, c: int) -> Perm:
        # [[1,a,c],[0,1,b],[0,0,1]] acting on column vectors (x,y,z)
        images = [0] * degree
        for x in range(p):
            for y in range(p):
                for z in range(p):
                    images[encode(x, y, z)] = encode(
                        (x + a * y + c * z) % p, (y + b * z) % p, z)
        return tuple(images)

    return generate_group(degree, [matrix_perm(1, 0, 0), matrix_perm(0, 1, 0)],
                          limits=limits)


def frobenius21(*, limits: Limits = DEFAULT_LIMITS) -> Group:
    """The Frobenius group of order 21 on 7 points (C7 : C3)."""
    rot = tuple((i + 1) % 7 for i in range(7))
    mul2 = tuple((2 * i) % 7 for i in range(7))
    return generate_group(7, [rot, mul2], limits=limits)


# -- PSL(2, q) over small fields ------------------------------------------------

_IRREDUCIBLE = {
    # field size -> (p, d, coefficients of the reduction of t^d, low degree first)
    4: (2, 2, (1, 1)),    # t^2 = t + 1
    8: (2, 3, (1, 1, 0)),  # t^3 = t + 1
    9: (3, 2, (2, 0)),     # t^2 = 2  (i.e. t^2 + 1 = 0)
}


class _GF:
    """Arithmetic tables for GF(q), q = p^d, elements encoded as ints in base p."""

    def __init__(self, q: int):
        if is_prime(q):
            p, d, red = q, 1, ()
        elif q in _IRREDUCIBLE:
            p, d, red = _IRREDUCIBLE[q]
        else:
            raise ValidationError(f"no field table for size {q}")
        self.q, self.p, self.d = q, p, d
        self.red = red

    def _to_poly(self, a: int) -> list[int]:
        out = []
        for _ in range(self.d):
            out.append(a % self.p)
            a //= self.p
        return out

    def _from_poly(self, coeffs: list[int]) -> int:
        val = 0
        for c in reversed(coeffs):
            val = val * self.p + c % self.p
        return val

    def add(self, a: int, b: int) -> int:
        pa, pb = self._to_poly(a), self._to_poly(b)
        return self._from_poly([(x + y) % self.p for x, y in zip(pa, pb)])

    def neg(self, a: int) -> int:
        return self._from_poly([(-x) % self.p for x in self._to_poly(a)])

    def mul(self, a: int, b: int) -> int:
        pa, pb = self._to_poly(a), self._to_poly(b)
        prod = [0] * (2 * self.d - 1)
        for i, x in enumerate(pa):
            for j, y in enumerate(pb):
                prod[i + j] = (prod[i + j] + x * y) % self.p
        # reduce degrees >= d using t^d = red
        for deg in range(2 * self.d - 2, self.d - 1, -1):
            c = prod[deg]
            if c:
                prod[deg] = 0
                for k, r in enumerate(self.red):
                    prod[deg - self.d + k] = (prod[deg - self.d + k] + c * r) % self.p
        return self._from_poly(prod[: self.d])

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 has no inverse")
        for b in range(1, self.q):
            if self.mul(a, b) == 1:
                return b
        raise ValidationError("field table corrupt")  # unreachable


def psl2(q: int, *, limits: Limits = DEFAULT_LIMITS) -> Group:
    """PSL(2, q) acting on the projective line (q affine points plus infinity).

    Supported q: 4, 5, 7, 8, 9.  Point q is the point at infinity.
    Generated by the translations x -> x + e (e a basis element) and the
    inversion x -> -1/x.
    """
    if q not in (4, 5, 7, 8, 9):
        raise ValidationError(
            f"psl2 supports q in (4, 5, 7, 8, 9), got {q!r}")
    gf = _GF(q)
    infinity = q
    degree = q + 1

    def translation(e: int) -> Perm:
        images = list(range(degree))
        for x in range(q):
            images[x] = gf.add(x, e)
        return tuple(images)

    def inversion() -> Perm:
        images = [0] * degree
        for x in range(q):
            images[x] = infinity if x == 0 else gf.neg(gf.inv(x))
        images[infinity] = 0
        return tuple(images)

    gens = [translation(gf.p ** i if gf.d > 1 else 1) for i in range(gf.d)]
    gens.append(inversion())
    return generate_group(degree, gens, limits=limits)


def direct_product(a: Group, b: Group, *, limits: Limits = DEFAULT_LIMITS) -> Group:
    """External direct product, acting on the disjoint union of the two domains."""
    if not isinstance(a, Group) or not isinstance(b, Group):
        raise ValidationError("direct_product expects two Group arguments")
    degree = a.degree + b.degree
    gens: list[Perm] = []
    for g in a.generators:
        gens.append(tuple(g) + tuple(range(a.degree, degree)))
    for g in b.generators:
        gens.append(tuple(range(a.degree)) + tuple(x + a.degree for x in g))
    G = generate_group(degree, gens, limits=limits)
    if G.order != a.order * b.order:
        raise ValidationError("direct product closure produced the wrong order")
    return G


# -- textual specs ---------------------------------------------------------------

BUILTIN_FAMILIES = {
    "cyclic": (cyclic, (int,)),
    "dihedral": (dihedral, (int,)),
    "dicyclic": (dicyclic, (int,)),
    "symmetric": (symmetric, (int,)),
    "alternating": (alternating, (int,)),
    "elementary_abelian": (elementary_abelian, (int, int)),
    "heisenberg": (heisenberg, (int,)),
    "frobenius21": (frobenius21, ()),
    "psl2": (psl2, (int,)),
    "direct_product": (direct_product, ("group", "group")),
}

_SPEC_NAME = re.compile(r"\s*([a-z_][a-z0-9_]*)\s*")


def builtin_group(spec: str, *, limits: Limits = DEFAULT_LIMITS) -> Group:
    """Parse and build a builtin spec like ``"dihedral(8)"``.

    Nested specs are allowed where a family takes group arguments, e.g.
    ``"direct_product(symmetric(3), cyclic(3))"``.
    """
    if not isinstance(spec, str):
        raise ValidationError(f"builtin spec must be a string, got {type(spec).__name__}")
    group, rest = _parse_spec(spec, 0, limits)
    if rest.strip():
        raise ValidationError(f"trailing text after spec: {rest!r}")
    return group


def _parse_spec(text: str, pos: int, limits: Limits) -> tuple[Group, str]:
    m = _SPEC_NAME.match(text, pos)
    if not m:
        raise ValidationError(f"expected a family name at: {text[pos:]!r}")
    name = m.group(1)
    if name not in BUILTIN_FAMILIES:
        raise ValidationError(
            f"unknown builtin family {name!r}; known: "
            + ", ".join(sorted(BUILTIN_FAMILIES)))
    fn, argspec = BUILTIN_FAMILIES[name]
    rest = text[m.end():]
    args: list = []
    if rest.startswith("("):
        rest = rest[1:]
        while True:
            rest = rest.lstrip()
            if rest.startswith(")"):
                rest = rest[1:]
                break
            if args:
                if not rest.startswith(","):
                    raise ValidationError(f"expected ',' or ')' at: {rest!r}")
                rest = rest[1:].lstrip()
            num = re.match(r"[0-9]+", rest)
            if num:
                args.append(int(num.group(0)))
                rest = rest[num.end():]
            else:
                sub, rest = _parse_spec(rest, 0, limits)
                args.append(sub)
    if len(args) != len(argspec):
        raise ValidationError(
            f"{name} takes {len(argspec)} argument(s), got {len(args)}")
    for val, kind in zip(args, argspec):
        if kind is int and not isinstance(val, int):
            raise ValidationError(f"{name} expects integer arguments")
        if kind == "group" and not isinstance(val, Group):
            raise ValidationError(f"{name} expects group arguments")
    return fn(*args, limits=limits), rest
