"""Symplectic (exponent-pair) representation of Clifford and local Clifford operators.

A 2x2 matrix ``[[u1, u2], [v1, v2]]`` over Z_d acts on exponent columns by
left multiplication: ``(s, t) -> (u1 s + u2 t, v1 s + v2 t)``.  For a local
Clifford operator on the pair ``(X^a, Z^b)`` the first column gives the image
``X^{u1 a} Z^{v1 a}`` of ``X^a`` and the second the image of ``Z^b``.
"""

from dataclasses import dataclass
from functools import lru_cache
from math import gcd

import numpy as np

from .arith import ext_gcd, gcd_many
from .gpm import Gpm, GpmSet


class CollisionError(ValueError):
    """Two members of a set were sent to the same exponent pair."""


@dataclass(frozen=True)
class Symplectic2:
    u1: int
    v1: int
    u2: int
    v2: int
    d: int

    def __post_init__(self):
        for name in ("u1", "v1", "u2", "v2"):
            if not 0 <= getattr(self, name) < self.d:
                raise ValueError(f"{name} not reduced mod {self.d}")

    @classmethod
    def from_rows(cls, rows, d):
        (u1, u2), (v1, v2) = rows
        return cls(u1 % d, v1 % d, u2 % d, v2 % d, d)

    @classmethod
    def identity(cls, d):
        return cls(1, 0, 0, 1, d)

    @property
    def det(self):
        return (self.u1 * self.v2 - self.u2 * self.v1) % self.d

    def rows(self):
        return ((self.u1, self.u2), (self.v1, self.v2))

    def __matmul__(self, other):
        if other.d != self.d:
            raise ValueError("moduli differ")
        (a, b), (c, e) = self.rows()
        (p, q), (r, s) = other.rows()
        return Symplectic2.from_rows(((a * p + b * r, a * q + b * s),
                                      (c * p + e * r, c * q + e * s)), self.d)

    def __str__(self):
        return f"[{self.u1} {self.u2}; {self.v1} {self.v2}]"


@dataclass(frozen=True)
class LocalCliffordContext:
    """The pair ``(X^a, Z^b)`` on C^d; ``a == d`` means the X part is trivial."""

    a: int
    b: int
    d: int

    def __post_init__(self):
        if not (1 <= self.a <= self.d and self.d % self.a == 0):
            raise ValueError(f"a={self.a} must be a positive divisor of d={self.d}")
        if not (1 <= self.b <= self.d and self.d % self.b == 0):
            raise ValueError(f"b={self.b} must be a positive divisor of d={self.d}")


def apply_symplectic(S, g):
    d = S.d
    s, t = g
    return Gpm((S.u1 * s + S.u2 * t) % d, (S.v1 * s + S.v2 * t) % d)


def apply_symplectic_set(S, gset):
    if S.d != gset.d:
        raise ValueError("moduli differ")
    images = [apply_symplectic(S, g) for g in gset]
    if len(set(images)) != len(images):
        raise CollisionError(f"{S} is not injective on {gset}")
    return GpmSet.of(gset.d, images)


def clifford_to_z(g, d):
    """Determinant-1 matrix sending ``X^s Z^t`` to ``Z^{gcd(s, t, d)}``.

    Composes the two constructive matrices: the first sends ``(s, t)`` to
    ``(0, gcd(s, t))``, the second sends ``(0, gcd(s, t))`` to
    ``(0, gcd(s, t, d))``.
    """
    s, t = g[0] % d, g[1] % d
    if s == 0 and t == 0:
        raise ValueError("the identity cannot be mapped to a nontrivial Z power")
    b, p1, q1 = ext_gcd(s, t)
    first = Symplectic2.from_rows(((t // b, -s // b), (p1, q1)), d)
    a, p2, q2 = ext_gcd(d, b)
    second = Symplectic2.from_rows(((b // a, -d // a), (p2, q2)), d)
    return second @ first


def check_theorem1(ctx, u1, v1, u2, v2):
    """The three gcd/congruence conditions for a local Clifford on ``(X^a, Z^b)``."""
    a, b, d = ctx.a, ctx.b, ctx.d
    na, nb = d // a, d // b
    det = u1 * v2 - u2 * v1
    return (gcd_many([u1, v1, na]) == 1
            and gcd_many([u2, v2, nb]) == 1
            and (det * a * b - a * b) % d == 0
            and gcd_many([det, na, nb]) == 1)


def check_prime_power_shortcut(ctx, u1, v1, u2, v2, p, alpha):
    """Prime-power form of the conditions, keeping only the one that can bind.

    With ``a = p^gamma`` and ``b = p^beta``: when ``gamma + beta < alpha`` the
    congruence on the determinant already forces it to be a unit, otherwise
    the congruence is automatic and only ``gcd(det, p) = 1`` is checked.
    ``a == d`` or ``b == d`` leaves a column with nothing to check.
    """
    a, b, d = ctx.a, ctx.b, ctx.d
    # a column whose modulus d/a or d/b is 1 carries no condition
    if a != d and gcd_many([u1, v1, p]) != 1:
        return False
    if b != d and gcd_many([u2, v2, p]) != 1:
        return False
    if a == d or b == d:
        return True
    det = u1 * v2 - u2 * v1
    gamma = _log(a, p)
    beta = _log(b, p)
    if gamma + beta < alpha:
        return (det * a * b - a * b) % d == 0
    return det % p != 0


def _log(n, p):
    k = 0
    while n % p == 0 and n > 1:
        n //= p
        k += 1
    return k


@lru_cache(maxsize=256)
def _local_clifford_array(a, b, d):
    na, nb = d // a, d // b
    u2, v2 = np.meshgrid(np.arange(nb), np.arange(nb), indexing="ij")
    u2 = u2.ravel().astype(np.int64)
    v2 = v2.ravel().astype(np.int64)
    col2_ok = np.gcd(np.gcd(u2, v2), nb) == 1
    u2, v2 = u2[col2_ok], v2[col2_ok]
    chunks = []
    ab = a * b
    for u1 in range(na):
        for v1 in range(na):
            if gcd_many([u1, v1, na]) != 1:
                continue
            det = u1 * v2 - u2 * v1
            ok = ((det * ab - ab) % d == 0) & (np.gcd(np.gcd(det, na), nb) == 1)
            if ok.any():
                k = int(ok.sum())
                chunks.append(np.column_stack([np.full(k, u1), np.full(k, v1), u2[ok], v2[ok]]))
    if not chunks:
        return np.zeros((0, 4), dtype=np.int64)
    out = np.concatenate(chunks).astype(np.int64)
    out.setflags(write=False)
    return out


def local_clifford_array(ctx):
    """All valid ``(u1, v1, u2, v2)`` rows for ``ctx``, row-major order, as an int64 array."""
    return _local_clifford_array(ctx.a, ctx.b, ctx.d)


def enumerate_local_cliffords(ctx):
    """Every local Clifford operator on ``(X^a, Z^b)``, one per valid quadruple.

    Ranges are ``0 <= u1, v1 < d/a`` and ``0 <= u2, v2 < d/b``; the order is
    row-major over ``(u1, v1, u2, v2)``.
    """
    return [Symplectic2(int(u1), int(v1), int(u2), int(v2), ctx.d)
            for u1, v1, u2, v2 in local_clifford_array(ctx)]


def lemma3_witness(u, a, d):
    """Permutation ``i + j a -> i + u j a`` of Z_d (``0 <= i < a``, ``0 <= j < d/a``).

    Returned as a list ``perm`` with ``perm[x]`` the image of basis index x.
    Conjugating by it sends ``X^a`` to ``X^{ua}`` and fixes ``Z^b`` whenever
    ``u a b = a b (mod d)``.
    """
    if d % a:
        raise ValueError(f"a={a} does not divide d={d}")
    if gcd(u, d // a) != 1:
        raise ValueError(f"u={u} is not coprime to d/a={d // a}")
    perm = [0] * d
    for j in range(d // a):
        for i in range(a):
            perm[i + j * a] = (i + u * j * a) % d
    return perm
