"""Generalized Pauli matrices as exponent pairs, and sets of them.

A GPM ``X^s Z^t`` on C^d is stored as the pair ``(s, t)`` reduced mod d.
Global phases are dropped everywhere, so products and daggers become
exponent arithmetic.  ``Z X = w X Z`` with ``w = exp(2 pi i / d)``.
"""

from dataclasses import dataclass
from typing import NamedTuple

from .arith import gcd_many


class Gpm(NamedTuple):
    s: int
    t: int

    def __str__(self):
        return f"({self.s},{self.t})"


IDENTITY = Gpm(0, 0)


@dataclass(frozen=True)
class GpmSet:
    """Canonical GPM set: members sorted lexicographically, no duplicates.

    Build with :meth:`of`, which reduces mod d and sorts.  Equality and
    hashing go through ``(d, members)``.
    """

    d: int
    members: tuple

    def __post_init__(self):
        if self.d < 3:
            raise ValueError(f"dimension must be >= 3, got {self.d}")
        if not self.members:
            raise ValueError("a GPM set needs at least one member")
        prev = None
        for g in self.members:
            if not (0 <= g[0] < self.d and 0 <= g[1] < self.d):
                raise ValueError(f"member {g} not reduced mod {self.d}")
            if prev is not None and not prev < g:
                raise ValueError("members must be sorted and distinct; use GpmSet.of")
            prev = g

    @classmethod
    def of(cls, d, pairs, *, allow_duplicates=False):
        reduced = [Gpm(s % d, t % d) for s, t in pairs]
        members = tuple(sorted(set(reduced)))
        if len(members) != len(reduced) and not allow_duplicates:
            raise ValueError(f"duplicate members in {reduced}")
        return cls(d, members)

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __contains__(self, g):
        return tuple(g) in self.members

    @property
    def is_standard(self):
        return self.members[0] == IDENTITY

    def key(self):
        return self.members

    def __str__(self):
        return "{" + ",".join(str(g) for g in self.members) + "}"


def essential_power(g, d):
    """gcd(s, t, d) for a non-identity GPM, 0 for the identity."""
    s, t = g[0] % d, g[1] % d
    if s == 0 and t == 0:
        return 0
    return gcd_many([s, t, d])


def essential_order(g, d):
    """Smallest k with ``(X^s Z^t)^k`` proportional to I, i.e. d / gcd(s, t, d)."""
    p = essential_power(g, d)
    return 1 if p == 0 else d // p


def power_vector(gset):
    return tuple(sorted(essential_power(g, gset.d) for g in gset))


def right_translate(gset, g):
    """Multiply every member on the right by ``g^dagger`` (phases dropped)."""
    d = gset.d
    return GpmSet.of(d, [(s - g[0], t - g[1]) for s, t in gset])


def standardize_all(gset, order=None):
    """Right-translates by each member, deduplicated in order of first appearance.

    ``order`` optionally lists the members in a preferred order (e.g. the
    order a set was written in); canonical order otherwise.
    """
    if order is None:
        order = gset.members
    elif GpmSet.of(gset.d, order) != gset:
        raise ValueError("order must list exactly the members of the set")
    out, seen = [], set()
    for g in order:
        m = right_translate(gset, g)
        if m not in seen:
            seen.add(m)
            out.append(m)
    return out


def commutation_exponent(g1, g2, d):
    """Exponent c with ``g2 g1 = w^c g1 g2``: ``s1 t2 - s2 t1 (mod d)``."""
    return (g1[0] * g2[1] - g2[0] * g1[1]) % d
