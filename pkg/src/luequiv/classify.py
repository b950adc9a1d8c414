"""UC orbits, U-equivalence classes and full partitions of standard GPM sets."""

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations, islice
from math import comb
import logging

import numpy as np

from .clifford import CollisionError, local_clifford_array
from .gpm import IDENTITY, Gpm, GpmSet, power_vector, right_translate, standardize_all
from .reduce import reduce

log = logging.getLogger(__name__)

DEFAULT_CAP = 10**7


class ResourceCapExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class Orbit:
    d: int
    sets: tuple

    def __len__(self):
        return len(self.sets)

    def __iter__(self):
        return iter(self.sets)

    def __contains__(self, gset):
        return gset in self._lookup

    @property
    def _lookup(self):
        # frozen dataclass: cache the membership set on first use
        try:
            return self.__dict__["_members"]
        except KeyError:
            members = frozenset(self.sets)
            object.__setattr__(self, "_members", members)
            return members

    def union(self, other):
        return Orbit(self.d, tuple(sorted(set(self.sets) | set(other.sets), key=GpmSet.key)))


def _orbit_from_codes(codes, d):
    sets = []
    for row in codes:
        sets.append(GpmSet(d, tuple(Gpm(int(c) // d, int(c) % d) for c in row)))
    return Orbit(d, tuple(sets))


def apply_operators(reduced, ops):
    """Images of ``reduced`` under every row ``(u1, v1, u2, v2)`` of ``ops``.

    Returns the distinct image sets as a sorted array of member codes
    ``s*d + t`` (one row per set, codes ascending within a row).
    """
    d = reduced.d
    pts = np.array(reduced.members, dtype=np.int64)          # (n, 2)
    u1, v1, u2, v2 = (ops[:, k:k + 1] for k in range(4))     # (K, 1)
    s = (u1 * pts[:, 0] + u2 * pts[:, 1]) % d                 # (K, n)
    t = (v1 * pts[:, 0] + v2 * pts[:, 1]) % d
    codes = np.sort(s * d + t, axis=1)
    if codes.shape[1] > 1 and (np.diff(codes, axis=1) == 0).any():
        raise CollisionError(f"an enumerated operator collapses members of {reduced}")
    return np.unique(codes, axis=0)


@lru_cache(maxsize=4096)
def uc_orbit(gset):
    """All standard sets UC-equivalent to the standard set ``gset``."""
    if not gset.is_standard:
        raise ValueError(f"uc_orbit expects a standard set, got {gset}")
    red = reduce(gset)
    ops = local_clifford_array(red.context)
    orbit = _orbit_from_codes(apply_operators(red.reduced, ops), gset.d)
    assert red.reduced in orbit
    return orbit


def uc_orbits_of_standardizations(gset, order=None):
    """Distinct UC orbits of the standardizations, in order of first appearance.

    Returns ``[(index, orbit), ...]`` where ``index`` is the position (in
    ``order``, canonical order by default) of the member whose
    right-translation first produced the orbit.
    """
    if order is None:
        order = gset.members
    seen = []
    for i, g in enumerate(order):
        m = right_translate(gset, g)
        if any(m in orb for _, orb in seen):
            continue
        seen.append((i, uc_orbit(m)))
    return seen


def u_class(gset):
    """All standard sets U-equivalent to ``gset`` (standard or not)."""
    members = set()
    for m in standardize_all(gset):
        members.update(uc_orbit(m).sets)
    return Orbit(gset.d, tuple(sorted(members, key=GpmSet.key)))


def _check_pair(m, n):
    if m.d != n.d:
        raise ValueError(f"dimension mismatch: {m.d} vs {n.d}")
    if len(m) != len(n):
        raise ValueError(f"cardinality mismatch: {len(m)} vs {len(n)}")


def decide_uc(m, n):
    """UC-equivalence of two standard sets; power vectors are compared first."""
    _check_pair(m, n)
    if power_vector(m) != power_vector(n):
        return False
    if not (m.is_standard and n.is_standard):
        raise ValueError("decide_uc expects standard sets")
    return n in uc_orbit(m)


def decide_u(m, n):
    """U-equivalence; ``n`` may be non-standard, in which case it is standardized first."""
    _check_pair(m, n)
    if not n.is_standard:
        n = standardize_all(n)[0]
    return n in u_class(m)


def standard_sets(d, n):
    """All standard n-sets on C^d in lexicographic order."""
    rest = [Gpm(s, t) for s in range(d) for t in range(d) if (s, t) != (0, 0)]
    for combo in combinations(rest, n - 1):
        yield GpmSet(d, (IDENTITY,) + combo)


@dataclass(frozen=True)
class EquivalenceClass:
    representative: GpmSet
    size: int
    members: tuple = field(default=(), repr=False)
    total_size: int | None = None


@dataclass(frozen=True)
class Partition:
    d: int
    n: int
    classes: tuple

    @property
    def standard_total(self):
        return sum(c.size for c in self.classes)

    def to_dict(self, with_members=False):
        out = {"d": self.d, "n": self.n, "classes": []}
        for c in self.classes:
            row = {"representative": str(c.representative), "size": c.size}
            if c.total_size is not None:
                row["total_size"] = c.total_size
            if with_members:
                row["members"] = [str(m) for m in c.members]
            out["classes"].append(row)
        return out


def total_class_size(members):
    """Number of all (not only standard) n-sets U-equivalent to the class."""
    d = members[0].d
    seen = set()
    for m in members:
        for gs in range(d):
            for gt in range(d):
                seen.add(tuple(sorted(((s + gs) % d, (t + gt) % d) for s, t in m)))
    return len(seen)


def _u_class_keys(gset):
    return [m.members for m in u_class(gset).sets]


def classify_all(d, n, *, cap=DEFAULT_CAP, workers=1, with_totals=False, batch=None):
    """Partition every standard n-set on C^d into U-equivalence classes.

    Sets are swept in lexicographic order; each unvisited set seeds a new
    class and is its representative.  With ``workers > 1`` the classes of
    the next few unvisited seeds are computed in parallel and then accepted
    in sweep order, discarding seeds already claimed by an earlier class, so
    the result is identical to the sequential sweep.
    """
    if d < 3:
        raise ValueError(f"dimension must be >= 3, got {d}")
    if not 1 <= n <= d * d:
        raise ValueError(f"set size must be in [1, {d * d}], got {n}")
    count = comb(d * d - 1, n - 1)
    if count > cap:
        raise ResourceCapExceeded(f"{count} standard sets exceed the cap of {cap}")

    visited = set()
    classes = []

    def accept(seed, keys):
        members = tuple(GpmSet(d, k) for k in keys)
        assert members[0] == seed, "seed must be the least member of its class"
        visited.update(keys)
        total = total_class_size(members) if with_totals else None
        classes.append(EquivalenceClass(seed, len(members), members, total))

    sweep = standard_sets(d, n)
    if workers <= 1:
        for seed in sweep:
            if seed.members not in visited:
                accept(seed, _u_class_keys(seed))
    else:
        batch = batch or 4 * workers
        with ProcessPoolExecutor(max_workers=workers) as pool:
            while True:
                seeds = list(islice((s for s in sweep if s.members not in visited), batch))
                if not seeds:
                    break
                for seed, keys in zip(seeds, pool.map(_u_class_keys, seeds)):
                    if seed.members not in visited:
                        accept(seed, keys)
    log.info("d=%d n=%d: %d classes over %d standard sets", d, n, len(classes), count)
    assert sum(c.size for c in classes) == count
    return Partition(d, n, tuple(classes))
