"""Bring a standard GPM set into ``{I, Z^b, X^{s_i} Z^{t_i}}`` form with ``b | t_i``.

The chain alternates a Clifford step (send a member of least essential
power to ``Z^b``) with a division step (replace every other ``t_i`` by
``t_i mod b``).  Division steps do not change which unitaries are local
Clifford operators, but they do change the set, so two sets are tracked:

* ``working`` -- the remainder-substituted set the chain runs on; it ends
  in the required form and fixes the context ``(a, b)``;
* ``reduced`` -- the image of the *input* under the composed Clifford
  steps.  It is UC-equivalent to the input and lies in the group generated
  by ``X^a`` and ``Z^b``, so applying the enumerated operators to it
  yields the input's UC orbit.

When no division step fires (always the case for prime-power d) the two
coincide.
"""

from dataclasses import dataclass

from .arith import gcd_many
from .clifford import LocalCliffordContext, Symplectic2, apply_symplectic, clifford_to_z
from .gpm import IDENTITY, Gpm, GpmSet, essential_power


@dataclass(frozen=True)
class ReductionResult:
    reduced: GpmSet
    working: GpmSet
    context: LocalCliffordContext
    chain: tuple
    division_steps: int

    @property
    def clifford_steps(self):
        return len(self.chain)

    @property
    def composite(self):
        """Product of the chain, i.e. the matrix taking the input to ``reduced``."""
        out = Symplectic2.identity(self.context.d)
        for C in self.chain:
            out = C @ out
        return out


def _min_power_member(pairs, d):
    best = None
    for g in sorted(pairs):
        p = essential_power(g, d)
        if p and (best is None or p < best[0]):
            best = (p, g)
    return best


def is_lemma41_form(gset):
    """True iff ``gset`` holds ``Z^b`` for its least nonzero power b and every t is divisible by b."""
    found = _min_power_member(gset.members, gset.d)
    if found is None:
        return True
    b = found[0]
    return Gpm(0, b) in gset and all(t % b == 0 for _, t in gset)


def reduce(gset):
    """Run the Clifford / division chain on a standard set."""
    if not gset.is_standard:
        raise ValueError(f"reduce expects a standard set, got {gset}")
    d = gset.d
    work = set(gset.members)
    current = list(gset.members)
    chain = []
    divisions = 0
    while True:
        found = _min_power_member(work, d)
        if found is None:
            ctx = LocalCliffordContext(d, d, d)
            return ReductionResult(gset, gset, ctx, (), 0)
        b, g = found
        C = clifford_to_z(g, d)
        chain.append(C)
        work = {apply_symplectic(C, h) for h in work}
        current = [apply_symplectic(C, h) for h in current]
        zb = Gpm(0, b)
        assert zb in work
        if all(t % b == 0 for _, t in work):
            break
        work = {h if h == zb else Gpm(h.s, h.t % b) for h in work}
        divisions += 1

    a = gcd_many([s for s, _ in work] + [d])
    ctx = LocalCliffordContext(a, b, d)
    working = GpmSet.of(d, work)
    reduced = GpmSet.of(d, current)
    assert IDENTITY in reduced
    assert all(s % a == 0 and t % b == 0 for s, t in reduced)
    return ReductionResult(reduced, working, ctx, tuple(chain), divisions)
