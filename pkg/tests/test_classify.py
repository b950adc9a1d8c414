import pytest
from hypothesis import HealthCheck, given, settings, strategies as st

from bruteforce import brute_uc_orbit
from luequiv.classify import (Orbit, ResourceCapExceeded, apply_operators, classify_all, decide_u,
                              decide_uc, standard_sets, total_class_size, u_class, uc_orbit,
                              uc_orbits_of_standardizations)
from luequiv.clifford import CollisionError, local_clifford_array, LocalCliffordContext
from luequiv.gpm import GpmSet, commutation_exponent, power_vector, standardize_all

C1 = GpmSet.of(6, [(0, 0), (0, 1), (0, 2), (0, 3)])
C3 = GpmSet.of(6, [(0, 0), (0, 1), (0, 2), (1, 0)])
K = GpmSet.of(4, [(0, 0), (0, 2), (2, 0), (2, 2)])
L = GpmSet.of(4, [(0, 0), (1, 0), (2, 0), (3, 0)])


def keys(orbit):
    return {m.members for m in orbit}


def test_uc_orbit_examples():
    orb = uc_orbit(C1)
    assert len(orb) == 24
    assert GpmSet.of(6, [(0, 0), (0, 2), (3, 0), (3, 4)]) in orb
    assert uc_orbit(K).sets == (K,)
    assert len(uc_orbit(GpmSet.of(4, [(0, 0), (1, 0), (0, 2), (3, 2)]))) == 12
    assert list(orb.sets) == sorted(orb.sets, key=GpmSet.key)


def test_uc_orbit_rejects_nonstandard():
    with pytest.raises(ValueError):
        uc_orbit(GpmSet.of(6, [(0, 1), (1, 1)]))


def test_u_class_examples():
    assert len(u_class(C1)) == 48
    assert len(u_class(C3)) == 576
    orbs = uc_orbits_of_standardizations(C3)
    assert [len(o) for _, o in orbs] == [144] * 4


def test_decide_examples():
    m = GpmSet.of(30, [(12, 0), (0, 3), (3, 4), (5, 15)])
    n = GpmSet.of(30, [(4, 6), (6, 12), (2, 0), (3, 5)])
    assert power_vector(n) == (1, 2, 2, 6)
    assert not decide_uc(m, n)
    assert decide_uc(C3, C3)
    z5 = GpmSet.of(5, [(0, 0), (0, 1), (0, 2), (0, 3), (0, 4)])
    mixed = GpmSet.of(5, [(0, 0), (0, 1), (0, 2), (1, 0), (4, 0)])
    assert power_vector(z5) == power_vector(mixed)
    assert not decide_uc(z5, mixed)
    assert decide_u(C1, GpmSet.of(6, [(0, 0), (1, 1), (2, 2), (3, 3)]))
    assert not decide_u(K, L)
    assert decide_u(C3, standardize_all(C3)[2])


def test_decide_errors():
    with pytest.raises(ValueError):
        decide_uc(C1, K)
    with pytest.raises(ValueError):
        decide_uc(C1, GpmSet.of(6, [(0, 0), (0, 1)]))
    with pytest.raises(ValueError):
        decide_uc(GpmSet.of(6, [(0, 1), (0, 5)]), GpmSet.of(6, [(1, 0), (5, 0)]))


def test_decide_u_nonstandard_second_argument():
    shifted = GpmSet.of(6, [(1, 1), (1, 2), (1, 3), (1, 4)])
    assert decide_u(C1, shifted)


def test_apply_operators_collision():
    ops = local_clifford_array(LocalCliffordContext(1, 1, 6))
    with pytest.raises(CollisionError):
        apply_operators(GpmSet.of(6, [(0, 0), (0, 3), (3, 0), (3, 3)]), ops[:1] * 0)


def test_orbit_union():
    a = Orbit(4, (K,))
    b = Orbit(4, (L,))
    assert set(a.union(b)) == {K, L}


@pytest.mark.parametrize("d", [4, 5, 6])
def test_class_representatives_against_brute_force(d):
    part = classify_all(d, 3)
    for cls in part.classes:
        for m in standardize_all(cls.representative):
            assert keys(uc_orbit(m)) == brute_uc_orbit(m.members, d)


def test_d6_four_set_representatives_against_brute_force():
    for cls in classify_all(6, 4).classes:
        for m in standardize_all(cls.representative):
            assert keys(uc_orbit(m)) == brute_uc_orbit(m.members, 6)


def test_d4_partition_against_brute_force():
    part = classify_all(4, 4)
    brute_classes = []
    seen = set()
    for m in standard_sets(4, 4):
        if m.members in seen:
            continue
        cls = set()
        for s in standardize_all(m):
            cls |= brute_uc_orbit(s.members, 4)
        seen |= cls
        brute_classes.append(cls)
    assert sorted(map(sorted, brute_classes)) == sorted(sorted(m.members for m in c.members)
                                                         for c in part.classes)


@st.composite
def standard_set(draw, dims=(4, 5, 6), sizes=(2, 3, 4)):
    d = draw(st.sampled_from(dims))
    n = draw(st.sampled_from(sizes))
    rest = draw(st.lists(st.tuples(st.integers(0, d - 1), st.integers(0, d - 1))
                         .filter(lambda g: g != (0, 0)), min_size=n - 1, max_size=n - 1, unique=True))
    return GpmSet.of(d, [(0, 0)] + rest)


@settings(max_examples=60, deadline=None)
@given(standard_set())
def test_uc_orbit_matches_brute_force(m):
    assert keys(uc_orbit(m)) == brute_uc_orbit(m.members, m.d)


@settings(max_examples=300, deadline=None, suppress_health_check=[HealthCheck.too_slow])
@given(standard_set(), st.randoms(use_true_random=False))
def test_orbit_symmetry_and_equality(m, rnd):
    orb = uc_orbit(m)
    other = rnd.choice(orb.sets)
    assert m in uc_orbit(other)
    assert keys(uc_orbit(other)) == keys(orb)


def test_orbit_invariants_on_classified_orbits():
    for d in (4, 6):
        for cls in classify_all(d, 4).classes:
            for start in standardize_all(cls.representative):
                orb = uc_orbit(start)
                pv = power_vector(start)
                forms = sorted(commutation_exponent(g, h, d) for g in start for h in start)
                forms_units = _unit_scalings(forms, d)
                for x in orb:
                    assert power_vector(x) == pv
                    fx = sorted(commutation_exponent(g, h, d) for g in x for h in x)
                    assert tuple(fx) in forms_units


def _unit_scalings(forms, d):
    from math import gcd
    return {tuple(sorted((u * f) % d for f in forms)) for u in range(1, d) if gcd(u, d) == 1}


def test_partition_sums():
    p4 = classify_all(4, 4)
    assert p4.standard_total == 455
    assert sorted(c.size for c in p4.classes) == sorted([1, 6, 192, 48, 16, 12, 24, 96, 48, 12])
    p6 = classify_all(6, 4)
    assert p6.standard_total == 6545
    assert len(p6.classes) == 31


def test_partition_structure():
    for d, n in ((4, 4), (5, 3), (6, 3)):
        part = classify_all(d, n)
        members = [m for c in part.classes for m in c.members]
        assert len(members) == len(set(members)) == part.standard_total
        for c in part.classes:
            assert c.representative == min(c.members, key=GpmSet.key)
        reps = [c.representative.members for c in part.classes]
        assert reps == sorted(reps)


def test_singletons():
    for d in (3, 4, 7):
        part = classify_all(d, 1)
        assert len(part.classes) == 1
        assert part.classes[0].representative == GpmSet.of(d, [(0, 0)])


def test_total_class_sizes():
    p = classify_all(6, 4, with_totals=True)
    assert sum(c.total_size for c in p.classes) == 58905
    p = classify_all(4, 4, with_totals=True)
    assert sum(c.total_size for c in p.classes) == 1820
    assert total_class_size([K]) == 4


def test_workers_determinism():
    base = classify_all(4, 4)
    for workers in (2, 3):
        assert classify_all(4, 4, workers=workers, batch=3) == base
    assert classify_all(6, 3, workers=2) == classify_all(6, 3)


def test_cap_and_argument_errors():
    with pytest.raises(ResourceCapExceeded):
        classify_all(6, 4, cap=100)
    with pytest.raises(ValueError):
        classify_all(2, 2)
    with pytest.raises(ValueError):
        classify_all(4, 17)


def test_to_dict_schema():
    data = classify_all(4, 4).to_dict(with_members=True)
    assert set(data) == {"d", "n", "classes"}
    assert set(data["classes"][0]) == {"representative", "size", "members"}
