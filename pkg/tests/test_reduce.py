from luequiv.arith import divisors
from luequiv.classify import standard_sets, uc_orbit
from luequiv.clifford import apply_symplectic_set
from luequiv.gpm import GpmSet, power_vector
from luequiv.reduce import is_lemma41_form, reduce

import pytest


def test_lemma41_examples():
    assert is_lemma41_form(GpmSet.of(6, [(0, 0), (0, 1), (0, 2), (0, 3)]))
    assert is_lemma41_form(GpmSet.of(6, [(0, 0)]))
    assert not is_lemma41_form(GpmSet.of(6, [(0, 0), (0, 2), (1, 1)]))


def test_reduce_examples():
    c1 = GpmSet.of(6, [(0, 0), (0, 1), (0, 2), (0, 3)])
    r = reduce(c1)
    assert r.reduced == c1 and (r.context.a, r.context.b) == (6, 1) and r.division_steps == 0

    r = reduce(GpmSet.of(6, [(0, 0), (0, 1), (0, 2), (1, 0)]))
    assert (r.context.a, r.context.b) == (1, 1)

    r = reduce(GpmSet.of(4, [(0, 0), (1, 0), (2, 0), (3, 0)]))
    assert r.reduced == GpmSet.of(4, [(0, 0), (0, 1), (0, 2), (0, 3)])
    assert (r.context.a, r.context.b) == (4, 1)
    assert r.clifford_steps == 1


def test_identity_only():
    r = reduce(GpmSet.of(5, [(0, 0)]))
    assert (r.context.a, r.context.b) == (5, 5)
    assert r.chain == ()
    assert uc_orbit(GpmSet.of(5, [(0, 0)])).sets == (GpmSet.of(5, [(0, 0)]),)


def test_reduce_rejects_nonstandard():
    with pytest.raises(ValueError):
        reduce(GpmSet.of(6, [(0, 1)]))


def test_division_keeps_original_powers():
    # t mod b substitution changes powers; the orbit must use the chain image
    m = GpmSet.of(6, [(0, 0), (0, 2), (3, 3)])
    r = reduce(m)
    assert r.division_steps == 1
    assert power_vector(r.working) != power_vector(m)
    assert power_vector(r.reduced) == power_vector(m)
    assert all(power_vector(x) == power_vector(m) for x in uc_orbit(m))


def check_result(m):
    r = reduce(m)
    d = m.d
    a, b = r.context.a, r.context.b
    assert is_lemma41_form(r.working)
    assert (0, 0) in r.reduced
    assert all(s % a == 0 and t % b == 0 for s, t in r.reduced)
    assert all(s % a == 0 and t % b == 0 for s, t in r.working)
    xs = [s for s, _ in r.working]
    assert a == (d if not any(xs) else __import__("math").gcd(*xs, d))
    assert apply_symplectic_set(r.composite, m) == r.reduced
    return r


def test_all_d6_four_sets_terminate_within_bound():
    bound = 2 * len(divisors(6))
    for m in standard_sets(6, 4):
        r = check_result(m)
        assert r.clifford_steps <= bound


def test_small_moduli_terminate_within_bound():
    for d in range(3, 13):
        bound = 2 * len(divisors(d))
        for n in (2, 3):
            for m in standard_sets(d, n):
                assert check_result(m).clifford_steps <= bound


def test_prime_power_single_step():
    for d in (4, 8, 9):
        for m in standard_sets(d, 4):
            r = reduce(m)
            assert r.clifford_steps == 1 and r.division_steps == 0
            assert r.reduced == r.working
