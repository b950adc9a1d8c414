"""Dense-matrix checks of the exponent-pair model.

Everything here builds explicit complex d x d matrices with numpy and
compares them entrywise.  Roots of unity come from ``2 pi k / d`` with k
reduced mod d first, so large exponents do not lose precision.
"""

from itertools import product
from math import gcd

import numpy as np

from .arith import gcd_many, two_var_congruence_solvable
from .classify import decide_uc
from .clifford import lemma3_witness
from .gpm import GpmSet

MAX_DIM = 256
UNITARY_TOL = 1e-9
EXACT_TOL = 1e-12


def _check_dim(d):
    if not 1 <= d <= MAX_DIM:
        raise ValueError(f"dense checks are limited to 1 <= d <= {MAX_DIM}, got {d}")


def root_of_unity(k, d):
    return np.exp(2j * np.pi * (k % d) / d)


def build_gpm_matrix(g, d):
    """``X^s Z^t`` as a dense matrix: entry ``w^{t j}`` at row ``j + s``, column j."""
    _check_dim(d)
    s, t = g[0] % d, g[1] % d
    j = np.arange(d)
    m = np.zeros((d, d), dtype=complex)
    m[(j + s) % d, j] = root_of_unity(t * j, d)
    return m


def max_dev(a, b):
    return float(np.max(np.abs(a - b)))


def is_unitary(u, tol=UNITARY_TOL):
    return max_dev(u @ u.conj().T, np.eye(u.shape[0])) < tol


def verify_commutation(a, b, d):
    """Max-norm deviation of ``Z^b X^a`` from ``w^{ab} X^a Z^b``."""
    xa = build_gpm_matrix((a, 0), d)
    zb = build_gpm_matrix((0, b), d)
    return max_dev(zb @ xa, root_of_unity(a * b, d) * xa @ zb)


def power_deviation(g, k, d, scalar):
    """Deviation of ``(X^s Z^t)^k`` from ``scalar * I``."""
    u = np.linalg.matrix_power(build_gpm_matrix(g, d), k)
    return max_dev(u, scalar * np.eye(d))


def phase_of(u, tol=UNITARY_TOL):
    """The unit scalar z with ``u == z I``, or None."""
    z = u[0, 0]
    if abs(abs(z) - 1) > tol or max_dev(u, z * np.eye(u.shape[0])) > tol:
        return None
    return z


def numeric_essential_order(g, d):
    """Smallest k >= 1 with ``(X^s Z^t)^k`` proportional to I, by repeated multiplication."""
    u = build_gpm_matrix(g, d)
    acc = u.copy()
    for k in range(1, 2 * d + 1):
        if phase_of(acc) is not None:
            return k
        acc = acc @ u
    raise AssertionError("GPM order exceeds 2d")


def numeric_commutation_exponent(g1, g2, d):
    """c with ``U2 U1 = w^c U1 U2``, read off from the dense matrices."""
    u1, u2 = build_gpm_matrix(g1, d), build_gpm_matrix(g2, d)
    lhs, rhs = u2 @ u1, u1 @ u2
    for c in range(d):
        if max_dev(lhs, root_of_unity(c, d) * rhs) < UNITARY_TOL:
            return c
    raise AssertionError("GPMs do not commute up to a d-th root of unity")


def permutation_matrix(perm):
    d = len(perm)
    w = np.zeros((d, d), dtype=complex)
    w[perm, np.arange(d)] = 1
    return w


def lemma3_deviation(u, a, b, d):
    """Largest deviation in ``W X^a W^dag = X^{ua}`` and ``W Z^b W^dag = Z^b``."""
    _check_dim(d)
    if d % a or d % b:
        raise ValueError("a and b must divide d")
    if gcd(u, d // a) != 1:
        raise ValueError(f"gcd(u, d/a) = {gcd(u, d // a)} != 1")
    if (u * a * b - a * b) % d:
        raise ValueError("u a b != a b (mod d)")
    w = permutation_matrix(lemma3_witness(u, a, d))
    wd = w.conj().T
    dev_x = max_dev(w @ build_gpm_matrix((a, 0), d) @ wd, build_gpm_matrix((u * a, 0), d))
    dev_z = max_dev(w @ build_gpm_matrix((0, b), d) @ wd, build_gpm_matrix((0, b), d))
    return max(dev_x, dev_z)


def verify_lemma3(u, a, b, d):
    return lemma3_deviation(u, a, b, d) < UNITARY_TOL


def verify_tensor_identities(n_factor, m_factor):
    """Check the splitting of X and Z on C^{nm} as tensor products.

    With ``|i + m j> = |j> (x) |i>`` (so ``np.kron(A_n, B_m)``):
    ``X^m = X_n (x) I_m``, ``Z = Z_n (x) diag(w_{nm}^i)`` and ``Z^n = I_n (x) Z_m``.
    """
    n, m = n_factor, m_factor
    d = n * m
    _check_dim(d)
    x = build_gpm_matrix((1, 0), d)
    z = build_gpm_matrix((0, 1), d)
    xn, zn = build_gpm_matrix((1, 0), n), build_gpm_matrix((0, 1), n)
    zm = build_gpm_matrix((0, 1), m)
    twist = np.diag([root_of_unity(i, d) for i in range(m)])
    checks = [
        (np.linalg.matrix_power(x, m), np.kron(xn, np.eye(m))),
        (z, np.kron(zn, twist)),
        (np.linalg.matrix_power(z, n), np.kron(np.eye(n), zm)),
    ]
    return all(max_dev(lhs, rhs) < EXACT_TOL for lhs, rhs in checks)


def congruence_scan(a1, a2, c, m):
    """First (s, t) in Z_m^2 with ``a1 s + a2 t = c (mod m)``, or None."""
    for s, t in product(range(m), repeat=2):
        if (a1 * s + a2 * t - c) % m == 0:
            return s, t
    return None


def verify_appendix_a(a1=12, a2=30, c=68, m=72):
    """True when ``a1 s + a2 t = c (mod m)`` has no solution, by gcd test and by scan.

    The defaults are the congruence that would have to hold for the
    permutation witness with ``(u, a, b, d) = (5, 6, 12, 72)`` to be a
    Clifford operator.  Raises if the two methods disagree.
    """
    by_gcd = two_var_congruence_solvable(a1, a2, c, m)
    by_scan = congruence_scan(a1, a2, c, m) is not None
    if by_gcd != by_scan:
        raise AssertionError(f"gcd test says {by_gcd}, scan says {by_scan}")
    return not by_gcd


def verify_lemma_b2_instance(u, v, a, b, d):
    """``{I, X^a, Z^b}`` and ``{I, X^{ua} Z^{va}, Z^b}`` are UC-equivalent (via the classifier)."""
    if d % a or d % b or b % a or b == d:
        raise ValueError("need a | b | d with b < d")
    na, nb = d // a, d // b
    if gcd_many([u, v, na]) != 1:
        raise ValueError("gcd(u, v, d/a) != 1")
    if (u * a * b - a * b) % d:
        raise ValueError("u a b != a b (mod d)")
    if gcd_many([u, na, nb]) != 1:
        raise ValueError("gcd(u, d/a, d/b) != 1")
    left = GpmSet.of(d, [(0, 0), (a, 0), (0, b)])
    right = GpmSet.of(d, [(0, 0), (u * a, v * a), (0, b)])
    return decide_uc(left, right)


def run_all():
    """Every built-in check as ``(name, passed)`` pairs."""
    return [
        ("commutation (1,1,4)", verify_commutation(1, 1, 4) < EXACT_TOL),
        ("commutation (6,12,72)", verify_commutation(6, 12, 72) < EXACT_TOL),
        ("commutation (3,3,6)", verify_commutation(3, 3, 6) < EXACT_TOL),
        ("(XZ)^4 = -I, d=4", power_deviation((1, 1), 4, 4, -1) < EXACT_TOL),
        ("(XZ)^8 = I, d=4", power_deviation((1, 1), 8, 4, 1) < EXACT_TOL),
        ("(X^3Z^3)^2 = -I, d=6", power_deviation((3, 3), 2, 6, -1) < EXACT_TOL),
        ("permutation witness (5,6,12,72)", verify_lemma3(5, 6, 12, 72)),
        ("permutation witness (5,1,6,6)", verify_lemma3(5, 1, 6, 6)),
        ("tensor identities (2,3)", verify_tensor_identities(2, 3)),
        ("tensor identities (3,4)", verify_tensor_identities(3, 4)),
        ("12s+30t=68 mod 72 unsolvable", verify_appendix_a()),
        ("12s+30t=66 mod 72 solvable", not verify_appendix_a(c=66)),
        ("pair instance (5,0,6,12,72)", verify_lemma_b2_instance(5, 0, 6, 12, 72)),
    ]
