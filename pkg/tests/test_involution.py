from fractions import Fraction

import pytest

from scissors.hochschild import (
    HochschildChain,
    builtin_algebra,
    d_basis_chain,
    d_basis_tuples,
    hochschild_boundary,
    in_omega,
    pure_tensor,
)
from scissors.hochschild.involution import (
    NotUnitNorm,
    eigenspace_split,
    i2_equals_b2_minus,
    quat_conj,
    ses_audit,
    spin_action,
    tau,
    tau_chain,
    tau_slotwise,
    tensor_square_basis,
    unit_quaternion,
    wedge_rank_of_minus,
)
from scissors.rng import SplitMix64

H = builtin_algebra("quat")


def rand_omega_chain(n, rng, algebra=H):
    basis = d_basis_tuples(algebra.dim, n)
    chain = HochschildChain(algebra, n)
    for _ in range(4):
        t = basis[rng.randint(0, len(basis) - 1)]
        chain = chain + rng.randint(-3, 3) * d_basis_chain(algebra, t)
    return chain


def test_tau_degree1_examples():
    # τ(1⊗i) = 1⊗(−i) = −(1⊗i): eigenvalue −1
    c = pure_tensor(H, 0, 1)
    assert tau(1, c) == -1 * c
    # τ(i⊗j) = (−i)⊗(−j) = i⊗j: eigenvalue +1
    c2 = pure_tensor(H, 1, 2)
    assert tau(1, c2) == c2


def test_tau_squared_identity():
    rng = SplitMix64.stream(53, 0)
    for n in (2, 3):
        for _ in range(8):
            c = rand_omega_chain(n, rng)
            assert tau(n, tau(n, c)) == c
    for _ in range(8):
        c = pure_tensor(H, rng.randint(0, 3), rng.randint(0, 3))
        assert tau(1, tau(1, c)) == c


def test_tau_chain_degree1_formula():
    # τ(a₀ da₁) = −a₀* d(a₁*) on d-basis chains
    c = d_basis_chain(H, (1, 2))  # i dj
    want = -1 * Fraction(-1) * Fraction(-1) * d_basis_chain(H, (1, 2))
    assert tau_chain(1, c) == want


def test_tau_commutes_with_boundary():
    rng = SplitMix64.stream(59, 1)
    for n in (2, 3):
        for _ in range(6):
            c = rand_omega_chain(n, rng)
            left = hochschild_boundary(n, tau_chain(n, c), check=False)
            right = tau_chain(n - 1, hochschild_boundary(n, c, check=False))
            assert left == right, n


def test_minus_eigenspace_dimension():
    plus, minus = eigenspace_split(tensor_square_basis(H), tau_slotwise)
    assert len(minus) == 6
    assert len(plus) == 10
    # oracle: tensors with exactly one imaginary factor flip sign
    count = 0
    for i in range(4):
        for j in range(4):
            si = -1 if i else 1
            sj = -1 if j else 1
            if si * sj == -1:
                count += 1
    assert count == 6


def test_wedge_rank_six():
    assert wedge_rank_of_minus(H) == 6


def test_i2_equals_b2_minus():
    assert i2_equals_b2_minus(H)


def test_spin_identity_action():
    one = unit_quaternion(H, (1, 0, 0, 0))
    rng = SplitMix64.stream(61, 2)
    for n in (1, 2):
        c = rand_omega_chain(n, rng)
        assert spin_action(one, one, n, c) == c


def test_spin_regression_pinned():
    # (i, 1) acting on 1⊗j: (i·1·1*) ⊗ (1·j·i*) = i ⊗ (j·(−i)) = i⊗k
    qi = unit_quaternion(H, (0, 1, 0, 0))
    one = unit_quaternion(H, (1, 0, 0, 0))
    c = pure_tensor(H, 0, 2)
    out = spin_action(qi, one, 1, c)
    assert out.coeffs == {(1, 3): Fraction(1)}


def test_spin_lipschitz_unit():
    q = unit_quaternion(H, (Fraction(1, 2), Fraction(1, 2),
                            Fraction(1, 2), Fraction(1, 2)))
    assert q is not None
    with pytest.raises(NotUnitNorm):
        unit_quaternion(H, (1, 1, 0, 0))


def test_spin_preserves_omega_and_commutes_with_b():
    q1 = unit_quaternion(H, (Fraction(3, 5), Fraction(4, 5), 0, 0))
    one = unit_quaternion(H, (1, 0, 0, 0))
    rng = SplitMix64.stream(67, 3)
    for _ in range(10):
        c = rand_omega_chain(2, rng)
        sc = spin_action(q1, one, 2, c)
        assert in_omega(sc)
        left = hochschild_boundary(2, sc, check=False)
        right = spin_action(q1, one, 1, hochschild_boundary(2, c, check=False))
        assert left == right


def test_ses_audit_quaternions():
    report = ses_audit(H)
    assert report["minus_dim"] == 6
    assert report["kernel_equals_i1_minus"]
    # over H(ℚ) the image is the antidiagonal: right-exactness fails at the
    # rational level and the audit must say so rather than assert it
    assert report["image_dim"] == 3
    assert report["kernel_dim"] == 3
    assert report["cokernel_dim"] == 3
    assert report["image_in_antidiagonal"]
    assert not report["right_exact_over_Q"]


def test_conj_is_involution():
    v = {0: Fraction(1), 1: Fraction(2), 3: Fraction(-5)}
    assert quat_conj(H, quat_conj(H, v)) == v
