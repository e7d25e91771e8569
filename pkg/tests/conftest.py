import pytest

from hopfore.cyclotomic import Cyclotomic
from hopfore.groups import GroupData, custom_algebra, dihedral_algebra
from hopfore.linalg import Matrix


def cyclic_algebra(n, chi_exp):
    """Cyclic group C_n with chi = zeta_n^chi_exp on the generator.

    Gives q = zeta_n^chi_exp, so s = n / gcd(n, chi_exp).  With chi_exp
    coprime to n this is fusion ready with s = n and every omega_i^s = 1;
    chi_exp = 2 on C_8 gives s = 4 with omega_i^s = (-1)^i, which exercises
    the nontrivial eigenvalue twist.
    """
    mul = [[(i + j) % n for j in range(n)] for i in range(n)]
    group = GroupData(mul, generators=(1,), names=[f"g{k}" for k in range(n)])
    simples = [(f"c{l}", [Matrix(n, [[Cyclotomic.zeta(n, l)]])]) for l in range(n)]
    chi = [Cyclotomic.zeta(n, chi_exp * k) for k in range(n)]
    return custom_algebra(group, simples, central=1, chi=chi, field_order=n)


@pytest.fixture(scope="session")
def alg3():
    return dihedral_algebra(3)


@pytest.fixture(scope="session")
def alg5():
    return dihedral_algebra(5)


@pytest.fixture(scope="session")
def alg7():
    return dihedral_algebra(7)


@pytest.fixture(scope="session")
def c4():
    return cyclic_algebra(4, 1)


@pytest.fixture(scope="session")
def c8():
    return cyclic_algebra(8, 2)
