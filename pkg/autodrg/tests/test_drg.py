""" test autodrg.drg
"""

import pytest
from autodrg import num
from autodrg import par
from autodrg import drg
from autodrg import geom
from autodrg.error import ArrayParseError
from autodrg.error import InfeasibleArrayError
from autodrg.error import NotAnEigenvalueError
from drgdat import catalog


HERM22 = drg.from_string('10,8;1,5')
HERM32 = drg.from_string('{42, 40, 32; 1, 5, 21}')
CUBE3 = catalog.array('cube3')
ICOSAHEDRON = catalog.array('icosahedron')

CORPUS = (tuple(arr for _, arr in catalog.all_arrays()) +
          (geom.hermitian_dual_polar_array(5, 2),
           geom.hamming_array(4, 4),
           geom.halved_cube_array(9)))


def test__from_string():
    """ test drg.from_string
    """
    assert HERM22 == ((10, 8), (1, 5))
    assert HERM32 == ((42, 40, 32), (1, 5, 21))
    assert drg.string(HERM22) == '10,8;1,5'
    assert drg.set_string(HERM32) == '{42,40,32;1,5,21}'
    assert drg.from_string(drg.set_string(HERM32)) == HERM32

    with pytest.raises(InfeasibleArrayError) as err:
        drg.from_string('10,8;1,6')
    assert str(err.value) == '10,8;1,6: k_2 not integral'

    for bad in ('10,8,1,5', '10,8;1;5', 'a,b;1,2', '10,8;', '10,-8;1,5'):
        with pytest.raises(ArrayParseError):
            drg.from_string(bad)


def test__feasibility():
    """ test drg.feasibility_violations and drg.parity_conditions
    """
    assert drg.feasibility_violations(HERM22) == ()
    assert drg.feasibility_violations(((3, 2), (2, 1))) == (
        'c_1 = 2 is not 1', 'a_1 = -1 is negative',
        'c_1 > c_2 (c not monotone)', 'k_1 not integral')
    assert drg.feasibility_violations(((3, 4), (1, 2))) == (
        'a_1 = -2 is negative', 'b_0 < b_1 (b not monotone)')
    assert drg.feasibility_violations(((3,), (1, 2))) == (
        'b and c must be nonempty and of equal length',)
    assert drg.feasibility_violations(((3, 0), (1, 2))) == (
        'b_i and c_i must be positive integers',)

    assert drg.parity_conditions(HERM22) == ()
    assert drg.parity_conditions(drg.from_data((3, 1), (1, 3))) == (
        'k_1 a_1 = 3 is odd', 'n k is odd')


def test__intersection_numbers():
    """ test the derived intersection numbers of an array
    """
    assert drg.valency(HERM22) == 10
    assert drg.diameter(HERM22) == 2
    assert drg.intersection_numbers(HERM22) == ((0, 1, 5), (0, 1, 5),
                                                (10, 8, 0))
    assert drg.a_numbers(HERM22) == (0, 1, 5)
    assert drg.distance_valencies(HERM22) == (1, 10, 16)
    assert drg.vertex_count(HERM22) == 27
    assert drg.vertex_count(HERM32) == 891

    assert drg.is_bipartite(CUBE3)
    assert not drg.is_bipartite(HERM22)

    assert drg.intersection_matrix(HERM22) == ((0, 10, 0),
                                               (1, 1, 8),
                                               (0, 5, 5))


def test__standard_sequence():
    """ test drg.standard_sequence
    """
    half = num.rational(1, 2)
    assert drg.standard_sequence(HERM22, -5) == (1, -half, half ** 2)
    assert drg.standard_sequence(HERM32, -21) == (1, -half, half ** 2,
                                                  -half ** 3)
    assert drg.standard_sequence(HERM32, 9)[1] == num.rational(9, 42)

    with pytest.raises(NotAnEigenvalueError):
        drg.standard_sequence(HERM22, 2)


def test__spectrum():
    """ test drg.spectrum on the Hermitian arrays and the cube
    """
    spec = drg.spectrum(HERM22)
    assert spec.eigenvalues == (10, 1, -5)
    assert spec.multiplicities == (1, 20, 6)
    assert num.real_roots(drg.characteristic_polynomial(HERM22)) == (
        10, 1, -5)

    spec = drg.spectrum(HERM32)
    assert spec.eigenvalues == (42, 9, -3, -21)
    assert spec.multiplicities == (1, 252, 616, 22)

    spec = drg.spectrum(CUBE3)
    assert spec.eigenvalues == (3, 1, -1, -3)
    assert spec.multiplicities == (1, 3, 3, 1)

    # irrational eigenvalues: 5, sqrt5, -1, -sqrt5
    spec = drg.spectrum(ICOSAHEDRON)
    assert spec.multiplicities == (1, 3, 5, 3)
    assert not num.is_rational(spec.theta(1))
    assert num.mul(spec.theta(1), spec.theta(1)) == 5
    assert num.add(spec.theta(1), spec.theta(3)) == 0

    # the pentagon multiplicities are rational only after exact reduction
    spec = drg.spectrum(catalog.array('pentagon'))
    assert spec.multiplicities == (1, 2, 2)


def test__moment_system():
    """ test spectra against Σ m θ^p = n, 0, n k, n k a_1 for p <= 3
    """
    for arr in CORPUS:
        spec = drg.spectrum(arr)
        n = drg.vertex_count(arr)
        k = drg.valency(arr)
        a_1 = drg.a_numbers(arr)[1]
        for pwr, ref in enumerate((n, 0, n * k, n * k * a_1)):
            total = 0
            for theta, mult in zip(spec.eigenvalues, spec.multiplicities):
                total = num.add(total, num.mul(mult, num.power(theta, pwr)))
            assert num.compare(total, ref) == par.Relation.EQ, (
                drg.string(arr), pwr)


def test__eigenmatrices():
    """ test P Q = n I and the standard sequence at θ_0
    """
    for arr in CORPUS:
        spec = drg.spectrum(arr)
        n = drg.vertex_count(arr)
        dim = drg.diameter(arr) + 1
        assert spec.u[0] == (1,) * dim
        assert spec.p_matrix[0] == drg.distance_valencies(arr)
        for row in range(dim):
            for col in range(dim):
                total = 0
                for mid in range(dim):
                    total = num.add(total, num.mul(spec.p_matrix[row][mid],
                                                   spec.q_matrix[mid][col]))
                assert total == (n if row == col else 0)


def test__spectral_dict():
    """ test drg.spectral_dict
    """
    dct = drg.spectral_dict(drg.spectrum(HERM22))
    assert dct['eigenvalues'] == ['10', '1', '-5']
    assert dct['multiplicities'] == [1, 20, 6]
    assert dct['standard_sequences'][2] == ['1', '-1/2', '1/4']

    dct = drg.spectral_dict(drg.spectrum(ICOSAHEDRON))
    assert dct['eigenvalues'][1]['min_poly'] == [1, 0, -5]


if __name__ == '__main__':
    test__from_string()
    test__feasibility()
    test__intersection_numbers()
    test__standard_sequence()
    test__spectrum()
    test__moment_system()
    test__eigenmatrices()
    test__spectral_dict()
