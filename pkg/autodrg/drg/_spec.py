""" spectra, standard sequences and eigenmatrices of intersection arrays
"""
import functools
import sympy
from autodrg import num
from autodrg import par
from autodrg.error import InfeasibleArrayError
from autodrg.error import InconsistencyError
from autodrg.error import NotAnEigenvalueError
from autodrg.drg._array import intersection_numbers
from autodrg.drg._array import distance_valencies
from autodrg.drg._array import vertex_count
from autodrg.drg._array import valency
from autodrg.drg._array import diameter
from autodrg.drg._array import string


class SpectralData:
    """ Eigenvalues, multiplicities, standard sequences and eigenmatrices

    :param arr: the intersection array
    :param eigenvalues: θ_0 > θ_1 > ... > θ_D
    :param multiplicities: m_0, ..., m_D
    :param u: u[i][j] = u_j(θ_i)
    """

    def __init__(self, arr, eigenvalues, multiplicities, u):
        """ constructor
        """
        dim = diameter(arr) + 1
        assert len(eigenvalues) == len(multiplicities) == len(u) == dim

        kis = distance_valencies(arr)
        self.array = arr
        self.eigenvalues = tuple(eigenvalues)
        self.multiplicities = tuple(multiplicities)
        self.u = tuple(map(tuple, u))
        self.vertex_count = sum(kis)
        self.p_matrix = tuple(
            tuple(num.mul(kis[i], self.u[j][i]) for i in range(dim))
            for j in range(dim))
        self.q_matrix = tuple(
            tuple(num.mul(self.multiplicities[i], self.u[i][j])
                  for i in range(dim))
            for j in range(dim))

    def theta(self, i):
        """ the eigenvalue θ_i
        """
        return self.eigenvalues[i]

    def __repr__(self):
        return 'SpectralData({}, θ=({}), m={})'.format(
            string(self.array),
            ', '.join(map(num.string, self.eigenvalues)),
            self.multiplicities)


# polynomials
@functools.lru_cache(maxsize=1024)
def characteristic_polynomial(arr):
    """ det(tI - L_1) via the three-term recurrence of leading minors
    """
    c_all, a_all, b_all = intersection_numbers(arr)
    t = num.T
    prev, cur = sympy.Poly(1, t), sympy.Poly(t - a_all[0], t)
    for i in range(1, diameter(arr) + 1):
        prev, cur = cur, (sympy.Poly(t - a_all[i], t) * cur
                          - b_all[i-1] * c_all[i] * prev)
    return cur


@functools.lru_cache(maxsize=1024)
def standard_sequence_polynomials(arr):
    """ the polynomials u_0(t), ..., u_D(t) of the standard sequence

    u_0 = 1, u_1 = t/k and
    c_j u_{j-1} + a_j u_j + b_j u_{j+1} = t u_j for 1 <= j <= D-1.
    """
    c_all, a_all, b_all = intersection_numbers(arr)
    t = num.T
    polys = [sympy.Poly(1, t, domain='QQ'),
             sympy.Poly(t / valency(arr), t, domain='QQ')]
    for j in range(1, diameter(arr)):
        nxt = (sympy.Poly(t - a_all[j], t, domain='QQ') * polys[j]
               - c_all[j] * polys[j-1]) * sympy.Rational(1, b_all[j])
        polys.append(nxt)
    return tuple(polys)


def terminal_polynomial(arr):
    """ c_D u_{D-1}(t) + (a_D - t) u_D(t), which vanishes exactly at the
        eigenvalues
    """
    c_all, a_all, _ = intersection_numbers(arr)
    d_max = diameter(arr)
    polys = standard_sequence_polynomials(arr)
    t = num.T
    return (c_all[d_max] * polys[d_max-1]
            + sympy.Poly(a_all[d_max] - t, t, domain='QQ') * polys[d_max])


def norm_polynomial(arr):
    """ Σ_j k_j u_j(t)^2, equal to n/m at an eigenvalue of multiplicity m
    """
    kis = distance_valencies(arr)
    polys = standard_sequence_polynomials(arr)
    return sum((k_j * poly ** 2 for k_j, poly in zip(kis[1:], polys[1:])),
               polys[0])


# spectrum
def standard_sequence(arr, theta):
    """ u_0(θ), ..., u_D(θ) for an eigenvalue θ

    :raises NotAnEigenvalueError: if the terminal identity fails
    """
    theta = num.scalar(theta)
    if not num.is_zero(num.poly_value(terminal_polynomial(arr), theta)):
        raise NotAnEigenvalueError(
            '{} is not an eigenvalue of {}'.format(
                num.string(theta), string(arr)))
    return tuple(num.poly_value(poly, theta)
                 for poly in standard_sequence_polynomials(arr))


@functools.lru_cache(maxsize=1024)
def spectrum(arr):
    """ The spectral data of a validated array

    :raises InfeasibleArrayError: when the characteristic polynomial does
        not have D+1 distinct real roots, or a multiplicity is not a positive
        integer
    :raises InconsistencyError: when P Q != n I
    """
    d_max = diameter(arr)
    n = vertex_count(arr)
    roots = num.real_roots(characteristic_polynomial(arr))
    if len(roots) != d_max + 1:
        raise InfeasibleArrayError(
            '{}: characteristic polynomial has {} distinct real roots, '
            'expected {}'.format(string(arr), len(roots), d_max + 1))
    if num.compare(roots[0], valency(arr)) != par.Relation.EQ:
        raise InconsistencyError(
            '{}: largest eigenvalue {} differs from k'.format(
                string(arr), num.string(roots[0])))

    norm = norm_polynomial(arr)
    mults = []
    useqs = []
    for i, theta in enumerate(roots):
        useqs.append(standard_sequence(arr, theta))
        val = num.poly_value(norm, theta)
        mult = num.div(n, val) if num.is_rational(val) else None
        if mult is None or not num.is_integer(mult) or mult <= 0:
            raise InfeasibleArrayError(
                '{}: multiplicity m_{} of θ = {} is not a positive '
                'integer'.format(string(arr), i, num.string(theta)))
        mults.append(int(mult))

    if sum(mults) != n:
        raise InconsistencyError(
            '{}: multiplicities sum to {} != n = {}'.format(
                string(arr), sum(mults), n))

    spec = SpectralData(arr, roots, mults, useqs)
    _check_orthogonality(spec)
    return spec


def _check_orthogonality(spec):
    """ P Q = n I, i.e. Σ_l k_l u_l(θ_j) u_l(θ_h) = 0 for j != h
    """
    kis = distance_valencies(spec.array)
    dim = len(spec.eigenvalues)
    for j in range(dim):
        for h in range(j + 1, dim):
            total = 0
            for k_l, u_j, u_h in zip(kis, spec.u[j], spec.u[h]):
                total = num.add(total, num.mul(k_l, num.mul(u_j, u_h)))
            if not num.is_zero(total):
                raise InconsistencyError(
                    '{}: (PQ)_{}{} = {} != 0'.format(
                        string(spec.array), j, h, num.string(total)))


# I/O
def spectral_dict(spec):
    """ JSON-ready dictionary of the spectral data
    """
    return {
        'eigenvalues': [num.to_json(theta) for theta in spec.eigenvalues],
        'multiplicities': list(spec.multiplicities),
        'standard_sequences': [[num.to_json(val) for val in row]
                               for row in spec.u],
        'p_matrix': [[num.to_json(val) for val in row]
                     for row in spec.p_matrix],
        'q_matrix': [[num.to_json(val) for val in row]
                     for row in spec.q_matrix],
    }
