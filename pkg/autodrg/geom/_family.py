""" intersection arrays of classical families
"""
import sympy
from autodrg import drg
from autodrg.error import UnsupportedParametersError


MAX_PRIME_POWER = 10**6
DUAL_POLAR_EXPONENTS = (sympy.Rational(0), sympy.Rational(1, 2),
                        sympy.Rational(1), sympy.Rational(3, 2),
                        sympy.Rational(2))


def is_prime_power(q):
    """ is q = p^e for a prime p and e >= 1?

    :raises UnsupportedParametersError: above MAX_PRIME_POWER
    """
    if q > MAX_PRIME_POWER:
        raise UnsupportedParametersError(
            '{} exceeds the prime power cap {}'.format(q, MAX_PRIME_POWER))
    return q >= 2 and len(sympy.factorint(q)) == 1


def hermitian_dual_polar_array(d_max, r):
    """ the array of the Hermitian dual polar graph ^2A_{2D-1}(r)

    c_i = (r^{2i} - 1)/(r^2 - 1), a_i = (r - 1) c_i and
    b_i = r^{2i+1} (r^{2D-2i} - 1)/(r^2 - 1).

    :raises UnsupportedParametersError: if D < 2 or r is not a prime power
    """
    if d_max < 2:
        raise UnsupportedParametersError('D = {} < 2'.format(d_max))
    if not is_prime_power(r):
        raise UnsupportedParametersError('{} is not a prime power'.format(r))

    c_seq = tuple((r ** (2 * i) - 1) // (r ** 2 - 1)
                  for i in range(1, d_max + 1))
    b_seq = tuple(r ** (2 * i + 1) * (r ** (2 * (d_max - i)) - 1)
                  // (r ** 2 - 1) for i in range(d_max))
    return drg.from_data(b_seq, c_seq)


def dual_polar_array(d_max, q, exp):
    """ the array of a dual polar graph of rank D with parameters (q, e)

    b_i = q^{i+e} [D-i]_q and c_i = [i]_q, with [j]_q = (q^j - 1)/(q - 1).
    e = 0, 1, 2 give D_D(q), B_D(q) or C_D(q), and ^2D_{D+1}(q); e = 1/2
    and 3/2 with q = r^2 give ^2A_{2D-1}(r) and ^2A_{2D}(r).
    """
    exp = sympy.Rational(exp)
    if d_max < 1:
        raise UnsupportedParametersError('D = {} < 1'.format(d_max))
    if exp not in DUAL_POLAR_EXPONENTS:
        raise UnsupportedParametersError(
            'e = {} is not one of {}'.format(
                exp, ', '.join(map(str, DUAL_POLAR_EXPONENTS))))
    if not is_prime_power(q):
        raise UnsupportedParametersError('{} is not a prime power'.format(q))
    q_exp = sympy.Integer(q) ** exp
    if not q_exp.is_Integer:
        raise UnsupportedParametersError(
            'q^e = {}^{} is not an integer'.format(q, exp))

    def _gauss(j):
        return (q ** j - 1) // (q - 1)

    c_seq = tuple(_gauss(i) for i in range(1, d_max + 1))
    b_seq = tuple(q ** i * int(q_exp) * _gauss(d_max - i)
                  for i in range(d_max))
    return drg.from_data(b_seq, c_seq)


def hamming_array(d_max, q):
    """ the array of the Hamming graph H(D, q)
    """
    if d_max < 1 or q < 2:
        raise UnsupportedParametersError(
            'H({}, {}) needs D >= 1 and q >= 2'.format(d_max, q))
    return drg.from_data(tuple((d_max - i) * (q - 1) for i in range(d_max)),
                         tuple(range(1, d_max + 1)))


def halved_cube_array(dim):
    """ the array of the halved dim-cube
    """
    if dim < 2:
        raise UnsupportedParametersError(
            'the halved {}-cube is not defined'.format(dim))
    d_max = dim // 2
    return drg.from_data(
        tuple((dim - 2 * i) * (dim - 2 * i - 1) // 2 for i in range(d_max)),
        tuple(i * (2 * i - 1) for i in range(1, d_max + 1)))
