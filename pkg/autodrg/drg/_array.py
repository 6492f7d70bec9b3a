"""
 Intersection arrays of distance-regular graphs

 Array: ((b_0, b_1, ..., b_{D-1}), (c_1, c_2, ..., c_D))
"""
import re
from autodrg.error import ArrayParseError
from autodrg.error import InfeasibleArrayError


# constructors
def from_data(b_seq, c_seq):
    """ Build a validated intersection array

    :param b_seq: the numbers b_0, ..., b_{D-1}
    :type b_seq: tuple(int)
    :param c_seq: the numbers c_1, ..., c_D
    :type c_seq: tuple(int)
    :rtype: (tuple(int), tuple(int))
    """
    arr = (tuple(int(b) for b in b_seq), tuple(int(c) for c in c_seq))
    violations = feasibility_violations(arr)
    if violations:
        raise InfeasibleArrayError(
            '{}: {}'.format(string(arr), violations[0]))
    return arr


def from_string(arr_str):
    """ Read an array from text of the form "b0,...,b_{D-1};c1,...,cD"

    Whitespace and surrounding braces are ignored.
    """
    text = re.sub(r'\s+', '', arr_str)
    if text.startswith('{') and text.endswith('}'):
        text = text[1:-1]
    parts = text.split(';')
    if len(parts) != 2:
        raise ArrayParseError(
            '{!r} does not have the form "b0,...;c1,..."'.format(arr_str))

    seqs = []
    for part in parts:
        if not re.fullmatch(r'\d+(,\d+)*', part):
            raise ArrayParseError(
                '{!r} is not a comma-separated list of integers'.format(part))
        seqs.append(tuple(map(int, part.split(','))))

    b_seq, c_seq = seqs
    return from_data(b_seq, c_seq)


# getters
def b_numbers(arr):
    """ b_0, ..., b_{D-1}
    """
    return arr[0]


def c_numbers(arr):
    """ c_1, ..., c_D
    """
    return arr[1]


def valency(arr):
    """ the valency k = b_0
    """
    return arr[0][0]


def diameter(arr):
    """ the diameter D
    """
    return len(arr[0])


def intersection_numbers(arr):
    """ the full sequences (c_0..c_D), (a_0..a_D), (b_0..b_D)

    with c_0 = b_D = 0.
    """
    k = valency(arr)
    c_all = (0,) + c_numbers(arr)
    b_all = b_numbers(arr) + (0,)
    a_all = tuple(k - b - c for b, c in zip(b_all, c_all))
    return c_all, a_all, b_all


def a_numbers(arr):
    """ a_0, ..., a_D
    """
    return intersection_numbers(arr)[1]


def distance_valencies(arr):
    """ k_0, ..., k_D; assumes a validated array
    """
    kis = [1]
    for b_prev, c_cur in zip(b_numbers(arr), c_numbers(arr)):
        kis.append(kis[-1] * b_prev // c_cur)
    return tuple(kis)


def vertex_count(arr):
    """ n = k_0 + ... + k_D
    """
    return sum(distance_valencies(arr))


def is_bipartite(arr):
    """ an array is treated as bipartite iff every a_i vanishes
    """
    return not any(a_numbers(arr))


def intersection_matrix(arr):
    """ the tridiagonal matrix L_1 with row i = (c_i, a_i, b_i)

    :rtype: tuple(tuple(int))
    """
    c_all, a_all, b_all = intersection_numbers(arr)
    dim = diameter(arr) + 1
    mat = [[0] * dim for _ in range(dim)]
    for i in range(dim):
        if i > 0:
            mat[i][i-1] = c_all[i]
        mat[i][i] = a_all[i]
        if i < dim - 1:
            mat[i][i+1] = b_all[i]
    return tuple(map(tuple, mat))


# feasibility
def feasibility_violations(arr):
    """ all violated array invariants, as messages, in checking order
    """
    b_seq, c_seq = arr
    if not b_seq or len(b_seq) != len(c_seq):
        return ('b and c must be nonempty and of equal length',)
    if any(b <= 0 for b in b_seq) or any(c <= 0 for c in c_seq):
        return ('b_i and c_i must be positive integers',)

    viols = []
    if c_seq[0] != 1:
        viols.append('c_1 = {} is not 1'.format(c_seq[0]))

    _, a_all, _ = intersection_numbers(arr)
    for i, a_val in enumerate(a_all):
        if a_val < 0:
            viols.append('a_{} = {} is negative'.format(i, a_val))

    for i in range(1, len(c_seq)):
        if c_seq[i-1] > c_seq[i]:
            viols.append('c_{} > c_{} (c not monotone)'.format(i, i+1))
        if b_seq[i-1] < b_seq[i]:
            viols.append('b_{} < b_{} (b not monotone)'.format(i-1, i))

    k_prev = 1
    for i, (b_prev, c_cur) in enumerate(zip(b_seq, c_seq), start=1):
        if (k_prev * b_prev) % c_cur:
            viols.append('k_{} not integral'.format(i))
            break
        k_prev = k_prev * b_prev // c_cur

    return tuple(viols)


def parity_conditions(arr):
    """ handshake conditions: k_i a_i and n k are even

    :returns: the violated conditions, as messages
    """
    viols = []
    kis = distance_valencies(arr)
    for i, (k_i, a_i) in enumerate(zip(kis, a_numbers(arr))):
        if (k_i * a_i) % 2:
            viols.append('k_{} a_{} = {} is odd'.format(i, i, k_i * a_i))
    if (vertex_count(arr) * valency(arr)) % 2:
        viols.append('n k is odd')
    return tuple(viols)


# I/O
def string(arr):
    """ write an array as "b0,...,b_{D-1};c1,...,cD"
    """
    return '{};{}'.format(','.join(map(str, arr[0])),
                          ','.join(map(str, arr[1])))


def set_string(arr):
    """ write an array in brace notation {b0,...;c1,...}
    """
    return '{' + string(arr) + '}'
