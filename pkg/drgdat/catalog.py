""" Library of named intersection arrays
"""
from autodrg import drg

# Strongly regular and other diameter-2 graphs
DIAMETER_TWO = {
    'petersen': '3,2;1,1',
    'clebsch': '5,4;1,2',
    'shrikhande': '6,3;1,2',
    'paley9': '4,2;1,2',
    'paley13': '6,3;1,3',
    'triangular6': '8,3;1,4',
    'triangular7': '10,4;1,4',
    'gq22': '6,4;1,3',
    'gq33': '12,9;1,4',
    'hoffman_singleton': '7,6;1,1',
    'gewirtz': '10,9;1,2',
    'higman_sims': '22,21;1,6',
    'hamming25': '8,4;1,2',
    'complete_multipartite33': '6,2;1,6',
    'complete_bipartite44': '4,3;1,4',
    'halved5cube': '10,3;1,6',
    'pentagon': '2,1;1,1',
}

# Classical families of larger diameter
CLASSICAL = {
    'cube3': '3,2,1;1,2,3',
    'cube4': '4,3,2,1;1,2,3,4',
    'cube5': '5,4,3,2,1;1,2,3,4,5',
    'hamming33': '6,4,2;1,2,3',
    'hamming43': '8,6,4,2;1,2,3,4',
    'hamming34': '9,6,3;1,2,3',
    'hexagon': '2,1,1;1,1,2',
    'heawood': '3,2,2;1,1,3',
    'odd4': '4,3,3;1,1,2',
    'johnson63': '9,4,1;1,4,9',
    'johnson73': '12,6,2;1,4,9',
    'halved7cube': '21,10,3;1,6,15',
    'icosahedron': '5,2,1;1,2,5',
    'desargues': '3,2,2,1,1;1,1,2,2,3',
    'dual_polar_b32': '14,12,8;1,3,7',
}

# Hermitian dual polar graphs ^2A_{2D-1}(r), keyed by (D, r) in the name
HERMITIAN = {
    'hermitian22': '10,8;1,5',
    'hermitian32': '42,40,32;1,5,21',
    'hermitian42': '170,168,160,128;1,5,21,85',
    'hermitian23': '30,27;1,10',
    'hermitian33': '273,270,243;1,10,91',
}

ALIASES = {
    'gq24': 'hermitian22',
    'gq39': 'hermitian23',
    'hamming23': 'paley9',
}


def names():
    """ every catalogued name, aliases included, sorted
    """
    return tuple(sorted(set(_table()) | set(ALIASES)))


def array_string(name):
    """ the array text for a catalogued name

    :raises KeyError: for an unknown name
    """
    name = ALIASES.get(name, name)
    return _table()[name]


def array(name):
    """ the validated intersection array for a catalogued name
    """
    return drg.from_string(array_string(name))


def all_arrays():
    """ (name, array) for every catalogued array, aliases excluded
    """
    return tuple((name, drg.from_string(arr_str))
                 for name, arr_str in sorted(_table().items()))


def _table():
    tab = {}
    for dct in (DIAMETER_TWO, CLASSICAL, HERMITIAN):
        tab.update(dct)
    return tab
