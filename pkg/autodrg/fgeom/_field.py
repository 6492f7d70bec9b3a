""" the field GF(r^2) with its Frobenius involution x -> x^r

Elements are addressed by their galois integer representation, so the
tables below are indexed by ints in range(r^2).
"""
import functools
import itertools
import galois
import numpy
from autodrg.error import UnsupportedParametersError
from autodrg.geom import is_prime_power


@functools.lru_cache(maxsize=8)
def field(r):
    """ the galois field class GF(r^2)
    """
    if not is_prime_power(r):
        raise UnsupportedParametersError('{} is not a prime power'.format(r))
    return galois.GF(r ** 2)


def field_tables(r):
    """ addition, multiplication and Frobenius tables of GF(r^2)

    :rtype: dict of numpy int arrays keyed 'add', 'mul', 'frobenius'
    """
    gf_ = field(r)
    elems = gf_(numpy.arange(gf_.order))
    return {
        'add': (elems[:, None] + elems[None, :]).view(numpy.ndarray)
        .astype(int),
        'mul': (elems[:, None] * elems[None, :]).view(numpy.ndarray)
        .astype(int),
        'frobenius': (elems ** r).view(numpy.ndarray).astype(int),
    }


def check_field_tables(r):
    """ check the field axioms and the Frobenius involution on full tables

    :returns: the violated conditions, as messages
    """
    tabs = field_tables(r)
    add, mul, frob = tabs['add'], tabs['mul'], tabs['frobenius']
    order = r ** 2
    idx = numpy.arange(order)
    viols = []

    def _assoc(tab):
        return all(tab[tab[x, y], z] == tab[x, tab[y, z]]
                   for x, y, z in itertools.product(idx, repeat=3))

    if not (numpy.array_equal(add, add.T) and numpy.array_equal(mul, mul.T)):
        viols.append('addition or multiplication is not commutative')
    if not (_assoc(add) and _assoc(mul)):
        viols.append('addition or multiplication is not associative')
    if not all(mul[x, add[y, z]] == add[mul[x, y], mul[x, z]]
               for x, y, z in itertools.product(idx, repeat=3)):
        viols.append('multiplication does not distribute over addition')
    if not (numpy.array_equal(add[0], idx) and numpy.array_equal(mul[1], idx)):
        viols.append('0 or 1 is not an identity')
    if not all((add[x] == 0).sum() == 1 for x in idx):
        viols.append('some element lacks a unique additive inverse')
    if not all((mul[x] == 1).sum() == 1 for x in idx[1:]):
        viols.append('some nonzero element lacks a multiplicative inverse')

    if not numpy.array_equal(frob[frob], idx):
        viols.append('Frobenius is not an involution')
    if not (numpy.array_equal(frob[add], add[frob][:, frob]) and
            numpy.array_equal(frob[mul], mul[frob][:, frob])):
        viols.append('Frobenius is not a field automorphism')
    fixed = int((frob == idx).sum())
    if fixed != r:
        viols.append('Frobenius fixes {} elements, not {}'.format(fixed, r))
    return tuple(viols)
