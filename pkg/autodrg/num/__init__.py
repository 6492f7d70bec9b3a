""" exact rational and real algebraic scalars
"""

from autodrg.num._scalar import T
from autodrg.num._scalar import AlgebraicReal
from autodrg.num._scalar import scalar
from autodrg.num._scalar import rational
from autodrg.num._scalar import from_root
from autodrg.num._scalar import canonical_polynomial
from autodrg.num._scalar import is_rational
from autodrg.num._scalar import is_integer
from autodrg.num._scalar import is_zero
from autodrg.num._scalar import arith
from autodrg.num._scalar import add
from autodrg.num._scalar import sub
from autodrg.num._scalar import mul
from autodrg.num._scalar import div
from autodrg.num._scalar import negate
from autodrg.num._scalar import inverse
from autodrg.num._scalar import power
from autodrg.num._scalar import poly_value
from autodrg.num._scalar import rational_function_value
from autodrg.num._scalar import compare
from autodrg.num._scalar import sign
from autodrg.num._scalar import real_roots
from autodrg.num._io import to_json
from autodrg.num._io import from_json
from autodrg.num._io import approx
from autodrg.num._io import string


__all__ = [
    'T',
    'AlgebraicReal',
    'scalar',
    'rational',
    'from_root',
    'canonical_polynomial',
    'is_rational',
    'is_integer',
    'is_zero',
    'arith',
    'add',
    'sub',
    'mul',
    'div',
    'negate',
    'inverse',
    'power',
    'poly_value',
    'rational_function_value',
    'compare',
    'sign',
    'real_roots',
    'to_json',
    'from_json',
    'approx',
    'string',
]
