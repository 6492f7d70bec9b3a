""" serialization and display of exact scalars
"""
import sympy
from autodrg.num._scalar import AlgebraicReal
from autodrg.num._scalar import scalar
from autodrg.num._scalar import is_rational


APPROX_WIDTH = sympy.Rational(1, 10**9)


def to_json(val):
    """ JSON-ready form of a scalar

    Rationals become "p/q" strings ("p" when q = 1); algebraic numbers
    become {"min_poly": [...], "interval": ["a/b", "c/d"]} with integer
    coefficients, highest degree first.
    """
    val = scalar(val)
    if is_rational(val):
        return str(val)
    lower, upper = val.interval
    return {'min_poly': [int(coeff) for coeff in val.min_poly.all_coeffs()],
            'interval': [str(lower), str(upper)]}


def from_json(obj):
    """ read a scalar from its JSON-ready form
    """
    if isinstance(obj, dict):
        assert set(obj.keys()) == {'min_poly', 'interval'}, (
            "{} is not an algebraic number".format(obj))
        return AlgebraicReal(obj['min_poly'],
                             tuple(sympy.Rational(lim)
                                   for lim in obj['interval']))
    return sympy.Rational(obj)


def approx(val):
    """ float approximation of a scalar, for display only
    """
    val = scalar(val)
    if is_rational(val):
        return float(val)
    lower, upper = val.refine_to(APPROX_WIDTH).interval
    return float((lower + upper) / 2)


def string(val):
    """ human-readable form: fractions for rationals, and
        "root of p in [a, b] ≈ x" for algebraic numbers
    """
    val = scalar(val)
    if is_rational(val):
        return str(val)
    lower, upper = val.interval
    return 'root of {} in [{}, {}] ≈ {:.6f}'.format(
        sympy.sstr(val.min_poly.as_expr()),
        lower, upper, approx(val))
