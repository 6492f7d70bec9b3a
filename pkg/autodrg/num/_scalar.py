""" exact real scalars

A scalar is either a sympy Rational or an AlgebraicReal: an irreducible
integer polynomial of degree two or more together with an isolating interval
whose rational endpoints are not roots.
"""
import functools
import sympy
from autodrg import par
from autodrg.num import _interval


T = sympy.Symbol('t')
_S = sympy.Symbol('s')


class AlgebraicReal:
    """ A real algebraic number of degree at least two

    :param min_poly: the minimal polynomial; stored primitive over the
        integers with a positive leading coefficient
    :type min_poly: sympy.Poly or list of coefficients, highest first
    :param interval: a rational interval isolating the root
    :type interval: (Rational, Rational)
    """

    def __init__(self, min_poly, interval, check=True):
        """ constructor
        """
        poly = canonical_polynomial(min_poly)
        lower, upper = map(sympy.Rational, interval)

        if check:
            assert poly.degree() >= 2, (
                "{} has degree below 2".format(poly.as_expr()))
            assert poly.is_irreducible, (
                "{} is reducible".format(poly.as_expr()))
            assert lower < upper, (
                "[{}, {}] is not an interval".format(lower, upper))
            assert poly.eval(lower) != 0 and poly.eval(upper) != 0, (
                "endpoints of [{}, {}] are roots".format(lower, upper))
            assert poly.count_roots(lower, upper) == 1, (
                "[{}, {}] does not isolate a root of {}".format(
                    lower, upper, poly.as_expr()))

        self.min_poly = poly
        self.interval = (lower, upper)

    def degree(self):
        """ degree of the minimal polynomial
        """
        return self.min_poly.degree()

    def refine(self):
        """ a copy with the isolating interval bisected once
        """
        lower, upper = self.interval
        mid = (lower + upper) / 2
        if _sign(self.min_poly.eval(mid)) == _sign(self.min_poly.eval(lower)):
            ival = (mid, upper)
        else:
            ival = (lower, mid)
        return AlgebraicReal(self.min_poly, ival, check=False)

    def refine_to(self, width):
        """ a copy refined until the interval is narrower than `width`
        """
        num = self
        while _interval.width(num.interval) >= width:
            num = num.refine()
        return num

    def __neg__(self):
        return negate(self)

    def __add__(self, other):
        return _binary(add, self, other)

    def __radd__(self, other):
        return _binary(add, other, self)

    def __sub__(self, other):
        return _binary(sub, self, other)

    def __rsub__(self, other):
        return _binary(sub, other, self)

    def __mul__(self, other):
        return _binary(mul, self, other)

    def __rmul__(self, other):
        return _binary(mul, other, self)

    def __truediv__(self, other):
        return _binary(div, self, other)

    def __rtruediv__(self, other):
        return _binary(div, other, self)

    def __pow__(self, exp):
        if not isinstance(exp, int):
            return NotImplemented
        return power(self, exp)

    def __eq__(self, other):
        if not _is_scalar_like(other):
            return NotImplemented
        return compare(self, other) == par.Relation.EQ

    def __ne__(self, other):
        if not _is_scalar_like(other):
            return NotImplemented
        return compare(self, other) != par.Relation.EQ

    def __lt__(self, other):
        if not _is_scalar_like(other):
            return NotImplemented
        return compare(self, other) == par.Relation.LT

    def __le__(self, other):
        if not _is_scalar_like(other):
            return NotImplemented
        return compare(self, other) != par.Relation.GT

    def __gt__(self, other):
        if not _is_scalar_like(other):
            return NotImplemented
        return compare(self, other) == par.Relation.GT

    def __ge__(self, other):
        if not _is_scalar_like(other):
            return NotImplemented
        return compare(self, other) != par.Relation.LT

    def __hash__(self):
        return hash(tuple(self.min_poly.all_coeffs()))

    def __repr__(self):
        lower, upper = self.interval
        return 'AlgebraicReal({}, ({}, {}))'.format(
            [int(c) for c in self.min_poly.all_coeffs()], lower, upper)


# constructors
def scalar(val):
    """ normalize an int, string or sympy number to a scalar
    """
    if isinstance(val, AlgebraicReal):
        return val
    if isinstance(val, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(val, (int, str, sympy.Rational)):
        return sympy.Rational(val)
    raise TypeError("cannot interpret {!r} as an exact scalar".format(val))


def rational(num, den=1):
    """ build an exact rational in lowest terms
    """
    if den == 0:
        raise ZeroDivisionError("rational with zero denominator")
    return sympy.Rational(num, den)


def from_root(poly, interval):
    """ the root of `poly` isolated by `interval`, as a scalar

    Irreducible polynomials of degree one give back a Rational.
    """
    poly = canonical_polynomial(poly)
    if poly.degree() == 1:
        return _linear_root(poly)
    return AlgebraicReal(poly, interval)


def canonical_polynomial(poly):
    """ primitive integer form of a polynomial with positive leading
        coefficient
    """
    poly = _qq_poly(poly)
    _, poly = poly.clear_denoms(convert=True)
    _, poly = poly.primitive()
    if poly.LC() < 0:
        poly = -poly
    return poly


# predicates
def is_rational(val):
    """ is this scalar rational?
    """
    return not isinstance(val, AlgebraicReal)


def is_integer(val):
    """ is this scalar an integer?
    """
    val = scalar(val)
    return is_rational(val) and val.q == 1


def is_zero(val):
    """ is this scalar zero?
    """
    val = scalar(val)
    return is_rational(val) and val == 0


# arithmetic
def arith(val1, val2, oper):
    """ exact arithmetic on two scalars

    :param oper: one of par.Operation
    """
    fun_dct = {
        par.Operation.ADD: add,
        par.Operation.SUB: sub,
        par.Operation.MUL: mul,
        par.Operation.DIV: div,
    }
    assert oper in fun_dct, (
        "{} is not a scalar operation".format(oper))
    return fun_dct[oper](val1, val2)


def add(val1, val2):
    """ exact sum
    """
    val1, val2 = scalar(val1), scalar(val2)
    if is_rational(val1) and is_rational(val2):
        return val1 + val2
    if is_rational(val1):
        val1, val2 = val2, val1
    if is_rational(val2):
        if val2 == 0:
            return val1
        return _shift(val1, val2)
    res = _sum_polynomial(val1.min_poly, val2.min_poly)
    return _select_root(
        res, lambda x, y: _interval.add(x.interval, y.interval), (val1, val2))


def sub(val1, val2):
    """ exact difference
    """
    return add(val1, negate(val2))


def mul(val1, val2):
    """ exact product
    """
    val1, val2 = scalar(val1), scalar(val2)
    if is_rational(val1) and is_rational(val2):
        return val1 * val2
    if is_rational(val1):
        val1, val2 = val2, val1
    if is_rational(val2):
        if val2 == 0:
            return sympy.Rational(0)
        if val2 == 1:
            return val1
        return _scale(val1, val2)
    res = _product_polynomial(val1.min_poly, val2.min_poly)
    return _select_root(
        res, lambda x, y: _interval.mul(x.interval, y.interval), (val1, val2))


def div(val1, val2):
    """ exact quotient
    """
    val1, val2 = scalar(val1), scalar(val2)
    if is_zero(val2):
        raise ZeroDivisionError("division of {} by zero".format(val1))
    if is_rational(val2):
        return mul(val1, 1 / val2)
    return mul(val1, inverse(val2))


def negate(val):
    """ exact negation
    """
    val = scalar(val)
    if is_rational(val):
        return -val
    lower, upper = val.interval
    poly = val.min_poly.compose(sympy.Poly(-T, T))
    return AlgebraicReal(poly, (-upper, -lower), check=False)


def inverse(val):
    """ exact reciprocal
    """
    val = scalar(val)
    if is_zero(val):
        raise ZeroDivisionError("inverse of zero")
    if is_rational(val):
        return 1 / val
    while _interval.contains(val.interval, 0):
        val = val.refine()
    lower, upper = val.interval
    poly = sympy.Poly(list(reversed(val.min_poly.all_coeffs())), T)
    return AlgebraicReal(poly, (1 / upper, 1 / lower), check=False)


def power(val, exp):
    """ exact integer power
    """
    val = scalar(val)
    if exp < 0:
        return inverse(power(val, -exp))
    if is_rational(val):
        return val ** exp
    return poly_value(sympy.Poly(T ** exp, T), val)


def poly_value(poly, val):
    """ exact value of a rational polynomial at a scalar

    :param poly: polynomial in `T` (or its coefficients, highest first)
    :param val: the scalar
    """
    poly = _qq_poly(poly)
    val = scalar(val)
    if is_rational(val):
        return sympy.Rational(poly.eval(val))

    rem = poly.rem(_qq_poly(val.min_poly))
    if rem.is_zero:
        return sympy.Rational(0)
    if rem.degree() == 0:
        return sympy.Rational(rem.LC())
    if rem.degree() == 1:
        coeff, const = rem.all_coeffs()
        return add(mul(val, coeff), const)

    res = _value_polynomial(val.min_poly, rem)
    coeffs = rem.all_coeffs()
    return _select_root(
        res, lambda x: _interval.poly(coeffs, x.interval), (val,))


def rational_function_value(num_poly, den_poly, val):
    """ exact value of a quotient of rational polynomials at a scalar
    """
    num_poly, den_poly = _qq_poly(num_poly), _qq_poly(den_poly)
    val = scalar(val)
    if is_rational(val):
        den = den_poly.eval(val)
        if den == 0:
            raise ZeroDivisionError("denominator vanishes at {}".format(val))
        return sympy.Rational(num_poly.eval(val) / den)

    min_poly = _qq_poly(val.min_poly)
    den_rem = den_poly.rem(min_poly)
    if den_rem.is_zero:
        raise ZeroDivisionError("denominator vanishes at {}".format(val))
    den_inv = den_rem.invert(min_poly)
    return poly_value((num_poly * den_inv).rem(min_poly), val)


# comparison
def compare(val1, val2):
    """ exact trichotomy of two scalars

    :rtype: par.Relation value
    """
    val1, val2 = scalar(val1), scalar(val2)
    if is_rational(val1) and is_rational(val2):
        return _relation(val1 - val2)
    if is_rational(val1):
        return par.reverse_relation(compare(val2, val1))
    if is_rational(val2):
        while _interval.contains(val1.interval, val2):
            val1 = val1.refine()
        return (par.Relation.GT if val1.interval[0] > val2 else
                par.Relation.LT)

    if val1.min_poly == val2.min_poly:
        lower = max(val1.interval[0], val2.interval[0])
        upper = min(val1.interval[1], val2.interval[1])
        if lower <= upper and val1.min_poly.count_roots(lower, upper) > 0:
            return par.Relation.EQ

    while not _disjoint(val1.interval, val2.interval):
        val1, val2 = val1.refine(), val2.refine()
    return (par.Relation.LT if val1.interval[1] < val2.interval[0] else
            par.Relation.GT)


def sign(val):
    """ sign of a scalar as -1, 0 or 1
    """
    return {par.Relation.LT: -1,
            par.Relation.EQ: 0,
            par.Relation.GT: 1}[compare(val, 0)]


def real_roots(poly):
    """ the distinct real roots of a polynomial, in decreasing order

    Rational roots come out of the factorization exactly; the others are
    isolated by sympy's real root isolation on each irreducible factor.
    """
    poly = _qq_poly(poly)
    if poly.is_zero:
        raise ValueError("the zero polynomial has no isolated roots")

    roots = []
    for fac, _ in poly.factor_list()[1]:
        if fac.degree() == 1:
            roots.append(_linear_root(fac))
        else:
            fac = canonical_polynomial(fac)
            for (lower, upper), _ in fac.intervals():
                roots.append(AlgebraicReal(fac, (lower, upper), check=False))

    return tuple(sorted(roots, key=functools.cmp_to_key(_compare_key),
                        reverse=True))


# helpers
def _binary(fun, val1, val2):
    if not _is_scalar_like(val1) or not _is_scalar_like(val2):
        return NotImplemented
    return fun(val1, val2)


def _is_scalar_like(val):
    return (isinstance(val, (AlgebraicReal, int, sympy.Rational))
            and not isinstance(val, bool))


def _qq_poly(poly):
    if isinstance(poly, (list, tuple)):
        return sympy.Poly(list(poly), T, domain='QQ')
    return sympy.Poly(poly, T, domain='QQ')


def _linear_root(poly):
    coeff, const = poly.all_coeffs()
    return sympy.Rational(-const, coeff)


def _sign(val):
    return int(bool(val > 0)) - int(bool(val < 0))


def _relation(diff):
    if diff < 0:
        return par.Relation.LT
    if diff > 0:
        return par.Relation.GT
    return par.Relation.EQ


def _compare_key(val1, val2):
    return {par.Relation.LT: -1,
            par.Relation.EQ: 0,
            par.Relation.GT: 1}[compare(val1, val2)]


def _disjoint(ival1, ival2):
    return ival1[1] < ival2[0] or ival2[1] < ival1[0]


def _shift(val, shift):
    """ val + shift for a rational shift
    """
    lower, upper = val.interval
    poly = val.min_poly.compose(sympy.Poly(T - shift, T, domain='QQ'))
    return AlgebraicReal(poly, (lower + shift, upper + shift), check=False)


def _scale(val, factor):
    """ val * factor for a nonzero rational factor
    """
    lower, upper = val.interval
    poly = val.min_poly.compose(sympy.Poly(T / factor, T, domain='QQ'))
    ival = tuple(sorted((lower * factor, upper * factor)))
    return AlgebraicReal(poly, ival, check=False)


@functools.lru_cache(maxsize=4096)
def _sum_polynomial(poly1, poly2):
    """ res_s(p1(s), p2(t - s)), vanishing at every sum of roots
    """
    expr1 = poly1.as_expr().subs(T, _S)
    expr2 = poly2.as_expr().subs(T, T - _S)
    return sympy.Poly(sympy.resultant(expr1, expr2, _S), T)


@functools.lru_cache(maxsize=4096)
def _product_polynomial(poly1, poly2):
    """ res_s(p1(s), s^d p2(t/s)), vanishing at every product of roots
    """
    deg = poly2.degree()
    expr1 = poly1.as_expr().subs(T, _S)
    coeffs = list(reversed(poly2.all_coeffs()))
    expr2 = sum(coeff * T ** pwr * _S ** (deg - pwr)
                for pwr, coeff in enumerate(coeffs))
    return sympy.Poly(sympy.resultant(expr1, expr2, _S), T)


@functools.lru_cache(maxsize=4096)
def _value_polynomial(min_poly, poly):
    """ res_s(p(s), t - g(s)), vanishing at g of every root of p
    """
    expr1 = min_poly.as_expr().subs(T, _S)
    expr2 = T - poly.as_expr().subs(T, _S)
    return sympy.Poly(sympy.resultant(expr1, expr2, _S), T)


def _select_root(res, enclose, operands):
    """ pick the root of `res` that the refined operands enclose
    """
    factors = [canonical_polynomial(fac) for fac, _ in res.factor_list()[1]]
    while True:
        lower, upper = enclose(*operands)
        hits = [(fac, fac.count_roots(lower, upper)) for fac in factors]
        hits = [(fac, cnt) for fac, cnt in hits if cnt > 0]
        if len(hits) == 1 and hits[0][1] == 1:
            fac = hits[0][0]
            if fac.degree() == 1:
                return _linear_root(fac)
            if lower < upper and fac.eval(lower) != 0 and fac.eval(upper) != 0:
                return AlgebraicReal(fac, (lower, upper), check=False)
        operands = tuple(opr.refine() for opr in operands)
