""" closed intervals with exact rational endpoints
"""


def add(ival1, ival2):
    """ enclosure of a sum
    """
    return (ival1[0] + ival2[0], ival1[1] + ival2[1])


def mul(ival1, ival2):
    """ enclosure of a product
    """
    prods = [lim1 * lim2 for lim1 in ival1 for lim2 in ival2]
    return (min(prods), max(prods))


def poly(coeffs, ival):
    """ enclosure of a polynomial over an interval, by Horner's rule

    :param coeffs: rational coefficients, highest degree first
    :param ival: the interval
    :rtype: (Rational, Rational)
    """
    lower = upper = coeffs[0]
    for coeff in coeffs[1:]:
        lower, upper = mul((lower, upper), ival)
        lower, upper = lower + coeff, upper + coeff
    return (lower, upper)


def width(ival):
    """ width of an interval
    """
    return ival[1] - ival[0]


def contains(ival, val):
    """ does the closed interval contain a value?
    """
    return ival[0] <= val <= ival[1]
