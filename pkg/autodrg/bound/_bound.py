""" eigenvalue and multiplicity bounds whose equality cases are light tails
"""
import logging
import sympy
from autodrg import num
from autodrg import par
from autodrg import drg
from autodrg import krein
from autodrg.error import HypothesisError
from autodrg.error import InconsistencyError


class BoundReport:
    """ An exact comparison of the two sides of a bound

    :param bound_name: one of par.BoundName
    :param lhs: the side that is bounded
    :param rhs: the bound
    :param equality_semantics: what equality certifies
    :param assumptions: caller-supplied hypotheses the bound relies on
    :type assumptions: dict
    :param details: derived quantities worth reporting
    :type details: dict
    """

    def __init__(self, bound_name, lhs, rhs, equality_semantics,
                 assumptions=None, details=None):
        """ constructor
        """
        assert bound_name in par.all_values(par.BoundName), (
            "{} is not a bound name".format(bound_name))

        self.bound_name = bound_name
        self.lhs = lhs
        self.rhs = rhs
        self.relation = num.compare(lhs, rhs)
        self.equality_semantics = equality_semantics
        self.assumptions = dict(assumptions or {})
        self.details = dict(details or {})

    def is_equality(self):
        """ does the bound hold with equality?
        """
        return self.relation == par.Relation.EQ

    def __repr__(self):
        return '{}({} {} {})'.format(
            self.bound_name, num.string(self.lhs), self.relation,
            num.string(self.rhs))


def multiplicity_bound(arr, spec, i):
    """ (m_i - k)/k >= -(θ_i+1)^2 a_1(a_1+1) / D(θ_i), where
        D(θ) = ((a_1+1)θ + k)^2 + k a_1 b_1

    with equality iff E_i is a light tail. When θ_i = -k/(a_1+1) with
    a_1 != 0 the report also carries the floor m_i >= a_1 k/(a_1+1) + 1.

    :raises HypothesisError: unless θ_i != ±k, k >= 3 and D >= 2
    """
    k = drg.valency(arr)
    theta = spec.theta(i)
    reasons = []
    if k < 3:
        reasons.append('k >= 3')
    if drg.diameter(arr) < 2:
        reasons.append('D >= 2')
    if num.compare(theta, k) == par.Relation.EQ:
        reasons.append('θ_{} != k'.format(i))
    if num.compare(theta, -k) == par.Relation.EQ:
        reasons.append('θ_{} != -k'.format(i))
    if reasons:
        raise HypothesisError(reasons)

    a_1 = drg.a_numbers(arr)[1]
    b_1 = drg.b_numbers(arr)[1]
    t = num.T
    num_poly = sympy.Poly(-a_1 * (a_1 + 1) * (t + 1) ** 2, t)
    den_poly = sympy.Poly(((a_1 + 1) * t + k) ** 2 + k * a_1 * b_1, t)

    m_i = spec.multiplicities[i]
    lhs = num.rational(m_i - k, k)
    rhs = num.rational_function_value(num_poly, den_poly, theta)

    details = {}
    theta_geom = num.rational(-k, a_1 + 1)
    if a_1 and num.compare(theta, theta_geom) == par.Relation.EQ:
        floor = num.rational(a_1 * k, a_1 + 1) + 1
        details['multiplicity_floor'] = floor
        details['floor_holds'] = bool(m_i >= floor)

    return BoundReport(par.BoundName.MULTIPLICITY_LOWER, lhs, rhs,
                       'E_{} is a light tail'.format(i), details=details)


def theta1_lower_bound(arr, spec):
    """ θ_1 >= (k - (a_1+1)(a_1+2)) / (a_1+1)^2

    with equality iff E_D is a light tail with associate E_1.

    :raises HypothesisError: unless a_1 != 0, D >= 2 and θ_D = -k/(a_1+1)
    """
    _check_geometric_hypotheses(arr, spec)
    k = drg.valency(arr)
    a_1 = drg.a_numbers(arr)[1]
    rhs = num.rational(k - (a_1 + 1) * (a_1 + 2), (a_1 + 1) ** 2)
    return BoundReport(par.BoundName.THETA1_LOWER, spec.theta(1), rhs,
                       'E_D is a light tail with associated idempotent E_1')


def theta1_upper_bound(arr, spec, contains_gq=False):
    """ θ_1 <= (k - (a_1+1))/(c_2 - 1) - 1

    valid when the graph contains an induced GQ(a_1+1, c_2-1); the report
    records whether the caller asserted that containment.

    :raises HypothesisError: if D < 2 or c_2 = 1
    """
    if drg.diameter(arr) < 2:
        raise HypothesisError(['D >= 2'])
    c_2 = drg.c_numbers(arr)[1]
    if c_2 == 1:
        raise HypothesisError(['c_2 != 1'])

    k = drg.valency(arr)
    a_1 = drg.a_numbers(arr)[1]
    rhs = num.rational(k - (a_1 + 1), c_2 - 1) - 1
    return BoundReport(par.BoundName.THETA1_UPPER, spec.theta(1), rhs,
                       'θ_1 attains the induced generalized quadrangle bound',
                       assumptions={'contains_induced_gq': bool(contains_gq)})


def light_tail_sufficiency(arr, spec, contains_gq=False):
    """ the squeeze of the two θ_1 bounds

    :returns: (whether both bounds are equalities, (lower, upper) reports)
    :raises HypothesisError: listing each violated hypothesis
    :raises InconsistencyError: if the squeeze holds but the Krein scan
        does not find the light tail at D with associate 1
    """
    k = drg.valency(arr)
    a_1 = drg.a_numbers(arr)[1]
    reasons = []
    if drg.diameter(arr) < 2:
        reasons.append('D >= 2')
    else:
        c_2 = drg.c_numbers(arr)[1]
        if c_2 != (a_1 + 1) ** 2 + 1:
            reasons.append('c_2 = {} != (a_1+1)^2+1 = {}'.format(
                c_2, (a_1 + 1) ** 2 + 1))
    if a_1 == 0:
        reasons.append('a_1 != 0')
    theta_geom = num.rational(-k, a_1 + 1)
    if num.compare(spec.theta(-1), theta_geom) != par.Relation.EQ:
        reasons.append('smallest eigenvalue θ_D = -k/(a_1+1)')
    if not contains_gq:
        reasons.append('induced GQ(a_1+1, c_2-1) containment')
    if reasons:
        raise HypothesisError(reasons)

    lower = theta1_lower_bound(arr, spec)
    upper = theta1_upper_bound(arr, spec, contains_gq=contains_gq)
    holds = lower.is_equality() and upper.is_equality()
    if holds:
        d_max = drg.diameter(arr)
        scan = krein.light_tail_scan(spec, krein.krein_tensor(spec))
        rep = krein.light_tail_report(scan, d_max)
        if not (rep.is_light_tail and rep.associated_index == 1):
            raise InconsistencyError(
                '{}: θ_1 bounds are tight but E_D is not a light tail with '
                'associate E_1'.format(drg.string(arr)))
    return holds, (lower, upper)


def profile_coefficients(arr):
    """ α = (a_1+1)/(a_1 k + a_1 + 1) and β = a_1 k/(a_1 k + a_1 + 1)
    """
    k = drg.valency(arr)
    a_1 = drg.a_numbers(arr)[1]
    den = a_1 * k + a_1 + 1
    return num.rational(a_1 + 1, den), num.rational(a_1 * k, den)


def profile_table(arr, spec):
    """ rows (j, u_j(θ_D)^2, α + β u_j(θ_1)) for j = 0..D
    """
    alpha, beta = profile_coefficients(arr)
    u_last, u_first = spec.u[-1], spec.u[1]
    return tuple(
        (j, num.mul(u_last[j], u_last[j]),
         num.add(alpha, num.mul(beta, u_first[j])))
        for j in range(len(u_last)))


def profile_identity(arr, spec):
    """ does u_j(θ_D)^2 = α + β u_j(θ_1) hold for every j?

    Returns false (and logs why) unless E_D is a light tail with
    associate E_1.
    """
    d_max = drg.diameter(arr)
    scan = krein.light_tail_scan(spec, krein.krein_tensor(spec))
    rep = krein.light_tail_report(scan, d_max)
    if not (rep.is_light_tail and rep.associated_index == 1):
        logging.info('{}: E_D is not a light tail with associate E_1'
                     .format(drg.string(arr)))
        return False

    for j, lhs, rhs in profile_table(arr, spec):
        if num.compare(lhs, rhs) != par.Relation.EQ:
            logging.info('{}: profile identity fails at j = {}: {} != {}'
                         .format(drg.string(arr), j, num.string(lhs),
                                 num.string(rhs)))
            return False
    return True


def check_consistency(arr, spec):
    """ cross-check every applicable bound against the Krein scan

    :returns: the multiplicity bound reports, by eigenvalue index
    :raises InconsistencyError: on any disagreement
    """
    scan = krein.light_tail_scan(spec, krein.krein_tensor(spec))
    reports = {}
    if drg.valency(arr) < 3 or drg.diameter(arr) < 2:
        return reports

    k = drg.valency(arr)
    for rep in scan:
        i = rep.eigenvalue_index
        theta = spec.theta(i)
        if num.compare(theta, -k) == par.Relation.EQ:
            continue
        brep = multiplicity_bound(arr, spec, i)
        reports[i] = brep
        if brep.relation == par.Relation.LT:
            logging.warning('{}: multiplicity bound fails at i = {}; the '
                            'array is not realized by a graph'
                            .format(drg.string(arr), i))
            continue
        if brep.is_equality() != rep.is_light_tail:
            raise InconsistencyError(
                '{}: multiplicity bound gives {} at i = {} but the Krein '
                'scan says light tail = {}'.format(
                    drg.string(arr), brep.relation, i, rep.is_light_tail))

    if _geometric_hypotheses(arr, spec):
        return reports
    lower = theta1_lower_bound(arr, spec)
    last = krein.light_tail_report(scan, drg.diameter(arr))
    tail_1 = last.is_light_tail and last.associated_index == 1
    if lower.relation == par.Relation.LT:
        logging.warning('{}: θ_1 lower bound fails; the array is not '
                        'realized by a graph'.format(drg.string(arr)))
    elif lower.is_equality() != tail_1:
        raise InconsistencyError(
            '{}: θ_1 lower bound gives {} but light tail with associate 1 '
            'is {}'.format(drg.string(arr), lower.relation, tail_1))
    return reports


def bound_dict(report):
    """ JSON-ready dictionary of a bound report
    """
    details = {}
    for key, val in report.details.items():
        details[key] = val if isinstance(val, bool) else num.to_json(val)
    return {
        'bound_name': report.bound_name,
        'lhs': num.to_json(report.lhs),
        'rhs': num.to_json(report.rhs),
        'relation': report.relation,
        'equality_semantics': report.equality_semantics,
        'assumptions': dict(report.assumptions),
        'details': details,
    }


def _geometric_hypotheses(arr, spec):
    """ violated hypotheses of the θ_1 lower bound
    """
    k = drg.valency(arr)
    a_1 = drg.a_numbers(arr)[1]
    reasons = []
    if drg.diameter(arr) < 2:
        reasons.append('D >= 2')
    if a_1 == 0:
        reasons.append('a_1 != 0')
    theta_geom = num.rational(-k, a_1 + 1)
    if num.compare(spec.theta(-1), theta_geom) != par.Relation.EQ:
        reasons.append('smallest eigenvalue θ_D = -k/(a_1+1)')
    return reasons


def _check_geometric_hypotheses(arr, spec):
    reasons = _geometric_hypotheses(arr, spec)
    if reasons:
        raise HypothesisError(reasons)
