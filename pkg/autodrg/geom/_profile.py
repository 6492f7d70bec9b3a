"""
 Delsarte cliques, γ sequences and boundedness of geometric arrays

 An array is geometric-consistent when θ_D = -k/(a_1+1) and the numbers
 γ_i solving γ_i u_i(θ_D) + (a_1+2-γ_i) u_{i+1}(θ_D) = 0 are integers
 in [1, a_1+1].
"""
from autodrg import num
from autodrg import par
from autodrg import drg
from autodrg.geom._family import halved_cube_array
from autodrg.geom._family import hermitian_dual_polar_array
from autodrg.geom._family import is_prime_power


class GeometricProfile:
    """ Geometric structure readable from an array

    :param clique_bound: the Delsarte bound 1 - k/θ_D
    :param gamma: γ_0, ..., γ_{D-1}, or None for non-geometric arrays
    :param gamma_integral: every γ_i is an integer in [1, a_1+1]
    :param a_relation_holds_up_to: largest m with a_i = c_i a_1 for i <= m
    :param bounded_up_to: largest m passing the array-side boundedness test
    :param a_formula: per i = 1..D-1, whether a_i matches its γ expression
    :param line_count: n k/((a_1+1)(a_1+2)), the number of Delsarte cliques
    :param diagnostics: messages explaining what failed
    """

    def __init__(self, clique_bound, gamma, gamma_integral,
                 a_relation_holds_up_to, bounded_up_to, a_formula=None,
                 line_count=None, diagnostics=()):
        """ constructor
        """
        if gamma_integral:
            assert gamma is not None and gamma[0] == 1, (
                "integral γ must start with γ_0 = 1, got {}".format(gamma))

        self.clique_bound = clique_bound
        self.gamma = gamma
        self.gamma_integral = gamma_integral
        self.a_relation_holds_up_to = a_relation_holds_up_to
        self.bounded_up_to = bounded_up_to
        self.a_formula = a_formula
        self.line_count = line_count
        self.diagnostics = tuple(diagnostics)

    def is_geometric(self):
        """ was γ computable at all?
        """
        return self.gamma is not None

    def __repr__(self):
        gam = (None if self.gamma is None else
               '(' + ', '.join(map(str, self.gamma)) + ')')
        return 'GeometricProfile(clique_bound={}, γ={}, m={})'.format(
            num.string(self.clique_bound), gam, self.bounded_up_to)


def delsarte_bound(arr, spec):
    """ the clique size bound 1 - k/θ_D
    """
    return num.sub(1, num.div(drg.valency(arr), spec.theta(-1)))


def geometric_eigenvalue(arr):
    """ -k/(a_1+1), the smallest eigenvalue of a geometric array
    """
    return num.rational(-drg.valency(arr), drg.a_numbers(arr)[1] + 1)


def is_geometric_premise(arr, spec):
    """ does θ_D = -k/(a_1+1) hold?
    """
    return num.compare(spec.theta(-1),
                       geometric_eigenvalue(arr)) == par.Relation.EQ


def gamma_sequence(arr, spec):
    """ the geometric profile of an array

    γ_i = (a_1+2) u_{i+1}/(u_{i+1} - u_i) at θ_D for i = 0..D-1. Arrays
    with θ_D != -k/(a_1+1), or with u_i = u_{i+1} somewhere, are marked
    non-geometric and carry no γ.
    """
    k = drg.valency(arr)
    a_1 = drg.a_numbers(arr)[1]
    d_max = drg.diameter(arr)
    bound = delsarte_bound(arr, spec)
    a_rel = a_relation_holds_up_to(arr)
    m_bnd, diags = boundedness_conditions(arr)
    diags = list(diags)

    if not is_geometric_premise(arr, spec):
        diags.append('θ_D = {} != -k/(a_1+1) = {}; not geometric'.format(
            num.string(spec.theta(-1)),
            num.string(geometric_eigenvalue(arr))))
        return GeometricProfile(bound, None, False, a_rel, m_bnd,
                                diagnostics=diags)

    u_last = spec.u[-1]
    gamma = []
    for i in range(d_max):
        den = u_last[i+1] - u_last[i]
        if den == 0:
            diags.append('u_{} = u_{} at θ_D; γ_{} undefined'.format(
                i, i + 1, i))
            return GeometricProfile(bound, None, False, a_rel, m_bnd,
                                    diagnostics=diags)
        gamma.append((a_1 + 2) * u_last[i+1] / den)
    gamma = tuple(gamma)

    integral = all(num.is_integer(gam) and 1 <= gam <= a_1 + 1
                   for gam in gamma)
    if not integral:
        diags.append('γ = ({}) is not a sequence of integers in [1, {}]'
                     .format(', '.join(map(str, gamma)), a_1 + 1))

    a_formula = None
    if integral:
        a_formula = tuple(
            drg.a_numbers(arr)[i] == a_from_gamma(arr, gamma, i)
            for i in range(1, d_max))
        for i, holds in enumerate(a_formula, start=1):
            if not holds:
                diags.append('a_{} does not match its γ expression {}'
                             .format(i, a_from_gamma(arr, gamma, i)))

    lines = num.rational(drg.vertex_count(arr) * k,
                         (a_1 + 1) * (a_1 + 2))
    if not num.is_integer(lines):
        diags.append('n k/((a_1+1)(a_1+2)) = {} is not an integer'
                     .format(lines))

    return GeometricProfile(bound, gamma, integral, a_rel, m_bnd,
                            a_formula=a_formula, line_count=lines,
                            diagnostics=diags)


def a_from_gamma(arr, gamma, i):
    """ a_i = c_i (a_1+1-γ_{i-1})/γ_{i-1} + b_i (γ_i-1)/(a_1+2-γ_i)

    solved for a_i with b_i = k - a_i - c_i, for 1 <= i <= D-1.
    """
    assert 1 <= i < drg.diameter(arr), (
        "index {} outside 1..D-1".format(i))
    k = drg.valency(arr)
    s_val = drg.a_numbers(arr)[1] + 1
    c_i = drg.intersection_numbers(arr)[0][i]
    g_prev, g_cur = num.scalar(gamma[i-1]), num.scalar(gamma[i])
    return (c_i * (s_val - g_prev) * (s_val + 1 - g_cur) / (g_prev * s_val)
            + (k - c_i) * (g_cur - 1) / s_val)


def a_relation_holds_up_to(arr):
    """ the largest m <= D with a_i = c_i a_1 for every i <= m
    """
    c_all, a_all, _ = drg.intersection_numbers(arr)
    a_1 = a_all[1]
    m_val = 0
    for i in range(1, drg.diameter(arr) + 1):
        if a_all[i] != c_all[i] * a_1:
            break
        m_val = i
    return m_val


def boundedness_conditions(arr, k112_free=None):
    """ the largest m certified m-bounded from the array

    m <= D-1 must have c_{m+1} != 1, a_i = c_i a_1 for i <= m and
    c_{m-1} < c_m; a_1 != 0 and K_{1,1,2}-freeness are needed throughout.
    Only the a_i relation is cumulative, so every m is tried.
    K_{1,1,2}-freeness is a graph property: None means assumed, and the
    diagnostics say so.

    :returns: (m, diagnostics)
    """
    c_all, a_all, _ = drg.intersection_numbers(arr)
    a_1 = a_all[1]
    if a_1 == 0:
        return 0, ('a_1 = 0',)
    if k112_free is False:
        return 0, ('not K_{1,1,2}-free',)

    diags = []
    m_val = 0
    for cand in range(1, drg.diameter(arr)):
        if a_all[cand] != c_all[cand] * a_1:
            diags.append('a_{} = {} != c_{} a_1 = {}'.format(
                cand, a_all[cand], cand, c_all[cand] * a_1))
            break
        if c_all[cand+1] == 1:
            diags.append('c_{} = 1'.format(cand + 1))
        elif not c_all[cand-1] < c_all[cand]:
            diags.append('c_{} = c_{}'.format(cand - 1, cand))
        else:
            m_val = cand
    else:
        cand = drg.diameter(arr)
        if cand >= 2 and a_all[cand] != c_all[cand] * a_1:
            diags.append('a_{} = {} != c_{} a_1 = {}'.format(
                cand, a_all[cand], cand, c_all[cand] * a_1))

    if k112_free is None:
        diags.append('K_{1,1,2}-freeness assumed')
    return m_val, tuple(diags)


def conjecture_branches(arr, spec):
    """ the light tail classification cases whose array pattern matches

    :rtype: tuple of par.ConjectureBranch values
    """
    k = drg.valency(arr)
    d_max = drg.diameter(arr)
    c_all, a_all, b_all = drg.intersection_numbers(arr)
    a_1 = a_all[1]
    flags = []
    if a_1 == 0:
        flags.append(par.ConjectureBranch.A1_ZERO)
    if d_max == 3 and b_all[2] == 1 and c_all[3] == k:
        flags.append(par.ConjectureBranch.ANTIPODAL)
    if a_1 and a_all[d_max] == 0 and _is_tight(arr, spec):
        flags.append(par.ConjectureBranch.TIGHT)
    if arr == halved_cube_array(2 * d_max + 1):
        flags.append(par.ConjectureBranch.HALVED_ODD_CUBE)
    if d_max >= 2 and is_prime_power(a_1 + 1):
        if arr == hermitian_dual_polar_array(d_max, a_1 + 1):
            flags.append(par.ConjectureBranch.HERMITIAN)
    return tuple(flags)


def _is_tight(arr, spec):
    """ (θ_1 + k/(a_1+1))(θ_D + k/(a_1+1)) = -k a_1 b_1/(a_1+1)^2
    """
    k = drg.valency(arr)
    a_1 = drg.a_numbers(arr)[1]
    b_1 = drg.b_numbers(arr)[1] if drg.diameter(arr) > 1 else 0
    shift = num.rational(k, a_1 + 1)
    lhs = num.mul(num.add(spec.theta(1), shift),
                  num.add(spec.theta(-1), shift))
    rhs = num.rational(-k * a_1 * b_1, (a_1 + 1) ** 2)
    return num.compare(lhs, rhs) == par.Relation.EQ


# I/O
def profile_dict(prof):
    """ JSON-ready dictionary of a geometric profile
    """
    return {
        'clique_bound': num.to_json(prof.clique_bound),
        'gamma': (None if prof.gamma is None else
                  [num.to_json(gam) for gam in prof.gamma]),
        'gamma_integral': prof.gamma_integral,
        'a_relation_holds_up_to': prof.a_relation_holds_up_to,
        'bounded_up_to': prof.bounded_up_to,
        'a_formula': (None if prof.a_formula is None else
                      list(prof.a_formula)),
        'line_count': (None if prof.line_count is None else
                       num.to_json(prof.line_count)),
        'diagnostics': list(prof.diagnostics),
    }
