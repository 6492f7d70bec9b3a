"""
 array-level classification of light tails at the smallest eigenvalue

 Each classifier replays the argument that a 2-bounded geometric array
 whose smallest idempotent is a light tail must be the array of a
 Hermitian dual polar graph ^2A_{2D-1}(r). Every step is recorded in a
 trace of {step, equation, passed, values} entries; the first failing
 step decides the verdict.
"""
import logging
from autodrg import num
from autodrg import par
from autodrg import drg
from autodrg import krein
from autodrg import bound
from autodrg.error import InconsistencyError
from autodrg.geom._family import hermitian_dual_polar_array
from autodrg.geom._family import is_prime_power
from autodrg.geom._profile import gamma_sequence
from autodrg.geom._profile import is_geometric_premise
from autodrg.geom._profile import geometric_eigenvalue
from autodrg.geom._profile import boundedness_conditions


COUNTEREXAMPLE = 'THEOREM COUNTEREXAMPLE CANDIDATE'


class ClassificationVerdict:
    """ The outcome of a classification pipeline

    :param verdict: one of par.Verdict
    :param trace: the recorded steps
    :param r: the field parameter of an IsHermitianDualPolar verdict
    :param reason: the failed hypothesis of a HypothesisFails verdict
    :param step: the failed step of a ConclusionFails verdict
    :param detail: what went wrong
    :param conditional: the conclusion rests on a cited result
    """

    def __init__(self, verdict, trace, r=None, reason=None, step=None,
                 detail=None, conditional=False):
        """ constructor
        """
        assert par.is_verdict(verdict), (
            "{} is not a verdict".format(verdict))
        if verdict == par.Verdict.HERMITIAN_DUAL_POLAR:
            assert r is not None
        if verdict == par.Verdict.HYPOTHESIS_FAILS:
            assert reason is not None
        if verdict == par.Verdict.CONCLUSION_FAILS:
            assert step is not None

        self.verdict = verdict
        self.trace = list(trace)
        self.r = r
        self.reason = reason
        self.step = step
        self.detail = detail
        self.conditional = conditional

    def is_hermitian_dual_polar(self):
        """ did the pipeline identify the array?
        """
        return self.verdict == par.Verdict.HERMITIAN_DUAL_POLAR

    def label(self):
        """ e.g. IsHermitianDualPolar(2) or HypothesisFails(light tail)
        """
        arg = {par.Verdict.HERMITIAN_DUAL_POLAR: self.r,
               par.Verdict.HYPOTHESIS_FAILS: self.reason,
               par.Verdict.CONCLUSION_FAILS: self.step}[self.verdict]
        return '{}({})'.format(self.verdict, arg)

    def __repr__(self):
        return 'ClassificationVerdict({}, steps={})'.format(
            self.label(), len(self.trace))


def c_formula(a_1, i):
    """ c_i = ((a_1+1)^{2i} - 1)/((a_1+1)^2 - 1)
    """
    s_val = a_1 + 1
    return num.rational(s_val ** (2 * i) - 1, s_val ** 2 - 1)


def theta_prime(k, a_1):
    """ θ' = (k - (a_1+1)(a_1+2))/(a_1+1)^2
    """
    return num.rational(k - (a_1 + 1) * (a_1 + 2), (a_1 + 1) ** 2)


def u_theta_prime(k, a_1, i):
    """ u_i(θ') = ((a_1+1)^{-2i}(a_1 k + a_1 + 1) - (a_1+1))/(k a_1)

    valid when u_i(θ_D) = (-1/(a_1+1))^i.
    """
    s_val = a_1 + 1
    return ((num.rational(a_1 * k + s_val, s_val ** (2 * i)) - s_val)
            / (k * a_1))


def c_closed_form(k, a_1, m, gamma):
    """ c_{m+1} forced by γ_{m+1} = gamma when γ_i = 1 for i <= m

    Solves c_{m+1} u_m + a_{m+1} u_{m+1} + b_{m+1} u_{m+2} = θ' u_{m+1}
    at θ', with a_{m+1} = c_{m+1}(a_1+1-γ) + k(γ-1)/(a_1+1) and
    u_{m+2}(θ') read off the light tail profile. Returns None when the
    coefficient of c_{m+1} vanishes.
    """
    s_val = a_1 + 1
    gamma = num.scalar(gamma)
    alpha, beta = num.rational(s_val, a_1 * k + s_val), num.rational(
        a_1 * k, a_1 * k + s_val)
    u_m = u_theta_prime(k, a_1, m)
    u_m1 = u_theta_prime(k, a_1, m + 1)
    u_last_sq = (gamma / (s_val + 1 - gamma)) ** 2 / s_val ** (2 * (m + 1))
    u_m2 = (u_last_sq - alpha) / beta

    a_coeff = s_val - gamma
    a_const = k * (gamma - 1) / s_val
    theta = theta_prime(k, a_1)
    den = u_m + a_coeff * u_m1 - (a_coeff + 1) * u_m2
    if den == 0:
        return None
    return ((theta - a_const) * u_m1 - (k - a_const) * u_m2) / den


def theorem11_classify(arr, spec, two_bounded=False):
    """ Classify a 2-bounded array with θ_D = -k/(a_1+1) and light tail E_D

    :param two_bounded: the caller asserts the graph is 2-bounded
    :rtype: ClassificationVerdict
    :raises InconsistencyError: if the Krein scan and the multiplicity bound
        disagree about E_D
    """
    trace = []
    d_max = drg.diameter(arr)
    k = drg.valency(arr)
    c_all, a_all, _ = drg.intersection_numbers(arr)
    a_1 = a_all[1]
    s_val = a_1 + 1

    # hypotheses
    if d_max < 2:
        _record(trace, par.Step.DIAMETER, 'D >= 3', False, D=d_max)
        return _hypothesis_fails(arr, trace, par.Step.DIAMETER,
                                 'D = {} < 3'.format(d_max))
    _record(trace, par.Step.DIAMETER, 'D >= 3', d_max >= 3, D=d_max)
    if not _check(trace, par.Step.VALENCY, 'k >= 3', k >= 3, k=k):
        return _hypothesis_fails(arr, trace, par.Step.VALENCY,
                                 'k = {} < 3'.format(k))
    if not _check(trace, par.Step.NON_BIPARTITE, 'a_i != 0 for some i',
                  not drg.is_bipartite(arr), a=list(a_all)):
        return _hypothesis_fails(arr, trace, par.Step.NON_BIPARTITE,
                                 'every a_i is 0')
    if not _check(trace, par.Step.SMALLEST_EIGENVALUE, 'θ_D = -k/(a_1+1)',
                  is_geometric_premise(arr, spec), theta_D=spec.theta(-1),
                  target=geometric_eigenvalue(arr)):
        return _hypothesis_fails(arr, trace, par.Step.SMALLEST_EIGENVALUE,
                                 'θ_D = {}'.format(num.string(spec.theta(-1))))

    tail, detail = _light_tail_at_last(arr, spec, trace)
    if not tail:
        return _hypothesis_fails(arr, trace, par.Step.LIGHT_TAIL, detail)

    if not _check(trace, par.Step.TWO_BOUNDED, 'caller asserts 2-bounded',
                  bool(two_bounded), assumed=bool(two_bounded)):
        return _hypothesis_fails(arr, trace, par.Step.TWO_BOUNDED,
                                 '2-boundedness not assumed')
    if d_max >= 3:
        m_bnd, diags = boundedness_conditions(arr)
        if not _check(trace, par.Step.TWO_BOUNDED,
                      'a_i = c_i a_1 (i <= m), c_{m-1} < c_m, c_{m+1} != 1',
                      m_bnd >= 2, m=m_bnd, diagnostics=list(diags)):
            return _hypothesis_fails(arr, trace, par.Step.TWO_BOUNDED,
                                     '; '.join(diags))

    # γ and the profile
    prof = gamma_sequence(arr, spec)
    if not _check(trace, par.Step.GAMMA,
                  'γ_i u_i(θ_D) + (a_1+2-γ_i) u_{i+1}(θ_D) = 0',
                  prof.gamma_integral, gamma=prof.gamma):
        return _conclusion_fails(arr, trace, par.Step.GAMMA,
                                 '; '.join(prof.diagnostics))
    if not _check(trace, par.Step.A_RELATION,
                  'a_i = c_i (a_1+1-γ_{i-1})/γ_{i-1} '
                  '+ b_i (γ_i-1)/(a_1+2-γ_i)',
                  all(prof.a_formula), holds=list(prof.a_formula)):
        return _conclusion_fails(arr, trace, par.Step.A_RELATION,
                                 '; '.join(prof.diagnostics))

    theta_1 = spec.theta(1)
    lower = bound.theta1_lower_bound(arr, spec)
    if not _check(trace, par.Step.PROFILE,
                  "θ_1 = θ' and u_i(θ_D)^2 = α + β u_i(θ_1)",
                  lower.is_equality() and bound.profile_identity(arr, spec),
                  theta_1=theta_1, theta_prime=lower.rhs):
        return _conclusion_fails(
            arr, trace, par.Step.PROFILE,
            'θ_1 = {} vs θ\' = {}'.format(num.string(theta_1),
                                          num.string(lower.rhs)))

    # induction on m
    for m_val in range(2, d_max):
        failure = _induction_step(arr, spec, prof, m_val, trace)
        if failure is not None:
            return failure

    # terminal step at D
    u_last, u_first = spec.u[-1], spec.u[1]
    gamma_ok = all(gam == 1 for gam in prof.gamma)
    terminal = {
        'gamma_all_one': gamma_ok,
        'a_D = a_1 c_D': a_all[d_max] == a_1 * c_all[d_max],
        'a_D = (a_1+1) c_D - k/(a_1+1)': (
            a_all[d_max] == s_val * c_all[d_max] - num.rational(k, s_val)),
        'k = (a_1+1) c_D': k == s_val * c_all[d_max],
        'c_D closed form': c_all[d_max] == c_formula(a_1, d_max),
        'u_D(θ_D)': u_last[d_max] == num.rational(-1, s_val) ** d_max,
        "u_D(θ')": u_first[d_max] == u_theta_prime(k, a_1, d_max),
    }
    if not _check(trace, par.Step.TERMINAL,
                  'a_D = a_1 c_D, k = (a_1+1) c_D, '
                  'c_D = ((a_1+1)^{2D}-1)/((a_1+1)^2-1)',
                  all(terminal.values()), c_D=c_all[d_max],
                  expected_c_D=c_formula(a_1, d_max), checks=terminal):
        failed = [name for name, holds in terminal.items() if not holds]
        return _conclusion_fails(arr, trace, par.Step.TERMINAL,
                                 ', '.join(failed) + ' failed')

    if not _check(trace, par.Step.PRIME_POWER, 'a_1 + 1 is a prime power',
                  is_prime_power(s_val), r=s_val):
        return _conclusion_fails(arr, trace, par.Step.PRIME_POWER,
                                 'a_1 + 1 = {} is not a prime power'
                                 .format(s_val))

    gen = hermitian_dual_polar_array(d_max, s_val)
    if not _check(trace, par.Step.IDENTIFICATION,
                  'array = ^2A_{2D-1}(a_1+1)', arr == gen,
                  generator=drg.string(gen)):
        return _conclusion_fails(arr, trace, par.Step.IDENTIFICATION,
                                 '{} != {}'.format(drg.string(arr),
                                                   drg.string(gen)))

    if d_max < 3:
        return _hypothesis_fails(arr, trace, par.Step.DIAMETER,
                                 'D = 2 < 3; every array-level step passes')
    return ClassificationVerdict(par.Verdict.HERMITIAN_DUAL_POLAR, trace,
                                 r=s_val)


def _light_tail_at_last(arr, spec, trace):
    """ E_D light tail from the Krein scan, cross-checked with the
        multiplicity bound
    """
    d_max = drg.diameter(arr)
    scan = krein.light_tail_scan(spec, krein.krein_tensor(spec))
    rep = krein.light_tail_report(scan, d_max)
    brep = bound.multiplicity_bound(arr, spec, d_max)
    _record(trace, par.Step.LIGHT_TAIL,
            'E_D ∘ E_D = a E_0 + b E_h', rep.is_light_tail,
            associated_index=rep.associated_index,
            bound_relation=brep.relation, lhs=brep.lhs, rhs=brep.rhs)
    if brep.relation == par.Relation.LT:
        return False, 'multiplicity bound fails at D'
    if brep.is_equality() != rep.is_light_tail:
        raise InconsistencyError(
            '{}: Krein scan says light tail = {} at D but the multiplicity '
            'bound gives {}'.format(drg.string(arr), rep.is_light_tail,
                                    brep.relation))
    return rep.is_light_tail, (None if rep.is_light_tail else
                               'E_D is not a light tail')


def _induction_step(arr, spec, prof, m_val, trace):
    """ γ_i = 1 and c_i in closed form for i <= m, then force γ_{m+1} = 1
    """
    d_max = drg.diameter(arr)
    k = drg.valency(arr)
    c_all, a_all, _ = drg.intersection_numbers(arr)
    a_1 = a_all[1]
    s_val = a_1 + 1

    gam_ok = all(prof.gamma[i] == 1 for i in range(min(m_val + 1, d_max)))
    c_ok = all(c_all[i] == c_formula(a_1, i) for i in range(1, m_val + 1))
    if not _check(trace, par.Step.C_FORMULA,
                  'c_i = ((a_1+1)^{2i}-1)/((a_1+1)^2-1), γ_i = 1 (i <= m)',
                  gam_ok and c_ok, m=m_val,
                  c=list(c_all[1:m_val+1]),
                  expected=[c_formula(a_1, i) for i in range(1, m_val + 1)],
                  gamma=list(prof.gamma[:m_val+1])):
        return _conclusion_fails(arr, trace, par.Step.C_FORMULA,
                                 'c_i or γ_i off the closed form at m = {}'
                                 .format(m_val))

    u_last, u_first = spec.u[-1], spec.u[1]
    idxs = range(m_val + 2)
    u_ok = all(u_last[i] == num.rational(-1, s_val) ** i and
               u_first[i] == u_theta_prime(k, a_1, i) for i in idxs)
    if not _check(trace, par.Step.U_VALUES,
                  "u_i(θ_D) = (-1/(a_1+1))^i, u_i(θ') closed form",
                  u_ok, m=m_val, u_theta_D=list(u_last[:m_val+2]),
                  u_theta_1=list(u_first[:m_val+2])):
        return _conclusion_fails(arr, trace, par.Step.U_VALUES,
                                 'standard sequence off its closed form at '
                                 'm = {}'.format(m_val))

    if m_val > d_max - 2:
        return None

    c_next = c_all[m_val+1]
    growth = c_all[m_val] + (c_all[m_val] - c_all[m_val-1]) * (
        c_all[2] - c_all[1])
    if not _check(trace, par.Step.C_GROWTH,
                  'c_{m+1} >= c_m + (c_m - c_{m-1})(c_2 - c_1)',
                  c_next >= growth, m=m_val, c_next=c_next, lower=growth,
                  closed_form=c_formula(a_1, m_val + 1)):
        return _conclusion_fails(arr, trace, par.Step.C_GROWTH,
                                 'c_{} = {} < {}'.format(m_val + 1, c_next,
                                                         growth))

    gap = s_val * c_formula(a_1, m_val + 1)
    if not _check(trace, par.Step.VALENCY_GAP,
                  'k > (a_1+1)((a_1+1)^{2(m+1)}-1)/((a_1+1)^2-1)',
                  k > gap, m=m_val, k=k, lower=gap):
        return _conclusion_fails(arr, trace, par.Step.VALENCY_GAP,
                                 'k = {} <= {}'.format(k, gap))

    admissible = tuple(range(1, s_val // 2 + 1))
    closed = {gam: c_closed_form(k, a_1, m_val, gam) for gam in admissible}
    consistent = [gam for gam, c_gam in closed.items()
                  if c_gam is not None and c_gam >= growth]
    gam_next = prof.gamma[m_val+1]
    if not _check(trace, par.Step.GAMMA_CAP, 'γ_{m+1} <= (a_1+1)/2',
                  gam_next in admissible, m=m_val, gamma_next=gam_next,
                  admissible=list(admissible)):
        return _conclusion_fails(arr, trace, par.Step.GAMMA_CAP,
                                 'γ_{} = {} exceeds (a_1+1)/2'.format(
                                     m_val + 1, gam_next))

    c_gam = closed[int(gam_next)]
    if not _check(trace, par.Step.C_FROM_GAMMA,
                  'c_{m+1} from the recurrence at θ\' given γ_{m+1}',
                  c_gam is not None and c_gam == c_next and gam_next == 1,
                  m=m_val, closed_form={str(gam): val
                                        for gam, val in closed.items()},
                  consistent_gamma=consistent, gamma_next=gam_next,
                  c_next=c_next):
        return _conclusion_fails(
            arr, trace, par.Step.C_FROM_GAMMA,
            'γ_{} = {} with c_{} = {} (closed form {})'.format(
                m_val + 1, gam_next, m_val + 1, c_next,
                None if c_gam is None else num.string(c_gam)))
    return None


def theorem12_check(arr, spec):
    """ Check the a_1 = 1 case: c_2 >= 5 and θ_D = -k/2 force ^2A_{2D-1}(2)

    Diameters up to 4 rest on a cited result and are marked conditional;
    larger diameters are discharged through theorem11_classify once the γ
    step pattern gives 2-boundedness.

    :rtype: ClassificationVerdict
    """
    trace = []
    d_max = drg.diameter(arr)
    k = drg.valency(arr)
    c_all, a_all, _ = drg.intersection_numbers(arr)

    if not _check(trace, par.Step.A1_ONE, 'a_1 = 1', a_all[1] == 1,
                  a_1=a_all[1]):
        return _hypothesis_fails(arr, trace, par.Step.A1_ONE,
                                 'a_1 = {}'.format(a_all[1]))
    if not _check(trace, par.Step.VALENCY, 'k >= 3', k >= 3, k=k):
        return _hypothesis_fails(arr, trace, par.Step.VALENCY,
                                 'k = {} < 3'.format(k))
    if not _check(trace, par.Step.DIAMETER, 'D >= 2', d_max >= 2, D=d_max):
        return _hypothesis_fails(arr, trace, par.Step.DIAMETER,
                                 'D = {} < 2'.format(d_max))
    if not _check(trace, par.Step.C2_MIN, 'c_2 >= 5', c_all[2] >= 5,
                  c_2=c_all[2]):
        return _hypothesis_fails(arr, trace, par.Step.C2_MIN,
                                 'c_2 = {} < 5'.format(c_all[2]))
    if not _check(trace, par.Step.SMALLEST_EIGENVALUE, 'θ_D = -k/2',
                  is_geometric_premise(arr, spec), theta_D=spec.theta(-1)):
        return _hypothesis_fails(arr, trace, par.Step.SMALLEST_EIGENVALUE,
                                 'θ_D = {}'.format(num.string(spec.theta(-1))))

    prof = gamma_sequence(arr, spec)
    gamma = prof.gamma
    monotone = prof.gamma_integral and all(
        gam_a <= gam_b for gam_a, gam_b in zip(gamma, gamma[1:]))
    if not _check(trace, par.Step.GAMMA, 'γ_i in {1, 2}, non-decreasing',
                  monotone, gamma=gamma):
        return _conclusion_fails(arr, trace, par.Step.GAMMA,
                                 COUNTEREXAMPLE + ': ' +
                                 '; '.join(prof.diagnostics))

    e_idx = next((i for i, gam in enumerate(gamma) if gam == 2), d_max)
    half = num.rational(-1, 2)
    expected = [half ** i if i <= e_idx else half ** (2 * e_idx - i)
                for i in range(d_max + 1)]
    u_last = list(spec.u[-1])
    if not _check(trace, par.Step.STEP_PATTERN,
                  'u_i(θ_D) = (-1/2)^i (i <= e), (-1/2)^{2e-i} (i > e)',
                  u_last == expected, e=e_idx, u=u_last, expected=expected):
        return _conclusion_fails(arr, trace, par.Step.STEP_PATTERN,
                                 COUNTEREXAMPLE + ': u(θ_D) off the pattern')
    if not _check(trace, par.Step.STEP_INDEX, 'e >= D/2',
                  2 * e_idx >= d_max, e=e_idx, D=d_max):
        return _conclusion_fails(arr, trace, par.Step.STEP_INDEX,
                                 COUNTEREXAMPLE + ': e = {} < D/2'
                                 .format(e_idx))
    if not _check(trace, par.Step.C2_VALUE, 'c_2 = 5', c_all[2] == 5,
                  c_2=c_all[2]):
        return _conclusion_fails(arr, trace, par.Step.C2_VALUE,
                                 COUNTEREXAMPLE + ': c_2 = {}'
                                 .format(c_all[2]))

    if d_max <= 4:
        gen = hermitian_dual_polar_array(d_max, 2)
        _record(trace, par.Step.CITED,
                'diameters 2 to 4 follow from a cited classification',
                True, D=d_max)
        if not _check(trace, par.Step.IDENTIFICATION,
                      'array = ^2A_{2D-1}(2)', arr == gen,
                      generator=drg.string(gen)):
            return _conclusion_fails(arr, trace, par.Step.IDENTIFICATION,
                                     COUNTEREXAMPLE + ': {} != {}'.format(
                                         drg.string(arr), drg.string(gen)))
        return ClassificationVerdict(par.Verdict.HERMITIAN_DUAL_POLAR, trace,
                                     r=2, conditional=True)

    # e >= 3 gives a_1 = c_1, a_2 = c_2 and γ_1 = γ_2 = 1
    _record(trace, par.Step.TWO_BOUNDED,
            'e >= 3 gives a_i = c_i a_1 for i <= 2; a_1 = 1 is K_{1,1,2}-free',
            e_idx >= 3, e=e_idx)
    inner = theorem11_classify(arr, spec, two_bounded=True)
    trace.extend(inner.trace)
    if inner.is_hermitian_dual_polar():
        return ClassificationVerdict(par.Verdict.HERMITIAN_DUAL_POLAR, trace,
                                     r=inner.r)
    return _conclusion_fails(arr, trace, inner.step or inner.reason,
                             COUNTEREXAMPLE + ': ' + str(inner.detail))


def corollary41_check(arr, spec, m_bounded):
    """ An m-bounded geometric array (m >= 2) with c_2 >= (a_1+1)^2 + 1
        has c_2 = (a_1+1)^2 + 1 and is ^2A_{2D-1}(a_1+1)

    :param m_bounded: the caller asserts the graph is m-bounded
    :rtype: ClassificationVerdict
    """
    trace = []
    d_max = drg.diameter(arr)
    c_all, a_all, _ = drg.intersection_numbers(arr)
    s_val = a_all[1] + 1

    if not _check(trace, par.Step.DIAMETER, 'D >= 2', d_max >= 2, D=d_max):
        return _hypothesis_fails(arr, trace, par.Step.DIAMETER,
                                 'D = {} < 2'.format(d_max))
    if not _check(trace, par.Step.NON_BIPARTITE, 'a_i != 0 for some i',
                  not drg.is_bipartite(arr), a=list(a_all)):
        return _hypothesis_fails(arr, trace, par.Step.NON_BIPARTITE,
                                 'every a_i is 0')
    if not _check(trace, par.Step.SMALLEST_EIGENVALUE, 'θ_D = -k/(a_1+1)',
                  is_geometric_premise(arr, spec), theta_D=spec.theta(-1)):
        return _hypothesis_fails(arr, trace, par.Step.SMALLEST_EIGENVALUE,
                                 'θ_D = {}'.format(num.string(spec.theta(-1))))
    prof = gamma_sequence(arr, spec)
    if not _check(trace, par.Step.GAMMA, 'integral γ', prof.gamma_integral,
                  gamma=prof.gamma):
        return _hypothesis_fails(arr, trace, par.Step.GAMMA,
                                 '; '.join(prof.diagnostics))
    if not _check(trace, par.Step.M_BOUNDED, 'm >= 2', m_bounded >= 2,
                  m=m_bounded):
        return _hypothesis_fails(arr, trace, par.Step.M_BOUNDED,
                                 'm = {} < 2'.format(m_bounded))
    target = s_val ** 2 + 1
    if not _check(trace, par.Step.C2_MIN, 'c_2 >= (a_1+1)^2 + 1',
                  c_all[2] >= target, c_2=c_all[2], target=target):
        return _hypothesis_fails(arr, trace, par.Step.C2_MIN,
                                 'c_2 = {} < {}'.format(c_all[2], target))
    if not _check(trace, par.Step.C2_VALUE, 'c_2 = (a_1+1)^2 + 1',
                  c_all[2] == target, c_2=c_all[2], target=target):
        return _conclusion_fails(arr, trace, par.Step.C2_VALUE,
                                 COUNTEREXAMPLE + ': c_2 = {} > {}'.format(
                                     c_all[2], target))

    # m-bounded with c_2 != 1 puts an induced GQ(a_1+1, c_2-1) in the graph
    holds, (lower, upper) = bound.light_tail_sufficiency(arr, spec,
                                                         contains_gq=True)
    if not _check(trace, par.Step.SQUEEZE,
                  "θ' <= θ_1 <= (k-(a_1+1))/(c_2-1) - 1 squeezed", holds,
                  theta_1=spec.theta(1), lower=lower.rhs, upper=upper.rhs):
        return _conclusion_fails(arr, trace, par.Step.SQUEEZE,
                                 COUNTEREXAMPLE + ': θ_1 bounds not tight')

    inner = theorem11_classify(arr, spec, two_bounded=True)
    trace.extend(inner.trace)
    return ClassificationVerdict(inner.verdict, trace, r=inner.r,
                                 reason=inner.reason, step=inner.step,
                                 detail=inner.detail,
                                 conditional=inner.conditional)


def _record(trace, step, equation, passed, **values):
    trace.append({'step': step, 'equation': equation, 'passed': bool(passed),
                  'values': {key: _jsonable(val)
                             for key, val in values.items()}})


def _check(trace, step, equation, passed, **values):
    _record(trace, step, equation, passed, **values)
    return bool(passed)


def _hypothesis_fails(arr, trace, reason, detail):
    logging.info('{}: hypothesis "{}" fails: {}'.format(
        drg.string(arr), reason, detail))
    return ClassificationVerdict(par.Verdict.HYPOTHESIS_FAILS, trace,
                                 reason=reason, detail=detail)


def _conclusion_fails(arr, trace, step, detail):
    logging.info('{}: step "{}" fails: {}'.format(
        drg.string(arr), step, detail))
    return ClassificationVerdict(par.Verdict.CONCLUSION_FAILS, trace,
                                 step=step, detail=detail)


def _jsonable(val):
    """ trace values with scalars in their JSON form
    """
    if val is None or isinstance(val, (bool, str)):
        ret = val
    elif isinstance(val, int):
        ret = val
    elif isinstance(val, dict):
        ret = {str(key): _jsonable(sub) for key, sub in val.items()}
    elif isinstance(val, (list, tuple)):
        ret = [_jsonable(sub) for sub in val]
    else:
        ret = num.to_json(val)
    return ret


# I/O
def verdict_dict(verd):
    """ JSON-ready dictionary of a classification verdict
    """
    return {
        'verdict': verd.verdict,
        'label': verd.label(),
        'r': verd.r,
        'reason': verd.reason,
        'step': verd.step,
        'detail': verd.detail,
        'conditional': verd.conditional,
        'trace': list(verd.trace),
    }
