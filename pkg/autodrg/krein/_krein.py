"""
 Krein parameters and light tails

 KreinTensor: q[i][j][h] = q_ij^h, nested tuples of scalars, with
 E_i ∘ E_j = (1/n) Σ_h q_ij^h E_h
"""
import functools
import itertools
from autodrg import num
from autodrg import drg
from autodrg import par
from autodrg.error import InconsistencyError
from autodrg.error import KreinInfeasibleError


class LightTailReport:
    """ Light tail status of one minimal idempotent

    :param eigenvalue_index: i, for the idempotent E_i
    :param is_light_tail: E_i ∘ E_i = a E_0 + b E_h for a single h >= 1
    :param associated_index: that h, or None
    :param a_coeff: a in E_i ∘ E_i = a E_0 + b E_h
    :param b_coeff: b, or None
    :param degenerate: m_i = 1
    """

    def __init__(self, eigenvalue_index, eigenvalue, is_light_tail,
                 associated_index, a_coeff, b_coeff, degenerate):
        """ constructor
        """
        if is_light_tail:
            assert associated_index is not None and associated_index >= 1
            assert not num.is_zero(a_coeff) and not num.is_zero(b_coeff)

        self.eigenvalue_index = eigenvalue_index
        self.eigenvalue = eigenvalue
        self.is_light_tail = is_light_tail
        self.associated_index = associated_index
        self.a_coeff = a_coeff
        self.b_coeff = b_coeff
        self.degenerate = degenerate

    def __repr__(self):
        return 'LightTailReport(i={}, light_tail={}, associate={})'.format(
            self.eigenvalue_index, self.is_light_tail, self.associated_index)


@functools.lru_cache(maxsize=256)
def krein_tensor(spec):
    """ The Krein parameters of a spectral data set

    q_ij^h = (m_i m_j / n) Σ_l k_l u_l(θ_i) u_l(θ_j) u_l(θ_h)

    :raises KreinInfeasibleError: for a negative entry
    :raises InconsistencyError: if q_ij^0 != δ_ij m_j or the trace identity
        Σ_h q_ij^h m_h = m_i m_j fails
    """
    kis = drg.distance_valencies(spec.array)
    mults = spec.multiplicities
    n = spec.vertex_count
    dim = len(mults)

    sums = {}
    for idxs in itertools.combinations_with_replacement(range(dim), 3):
        i, j, h = idxs
        total = 0
        for k_l, u_i, u_j, u_h in zip(kis, spec.u[i], spec.u[j], spec.u[h]):
            total = num.add(total, num.mul(k_l, num.mul(u_i,
                                                        num.mul(u_j, u_h))))
        sums[idxs] = total

    tensor = [[[None] * dim for _ in range(dim)] for _ in range(dim)]
    for i, j, h in itertools.product(range(dim), repeat=3):
        val = num.mul(num.rational(mults[i] * mults[j], n),
                      sums[tuple(sorted((i, j, h)))])
        if num.sign(val) < 0:
            raise KreinInfeasibleError((i, j, h), num.string(val))
        tensor[i][j][h] = val

    _check_krein_identities(spec, tensor)
    return tuple(tuple(map(tuple, plane)) for plane in tensor)


def _check_krein_identities(spec, tensor):
    mults = spec.multiplicities
    dim = len(mults)
    for i, j in itertools.product(range(dim), repeat=2):
        q_ij0 = tensor[i][j][0]
        if num.compare(q_ij0, mults[j] if i == j else 0) != par.Relation.EQ:
            raise InconsistencyError(
                '{}: q_{}{}^0 = {} violates q_ij^0 = δ_ij m_j'.format(
                    drg.string(spec.array), i, j, num.string(q_ij0)))

        total = 0
        for h in range(dim):
            total = num.add(total, num.mul(tensor[i][j][h], mults[h]))
        if num.compare(total, mults[i] * mults[j]) != par.Relation.EQ:
            raise InconsistencyError(
                '{}: Σ_h q_{}{}^h m_h = {} != m_i m_j'.format(
                    drg.string(spec.array), i, j, num.string(total)))


def krein_parameter(ktens, i, j, h):
    """ q_ij^h
    """
    return ktens[i][j][h]


def light_tail_scan(spec, ktens):
    """ Light tail reports for E_1, ..., E_D

    E_i is a light tail iff exactly one h in 1..D has q_ii^h != 0. Rows
    with m_i = 1 are flagged as degenerate.
    """
    n = spec.vertex_count
    dim = len(spec.eigenvalues)
    reports = []
    for i in range(1, dim):
        row = ktens[i][i]
        nonzero = [h for h in range(1, dim) if not num.is_zero(row[h])]
        a_coeff = num.div(row[0], n)
        if len(nonzero) == 1:
            (h,) = nonzero
            rep = LightTailReport(i, spec.eigenvalues[i], True, h, a_coeff,
                                  num.div(row[h], n),
                                  spec.multiplicities[i] == 1)
        else:
            rep = LightTailReport(i, spec.eigenvalues[i], False, None,
                                  a_coeff, None,
                                  spec.multiplicities[i] == 1)
        reports.append(rep)
    return tuple(reports)


def light_tail_report(reports, i):
    """ the report for E_i out of a scan
    """
    (rep,) = [rep for rep in reports if rep.eigenvalue_index == i]
    return rep


def rescaled_view(report, spec, ktens):
    """ The light tail in the form (n/m E)∘(n/m E) = (1/m)J + ((m-1)/m)Ẽ

    where Ẽ = Σ_h α_h (n/m_h) E_h with α_h = m_h q_ii^h / (m (m - 1)).

    :returns: dict with the two coefficients, the weights α_h for h >= 1
        and whether they sum to one; weights are None when m = 1
    """
    i = report.eigenvalue_index
    mults = spec.multiplicities
    m_i = mults[i]
    view = {'j_coeff': num.rational(1, m_i),
            'e_coeff': num.rational(m_i - 1, m_i),
            'weights': None,
            'convex': False}
    if m_i > 1:
        weights = {h: num.mul(num.rational(mults[h], m_i * (m_i - 1)),
                              ktens[i][i][h])
                   for h in range(1, len(mults))}
        total = 0
        for weight in weights.values():
            total = num.add(total, weight)
        view['weights'] = weights
        view['convex'] = num.compare(total, 1) == par.Relation.EQ
    return view


def absolute_bound(spec, ktens):
    """ Σ_{h: q_ij^h != 0} m_h <= m_i m_j (i != j) or m_i (m_i + 1)/2 (i = j)

    :returns: the violated instances, as messages
    """
    mults = spec.multiplicities
    dim = len(mults)
    viols = []
    for i in range(1, dim):
        for j in range(i, dim):
            total = sum(mults[h] for h in range(dim)
                        if not num.is_zero(ktens[i][j][h]))
            limit = mults[i] * (mults[i] + 1) // 2 if i == j else (
                mults[i] * mults[j])
            if total > limit:
                viols.append('absolute bound fails at ({}, {}): {} > {}'
                             .format(i, j, total, limit))
    return tuple(viols)


# I/O
def krein_list(ktens, full=False):
    """ sparse JSON-ready list of {i, j, h, value}

    :param full: keep zero entries too
    """
    dim = len(ktens)
    return [{'i': i, 'j': j, 'h': h, 'value': num.to_json(ktens[i][j][h])}
            for i, j, h in itertools.product(range(dim), repeat=3)
            if full or not num.is_zero(ktens[i][j][h])]


def light_tail_dict(report):
    """ JSON-ready dictionary of a light tail report
    """
    return {
        'eigenvalue_index': report.eigenvalue_index,
        'eigenvalue': num.to_json(report.eigenvalue),
        'is_light_tail': report.is_light_tail,
        'associated_index': report.associated_index,
        'a_coeff': num.to_json(report.a_coeff),
        'b_coeff': (None if report.b_coeff is None else
                    num.to_json(report.b_coeff)),
        'degenerate': report.degenerate,
    }
