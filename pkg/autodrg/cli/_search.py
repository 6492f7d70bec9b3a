"""
 bounded searches over intersection arrays

 The generic enumerator walks c and b index by index, pruning on
 monotonicity, a_i >= 0 and integrality of k_i. The thm12 search has two
 drivers: the exhaustive one filters the generic enumeration with a_1 = 1
 and c_2 >= 5 by an exact eigenvalue test for -k/2; the fast one only
 visits arrays whose standard sequence at θ_D follows the γ step pattern,
 solving b_i from the three-term recurrence.
"""
import concurrent.futures
import functools
import logging
from autodrg import num
from autodrg import par
from autodrg import drg
from autodrg import krein
from autodrg import geom
from autodrg.error import InfeasibleArrayError
from autodrg.error import KreinInfeasibleError
from autodrg.error import UnsupportedParametersError


MAX_SEARCH_K = 200
MAX_SEARCH_D = 6


def search(max_k, max_d, a_1=None, hypotheses=None, exhaustive=False,
           jobs=1):
    """ all feasible arrays within the caps that satisfy a hypothesis

    :param hypotheses: None, or one of par.Hypothesis
    :param exhaustive: for thm12, enumerate every a_1 = 1 array instead of
        the step pattern candidates
    :param jobs: worker processes; valencies are split across them
    :returns: hits sorted by array text
    :rtype: tuple of arrays
    :raises UnsupportedParametersError: above the search caps
    """
    if max_k > MAX_SEARCH_K or max_d > MAX_SEARCH_D:
        raise UnsupportedParametersError(
            'search caps are k <= {} and D <= {}'.format(MAX_SEARCH_K,
                                                         MAX_SEARCH_D))
    assert hypotheses is None or hypotheses in par.all_values(par.Hypothesis)

    scan = functools.partial(_scan_valency, max_d=max_d, a_1=a_1,
                             hypotheses=hypotheses, exhaustive=exhaustive)
    valencies = range(2, max_k + 1)
    if jobs > 1:
        with concurrent.futures.ProcessPoolExecutor(max_workers=jobs) as exe:
            chunks = list(exe.map(scan, valencies))
    else:
        chunks = list(map(scan, valencies))
    hits = [arr for chunk in chunks for arr in chunk]
    return tuple(sorted(set(hits), key=drg.string))


def enumerate_arrays(k, max_d, a_1=None, min_c2=1):
    """ arrays of valency k and diameter <= max_d passing the array checks
    """
    for d_max in range(1, max_d + 1):
        yield from _extend(k, d_max, (k,), (), (1,), a_1, min_c2)


def enumerate_thm12_candidates(k, max_d):
    """ every array with a_1 = 1, c_2 >= 5 and -k/2 among its eigenvalues
    """
    if k % 2:
        return
    theta = num.rational(-k, 2)
    for arr in enumerate_arrays(k, max_d, a_1=1, min_c2=5):
        if drg.diameter(arr) >= 2 and is_eigenvalue(arr, theta):
            yield arr


def is_eigenvalue(arr, theta):
    """ is θ a root of the characteristic polynomial of the array?

    Runs the three-term recurrence for u_i(θ) and tests the closing row
    c_D u_{D-1} + a_D u_D = θ u_D, all in exact rationals.
    """
    c_all, a_all, b_all = drg.intersection_numbers(arr)
    d_max = drg.diameter(arr)
    u_seq = [num.rational(1), num.div(theta, b_all[0])]
    for i in range(1, d_max):
        u_seq.append(((theta - a_all[i]) * u_seq[i] -
                      c_all[i] * u_seq[i-1]) / b_all[i])
    return (c_all[d_max] * u_seq[d_max-1] + a_all[d_max] * u_seq[d_max] ==
            theta * u_seq[d_max])


def enumerate_thm12_arrays(k, max_d):
    """ arrays with a_1 = 1, c_2 >= 5 and θ_D = -k/2 whose u(θ_D) is
        (-1/2)^i up to a step index e and (-1/2)^{2e-i} after it
    """
    if k % 2:
        return
    theta = num.rational(-k, 2)
    half = num.rational(-1, 2)
    for d_max in range(2, max_d + 1):
        for e_idx in range(1, d_max + 1):
            u_seq = [half ** i if i <= e_idx else half ** (2 * e_idx - i)
                     for i in range(d_max + 1)]
            b_1 = _solve_b(k, theta, u_seq, 1, 1)
            if b_1 == k - 2:
                yield from _thm12_fill(k, d_max, theta, u_seq, [1], [k, b_1])


def feasibility_violations(arr):
    """ the first failing deeper feasibility condition, or None

    Checks integral multiplicities, Krein nonnegativity, the absolute
    bound, handshake parity and, for geometric arrays, the line count.
    """
    try:
        spec = drg.spectrum(arr)
        ktens = krein.krein_tensor(spec)
    except (InfeasibleArrayError, KreinInfeasibleError) as err:
        return str(err)
    viols = krein.absolute_bound(spec, ktens) + drg.parity_conditions(arr)
    if viols:
        return viols[0]
    if geom.is_geometric_premise(arr, spec):
        lines = geom.gamma_sequence(arr, spec).line_count
        if not num.is_integer(lines):
            return 'line count {} is not an integer'.format(lines)
    return None


def satisfies(arr, hypotheses):
    """ does a feasible array satisfy the hypothesis predicate?
    """
    if hypotheses is None:
        return True
    spec = drg.spectrum(arr)
    if hypotheses == par.Hypothesis.LT:
        scan = krein.light_tail_scan(spec, krein.krein_tensor(spec))
        return any(rep.is_light_tail for rep in scan)
    a_all = drg.a_numbers(arr)
    return (a_all[1] == 1 and drg.valency(arr) >= 3 and
            drg.diameter(arr) >= 2 and drg.c_numbers(arr)[1] >= 5 and
            geom.is_geometric_premise(arr, spec))


def _scan_valency(k, max_d, a_1, hypotheses, exhaustive=False):
    if hypotheses == par.Hypothesis.THM12:
        enum = (enumerate_thm12_candidates if exhaustive else
                enumerate_thm12_arrays)
        cands = enum(k, max_d) if a_1 in (None, 1) else ()
    else:
        cands = enumerate_arrays(k, max_d, a_1=a_1)
    hits = []
    for arr in cands:
        viol = feasibility_violations(arr)
        if viol is None and satisfies(arr, hypotheses):
            hits.append(arr)
    logging.info('k = {}: {} hits'.format(k, len(hits)))
    return hits


def _extend(k, d_max, b_seq, c_seq, k_seq, a_1, min_c2):
    """ depth-first completion of (b_0..b_{i-1}; c_1..c_{i-1})
    """
    i = len(c_seq) + 1
    c_lo = c_seq[-1] if c_seq else 1
    if i == 2:
        c_lo = max(c_lo, min_c2)
    c_hi = 1 if i == 1 else k
    for c_i in range(c_lo, c_hi + 1):
        k_num = k_seq[-1] * b_seq[-1]
        if k_num % c_i:
            continue
        k_i = k_num // c_i
        if i == d_max:
            if k - c_i < 0 or (a_1 is not None and d_max == 1 and
                               k - 1 != a_1):
                continue
            yield (b_seq, c_seq + (c_i,))
            continue
        for b_i in range(min(b_seq[-1], k - c_i), 0, -1):
            if i == 1 and a_1 is not None and k - b_i - 1 != a_1:
                continue
            yield from _extend(k, d_max, b_seq + (b_i,), c_seq + (c_i,),
                               k_seq + (k_i,), a_1, min_c2)


def _thm12_fill(k, d_max, theta, u_seq, c_seq, b_seq):
    """ choose c_i, solve b_i from c_i u_{i-1} + a_i u_i + b_i u_{i+1}
        = θ u_i, and close with c_D from the terminal identity
    """
    i = len(c_seq) + 1
    c_lo = max(c_seq[-1], 5) if i == 2 else c_seq[-1]
    if i == d_max:
        den = u_seq[d_max-1] - u_seq[d_max]
        if den == 0:
            return
        c_last = (theta - k) * u_seq[d_max] / den
        if num.is_integer(c_last) and c_lo <= c_last <= k:
            try:
                arr = drg.from_data(b_seq, c_seq + [int(c_last)])
            except InfeasibleArrayError:
                return
            if _last_multiplicity_is_integral(arr, u_seq):
                yield arr
        return

    for c_i in range(c_lo, k + 1):
        b_i = _solve_b(k, theta, u_seq, i, c_i)
        if b_i is None or b_i > b_seq[-1]:
            continue
        yield from _thm12_fill(k, d_max, theta, u_seq, c_seq + [c_i],
                               b_seq + [b_i])


def _solve_b(k, theta, u_seq, i, c_i):
    """ b_i from c_i (u_{i-1} - u_i) + b_i (u_{i+1} - u_i) = (θ - k) u_i
    """
    den = u_seq[i+1] - u_seq[i]
    if den == 0:
        return None
    b_i = ((theta - k) * u_seq[i] - c_i * (u_seq[i-1] - u_seq[i])) / den
    if not num.is_integer(b_i) or b_i <= 0 or b_i + c_i > k:
        return None
    return int(b_i)


def _last_multiplicity_is_integral(arr, u_seq):
    """ m_D = n / Σ_j k_j u_j(θ_D)^2 from the prescribed u, before the full
        spectrum is computed
    """
    norm = sum(k_j * u_j ** 2
               for k_j, u_j in zip(drg.distance_valencies(arr), u_seq))
    return num.is_integer(num.div(drg.vertex_count(arr), norm))
