"""
 measurement of array-level quantities on explicit graphs
"""
import collections
import itertools
import logging
import numpy
from autodrg import num
from autodrg import par
from autodrg import drg
from autodrg import krein
from autodrg import geom
from autodrg.error import HypothesisError
from autodrg.error import InfeasibleArrayError
from autodrg.fgeom import _networkx
from autodrg.fgeom._graph import induced_subgraph


class MeasuredParameters:
    """ What a graph looks like from a vertex

    :param intersection_array: the measured array, or None with a failure
    :param failure: why the graph is not distance-regular
    :param gamma_measured: γ_0, ..., γ_{D-1} over all (vertex, maximal
        clique) pairs, or None if not constant
    :param clique_sizes: {size: count} over maximal cliques
    :param locally_clique_sizes: {size: count} over the components of all
        vertex neighbourhoods
    :param locally_cliques: every neighbourhood is a disjoint union of
        (a_1+1)-cliques
    :param is_k112_free: no induced K_{1,1,2}
    :param delsarte_clique_count: number of maximal cliques of size a_1+2
    :param delsarte_complete: every maximal clique has size a_1+2
    """

    def __init__(self, intersection_array, failure=None, gamma_measured=None,
                 clique_sizes=None, locally_clique_sizes=None,
                 locally_cliques=None, is_k112_free=None,
                 delsarte_clique_count=None, delsarte_complete=None,
                 diagnostics=()):
        """ constructor
        """
        assert (intersection_array is None) != (failure is None)

        self.intersection_array = intersection_array
        self.failure = failure
        self.gamma_measured = gamma_measured
        self.clique_sizes = clique_sizes
        self.locally_clique_sizes = locally_clique_sizes
        self.locally_cliques = locally_cliques
        self.is_k112_free = is_k112_free
        self.delsarte_clique_count = delsarte_clique_count
        self.delsarte_complete = delsarte_complete
        self.diagnostics = tuple(diagnostics)

    def is_distance_regular(self):
        """ did the intersection numbers come out constant?
        """
        return self.intersection_array is not None

    def __repr__(self):
        arr = (None if self.intersection_array is None else
               drg.set_string(self.intersection_array))
        return 'MeasuredParameters({}, γ={})'.format(arr,
                                                     self.gamma_measured)


def measure_parameters(gra):
    """ measure the intersection array and the clique structure of a graph

    Every pair (x, y) is checked; a graph that is not distance-regular
    gives a report naming a violating pair and nothing else.
    """
    dist = gra.distances().astype(int)
    d_max = int(dist.max())
    adj = gra.dense()

    c_seq, b_seq = [], []
    for i in range(d_max + 1):
        mask = dist == i
        if i > 0:
            val, failure = _constant_count(dist == i - 1, adj, mask, i, 'c')
            if failure:
                return MeasuredParameters(None, failure=failure)
            c_seq.append(val)
        if i < d_max:
            val, failure = _constant_count(dist == i + 1, adj, mask, i, 'b')
            if failure:
                return MeasuredParameters(None, failure=failure)
            b_seq.append(val)
    if not b_seq:
        return MeasuredParameters(None, failure='a single vertex')
    try:
        arr = drg.from_data(b_seq, c_seq)
    except InfeasibleArrayError as err:
        return MeasuredParameters(None, failure=str(err))

    a_1 = drg.a_numbers(arr)[1]
    nxg = _networkx.from_graph(gra)
    cliques = _networkx.maximal_cliques(nxg)
    clique_sizes = dict(sorted(collections.Counter(map(len, cliques))
                               .items()))
    diags = []

    gamma = _measure_gamma(dist, cliques, d_max)
    if gamma is None:
        diags.append('γ_i is not constant over (vertex, clique) pairs')

    local = collections.Counter()
    locally_cliques = True
    for vtx in range(gra.n):
        ngb = nxg.subgraph(nxg.neighbors(vtx))
        for comp in _networkx.connected_component_keys(ngb):
            local[len(comp)] += 1
            if len(comp) != a_1 + 1 or not _networkx.is_clique(ngb, comp):
                locally_cliques = False
    if not locally_cliques:
        diags.append('some neighbourhood is not a disjoint union of '
                     '{}-cliques'.format(a_1 + 1))

    k112_free = is_k112_free(gra)
    n_del = clique_sizes.get(a_1 + 2, 0)
    return MeasuredParameters(
        arr, gamma_measured=gamma, clique_sizes=clique_sizes,
        locally_clique_sizes=dict(sorted(local.items())),
        locally_cliques=locally_cliques, is_k112_free=k112_free,
        delsarte_clique_count=n_del,
        delsarte_complete=n_del == len(cliques), diagnostics=diags)


def maximal_cliques(gra):
    """ all maximal cliques of a graph, as sorted tuples of vertex keys
    """
    return _networkx.maximal_cliques(_networkx.from_graph(gra))


def is_k112_free(gra):
    """ no edge xy has two nonadjacent common neighbours
    """
    adj = gra.dense()
    for x_key, y_key in zip(*numpy.nonzero(numpy.triu(adj, 1))):
        common = numpy.flatnonzero(adj[x_key] & adj[y_key])
        sub = adj[numpy.ix_(common, common)]
        if sub.sum() != len(common) * (len(common) - 1):
            return False
    return True


def verify_delsarte_completely_regular(gra, clique, arr=None):
    """ is a Delsarte clique a completely regular code of covering radius
        D - 1?

    :param arr: the array of the graph; measured when not given
    :returns: (verdict, info) with the covering radius, the quotient matrix
        of the distance partition and the first violating cell
    :raises HypothesisError: if the clique does not attain the Delsarte bound
    """
    if arr is None:
        meas = measure_parameters(gra)
        if not meas.is_distance_regular():
            raise HypothesisError(['distance-regular: ' + meas.failure])
        arr = meas.intersection_array
    spec = drg.spectrum(arr)
    bound = geom.delsarte_bound(arr, spec)
    clique = sorted(set(clique))
    dist = gra.distances()
    if (dist[numpy.ix_(clique, clique)].max() > 1 or
            num.compare(len(clique), bound) != par.Relation.EQ):
        raise HypothesisError(
            ['a clique of size {} attaining the Delsarte bound {}'.format(
                len(clique), num.string(bound))])

    cell = dist[:, clique].min(axis=1).astype(int)
    radius = int(cell.max())
    onehot = (cell[:, None] == numpy.arange(radius + 1)[None, :]).astype(int)
    counts = gra.adjacency @ onehot
    quotient = []
    info = {'covering_radius': radius, 'quotient': quotient,
            'violating_cell': None}
    for i in range(radius + 1):
        rows = counts[cell == i]
        if (rows != rows[0]).any():
            info['violating_cell'] = i
            return False, info
        quotient.append([int(x) for x in rows[0]])
    return radius == drg.diameter(arr) - 1, info


def find_induced_gq(gra, s_par, t_par, pair=None):
    """ the strongly closed subgraph through a distance-2 pair, tested for
        being a GQ(s, t)

    The subgraph is the smallest vertex set containing the pair and every
    z with d(u, z) + d(z, v) <= d(u, v) + 1 for u, v already in it.

    :param pair: the distance-2 pair; the first one found by default
    :returns: (verdict, info) with the closure size and measured array
    """
    dist = gra.distances().astype(int)
    if pair is None:
        xs_, ys_ = numpy.nonzero(dist == 2)
        if not len(xs_):
            return False, {'pair': None, 'closure_size': None,
                           'measured_array': None,
                           'diagnostics': ['no pair at distance 2']}
        pair = (int(xs_[0]), int(ys_[0]))
    assert dist[pair] == 2, (
        "{} is not a distance-2 pair".format(pair))

    keys = set(pair)
    done = set()
    while True:
        new = set(keys)
        for u_key, v_key in itertools.combinations(sorted(keys), 2):
            if (u_key, v_key) in done:
                continue
            done.add((u_key, v_key))
            span = dist[u_key] + dist[v_key] <= dist[u_key, v_key] + 1
            new.update(numpy.flatnonzero(span).tolist())
        if new == keys:
            break
        keys = new
    logging.info('closure of {} has {} vertices'.format(pair, len(keys)))

    info = {'pair': list(pair), 'closure_size': len(keys),
            'measured_array': None, 'diagnostics': []}
    sub = induced_subgraph(gra, keys, name='closure of {}'.format(pair))
    meas = measure_parameters(sub)
    if not meas.is_distance_regular():
        info['diagnostics'].append('closure is not distance-regular: ' +
                                   meas.failure)
        return False, info
    info['measured_array'] = drg.string(meas.intersection_array)

    target = ((s_par * (t_par + 1), s_par * t_par), (1, t_par + 1))
    if drg.diameter(meas.intersection_array) != 2:
        info['diagnostics'].append('closure has diameter {}'.format(
            drg.diameter(meas.intersection_array)))
    if meas.intersection_array != target:
        info['diagnostics'].append('closure array {} != GQ({}, {}) array {}'
                                   .format(info['measured_array'], s_par,
                                           t_par, drg.string(target)))
    if not meas.is_k112_free:
        info['diagnostics'].append('closure contains an induced K_{1,1,2}')
    return not info['diagnostics'], info


def verify_light_tail_on_graph(gra, spec):
    """ (n/m_D E_D) ∘ (n/m_D E_D) = (1/m_D) J + ((m_D-1)/m_D) Ẽ on a graph

    Entries of (n/m_D) E_D are u_{d(x,y)}(θ_D) and those of Ẽ are
    u_{d(x,y)}(θ_h) for the associate E_h, so the check runs over the
    distance classes present in the graph. A few columns of the spherical
    representation are checked to be θ_D-eigenvectors of A.

    :returns: (verdict, info)
    :raises HypothesisError: if the measured array is not the array of spec
    """
    meas = measure_parameters(gra)
    if meas.intersection_array != spec.array:
        raise HypothesisError(['measured array {} matches {}'.format(
            None if meas.intersection_array is None else
            drg.string(meas.intersection_array), drg.string(spec.array))])

    d_max = drg.diameter(spec.array)
    m_last = spec.multiplicities[d_max]
    info = {'associated_index': None, 'failing_class': None,
            'spot_checked': []}
    if m_last <= 1:
        info['reason'] = 'm_D = 1'
        return False, info
    scan = krein.light_tail_scan(spec, krein.krein_tensor(spec))
    rep = krein.light_tail_report(scan, d_max)
    if not rep.is_light_tail:
        info['reason'] = 'E_D is not a light tail'
        return False, info
    h_idx = rep.associated_index
    info['associated_index'] = h_idx

    dist = gra.distances()
    u_last, u_assoc = spec.u[d_max], spec.u[h_idx]
    for j in sorted(set(numpy.unique(dist).tolist())):
        lhs = num.mul(u_last[j], u_last[j])
        rhs = num.add(num.rational(1, m_last),
                      num.mul(num.rational(m_last - 1, m_last), u_assoc[j]))
        if num.compare(lhs, rhs) != par.Relation.EQ:
            info['failing_class'] = j
            return False, info

    theta = spec.theta(d_max)
    if num.is_rational(theta) and all(map(num.is_rational, u_last)):
        scale = int(numpy.lcm.reduce([int(val.q) for val in u_last]))
        ints = numpy.array([int(val * scale) for val in u_last],
                           dtype=numpy.int64)
        adj = gra.dense().astype(numpy.int64)
        for vtx in range(min(gra.n, 4)):
            col = ints[dist[vtx].astype(int)]
            if not (int(theta.q) * (adj @ col) == int(theta.p) * col).all():
                info['reason'] = 'A v != θ_D v at column {}'.format(vtx)
                return False, info
            info['spot_checked'].append(vtx)
    return True, info


def _constant_count(target, adj, mask, i, kind):
    """ |Γ(y) ∩ target(x)| over pairs (x, y) in mask, if constant
    """
    counts = numpy.rint(target.astype(float) @ adj.astype(float))[mask]
    first = counts[0]
    bad = numpy.flatnonzero(counts != first)
    if len(bad):
        xs_, ys_ = numpy.nonzero(mask)
        pair = (int(xs_[bad[0]]), int(ys_[bad[0]]))
        return None, ('{}_{} is not constant: pair {} gives {}, another '
                      'gives {}'.format(kind, i, pair, int(counts[bad[0]]),
                                        int(first)))
    return int(first), None


def _measure_gamma(dist, cliques, d_max):
    """ γ_i = |Γ_i(x) ∩ C| over all pairs with d(x, C) = i, if constant
    """
    seen = [set() for _ in range(d_max)]
    for clq in cliques:
        sub = dist[:, list(clq)]
        dmin = sub.min(axis=1)
        cnt = (sub == dmin[:, None]).sum(axis=1)
        for i in range(d_max):
            seen[i].update(cnt[dmin == i].tolist())
    if any(len(vals) != 1 for vals in seen):
        return None
    return tuple(int(next(iter(vals))) for vals in seen)


# I/O
def measured_dict(meas):
    """ JSON-ready dictionary of measured parameters
    """
    return {
        'intersection_array': (None if meas.intersection_array is None else
                               drg.string(meas.intersection_array)),
        'failure': meas.failure,
        'gamma_measured': (None if meas.gamma_measured is None else
                           list(meas.gamma_measured)),
        'clique_sizes': {str(key): val
                         for key, val in (meas.clique_sizes or {}).items()},
        'locally_clique_sizes': {
            str(key): val
            for key, val in (meas.locally_clique_sizes or {}).items()},
        'locally_cliques': meas.locally_cliques,
        'is_k112_free': meas.is_k112_free,
        'delsarte_clique_count': meas.delsarte_clique_count,
        'delsarte_complete': meas.delsarte_complete,
        'diagnostics': list(meas.diagnostics),
    }
