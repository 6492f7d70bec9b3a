"""
 constructions of Hermitian dual polar graphs and Hamming graphs

 ^2A_{2D-1}(r): maximal totally isotropic subspaces of GF(r^2)^{2D} for the
 form H(x, y) = Σ_i x_i y_i^r, adjacent when they meet in dimension D-1
"""
import itertools
import logging
import numpy
import scipy.sparse
from autodrg.error import UnsupportedParametersError
from autodrg.fgeom._field import field
from autodrg.fgeom._graph import FiniteGraph


SUPPORTED_HERMITIAN = ((2, 2), (3, 2), (2, 3))
MAX_HAMMING_VERTICES = 10**5


def build_hermitian_dual_polar(d_max, r):
    """ the dual polar graph ^2A_{2D-1}(r)

    Vertices are labeled by the reduced row echelon bases of their
    subspaces, as tuples of integer rows.

    :raises UnsupportedParametersError: outside SUPPORTED_HERMITIAN
    """
    if (d_max, r) not in SUPPORTED_HERMITIAN:
        raise UnsupportedParametersError(
            '^2A_{}({}) is not constructed; supported (D, r): {}'.format(
                2 * d_max - 1, r, SUPPORTED_HERMITIAN))
    gf_ = field(r)
    dim = 2 * d_max

    pts = projective_points(gf_, dim)
    iso = pts[_hermitian_norms(pts, r) == 0]
    index = {_key(row): idx for idx, row in enumerate(iso)}
    logging.info('^2A_{}({}): {} isotropic points'.format(
        2 * d_max - 1, r, len(iso)))

    spaces = {_key(row.reshape(1, -1)): row.reshape(1, -1) for row in iso}
    for _ in range(d_max - 1):
        spaces = _extend(spaces, iso, index, gf_, r)
    bases = [spaces[key] for key in sorted(spaces)]
    logging.info('^2A_{}({}): {} maximal totally isotropic subspaces'.format(
        2 * d_max - 1, r, len(bases)))

    incid = numpy.zeros((len(bases), len(iso)), dtype=numpy.int32)
    for vtx, basis in enumerate(bases):
        for row in span_points(basis, gf_):
            incid[vtx, index[_key(row)]] = 1
    meet = incid @ incid.T
    line_pts = (r ** (2 * (d_max - 1)) - 1) // (r ** 2 - 1)
    adj = (meet == line_pts).astype(numpy.int8)
    numpy.fill_diagonal(adj, 0)

    labels = [tuple(tuple(int(x) for x in row)
                    for row in basis.view(numpy.ndarray))
              for basis in bases]
    return FiniteGraph(scipy.sparse.csr_matrix(adj), labels=labels,
                       name='^2A_{}({})'.format(2 * d_max - 1, r))


def build_hamming(d_max, q):
    """ the Hamming graph H(D, q) on words of length D over range(q)

    :raises UnsupportedParametersError: above MAX_HAMMING_VERTICES
    """
    if d_max < 1 or q < 2:
        raise UnsupportedParametersError(
            'H({}, {}) needs D >= 1 and q >= 2'.format(d_max, q))
    n_verts = q ** d_max
    if n_verts > MAX_HAMMING_VERTICES:
        raise UnsupportedParametersError(
            'H({}, {}) has {} > {} vertices'.format(
                d_max, q, n_verts, MAX_HAMMING_VERTICES))

    words = numpy.array(list(itertools.product(range(q), repeat=d_max)),
                        dtype=numpy.int64)
    keys = numpy.arange(n_verts)
    rows, cols = [], []
    for pos in range(d_max):
        place = q ** (d_max - 1 - pos)
        for shift in range(1, q):
            new = (words[:, pos] + shift) % q
            rows.append(keys)
            cols.append(keys + (new - words[:, pos]) * place)
    rows = numpy.concatenate(rows)
    cols = numpy.concatenate(cols)
    adj = scipy.sparse.coo_matrix(
        (numpy.ones(len(rows), dtype=numpy.int8), (rows, cols)),
        shape=(n_verts, n_verts))
    logging.info('H({}, {}): {} vertices'.format(d_max, q, n_verts))
    return FiniteGraph(adj, labels=[tuple(map(int, word)) for word in words],
                       name='H({},{})'.format(d_max, q))


def projective_points(gf_, dim):
    """ the nonzero vectors of GF^dim whose first nonzero entry is 1
    """
    vecs = numpy.array(list(itertools.product(range(gf_.order), repeat=dim)),
                       dtype=numpy.int64)[1:]
    lead = vecs[numpy.arange(len(vecs)), numpy.argmax(vecs != 0, axis=1)]
    return gf_(vecs[lead == 1])


def span_points(basis, gf_):
    """ the normalized points of the row space of a basis
    """
    coeffs = projective_points(gf_, basis.shape[0])
    return normalize(coeffs @ basis)


def normalize(vecs):
    """ scale nonzero rows so that their first nonzero entry is 1
    """
    ints = vecs.view(numpy.ndarray)
    lead = vecs[numpy.arange(len(vecs)), numpy.argmax(ints != 0, axis=1)]
    return vecs / lead[:, None]


def _hermitian_norms(pts, r):
    """ H(x, x) = Σ_i x_i^{r+1} for each row
    """
    return (pts ** (r + 1)).sum(axis=1).view(numpy.ndarray)


def _extend(spaces, iso, index, gf_, r):
    """ all totally isotropic subspaces one dimension up

    Each new subspace W is reached from a hyperplane of W missing the
    largest point index of W, so only points above the current maximum are
    added.
    """
    ext = {}
    for basis in spaces.values():
        perp = ((iso @ (basis ** r).T).view(numpy.ndarray) == 0).all(axis=1)
        covered = {index[_key(row)] for row in span_points(basis, gf_)}
        top = max(covered)
        for idx in numpy.flatnonzero(perp):
            if idx <= top or idx in covered:
                continue
            new = numpy.concatenate([basis, iso[idx:idx+1]]).row_reduce()
            covered.update(index[_key(row)] for row in span_points(new, gf_))
            ext.setdefault(_key(new), new)
    return ext


def _key(mat):
    return mat.view(numpy.ndarray).astype(numpy.uint8).tobytes()
