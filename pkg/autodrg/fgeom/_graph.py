"""
 explicit finite graphs

 FiniteGraph: a symmetric, irreflexive sparse adjacency matrix, one label
 per vertex and a lazily computed all-pairs distance matrix
"""
import json
import numpy
import scipy.sparse
import scipy.sparse.csgraph
import yaml


class FiniteGraph:
    """ An explicit graph on vertices 0, ..., n-1

    :param adjacency: n x n 0/1 matrix
    :type adjacency: scipy.sparse matrix or numpy array
    :param labels: one descriptor per vertex
    :param name: what the graph is a model of
    """

    def __init__(self, adjacency, labels=None, name=None):
        """ constructor
        """
        adj = scipy.sparse.csr_matrix(adjacency, dtype=numpy.int8)
        adj.eliminate_zeros()
        n_verts = adj.shape[0]
        assert adj.shape == (n_verts, n_verts), (
            "adjacency must be square, got {}".format(adj.shape))
        assert (adj != adj.T).nnz == 0, "adjacency must be symmetric"
        assert not adj.diagonal().any(), "adjacency must be irreflexive"

        self.adjacency = adj
        self.labels = (tuple(labels) if labels is not None else
                       tuple(range(n_verts)))
        assert len(self.labels) == n_verts
        self.name = name
        self._dist = None

    @property
    def n(self):
        """ the vertex count
        """
        return self.adjacency.shape[0]

    def distances(self):
        """ all-pairs distances as an n x n uint8 matrix

        :raises ValueError: for a disconnected graph
        """
        if self._dist is None:
            dist = scipy.sparse.csgraph.shortest_path(
                self.adjacency, method='D', directed=False, unweighted=True)
            if numpy.isinf(dist).any():
                raise ValueError('{} is not connected'.format(self))
            self._dist = dist.astype(numpy.uint8)
        return self._dist

    def dense(self):
        """ the adjacency matrix as a dense int array
        """
        return self.adjacency.toarray().astype(int)

    def valencies(self):
        """ the degree of every vertex
        """
        return numpy.asarray(self.adjacency.sum(axis=1)).ravel()

    def __repr__(self):
        return 'FiniteGraph({}, n={}, edges={})'.format(
            self.name, self.n, self.adjacency.nnz // 2)


def from_edges(n_verts, edges, labels=None, name=None):
    """ a graph from an edge list
    """
    edges = numpy.asarray(list(edges), dtype=int).reshape(-1, 2)
    rows = numpy.concatenate([edges[:, 0], edges[:, 1]])
    cols = numpy.concatenate([edges[:, 1], edges[:, 0]])
    adj = scipy.sparse.coo_matrix(
        (numpy.ones(len(rows), dtype=numpy.int8), (rows, cols)),
        shape=(n_verts, n_verts))
    return FiniteGraph(adj, labels=labels, name=name)


def edges(gra):
    """ the edges (u, v) with u < v, sorted
    """
    upper = scipy.sparse.triu(gra.adjacency, k=1).tocoo()
    return tuple(sorted(zip(upper.row.tolist(), upper.col.tolist())))


def induced_subgraph(gra, keys, name=None):
    """ the subgraph induced on a vertex subset, renumbered in key order
    """
    keys = sorted(keys)
    sub = gra.adjacency[keys][:, keys]
    return FiniteGraph(sub, labels=[gra.labels[key] for key in keys],
                       name=name)


# I/O
def edge_list_string(gra):
    """ one "u v" line per edge, 0-indexed
    """
    return '\n'.join('{} {}'.format(u, v) for u, v in edges(gra)) + '\n'


def json_bundle(gra):
    """ the {n, edges, labels} bundle, as a JSON string
    """
    return json.dumps({'n': gra.n,
                       'edges': [list(edge) for edge in edges(gra)],
                       'labels': [_plain(lab) for lab in gra.labels]})


def yaml_dictionary(gra):
    """ a YAML-ready dictionary of the graph
    """
    return {'name': gra.name,
            'n': gra.n,
            'edges': [list(edge) for edge in edges(gra)],
            'labels': [_plain(lab) for lab in gra.labels]}


def string(gra):
    """ write the graph to a string
    """
    return yaml.dump(yaml_dictionary(gra), default_flow_style=None,
                     sort_keys=False)


def from_string(gra_str):
    """ read the graph from a string
    """
    yaml_dct = yaml.load(gra_str, Loader=yaml.FullLoader)
    labels = yaml_dct['labels']
    labels = [_frozen(lab) for lab in labels]
    return from_edges(yaml_dct['n'], yaml_dct['edges'], labels=labels,
                      name=yaml_dct['name'])


def _plain(lab):
    if isinstance(lab, (tuple, list)):
        return [_plain(sub) for sub in lab]
    return int(lab) if isinstance(lab, numpy.integer) else lab


def _frozen(lab):
    if isinstance(lab, list):
        return tuple(_frozen(sub) for sub in lab)
    return lab
