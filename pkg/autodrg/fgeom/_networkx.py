""" networkx interface
"""
import networkx


def from_graph(gra):
    """ networkx graph object from a finite graph
    """
    nxg = networkx.from_scipy_sparse_array(gra.adjacency)
    networkx.set_node_attributes(nxg, dict(enumerate(gra.labels)), 'label')
    return nxg


def maximal_cliques(nxg):
    """ all maximal cliques, as sorted tuples of vertex keys
    """
    return tuple(sorted(tuple(sorted(clq))
                        for clq in networkx.find_cliques(nxg)))


def connected_component_keys(nxg):
    """ vertex keys for the connected components in this graph
    """
    return tuple(map(frozenset, networkx.algorithms.connected_components(nxg)))


def is_clique(nxg, keys):
    """ do the keys span a complete subgraph?
    """
    keys = list(keys)
    sub = nxg.subgraph(keys)
    return sub.number_of_edges() == len(keys) * (len(keys) - 1) // 2
