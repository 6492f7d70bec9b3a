""" explicit finite geometries and graph-level verification
"""

# fields
from autodrg.fgeom._field import field
from autodrg.fgeom._field import field_tables
from autodrg.fgeom._field import check_field_tables
# graphs
from autodrg.fgeom._graph import FiniteGraph
from autodrg.fgeom._graph import from_edges
from autodrg.fgeom._graph import edges
from autodrg.fgeom._graph import induced_subgraph
from autodrg.fgeom._graph import edge_list_string
from autodrg.fgeom._graph import json_bundle
from autodrg.fgeom._graph import yaml_dictionary
from autodrg.fgeom._graph import string
from autodrg.fgeom._graph import from_string
# constructions
from autodrg.fgeom._build import SUPPORTED_HERMITIAN
from autodrg.fgeom._build import MAX_HAMMING_VERTICES
from autodrg.fgeom._build import build_hermitian_dual_polar
from autodrg.fgeom._build import build_hamming
# measurement
from autodrg.fgeom._measure import MeasuredParameters
from autodrg.fgeom._measure import measure_parameters
from autodrg.fgeom._measure import maximal_cliques
from autodrg.fgeom._measure import is_k112_free
from autodrg.fgeom._measure import verify_delsarte_completely_regular
from autodrg.fgeom._measure import find_induced_gq
from autodrg.fgeom._measure import verify_light_tail_on_graph
from autodrg.fgeom._measure import measured_dict


__all__ = [
    'field',
    'field_tables',
    'check_field_tables',
    'FiniteGraph',
    'from_edges',
    'edges',
    'induced_subgraph',
    'edge_list_string',
    'json_bundle',
    'yaml_dictionary',
    'string',
    'from_string',
    'SUPPORTED_HERMITIAN',
    'MAX_HAMMING_VERTICES',
    'build_hermitian_dual_polar',
    'build_hamming',
    'MeasuredParameters',
    'measure_parameters',
    'maximal_cliques',
    'is_k112_free',
    'verify_delsarte_completely_regular',
    'find_induced_gq',
    'verify_light_tail_on_graph',
    'measured_dict',
]
