""" intersection arrays and their spectra
"""

# arrays
from autodrg.drg._array import from_data
from autodrg.drg._array import from_string
from autodrg.drg._array import b_numbers
from autodrg.drg._array import c_numbers
from autodrg.drg._array import valency
from autodrg.drg._array import diameter
from autodrg.drg._array import intersection_numbers
from autodrg.drg._array import a_numbers
from autodrg.drg._array import distance_valencies
from autodrg.drg._array import vertex_count
from autodrg.drg._array import is_bipartite
from autodrg.drg._array import intersection_matrix
from autodrg.drg._array import feasibility_violations
from autodrg.drg._array import parity_conditions
from autodrg.drg._array import string
from autodrg.drg._array import set_string
# spectra
from autodrg.drg._spec import SpectralData
from autodrg.drg._spec import characteristic_polynomial
from autodrg.drg._spec import standard_sequence_polynomials
from autodrg.drg._spec import terminal_polynomial
from autodrg.drg._spec import norm_polynomial
from autodrg.drg._spec import standard_sequence
from autodrg.drg._spec import spectrum
from autodrg.drg._spec import spectral_dict


__all__ = [
    'from_data',
    'from_string',
    'b_numbers',
    'c_numbers',
    'valency',
    'diameter',
    'intersection_numbers',
    'a_numbers',
    'distance_valencies',
    'vertex_count',
    'is_bipartite',
    'intersection_matrix',
    'feasibility_violations',
    'parity_conditions',
    'string',
    'set_string',
    'SpectralData',
    'characteristic_polynomial',
    'standard_sequence_polynomials',
    'terminal_polynomial',
    'norm_polynomial',
    'standard_sequence',
    'spectrum',
    'spectral_dict',
]
