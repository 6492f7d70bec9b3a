""" geometric arrays, boundedness and the Hermitian dual polar classifier
"""

# families
from autodrg.geom._family import MAX_PRIME_POWER
from autodrg.geom._family import is_prime_power
from autodrg.geom._family import hermitian_dual_polar_array
from autodrg.geom._family import dual_polar_array
from autodrg.geom._family import hamming_array
from autodrg.geom._family import halved_cube_array
# profiles
from autodrg.geom._profile import GeometricProfile
from autodrg.geom._profile import delsarte_bound
from autodrg.geom._profile import geometric_eigenvalue
from autodrg.geom._profile import is_geometric_premise
from autodrg.geom._profile import gamma_sequence
from autodrg.geom._profile import a_from_gamma
from autodrg.geom._profile import a_relation_holds_up_to
from autodrg.geom._profile import boundedness_conditions
from autodrg.geom._profile import conjecture_branches
from autodrg.geom._profile import profile_dict
# classification
from autodrg.geom._classify import ClassificationVerdict
from autodrg.geom._classify import c_formula
from autodrg.geom._classify import theta_prime
from autodrg.geom._classify import u_theta_prime
from autodrg.geom._classify import c_closed_form
from autodrg.geom._classify import theorem11_classify
from autodrg.geom._classify import theorem12_check
from autodrg.geom._classify import corollary41_check
from autodrg.geom._classify import verdict_dict


__all__ = [
    'MAX_PRIME_POWER',
    'is_prime_power',
    'hermitian_dual_polar_array',
    'dual_polar_array',
    'hamming_array',
    'halved_cube_array',
    'GeometricProfile',
    'delsarte_bound',
    'geometric_eigenvalue',
    'is_geometric_premise',
    'gamma_sequence',
    'a_from_gamma',
    'a_relation_holds_up_to',
    'boundedness_conditions',
    'conjecture_branches',
    'profile_dict',
    'ClassificationVerdict',
    'c_formula',
    'theta_prime',
    'u_theta_prime',
    'c_closed_form',
    'theorem11_classify',
    'theorem12_check',
    'corollary41_check',
    'verdict_dict',
]
