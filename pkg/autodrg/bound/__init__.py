""" eigenvalue and multiplicity bounds characterizing light tails
"""

from autodrg.bound._bound import BoundReport
from autodrg.bound._bound import multiplicity_bound
from autodrg.bound._bound import theta1_lower_bound
from autodrg.bound._bound import theta1_upper_bound
from autodrg.bound._bound import light_tail_sufficiency
from autodrg.bound._bound import profile_coefficients
from autodrg.bound._bound import profile_table
from autodrg.bound._bound import profile_identity
from autodrg.bound._bound import check_consistency
from autodrg.bound._bound import bound_dict


__all__ = [
    'BoundReport',
    'multiplicity_bound',
    'theta1_lower_bound',
    'theta1_upper_bound',
    'light_tail_sufficiency',
    'profile_coefficients',
    'profile_table',
    'profile_identity',
    'check_consistency',
    'bound_dict',
]
