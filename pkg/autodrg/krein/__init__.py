""" Krein parameters and light tail detection
"""

from autodrg.krein._krein import LightTailReport
from autodrg.krein._krein import krein_tensor
from autodrg.krein._krein import krein_parameter
from autodrg.krein._krein import light_tail_scan
from autodrg.krein._krein import light_tail_report
from autodrg.krein._krein import rescaled_view
from autodrg.krein._krein import absolute_bound
from autodrg.krein._krein import krein_list
from autodrg.krein._krein import light_tail_dict


__all__ = [
    'LightTailReport',
    'krein_tensor',
    'krein_parameter',
    'light_tail_scan',
    'light_tail_report',
    'rescaled_view',
    'absolute_bound',
    'krein_list',
    'light_tail_dict',
]
