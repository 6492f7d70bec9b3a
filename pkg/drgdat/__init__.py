""" Libraries of distance-regular graph data
"""

from drgdat import catalog


__all__ = [
    'catalog',
]
