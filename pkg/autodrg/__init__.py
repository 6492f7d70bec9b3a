""" exact analysis of distance-regular graph intersection arrays
"""
from autodrg import par
from autodrg import error
from autodrg import num
from autodrg import drg
from autodrg import krein
from autodrg import bound
from autodrg import geom
from autodrg import fgeom


__all__ = [
    'par',
    'error',
    'num',
    'drg',
    'krein',
    'bound',
    'geom',
    'fgeom',
]
