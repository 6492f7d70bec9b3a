""" Install autodrg
"""
from setuptools import setup


setup(name='autodrg',
      version='0.1.0',
      packages=['autodrg',
                'autodrg.num',
                'autodrg.drg',
                'autodrg.krein',
                'autodrg.bound',
                'autodrg.geom',
                'autodrg.fgeom',
                'autodrg.cli',
                'drgdat'],
      package_dir={'autodrg': 'autodrg',
                   'drgdat': 'drgdat'},
      package_data={'autodrg.cli': ['data/*.json']},
      install_requires=['numpy',
                        'scipy',
                        'networkx',
                        'pyyaml',
                        'sympy',
                        'galois',
                        'jsonschema'],
      entry_points={'console_scripts': ['drg=autodrg.cli:main']})
