""" common autodrg parameters
"""
import inspect
import itertools


class Relation:
    """ Outcomes of an exact comparison
    """
    LT = 'LT'
    EQ = 'EQ'
    GT = 'GT'


class Operation:
    """ Binary scalar operations
    """
    ADD = 'add'
    SUB = 'sub'
    MUL = 'mul'
    DIV = 'div'


class BoundName:
    """ Names of the eigenvalue and multiplicity bounds
    """
    MULTIPLICITY_LOWER = 'MultiplicityLowerBound'
    THETA1_LOWER = 'Theta1LowerBound'
    THETA1_UPPER = 'Theta1UpperBound'


class Verdict:
    """ Names of classification verdicts
    """
    HERMITIAN_DUAL_POLAR = 'IsHermitianDualPolar'
    HYPOTHESIS_FAILS = 'HypothesisFails'
    CONCLUSION_FAILS = 'ConclusionFails'


class Hypothesis:
    """ Hypothesis predicates for parameter searches
    """
    THM12 = 'thm12'
    LT = 'lt'


class Family:
    """ Graph families with explicit constructions
    """
    HERMITIAN = 'hermitian'
    HAMMING = 'hamming'


class Verify:
    """ Graph verification levels
    """
    BASIC = 'basic'
    FULL = 'full'


class OutputFormat:
    """ Report output formats
    """
    JSON = 'json'
    TABLE = 'table'


class ConjectureBranch:
    """ Array patterns of the light tail classification cases
    """
    A1_ZERO = 'a1-zero'
    ANTIPODAL = 'antipodal-diameter-3'
    TIGHT = 'tight'
    HALVED_ODD_CUBE = 'halved-odd-cube'
    HERMITIAN = 'hermitian-dual-polar'


class Step:
    """ Names of classification pipeline steps
    """
    # hypotheses
    DIAMETER = 'diameter'
    VALENCY = 'valency'
    NON_BIPARTITE = 'non-bipartite'
    SMALLEST_EIGENVALUE = 'smallest eigenvalue'
    LIGHT_TAIL = 'light tail'
    TWO_BOUNDED = '2-bounded'
    M_BOUNDED = 'm-bounded'
    A1_ONE = 'a_1 = 1'
    C2_MIN = 'c_2 lower bound'
    # conclusions
    GAMMA = 'gamma sequence'
    A_RELATION = 'a_i in terms of gamma'
    PROFILE = 'light tail profile'
    C_FORMULA = 'c_i closed form'
    U_VALUES = 'standard sequence values'
    C_GROWTH = 'c growth'
    GAMMA_CAP = 'gamma cap'
    VALENCY_GAP = 'valency gap'
    C_FROM_GAMMA = 'c_{m+1} in terms of gamma'
    TERMINAL = 'terminal identities'
    PRIME_POWER = 'prime power'
    IDENTIFICATION = 'generator identification'
    STEP_PATTERN = 'gamma step pattern'
    STEP_INDEX = 'gamma step index'
    C2_VALUE = 'c_2 value'
    SQUEEZE = 'light tail squeeze'
    CITED = 'cited small-diameter result'


REVERSE_RELATION_DCT = {
    Relation.LT: Relation.GT,
    Relation.EQ: Relation.EQ,
    Relation.GT: Relation.LT,
}


def is_relation(rel):
    """ Check if a value is a comparison relation
    """
    return rel in _values(Relation)


def reverse_relation(rel):
    """ the relation with its two sides exchanged
    """
    return REVERSE_RELATION_DCT[rel]


def is_verdict(name):
    """ Check if a value is a verdict name
    """
    return name in _values(Verdict)


def _values(cls):
    """ list the values of a parameter class
    """
    assert inspect.isclass(cls)
    vals = tuple(val for val in _public_attributes(cls)
                 if not inspect.isclass(val))
    return vals


def all_values(cls):
    """ recursively list the values of a parameter class tree
    """
    assert inspect.isclass(cls)
    vals = tuple(itertools.chain(*(
        [val] if not inspect.isclass(val) else all_values(val)
        for val in _public_attributes(cls))))
    return vals


def _public_attributes(cls):
    return tuple(val for name, val in
                 inspect.getmembers(cls, lambda x: not inspect.isroutine(x))
                 if not name.startswith('_') and not inspect.isfunction(val))
