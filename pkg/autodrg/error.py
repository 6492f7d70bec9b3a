""" Library of autodrg errors.
"""


class ArrayParseError(ValueError):
    """ exception for intersection array text that cannot be read """


class InfeasibleArrayError(ValueError):
    """ exception for an array that violates a feasibility condition """


class NotAnEigenvalueError(ValueError):
    """ exception for a standard sequence requested at a non-eigenvalue """


class KreinInfeasibleError(ValueError):
    """ exception for a negative Krein parameter """

    def __init__(self, idxs, value):
        super().__init__(
            'Krein-infeasible array: q_{}{}^{} = {} < 0'.format(
                idxs[0], idxs[1], idxs[2], value))
        self.idxs = idxs


class HypothesisError(ValueError):
    """ exception for a call made outside the hypotheses of a result """

    def __init__(self, reasons):
        reasons = tuple(reasons)
        super().__init__('hypotheses violated: {}'.format('; '.join(reasons)))
        self.reasons = reasons


class UnsupportedParametersError(ValueError):
    """ exception for parameters outside the supported range """


class InconsistencyError(RuntimeError):
    """ exception for two exact computations that disagree """
