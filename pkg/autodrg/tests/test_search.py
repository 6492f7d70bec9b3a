""" test autodrg.cli._search
"""

import pytest
from autodrg import par
from autodrg import drg
from autodrg.cli import _search
from autodrg.error import UnsupportedParametersError


HERM22 = drg.from_string('10,8;1,5')
HERM32 = drg.from_string('42,40,32;1,5,21')
KREIN_INFEASIBLE = drg.from_string('22,20;1,11')


def test__search_thm12():
    """ the a_1 = 1 search finds exactly the two Hermitian arrays in range
    """
    hits = _search.search(60, 4, hypotheses=par.Hypothesis.THM12)
    assert hits == (HERM22, HERM32)

    assert _search.search(3, 6, hypotheses=par.Hypothesis.THM12) == ()
    assert _search.search(60, 4, a_1=2,
                          hypotheses=par.Hypothesis.THM12) == ()


def test__search_thm12_exhaustive():
    """ scanning every a_1 = 1 array finds the step pattern hits
    """
    fast = _search.search(42, 3, hypotheses=par.Hypothesis.THM12)
    full = _search.search(42, 3, hypotheses=par.Hypothesis.THM12,
                          exhaustive=True)
    assert fast == full == (HERM22, HERM32)

    for k in range(6, 43, 2):
        cands = set(_search.enumerate_thm12_candidates(k, 3))
        for arr in _search.enumerate_thm12_arrays(k, 3):
            assert arr in cands, drg.string(arr)
        for arr in cands:
            assert drg.a_numbers(arr)[1] == 1
            assert drg.c_numbers(arr)[1] >= 5


def test__is_eigenvalue():
    """ test _search.is_eigenvalue
    """
    assert _search.is_eigenvalue(HERM22, -5)
    assert _search.is_eigenvalue(HERM22, 1)
    assert not _search.is_eigenvalue(HERM22, -1)
    assert _search.is_eigenvalue(HERM32, -21)
    assert _search.is_eigenvalue(drg.from_string('4,2;1,2'), -2)
    assert not _search.is_eigenvalue(drg.from_string('4,2;1,2'), 2)


def test__search_light_tail():
    """ the light tail search over small valencies
    """
    hits = _search.search(11, 2, hypotheses=par.Hypothesis.LT)
    assert HERM22 in hits
    assert list(hits) == sorted(hits, key=drg.string)
    for arr in hits:
        assert _search.feasibility_violations(arr) is None
        assert _search.satisfies(arr, par.Hypothesis.LT)


def test__enumerate_arrays():
    """ test _search.enumerate_arrays
    """
    arrs = set(_search.enumerate_arrays(2, 2))
    assert ((2, 1), (1, 1)) in arrs
    assert ((2, 1), (1, 2)) in arrs
    assert ((2,), (1,)) in arrs
    for arr in arrs:
        assert not drg.feasibility_violations(arr)

    arrs = set(_search.enumerate_arrays(10, 2, a_1=1))
    assert HERM22 in arrs
    assert all(drg.a_numbers(arr)[1] == 1 for arr in arrs)

    arrs = set(_search.enumerate_thm12_arrays(42, 3))
    assert HERM32 in arrs
    assert not set(_search.enumerate_thm12_arrays(43, 3))


def test__feasibility_violations():
    """ test _search.feasibility_violations
    """
    assert _search.feasibility_violations(HERM22) is None
    assert _search.feasibility_violations(HERM32) is None
    assert _search.feasibility_violations(KREIN_INFEASIBLE) is not None
    assert _search.feasibility_violations(((3, 1), (1, 3))) is not None


def test__search_caps():
    """ the search caps raise
    """
    with pytest.raises(UnsupportedParametersError):
        _search.search(_search.MAX_SEARCH_K + 1, 2)
    with pytest.raises(UnsupportedParametersError):
        _search.search(10, _search.MAX_SEARCH_D + 1)


if __name__ == '__main__':
    test__search_thm12()
    test__search_thm12_exhaustive()
    test__is_eigenvalue()
    test__search_light_tail()
    test__enumerate_arrays()
    test__feasibility_violations()
    test__search_caps()
