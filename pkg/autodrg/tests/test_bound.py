""" test autodrg.bound
"""

import pytest
from autodrg import num
from autodrg import par
from autodrg import drg
from autodrg import krein
from autodrg import bound
from autodrg import geom
from autodrg.error import HypothesisError
from drgdat import catalog


HERM22 = drg.from_string('10,8;1,5')
HERM32 = drg.from_string('42,40,32;1,5,21')
HAMMING23 = drg.from_string('4,2;1,2')

GENERATORS = tuple(geom.hermitian_dual_polar_array(d_max, r)
                   for r in (2, 3) for d_max in (2, 3, 4))
CORPUS = (tuple(arr for _, arr in catalog.all_arrays()) + GENERATORS +
          tuple(geom.hamming_array(d_max, q)
                for d_max in (2, 3, 4) for q in (3, 4, 5)))


def test__multiplicity_bound():
    """ test bound.multiplicity_bound
    """
    spec = drg.spectrum(HERM22)
    rep = bound.multiplicity_bound(HERM22, spec, 2)
    assert rep.lhs == num.rational(-2, 5)
    assert rep.rhs == num.rational(-2, 5)
    assert rep.relation == par.Relation.EQ
    assert rep.is_equality()
    assert rep.details['multiplicity_floor'] == 6
    assert rep.details['floor_holds']

    rep = bound.multiplicity_bound(HERM22, spec, 1)
    assert rep.relation == par.Relation.GT
    assert not rep.details

    spec = drg.spectrum(HERM32)
    rep = bound.multiplicity_bound(HERM32, spec, 3)
    assert rep.lhs == num.rational(-10, 21)
    assert rep.is_equality()

    with pytest.raises(HypothesisError) as err:
        bound.multiplicity_bound(HERM32, spec, 0)
    assert err.value.reasons == ('θ_0 != k',)

    pentagon = catalog.array('pentagon')
    with pytest.raises(HypothesisError) as err:
        bound.multiplicity_bound(pentagon, drg.spectrum(pentagon), 1)
    assert err.value.reasons == ('k >= 3',)


def test__theta1_bounds():
    """ test bound.theta1_lower_bound and bound.theta1_upper_bound
    """
    spec = drg.spectrum(HERM22)
    lower = bound.theta1_lower_bound(HERM22, spec)
    upper = bound.theta1_upper_bound(HERM22, spec, contains_gq=True)
    assert lower.lhs == 1 and lower.rhs == 1 and lower.is_equality()
    assert upper.rhs == 1 and upper.is_equality()
    assert upper.assumptions == {'contains_induced_gq': True}

    spec = drg.spectrum(HERM32)
    assert bound.theta1_lower_bound(HERM32, spec).rhs == 9
    assert bound.theta1_upper_bound(HERM32, spec).rhs == 9

    cube = catalog.array('cube3')
    with pytest.raises(HypothesisError) as err:
        bound.theta1_lower_bound(cube, drg.spectrum(cube))
    assert 'a_1 != 0' in err.value.reasons

    petersen = catalog.array('petersen')
    with pytest.raises(HypothesisError):
        bound.theta1_upper_bound(petersen, drg.spectrum(petersen))


def test__light_tail_sufficiency():
    """ test the squeeze on the generators and its hypotheses
    """
    for arr in GENERATORS:
        holds, (lower, upper) = bound.light_tail_sufficiency(
            arr, drg.spectrum(arr), contains_gq=True)
        assert holds, drg.string(arr)
        assert lower.rhs == upper.rhs

    # H(2,3) has θ_D = -k/2 but c_2 = 2 != (a_1+1)^2 + 1
    with pytest.raises(HypothesisError) as err:
        bound.light_tail_sufficiency(HAMMING23, drg.spectrum(HAMMING23),
                                     contains_gq=True)
    assert err.value.reasons == ('c_2 = 2 != (a_1+1)^2+1 = 5',)

    with pytest.raises(HypothesisError) as err:
        bound.light_tail_sufficiency(HERM22, drg.spectrum(HERM22))
    assert err.value.reasons == ('induced GQ(a_1+1, c_2-1) containment',)


def test__profile_identity():
    """ test bound.profile_coefficients and bound.profile_identity
    """
    assert bound.profile_coefficients(HERM32) == (num.rational(1, 22),
                                                  num.rational(21, 22))
    assert bound.profile_coefficients(HERM22) == (num.rational(1, 6),
                                                  num.rational(5, 6))

    spec = drg.spectrum(HERM32)
    table = bound.profile_table(HERM32, spec)
    assert table[1] == (1, num.rational(1, 4), num.rational(1, 4))
    assert bound.profile_identity(HERM32, spec)
    for arr in GENERATORS:
        assert bound.profile_identity(arr, drg.spectrum(arr))

    assert not bound.profile_identity(HAMMING23, drg.spectrum(HAMMING23))


def test__light_tail_equivalence():
    """ test multiplicity bound equality against the Krein scan on a corpus
    """
    assert len(CORPUS) >= 30
    for arr in CORPUS:
        if drg.valency(arr) < 3 or drg.diameter(arr) < 2:
            continue
        spec = drg.spectrum(arr)
        scan = krein.light_tail_scan(spec, krein.krein_tensor(spec))
        reports = bound.check_consistency(arr, spec)
        for rep in scan:
            i = rep.eigenvalue_index
            if i not in reports:
                continue
            brep = reports[i]
            assert brep.relation != par.Relation.LT, (drg.string(arr), i)
            assert brep.is_equality() == rep.is_light_tail, (
                drg.string(arr), i)


def test__bound_dict():
    """ test bound.bound_dict
    """
    spec = drg.spectrum(HERM22)
    dct = bound.bound_dict(bound.multiplicity_bound(HERM22, spec, 2))
    assert dct == {
        'bound_name': 'MultiplicityLowerBound',
        'lhs': '-2/5',
        'rhs': '-2/5',
        'relation': 'EQ',
        'equality_semantics': 'E_2 is a light tail',
        'assumptions': {},
        'details': {'multiplicity_floor': '6', 'floor_holds': True},
    }


if __name__ == '__main__':
    test__multiplicity_bound()
    test__theta1_bounds()
    test__light_tail_sufficiency()
    test__profile_identity()
    test__light_tail_equivalence()
    test__bound_dict()
