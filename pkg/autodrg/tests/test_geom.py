""" test autodrg.geom
"""

import itertools
import pytest
from autodrg import num
from autodrg import par
from autodrg import drg
from autodrg import krein
from autodrg import geom
from autodrg.error import InfeasibleArrayError
from autodrg.error import KreinInfeasibleError
from autodrg.error import UnsupportedParametersError
from drgdat import catalog


HERM22 = drg.from_string('10,8;1,5')
HERM32 = drg.from_string('42,40,32;1,5,21')
HAMMING23 = drg.from_string('4,2;1,2')
HAMMING33 = drg.from_string('6,4,2;1,2,3')

# theorem11_classify steps after its hypotheses
CONCLUSION_STEPS = (
    par.Step.GAMMA, par.Step.A_RELATION, par.Step.PROFILE,
    par.Step.C_FORMULA, par.Step.U_VALUES, par.Step.C_GROWTH,
    par.Step.VALENCY_GAP, par.Step.GAMMA_CAP, par.Step.C_FROM_GAMMA,
    par.Step.TERMINAL, par.Step.PRIME_POWER, par.Step.IDENTIFICATION)


def test__families():
    """ test the generator arrays of the classical families
    """
    assert geom.hermitian_dual_polar_array(2, 2) == HERM22
    assert geom.hermitian_dual_polar_array(3, 2) == HERM32
    assert geom.hermitian_dual_polar_array(4, 2) == (
        (170, 168, 160, 128), (1, 5, 21, 85))
    assert geom.hermitian_dual_polar_array(2, 3) == ((30, 27), (1, 10))
    assert geom.hermitian_dual_polar_array(3, 3) == (
        (273, 270, 243), (1, 10, 91))
    assert drg.vertex_count(geom.hermitian_dual_polar_array(2, 3)) == 112

    for d_max in (2, 3, 4):
        for r in (2, 3):
            assert (geom.dual_polar_array(d_max, r ** 2, '1/2') ==
                    geom.hermitian_dual_polar_array(d_max, r))
    assert geom.dual_polar_array(3, 2, 1) == catalog.array('dual_polar_b32')

    assert geom.hamming_array(3, 2) == catalog.array('cube3')
    assert geom.hamming_array(2, 3) == HAMMING23
    assert geom.halved_cube_array(5) == ((10, 3), (1, 6))
    assert geom.halved_cube_array(7) == ((21, 10, 3), (1, 6, 15))

    for args in ((1, 2), (2, 6)):
        with pytest.raises(UnsupportedParametersError):
            geom.hermitian_dual_polar_array(*args)
    with pytest.raises(UnsupportedParametersError):
        geom.dual_polar_array(2, 2, '1/2')
    with pytest.raises(UnsupportedParametersError):
        geom.dual_polar_array(2, 4, 3)


def test__is_prime_power():
    """ test geom.is_prime_power
    """
    assert [q for q in range(1, 17) if geom.is_prime_power(q)] == [
        2, 3, 4, 5, 7, 8, 9, 11, 13, 16]
    with pytest.raises(UnsupportedParametersError):
        geom.is_prime_power(geom.MAX_PRIME_POWER + 1)


def test__gamma_sequence():
    """ test geom.gamma_sequence and the Delsarte bound
    """
    spec = drg.spectrum(HERM22)
    assert geom.delsarte_bound(HERM22, spec) == 3
    assert geom.geometric_eigenvalue(HERM22) == -5
    prof = geom.gamma_sequence(HERM22, spec)
    assert prof.is_geometric()
    assert prof.gamma == (1, 1)
    assert prof.gamma_integral
    assert prof.a_formula == (True,)
    assert prof.line_count == 45

    prof = geom.gamma_sequence(HERM32, drg.spectrum(HERM32))
    assert prof.gamma == (1, 1, 1)
    assert prof.a_formula == (True, True)
    assert prof.bounded_up_to == 2

    prof = geom.gamma_sequence(HAMMING33, drg.spectrum(HAMMING33))
    assert prof.gamma == (1, 1, 1)
    assert prof.a_relation_holds_up_to == 3

    petersen = catalog.array('petersen')
    prof = geom.gamma_sequence(petersen, drg.spectrum(petersen))
    assert not prof.is_geometric()
    assert prof.gamma is None
    assert any('not geometric' in diag for diag in prof.diagnostics)


def test__a_from_gamma():
    """ test geom.a_from_gamma
    """
    assert geom.a_from_gamma(HERM32, (1, 1, 1), 1) == 1
    assert geom.a_from_gamma(HERM32, (1, 1, 1), 2) == 5
    assert geom.a_from_gamma(HERM32, (1, 2, 1), 2) != 5


def test__boundedness_conditions():
    """ test geom.boundedness_conditions
    """
    assert geom.boundedness_conditions(HERM32) == (
        2, ('K_{1,1,2}-freeness assumed',))
    assert geom.boundedness_conditions(HERM32, k112_free=True) == (2, ())
    assert geom.boundedness_conditions(HERM32, k112_free=False) == (
        0, ('not K_{1,1,2}-free',))
    assert geom.boundedness_conditions(HAMMING23)[0] == 1
    assert geom.boundedness_conditions(HAMMING33)[0] == 2
    assert geom.boundedness_conditions(catalog.array('cube3')) == (
        0, ('a_1 = 0',))

    # J(7,3): a_2 = 6 != c_2 a_1 = 20
    m_val, diags = geom.boundedness_conditions(catalog.array('johnson73'))
    assert m_val == 1
    assert diags[0] == 'a_2 = 6 != c_2 a_1 = 20'

    # c_2 = c_3 rules out m = 3 only; m = 4 still holds
    arr = ((10, 8, 6, 6, 4), (1, 2, 2, 3, 4))
    assert geom.boundedness_conditions(arr, k112_free=True) == (
        4, ('c_2 = c_3', 'a_5 = 6 != c_5 a_1 = 4'))


def test__conjecture_branches():
    """ test geom.conjecture_branches
    """
    def _branches(name):
        arr = catalog.array(name)
        return geom.conjecture_branches(arr, drg.spectrum(arr))

    assert _branches('hermitian22') == (par.ConjectureBranch.HERMITIAN,)
    assert _branches('hermitian33') == (par.ConjectureBranch.HERMITIAN,)
    assert _branches('cube3') == (par.ConjectureBranch.A1_ZERO,
                                  par.ConjectureBranch.ANTIPODAL)
    assert _branches('icosahedron') == (par.ConjectureBranch.ANTIPODAL,
                                        par.ConjectureBranch.TIGHT)
    assert _branches('halved7cube') == (
        par.ConjectureBranch.HALVED_ODD_CUBE,)
    assert _branches('halved5cube') == (
        par.ConjectureBranch.HALVED_ODD_CUBE,)


def test__closed_forms():
    """ test the closed forms along the classification argument
    """
    assert geom.c_formula(1, 3) == 21
    assert geom.c_formula(2, 2) == 10
    assert geom.theta_prime(42, 1) == 9
    assert geom.theta_prime(10, 1) == 1
    assert geom.u_theta_prime(42, 1, 0) == 1
    assert geom.u_theta_prime(42, 1, 1) == num.rational(3, 14)
    assert geom.u_theta_prime(170, 1, 4) == num.rational(-1, 128)

    # γ_{m+1} = 1 forces c_{m+1} into its closed form, whatever k is
    for k in (42, 170, 300):
        for a_1 in (1, 2, 3):
            for m_val in (1, 2, 3):
                assert (geom.c_closed_form(k, a_1, m_val, 1) ==
                        geom.c_formula(a_1, m_val + 1))
    assert geom.c_closed_form(170, 1, 2, 1) == 21


def test__theorem11_classify():
    """ test the classifier on the Hermitian dual polar arrays
    """
    for d_max in (3, 4, 5):
        for r in (2, 3):
            arr = geom.hermitian_dual_polar_array(d_max, r)
            verd = geom.theorem11_classify(arr, drg.spectrum(arr),
                                           two_bounded=True)
            assert verd.is_hermitian_dual_polar(), drg.string(arr)
            assert verd.r == r
            assert verd.label() == 'IsHermitianDualPolar({})'.format(r)
            assert not verd.conditional
            assert all(entry['passed'] for entry in verd.trace[1:])

    # D = 2 passes every array-level step but is outside the hypothesis
    verd = geom.theorem11_classify(HERM22, drg.spectrum(HERM22),
                                   two_bounded=True)
    assert verd.verdict == par.Verdict.HYPOTHESIS_FAILS
    assert verd.reason == par.Step.DIAMETER
    assert all(entry['passed'] for entry in verd.trace[1:])

    verd = geom.theorem11_classify(HERM32, drg.spectrum(HERM32))
    assert verd.verdict == par.Verdict.HYPOTHESIS_FAILS
    assert verd.reason == par.Step.TWO_BOUNDED
    assert verd.label() == 'HypothesisFails(2-bounded)'


def test__theorem11_rejects():
    """ test that no other catalogued array is identified
    """
    for name, arr in catalog.all_arrays():
        verd = geom.theorem11_classify(arr, drg.spectrum(arr),
                                       two_bounded=True)
        if name in ('hermitian32', 'hermitian42', 'hermitian33'):
            assert verd.is_hermitian_dual_polar(), name
        else:
            assert not verd.is_hermitian_dual_polar(), name
        assert verd.trace, name

    def _reason(name):
        arr = catalog.array(name)
        return geom.theorem11_classify(arr, drg.spectrum(arr),
                                       two_bounded=True).reason

    assert _reason('cube3') == par.Step.NON_BIPARTITE
    assert _reason('petersen') == par.Step.SMALLEST_EIGENVALUE
    assert _reason('hexagon') == par.Step.VALENCY
    assert _reason('hamming33') == par.Step.LIGHT_TAIL


def test__theorem11_mutations():
    """ no single-entry change of a generator array is identified
    """
    for arr in (HERM32, geom.hermitian_dual_polar_array(4, 2)):
        for row, idx, step in itertools.product((0, 1), range(len(arr[0])),
                                                (-1, 1)):
            seqs = [list(arr[0]), list(arr[1])]
            seqs[row][idx] += step
            try:
                mut = drg.from_data(*seqs)
                spec = drg.spectrum(mut)
                verd = geom.theorem11_classify(mut, spec, two_bounded=True)
            except (InfeasibleArrayError, KreinInfeasibleError):
                continue
            assert not verd.is_hermitian_dual_polar(), drg.string(mut)

            failing = _first_failing_hypothesis(mut, spec)
            if failing is not None:
                assert verd.verdict == par.Verdict.HYPOTHESIS_FAILS
                assert verd.reason == failing, drg.string(mut)
            else:
                # past the hypotheses, the first failing step is named
                assert verd.verdict == par.Verdict.CONCLUSION_FAILS
                assert verd.step in CONCLUSION_STEPS, drg.string(mut)
                assert verd.trace[-1]['step'] == verd.step
                assert not verd.trace[-1]['passed']


def _first_failing_hypothesis(arr, spec):
    """ the first 2-bounded light tail hypothesis an array of D >= 3 fails
    """
    if drg.valency(arr) < 3:
        ret = par.Step.VALENCY
    elif drg.is_bipartite(arr):
        ret = par.Step.NON_BIPARTITE
    elif not geom.is_geometric_premise(arr, spec):
        ret = par.Step.SMALLEST_EIGENVALUE
    elif not _is_light_tail_at_last(arr, spec):
        ret = par.Step.LIGHT_TAIL
    elif geom.boundedness_conditions(arr)[0] < 2:
        ret = par.Step.TWO_BOUNDED
    else:
        ret = None
    return ret


def _is_light_tail_at_last(arr, spec):
    scan = krein.light_tail_scan(spec, krein.krein_tensor(spec))
    return krein.light_tail_report(scan, drg.diameter(arr)).is_light_tail


def test__theorem12_check():
    """ test the a_1 = 1 classifier
    """
    verd = geom.theorem12_check(HERM22, drg.spectrum(HERM22))
    assert verd.label() == 'IsHermitianDualPolar(2)'
    assert verd.conditional
    steps = [entry['step'] for entry in verd.trace]
    assert par.Step.STEP_PATTERN in steps
    assert par.Step.CITED in steps

    verd = geom.theorem12_check(HERM32, drg.spectrum(HERM32))
    assert verd.is_hermitian_dual_polar() and verd.conditional

    arr = geom.hermitian_dual_polar_array(5, 2)
    verd = geom.theorem12_check(arr, drg.spectrum(arr))
    assert verd.is_hermitian_dual_polar()
    assert verd.r == 2
    assert not verd.conditional

    verd = geom.theorem12_check(HAMMING23, drg.spectrum(HAMMING23))
    assert verd.reason == par.Step.C2_MIN
    herm23 = catalog.array('hermitian23')
    verd = geom.theorem12_check(herm23, drg.spectrum(herm23))
    assert verd.reason == par.Step.A1_ONE


def test__corollary41_check():
    """ test the m-bounded classifier
    """
    spec = drg.spectrum(HERM32)
    verd = geom.corollary41_check(HERM32, spec, 2)
    assert verd.is_hermitian_dual_polar()
    assert verd.r == 2
    steps = [entry['step'] for entry in verd.trace]
    assert par.Step.SQUEEZE in steps

    verd = geom.corollary41_check(HERM32, spec, 1)
    assert verd.reason == par.Step.M_BOUNDED

    verd = geom.corollary41_check(HAMMING23, drg.spectrum(HAMMING23), 2)
    assert verd.reason == par.Step.C2_MIN

    verd = geom.corollary41_check(HERM22, drg.spectrum(HERM22), 2)
    assert verd.verdict == par.Verdict.HYPOTHESIS_FAILS
    assert verd.reason == par.Step.DIAMETER


def test__dicts():
    """ test geom.profile_dict and geom.verdict_dict
    """
    spec = drg.spectrum(HERM22)
    dct = geom.profile_dict(geom.gamma_sequence(HERM22, spec))
    assert dct['clique_bound'] == '3'
    assert dct['gamma'] == ['1', '1']
    assert dct['line_count'] == '45'

    dct = geom.verdict_dict(geom.theorem12_check(HERM22, spec))
    assert dct['verdict'] == 'IsHermitianDualPolar'
    assert dct['label'] == 'IsHermitianDualPolar(2)'
    assert dct['r'] == 2
    assert dct['conditional'] is True
    for entry in dct['trace']:
        assert set(entry) == {'step', 'equation', 'passed', 'values'}


if __name__ == '__main__':
    test__families()
    test__is_prime_power()
    test__gamma_sequence()
    test__a_from_gamma()
    test__boundedness_conditions()
    test__conjecture_branches()
    test__closed_forms()
    test__theorem11_classify()
    test__theorem11_rejects()
    test__theorem11_mutations()
    test__theorem12_check()
    test__corollary41_check()
    test__dicts()
