"""
 assembly and rendering of analysis reports

 Reports are plain JSON-ready dictionaries. Every scalar goes through
 num.to_json, so reports carry exact values only.
"""
import functools
import json
import os
import jsonschema
from autodrg import num
from autodrg import par
from autodrg import drg
from autodrg import krein
from autodrg import bound
from autodrg import geom
from autodrg import fgeom
from autodrg.error import HypothesisError
from autodrg.error import InconsistencyError


TOOL_VERSION = '0.1.0'
SCHEMA_PATH = os.path.join(os.path.dirname(os.path.realpath(__file__)),
                           'data', 'report.schema.json')


def build_report(arr, two_bounded=False, krein_full=False, m_bounded=None,
                 contains_gq=False):
    """ the full analysis report of a validated array

    :param two_bounded: the caller asserts the graph is 2-bounded
    :param krein_full: list zero Krein parameters too
    :param m_bounded: the caller asserts m-boundedness for this m
    :param contains_gq: the caller asserts an induced GQ(a_1+1, c_2-1)
    :rtype: dict
    """
    spec = drg.spectrum(arr)
    ktens = krein.krein_tensor(spec)
    return {
        'tool_version': TOOL_VERSION,
        'exact': True,
        'input': {'array': drg.string(arr), 'set': drg.set_string(arr)},
        'array': array_section(arr),
        'spectrum': drg.spectral_dict(spec),
        'krein': krein_section(spec, ktens, full=krein_full),
        'bounds': bounds_section(arr, spec, contains_gq=contains_gq),
        'geometric': geometric_section(arr, spec),
        'classification': classification_section(
            arr, spec, two_bounded=two_bounded, m_bounded=m_bounded),
    }


def array_section(arr):
    """ intersection numbers and the array-level checks
    """
    c_all, a_all, b_all = drg.intersection_numbers(arr)
    return {
        'k': drg.valency(arr),
        'D': drg.diameter(arr),
        'n': drg.vertex_count(arr),
        'a': list(a_all),
        'b': list(b_all),
        'c': list(c_all),
        'k_i': list(drg.distance_valencies(arr)),
        'bipartite': drg.is_bipartite(arr),
        'parity_violations': list(drg.parity_conditions(arr)),
    }


def krein_section(spec, ktens, full=False):
    """ the sparse Krein tensor, the light tail scan and its rescaled views
    """
    scan = krein.light_tail_scan(spec, ktens)
    tails = []
    for rep in scan:
        dct = krein.light_tail_dict(rep)
        dct['at_smallest_eigenvalue'] = (
            rep.eigenvalue_index == len(spec.eigenvalues) - 1)
        dct['at_minus_one'] = (
            num.compare(rep.eigenvalue, -1) == par.Relation.EQ)
        tails.append(dct)

    rescaled = {}
    for rep in scan:
        if rep.is_light_tail:
            view = krein.rescaled_view(rep, spec, ktens)
            rescaled[str(rep.eigenvalue_index)] = {
                'j_coeff': num.to_json(view['j_coeff']),
                'e_coeff': num.to_json(view['e_coeff']),
                'weights': (None if view['weights'] is None else
                            {str(h): num.to_json(val)
                             for h, val in view['weights'].items()}),
                'convex': view['convex'],
            }
    return {
        'entries': krein.krein_list(ktens, full=full),
        'absolute_bound_violations': list(krein.absolute_bound(spec, ktens)),
        'light_tails': tails,
        'rescaled': rescaled,
    }


def bounds_section(arr, spec, contains_gq=False):
    """ the multiplicity bounds, both θ_1 bounds and the profile identity

    A bound whose hypotheses fail is reported by its violated hypotheses;
    without contains_gq the squeeze lists the GQ containment among them.
    """
    mult = {str(i): bound.bound_dict(brep)
            for i, brep in bound.check_consistency(arr, spec).items()}
    sec = {'multiplicity': mult}

    try:
        sec['theta1_lower'] = bound.bound_dict(
            bound.theta1_lower_bound(arr, spec))
    except HypothesisError as err:
        sec['theta1_lower'] = {'reasons': list(err.reasons)}
    try:
        sec['theta1_upper'] = bound.bound_dict(
            bound.theta1_upper_bound(arr, spec, contains_gq=contains_gq))
    except HypothesisError as err:
        sec['theta1_upper'] = {'reasons': list(err.reasons)}
    try:
        holds, _ = bound.light_tail_sufficiency(arr, spec,
                                                contains_gq=contains_gq)
        sec['squeeze'] = {'holds': holds, 'assumes_induced_gq': True}
    except HypothesisError as err:
        sec['squeeze'] = {'reasons': list(err.reasons)}

    sec['profile_identity'] = (
        drg.diameter(arr) >= 2 and drg.a_numbers(arr)[1] > 0 and
        bound.profile_identity(arr, spec))
    return sec


def geometric_section(arr, spec):
    """ the geometric profile and the matching classification branches
    """
    prof = geom.gamma_sequence(arr, spec)
    m_bnd, diags = geom.boundedness_conditions(arr)
    return {
        'profile': geom.profile_dict(prof),
        'conjecture_branches': list(geom.conjecture_branches(arr, spec)),
        'boundedness': {'m': m_bnd, 'diagnostics': list(diags)},
    }


def classification_section(arr, spec, two_bounded=False, m_bounded=None):
    """ verdicts of every classifier that applies
    """
    sec = {'theorem11': geom.verdict_dict(
        geom.theorem11_classify(arr, spec, two_bounded=two_bounded))}
    if drg.diameter(arr) >= 1 and drg.a_numbers(arr)[1] == 1:
        sec['theorem12'] = geom.verdict_dict(geom.theorem12_check(arr, spec))
    if m_bounded is not None:
        sec['corollary41'] = geom.verdict_dict(
            geom.corollary41_check(arr, spec, m_bounded))
    return sec


def construct_report(gra, family, params, verify=par.Verify.BASIC):
    """ the measurement report of a constructed graph

    Full verification checks every Delsarte clique for complete
    regularity, looks for an induced GQ(a_1+1, c_2-1) and checks the
    light tail identity on the graph.
    """
    meas = fgeom.measure_parameters(gra)
    rep = {
        'tool_version': TOOL_VERSION,
        'exact': True,
        'input': {'family': family, 'params': list(params),
                  'verify': verify},
        'graph': {'name': gra.name, 'n': gra.n,
                  'edges': gra.adjacency.nnz // 2},
        'measured': fgeom.measured_dict(meas),
    }
    if not meas.is_distance_regular():
        return rep

    arr = meas.intersection_array
    rep['analysis'] = build_report(arr)
    if verify == par.Verify.FULL:
        rep['verification'] = _full_verification(gra, arr)
    return rep


def classify_report(arr, two_bounded=False, m_bounded=None):
    """ the verdicts of an array, without the other sections
    """
    spec = drg.spectrum(arr)
    return {
        'tool_version': TOOL_VERSION,
        'exact': True,
        'input': {'array': drg.string(arr), 'set': drg.set_string(arr)},
        'classification': classification_section(
            arr, spec, two_bounded=two_bounded, m_bounded=m_bounded),
    }


def search_report(hits, max_k, max_d, a_1=None, hypotheses=None,
                  exhaustive=False):
    """ the hits of a search, in canonical order
    """
    return {
        'tool_version': TOOL_VERSION,
        'exact': True,
        'input': {'max_k': max_k, 'max_D': max_d, 'a1': a_1,
                  'hypotheses': hypotheses, 'exhaustive': exhaustive},
        'hits': [{'array': drg.string(arr), 'set': drg.set_string(arr)}
                 for arr in hits],
    }


def _full_verification(gra, arr):
    spec = drg.spectrum(arr)
    a_1 = drg.a_numbers(arr)[1]
    ver = {}

    delsarte = [clq for clq in fgeom.maximal_cliques(gra)
                if len(clq) == a_1 + 2]
    checked, failed = 0, None
    for clq in delsarte:
        try:
            holds, info = fgeom.verify_delsarte_completely_regular(
                gra, clq, arr=arr)
        except HypothesisError as err:
            failed = {'clique': list(clq), 'reasons': list(err.reasons)}
            break
        checked += 1
        if not holds:
            failed = {'clique': list(clq), 'info': info}
            break
    ver['delsarte_completely_regular'] = {
        'holds': bool(delsarte) and failed is None,
        'checked': checked, 'failure': failed}

    if drg.diameter(arr) >= 2 and drg.c_numbers(arr)[1] > 1:
        holds, info = fgeom.find_induced_gq(gra, a_1 + 1,
                                            drg.c_numbers(arr)[1] - 1)
        ver['induced_gq'] = {'holds': holds, 'info': info}
    holds, info = fgeom.verify_light_tail_on_graph(gra, spec)
    ver['light_tail'] = {'holds': holds, 'info': info}
    return ver


# rendering
def json_string(rep):
    """ the report as indented JSON
    """
    return json.dumps(rep, indent=2, ensure_ascii=False)


def table_string(rep):
    """ the report as "key.path: value" lines, with scalars in readable form
    """
    lines = []
    for path, val in _flatten(rep, ''):
        lines.append('{}: {}'.format(path, val))
    return '\n'.join(lines) + '\n'


def _flatten(obj, path):
    if isinstance(obj, dict) and set(obj) == {'min_poly', 'interval'}:
        yield path, num.string(num.from_json(obj))
    elif isinstance(obj, dict):
        for key, val in obj.items():
            yield from _flatten(val, '{}.{}'.format(path, key)
                                if path else str(key))
    elif isinstance(obj, list) and obj and all(
            isinstance(val, (str, int, bool)) or val is None for val in obj):
        yield path, ', '.join(map(str, obj))
    elif isinstance(obj, list):
        for idx, val in enumerate(obj):
            yield from _flatten(val, '{}[{}]'.format(path, idx))
    else:
        yield path, obj


# validation
@functools.lru_cache(maxsize=1)
def schema():
    """ the published report schema
    """
    with open(SCHEMA_PATH, encoding='utf-8') as fle:
        return json.load(fle)


def validate(rep):
    """ check a report against the published schema

    :raises InconsistencyError: if the report does not conform
    """
    try:
        jsonschema.validate(instance=rep, schema=schema())
    except jsonschema.ValidationError as err:
        raise InconsistencyError(
            'report does not match its schema at {}: {}'.format(
                '/'.join(map(str, err.absolute_path)), err.message))
