""" command line: drg analyze | search | construct | classify

Exit codes: 0 on success, 2 for input errors and 3 when two exact
computations disagree.
"""
import argparse
import logging
import sys
from autodrg import par
from autodrg import drg
from autodrg import fgeom
from autodrg.cli import _report
from autodrg.cli import _search
from autodrg.error import ArrayParseError
from autodrg.error import InfeasibleArrayError
from autodrg.error import KreinInfeasibleError
from autodrg.error import HypothesisError
from autodrg.error import UnsupportedParametersError
from autodrg.error import InconsistencyError
from drgdat import catalog


INPUT_ERRORS = (ArrayParseError, InfeasibleArrayError, KreinInfeasibleError,
                HypothesisError, UnsupportedParametersError)


def main(argv=None):
    """ run the command line and return its exit code
    """
    args = parser().parse_args(argv)
    logging.basicConfig(
        level=logging.WARNING if args.quiet else logging.INFO,
        format='%(levelname)s: %(message)s', stream=sys.stderr)

    try:
        rep = args.command(args)
        _report.validate(rep)
    except InconsistencyError as err:
        logging.error('internal inconsistency: {}'.format(err))
        return 3
    except INPUT_ERRORS as err:
        logging.error(str(err))
        return 2

    if args.format == par.OutputFormat.TABLE:
        sys.stdout.write(_report.table_string(rep))
    else:
        sys.stdout.write(_report.json_string(rep) + '\n')
    return 0


def parser():
    """ the argument parser with its four subcommands
    """
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--format', default=par.OutputFormat.JSON,
                        choices=par.all_values(par.OutputFormat),
                        help='report format')
    common.add_argument('--quiet', action='store_true',
                        help='log warnings and errors only')
    common.add_argument('--jobs', type=int, default=1,
                        help='worker processes for search')

    prs = argparse.ArgumentParser(
        prog='drg', description='exact analysis of distance-regular graph '
        'intersection arrays')
    subs = prs.add_subparsers(dest='subcommand', required=True)

    ana = subs.add_parser('analyze', parents=[common],
                          help='full report for an array')
    _add_array_arguments(ana)
    ana.add_argument('--krein-full', action='store_true',
                     help='list zero Krein parameters too')
    ana.add_argument('--assume-induced-gq', action='store_true',
                     help='assert an induced GQ(a_1+1, c_2-1); implied by '
                     '--assume-2-bounded and --m-bounded')
    ana.set_defaults(command=cmd_analyze)

    cls = subs.add_parser('classify', parents=[common],
                          help='classification verdicts only')
    _add_array_arguments(cls)
    cls.set_defaults(command=cmd_classify)

    sea = subs.add_parser('search', parents=[common],
                          help='feasible arrays satisfying a hypothesis')
    sea.add_argument('--max-k', type=int, required=True)
    sea.add_argument('--max-D', type=int, required=True, dest='max_d')
    sea.add_argument('--a1', type=int, default=None, dest='a_1')
    sea.add_argument('--hypotheses', default=None,
                     choices=par.all_values(par.Hypothesis))
    sea.add_argument('--exhaustive', action='store_true',
                     help='thm12: scan every a_1 = 1 array, not only the '
                     'step pattern candidates')
    sea.set_defaults(command=cmd_search)

    con = subs.add_parser('construct', parents=[common],
                          help='build and measure an explicit graph')
    con.add_argument('family', choices=par.all_values(par.Family))
    con.add_argument('params', type=int, nargs=2, metavar=('D', 'Q'),
                     help='diameter, then r (hermitian) or q (hamming)')
    con.add_argument('--verify', default=par.Verify.BASIC,
                     choices=par.all_values(par.Verify))
    con.add_argument('--export', default=None, metavar='PATH',
                     help='write the edge list here')
    con.set_defaults(command=cmd_construct)
    return prs


def cmd_analyze(args):
    """ analyze an array given as text or by name
    """
    arr = _array(args)
    return _report.build_report(arr, two_bounded=args.assume_2_bounded,
                                krein_full=args.krein_full,
                                m_bounded=args.m_bounded,
                                contains_gq=_contains_gq(args))


def cmd_classify(args):
    """ classification verdicts of an array
    """
    arr = _array(args)
    return _report.classify_report(arr, two_bounded=args.assume_2_bounded,
                                   m_bounded=args.m_bounded)


def cmd_search(args):
    """ bounded parameter search
    """
    hits = _search.search(args.max_k, args.max_d, a_1=args.a_1,
                          hypotheses=args.hypotheses,
                          exhaustive=args.exhaustive, jobs=args.jobs)
    return _report.search_report(hits, args.max_k, args.max_d,
                                 a_1=args.a_1, hypotheses=args.hypotheses,
                                 exhaustive=args.exhaustive)


def cmd_construct(args):
    """ build a graph, measure it and optionally verify it in full
    """
    d_max, q_val = args.params
    if args.family == par.Family.HERMITIAN:
        gra = fgeom.build_hermitian_dual_polar(d_max, q_val)
    else:
        gra = fgeom.build_hamming(d_max, q_val)

    if args.export:
        with open(args.export, 'w', encoding='utf-8') as fle:
            fle.write(fgeom.edge_list_string(gra))
        logging.info('wrote {} edges to {}'.format(
            gra.adjacency.nnz // 2, args.export))
    return _report.construct_report(gra, args.family, args.params,
                                    verify=args.verify)


def _add_array_arguments(prs):
    prs.add_argument('array', nargs='?', default=None,
                     help='intersection array, e.g. "10,8;1,5"')
    prs.add_argument('--name', default=None,
                     help='a catalogued array name, e.g. hermitian22')
    prs.add_argument('--assume-2-bounded', action='store_true',
                     help='assert that the graph is 2-bounded')
    prs.add_argument('--m-bounded', type=int, default=None, metavar='M',
                     help='assert that the graph is M-bounded')


def _contains_gq(args):
    """ 2-bounded with c_2 != 1 contains an induced GQ(a_1+1, c_2-1); the
        squeeze needs c_2 >= 2 anyway
    """
    return (args.assume_induced_gq or args.assume_2_bounded or
            (args.m_bounded is not None and args.m_bounded >= 2))


def _array(args):
    if (args.array is None) == (args.name is None):
        raise ArrayParseError('give exactly one of ARRAY and --name')
    if args.name is not None:
        try:
            return drg.from_string(catalog.array_string(args.name))
        except KeyError:
            raise ArrayParseError('unknown array name {!r}; known names: {}'
                                  .format(args.name, ', '.join(
                                      catalog.names())))
    return drg.from_string(args.array)
