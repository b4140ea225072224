"""
The verify subcommand: runs one registered check or all of them.
"""
from rueppel_lab.cli.utils import reports_record
from rueppel_lab.config import Config
from rueppel_lab.exceptions import VerificationFailure
from rueppel_lab.services.verify import FAIL, resolve_check, run_all, run_check, summarize


def register(subparsers, parents):
    parser = subparsers.add_parser('verify', parents=parents,
                                   help='run registered checks')
    parser.add_argument('target', nargs='?', default='all', help="check id, alias or 'all'")
    parser.add_argument('-d', '--depth', type=int, default=None,
                        help='depth (default from --depth-profile)')
    parser.set_defaults(handler=verify)


def verify(args):
    """
    Runs the target at the requested depth.

    :return: reports record; a failing check raises VerificationFailure carrying it
    """
    if args.target.lower() == 'all':
        profile = args.depth_profile if args.depth is None else args.depth
        reports = run_all(profile, jobs=Config.JOBS)
    else:
        registered = resolve_check(args.target)
        depth = args.depth
        if depth is None:
            depth = registered.profile_depth(args.depth_profile)
        reports = [run_check(registered.check_id, depth)]

    summary = summarize(reports)
    record = reports_record('verify', {'target': args.target, 'depth': args.depth,
                                       'depth_profile': args.depth_profile}, reports, summary)
    if summary[FAIL]:
        failed = [report.check_id for report in reports if report.status == FAIL]
        raise VerificationFailure('%d check(s) failed: %s' % (len(failed), ', '.join(failed)),
                                  report=record)
    return record
