"""
A module containing utilities that are helpful within the command line
context: output records, their renderers and error composition. This may
depend on parsed arguments, but never does any mathematics itself.
"""
import csv
import io
import json

from rueppel_lab.exceptions import UsageException
from rueppel_lab.services.oeis import render_bfile
from rueppel_lab.services.rings import INT, POLY, RAT, format_value
from rueppel_lab.services.series import Sequence

SCHEMA = 'rueppel-lab/1'

PLAIN = 'plain'
JSON = 'json'
CSV = 'csv'
BFILE = 'bfile'
FORMATS = (PLAIN, JSON, CSV, BFILE)

SEQUENCE = 'sequence'
FRACTION = 'cfrac'
MATRIX = 'matrix'
REPORTS = 'reports'
COMPARISON = 'comparison'

###########################
#     Output records      #
###########################


def _jsonable(value):
    """Integers stay numbers, every other ring element becomes its string form."""
    if isinstance(value, int) and not isinstance(value, bool):
        return value
    return format_value(value)


def _record(command, parameters, kind, result):
    return {
        'schema': SCHEMA,
        'command': command,
        'parameters': dict(parameters),
        'kind': kind,
        'result': result,
    }


def sequence_record(command, parameters, sequence):
    """
    :param sequence:    Sequence, Series or HankelTransform values
    """
    offset = getattr(sequence, 'offset', 0)
    return _record(command, parameters, SEQUENCE,
                   {'offset': offset, 'terms': [_jsonable(v) for v in sequence]})


def fraction_record(command, parameters, fraction, kind):
    result = {
        'type': kind,
        'a0': _jsonable(fraction.a0),
        'alphas': [_jsonable(v) for v in fraction.alphas],
    }
    if kind == 's':
        result['terminated'] = fraction.terminated
    else:
        result['betas'] = [_jsonable(v) for v in fraction.betas]
        result['terminated_at'] = fraction.terminated_at
    return _record(command, parameters, FRACTION, result)


def matrix_record(command, parameters, rows):
    return _record(command, parameters, MATRIX,
                   {'rows': [[_jsonable(v) for v in row] for row in rows]})


def reports_record(command, parameters, reports, summary):
    return _record(command, parameters, REPORTS,
                   {'reports': [report.to_dict() for report in reports],
                    'summary': dict(summary)})


def comparison_record(command, parameters, comparison):
    return _record(command, parameters, COMPARISON, comparison.to_dict())


###########################
#        Renderers        #
###########################


def _plain_report(report):
    lines = ['%s: %s (depth %d of %d)' % (report['check_id'], report['status'],
                                          report['depth_reached'], report['depth_requested'])]
    counterexample = report['first_counterexample']
    if counterexample is not None:
        lines.append('  first counterexample at %s: expected %s, got %s'
                     % (counterexample['index'], counterexample['expected'],
                        counterexample['actual']))
    lines.extend('  note: %s' % note for note in report['notes'])
    return lines


def render_plain(record):
    kind, result = record['kind'], record['result']
    if kind == SEQUENCE:
        return ', '.join(str(v) for v in result['terms'])
    if kind == FRACTION:
        lines = ['a0: %s' % result['a0'],
                 'alphas: %s' % ', '.join(str(v) for v in result['alphas'])]
        if result['type'] == 'j':
            lines.append('betas: %s' % ', '.join(str(v) for v in result['betas']))
            if result['terminated_at'] is not None:
                lines.append('terminates at beta %d' % result['terminated_at'])
        elif result['terminated']:
            lines.append('finite S-fraction')
        return '\n'.join(lines)
    if kind == MATRIX:
        return '\n'.join(' '.join(str(v) for v in row) for row in result['rows'])
    if kind == REPORTS:
        lines = []
        for report in result['reports']:
            lines.extend(_plain_report(report))
        summary = result['summary']
        lines.append('total %d: %d pass, %d fail, %d inconclusive'
                     % (summary['total'], summary['pass'], summary['fail'],
                        summary['inconclusive']))
        return '\n'.join(lines)
    if result['matched']:
        return '%s: matched over %d..%d (%d terms)' % (result['seq_id'], result['overlap'][0],
                                                       result['overlap'][1], result['compared'])
    index, expected, actual = result['first_mismatch']
    return '%s: first mismatch at %d: expected %s, got %s' % (result['seq_id'], index,
                                                             expected, actual)


def render_json(record):
    return json.dumps(record, indent=2)


def render_csv(record):
    kind, result = record['kind'], record['result']
    out = io.StringIO()
    writer = csv.writer(out, lineterminator='\n')
    if kind == SEQUENCE:
        writer.writerow(['index', 'value'])
        for n, value in enumerate(result['terms'], start=result['offset']):
            writer.writerow([n, value])
    elif kind == FRACTION:
        writer.writerow(['parameter', 'index', 'value'])
        writer.writerow(['a0', 0, result['a0']])
        start = 1 if result['type'] == 's' else 0
        for k, value in enumerate(result['alphas'], start=start):
            writer.writerow(['alpha', k, value])
        for k, value in enumerate(result.get('betas', ()), start=1):
            writer.writerow(['beta', k, value])
    elif kind == MATRIX:
        writer.writerows(result['rows'])
    elif kind == REPORTS:
        writer.writerow(['check_id', 'status', 'depth_requested', 'depth_reached',
                         'index', 'expected', 'actual'])
        for report in result['reports']:
            counterexample = report['first_counterexample'] or {}
            writer.writerow([report['check_id'], report['status'], report['depth_requested'],
                             report['depth_reached'], counterexample.get('index'),
                             counterexample.get('expected'), counterexample.get('actual')])
    else:
        mismatch = result['first_mismatch'] or [None, None, None]
        writer.writerow(['seq_id', 'offset_shift', 'first_index', 'last_index', 'compared',
                         'matched', 'mismatch_index', 'expected', 'actual'])
        writer.writerow([result['seq_id'], result['offset_shift'], result['overlap'][0],
                         result['overlap'][1], result['compared'], result['matched']]
                        + list(mismatch))
    return out.getvalue().rstrip('\n')


def render_bfile_output(record):
    result = record['result']
    if record['kind'] != SEQUENCE or not all(isinstance(v, int) for v in result['terms']):
        raise UsageException('b-file output needs an integer sequence',
                             user_details='Use --format plain, json or csv for this result.')
    seq_id = record['parameters'].get('seq_id', '')
    sequence = Sequence(result['terms'], result['offset'])
    return render_bfile(sequence, seq_id, comments=['rueppel-lab %s' % record['command']])


RENDERERS = {
    PLAIN: render_plain,
    JSON: render_json,
    CSV: render_csv,
    BFILE: render_bfile_output,
}


def render(record, output_format=PLAIN):
    """
    Renders an output record as text for standard output.

    :param record:          Record built by one of the *_record helpers
    :param output_format:   plain, json, csv or bfile
    :return:                The rendered text
    """
    try:
        renderer = RENDERERS[output_format]
    except KeyError:
        raise UsageException('Unknown output format %s' % output_format)
    return renderer(record).rstrip('\n')


###########################
#   Input and error utils #
###########################


RING_NAMES = {'int': INT, 'rat': RAT, 'poly-bc': POLY}


def apply_ring(series, ring_name):
    """
    Coerces a series into the ring chosen with --ring; RingMismatch when it does not fit.
    """
    if ring_name is None:
        return series
    return series.coerce(RING_NAMES[ring_name])


def check_null_input(*fields):
    """
    Checks a list of params and raises a UsageException if None

    :param fields:  List of (param, error) tuples to check for null values
    """
    for field in fields:
        if field[0] is None:
            raise UsageException('You must specify a %s' % field[1])


def compose_error(exc, e):
    """
    Composes an error to report after a LabException is raised

    :param exc:     Exception carrying the exit code
    :param e:       Raised exception
    :return:        A dict with the code, message and any user details
    """
    return_error = dict(code=exc.exit_code,
                        message=exc.message)

    if hasattr(e, 'user_details') and e.user_details is not None \
            and e.user_details != exc.message:
        return_error['user_details'] = e.user_details

    return return_error
