"""
High level utilities, can be used by any of the layers (service, interface)
and should not have any dependency on argparse or the command line context.
"""
import os
import re
import tempfile
import logging
from multiprocessing import Pool

try:
    import tomllib
except ImportError:
    import tomli as tomllib

from rueppel_lab.config import Config
from rueppel_lab.exceptions import ConfigurationException, UnknownSequence

logger = logging.getLogger(__name__)

A_NUMBER = re.compile(r'^A(\d{6})$')


def async_helper(args):
    """
    Calls the passed in function with the input arguments. Used to mitigate
    calling different functions during multiprocessing

    :param args:    Function and its arguments
    :return:        Result of the called function
    """

    return args[0](*args[1:])


def map_jobs(calls, jobs=1):
    """
    Evaluates a list of (function, *args) tuples, in a process pool when
    more than one job is allowed.

    :param calls:   List of tuples accepted by async_helper
    :param jobs:    Maximum number of worker processes
    :return:        Results in the order of the calls
    """

    calls = list(calls)
    if jobs is None or jobs <= 1 or len(calls) <= 1:
        return [async_helper(call) for call in calls]

    logger.debug('Dispatching %d calls to %d workers', len(calls), jobs)
    with Pool(processes=min(jobs, len(calls))) as pool:
        return pool.map(async_helper, calls)


def atomic_write(file_path, text):
    """
    Writes text to a file so that readers see either the old content or the
    complete new content.

    :param file_path:   Destination path
    :param text:        Full file content
    """

    directory = os.path.dirname(os.path.abspath(file_path))
    os.makedirs(directory, exist_ok=True)
    fd, tmp_path = tempfile.mkstemp(dir=directory, prefix='.tmp-', suffix='.txt')
    try:
        with os.fdopen(fd, 'w', encoding='ascii') as f:
            f.write(text)
            f.flush()
            os.fsync(f.fileno())
        os.replace(tmp_path, file_path)
    except Exception:
        if os.path.exists(tmp_path):
            os.unlink(tmp_path)
        raise


def get_oeis_url(seq_id):
    """
    Retrieves the b-file URL of an OEIS sequence based on the configured endpoint.

    :param seq_id:  A-number such as 'A000108'
    :return:        The b-file endpoint for the sequence
    """

    match = A_NUMBER.match(seq_id)
    if match is None:
        raise UnknownSequence(seq_id, user_details='Expected an A-number like A000108.')
    return '%s/%s/b%s.txt' % (Config.OEIS_BASE_URL.rstrip('/'), seq_id, match.group(1))


def load_config_file(file_path, target=Config):
    """
    Reads `key = value` lines from a toml file onto the Config class. Keys are
    the lower-case Config attribute names.

    :param file_path:   Path of the configuration file
    :param target:      Class receiving the values
    :return:            Dict of the applied settings
    """

    try:
        with open(file_path, 'rb') as f:
            data = tomllib.load(f)
    except (OSError, tomllib.TOMLDecodeError) as e:
        raise ConfigurationException('Unable to read configuration file %s' % file_path,
                                     internal_details=str(e))

    applied = {}
    for key, value in data.items():
        attribute = key.upper()
        if attribute.startswith('_') or not hasattr(target, attribute):
            raise ConfigurationException('Unknown configuration key %s' % key)
        current = getattr(target, attribute)
        try:
            if isinstance(current, bool):
                value = value if isinstance(value, bool) else str(value).lower() in ('1', 'true')
            elif current is not None:
                value = type(current)(value)
        except (TypeError, ValueError) as e:
            raise ConfigurationException('Bad value for configuration key %s' % key,
                                         internal_details=str(e))
        setattr(target, attribute, value)
        applied[attribute] = value

    logger.debug('Loaded %d settings from %s', len(applied), file_path)
    return applied
