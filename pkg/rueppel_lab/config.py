from os import environ as env
from os import path


def _flag(value):
    return str(value).strip().lower() in ('1', 'true', 'yes', 'on')


class Config(object):

    ENVIRONMENT = env.get('RUEPPEL_LAB_ENV', 'DEV').upper()

    SERIES_ORDER = int(env.get('RUEPPEL_LAB_SERIES_ORDER', 64))
    HANKEL_DEPTH_INT = int(env.get('RUEPPEL_LAB_HANKEL_DEPTH_INT', 40))
    HANKEL_DEPTH_POLY = int(env.get('RUEPPEL_LAB_HANKEL_DEPTH_POLY', 10))
    CFRAC_DEPTH_POLY = int(env.get('RUEPPEL_LAB_CFRAC_DEPTH_POLY', 64))
    DEGREE_BOUND = int(env.get('RUEPPEL_LAB_DEGREE_BOUND', 64))
    JOBS = int(env.get('RUEPPEL_LAB_JOBS', 1))
    LOG_LEVEL = env.get('RUEPPEL_LAB_LOG_LEVEL', 'WARNING').upper()

    OEIS_BASE_URL = env.get('OEIS_BASE_URL', 'https://oeis.org')
    OEIS_CACHE_DIR = env.get('OEIS_CACHE_DIR',
                             path.join(path.expanduser('~'), '.cache', 'rueppel-lab'))
    OEIS_OFFLINE = _flag(env.get('OEIS_OFFLINE', 'false'))
    OEIS_TIMEOUT = float(env.get('OEIS_TIMEOUT', 30))

    FIXTURE_DIR = env.get('RUEPPEL_LAB_FIXTURE_DIR',
                          path.join(path.dirname(path.abspath(__file__)), 'fixtures'))

    CONFIG_FILE = 'rueppel-lab.toml'
