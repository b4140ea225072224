import os
import shutil
import tempfile
import unittest
from operator import add, mul

import rueppel_lab.utils as lab_utils
from rueppel_lab.config import Config
from rueppel_lab.exceptions import ConfigurationException, UnknownSequence


def suite():
    test_suite = unittest.TestSuite()
    test_suite.addTest(UtilsTestCase('test_async_helper'))
    test_suite.addTest(UtilsTestCase('test_map_jobs'))
    test_suite.addTest(UtilsTestCase('test_atomic_write'))
    test_suite.addTest(UtilsTestCase('test_get_oeis_url'))
    test_suite.addTest(LoadConfigTestCase('test_load_config_file_success'))
    test_suite.addTest(LoadConfigTestCase('test_load_config_file_invalid_input'))
    return test_suite


class Settings(object):

    SERIES_ORDER = 64
    JOBS = 1
    OEIS_OFFLINE = False
    OEIS_TIMEOUT = 30.0
    LOG_LEVEL = 'WARNING'


###########################
#        Unit Tests       #
###########################

class UtilsTestCase(unittest.TestCase):
    """Tests for `utils.py`."""

    def test_async_helper(self):
        """Is the function called with the remaining tuple items?"""

        self.assertEqual(lab_utils.async_helper((add, 2, 3)), 5)

    def test_map_jobs(self):
        """With one or two jobs, are the results returned in call order?"""

        calls = [(mul, n, n) for n in range(6)]
        expected = [0, 1, 4, 9, 16, 25]
        self.assertEqual(lab_utils.map_jobs(calls), expected)
        self.assertEqual(lab_utils.map_jobs(calls, jobs=2), expected)
        self.assertEqual(lab_utils.map_jobs([], jobs=2), [])

    def test_atomic_write(self):
        """Is the file replaced in full, with no temporary file left behind?"""

        directory = tempfile.mkdtemp()
        try:
            file_path = os.path.join(directory, 'nested', 'b000108.txt')
            lab_utils.atomic_write(file_path, '0 1\n')
            lab_utils.atomic_write(file_path, '0 1\n1 1\n')
            with open(file_path) as f:
                self.assertEqual(f.read(), '0 1\n1 1\n')
            self.assertEqual(os.listdir(os.path.dirname(file_path)), ['b000108.txt'])
        finally:
            shutil.rmtree(directory)

    def test_get_oeis_url(self):
        """Is the b-file URL built from the configured endpoint?"""

        original = Config.OEIS_BASE_URL
        Config.OEIS_BASE_URL = 'https://oeis.example/'
        try:
            self.assertEqual(lab_utils.get_oeis_url('A005811'),
                             'https://oeis.example/A005811/b005811.txt')
        finally:
            Config.OEIS_BASE_URL = original
        self.assertRaises(UnknownSequence, lab_utils.get_oeis_url, 'A5811')


class LoadConfigTestCase(unittest.TestCase):
    """Tests for `utils.py - load_config_file()`."""

    def setUp(self):
        self.directory = tempfile.mkdtemp()

    def tearDown(self):
        shutil.rmtree(self.directory)

    def _write(self, text):
        file_path = os.path.join(self.directory, 'rueppel-lab.toml')
        with open(file_path, 'w') as f:
            f.write(text)
        return file_path

    def test_load_config_file_success(self):
        """Are known keys applied with the type of the current value?"""

        class Target(Settings):
            pass

        file_path = self._write('series_order = 32\njobs = "4"\noeis_offline = true\n'
                                'oeis_timeout = 5\nlog_level = "DEBUG"\n')
        applied = lab_utils.load_config_file(file_path, target=Target)
        self.assertEqual(Target.SERIES_ORDER, 32)
        self.assertEqual(Target.JOBS, 4)
        self.assertIs(Target.OEIS_OFFLINE, True)
        self.assertEqual(Target.OEIS_TIMEOUT, 5.0)
        self.assertIsInstance(Target.OEIS_TIMEOUT, float)
        self.assertEqual(applied['LOG_LEVEL'], 'DEBUG')
        self.assertEqual(Settings.SERIES_ORDER, 64)

    def test_load_config_file_invalid_input(self):
        """With unknown keys, bad values, bad toml or no file, is ConfigurationException raised?"""

        class Target(Settings):
            pass

        for text in ('no_such_setting = 1\n', 'series_order = "many"\n', 'jobs = [1, 2\n'):
            self.assertRaises(ConfigurationException, lab_utils.load_config_file,
                              self._write(text), Target)
        self.assertRaises(ConfigurationException, lab_utils.load_config_file,
                          os.path.join(self.directory, 'missing.toml'), Target)


if __name__ == '__main__':
    unittest.main()
