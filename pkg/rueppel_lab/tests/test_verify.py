import unittest
from fractions import Fraction

import rueppel_lab.tests.utils as utils
import rueppel_lab.services.verify as verify_service
from rueppel_lab.exceptions import DepthInfeasible, UnknownCheck
from rueppel_lab.services.rings import B, RatFunc
from rueppel_lab.services.series import Sequence
from rueppel_lab.services.verify import (FAIL, INCONCLUSIVE, PASS,
                                         CheckReport,
                                         Evidence,
                                         same_value,
                                         sign_profile)


def suite():
    test_suite = unittest.TestSuite()
    test_suite.addTest(CheckReportTestCase('test_check_report_invariants'))
    test_suite.addTest(CheckReportTestCase('test_check_report_to_dict'))
    test_suite.addTest(EvidenceTestCase('test_evidence_first_counterexample'))
    test_suite.addTest(EvidenceTestCase('test_evidence_give_up'))
    test_suite.addTest(EvidenceTestCase('test_same_value'))
    test_suite.addTest(EvidenceTestCase('test_sign_profile'))
    test_suite.addTest(RegistryTestCase('test_resolve_check'))
    test_suite.addTest(RegistryTestCase('test_resolve_check_unknown'))
    test_suite.addTest(RegistryTestCase('test_run_check_depth_infeasible'))
    test_suite.addTest(RegistryTestCase('test_profile_depth'))
    test_suite.addTest(RunCheckTestCase('test_run_check_periodic'))
    test_suite.addTest(RunCheckTestCase('test_run_check_sign_alternation'))
    test_suite.addTest(RunCheckTestCase('test_run_check_shifted_runs'))
    test_suite.addTest(RunCheckTestCase('test_run_check_jacobi_product'))
    test_suite.addTest(RunCheckTestCase('test_run_check_catalog_fixtures'))
    test_suite.addTest(RunCheckTestCase('test_run_check_riordan_tail'))
    test_suite.addTest(RunCheckTestCase('test_run_check_square_root_difference'))
    test_suite.addTest(FaultInjectionTestCase('test_corrupted_fixture_fails_signed_runs'))
    test_suite.addTest(FaultInjectionTestCase('test_corrupted_fixture_fails_catalog'))
    test_suite.addTest(FaultInjectionTestCase('test_corrupted_fixture_fails_only_dependents'))
    test_suite.addTest(FaultInjectionTestCase('test_missing_fixture_is_inconclusive'))
    return test_suite


###########################
#        Unit Tests       #
###########################

class CheckReportTestCase(unittest.TestCase):
    """Tests for `services/verify.py - CheckReport`."""

    def test_check_report_invariants(self):
        """With inconsistent fields, is the report refused?"""

        self.assertRaises(ValueError, CheckReport, 'C1', 4, 5, PASS)
        self.assertRaises(ValueError, CheckReport, 'C1', 4, 4, FAIL)
        self.assertRaises(ValueError, CheckReport, 'C1', 4, 4, PASS, (1, 2, 3))
        self.assertRaises(ValueError, CheckReport, 'C1', 4, 4, 'maybe')
        self.assertTrue(CheckReport('C1', 4, 4, PASS).passed)

    def test_check_report_to_dict(self):
        """Are ring elements in the counterexample rendered as strings?"""

        report = CheckReport('C9-sbc', 8, 8, FAIL, (3, B, RatFunc(1, B)), ['note'])
        as_dict = report.to_dict()
        self.assertEqual(as_dict['first_counterexample'],
                         {'index': 3, 'expected': 'b', 'actual': '1/b'})
        self.assertEqual(as_dict['notes'], ['note'])
        self.assertEqual(as_dict['status'], FAIL)


class EvidenceTestCase(unittest.TestCase):
    """Tests for `services/verify.py - Evidence, same_value(), sign_profile()`."""

    def test_evidence_first_counterexample(self):
        """With two failed comparisons, is only the first kept?"""

        ev = Evidence('C0', 10)
        self.assertTrue(ev.expect_prefix('ok', [1, 2], [1, 2, 3]))
        self.assertFalse(ev.expect_prefix('first', [1, 2, 3], [1, 5, 3], start=4))
        self.assertFalse(ev.expect_each('second', range(3), lambda n: n, lambda n: -1))
        report = ev.report()
        self.assertEqual(report.status, FAIL)
        self.assertEqual(report.first_counterexample, (5, 2, 5))
        self.assertEqual(report.notes, ('first: first disagreement at 5',))

        short = Evidence('C0', 3)
        short.expect_prefix('too short', [1, 2], [1])
        self.assertEqual(short.report().first_counterexample, (1, 2, None))

    def test_evidence_give_up(self):
        """When the evidence stops early, is the report inconclusive at the reached depth?"""

        ev = Evidence('C0', 10)
        ev.give_up(7, 'no more terms')
        report = ev.report()
        self.assertEqual(report.status, INCONCLUSIVE)
        self.assertEqual(report.depth_reached, 6)
        self.assertEqual(report.notes, ('no more terms',))
        self.assertEqual(ev.n_max(), 10)
        self.assertEqual(ev.n_max(21), 20)

    def test_same_value(self):
        """Are values compared exactly across rings?"""

        self.assertTrue(same_value(Fraction(4, 2), 2))
        self.assertTrue(same_value(RatFunc(B * B, B), B))
        self.assertTrue(same_value(1 / B, RatFunc(1, B)))
        self.assertFalse(same_value(B, 1))

    def test_sign_profile(self):
        """Is the sign word recorded and the absolute match decided?"""

        profile = sign_profile(Sequence([1, -2, 0]), 'A000000', {0: 1, 1: 2, 2: 0})
        self.assertEqual(profile.word(), '+-0')
        self.assertTrue(profile.abs_match)
        self.assertFalse(sign_profile(Sequence([3]), 'A000000', {0: 1}).abs_match)


class RegistryTestCase(unittest.TestCase):
    """Tests for `services/verify.py - resolve_check(), run_check()`."""

    def test_resolve_check(self):
        """With an id, an alias or a lower-case alias, is the same check found?"""

        registered = verify_service.resolve_check('C3-periodic-1m1m10')
        self.assertEqual(verify_service.resolve_check('C3'), registered)
        self.assertEqual(verify_service.resolve_check('c3'), registered)
        self.assertEqual(verify_service.resolve_check('c3b').check_id, 'C3b-mod2-catalan')
        self.assertEqual(len(verify_service.registered_checks()), 22)

    def test_resolve_check_unknown(self):
        """With an unregistered id, is UnknownCheck raised?"""

        self.assertRaises(UnknownCheck, verify_service.resolve_check, 'C99')
        self.assertRaises(UnknownCheck, verify_service.run_check, 'C99', 4)

    def test_run_check_depth_infeasible(self):
        """With a depth beyond the check's ring bound, is DepthInfeasible raised?"""

        self.assertRaises(DepthInfeasible, verify_service.run_check, 'C9-hankel', 11)
        self.assertRaises(DepthInfeasible, verify_service.run_check, 'C3', 41)
        self.assertRaises(DepthInfeasible, verify_service.run_check, 'C3', -1)

    def test_profile_depth(self):
        """Do the profiles pick the quick, default and extended depths within the bound?"""

        registered = verify_service.resolve_check('C9-hankel')
        self.assertEqual(registered.profile_depth(verify_service.QUICK), 4)
        self.assertEqual(registered.profile_depth(verify_service.DEFAULT), 9)
        self.assertEqual(registered.profile_depth(verify_service.EXTENDED), 10)
        self.assertEqual(verify_service.resolve_check('AJ').profile_depth('default'), 12)


class RunCheckTestCase(unittest.TestCase):
    """Tests for `services/verify.py - run_check()` on proven statements."""

    def test_run_check_periodic(self):
        """Is Hankel(1 - x/r(x^2)) periodic to depth 40?"""

        report = verify_service.run_check('C3-periodic-1m1m10', 40)
        self.assertEqual(report.status, PASS)
        self.assertEqual(report.depth_reached, 40)

    def test_run_check_sign_alternation(self):
        """Do a_n and (-1)^n a_n share their Hankel transform to depth 40?"""

        self.assertEqual(verify_service.run_check('P1-sign-alternation', 40).status, PASS)

    def test_run_check_shifted_runs(self):
        """Does |Hankel(1 - x + x^2/(1 - x^2 r(x^2)))| follow A005811(n-1) to depth 24?"""

        self.assertEqual(verify_service.run_check('C6-A005811-shift', 24).status, PASS)

    def test_run_check_jacobi_product(self):
        """Do random J-fractions satisfy the beta product formula?"""

        self.assertEqual(verify_service.run_check('AJ', 8).status, PASS)

    def test_run_check_catalog_fixtures(self):
        """Does every catalog sequence match its shipped fixture?"""

        self.assertEqual(verify_service.run_check('RCAT').status, PASS)

    def test_run_check_riordan_tail(self):
        """Is the tail array of r_b the Riordan array (r(x^2), -x r(x^2)) at depths 32 and 40?"""

        for depth in (32, 40):
            report = verify_service.run_check('P2-riordan', depth)
            self.assertEqual(report.status, PASS)
            self.assertEqual(report.depth_reached, depth)
            self.assertIsNone(report.first_counterexample)

    def test_run_check_square_root_difference(self):
        """Does the difference check pass in absolute value and note where the literal radicand is negative?"""

        report = verify_service.run_check('C10-sqrt-diff', 8)
        self.assertEqual(report.status, PASS)
        literal = [note for note in report.notes if note.startswith('Rueppel: literal radicand')]
        self.assertEqual(len(literal), 1)
        self.assertRegex(literal[0], r'is negative at 2[,;]')
        self.assertTrue(literal[0].endswith('compared in absolute value'))


class FaultInjectionTestCase(unittest.TestCase):
    """Tests for `services/verify.py - run_check()` against corrupted fixtures."""

    def test_corrupted_fixture_fails_signed_runs(self):
        """With A005811(5) corrupted, does C5 fail at n = 4?"""

        with utils.fixture_copy() as directory:
            utils.corrupt_fixture(directory, 'A005811', 5)
            report = verify_service.run_check('C5', 24)
        self.assertEqual(report.status, FAIL)
        self.assertEqual(report.first_counterexample[0], 4)

    def test_corrupted_fixture_fails_catalog(self):
        """With A005811(5) corrupted, does the catalog check fail at index 5?"""

        with utils.fixture_copy() as directory:
            utils.corrupt_fixture(directory, 'A005811', 5)
            report = verify_service.run_check('RCAT')
        self.assertEqual(report.status, FAIL)
        self.assertEqual(report.first_counterexample[0], 5)
        self.assertIn('A005811 against its fixture: first disagreement at 5', report.notes)

    def test_corrupted_fixture_fails_only_dependents(self):
        """With A005811(5) corrupted, do exactly the checks reading A005811 fail?"""

        with utils.fixture_copy() as directory:
            utils.corrupt_fixture(directory, 'A005811', 5)
            reports = verify_service.run_all(verify_service.QUICK)
        failed = set(report.check_id for report in reports if report.status == FAIL)
        self.assertEqual(failed, {'C5-A005811-signed', 'C6-A005811-shift', 'R-catalog-fixtures'})
        by_id = dict((report.check_id, report) for report in reports)
        for check_id in ('C3-periodic-1m1m10', 'P1-sign-alternation', 'A-jacobi-product',
                         'C11-product', 'R-regressions'):
            self.assertEqual(by_id[check_id].status, PASS)

    def test_missing_fixture_is_inconclusive(self):
        """With the A005811 fixture removed, does C5 stop without failing?"""

        import os

        with utils.fixture_copy() as directory:
            os.remove(os.path.join(directory, 'A005811.txt'))
            report = verify_service.run_check('C5', 24)
        self.assertEqual(report.status, INCONCLUSIVE)
        self.assertIsNone(report.first_counterexample)


if __name__ == '__main__':
    unittest.main()
