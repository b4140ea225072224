import unittest

import rueppel_lab.services.verify as verify_service
from rueppel_lab.services.verify import EXTENDED, FAIL, INCONCLUSIVE, PASS, QUICK

ACCEPTANCE_DEPTH = 32
ACCEPTANCE_CHECKS = ('C1', 'C2', 'C3', 'C3b', 'C4', 'C5', 'C6', 'C7', 'C8', 'C10', 'C11')


def suite():
    test_suite = unittest.TestSuite()
    test_suite.addTest(RunAllTestCase('test_run_all_quick'))
    test_suite.addTest(RunAllTestCase('test_run_all_parallel'))
    test_suite.addTest(RunAllTestCase('test_run_all_extended'))
    test_suite.addTest(RunAllTestCase('test_acceptance_depths'))
    test_suite.addTest(RunAllTestCase('test_run_all_clamped_depth'))
    test_suite.addTest(RunAllTestCase('test_run_all_invalid_profile'))
    return test_suite


###########################
#    Integration Tests    #
###########################

class RunAllTestCase(unittest.TestCase):
    """Tests for `services/verify.py - run_all(), summarize()`."""

    def test_run_all_quick(self):
        """With the quick profile, does every check report, in registry order, without failing?"""

        reports = verify_service.run_all(QUICK)
        registered = verify_service.registered_checks()
        self.assertEqual([report.check_id for report in reports],
                         [check.check_id for check in registered])

        totals = verify_service.summarize(reports)
        self.assertEqual(totals['total'], len(registered))
        self.assertEqual(totals[FAIL], 0)
        self.assertEqual(totals[PASS] + totals[INCONCLUSIVE], totals['total'])
        self.assertEqual(list(totals), ['total', PASS, FAIL, INCONCLUSIVE])

    def test_run_all_parallel(self):
        """With two jobs, are the same reports returned as with one?"""

        serial = verify_service.run_all(QUICK, jobs=1)
        parallel = verify_service.run_all(QUICK, jobs=2)
        self.assertEqual([(r.check_id, r.status, r.depth_reached) for r in serial],
                         [(r.check_id, r.status, r.depth_reached) for r in parallel])

    def test_run_all_extended(self):
        """With the extended profile, does every check run to its extended depth without failing?"""

        reports = verify_service.run_all(EXTENDED)
        totals = verify_service.summarize(reports)
        self.assertEqual(totals[FAIL], 0, [(r.check_id, r.first_counterexample) for r in reports
                                           if r.status == FAIL])
        by_id = dict((report.check_id, report) for report in reports)
        self.assertEqual(by_id['C9-sbc'].depth_requested, 64)
        self.assertEqual(by_id['C9-hankel'].depth_requested, 10)
        self.assertEqual(by_id['P2-riordan'].depth_requested, 32)

    def test_acceptance_depths(self):
        """Do the integer conjectures pass to Hankel order 32, and the r_{b,c} pattern to depth 64?"""

        for check_id in ACCEPTANCE_CHECKS:
            report = verify_service.run_check(check_id, ACCEPTANCE_DEPTH)
            self.assertEqual(report.status, PASS, (check_id, report.first_counterexample))
            self.assertEqual(report.depth_reached, ACCEPTANCE_DEPTH)

        report = verify_service.run_check('C9-sbc', 64)
        self.assertEqual(report.status, PASS, report.first_counterexample)
        self.assertEqual(report.depth_reached, 64)

    def test_run_all_clamped_depth(self):
        """With one depth for every check, is it clamped to each check's bound?"""

        reports = verify_service.run_all(12)
        for report in reports:
            limit = verify_service.resolve_check(report.check_id).depth_limit()
            self.assertEqual(report.depth_requested, min(12, limit))
        by_id = dict((report.check_id, report) for report in reports)
        self.assertEqual(by_id['C9-hankel'].depth_requested, 10)
        self.assertEqual(by_id['C3-periodic-1m1m10'].depth_requested, 12)

    def test_run_all_invalid_profile(self):
        """With an unknown profile name, is a ValueError raised?"""

        self.assertRaises(ValueError, verify_service.run_all, 'thorough')


if __name__ == '__main__':
    unittest.main()
