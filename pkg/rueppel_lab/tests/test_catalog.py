import unittest

from rueppel_lab.exceptions import UnknownSequence
from rueppel_lab.services.catalog import (CATALOG,
                                          a088748_terms,
                                          a062050_closed_form,
                                          binary_runs,
                                          calibrate_index_shift,
                                          calibrated_closed_forms,
                                          catalog_terms,
                                          cross_check,
                                          get_entry,
                                          josephus_closed_form,
                                          josephus_pipeline,
                                          motzkin_terms,
                                          paperfold,
                                          printed_mismatch)
from rueppel_lab.services.series import Sequence


def suite():
    test_suite = unittest.TestSuite()
    test_suite.addTest(DigitUtilitiesTestCase('test_binary_runs'))
    test_suite.addTest(DigitUtilitiesTestCase('test_paperfold'))
    test_suite.addTest(CatalogTermsTestCase('test_catalog_terms_success'))
    test_suite.addTest(CatalogTermsTestCase('test_catalog_terms_invalid_input'))
    test_suite.addTest(CatalogTermsTestCase('test_catalog_printed_prefixes'))
    test_suite.addTest(CatalogTermsTestCase('test_catalog_cross_check'))
    test_suite.addTest(CatalogTermsTestCase('test_a088748_second_derivation'))
    test_suite.addTest(JosephusTestCase('test_josephus_pipeline'))
    test_suite.addTest(JosephusTestCase('test_josephus_pipeline_invalid_input'))
    test_suite.addTest(JosephusTestCase('test_calibrated_closed_forms'))
    return test_suite


###########################
#        Unit Tests       #
###########################

class DigitUtilitiesTestCase(unittest.TestCase):
    """Tests for `services/catalog.py - binary_runs(), paperfold()`."""

    def test_binary_runs(self):
        """Are runs, runs of ones and alternations counted?"""

        self.assertEqual(binary_runs(0), (0, 0, 0))
        self.assertEqual(binary_runs(1), (1, 1, 0))
        runs = binary_runs(0b1101)
        self.assertEqual(runs.total_runs, 3)
        self.assertEqual(runs.runs_of_ones, 2)
        self.assertEqual(runs.digit_alternations, 2)
        self.assertRaises(ValueError, binary_runs, -1)

    def test_paperfold(self):
        """Is the regular paper-folding sequence produced?"""

        self.assertEqual([paperfold(n) for n in range(15)],
                         [1, 1, 0, 1, 1, 0, 0, 1, 1, 1, 0, 0, 1, 0, 0])


class CatalogTermsTestCase(unittest.TestCase):
    """Tests for `services/catalog.py - catalog_terms(), cross_check(), printed_mismatch()`."""

    def test_catalog_terms_success(self):
        """With a known A-number, are the terms returned at the entry's offset?"""

        runs = catalog_terms('A005811', 13)
        self.assertEqual(runs.to_list(), [0, 1, 2, 1, 2, 3, 2, 1, 2, 3, 4, 3, 2])
        self.assertEqual(runs.offset, 0)

        alternations = catalog_terms('A037834', 4)
        self.assertEqual(alternations.offset, 1)
        self.assertEqual(alternations.to_list(), [0, 1, 0, 1])

        self.assertEqual(get_entry('a000108').seq_id, 'A000108')
        self.assertEqual(get_entry('A000108').terms(6), Sequence([1, 1, 2, 5, 14, 42]))
        self.assertEqual(motzkin_terms(6).to_list(), [1, 1, 2, 4, 9, 21])

    def test_catalog_terms_invalid_input(self):
        """With an unknown A-number or a negative count, is an error raised?"""

        self.assertRaises(UnknownSequence, catalog_terms, 'A999999', 4)
        self.assertRaises(UnknownSequence, get_entry, None)
        self.assertRaises(ValueError, catalog_terms, 'A000108', -1)

    def test_catalog_printed_prefixes(self):
        """Does every entry reproduce its reference prefix?"""

        for seq_id in CATALOG:
            self.assertIsNone(printed_mismatch(seq_id), seq_id)

    def test_catalog_cross_check(self):
        """Does every primary generator agree with its second derivation?"""

        for seq_id in CATALOG:
            self.assertIsNone(cross_check(seq_id, 32), seq_id)

    def test_a088748_second_derivation(self):
        """Do the paper-folding recurrence and the catalog rule give the same A088748 terms?"""

        self.assertEqual(a088748_terms(8).to_list(), [1, 2, 3, 2, 3, 4, 3, 2])
        self.assertEqual(a088748_terms(0).to_list(), [])
        self.assertEqual(get_entry('A088748').oracle_terms(64), catalog_terms('A088748', 64))


class JosephusTestCase(unittest.TestCase):
    """Tests for `services/catalog.py - josephus_pipeline(), calibrated_closed_forms()`."""

    def test_josephus_pipeline(self):
        """Do the partial sums lead from the Rueppel complement to the Josephus numbers?"""

        N = 32
        pipeline = josephus_pipeline(N)
        self.assertEqual(pipeline.marked.to_list()[:8], [1, 0, 1, -1, 1, 1, 1, -3])
        self.assertEqual(pipeline.doubled.to_list()[:8], [1, 0, 2, -2, 2, 2, 2, -6])
        self.assertEqual(pipeline.partial1.to_list(), catalog_terms('A062050', N).to_list())
        self.assertEqual(pipeline.partial2.to_list(),
                         catalog_terms('A006257', N + 1).to_list()[1:])

    def test_josephus_pipeline_invalid_input(self):
        """With fewer than four terms, is a ValueError raised?"""

        self.assertRaises(ValueError, josephus_pipeline, 3)

    def test_calibrated_closed_forms(self):
        """Do the calibrated shifts make the closed forms reproduce the prefixes?"""

        shifts = calibrated_closed_forms()
        self.assertEqual(list(shifts), ['A006257', 'A062050'])
        for seq_id, formula in (('A006257', josephus_closed_form),
                                ('A062050', a062050_closed_form)):
            printed = get_entry(seq_id).printed
            shift = shifts[seq_id]
            self.assertTrue(all(formula(k + shift) == printed[k]
                                for k in range(len(printed)) if k + shift >= 0))

        self.assertEqual(calibrate_index_shift([5, 6, 7], lambda n: n + 4), 1)
        self.assertIsNone(calibrate_index_shift([5, 6, 7], lambda n: 0))


if __name__ == '__main__':
    unittest.main()
