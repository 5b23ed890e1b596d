import os
import random
import unittest
from unittest import mock
from pathlib import Path

import gmpy2

from gentino.fs.csv import CSVTableStorage
from gentino.hecm import (JOURNAL_FIELDS, Exhausted, FactorResult, HecmFactorizer, HecmParams, TrialOutcome, factor,
                          perfect_power_root, trial_division)

CSV_FILE = 'test_hecm_journal.csv'


class TestScreens(unittest.TestCase):

    def test_trial_division(self):
        self.assertEqual(trial_division(91), 7)
        self.assertEqual(trial_division(2 * 10007), 2)
        self.assertIsNone(trial_division(10007))
        self.assertIsNone(trial_division(10007 * 10009))

    def test_perfect_power(self):
        self.assertEqual(perfect_power_root(10007 ** 2), (10007, 2))
        self.assertEqual(perfect_power_root(2 ** 10), (2, 10))
        self.assertEqual(perfect_power_root(10007 ** 3 * 10009 ** 3), (10007 * 10009, 3))
        self.assertIsNone(perfect_power_root(10007 * 10009))

    def test_screen_results(self):
        result = factor(6)
        self.assertEqual(result.factor, 2)
        self.assertEqual(result.stage, 0)
        self.assertIsNone(result.trial_index)
        self.assertEqual(factor(91).factor, 7)
        self.assertEqual(factor(10007 ** 2).factor, 10007)


class TestFactor(unittest.TestCase):

    def tearDown(self):
        if Path(CSV_FILE).exists():
            os.remove(CSV_FILE)

    def test_prime(self):
        with self.assertRaises(Exhausted) as ctx:
            factor(1000003)
        self.assertEqual(ctx.exception.n, 1000003)
        self.assertEqual(ctx.exception.trials, 0)

    def test_invalid_n(self):
        with self.assertRaises(ValueError):
            factor(3)
        with self.assertRaises(ValueError):
            factor("ninety-one")

    def test_split_jacobian_trials(self):
        # B1 is above the Hasse bound for 10007, so every trial kills the point modulo 10007
        p, q = 10007, 1000000007
        params = HecmParams(b1=10300, max_trials=5, seed=1)
        result = factor(p * q, params)
        print(f"[test_split_jacobian_trials] {result}")
        self.assertIn(result.factor, (p, q))
        self.assertIn(result.stage, (1, 2))
        self.assertIsNotNone(result.trial_index)
        threaded = factor(p * q, HecmParams(b1=10300, max_trials=5, seed=1, threads=2))
        self.assertEqual((threaded.factor, threaded.trial_index), (result.factor, result.trial_index))

    def test_semiprimes_with_small_b1(self):
        # 21-bit p against 41-bit q, with B1 far below p
        rng = random.Random(2021)
        params = HecmParams(b1=2000, b2=200000, max_trials=20)
        found = exhausted = 0
        for _ in range(20):
            p = int(gmpy2.next_prime(rng.randrange(2 ** 20, 2 ** 21 - 200)))
            q = int(gmpy2.next_prime(rng.randrange(2 ** 40, 2 ** 41 - 200)))
            try:
                result = factor(p * q, params)
            except Exhausted as error:
                self.assertEqual(error.trials, 20)
                exhausted += 1
                continue
            self.assertIn(result.factor, (p, q))
            self.assertIn(result.stage, (1, 2))
            found += 1
        print(f"[test_semiprimes_with_small_b1] found {found}, exhausted {exhausted}")
        self.assertEqual(found + exhausted, 20)
        self.assertGreaterEqual(found, 15)

    def test_trial_is_reproducible(self):
        factorizer = HecmFactorizer(HecmParams(b1=200, b2=2000, seed=7))
        n = 10007 * 1000000007
        first = factorizer.run_trial(n, 3)
        second = factorizer.run_trial(n, 3)
        self.assertEqual((first.outcome, first.factor), (second.outcome, second.factor))
        self.assertIs(factorizer.run_trial(n, 4, should_stop=lambda: True).outcome, TrialOutcome.CANCELLED)

    def test_trial_with_degenerate_curve(self):
        factorizer = HecmFactorizer(HecmParams(b1=200, seed=7))
        with mock.patch('gentino.hecm.factorizer.generate_curve', side_effect=ValueError("singular sextic")):
            with self.assertLogs(factorizer._logger_name, level='WARNING') as logs:
                result = factorizer.run_trial(10007 * 1000000007, 0)
        self.assertIs(result.outcome, TrialOutcome.CONTINUE)
        self.assertIn("singular sextic", logs.output[0])

    def test_journal(self):
        factor(91, record_path=CSV_FILE)
        with self.assertRaises(Exhausted):
            factor(1000003, record_path=CSV_FILE)
        rows = CSVTableStorage(JOURNAL_FIELDS).read(CSV_FILE)
        self.assertEqual(len(rows), 2)
        self.assertEqual((rows[0]['n'], rows[0]['factor'], rows[0]['stage'], rows[0]['outcome']),
                         ('91', '7', '0', 'screen'))
        self.assertEqual((rows[1]['factor'], rows[1]['outcome']), ('', 'exhausted'))


class TestFactorResult(unittest.TestCase):

    def test_json(self):
        result = FactorResult(91, 13, TrialOutcome.STAGE2, trial_index=4, elapsed_ms=12)
        self.assertEqual(result.to_json(), {"n": 91, "factor": 13, "stage": 2, "trial": 4, "elapsed_ms": 12})

    def test_validate(self):
        with self.assertRaises(ValueError):
            FactorResult(91, 91, TrialOutcome.STAGE1)
        with self.assertRaises(ValueError):
            FactorResult(91, 5, TrialOutcome.STAGE1)


class TestHecmParams(unittest.TestCase):

    def test_defaults(self):
        params = HecmParams(b1=300)
        self.assertEqual(params.b2, 30000)
        self.assertEqual(params.to_json()["b1"], 300)

    def test_validate(self):
        for kwargs in ({"b1": 1}, {"b1": 100, "b2": 50}, {"max_trials": 0}, {"seed": -1}, {"seed": 2 ** 64},
                       {"threads": 0}):
            with self.assertRaises(ValueError, msg=str(kwargs)):
                HecmParams(**kwargs)


if __name__ == '__main__':
    unittest.main()
