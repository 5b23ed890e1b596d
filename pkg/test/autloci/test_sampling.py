import os
import unittest
from pathlib import Path

from gentino.algebra import QQ
from gentino.autloci import SAMPLE_FIELDS, CsvLocusSampler, igusa_from_uv, l2_membership, sample_locus
from gentino.fs.csv import CSVTableStorage

CSV_FILE = 'test_locus_samples.csv'


class TestLocusSampling(unittest.TestCase):

    def tearDown(self):
        if Path(CSV_FILE).exists():
            os.remove(CSV_FILE)

    def test_rows_lie_on_the_locus(self):
        rows = sample_locus('L2', 5, seed=1)
        self.assertEqual(len(rows), 5)
        for row in rows:
            self.assertEqual(list(row.keys()), SAMPLE_FIELDS)
            self.assertTrue(l2_membership(igusa_from_uv(QQ(row['u']), QQ(row['v']))))

    def test_d4_rows(self):
        for row in sample_locus('D4', 5, seed=2):
            u, v = QQ(row['u']), QQ(row['v'])
            self.assertEqual(v * v, 4 * u ** 3)

    def test_d6_rows(self):
        for row in sample_locus('D6', 5, seed=2):
            u, v = QQ(row['u']), QQ(row['v'])
            self.assertEqual(4 * v, u * u - 110 * u + 1125)

    def test_deterministic(self):
        self.assertEqual(sample_locus('L3', 3, seed=5), sample_locus('L3', 3, seed=5))

    def test_write(self):
        sample_locus('L2', 4, seed=0, file_path=CSV_FILE)
        sample_locus('L2', 2, seed=1, file_path=CSV_FILE)
        rows = CSVTableStorage(fields=SAMPLE_FIELDS).read(CSV_FILE)
        self.assertEqual(len(rows), 6)
        self.assertEqual(rows[0]['locus'], 'L2')

    def test_validate(self):
        with self.assertRaises(ValueError):
            CsvLocusSampler('L5')
        with self.assertRaises(ValueError):
            CsvLocusSampler('L2', bound=0)


if __name__ == '__main__':
    unittest.main()
