import os
import shutil
import unittest
from pathlib import Path

import gmpy2
import pandas as pd

from gentino.algebra import IntegersModN
from gentino.fs.csv import CSVTableStorage, exact_cell

CSV_FILE = 'test_storage.csv'
CSV_DIR = 'test_storage_dir'
FIELDS = ['u', 'v', 'i1']
BIG = '123456789012345678901234567890/7'


class TestCSVTableStorage(unittest.TestCase):

    def setUp(self):
        self.storage = CSVTableStorage(FIELDS)

    def tearDown(self):
        if Path(CSV_FILE).exists():
            os.remove(CSV_FILE)
        if Path(CSV_DIR).exists():
            shutil.rmtree(CSV_DIR)

    def test_validate_fields(self):
        with self.assertRaises(ValueError):
            CSVTableStorage([])
        with self.assertRaises(ValueError):
            CSVTableStorage(None)

    def test_write_and_append(self):
        self.storage.write(CSV_FILE, [{'u': '1', 'v': '2', 'i1': '3/4'}])
        self.storage.write(CSV_FILE, [{'u': '5', 'v': '6', 'i1': BIG}, {'u': '-1', 'v': '0', 'i1': '0'}])
        records = self.storage.read(CSV_FILE)
        self.assertEqual(len(records), 3)
        self.assertEqual(records[1]['i1'], BIG)
        self.assertEqual(CSVTableStorage.read_header(CSV_FILE), FIELDS)

    def test_empty_write(self):
        self.storage.write(CSV_FILE, [])
        self.assertFalse(Path(CSV_FILE).exists())

    def test_fields_mismatch(self):
        self.storage.write(CSV_FILE, [{'u': '1', 'v': '2', 'i1': '3'}])
        other = CSVTableStorage(['u', 'v'])
        with self.assertRaises(ValueError):
            other.write(CSV_FILE, [{'u': '1', 'v': '2'}])
        with self.assertRaises(ValueError):
            other.read(CSV_FILE)

    def test_read_to_df_keeps_strings(self):
        self.storage.write(CSV_FILE, [{'u': '10000000000000000000000', 'v': '2', 'i1': BIG}])
        df = self.storage.read_to_df(CSV_FILE)
        self.assertEqual(df.loc[0, 'u'], '10000000000000000000000')
        self.assertEqual(df.loc[0, 'i1'], BIG)

    def test_dataframe_round_trip(self):
        df = pd.DataFrame({'u': ['1', '2'], 'v': ['3', '4'], 'i1': ['5', '6/7']})
        storage = CSVTableStorage.from_dataframe(df)
        self.assertEqual(storage.fields, FIELDS)
        storage.write_from_df(CSV_FILE, df)
        pd.testing.assert_frame_equal(storage.read_to_df(CSV_FILE), df)

    def test_from_dict(self):
        storage = CSVTableStorage.from_dict({'u': 1, 'v': 2, 'i1': 3})
        self.assertEqual(storage.fields, FIELDS)

    def test_exact_cells(self):
        self.assertEqual(exact_cell(None), '')
        self.assertEqual(exact_cell(True), 'true')
        self.assertEqual(exact_cell(10 ** 30), '1' + '0' * 30)
        self.assertEqual(exact_cell(gmpy2.mpq(6, -8)), '-3/4')
        self.assertEqual(exact_cell(IntegersModN(91)(100)), '9')
        self.storage.write(CSV_FILE, [{'u': gmpy2.mpq(1, 3), 'v': None, 'i1': 7}])
        df = self.storage.read_to_df(CSV_FILE)
        self.assertEqual((df.loc[0, 'u'], df.loc[0, 'v'], df.loc[0, 'i1']), ('1/3', '', '7'))

    def test_unknown_field(self):
        with self.assertRaises(ValueError):
            self.storage.write(CSV_FILE, [{'u': '1', 'v': '2', 'i1': '3', 'i2': '4'}])

    def test_creates_parent_directory(self):
        path = Path(CSV_DIR) / 'nested' / 'samples.csv'
        self.storage.write(path, [{'u': '1', 'v': '2', 'i1': '3'}])
        self.assertTrue(path.exists())


if __name__ == '__main__':
    unittest.main()
