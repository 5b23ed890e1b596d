"""
Fixed-header CSV tables for exact data: locus coefficients, sampled locus points and factoring journals.

Cells are written as exact strings (integers in full, rationals as "p/q", residues by their value) and read
back as strings; callers parse them with ``parse_rational`` or ``int``.
"""
import csv
import functools

import gmpy2
import pandas as pd

from gentino.utils.io_utils import ensure_pathlib_path, check_and_make_dir
from gentino.utils.string_utils import rational_to_str


def exact_cell(value) -> str:
    """
    :param value: None, str, bool, int, gmpy2 number or anything with an integer ``value`` (a residue)
    :return: (str) "" for None
    """
    if value is None:
        return ''
    if isinstance(value, str):
        return value
    if isinstance(value, bool):
        return str(value).lower()
    if isinstance(value, (int, type(gmpy2.mpz(0)), type(gmpy2.mpq(0)))):
        return rational_to_str(value)
    if hasattr(value, 'value'):
        return str(int(value.value))
    return str(value)


def fields_match(func):
    """
    Refuse to touch an existing file whose header differs from the table's fields.
    """

    @functools.wraps(func)
    def wrapper(self, file_path, *args, **kwargs):
        file_path = ensure_pathlib_path(file_path)
        if file_path.exists():
            header = CSVTableStorage.read_header(file_path)
            if header is not None and header != self.fields:
                raise ValueError(f"{file_path} has header {header}, expected {self.fields}")
        return func(self, file_path, *args, **kwargs)

    return wrapper


class CSVTableStorage:
    """
    A CSV table with a fixed header. Writes create the file (and its directory) or append to it.
    """

    def __init__(self, fields, index_col=None):
        self.fields = list(fields) if fields is not None else None
        self.index_col = index_col
        self._validate()

    @staticmethod
    def from_dict(record_dict: dict):
        """Table whose fields are the keys of one record."""
        return CSVTableStorage(fields=list(record_dict.keys()))

    @staticmethod
    def from_dataframe(df: pd.DataFrame):
        return CSVTableStorage(fields=df.columns.tolist(), index_col=df.index.name)

    @fields_match
    def read(self, file_path):
        """
        :param file_path: (str | pathlib.Path) path to the csv file
        :return: (list<dict>) one dict of strings per row
        """
        with open(file_path, 'r', newline='') as f:
            return list(csv.DictReader(f))

    @fields_match
    def read_to_df(self, file_path, dtype=str):
        """
        :param file_path: (str | pathlib.Path) path to the csv file
        :param dtype: (type | dict) column types; strings by default so big integers and rationals stay exact
        :return: (pd.DataFrame) empty cells are kept as ""
        """
        return pd.read_csv(file_path, index_col=self.index_col, dtype=dtype, keep_default_na=False)

    @fields_match
    def write(self, file_path, records: list):
        """
        Append records, creating the file with its header first when needed.

        :param file_path: (str | pathlib.Path) path to the csv file
        :param records: (list<dict>) values go through ``exact_cell``
        :return: None
        :raises ValueError: when the existing header differs, or a record has a field the table does not
        """
        if not records:
            return
        file_path = ensure_pathlib_path(file_path)
        rows = [{key: exact_cell(value) for key, value in record.items()} for record in records]
        is_new = not file_path.exists()
        if is_new:
            check_and_make_dir(file_path.parent)
        with open(file_path, 'w' if is_new else 'a', newline='') as f:
            writer = csv.DictWriter(f, fieldnames=self.fields)
            if is_new:
                writer.writeheader()
            writer.writerows(rows)

    @fields_match
    def write_from_df(self, file_path, record_df: pd.DataFrame):
        self.write(file_path, record_df.to_dict(orient='records'))

    @staticmethod
    def read_header(file_path):
        """
        :param file_path: (str | pathlib.Path) path to the csv file
        :return: (list<str> | None) None for an empty file
        """
        with open(file_path, 'r', newline='') as f:
            return csv.DictReader(f).fieldnames

    def _validate(self):
        if not self.fields:
            raise ValueError("fields cannot be empty")

    def __repr__(self):
        return f"CSVTableStorage(fields={self.fields}, index_col={self.index_col})"


__all__ = ['exact_cell', 'fields_match', 'CSVTableStorage']
