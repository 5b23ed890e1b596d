"""
Random points of the loci of curves with a degree 2 or degree 3 elliptic subcover, as rows of
(u, v, i1, i2, i3) ready for plotting.
"""
import random
import logging

from gentino.algebra import QQ
from gentino.fs.csv import CSVTableStorage
from gentino.invariants import absolute_invariants, igusa
from gentino.utils.log_utils import LoggingMixin
from gentino.utils.string_utils import rational_to_str

from .dihedral import DihedralInvariants, igusa_from_uv

SAMPLE_FIELDS = ['locus', 'u', 'v', 'i1', 'i2', 'i3']
LOCUS_KINDS = ('L2', 'D4', 'D6', 'L3')


class CsvLocusSampler(LoggingMixin):
    """
    Draws rational points of a locus and records their absolute invariants.
    """

    def __init__(self, kind: str, seed=0, bound=50, log_path=None):
        """
        :param kind: (str) one of L2, D4, D6, L3
        :param seed: (int) random seed
        :param bound: (int) height bound of the random rationals
        :param log_path: (str | pathlib.Path | None) log file path
        """
        self._init_logger(log_path)
        self.kind = kind
        self.bound = bound
        self.rng = random.Random(seed)
        self._validate()

    def _random(self):
        return QQ.random_element(self.rng, self.bound)

    def _draw(self):
        """One (u, v, J) triple on the locus, or None when the draw is degenerate."""
        if self.kind == 'L3':
            from gentino.subcovers.degree3 import Deg3Family, curve_from_ab
            a, b = self._random(), self._random()
            family = Deg3Family(a, b)
            if family.is_degenerate():
                return None
            return family.u, family.v, igusa(curve_from_ab(family))
        u = self._random()
        if self.kind == 'L2':
            v = self._random()
        elif self.kind == 'D4':
            t = self._random()
            u, v = t * t, 2 * t ** 3
        else:
            v = (u * u - 110 * u + 1125) / 4
        uv = DihedralInvariants(u, v)
        if uv.is_degenerate():
            return None
        return uv.u, uv.v, igusa_from_uv(uv.u, uv.v)

    def sample(self, count: int):
        """
        :param count: (int) number of rows
        :return: (list<dict>) rows keyed by SAMPLE_FIELDS, values as exact rational strings
        """
        rows = []
        skipped = 0
        while len(rows) < count:
            drawn = self._draw()
            if drawn is None or drawn[2].J2 == 0 or not drawn[2].is_genus_two():
                skipped += 1
                continue
            u, v, J = drawn
            i1, i2, i3 = absolute_invariants(J)
            rows.append({'locus': self.kind, 'u': rational_to_str(u), 'v': rational_to_str(v),
                         'i1': rational_to_str(i1), 'i2': rational_to_str(i2), 'i3': rational_to_str(i3)})
        if skipped:
            self._log(f"Skipped {skipped} degenerate draws on {self.kind}", level=logging.WARNING)
        self._log(f"Sampled {len(rows)} points on {self.kind}")
        return rows

    def write(self, file_path, count: int):
        """Sample ``count`` rows and append them to a CSV file."""
        rows = self.sample(count)
        CSVTableStorage(fields=SAMPLE_FIELDS).write(file_path, rows)
        return rows

    def _validate(self):
        if self.kind not in LOCUS_KINDS:
            self._fail(f"Unknown locus {self.kind!r}, expected one of {', '.join(LOCUS_KINDS)}.")
        if self.bound < 1:
            self._fail(f"Sampling bound must be positive, got {self.bound}.")


def sample_locus(kind: str, count: int, seed=0, file_path=None):
    """
    :param kind: (str) one of L2, D4, D6, L3
    :param count: (int) number of points
    :param seed: (int) random seed
    :param file_path: (str | pathlib.Path | None) CSV file to append to
    :return: (list<dict>) the sampled rows
    """
    sampler = CsvLocusSampler(kind, seed=seed)
    if file_path is None:
        return sampler.sample(count)
    return sampler.write(file_path, count)


__all__ = ['SAMPLE_FIELDS', 'LOCUS_KINDS', 'CsvLocusSampler', 'sample_locus']
