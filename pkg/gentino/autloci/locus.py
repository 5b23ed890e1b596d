"""
Loci in the moduli space given by a weighted-homogeneous polynomial in J2, J4, J6, J10.
"""
import functools
import logging

from gentino.fs.csv import CSVTableStorage
from gentino.utils.io_utils import package_data_path
from gentino.utils.log_utils import LoggingMixin
from gentino.invariants import IgusaInvariants, NotGenusTwo

LOCUS_FIELDS = ['j2', 'j4', 'j6', 'j10', 'coefficient']
WEIGHTS = (2, 4, 6, 10)


class LocusPolynomial(LoggingMixin):
    """
    Integer polynomial sum c * J2^e2 J4^e4 J6^e6 J10^e10, weighted homogeneous.
    """

    def __init__(self, name: str, terms, log_path=None):
        """
        :param name: (str) label used in logs and errors
        :param terms: (list<tuple>) ((e2, e4, e6, e10), coefficient) pairs
        :param log_path: (str | pathlib.Path | None) log file path
        """
        self._init_logger(log_path)
        self.name = name
        self.terms = tuple((tuple(int(e) for e in exps), int(c)) for exps, c in terms if int(c) != 0)
        self._validate()

    @classmethod
    def from_csv(cls, name: str, file_path, log_path=None):
        """
        Load the terms from a CSV file with columns j2, j4, j6, j10, coefficient.
        """
        storage = CSVTableStorage(fields=LOCUS_FIELDS)
        df = storage.read_to_df(file_path)
        terms = [((row.j2, row.j4, row.j6, row.j10), row.coefficient) for row in df.itertuples(index=False)]
        locus = cls(name, terms, log_path=log_path)
        locus._log(f"Loaded {len(locus.terms)} terms of weighted degree {locus.weighted_degree} from {file_path}",
                   level=logging.DEBUG)
        return locus

    @property
    def weighted_degree(self) -> int:
        exps = self.terms[0][0]
        return sum(e * w for e, w in zip(exps, WEIGHTS))

    def evaluate(self, J: IgusaInvariants):
        """
        :param J: (IgusaInvariants) the invariants
        :return: value of the polynomial, in the ring of J
        """
        values = J.as_tuple()
        ring = J.ring
        powers = []
        for k, v in enumerate(values):
            top = max(exps[k] for exps, _ in self.terms)
            table = [ring.one]
            for _ in range(top):
                table.append(table[-1] * v)
            powers.append(table)
        total = ring.zero
        for exps, c in self.terms:
            term = ring(c)
            for k, e in enumerate(exps):
                if e:
                    term = term * powers[k][e]
            total = total + term
        return total

    def contains(self, J: IgusaInvariants) -> bool:
        if not J.is_genus_two():
            raise NotGenusTwo(f"{self.name}: J10 = 0")
        return J.ring.is_zero(self.evaluate(J))

    def _validate(self):
        if not self.terms:
            self._fail(f"Locus {self.name} has no terms.")
        degrees = {sum(e * w for e, w in zip(exps, WEIGHTS)) for exps, _ in self.terms}
        if len(degrees) != 1:
            self._fail(f"Locus {self.name} is not weighted homogeneous: degrees {sorted(degrees)}.")

    def __len__(self):
        return len(self.terms)

    def __repr__(self):
        return f"LocusPolynomial({self.name}, {len(self.terms)} terms, degree {self.weighted_degree})"


@functools.lru_cache(maxsize=None)
def l2_polynomial() -> LocusPolynomial:
    """Curves with an elliptic involution: the relation among J2, J4, J6, J10 of weighted degree 30."""
    return LocusPolynomial.from_csv('L2', package_data_path(__file__, 'data', 'l2_locus.csv'))


D4_POLYNOMIAL = LocusPolynomial('D4', [
    ((2, 2, 0, 0), 1706), ((0, 3, 0, 0), 2560), ((4, 1, 0, 0), 27), ((3, 0, 1, 0), -81),
    ((1, 1, 1, 0), -14880), ((0, 0, 2, 0), 28800),
])

D6_POLYNOMIALS = (
    LocusPolynomial('D6a', [
        ((4, 1, 0, 0), -1), ((3, 0, 1, 0), 12), ((2, 2, 0, 0), -52), ((0, 3, 0, 0), 80),
        ((1, 1, 1, 0), 960), ((0, 0, 2, 0), -3600),
    ]),
    LocusPolynomial('D6b', [
        ((5, 0, 0, 1), 864), ((1, 2, 0, 1), 3456000), ((3, 1, 0, 1), -43200), ((0, 0, 0, 2), -2332800000),
        ((6, 2, 0, 0), -1), ((2, 4, 0, 0), -768), ((4, 3, 0, 0), 48), ((0, 5, 0, 0), 4096),
    ]),
)


def l2_membership(J: IgusaInvariants) -> bool:
    """
    Whether the curve has an elliptic involution (a degree 2 elliptic subcover).

    :param J: (IgusaInvariants) invariants with J10 != 0
    :return: (bool)
    """
    return l2_polynomial().contains(J)


def d4_equation(J: IgusaInvariants):
    return D4_POLYNOMIAL.evaluate(J)


def d6_equations(J: IgusaInvariants):
    return tuple(p.evaluate(J) for p in D6_POLYNOMIALS)


__all__ = ['LocusPolynomial', 'l2_polynomial', 'D4_POLYNOMIAL', 'D6_POLYNOMIALS', 'l2_membership',
           'd4_equation', 'd6_equations']
