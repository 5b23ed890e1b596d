"""
The factoring loop: cheap screens, then independent trials on random decomposable curves.
"""
import time
import random
import logging
import threading
from concurrent.futures import ThreadPoolExecutor

import gmpy2

from gentino.algebra import FactorSignal
from gentino.fs.csv import CSVTableStorage
from gentino.utils.log_utils import LoggingMixin

from .curve import generate_curve
from .params import HecmParams, TRIAL_DIVISION_BOUND
from .stages import StageResult, initial_point, stage1, stage1_exponent, stage2
from .type import TrialOutcome

JOURNAL_FIELDS = ['n', 'factor', 'stage', 'trial', 'outcome', 'b1', 'b2', 'seed', 'elapsed_ms']


class Exhausted(RuntimeError):
    """No factor was found within the trial budget."""

    def __init__(self, n, trials):
        self.n = int(n)
        self.trials = trials
        super().__init__(f"no factor of {self.n} found in {trials} trials")


class FactorResult:
    """
    A proper factor of n and where it was found. Stage 0 marks the trial-division and perfect-power screens.
    """
    __slots__ = ('n', 'factor', 'stage', 'trial_index', 'curve_seed', 'elapsed_ms', 'outcome')

    def __init__(self, n, factor, outcome: TrialOutcome, trial_index=None, curve_seed=None, elapsed_ms=0):
        self.n = int(n)
        self.factor = int(factor)
        self.outcome = outcome
        self.stage = outcome.stage
        self.trial_index = trial_index
        self.curve_seed = curve_seed
        self.elapsed_ms = elapsed_ms
        self._validate()

    def to_json(self):
        return {"n": self.n, "factor": self.factor, "stage": self.stage, "trial": self.trial_index,
                "elapsed_ms": self.elapsed_ms}

    def _validate(self):
        if not (1 < self.factor < self.n and self.n % self.factor == 0):
            raise ValueError(f"{self.factor} is not a proper factor of {self.n}")

    def __repr__(self):
        return f"FactorResult(n={self.n}, factor={self.factor}, stage={self.stage}, trial={self.trial_index})"


def trial_division(n, bound=TRIAL_DIVISION_BOUND):
    """Smallest prime factor of n up to ``bound`` that is below n, or None."""
    n = gmpy2.mpz(n)
    prime = gmpy2.mpz(2)
    while prime <= bound and prime < n:
        if n % prime == 0:
            return int(prime)
        prime = gmpy2.next_prime(prime)
    return None


def perfect_power_root(n):
    """
    :param n: (int) n >= 2
    :return: (tuple | None) (root, exponent) with root^exponent = n and exponent >= 2, the smallest root
    """
    n = gmpy2.mpz(n)
    for exponent in range(n.bit_length(), 1, -1):
        root, exact = gmpy2.iroot(n, exponent)
        if exact and root > 1:
            return int(root), exponent
    return None


class HecmFactorizer(LoggingMixin):
    """
    Runs the trial loop for one set of parameters, optionally journaling each result to a csv file.
    """

    def __init__(self, params: HecmParams = None, log_path=None, record_path=None):
        """
        :param params: (HecmParams) bounds, trial budget and seed
        :param log_path: (str | pathlib.Path | None) log file path, if None, log to the console
        :param record_path: (str | pathlib.Path | None) csv journal, one row appended per factorisation
        """
        self._init_logger(log_path)
        self.params = params or HecmParams()
        self.record_path = record_path
        self._journal = CSVTableStorage(JOURNAL_FIELDS) if record_path is not None else None
        self._exponent = stage1_exponent(self.params.b1)

    def factor(self, n) -> FactorResult:
        """
        :param n: (int) the number to split, n >= 4
        :return: (FactorResult)
        :raises Exhausted: when n is prime or no trial finds a factor
        """
        n = self._validate_n(n)
        start = time.perf_counter()
        self._log(f"Factoring {n} with {self.params}")
        result = self._screen(n)
        if result is None:
            if gmpy2.is_prime(n):
                self._log(f"{n} is prime", level=logging.WARNING)
                self._record(n, None, start)
                raise Exhausted(n, 0)
            result = self._run_trials(n)
        if result is None:
            self._log(f"No factor of {n} after {self.params.max_trials} trials", level=logging.WARNING)
            self._record(n, None, start)
            raise Exhausted(n, self.params.max_trials)
        result.elapsed_ms = int((time.perf_counter() - start) * 1000)
        self._log(f"Found {result.factor} | {n} at stage {result.stage}, trial {result.trial_index}")
        self._record(n, result, start)
        return result

    def run_trial(self, n, trial_index: int, should_stop=None) -> StageResult:
        """
        One curve: build it, run stage 1 and, without a factor, stage 2.

        :param n: (int) the number to split
        :param trial_index: (int) index of the trial; its random stream is seeded with seed + index
        :param should_stop: (callable | None) polled between stages; a true value cancels the trial
        :return: (StageResult)
        """
        rng = random.Random(self.params.seed + trial_index)
        stop = should_stop or (lambda: False)
        try:
            curve = generate_curve(n, rng)
            point = initial_point(curve, curve.ring.random_element(rng))
        except FactorSignal as signal:
            return StageResult.from_signal(signal, TrialOutcome.SETUP)
        except ValueError as error:
            self._log(f"Trial {trial_index}: no curve, {error}", level=logging.WARNING)
            return StageResult(TrialOutcome.CONTINUE)
        self._log(f"Trial {trial_index}: curve {curve.to_json()}", level=logging.DEBUG)
        if stop():
            return StageResult(TrialOutcome.CANCELLED)
        try:
            first = stage1(curve, point, self._exponent)
            if first.outcome.found_factor:
                return first
            if not first.images:
                self._log(f"Trial {trial_index}: stage 1 ended on the identity modulo {n}", level=logging.WARNING)
                return first
            if stop():
                return StageResult(TrialOutcome.CANCELLED)
            return stage2(first.images, self.params.b1, self.params.b2)
        except ValueError as error:
            # a projective point or linear system collapsed modulo all of n at once
            self._log(f"Trial {trial_index}: skipped, {error}", level=logging.WARNING)
            return StageResult(TrialOutcome.CONTINUE)

    def _screen(self, n):
        small = trial_division(n)
        if small is not None:
            return FactorResult(n, small, TrialOutcome.SCREEN)
        power = perfect_power_root(n)
        if power is not None:
            return FactorResult(n, power[0], TrialOutcome.SCREEN)
        return None

    def _result(self, n, index, stage_result: StageResult):
        return FactorResult(n, stage_result.factor, stage_result.outcome, trial_index=index,
                            curve_seed=self.params.seed + index)

    def _run_trials(self, n):
        if self.params.threads == 1:
            for index in range(self.params.max_trials):
                stage_result = self.run_trial(n, index)
                if stage_result.outcome.found_factor:
                    return self._result(n, index, stage_result)
            return None
        return self._run_threaded(n)

    def _run_threaded(self, n):
        """
        Trials run concurrently; a success at index i cancels only the trials above i, so the reported
        trial is the one a sequential run would report.
        """
        found = threading.Event()
        lock = threading.Lock()
        best = [None]

        def superseded(index):
            return found.is_set() and best[0] is not None and best[0] < index

        def job(index):
            if superseded(index):
                return StageResult(TrialOutcome.CANCELLED)
            stage_result = self.run_trial(n, index, should_stop=lambda: superseded(index))
            if stage_result.outcome.found_factor:
                with lock:
                    if best[0] is None or index < best[0]:
                        best[0] = index
                found.set()
            return stage_result

        with ThreadPoolExecutor(max_workers=self.params.threads) as executor:
            results = list(executor.map(job, range(self.params.max_trials)))
        for index, stage_result in enumerate(results):
            if stage_result.outcome.found_factor:
                return self._result(n, index, stage_result)
        return None

    def _record(self, n, result, start):
        if self._journal is None:
            return
        elapsed = int((time.perf_counter() - start) * 1000)
        row = {'n': str(n), 'b1': self.params.b1, 'b2': self.params.b2, 'seed': self.params.seed,
               'elapsed_ms': elapsed}
        if result is None:
            row.update({'factor': '', 'stage': '', 'trial': '', 'outcome': 'exhausted'})
        else:
            row.update({'factor': str(result.factor), 'stage': result.stage,
                        'trial': '' if result.trial_index is None else result.trial_index,
                        'outcome': str(result.outcome)})
        self._journal.write(self.record_path, [row])

    def _validate_n(self, n):
        try:
            n = int(n)
        except (TypeError, ValueError):
            self._fail(f"n must be an integer, got {n!r}")
        if n < 4:
            self._fail(f"n must be at least 4, got {n}")
        return n


def factor(n, params: HecmParams = None, log_path=None, record_path=None) -> FactorResult:
    """
    Find a proper factor of n.

    :param n: (int) the number to split, n >= 4
    :param params: (HecmParams) bounds, trial budget and seed
    :return: (FactorResult)
    :raises Exhausted: when n is prime or the trial budget runs out
    """
    return HecmFactorizer(params, log_path=log_path, record_path=record_path).factor(n)


__all__ = ['JOURNAL_FIELDS', 'Exhausted', 'FactorResult', 'trial_division', 'perfect_power_root', 'HecmFactorizer',
           'factor']
