import gmpy2

DEFAULT_B1 = 2000
DEFAULT_B2 = 100 * DEFAULT_B1
DEFAULT_MAX_TRIALS = 50
DEFAULT_SEED = 0
TRIAL_DIVISION_BOUND = 10_000


class HecmParams:
    """
    Bounds and trial budget of a factoring run.
    """
    __slots__ = ('b1', 'b2', 'max_trials', 'seed', 'threads')

    def __init__(self, b1=DEFAULT_B1, b2=None, max_trials=DEFAULT_MAX_TRIALS, seed=DEFAULT_SEED, threads=1):
        """
        :param b1: (int) stage 1 smoothness bound, at least 2
        :param b2: (int) stage 2 bound, at least b1; 100 * b1 when omitted
        :param max_trials: (int) number of curves to try
        :param seed: (int) 64-bit seed; trial i draws from its own stream seeded with seed + i
        :param threads: (int) number of trials run concurrently
        """
        self.b1 = int(b1)
        self.b2 = int(b2) if b2 is not None else 100 * self.b1
        self.max_trials = int(max_trials)
        self.seed = int(seed)
        self.threads = int(threads)
        self._validate()

    def to_json(self):
        return {"b1": self.b1, "b2": self.b2, "max_trials": self.max_trials, "seed": self.seed,
                "threads": self.threads}

    def _validate(self):
        if self.b1 < 2:
            raise ValueError(f"B1 must be at least 2, got {self.b1}")
        if self.b2 < self.b1:
            raise ValueError(f"B2 must be at least B1 = {self.b1}, got {self.b2}")
        if self.max_trials < 1:
            raise ValueError(f"max_trials must be positive, got {self.max_trials}")
        if not 0 <= self.seed < gmpy2.mpz(2) ** 64:
            raise ValueError(f"seed must be a 64-bit unsigned integer, got {self.seed}")
        if self.threads < 1:
            raise ValueError(f"threads must be positive, got {self.threads}")

    def __repr__(self):
        return (f"HecmParams(b1={self.b1}, b2={self.b2}, max_trials={self.max_trials}, seed={self.seed}, "
                f"threads={self.threads})")


__all__ = ['DEFAULT_B1', 'DEFAULT_B2', 'DEFAULT_MAX_TRIALS', 'DEFAULT_SEED', 'TRIAL_DIVISION_BOUND', 'HecmParams']
