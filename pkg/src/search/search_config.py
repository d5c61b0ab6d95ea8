from dataclasses import dataclass, field
from fractions import Fraction

from config import Config
from ..gfpoly import FieldSpec


@dataclass(frozen=True)
class SearchConfig:
    """
    Tunables for parameter selection and the conductor search driver

    Defaults come from Config; C1 and C2 are the constants of the
    place-counting argument, the window bounds select prime degrees in
    (window_low * log_q n, window_high * log_q n].
    """

    q: FieldSpec
    n: int
    c1: Fraction = field(default_factory=lambda: Config.C1)
    c2: Fraction = field(default_factory=lambda: Config.C2)
    window_low: Fraction = field(default_factory=lambda: Config.WINDOW_LOW)
    window_high: Fraction = field(default_factory=lambda: Config.WINDOW_HIGH)
    c_q: int = field(default_factory=lambda: Config.C_Q)
    max_conductors: int = 4
    max_extensions: int = 10_000
    threads: int = 1
    seed: int = field(default_factory=lambda: Config.SEED)

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"n must be positive, got {self.n}")
        if not 0 < self.c2 < 1:
            raise ValueError(f"C2 must lie in (0, 1), got {self.c2}")
        if self.c1 <= 0:
            raise ValueError(f"C1 must be positive, got {self.c1}")
        if not 0 < self.window_low < self.window_high:
            raise ValueError(
                f"Prime window must satisfy 0 < low < high, got ({self.window_low}, {self.window_high}]"
            )
        if self.threads < 1:
            raise ValueError(f"threads must be >= 1, got {self.threads}")
