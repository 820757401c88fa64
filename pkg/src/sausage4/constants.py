"""Certified enclosures of the transcendental constants.

The endpoint pairs below were generated once from the exact rational series
oracle (`series_oracle.constant_table_bounds`) by taking the outermost
binary64 neighbours of the rational bounds; the test suite regenerates the
rational bounds and checks that every frozen pair still encloses them with
width at most 4 ulp.  Shipping fixed endpoints keeps runtime behaviour
independent of any transcendental evaluation.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import UsageError
from .interval import Interval

# name -> (lo, hi); 17-significant-digit reprs round-trip exactly
_FROZEN: dict[str, tuple[float, float]] = {
    "sqrt2": (1.414213562373095, 1.4142135623730951),
    "sqrt3": (1.7320508075688772, 1.7320508075688774),
    "pi": (3.141592653589793, 3.1415926535897936),
    "pi_sq": (9.869604401089358, 9.86960440108936),
    "acos_one_third": (1.2309594173407745, 1.2309594173407747),
    "atan_silver": (0.16991845472706096, 0.169918454727061),
    "kappa2": (3.141592653589793, 3.1415926535897936),
    "kappa3": (4.1887902047863905, 4.188790204786391),
    "kappa4": (4.934802200544679, 4.93480220054468),
}

NAMES = tuple(_FROZEN)


@dataclass(frozen=True)
class Constants:
    """Interval constant table, optionally stress-widened for soundness tests.

    `stress` inflates every base enclosure's width by the given factor before
    any arithmetic happens; derived members are recomputed from the widened
    bases, so a stressed table remains a sound (just much looser) enclosure.
    """

    sqrt2: Interval
    sqrt3: Interval
    pi: Interval
    pi_sq: Interval
    acos_one_third: Interval
    atan_silver: Interval
    kappa2: Interval
    kappa3: Interval
    kappa4: Interval
    stress: float = 1.0

    @classmethod
    def load(cls, stress: float = 1.0) -> "Constants":
        if stress == 1.0:
            return _default()
        base = {k: Interval(*v).widened(stress) for k, v in _FROZEN.items()}
        return cls(stress=stress, **base)

    def get(self, name: str) -> Interval:
        """Constant lookup by table name (the `const` operation)."""
        if name not in _FROZEN:
            raise UsageError(f"unknown constant {name!r}; known: {', '.join(NAMES)}")
        return getattr(self, name)

    # -- derived enclosures used by the volume formulas -----------------

    @property
    def sqrt3_pi(self) -> Interval:
        return self.sqrt3 * self.pi

    @property
    def edge_excess(self) -> Interval:
        """3*acos(1/3) - pi, the spherical excess behind most edge angles."""
        return self.acos_one_third.scale_int(3) - self.pi

    @property
    def two_kappa3(self) -> Interval:
        return self.kappa3.scale_int(2)

    def endpoints(self) -> dict[str, tuple[float, float]]:
        """Endpoint snapshot for report audit trails."""
        return {k: (self.get(k).lo, self.get(k).hi) for k in NAMES}


@lru_cache(maxsize=1)
def _default() -> Constants:
    return Constants(**{k: Interval(*v) for k, v in _FROZEN.items()})


def const(name: str, stress: float = 1.0) -> Interval:
    """Convenience accessor for a single named constant enclosure."""
    return Constants.load(stress).get(name)


DEFAULT = Constants.load()
