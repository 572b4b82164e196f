"""
Asymptotic acceptance grid
Fits the scaled defect (1 - P) q^k for each leading-order formula and logs the c(q) sequences
"""
import sys
from pathlib import Path

# Add parent directory to path
sys.path.insert(0, str(Path(__file__).parent.parent))

from loguru import logger

from polycensus.core.logging import setup_logging
from polycensus.models.enums import PropertyName
from polycensus.models.field import field_make
from polycensus.services.census import census_engine
from polycensus.services.reporting import render_fit

# (property, field sizes, dimensions, Monte Carlo trials or None for exact)
GRID = [
    (PropertyName.LEFT_COPRIME, (2, 3, 5), {"m": 2, "degrees": (2, 2)}, None),
    (PropertyName.MUTUAL_COPRIME, (2, 3, 5), {"m": 2, "degrees": (1, 1, 1)}, None),
    (PropertyName.PARALLEL_REACHABLE, (5, 11, 17), {"m": 1, "degrees": (1, 1)}, 100000),
    (PropertyName.NONCATASTROPHIC, (2, 5, 11), {"s": 2, "k": 1, "n": 2}, 100000),
    (PropertyName.SCALAR_COPRIME, (2, 3, 5), {"degrees": (2, 2)}, None),
]


def main() -> int:
    setup_logging()
    failures = 0
    for prop, sizes, dims, trials in GRID:
        fields = [field_make(q) for q in sizes]
        logger.info(f"Fitting {prop.value} over q in {sizes}")
        fit = census_engine.asymptotic_coefficient_fit(prop, fields, trials=trials, **dims)
        print(render_fit(fit), end="")
        if not fit.passed:
            failures += 1
            logger.warning(f"{prop.value} did not converge to {fit.predicted}")
    logger.info(f"{len(GRID) - failures}/{len(GRID)} fits passed")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
