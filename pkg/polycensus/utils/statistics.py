"""
Binomial confidence intervals
"""
import math
from typing import Tuple

from scipy.stats import norm

from polycensus.core.config import settings


def z_score(confidence: float) -> float:
    """Two-sided normal quantile for a confidence level"""
    if not 0 < confidence < 1:
        raise ValueError(f"Confidence level must lie in (0, 1), got {confidence}")
    return float(norm.ppf(0.5 + confidence / 2))


def wilson_interval(hits: int, trials: int, confidence: float = None) -> Tuple[float, float]:
    """
    Wilson score interval for a binomial proportion

    Args:
        hits: Successes
        trials: Trials, at least one
        confidence: Confidence level (defaults to CONFIDENCE_LEVEL)

    Returns:
        (low, high), always containing hits / trials
    """
    if trials <= 0:
        raise ValueError("Wilson interval needs at least one trial")
    if not 0 <= hits <= trials:
        raise ValueError(f"hits must lie in [0, {trials}], got {hits}")
    z = z_score(confidence if confidence is not None else settings.CONFIDENCE_LEVEL)
    p = hits / trials
    z2 = z * z
    denom = 1 + z2 / trials
    center = (p + z2 / (2 * trials)) / denom
    half = z * math.sqrt(p * (1 - p) / trials + z2 / (4 * trials * trials)) / denom
    # Rounding can push a bound past p at the edges
    return max(0.0, min(center - half, p)), min(1.0, max(center + half, p))
