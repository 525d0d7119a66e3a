"""
WER Point - aggregated outcome of the trials at one SNR value.
"""

from dataclasses import dataclass
from enum import Enum
from typing import Any, Dict, Optional, Tuple

import numpy as np
from scipy.stats import beta, norm

# points with fewer errors are drawn as tentative
SOLID_MIN_ERRORS = 20


class CIMethod(Enum):
    """Binomial confidence interval construction."""
    WILSON = "wilson"
    CLOPPER_PEARSON = "clopper-pearson"


def confidence_interval(
    errors: int,
    trials: int,
    level: float = 0.95,
    method: CIMethod = CIMethod.WILSON,
) -> Tuple[float, float]:
    """
    Two-sided confidence interval for an error probability.

    Args:
        errors: Observed errors
        trials: Observed trials
        level: Confidence level
        method: WILSON or CLOPPER_PEARSON

    Returns:
        (low, high), always containing errors / trials
    """
    if trials <= 0:
        return 0.0, 1.0
    if not (0 <= errors <= trials):
        raise ValueError(f"errors={errors} outside [0, trials={trials}]")

    alpha = 1.0 - level
    p_hat = errors / trials

    if CIMethod(method) is CIMethod.CLOPPER_PEARSON:
        low = float(beta.ppf(alpha / 2, errors, trials - errors + 1)) if errors > 0 else 0.0
        high = float(beta.ppf(1 - alpha / 2, errors + 1, trials - errors)) if errors < trials else 1.0
    else:
        z = float(norm.ppf(1 - alpha / 2))
        denom = 1.0 + z * z / trials
        center = (p_hat + z * z / (2 * trials)) / denom
        half = z * np.sqrt(p_hat * (1 - p_hat) / trials + z * z / (4 * trials * trials)) / denom
        low, high = center - half, center + half

    return max(0.0, min(p_hat, low)), min(1.0, max(p_hat, high))


@dataclass(frozen=True)
class WerPoint:
    """
    Word error rate measured at one SNR.

    Essential Fields:
        snr_db: E_b/N_0 per information bit
        trials: Transmitted words
        word_errors: Trials whose decoded information block was wrong
        wer: word_errors / trials
        ci_low, ci_high: 95% confidence interval of wer
        ml_lb_errors: Errors where the output beat the transmitted word
        ml_lb_wer: ml_lb_errors / trials, a lower bound on the ML error rate
        mean_flops: Average decoder operations per trial

    Additional Fields:
        oracle_errors: Brute-force ML errors, when the oracle ran
    """

    snr_db: float
    trials: int
    word_errors: int
    wer: float
    ci_low: float
    ci_high: float
    ml_lb_errors: int
    ml_lb_wer: float
    mean_flops: float
    oracle_errors: Optional[int] = None

    def __post_init__(self):
        """Validate counts."""
        if self.trials < 1:
            raise ValueError(f"A WER point needs at least one trial, got {self.trials}")
        if not (0 <= self.ml_lb_errors <= self.word_errors <= self.trials):
            raise ValueError(
                f"Inconsistent counts: ml_lb_errors={self.ml_lb_errors}, "
                f"word_errors={self.word_errors}, trials={self.trials}"
            )

    @classmethod
    def from_counts(
        cls,
        snr_db: float,
        trials: int,
        word_errors: int,
        ml_lb_errors: int,
        total_flops: int,
        oracle_errors: Optional[int] = None,
    ) -> 'WerPoint':
        """Build a point from raw tallies."""
        low, high = confidence_interval(word_errors, trials)
        return cls(
            snr_db=float(snr_db),
            trials=trials,
            word_errors=word_errors,
            wer=word_errors / trials,
            ci_low=low,
            ci_high=high,
            ml_lb_errors=ml_lb_errors,
            ml_lb_wer=ml_lb_errors / trials,
            mean_flops=total_flops / trials,
            oracle_errors=oracle_errors,
        )

    @property
    def wer_ci95(self) -> Tuple[float, float]:
        return self.ci_low, self.ci_high

    @property
    def solid(self) -> bool:
        """Enough errors for the point to be plotted as solid."""
        return self.word_errors >= SOLID_MIN_ERRORS

    def to_dict(self) -> Dict[str, Any]:
        """Convert point to dictionary."""
        return {
            'snr_db': self.snr_db,
            'trials': self.trials,
            'errors': self.word_errors,
            'wer': self.wer,
            'ci_low': self.ci_low,
            'ci_high': self.ci_high,
            'ml_lb_errors': self.ml_lb_errors,
            'ml_lb_wer': self.ml_lb_wer,
            'mean_flops': self.mean_flops,
            'oracle_errors': self.oracle_errors,
            'solid': self.solid,
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'WerPoint':
        """Create WerPoint from dictionary (JSON record or CSV row)."""
        trials = int(data['trials'])
        if 'ml_lb_errors' in data:
            ml_lb_errors = int(data['ml_lb_errors'])
        else:
            ml_lb_errors = int(round(float(data['ml_lb_wer']) * trials))

        oracle = data.get('oracle_errors')
        return cls(
            snr_db=float(data['snr_db']),
            trials=trials,
            word_errors=int(data['errors']),
            wer=float(data['wer']),
            ci_low=float(data['ci_low']),
            ci_high=float(data['ci_high']),
            ml_lb_errors=ml_lb_errors,
            ml_lb_wer=float(data['ml_lb_wer']),
            mean_flops=float(data['mean_flops']),
            oracle_errors=int(oracle) if oracle is not None else None,
        )

    def __repr__(self) -> str:
        return (f"WerPoint(snr={self.snr_db:.2f} dB, wer={self.wer:.3e}, "
                f"errors={self.word_errors}/{self.trials}, ml_lb={self.ml_lb_wer:.3e})")
