"""
Simulator - Monte Carlo word error rate estimation.

Every trial draws its randomness from a stream keyed by
(seed, point index, trial index), so a trial's outcome does not depend on
which worker ran it. Outcomes are folded in trial order and the point
stops at exactly the trial where the stop rule is met; surplus trials of
the last batch are discarded. Results are therefore identical for any
worker count.
"""

import logging
from dataclasses import dataclass
from functools import partial
from multiprocessing.pool import Pool
from pathlib import Path
from typing import List, Optional

import numpy as np
from tqdm import tqdm

from list_decoder.base import BaseDecoder
from list_decoder.recalc import codeword_log_posterior
from rm_code.encoder import encode
from rm_code.errors import DimensionTooLargeError
from soft_metrics.base import BaseChannel
from .config import SimConfig
from .oracle import MAX_ORACLE_DIM, ml_bruteforce
from .results import OutputFormat, write_results
from .wer_point import WerPoint

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class TrialOutcome:
    """
    Result of one transmitted word.

    Fields:
        word_error: Decoded information block differs from the transmitted one
        ml_lb_error: Decoded codeword is strictly more probable than the transmitted one
        flops: Decoder operations
        oracle_error: Brute-force ML decision was wrong (None when not run)
    """

    word_error: bool
    ml_lb_error: bool
    flops: int
    oracle_error: Optional[bool] = None


def trial_rng(seed: int, point_index: int, trial_index: int) -> np.random.Generator:
    """Independent random stream of one trial."""
    return np.random.default_rng(np.random.SeedSequence([seed, point_index, trial_index]))


def run_trial(
    config: SimConfig,
    decoder: BaseDecoder,
    channel: BaseChannel,
    point_index: int,
    trial_index: int,
) -> TrialOutcome:
    """
    Draw an information block, transmit it and decode it.

    Args:
        config: Simulation configuration
        decoder: Decoder built for ``config``
        channel: Channel at the point's SNR
        point_index: Index of the SNR point in the sweep
        trial_index: Index of the trial within the point

    Returns:
        TrialOutcome of the trial
    """
    rng = trial_rng(config.seed, point_index, trial_index)

    info = rng.integers(0, 2, size=config.k_sub, dtype=np.uint8)
    codeword = encode(config.spec, config.mask, info)
    y = channel.posteriors(channel.transmit(codeword, rng))

    result = decoder.decode(y)
    word_error = not np.array_equal(result.best_info, info)
    ml_lb_error = word_error and (
        codeword_log_posterior(y, result.best_codeword) > codeword_log_posterior(y, codeword)
    )

    oracle_error = None
    if config.oracle:
        ml = ml_bruteforce(config.spec, config.mask, y)
        oracle_error = not np.array_equal(ml.info, info)

    return TrialOutcome(word_error, bool(ml_lb_error), result.flops, oracle_error)


def _run_batch(config: SimConfig, snr_db: float, point_index: int, trial_indices: List[int]) -> List[TrialOutcome]:
    decoder = config.decoder.build(config.spec, config.mask)
    channel = config.channel.make(snr_db, config.rate)
    return [run_trial(config, decoder, channel, point_index, t) for t in trial_indices]


class Simulator:
    """
    Runs the trials of a SimConfig, point by point.

    Use as a context manager when ``config.workers > 1`` so the worker pool
    is shared across points and closed afterwards.
    """

    def __init__(self, config: SimConfig, progress: bool = False):
        if config.oracle and config.k_sub > MAX_ORACLE_DIM:
            raise DimensionTooLargeError(
                f"Oracle requested for k_sub={config.k_sub}; limit is {MAX_ORACLE_DIM}"
            )
        self.config = config
        self.progress = progress
        self._pool: Optional[Pool] = None

    def __enter__(self) -> 'Simulator':
        if self.config.workers > 1:
            self._pool = Pool(self.config.workers)
        return self

    def __exit__(self, *exc):
        if self._pool is not None:
            self._pool.close()
            self._pool.join()
            self._pool = None

    def _outcomes(self, snr_db: float, point_index: int, first: int, count: int) -> List[TrialOutcome]:
        indices = list(range(first, first + count))
        if self._pool is None:
            return _run_batch(self.config, snr_db, point_index, indices)

        workers = self.config.workers
        slices = [indices[w::workers] for w in range(workers) if indices[w::workers]]
        job = partial(_run_batch, self.config, snr_db, point_index)
        by_index = {}
        for part, outcomes in zip(slices, self._pool.map(job, slices)):
            by_index.update(zip(part, outcomes))
        return [by_index[t] for t in indices]

    def run_point(self, snr_db: float, point_index: int = 0) -> WerPoint:
        """
        Collect trials at one SNR until the stop rule is met.

        Args:
            snr_db: E_b/N_0 per information bit
            point_index: Index of the point in the sweep (selects the random streams)

        Returns:
            WerPoint of the collected trials
        """
        rule = self.config.stop_rule
        trials = errors = ml_lb = flops = oracle = 0

        logger.info(f"SNR {snr_db:.3f} dB: decoding with {self.config.decoder.label()}")
        while not rule.reached(trials, errors):
            count = min(self.config.batch_size, rule.max_trials - trials)
            for outcome in self._outcomes(snr_db, point_index, trials, count):
                trials += 1
                errors += outcome.word_error
                ml_lb += outcome.ml_lb_error
                flops += outcome.flops
                oracle += bool(outcome.oracle_error)
                if rule.reached(trials, errors):
                    break

        point = WerPoint.from_counts(
            snr_db, trials, errors, ml_lb, flops,
            oracle_errors=oracle if self.config.oracle else None,
        )
        logger.info(f"SNR {snr_db:.3f} dB: {errors} errors in {trials} trials, WER {point.wer:.3e}")
        if errors < rule.min_word_errors:
            logger.warning(f"SNR {snr_db:.3f} dB stopped at the trial cap with {errors} of {rule.min_word_errors} errors")
        return point

    def sweep(self, out: Optional[Path] = None, fmt: OutputFormat = OutputFormat.CSV) -> List[WerPoint]:
        """
        Run every SNR point of the configuration.

        Args:
            out: Result file to write, or None
            fmt: CSV or JSON

        Returns:
            One WerPoint per SNR value, in configuration order
        """
        snrs = self.config.snr_points_db
        points = [
            self.run_point(snr, index)
            for index, snr in enumerate(tqdm(snrs, desc="SNR", disable=not self.progress))
        ]
        if out is not None:
            write_results(points, out, fmt, self.config)
        return points


def run_point(config: SimConfig, snr_db: float, point_index: int = 0) -> WerPoint:
    """Simulate one SNR point of ``config``."""
    with Simulator(config) as simulator:
        return simulator.run_point(snr_db, point_index)


def sweep(
    config: SimConfig,
    out: Optional[Path] = None,
    fmt: OutputFormat = OutputFormat.CSV,
    progress: bool = False,
) -> List[WerPoint]:
    """Simulate every SNR point of ``config`` and optionally write the table."""
    with Simulator(config, progress=progress) as simulator:
        return simulator.sweep(out, fmt)
