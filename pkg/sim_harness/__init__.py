"""
Simulation Harness Package

Monte Carlo WER estimation with ML lower-bound accounting, a brute-force
ML oracle, result tables and operation counts.
"""

from .config import ChannelConfig, DecoderConfig, DecoderKind, SimConfig, StopRule
from .wer_point import CIMethod, WerPoint, confidence_interval
from .oracle import MAX_ORACLE_DIM, OracleResult, ml_bruteforce
from .results import OutputFormat, load_results, points_to_frame, snr_at_wer, write_results
from .complexity import basic_flop_bound, flop_breakdown, flop_report, list_flop_bound
from .simulator import Simulator, TrialOutcome, run_point, run_trial, sweep, trial_rng

__all__ = [
    'ChannelConfig',
    'DecoderConfig',
    'DecoderKind',
    'SimConfig',
    'StopRule',
    'CIMethod',
    'WerPoint',
    'confidence_interval',
    'MAX_ORACLE_DIM',
    'OracleResult',
    'ml_bruteforce',
    'OutputFormat',
    'load_results',
    'points_to_frame',
    'snr_at_wer',
    'write_results',
    'basic_flop_bound',
    'flop_breakdown',
    'flop_report',
    'list_flop_bound',
    'Simulator',
    'TrialOutcome',
    'run_point',
    'run_trial',
    'sweep',
    'trial_rng',
]
