"""
Result tables - CSV/JSON export of WER points and SNR interpolation.
"""

import json
import logging
from enum import Enum
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, Tuple

import numpy as np
import pandas as pd

from rm_code.errors import ResultsWriteError
from .wer_point import WerPoint

logger = logging.getLogger(__name__)

CSV_COLUMNS = ['snr_db', 'trials', 'errors', 'wer', 'ci_low', 'ci_high', 'ml_lb_wer', 'mean_flops']
FLOAT_FORMAT = "%.17g"


class OutputFormat(Enum):
    """Result file formats."""
    CSV = "csv"
    JSON = "json"


def points_to_frame(points: Sequence[WerPoint]) -> pd.DataFrame:
    """Tabulate points with the CSV column layout."""
    rows = [{column: p.to_dict()[column] for column in CSV_COLUMNS} for p in points]
    return pd.DataFrame(rows, columns=CSV_COLUMNS)


def _json_float(x: float) -> str:
    text = format(x, '.17g')
    if text.lstrip('-').isdigit():
        text += '.0'
    return text


def _json_text(value: Any, level: int = 0) -> str:
    """Indented JSON with finite floats at 17 significant digits."""
    pad, close = "  " * (level + 1), "  " * level
    if isinstance(value, float) and np.isfinite(value):
        return _json_float(float(value))
    if isinstance(value, dict):
        if not value:
            return "{}"
        items = [f"{pad}{json.dumps(str(k))}: {_json_text(v, level + 1)}" for k, v in value.items()]
        return "{\n" + ",\n".join(items) + "\n" + close + "}"
    if isinstance(value, (list, tuple)):
        if not value:
            return "[]"
        items = [f"{pad}{_json_text(v, level + 1)}" for v in value]
        return "[\n" + ",\n".join(items) + "\n" + close + "]"
    return json.dumps(value)


def write_results(
    points: Sequence[WerPoint],
    path,
    fmt: OutputFormat = OutputFormat.CSV,
    config=None,
) -> Path:
    """
    Write points to ``path``.

    CSV holds the table only. JSON holds the same records plus a config
    echo block. Both write floats with 17 significant digits.

    Args:
        points: WER points in sweep order
        path: Output file
        fmt: CSV or JSON
        config: SimConfig echoed into JSON output

    Returns:
        Path of the written file

    Raises:
        ResultsWriteError: On any I/O failure, naming the path
    """
    path = Path(path)
    fmt = OutputFormat(fmt)
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        if fmt is OutputFormat.CSV:
            points_to_frame(points).to_csv(path, index=False, float_format=FLOAT_FORMAT)
        else:
            data = {
                'config': config.to_dict() if config is not None else None,
                'points': [p.to_dict() for p in points],
            }
            with open(path, 'w') as f:
                f.write(_json_text(data) + "\n")
    except OSError as e:
        raise ResultsWriteError(str(path), e.strerror or str(e)) from e

    logger.info(f"Wrote {len(points)} point(s) to {path}")
    return path


def load_results(path) -> Tuple[Optional[Dict[str, Any]], List[WerPoint]]:
    """
    Read a result file written by ``write_results``.

    Returns:
        (config echo or None, points)
    """
    path = Path(path)
    if path.suffix.lower() == ".json":
        with open(path, 'r') as f:
            data = json.load(f)
        return data.get('config'), [WerPoint.from_dict(p) for p in data['points']]

    frame = pd.read_csv(path, float_precision='round_trip')
    return None, [WerPoint.from_dict(row) for row in frame.to_dict(orient='records')]


def snr_at_wer(points: Sequence[WerPoint], target: float) -> Optional[float]:
    """
    SNR at which the WER curve crosses ``target``.

    log10(WER) is interpolated linearly between the two points that bracket
    the target; points without errors cannot be interpolated and are skipped.

    Returns:
        Interpolated SNR in dB, or None if no pair of points brackets the target
    """
    if not (0 < target < 1):
        raise ValueError(f"Target WER must lie in (0, 1), got {target}")

    usable = sorted((p for p in points if p.wer > 0), key=lambda p: p.snr_db)
    log_target = np.log10(target)

    for a, b in zip(usable, usable[1:]):
        if a.wer == target:
            return a.snr_db
        if a.wer > target >= b.wer:
            la, lb = np.log10(a.wer), np.log10(b.wer)
            return float(a.snr_db + (log_target - la) * (b.snr_db - a.snr_db) / (lb - la))

    if usable and usable[-1].wer == target:
        return usable[-1].snr_db
    return None
