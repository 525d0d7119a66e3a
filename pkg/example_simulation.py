"""
Example usage of the simulation harness.

Runs a short WER sweep of the (128, 29) code, writes it to CSV and reads it
back to interpolate the SNR at a target error rate.
"""

from pathlib import Path

from rm_code import code_params
from sim_harness import (
    DecoderConfig,
    DecoderKind,
    SimConfig,
    StopRule,
    load_results,
    snr_at_wer,
    sweep,
)


def main():
    spec = code_params(7, 2)
    out = Path("results") / "example_rm72.csv"

    for decoder in (DecoderConfig(DecoderKind.BASIC), DecoderConfig(DecoderKind.LIST, list_size=8)):
        print(f"=== {decoder.label()} ===")
        config = SimConfig(
            spec=spec,
            decoder=decoder,
            snr_points_db=[1.0, 2.0, 3.0],
            stop_rule=StopRule(min_word_errors=50, max_trials=20_000),
            seed=1,
        )
        points = sweep(config, out=out, progress=True)
        for point in points:
            print(f"  {point}")
        print(f"  SNR at WER 1e-2: {snr_at_wer(points, 1e-2)}")

    _, loaded = load_results(out)
    print(f"\nRead back {len(loaded)} point(s) from {out}")


if __name__ == "__main__":
    main()
