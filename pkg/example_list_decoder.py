"""
Example usage of the decoders.

Sends one word of the (256, 93) code over a noisy channel and decodes it with
the basic recursive decoder, list decoders of growing size and the
permutation decoder.
"""

import numpy as np

from list_decoder import codeword_log_posterior, decode_basic, decode_list
from perm_decoder import build_perm_set, decode_perm
from rm_code import code_params, default_pruning_order, encode
from soft_metrics import AWGNChannel
from sim_harness import basic_flop_bound


def main():
    rng = np.random.default_rng(7)

    # Example 1: Code parameters
    print("=== Example 1: Code {8,3} ===")
    spec = code_params(8, 3)
    print(spec)
    for path in spec.paths[:5]:
        print(f"  {path.label():<20} bits {path.info_offset}..{path.info_offset + path.info_width - 1}")
    print(f"  ... {len(spec.paths)} leaf paths in total")

    # Example 2: One noisy transmission
    print("\n=== Example 2: Basic vs list decoding at 2.0 dB ===")
    channel = AWGNChannel.from_snr(2.0, spec.rate)
    info = rng.integers(0, 2, size=spec.k, dtype=np.uint8)
    codeword = encode(spec, None, info)
    y = channel.posteriors(channel.transmit(codeword, rng))
    print(f"Transmitted word: log P = {codeword_log_posterior(y, codeword):.3f}")

    basic = decode_basic(spec, None, y)
    print(f"basic   correct={np.array_equal(basic.best_info, info)!s:<5} "
          f"log P={basic.best_log_cost:9.3f} flops={basic.flops} (bound {basic_flop_bound(8, 3)})")

    for list_size in (1, 4, 16, 64):
        result = decode_list(spec, None, y, list_size)
        print(f"L={list_size:<5} correct={np.array_equal(result.best_info, info)!s:<5} "
              f"log P={result.best_log_cost:9.3f} flops={result.flops}")

    # Example 3: Permutation decoding
    print("\n=== Example 3: Permutation decoding ===")
    perms = build_perm_set(8, 3)
    print(f"{len(perms)} axis permutations, first: {perms[1].axes}")
    result = decode_perm(spec, y, 16, perms)
    print(f"l=16    correct={np.array_equal(result.best_info, info)!s:<5} "
          f"log P={result.best_log_cost:9.3f} flops={result.flops}")
    print(f"Flop breakdown: {result.flop_breakdown}")

    # Example 4: Subcode
    print("\n=== Example 4: Subcode with 15 frozen bits ===")
    mask = default_pruning_order(spec, 15)
    print(f"k_sub={mask.k_sub}, fully frozen paths: {[p.label() for p in mask.frozen_paths()]}")
    sub_info = rng.integers(0, 2, size=mask.k_sub, dtype=np.uint8)
    channel = AWGNChannel.from_snr(2.0, mask.k_sub / spec.n)
    y = channel.posteriors(channel.transmit(encode(spec, mask, sub_info), rng))
    result = decode_list(spec, mask, y, 16)
    print(f"L=16    correct={np.array_equal(result.best_info, sub_info)} info={result.info_hex}")


if __name__ == "__main__":
    main()
