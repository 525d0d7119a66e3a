"""
Command-line front end.

    info           code parameters and the leaf-path table
    encode         information block -> +1/-1 codeword
    decode         soft-vector file -> decoded information block
    ml-bruteforce  soft-vector file -> maximum-likelihood information block
    simulate       WER sweep from a recipe file and/or flags

Exit codes: 0 success, 2 usage or parameter error, 1 runtime failure.
Errors are printed to standard error as one JSON object per line.
"""

import argparse
import json
import logging
import sys
from datetime import datetime
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, Tuple

import numpy as np

from list_decoder.recalc import RecalcRule
from rm_code.code_spec import CodeSpec, code_params
from rm_code.encoder import encode, pack_hex, unpack_hex
from rm_code.frozen_mask import FrozenMask, default_pruning_order
from sim_harness.config import ChannelConfig, DecoderConfig, DecoderKind, SimConfig, StopRule
from sim_harness.oracle import ml_bruteforce
from sim_harness.results import FLOAT_FORMAT, OutputFormat, points_to_frame, snr_at_wer
from sim_harness.simulator import sweep
from soft_metrics.channel import ChannelKind
from . import __version__
from .config_file import load_recipe, validate_recipe
from .manifest import RunManifest

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_RUNTIME = 1
EXIT_USAGE = 2

DEFAULT_LIST_SIZE = 16


class UsageError(ValueError):
    """Malformed command line."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _index_list(text) -> List[int]:
    if isinstance(text, (list, tuple)):
        return [int(i) for i in text]
    try:
        return [int(tok) for tok in str(text).replace(",", " ").split()]
    except ValueError:
        raise UsageError(f"Invalid index list {text!r}") from None


def parse_snr_range(text) -> List[float]:
    """
    Expand ``start:stop:step`` (or a [start, stop, step] list) into SNR points, stop included.
    """
    parts = text if isinstance(text, (list, tuple)) else str(text).split(":")
    try:
        start, stop, step = (float(p) for p in parts)
    except (TypeError, ValueError):
        raise UsageError(f"SNR range must be start:stop:step, got {text!r}") from None
    if step <= 0 or stop < start:
        raise UsageError(f"SNR range {text!r} is empty")

    count = int(np.floor((stop - start) / step + 1e-9)) + 1
    return [round(start + i * step, 10) for i in range(count)]


def build_code(
    m: Optional[int],
    r: Optional[int],
    prune: Optional[int] = None,
    prune_order=None,
) -> Tuple[CodeSpec, Optional[FrozenMask]]:
    """Code and optional subcode mask from command-line or recipe values."""
    if m is None or r is None:
        raise UsageError("--m and --r are required")
    spec = code_params(m, r)

    order = _index_list(prune_order) if prune_order is not None else None
    t = prune if prune is not None else (len(order) if order is not None else 0)
    if t == 0:
        return spec, None
    return spec, default_pruning_order(spec, t, order)


def read_soft_vector(path) -> np.ndarray:
    """
    Read a vector of reals separated by whitespace or commas.

    Raises:
        ValueError: If a token is not a number
    """
    text = Path(path).read_text()
    values = []
    for token in text.replace(",", " ").split():
        try:
            values.append(float(token))
        except ValueError:
            raise ValueError(f"Malformed soft vector file {path}: token {token!r}") from None
    return np.array(values, dtype=np.float64)


def parse_info(text: str, width: int) -> np.ndarray:
    """Information block given as ``0x``-prefixed hexadecimal or as a 0/1 string."""
    text = text.strip()
    if text.lower().startswith("0x"):
        return unpack_hex(text[2:], width)
    if set(text) <= {"0", "1"} and len(text) == width:
        return np.array([int(c) for c in text], dtype=np.uint8)
    raise ValueError(f"Information block must be 0x<hex> or {width} binary digits, got {text!r}")


def _decoder_config(args, recipe: Optional[Dict[str, Any]] = None) -> Tuple[DecoderConfig, List[int]]:
    """Resolve decoder flags over recipe values; returns the base config and the list sizes."""
    recipe = recipe or {}
    kind = DecoderKind((args.decoder or recipe.get('kind') or DecoderKind.LIST.value).lower())

    flag = args.L if kind is DecoderKind.LIST else args.l if kind is DecoderKind.PERM else None
    if flag is not None:
        sizes = [flag]
    else:
        value = recipe.get('list_size', 1 if kind is DecoderKind.BASIC else DEFAULT_LIST_SIZE)
        sizes = [int(v) for v in value] if isinstance(value, list) else [int(value)]
    if not sizes:
        raise UsageError("decoder.list_size must not be empty")

    branch = args.branch if args.branch is not None else recipe.get('branch', 4)
    recalc = RecalcRule((args.recalc or recipe.get('recalc') or RecalcRule.EXACT.value).lower())
    return DecoderConfig(kind, sizes[0], branch, recalc), sizes


def _print_lines(lines: Sequence[str]):
    sys.stdout.write("".join(line + "\n" for line in lines))


def cmd_info(args) -> int:
    """Print n, k, d and the leaf paths; with pruning also k_sub and the frozen paths."""
    spec, mask = build_code(args.m, args.r, args.prune, args.prune_order)

    lines = [f"n={spec.n} k={spec.k} d={spec.d}", f"rate={spec.rate:.6f}", f"paths={len(spec.paths)}"]
    for path in spec.paths:
        lines.append(f"  {path.index:4d}  {path.label():<24} {path.kind.value:<9} "
                     f"width={path.info_width} offset={path.info_offset}")

    if mask is not None:
        frozen = mask.frozen_paths()
        lines.append(f"k_sub={mask.k_sub}")
        lines.append(f"frozen_bits={len(mask.frozen)} frozen_paths={len(frozen)}")
        lines.extend(f"  {p.index:4d}  {p.label()}" for p in frozen)

    _print_lines(lines)
    return EXIT_OK


def cmd_encode(args) -> int:
    """Print the +1/-1 codeword of an information block."""
    spec, mask = build_code(args.m, args.r, args.prune, args.prune_order)
    width = mask.k_sub if mask is not None else spec.k
    codeword = encode(spec, mask, parse_info(args.info, width))
    _print_lines([" ".join(str(int(s)) for s in codeword)])
    return EXIT_OK


def cmd_decode(args) -> int:
    """Decode a soft-vector file and print the best information block."""
    spec, mask = build_code(args.m, args.r, args.prune, args.prune_order)
    config, _ = _decoder_config(args)
    decoder = config.build(spec, mask)

    result = decoder.decode(read_soft_vector(args.input))
    _print_lines([
        f"info={result.info_hex}",
        f"bits={''.join(str(int(b)) for b in result.best_info)}",
        f"log_cost={result.best_log_cost:.17g}",
        f"flops={result.flops}",
    ])
    return EXIT_OK


def cmd_ml_bruteforce(args) -> int:
    """Exhaustive maximum-likelihood decision for a soft-vector file."""
    spec, mask = build_code(args.m, args.r, args.prune, args.prune_order)
    info, _, log_cost = ml_bruteforce(spec, mask, read_soft_vector(args.input))
    _print_lines([
        f"info={pack_hex(info)}",
        f"bits={''.join(str(int(b)) for b in info)}",
        f"log_cost={log_cost:.17g}",
    ])
    return EXIT_OK


def _snr_points(args, sweep_section: Dict[str, Any]) -> List[float]:
    if args.snr:
        return [float(s) for s in args.snr]
    if args.snr_range:
        return parse_snr_range(args.snr_range)
    if 'snr' in sweep_section:
        snr = sweep_section['snr']
        return [float(s) for s in snr] if isinstance(snr, list) else [float(snr)]
    if 'snr_range' in sweep_section:
        return parse_snr_range(sweep_section['snr_range'])
    return []


def _pick(flag, section: Dict[str, Any], key: str, default):
    return flag if flag is not None else section.get(key, default)


def _series_path(out: Path, label: str, series: int) -> Path:
    return out if series == 1 else out.with_name(f"{out.stem}_{label}{out.suffix}")


def cmd_simulate(args) -> int:
    """Run a WER sweep and write the results with a manifest."""
    recipe = load_recipe(args.config) if args.config else validate_recipe({})
    code, sweep_section, output = recipe['code'], recipe['sweep'], recipe['output']

    spec, mask = build_code(
        _pick(args.m, code, 'm', None),
        _pick(args.r, code, 'r', None),
        _pick(args.prune, code, 'prune', None),
        _pick(args.prune_order, code, 'prune_order', None),
    )
    base, sizes = _decoder_config(args, recipe['decoder'])
    channel = ChannelConfig(_pick(args.channel, recipe['channel'], 'kind', ChannelKind.AWGN.value))
    stop_rule = StopRule(
        _pick(args.min_errors, sweep_section, 'min_word_errors', StopRule.min_word_errors),
        _pick(args.max_trials, sweep_section, 'max_trials', StopRule.max_trials),
    )
    seed = _pick(args.seed, sweep_section, 'seed', 0)
    target = _pick(args.target_wer, sweep_section, 'target_wer', None)

    out = _pick(args.out, output, 'path', None)
    out = Path(out) if out is not None else None
    fmt_name = args.format or output.get('format')
    if fmt_name is None:
        fmt_name = 'json' if out is not None and out.suffix.lower() == '.json' else 'csv'
    fmt = OutputFormat(fmt_name.lower())

    started = datetime.now()
    echoes, outputs, lines = [], [], []
    for size in sizes:
        decoder = DecoderConfig(base.kind, size, base.branch, base.recalc)
        config = SimConfig(
            spec=spec,
            mask=mask,
            decoder=decoder,
            channel=channel,
            snr_points_db=_snr_points(args, sweep_section),
            stop_rule=stop_rule,
            seed=seed,
            workers=_pick(args.workers, sweep_section, 'workers', 1),
            oracle=args.oracle or sweep_section.get('oracle', False),
            batch_size=sweep_section.get('batch_size', 256),
        )
        prefix = "l" if base.kind is DecoderKind.PERM else "L"
        target_path = _series_path(out, f"{prefix}{size}", len(sizes)) if out is not None else None
        points = sweep(config, target_path, fmt, progress=args.progress)
        echoes.append(config.to_dict())

        if target_path is not None:
            outputs.append(str(target_path))
        else:
            if len(sizes) > 1:
                lines.append(f"# {decoder.label()}")
            lines.append(points_to_frame(points).to_csv(index=False, float_format=FLOAT_FORMAT).rstrip("\n"))

        if target is not None:
            snr = snr_at_wer(points, float(target))
            lines.append(f"snr_at_wer[{decoder.label()}]={'none' if snr is None else format(snr, '.4f')}")

    if out is not None:
        manifest = RunManifest(
            config=echoes,
            version=__version__,
            seed=seed,
            started=started,
            finished=datetime.now(),
            outputs=outputs,
            argv=list(args.argv),
        )
        manifest.save(RunManifest.manifest_path(out))
        logger.info(f"Manifest written to {RunManifest.manifest_path(out)}")

    if lines:
        _print_lines(lines)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    """Argument parser with one subcommand per operation."""
    code = _Parser(add_help=False)
    code.add_argument('--m', type=int, help='number of variables, n = 2^m')
    code.add_argument('--r', type=int, help='code order')
    code.add_argument('--prune', type=int, help='information bits frozen to zero')
    code.add_argument('--prune-order', help='explicit comma-separated pruning order of information indices')

    decoding = _Parser(add_help=False)
    decoding.add_argument('--decoder', choices=[k.value for k in DecoderKind])
    decoding.add_argument('--L', type=int, help='list size of the list decoder')
    decoding.add_argument('--l', type=int, help='list size of the permutation decoder')
    decoding.add_argument('--branch', type=int, help='leaf words tried at a full-space leaf (2 or 4)')
    decoding.add_argument('--recalc', choices=[r.value for r in RecalcRule])

    parser = _Parser(prog='rmlist', description='Recursive list decoding of Reed-Muller codes')
    parser.add_argument('--verbose', action='store_true', help='debug logging')
    commands = parser.add_subparsers(dest='command', required=True)

    info = commands.add_parser('info', parents=[code], help='code parameters and leaf paths')
    info.set_defaults(func=cmd_info)

    enc = commands.add_parser('encode', parents=[code], help='encode an information block')
    enc.add_argument('--info', required=True, help='0x<hex> or a string of k_sub binary digits')
    enc.set_defaults(func=cmd_encode)

    dec = commands.add_parser('decode', parents=[code, decoding], help='decode a soft-vector file')
    dec.add_argument('input', help='file of n posterior differences in [-1, 1]')
    dec.set_defaults(func=cmd_decode)

    ml = commands.add_parser('ml-bruteforce', parents=[code], help='exhaustive ML decoding')
    ml.add_argument('input', help='file of n posterior differences in [-1, 1]')
    ml.set_defaults(func=cmd_ml_bruteforce)

    sim = commands.add_parser('simulate', parents=[code, decoding], help='WER sweep')
    sim.add_argument('--config', help='TOML recipe')
    sim.add_argument('--channel', choices=[c.value for c in ChannelKind])
    sim.add_argument('--snr', type=float, nargs='+', help='E_b/N_0 points in dB')
    sim.add_argument('--snr-range', help='start:stop:step in dB, stop included')
    sim.add_argument('--seed', type=int)
    sim.add_argument('--workers', type=int)
    sim.add_argument('--min-errors', type=int, help='word errors collected per point')
    sim.add_argument('--max-trials', type=int, help='trial cap per point')
    sim.add_argument('--oracle', action='store_true', help='also run brute-force ML on every trial')
    sim.add_argument('--target-wer', type=float, help='report the SNR where WER crosses this value')
    sim.add_argument('--out', help='result file')
    sim.add_argument('--format', choices=[f.value for f in OutputFormat])
    sim.add_argument('--progress', action='store_true', help='progress bar on standard error')
    sim.set_defaults(func=cmd_simulate)

    return parser


def _report(error: BaseException):
    sys.stderr.write(json.dumps({'error': type(error).__name__, 'message': str(error)}) + "\n")


def main(argv: Optional[Sequence[str]] = None) -> int:
    """
    Run the command line.

    Args:
        argv: Arguments without the program name (default: sys.argv[1:])

    Returns:
        Process exit code
    """
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        args = build_parser().parse_args(argv)
        args.argv = argv
        logging.basicConfig(
            level=logging.DEBUG if args.verbose else logging.WARNING,
            format="%(asctime)s %(levelname)s %(name)s: %(message)s",
            stream=sys.stderr,
        )
        return args.func(args)
    except ValueError as e:
        _report(e)
        return EXIT_USAGE
    except Exception as e:
        logger.debug("Runtime failure", exc_info=True)
        _report(e)
        return EXIT_RUNTIME
