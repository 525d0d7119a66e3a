"""
Encoder - recursive (u, u+v) encoding and the monomial bit correspondence.

Information bits map one-to-one onto Boolean monomials of degree <= r.
Position i = (i_1, ..., i_m) is read most significant bit first, so axis 1
is the axis split first by the Plotkin construction. A v-branch step on
axis j multiplies the monomial by x_j; inside a full space {h, h} the 2^h
bits follow the standard monomial order (by degree, then lexicographic in
the variable indices). Monomials are stored as bitmasks over position bits.
"""

from functools import lru_cache
from typing import List, Optional, Sequence

import numpy as np

from .code_spec import CodeSpec, code_params
from .errors import LengthMismatchError
from .frozen_mask import FrozenMask


@lru_cache(maxsize=None)
def full_space_monomials(h: int) -> tuple:
    """
    Monomials of the full space {h, h} in standard order.

    Args:
        h: Number of variables

    Returns:
        Tuple of 2^h bitmasks over the h position bits
    """
    def variables(mask: int) -> tuple:
        # variable t (1-based) lives on position bit h - t
        return tuple(t for t in range(1, h + 1) if mask >> (h - t) & 1)

    masks = range(1 << h)
    return tuple(sorted(masks, key=lambda s: (bin(s).count("1"), variables(s))))


@lru_cache(maxsize=None)
def full_space_generator(h: int) -> np.ndarray:
    """Generator of {h, h}: row j is the evaluation of monomial j."""
    positions = np.arange(1 << h)
    rows = [((positions & s) == s) for s in full_space_monomials(h)]
    G = np.array(rows, dtype=np.uint8)
    G.setflags(write=False)
    return G


@lru_cache(maxsize=None)
def full_space_inverse(h: int) -> np.ndarray:
    """
    Inverse of ``full_space_generator`` over GF(2).

    The coefficient of monomial S is the XOR of the codeword bits at the
    positions contained in S (binary Moebius transform).
    """
    positions = np.arange(1 << h)
    cols = [((positions & ~s) == 0) for s in full_space_monomials(h)]
    M = np.array(cols, dtype=np.uint8).T
    M.setflags(write=False)
    return M


@lru_cache(maxsize=None)
def _info_monomials(m: int, r: int) -> np.ndarray:
    spec = code_params(m, r)
    masks: List[int] = []
    for path in spec.paths:
        prefix = 0
        for depth, bit in enumerate(path.bits):
            if bit == 0:
                prefix |= 1 << (m - 1 - depth)
        if path.is_left_end:
            masks.append(prefix)
        else:
            masks.extend(prefix | s for s in full_space_monomials(path.dim))
    table = np.array(masks, dtype=np.int64)
    table.setflags(write=False)
    return table


def info_monomials(spec: CodeSpec) -> np.ndarray:
    """
    Monomial carried by every global information bit.

    Returns:
        Array of k bitmasks over the m position bits
    """
    return _info_monomials(spec.m, spec.r)


@lru_cache(maxsize=None)
def _generator_matrix(m: int, r: int) -> np.ndarray:
    positions = np.arange(1 << m)
    rows = [((positions & s) == s) for s in _info_monomials(m, r)]
    G = np.array(rows, dtype=np.uint8)
    G.setflags(write=False)
    return G


def generator_matrix(spec: CodeSpec) -> np.ndarray:
    """Monomial-basis generator matrix (k x n, entries 0/1)."""
    return _generator_matrix(spec.m, spec.r)


def to_symbols(bits: np.ndarray) -> np.ndarray:
    """Map bits a to symbols (-1)^a."""
    return (1 - 2 * np.asarray(bits, dtype=np.int8)).astype(np.int8)


def to_bits(symbols: np.ndarray) -> np.ndarray:
    """Map +1/-1 symbols back to bits 0/1."""
    return (np.asarray(symbols) < 0).astype(np.uint8)


def _encode_bits(info: np.ndarray, m: int, r: int) -> np.ndarray:
    if r == 0:
        return np.full(1 << m, info[0], dtype=np.uint8)
    if r == m:
        G = full_space_generator(m).astype(np.int64)
        return (info.astype(np.int64) @ G % 2).astype(np.uint8)

    k_v = code_params(m - 1, r - 1).k
    v = _encode_bits(info[:k_v], m - 1, r - 1)
    u = _encode_bits(info[k_v:], m - 1, r)
    return np.concatenate([u, u ^ v])


def encode(
    spec: CodeSpec,
    mask: Optional[FrozenMask],
    info: Sequence[int],
) -> np.ndarray:
    """
    Encode an information block into a +1/-1 codeword.

    Args:
        spec: Code parameters
        mask: Frozen-bit mask of a subcode, or None for the full code
        info: k_sub information bits (k when ``mask`` is None)

    Returns:
        Codeword of length n with entries +1/-1 (int8)

    Raises:
        LengthMismatchError: If ``info`` does not have k_sub entries
    """
    info = np.asarray(info, dtype=np.uint8).ravel()
    if mask is not None:
        mask.check_spec(spec)
        full = mask.expand(info)
    else:
        if info.size != spec.k:
            raise LengthMismatchError(f"Expected {spec.k} information bits, got {info.size}")
        full = info

    if np.any(full > 1):
        raise ValueError("Information bits must be 0 or 1")

    return to_symbols(_encode_bits(full, spec.m, spec.r))


def encode_batch(spec: CodeSpec, info_rows: np.ndarray) -> np.ndarray:
    """
    Encode many full-length information blocks through the generator matrix.

    Args:
        spec: Code parameters
        info_rows: Array of shape (batch, k) with 0/1 entries

    Returns:
        Array of shape (batch, n) with entries 0/1
    """
    info_rows = np.asarray(info_rows, dtype=np.int64)
    if info_rows.ndim != 2 or info_rows.shape[1] != spec.k:
        raise LengthMismatchError(
            f"Expected information rows of width {spec.k}, got shape {info_rows.shape}"
        )
    return (info_rows @ generator_matrix(spec).astype(np.int64) % 2).astype(np.uint8)


def pack_hex(bits: Sequence[int]) -> str:
    """Pack bits into hexadecimal, first bit most significant, zero-padded to whole digits."""
    text = "".join(str(int(b)) for b in bits)
    if not text:
        return ""
    return format(int(text, 2), f"0{(len(text) + 3) // 4}x")


def unpack_hex(text: str, width: int) -> np.ndarray:
    """
    Inverse of ``pack_hex`` for a block of ``width`` bits.

    Raises:
        ValueError: If ``text`` is not hexadecimal or does not fit in ``width`` bits
    """
    value = int(text, 16)
    if value >> width:
        raise ValueError(f"{text!r} does not fit in {width} bits")
    return np.array([(value >> (width - 1 - i)) & 1 for i in range(width)], dtype=np.uint8)
