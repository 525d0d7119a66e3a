"""
Maximum-likelihood decoding at the leaf codes.

At a leaf the posterior probability of a codeword c is
P(c | y) = prod_i (1 + c_i y_i) / 2, kept here as a natural-log cost.
Candidates are returned best first; equal costs are ordered by the
lexicographically smaller information block.
"""

import heapq
import itertools
import logging
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

import numpy as np

from rm_code.code_spec import LeafPath
from rm_code.encoder import full_space_generator, full_space_inverse, full_space_monomials
from rm_code.errors import ParameterError
from .soft_vector import log_prob_terms

logger = logging.getLogger(__name__)

# exhaustive enumeration inside a leaf is capped at 2^MAX_ENUM_BITS words
MAX_ENUM_BITS = 16


@dataclass(frozen=True)
class LeafCandidate:
    """
    One decoded word of a leaf code.

    Fields:
        info: Local information bits of the leaf
        codeword: Leaf codeword, +1/-1 entries
        log_cost: log P(codeword | y)
    """

    info: Tuple[int, ...]
    codeword: np.ndarray
    log_cost: float

    def __repr__(self) -> str:
        bits = "".join(str(b) for b in self.info)
        return f"LeafCandidate(info={bits}, log_cost={self.log_cost:.6g})"


def _ranked(infos: np.ndarray, bits: np.ndarray, costs: np.ndarray, keep: int) -> List[LeafCandidate]:
    order = sorted(range(len(costs)), key=lambda j: (-costs[j], tuple(infos[j])))
    return [
        LeafCandidate(
            info=tuple(int(b) for b in infos[j]),
            codeword=(1 - 2 * bits[j].astype(np.int8)).astype(np.int8),
            log_cost=float(costs[j]),
        )
        for j in order[:keep]
    ]


def _costs(bits: np.ndarray, lp: np.ndarray, lm: np.ndarray) -> np.ndarray:
    """Log-costs of 0/1 words (rows of ``bits``)."""
    return np.where(bits.astype(bool), lm, lp).sum(axis=-1)


def leaf_ml_repetition(y: np.ndarray) -> List[LeafCandidate]:
    """
    Score both words of the repetition code {g, 0}.

    Args:
        y: Soft vector of length 2^g

    Returns:
        Two candidates (a = 0 -> all +1, a = 1 -> all -1), best first
    """
    lp, lm = log_prob_terms(y)
    n = lp.size
    bits = np.array([np.zeros(n, dtype=np.uint8), np.ones(n, dtype=np.uint8)])
    costs = np.array([lp.sum(), lm.sum()])
    return _ranked(np.array([[0], [1]]), bits, costs, 2)


def _lightest_flip_sets(weights: Sequence[float], count: int) -> List[Tuple[int, ...]]:
    """
    Index sets with the ``count`` smallest sums over ascending ``weights``.

    Best-first walk: each popped set spawns its extension by the next index
    and the variant that moves its last index one step up.
    """
    sets: List[Tuple[int, ...]] = [()]
    if not len(weights):
        return sets

    heap = [(float(weights[0]), (0,))]
    while heap and len(sets) < count:
        total, subset = heapq.heappop(heap)
        sets.append(subset)
        last = subset[-1]
        if last + 1 < len(weights):
            nxt = float(weights[last + 1])
            heapq.heappush(heap, (total + nxt, subset + (last + 1,)))
            heapq.heappush(heap, (total - float(weights[last]) + nxt, subset[:-1] + (last + 1,)))
    return sets


def leaf_ml_fullspace(y: np.ndarray, branch: int = 4) -> List[LeafCandidate]:
    """
    Most probable words of the full space {h, h}.

    The best word is the bitwise sign decision. Flipping a set of positions
    lowers the cost by the sum of their reliabilities |ln P(+) - ln P(-)|, so
    the top ``branch`` words are the ``branch`` lightest flip sets. Only the
    ``branch - 1`` least reliable positions can appear in them.

    Args:
        y: Soft vector of length 2^h
        branch: Number of words to return (capped at 2^(2^h))

    Returns:
        Up to ``branch`` candidates, best first

    Raises:
        ParameterError: If branch < 1 or more than 2^MAX_ENUM_BITS words are asked for
    """
    if branch < 1:
        raise ParameterError(f"branch must be >= 1, got {branch}")

    lp, lm = log_prob_terms(y)
    n = lp.size
    h = n.bit_length() - 1
    hard = (lm > lp).astype(np.uint8)

    n_flip = min(branch - 1, n)
    count = min(branch, 1 << n_flip)
    if count > (1 << MAX_ENUM_BITS):
        raise ParameterError(f"branch={branch} asks for more than 2^{MAX_ENUM_BITS} words of a leaf")

    reliability = np.abs(lp - lm)
    weakest = np.argsort(reliability, kind="stable")[:n_flip]

    flip_sets = _lightest_flip_sets(reliability[weakest], count)
    bits = np.repeat(hard[None, :], len(flip_sets), axis=0)
    for row, subset in enumerate(flip_sets):
        if subset:
            bits[row, weakest[list(subset)]] ^= 1

    infos = (bits.astype(np.int64) @ full_space_inverse(h).astype(np.int64)) % 2
    return _ranked(infos, bits, _costs(bits, lp, lm), branch)


def leaf_ml_parity_trellis(
    y: np.ndarray,
    frozen: Sequence[bool],
    branch: int,
) -> List[LeafCandidate]:
    """
    Most probable words of a partly frozen full space via a list trellis.

    The coefficient of monomial S is the XOR of the bits at the positions
    contained in S, so each frozen coefficient is a parity check on the
    word. The trellis state is the running syndrome of those checks; every
    state keeps its ``branch`` best prefixes and the words ending in the
    all-zero syndrome are the restricted code's best ``branch`` words.

    Args:
        y: Soft vector of length 2^h
        frozen: Per-bit frozen flags in local monomial order
        branch: Number of words to return

    Returns:
        Up to ``branch`` candidates of the restricted code, best first

    Raises:
        ParameterError: If too many bits are frozen or branch < 1
    """
    if branch < 1:
        raise ParameterError(f"branch must be >= 1, got {branch}")

    lp, lm = log_prob_terms(y)
    n = lp.size
    h = n.bit_length() - 1
    monomials = full_space_monomials(h)
    checked = [monomials[j] for j, f in enumerate(frozen) if f]
    if len(checked) > MAX_ENUM_BITS:
        raise ParameterError(f"Cannot build a syndrome trellis over {len(checked)} frozen bits")

    free = len(frozen) - len(checked)
    keep = min(branch, 1 << free)
    if keep > (1 << MAX_ENUM_BITS):
        raise ParameterError(f"branch={branch} asks for more than 2^{MAX_ENUM_BITS} words of a leaf")

    positions = np.arange(n)
    toggles = np.zeros(n, dtype=np.int64)
    for j, s in enumerate(checked):
        toggles |= ((positions & ~s) == 0).astype(np.int64) << j

    n_states = 1 << len(checked)
    states = np.arange(n_states)
    cost = np.full((n_states, keep), -np.inf)
    cost[0, 0] = 0.0
    back_state = np.zeros((n, n_states, keep), dtype=np.int32)
    back_rank = np.zeros((n, n_states, keep), dtype=np.int32)
    back_bit = np.zeros((n, n_states, keep), dtype=np.uint8)

    for i in range(n):
        flipped = states ^ toggles[i]
        both = np.concatenate([cost + lp[i], cost[flipped] + lm[i]], axis=1)
        order = np.argsort(-both, axis=1, kind="stable")[:, :keep]
        cost = np.take_along_axis(both, order, axis=1)
        one = order >= keep
        back_bit[i] = one
        back_rank[i] = np.where(one, order - keep, order)
        back_state[i] = np.where(one, flipped[:, None], states[:, None])

    words = []
    for rank in range(keep):
        if not np.isfinite(cost[0, rank]):
            break
        word = np.zeros(n, dtype=np.uint8)
        state, k = 0, rank
        for i in range(n - 1, -1, -1):
            word[i] = back_bit[i, state, k]
            state, k = int(back_state[i, state, k]), int(back_rank[i, state, k])
        words.append(word)

    bits = np.array(words)
    infos = (bits.astype(np.int64) @ full_space_inverse(h).astype(np.int64)) % 2
    return _ranked(infos, bits, _costs(bits, lp, lm), branch)


def leaf_ml_restricted(
    y: np.ndarray,
    frozen: Sequence[bool],
    branch: int,
) -> List[LeafCandidate]:
    """
    Most probable words of a full space with some information bits fixed to 0.

    Small subcodes are enumerated outright; larger ones with few frozen
    bits go through the syndrome trellis.

    Args:
        y: Soft vector of length 2^h
        frozen: Per-bit frozen flags in local monomial order
        branch: Number of words to return

    Returns:
        Up to ``branch`` candidates of the restricted code, best first

    Raises:
        ParameterError: If both the free and the frozen bits are too many
    """
    lp, lm = log_prob_terms(y)
    h = lp.size.bit_length() - 1
    free = [j for j, f in enumerate(frozen) if not f]
    if len(free) > MAX_ENUM_BITS:
        if len(frozen) - len(free) > MAX_ENUM_BITS:
            raise ParameterError(
                f"Cannot decode a leaf subcode with {len(free)} free and "
                f"{len(frozen) - len(free)} frozen bits"
            )
        return leaf_ml_parity_trellis(y, frozen, branch)

    infos = np.zeros((1 << len(free), 1 << h), dtype=np.int64)
    if free:
        infos[:, free] = np.array(list(itertools.product((0, 1), repeat=len(free))))
    bits = (infos @ full_space_generator(h).astype(np.int64) % 2).astype(np.uint8)
    return _ranked(infos, bits, _costs(bits, lp, lm), branch)


def leaf_candidates(
    y: np.ndarray,
    path: LeafPath,
    frozen: Optional[Sequence[bool]] = None,
    branch: int = 4,
) -> List[LeafCandidate]:
    """
    Candidate words for the leaf at the end of ``path``.

    Args:
        y: Recalculated soft vector arriving at the leaf
        path: Leaf path (left end or right end)
        frozen: Per-bit frozen flags of the leaf, or None
        branch: Words kept at a right end

    Returns:
        Candidates best first; a frozen left end yields only a = 0
    """
    frozen = tuple(frozen) if frozen is not None else (False,) * path.info_width

    if path.is_left_end:
        candidates = leaf_ml_repetition(y)
        if frozen[0]:
            return [c for c in candidates if c.info == (0,)]
        return candidates

    if any(frozen):
        return leaf_ml_restricted(y, frozen, branch)

    if branch > (1 << path.length):
        logger.debug(f"branch={branch} exceeds the {1 << path.length} words of {path.label()}")
    return leaf_ml_fullspace(y, branch)
