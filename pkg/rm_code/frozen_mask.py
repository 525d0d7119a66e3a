"""
Frozen Mask - subcodes obtained by fixing information bits to zero.

The recursive decoder protects the leftmost paths the least, so pruning
starts with the path 0^r ending at {m-r, 0}, continues with 0^(r-1)10 and
then follows decoding order. An explicit order can replace the default.
"""

from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from .code_spec import CodeSpec, LeafPath
from .errors import LengthMismatchError, ParameterError


@dataclass(frozen=True)
class FrozenMask:
    """
    Set of global information indices fixed to zero.

    Fields:
        spec: Code the mask applies to
        frozen: Global information indices frozen to zero
    """

    spec: CodeSpec
    frozen: FrozenSet[int]
    free_indices: np.ndarray = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        """Validate indices and cache the free positions."""
        frozen = frozenset(int(i) for i in self.frozen)
        bad = [i for i in frozen if not (0 <= i < self.spec.k)]
        if bad:
            raise ParameterError(
                f"Frozen indices {sorted(bad)} outside information range [0, {self.spec.k})"
            )
        if self.spec.k - len(frozen) < 1:
            raise ParameterError("A subcode must keep at least one information bit")

        free = np.array([i for i in range(self.spec.k) if i not in frozen], dtype=np.int64)
        free.setflags(write=False)
        object.__setattr__(self, 'frozen', frozen)
        object.__setattr__(self, 'free_indices', free)

    @classmethod
    def empty(cls, spec: CodeSpec) -> 'FrozenMask':
        """Mask of the full code."""
        return cls(spec, frozenset())

    @classmethod
    def from_bits(cls, spec: CodeSpec, indices: Iterable[int]) -> 'FrozenMask':
        """Mask freezing an explicit list of information indices."""
        return cls(spec, frozenset(indices))

    @property
    def k_sub(self) -> int:
        """Dimension of the subcode."""
        return self.spec.k - len(self.frozen)

    @property
    def is_empty(self) -> bool:
        return not self.frozen

    def check_spec(self, spec: CodeSpec):
        """Raise if the mask was built for a different code."""
        if (spec.m, spec.r) != (self.spec.m, self.spec.r):
            raise ParameterError(
                f"Mask built for {{{self.spec.m},{self.spec.r}}} used with {{{spec.m},{spec.r}}}"
            )

    def leaf_frozen(self, path: LeafPath) -> Tuple[bool, ...]:
        """Per-bit frozen flags of a leaf, in the leaf's local bit order."""
        return tuple(i in self.frozen for i in range(path.info_offset, path.info_offset + path.info_width))

    def frozen_paths(self) -> List[LeafPath]:
        """Leaf paths whose information bits are all frozen."""
        return [p for p in self.spec.paths if all(self.leaf_frozen(p))]

    def expand(self, info: Sequence[int]) -> np.ndarray:
        """
        Scatter a k_sub-bit block into a full k-bit block with zeros in frozen slots.

        Raises:
            LengthMismatchError: If ``info`` does not have k_sub entries
        """
        info = np.asarray(info, dtype=np.uint8).ravel()
        if info.size != self.k_sub:
            raise LengthMismatchError(f"Expected {self.k_sub} information bits, got {info.size}")
        full = np.zeros(self.spec.k, dtype=np.uint8)
        full[self.free_indices] = info
        return full

    def restrict(self, full: Sequence[int]) -> np.ndarray:
        """Gather the free bits of a full k-bit block."""
        full = np.asarray(full, dtype=np.uint8).ravel()
        if full.size != self.spec.k:
            raise LengthMismatchError(f"Expected {self.spec.k} information bits, got {full.size}")
        return full[self.free_indices]

    def to_dict(self) -> Dict:
        """Convert mask to dictionary."""
        return {
            'm': self.spec.m,
            'r': self.spec.r,
            'k_sub': self.k_sub,
            'frozen': sorted(self.frozen),
        }


def pruning_order(spec: CodeSpec) -> List[int]:
    """
    Built-in order in which information bits are frozen.

    Path 0^r first, then 0^(r-1)10, then every remaining bit in decoding order.
    """
    weakest = (0,) * spec.r
    next_weakest = (0,) * (spec.r - 1) + (1, 0) if spec.r >= 1 else None

    order: List[int] = []
    for bits in (weakest, next_weakest):
        for path in spec.paths:
            if path.bits == bits:
                order.extend(range(path.info_offset, path.info_offset + path.info_width))

    seen = set(order)
    order.extend(i for i in range(spec.k) if i not in seen)
    return order


def default_pruning_order(
    spec: CodeSpec,
    t: int,
    order: Optional[Sequence[int]] = None,
) -> FrozenMask:
    """
    Freeze the first ``t`` information bits of a pruning order.

    Args:
        spec: Code to prune
        t: Number of bits to freeze, 0 <= t <= k-1
        order: Explicit order of information indices (default: built-in order)

    Returns:
        FrozenMask with k_sub = k - t

    Raises:
        ParameterError: If t is out of range or the order is too short
    """
    if not (0 <= t <= spec.k - 1):
        raise ParameterError(f"Cannot freeze {t} bits of a code with k={spec.k}")

    order = list(order) if order is not None else pruning_order(spec)
    if len(set(order[:t])) < t:
        raise ParameterError(f"Pruning order provides fewer than {t} distinct indices")

    return FrozenMask(spec, frozenset(order[:t]))
