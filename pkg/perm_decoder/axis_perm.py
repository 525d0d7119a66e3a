"""
Axis permutations of E_2^m and the representative set used by the
permutation decoder.

A position i = (i_1, ..., i_m) is read most significant bit first. The
permutation with axis order sigma sends i to the position j whose t-th
coordinate is i_sigma(t). Every such map is an automorphism of every
Reed-Muller code; the monomial x_S becomes x_T with sigma(T) = S, so
information bits are only reordered.
"""

import itertools
from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache
from typing import Dict, Iterator, Tuple

import numpy as np

from rm_code.code_spec import code_params
from rm_code.encoder import info_monomials
from rm_code.errors import LengthMismatchError, ParameterError


class Direction(Enum):
    """Direction of a soft-vector rearrangement."""
    FORWARD = "forward"
    INVERSE = "inverse"


def _axis_bit(m: int, axis: int) -> int:
    # axis 0 is the most significant position bit
    return 1 << (m - 1 - axis)


@dataclass(frozen=True)
class AxisPerm:
    """
    Permutation of the m coordinate axes.

    Essential Fields:
        m: Number of axes
        axes: Original axis (0-based) read at every permuted coordinate

    Derived Fields:
        pos_map: Original position -> permuted position
        inverse_map: Permuted position -> original position
    """

    m: int
    axes: Tuple[int, ...]
    pos_map: np.ndarray = field(init=False, repr=False, compare=False)
    inverse_map: np.ndarray = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        """Validate the axis order and build the position maps."""
        if sorted(self.axes) != list(range(self.m)):
            raise ParameterError(f"{self.axes} is not a permutation of {self.m} axes")

        positions = np.arange(1 << self.m)
        pos_map = np.zeros_like(positions)
        for t, axis in enumerate(self.axes):
            bit = (positions >> (self.m - 1 - axis)) & 1
            pos_map |= bit << (self.m - 1 - t)

        inverse_map = np.empty_like(pos_map)
        inverse_map[pos_map] = positions

        pos_map.setflags(write=False)
        inverse_map.setflags(write=False)
        object.__setattr__(self, 'axes', tuple(int(a) for a in self.axes))
        object.__setattr__(self, 'pos_map', pos_map)
        object.__setattr__(self, 'inverse_map', inverse_map)

    @classmethod
    def identity(cls, m: int) -> 'AxisPerm':
        return cls(m, tuple(range(m)))

    @property
    def is_identity(self) -> bool:
        return self.axes == tuple(range(self.m))

    def map_monomial(self, mask: int) -> int:
        """Original monomial carried by the permuted monomial ``mask``."""
        out = 0
        for t, axis in enumerate(self.axes):
            if mask & _axis_bit(self.m, t):
                out |= _axis_bit(self.m, axis)
        return out

    def info_map(self, r: int) -> np.ndarray:
        """
        Information-index correspondence for the code {m, r}.

        Returns:
            Array whose entry p is the original information index of the
            permuted information bit p
        """
        return _info_map(self.m, r, self.axes)

    def to_dict(self) -> Dict:
        return {'m': self.m, 'axes': [a + 1 for a in self.axes]}


@lru_cache(maxsize=None)
def _info_map(m: int, r: int, axes: Tuple[int, ...]) -> np.ndarray:
    monomials = info_monomials(code_params(m, r))
    index_of = {int(s): q for q, s in enumerate(monomials)}
    perm = AxisPerm(m, axes)
    table = np.array([index_of[perm.map_monomial(int(s))] for s in monomials], dtype=np.int64)
    table.setflags(write=False)
    return table


@dataclass(frozen=True)
class PermSet:
    """
    One axis permutation per class of the unordered set of axes moved
    onto the first r coordinates.

    Fields:
        m: Number of axes
        r: Code order
        reps: Representatives, ordered lexicographically by that axis set
    """

    m: int
    r: int
    reps: Tuple[AxisPerm, ...]

    @property
    def size(self) -> int:
        return len(self.reps)

    def __iter__(self) -> Iterator[AxisPerm]:
        return iter(self.reps)

    def __len__(self) -> int:
        return len(self.reps)

    def __getitem__(self, index: int) -> AxisPerm:
        return self.reps[index]


@lru_cache(maxsize=None)
def build_perm_set(m: int, r: int) -> PermSet:
    """
    Build the representative set for {m, r}.

    For every r-subset S of the axes the representative reads S (ascending)
    on the first r coordinates and the remaining axes (ascending) after it.

    Args:
        m: Number of axes
        r: Code order, 0 < r < m

    Returns:
        PermSet with C(m, r) representatives, the identity first

    Raises:
        ParameterError: If (m, r) is outside 0 < r < m
    """
    if not (isinstance(m, int) and isinstance(r, int) and 0 < r < m):
        raise ParameterError(f"A permutation set needs 0 < r < m, got m={m}, r={r}")

    reps = []
    for subset in itertools.combinations(range(m), r):
        rest = tuple(a for a in range(m) if a not in subset)
        reps.append(AxisPerm(m, subset + rest))
    return PermSet(m, r, tuple(reps))


def identity_perm_set(m: int, r: int) -> PermSet:
    """Permutation set holding only the identity."""
    return PermSet(m, r, (AxisPerm.identity(m),))


def permute_soft(y, perm: AxisPerm, direction: Direction = Direction.FORWARD) -> np.ndarray:
    """
    Rearrange a soft vector by an axis permutation.

    Forward moves the entry at original position i to pos_map[i]; inverse
    undoes it.

    Raises:
        LengthMismatchError: If ``y`` does not have 2^m entries
    """
    y = np.asarray(y)
    if y.shape != (1 << perm.m,):
        raise LengthMismatchError(f"Expected a vector of length {1 << perm.m}, got shape {y.shape}")
    if Direction(direction) is Direction.FORWARD:
        return y[perm.inverse_map]
    return y[perm.pos_map]
