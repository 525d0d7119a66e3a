"""
Record - one surviving list-decoding hypothesis.
"""

from dataclasses import dataclass, field
from typing import Dict, Optional, Tuple

import numpy as np


@dataclass(frozen=True)
class Record:
    """
    Partial decoding hypothesis.

    Essential Fields:
        info: Decided information bits in decoding order (frozen slots hold 0)
        log_cost: log rho(info), the product of leaf posteriors so far
        y_stack: Soft vectors from the root down to the current node
        v_hats: Decided v-codeword of every node on the stack whose
            v-subtree is complete (None elsewhere)

    Additional Fields:
        codeword: Full +1/-1 codeword once every leaf is decided
        branch: Index of the permuted input the record descends from
    """

    info: Tuple[int, ...]
    log_cost: float
    y_stack: Tuple[np.ndarray, ...] = field(repr=False)
    v_hats: Tuple[Optional[np.ndarray], ...] = field(repr=False)
    codeword: Optional[np.ndarray] = field(default=None, repr=False)
    branch: int = 0

    @classmethod
    def initial(cls, y: np.ndarray, branch: int = 0) -> 'Record':
        """Root record: empty prefix, cost log 1 = 0, state y."""
        return cls(info=(), log_cost=0.0, y_stack=(y,), v_hats=(None,), branch=branch)

    @property
    def depth(self) -> int:
        """Depth of the node the record currently sits at."""
        return len(self.y_stack) - 1

    @property
    def is_complete(self) -> bool:
        return self.codeword is not None

    def to_dict(self) -> Dict:
        """Convert record to dictionary (state vectors omitted)."""
        return {
            'info': "".join(str(b) for b in self.info),
            'log_cost': self.log_cost,
            'branch': self.branch,
        }

    def __repr__(self) -> str:
        return (f"Record(bits={len(self.info)}, log_cost={self.log_cost:.6g}, "
                f"depth={self.depth}, branch={self.branch})")
