from dataclasses import dataclass
from typing import Tuple

from laplat.models.graph import Multigraph


@dataclass(frozen=True)
class CensusClass:
    """All enumerated graphs sharing one Laplacian lattice"""

    hnf: Tuple[Tuple[int, ...], ...]
    trees: int
    graphs: Tuple[Multigraph, ...]
    distinct_polytopes: int

    @property
    def size(self) -> int:
        return len(self.graphs)

    @property
    def has_complete_skeleton(self) -> bool:
        return any(g.is_complete_skeleton() for g in self.graphs)
