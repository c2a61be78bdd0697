from dataclasses import dataclass
from enum import Enum
from typing import Tuple


class FiringDirection(str, Enum):
    LEND = "lend"
    BORROW = "borrow"


@dataclass(frozen=True)
class Configuration:
    """Integer number of chips on every vertex"""

    chips: Tuple[int, ...]

    @property
    def degree(self) -> int:
        return sum(self.chips)

    def is_effective(self) -> bool:
        return all(c >= 0 for c in self.chips)
