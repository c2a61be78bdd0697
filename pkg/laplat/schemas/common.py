import math
from fractions import Fraction
from typing import Optional, Union

from laplat.core.config import settings


def rational(value: Fraction) -> str:
    """Rationals serialize as "num/den" (or a bare integer string)"""
    return str(Fraction(value))


def real(value: Optional[float]) -> Optional[Union[float, str]]:
    """Reals keep SIGNIFICANT_DIGITS significant digits; infinities become strings"""
    if value is None:
        return None
    if math.isinf(value):
        return "inf" if value > 0 else "-inf"
    return float(f"{value:.{settings.SIGNIFICANT_DIGITS}g}")
