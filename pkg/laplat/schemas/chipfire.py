from typing import List, Optional

from pydantic import BaseModel


class EquivalenceResponse(BaseModel):
    equivalent: bool
    witness: Optional[List[int]] = None


class EffectiveResponse(BaseModel):
    effective: bool
    representative: Optional[List[int]] = None
    firing: Optional[List[int]] = None
