from enum import Enum
from fractions import Fraction

from pydantic import BaseModel, ConfigDict, Field


class ScanCase(str, Enum):
    """Ветка Scan, определившая оценку"""
    LOOP = 'loop'
    CHAIN = 'chain'
    PARALLEL = 'parallel'
    THETA = 'theta'
    THREE_HALVES = 'three_halves'
    GENERIC = 'generic'


class DeltaPair(BaseModel):
    """Полуцелая оценка (Δ, Δ̂), хранимая в удвоенных целых.

    Attributes:
        delta2: 2Δ
        delta_hat2: 2Δ̂
    """
    delta2: int = Field(description='Удвоенная оценка Δ')
    delta_hat2: int = Field(description='Удвоенная оценка Δ̂')

    model_config = ConfigDict(frozen=True)

    @classmethod
    def of(cls, delta: Fraction, delta_hat: Fraction) -> "DeltaPair":
        return cls(delta2=int(delta * 2), delta_hat2=int(delta_hat * 2))

    @property
    def delta(self) -> Fraction:
        return Fraction(self.delta2, 2)

    @property
    def delta_hat(self) -> Fraction:
        return Fraction(self.delta_hat2, 2)

    def __add__(self, other: "DeltaPair") -> "DeltaPair":
        return DeltaPair(delta2=self.delta2 + other.delta2, delta_hat2=self.delta_hat2 + other.delta_hat2)

    def __str__(self) -> str:
        return f'({self.delta}, {self.delta_hat})'


ZERO = DeltaPair(delta2=0, delta_hat2=0)
HALF = DeltaPair(delta2=-1, delta_hat2=1)
ONE = DeltaPair(delta2=-2, delta_hat2=2)
THREE_HALVES = DeltaPair(delta2=-3, delta_hat2=3)
