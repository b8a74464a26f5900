from fractions import Fraction

from pydantic import BaseModel, ConfigDict, Field, field_serializer


class ExactReport(BaseModel):
    """Точные значения избытков графа, найденные перебором.

    Attributes:
        n: Число вершин
        n2: Число вершин степени 2
        exc: exc(G)
        exc_with: exc(G, e) с вычтенной двойкой (None, если ребро не задано)
        exc_without: Избыток лучшего покрытия без e
        delta: δ(G, e) = exc_with - (n + n2)/4
        delta_hat: δ̂(G, e) = exc_without - (n + n2)/4
        witness: Ребра оптимального покрытия
        witness_with: Ребра оптимального покрытия через e
        witness_without: Ребра оптимального покрытия без e
    """
    n: int = Field(description='Число вершин')
    n2: int = Field(description='Число вершин степени 2')
    exc: int = Field(description='Минимальный избыток')
    exc_with: int | None = Field(default=None, description='exc(G, e)')
    exc_without: int | None = Field(default=None, description='Избыток без ребра e')
    delta: Fraction | None = Field(default=None, description='δ(G, e)')
    delta_hat: Fraction | None = Field(default=None, description='δ̂(G, e)')
    witness: list[int] = Field(description='Оптимальное покрытие')
    witness_with: list[int] | None = None
    witness_without: list[int] | None = None

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    @field_serializer('delta', 'delta_hat')
    def serialize_fraction(self, value: Fraction | None) -> str | None:
        return None if value is None else str(value)

    @property
    def tight(self) -> bool:
        """δ + δ̂ = 0"""
        return self.delta is not None and self.delta + self.delta_hat == 0


class ClassifyReport(BaseModel):
    """Структурные флаги пары (G, e).

    balanced, minimal и near_minimal равны None, если пара не является
    корневой θ-цепью.
    """
    is_rooted_theta: bool
    tight: bool
    chains_tight: bool | None = None
    balanced: bool | None = None
    minimal: bool | None = None
    near_minimal: bool | None = None
    chain_deltas: list[Fraction] | None = Field(default=None, description='δ замыканий цепей')

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    @field_serializer('chain_deltas')
    def serialize_deltas(self, value: list[Fraction] | None) -> list[str] | None:
        return None if value is None else [str(delta) for delta in value]
