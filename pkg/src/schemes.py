from fractions import Fraction
from math import floor

from pydantic import BaseModel, ConfigDict, Field, field_serializer


class SolveCertificate(BaseModel):
    """Сертификат решения: обход длины n + exc - 2 не длиннее (5n + n2)/4 - 1.

    Attributes:
        n: Число вершин
        n2: Число вершин степени 2
        exc: Избыток найденного покрытия
        walk_len: Длина обхода
        bound_raw: Рациональная оценка (5n + n2)/4 - 1
    """
    n: int = Field(description='Число вершин')
    n2: int = Field(description='Число вершин степени 2')
    exc: int = Field(description='Избыток покрытия')
    walk_len: int = Field(description='Длина обхода')
    bound_raw: Fraction = Field(description='(5n + n2)/4 - 1')

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    @classmethod
    def of(cls, n: int, n2: int, exc: int, walk_len: int) -> "SolveCertificate":
        return cls(n=n, n2=n2, exc=exc, walk_len=walk_len, bound_raw=Fraction(5 * n + n2, 4) - 1)

    @field_serializer('bound_raw')
    def serialize_bound(self, value: Fraction) -> str:
        return str(value)

    @property
    def bound(self) -> int:
        """Целая оценка: длины целые, поэтому берется пол"""
        return floor(self.bound_raw)

    @property
    def holds(self) -> bool:
        return self.walk_len <= self.bound

    def line(self) -> str:
        """Строка сертификата для вывода solve"""
        return (
            f'n={self.n} n2={self.n2} exc={self.exc} walk_len={self.walk_len} '
            f'bound={self.bound} bound_raw={self.bound_raw}'
        )
