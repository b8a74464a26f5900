from typing import MutableSequence, TypeVar

from .exceptions import BadSeed

MASK64 = (1 << 64) - 1

T = TypeVar('T')


class SplitMix64:
    """Генератор splitmix64: одинаковое зерно дает одинаковый поток на любой платформе.

    Attributes:
        state: Текущее 64-битное состояние
    """

    def __init__(self, seed: int) -> None:
        if not 0 <= seed <= MASK64:
            raise BadSeed(seed)
        self.state = seed

    def next(self) -> int:
        """Следующее 64-битное число"""
        self.state = (self.state + 0x9E3779B97F4A7C15) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def below(self, bound: int) -> int:
        """Равномерное число из 0..bound-1 (отбраковка хвоста)"""
        if bound < 1:
            raise ValueError(f'Граница {bound} должна быть положительной')
        limit = ((MASK64 + 1) // bound) * bound
        while True:
            value = self.next()
            if value < limit:
                return value % bound

    def shuffle(self, items: MutableSequence[T]) -> None:
        """Перемешивание Фишера-Йетса на месте"""
        for i in range(len(items) - 1, 0, -1):
            j = self.below(i + 1)
            items[i], items[j] = items[j], items[i]
