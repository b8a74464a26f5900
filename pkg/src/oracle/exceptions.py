from ..exceptions import InputException, LimitException


class TooLarge(LimitException):
    """Граф слишком велик для полного перебора."""

    def __init__(self, n: int, limit: int) -> None:
        super().__init__(f'Перебор для n={n} запрещен (лимит {limit}, используйте --force)')
        self.n = n
        self.limit = limit


class NotATheta(InputException):
    """Пара (G, e) не является корневой θ-цепью."""
    detail = 'Пара не является корневой θ-цепью'
