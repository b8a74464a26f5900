from ..exceptions import InternalException


class NotAChainCase(InternalException):
    """Пара (G, e) не является замыканием цепи с k >= 2."""
    detail = 'Пара не является замыканием подкубической цепи'


class TrivialChain(InternalException):
    """Операция не определена для тривиальной цепи (одного ребра)."""
    detail = 'Цепь тривиальна'


class BadPrecondition(InternalException):
    """Нарушено предусловие структурной декомпозиции."""
    detail = 'Нарушено предусловие декомпозиции'
