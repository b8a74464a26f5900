from dataclasses import dataclass
from enum import Enum

from ..graph.multigraph import Multigraph
from .exceptions import TrivialChain


class ClosureKind(str, Enum):
    LOOP = 'loop'
    PROPER = 'proper'
    TRIVIAL = 'trivial'


@dataclass(frozen=True)
class ChainBlock:
    """Блок цепи.

    Attributes:
        vertices: Вершины блока по возрастанию
        edges: Ребра внутри блока
        entry: Вершина, в которую входит предыдущее разрезающее ребро (x_i)
        exit: Вершина, из которой выходит следующее разрезающее ребро (y_i)
    """
    vertices: tuple[int, ...]
    edges: frozenset[int]
    entry: int
    exit: int

    @property
    def is_singleton(self) -> bool:
        return len(self.vertices) == 1


@dataclass(frozen=True)
class ChainClosure:
    """Замыкание цепи или блока цепи.

    Для тривиальной цепи graph и root равны None, а exc, delta и
    delta_hat по определению нулевые.

    Attributes:
        graph: Граф замыкания
        root: id корневого ребра
        kind: loop, proper или trivial
    """
    graph: Multigraph | None
    root: int | None
    kind: ClosureKind

    @classmethod
    def trivial(cls) -> "ChainClosure":
        return cls(None, None, ClosureKind.TRIVIAL)

    @classmethod
    def of(cls, graph: Multigraph, root: int) -> "ChainClosure":
        kind = ClosureKind.LOOP if graph.n == 1 else ClosureKind.PROPER
        return cls(graph, root, kind)


@dataclass(frozen=True)
class SubcubicChain:
    """Подкубическая цепь x e_0 B_1 e_1 ... B_k e_k y внутри графа host.

    Цепи, полученные из замыкания (as_chain_closure), не имеют концов x, y
    и концевых ребер: эти поля равны None.

    Attributes:
        host: Граф, в котором лежит цепь
        blocks: Блоки B_1..B_k
        links: Внутренние разрезающие ребра e_1..e_{k-1}
        x: Начальный конец цепи
        y: Конечный конец цепи
        head: Ребро e_0
        tail: Ребро e_k (для тривиальной цепи совпадает с head)
    """
    host: Multigraph
    blocks: tuple[ChainBlock, ...]
    links: tuple[int, ...]
    x: int | None = None
    y: int | None = None
    head: int | None = None
    tail: int | None = None

    @property
    def is_trivial(self) -> bool:
        return not self.blocks

    @property
    def k(self) -> int:
        return len(self.blocks)

    @property
    def interior(self) -> tuple[int, ...]:
        """Вершины цепи без концов x, y"""
        return tuple(sorted(v for block in self.blocks for v in block.vertices))

    @property
    def first(self) -> int:
        """x_1 - вход первого блока"""
        if self.is_trivial:
            raise TrivialChain
        return self.blocks[0].entry

    @property
    def last(self) -> int:
        """y_k - выход последнего блока"""
        if self.is_trivial:
            raise TrivialChain
        return self.blocks[-1].exit

    def cut_edge(self, index: int) -> int:
        """Разрезающее ребро e_index, 0 <= index <= k"""
        if index == 0:
            return self.head
        if index == self.k:
            return self.tail
        return self.links[index - 1]

    def closure(self, root_id: int | None = None) -> ChainClosure:
        """Замыкание цепи: C - {x, y} + x_1 y_k.

        Args:
            root_id: id корневого ребра; по умолчанию первый свободный id host
        """
        if self.is_trivial:
            return ChainClosure.trivial()
        edges = set(self.links)
        for block in self.blocks:
            edges |= block.edges
        graph, root = self.host.subgraph(self.interior, edges).with_edge(self.first, self.last, root_id)
        return ChainClosure.of(graph, root)

    def reversed(self) -> "SubcubicChain":
        """Та же цепь, прочитанная от y к x"""
        blocks = tuple(
            ChainBlock(block.vertices, block.edges, block.exit, block.entry)
            for block in reversed(self.blocks)
        )
        return SubcubicChain(
            host=self.host,
            blocks=blocks,
            links=tuple(reversed(self.links)),
            x=self.y,
            y=self.x,
            head=self.tail,
            tail=self.head,
        )

    def split_at_block(self, index: int) -> tuple["SubcubicChain", "SubcubicChain"]:
        """Разрезает цепь вокруг блока B_{index+1}.

        Возвращает цепи x e_0 ... e_{index} x_{index+1} и
        y_{index+1} e_{index+1} ... e_k y; сам блок в них не входит.
        """
        block = self.blocks[index]
        left = SubcubicChain(
            host=self.host,
            blocks=self.blocks[:index],
            links=tuple(self.cut_edge(j) for j in range(1, index)),
            x=self.x,
            y=block.entry,
            head=self.head,
            tail=self.cut_edge(index),
        )
        right = SubcubicChain(
            host=self.host,
            blocks=self.blocks[index + 1:],
            links=tuple(self.cut_edge(j) for j in range(index + 2, self.k)),
            x=block.exit,
            y=self.y,
            head=self.cut_edge(index + 1),
            tail=self.tail,
        )
        return left, right
