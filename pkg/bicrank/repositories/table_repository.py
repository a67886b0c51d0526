from typing import Tuple, Union

from ..models import BicrankTable, ClassCountTable
from .base_repository import OrderedCacheRepository

Table = Union[BicrankTable, ClassCountTable]


class TableRepository(OrderedCacheRepository[Tuple[str, int], Table]):
    """Memoriza tablas de bicrank completas ('full', 0) y por módulo ('mod', k)"""

    def _truncate(self, value: Table, order: int) -> Table:
        if value.order == order:
            return value
        if isinstance(value, BicrankTable):
            return BicrankTable(order, value.rows[:order + 1])
        return ClassCountTable(order, value.modulus, value.counts[:order + 1])
