from typing import Hashable, Tuple

from ..models import PowerSeries
from .base_repository import OrderedCacheRepository

SeriesKey = Tuple[str, Hashable]


class SeriesRepository(OrderedCacheRepository[SeriesKey, PowerSeries]):
    """
    Memoriza expansiones de series. La clave es (tipo, parámetros), por
    ejemplo ('eta', EtaQuotientSpec) o ('diff', 3).
    """

    def _truncate(self, value: PowerSeries, order: int) -> PowerSeries:
        return value.truncate(order)
