from .base_repository import BaseRepository, OrderedCacheRepository
from .series_repository import SeriesRepository
from .table_repository import TableRepository

__all__ = ['BaseRepository', 'OrderedCacheRepository', 'SeriesRepository', 'TableRepository']
