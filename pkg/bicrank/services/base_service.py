from abc import ABC
import logging
from typing import Callable, Generic, Hashable, Optional, TypeVar

from django.conf import settings

from ..repositories.base_repository import BaseRepository

R = TypeVar('R', bound=BaseRepository)
T = TypeVar('T')

logger = logging.getLogger(__name__)


def lab_setting(name: str):
    """Lee un parámetro de ``settings.BICRANK_LAB``"""
    return settings.BICRANK_LAB[name]


class BaseService(Generic[R], ABC):
    """
    Clase base abstracta para los servicios de cálculo.
    Recibe su repositorio como dependencia (se puede inyectar uno propio en pruebas).
    """

    def __init__(self, repository: R):
        self.repository = repository

    def _cached(self, key: Hashable, order: int, compute: Callable[[], T]) -> T:
        """Devuelve el valor memorizado para ``key`` o lo calcula y lo guarda"""
        value: Optional[T] = self.repository.get(key, order)
        if value is not None:
            return value
        logger.debug(f"Calculando {key} a orden {order}")
        return self.repository.save(key, compute())
