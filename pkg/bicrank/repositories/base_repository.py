from abc import ABC, abstractmethod
import threading
from typing import Dict, Generic, Hashable, List, Optional, TypeVar

K = TypeVar('K', bound=Hashable)
T = TypeVar('T')


class BaseRepository(Generic[K, T], ABC):
    """
    Clase base abstracta para implementar el patrón Repository.
    Los servicios dependen de esta interfaz y no del almacenamiento concreto.
    """

    @abstractmethod
    def get(self, key: K, order: int) -> Optional[T]:
        """Obtiene el valor asociado a ``key`` con al menos ``order`` términos"""
        pass

    @abstractmethod
    def save(self, key: K, value: T) -> T:
        """Guarda un valor calculado"""
        pass

    @abstractmethod
    def keys(self) -> List[K]:
        pass


class OrderedCacheRepository(BaseRepository[K, T]):
    """
    Repositorio en memoria para valores truncados (atributo ``order``).
    Un valor guardado a orden mayor sirve cualquier pedido de orden menor.
    """

    def __init__(self):
        self._store: Dict[K, T] = {}
        self._lock = threading.Lock()

    @abstractmethod
    def _truncate(self, value: T, order: int) -> T:
        pass

    def get(self, key: K, order: int) -> Optional[T]:
        with self._lock:
            value = self._store.get(key)
        if value is None or value.order < order:
            return None
        return self._truncate(value, order)

    def save(self, key: K, value: T) -> T:
        with self._lock:
            current = self._store.get(key)
            if current is None or current.order < value.order:
                self._store[key] = value
        return value

    def keys(self) -> List[K]:
        with self._lock:
            return list(self._store)
