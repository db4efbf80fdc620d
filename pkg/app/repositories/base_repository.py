"""
Repositorio base - Estructura para persistir y recuperar artefactos
"""
from abc import ABC, abstractmethod
from typing import Any


class BaseRepository(ABC):
    """Repositorio base con operaciones comunes de persistencia en archivos"""

    @abstractmethod
    def save(self, location: str, payload: Any) -> str:
        """Guarda un artefacto y retorna la ruta escrita"""
        pass

    @abstractmethod
    def load(self, location: str) -> Any:
        """Carga un artefacto"""
        pass

    @abstractmethod
    def exists(self, location: str) -> bool:
        """Verifica si un artefacto existe"""
        pass
