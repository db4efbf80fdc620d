"""
Modelo base para todas las entidades del laboratorio
"""
from abc import ABC, abstractmethod
from typing import Dict, Any


class BaseModel(ABC):
    """Modelo base abstracto para todas las entidades"""

    @abstractmethod
    def to_dict(self) -> Dict[str, Any]:
        """Convierte el modelo a diccionario serializable en JSON"""
        pass

    @abstractmethod
    def validate(self) -> None:
        """Valida los datos del modelo; lanza ValueError con todos los errores"""
        pass

    def __repr__(self) -> str:
        return f"<{self.__class__.__name__}>"
