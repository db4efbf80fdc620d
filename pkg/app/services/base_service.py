"""
Servicio base - Estructura común para la lógica de los módulos
"""
from abc import ABC, abstractmethod
from typing import List, Optional, Type

from ..config.settings import get_config
from ..exceptions.custom_exceptions import ValidationError
from ..models.graph_model import Graph


class BaseService(ABC):
    """Servicio base con configuración y validaciones comunes"""

    def __init__(self, config=None):
        self.config = config or get_config()

    @abstractmethod
    def validate_business_rules(self, **kwargs) -> None:
        """Valida las precondiciones específicas del servicio"""
        pass

    def _graph_errors(self, graph: Optional[Graph], require_vertices: bool = False,
                      require_edges: bool = False, forbid_isolated: bool = False) -> List[str]:
        """Errores comunes sobre el grafo de entrada"""
        errors = []
        if not isinstance(graph, Graph):
            errors.append("Se requiere un grafo")
            return errors
        if require_vertices and graph.n < 1:
            errors.append("El grafo debe tener al menos un vértice")
        if require_edges and graph.m < 1:
            errors.append("El grafo debe tener al menos una arista")
        if forbid_isolated:
            isolated = [v for v in range(graph.n) if graph.degree_of(v) == 0]
            if isolated:
                errors.append(f"El grafo tiene vértices aislados (índice de paleta no definido): {isolated[:10]}")
        return errors

    @staticmethod
    def _raise_if(errors: List[str], error_class: Type[Exception] = ValidationError) -> None:
        if errors:
            raise error_class("; ".join(errors))
