"""
Controlador de Subgrafo Par - Comando even-subgraph
"""
from typing import Dict, Any, Tuple

from .base_controller import BaseController
from ..services.even_space_service import EvenSpaceService
from ..schemas.certificate_schema import VerdictSchema


class EvenSubgraphController(BaseController):
    """Controlador para decidir la existencia de un subgrafo par generador sin vértices aislados"""

    command = 'even-subgraph'

    def __init__(self, even_space_service=None, graph_service=None, graph_repository=None, config=None):
        super().__init__(graph_service, graph_repository, config)
        self.even_space_service = even_space_service or EvenSpaceService(self.graph_service, self.config)
        self.verdict_schema = VerdictSchema()

    def execute(self, source: str) -> Tuple[Dict[str, Any], int]:
        """even-subgraph INPUT"""
        try:
            graph = self.load_graph(source)
            verdict = self.even_space_service.spanning_even_no_isolated(graph)
            data = self.verdict_schema.dump(verdict.to_dict())
            data['cycle_space_dimension'] = self.even_space_service.cycle_space_basis(graph).dimension
            return self.success_response(data=data, message=f"Veredicto {verdict.status}")
        except Exception as e:
            return self.handle_exception(e)
