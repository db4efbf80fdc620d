"""
Controlador de Índice de Paleta - Comando palette-index
"""
from typing import Dict, Any, Optional, Tuple

from .base_controller import BaseController
from ..services.coloring_service import ColoringService


class PaletteIndexController(BaseController):
    """Controlador para calcular el índice de paleta exacto"""

    command = 'palette-index'

    def __init__(self, coloring_service=None, graph_service=None, graph_repository=None, config=None):
        super().__init__(graph_service, graph_repository, config)
        self.coloring_service = coloring_service or ColoringService(graph_service=self.graph_service,
                                                                    config=self.config)

    def execute(self, source: str, c_max: Optional[int] = None) -> Tuple[Dict[str, Any], int]:
        """palette-index INPUT [--cmax N]"""
        try:
            graph = self.load_graph(source)
            result = self.coloring_service.palette_index_exact(graph, c_max=c_max)
            data = result.to_dict()
            data['palettes'] = self.coloring_service.palettes(result.witness).to_dict()['palettes']
            return self.success_response(
                data=data,
                message=f"Índice de paleta {result.value} ({result.exactness_flag})"
            )
        except Exception as e:
            return self.handle_exception(e)
