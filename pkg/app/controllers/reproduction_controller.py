"""
Controlador de Reproducción - Comando reproduce-paper
"""
import hashlib
import os
from typing import Dict, Any, Optional, Tuple

from .base_controller import BaseController
from ..models.report_model import RunReport
from ..repositories.report_repository import ReportRepository
from ..services.reproduction_service import ReproductionService

REPORT_FILENAME = 'reproduction.json'


class ReproduceController(BaseController):
    """Controlador para ejecutar la tabla de aceptación completa o filtrada"""

    command = 'reproduce-paper'

    def __init__(self, reproduction_service=None, report_repository=None, graph_service=None,
                 graph_repository=None, config=None):
        super().__init__(graph_service, graph_repository, config)
        self.report_repository = report_repository or ReportRepository()
        self.reproduction_service = reproduction_service or ReproductionService(
            graph_service=self.graph_service, report_repository=self.report_repository, config=self.config
        )

    def execute(self, out_dir: Optional[str] = None, only: Optional[str] = None) -> Tuple[Dict[str, Any], int]:
        """reproduce-paper [--out DIR] [--only GRUPOS]"""
        try:
            if os.path.isfile(self.config.ACCEPTANCE_FILE):
                with open(self.config.ACCEPTANCE_FILE, 'rb') as handle:
                    self.input_digest = hashlib.sha256(handle.read()).hexdigest()
            directory = out_dir or self.config.OUTPUT_DIR
            summary = self.reproduction_service.reproduce(directory, only=only)
            payload, code = self.success_response(
                data=summary,
                message=f"{summary['agreeing']}/{summary['rows']} filas coinciden"
            )
            # Sin tiempos: dos corridas producen el mismo archivo byte a byte
            self.report_repository.save(os.path.join(directory, REPORT_FILENAME),
                                        RunReport(**payload).deterministic_dict())
            return payload, code
        except Exception as e:
            return self.handle_exception(e)
