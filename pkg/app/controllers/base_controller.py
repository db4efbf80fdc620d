"""
Controlador base - Estructura común de los comandos de la CLI
"""
import json
import logging
import time
from typing import Any, Dict, Optional, Tuple

from ..config.settings import get_config
from ..exceptions.custom_exceptions import (
    ParseError, ValidationError, GeneratorInvariantError, InvariantViolationError,
    ReproductionMismatchError, SearchBudgetExceededError
)
from ..models.graph_model import Graph
from ..models.report_model import RunReport
from ..repositories.graph_repository import GraphRepository
from ..schemas.report_schema import RunReportSchema
from ..services.graph_service import GraphService

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_INTERNAL = 1
EXIT_PARSE = 2
EXIT_PRECONDITION = 3
EXIT_GENERATOR = 4
EXIT_MISMATCH = 5


class BaseController:
    """Controlador base con respuestas de éxito y error como (reporte, código de salida)"""

    command = ''

    def __init__(self, graph_service=None, graph_repository=None, config=None):
        self.config = config or get_config()
        self.graph_service = graph_service or GraphService(self.config)
        self.graph_repository = graph_repository or GraphRepository()
        self.report_schema = RunReportSchema()
        self.input_digest: Optional[str] = None
        self._started = time.perf_counter()

    def load_graph(self, source: str) -> Graph:
        """Lee la entrada (ruta, '-' o graph6 en línea) y registra su huella"""
        self._started = time.perf_counter()
        graph = self.graph_service.parse_input(self.graph_repository.load(source))
        self.input_digest = self.graph_service.digest(graph)
        return graph

    def handle_exception(self, e: Exception) -> Tuple[Dict[str, Any], int]:
        """Traduce excepciones a códigos de salida estables"""
        if isinstance(e, ParseError):
            return self.error_response(str(e), EXIT_PARSE)
        if isinstance(e, ValidationError):
            return self.error_response(str(e), EXIT_PRECONDITION)
        if isinstance(e, GeneratorInvariantError):
            return self.error_response(str(e), EXIT_GENERATOR, {'trace': e.trace})
        if isinstance(e, ReproductionMismatchError):
            return self.error_response(str(e), EXIT_MISMATCH, {'mismatches': e.rows})
        if isinstance(e, SearchBudgetExceededError):
            return self.error_response(str(e), EXIT_INTERNAL,
                                       {'verdict': 'UNDECIDED', 'nodes': e.nodes, 'node_limit': e.limit})
        if isinstance(e, InvariantViolationError):
            logger.error(f"Invariante interno violado: {str(e)}")
            return self.error_response(f"Error interno (invariante violado): {str(e)}", EXIT_INTERNAL,
                                       {'trace': e.trace})
        logger.exception("Error inesperado")
        return self.error_response(f"Error interno: {str(e)}", EXIT_INTERNAL)

    def success_response(self, data: Any = None, message: str = "Success") -> Tuple[Dict[str, Any], int]:
        return self._report(data or {}, EXIT_OK, message), EXIT_OK

    def error_response(self, message: str, exit_code: int = EXIT_PRECONDITION,
                       data: Optional[Dict[str, Any]] = None) -> Tuple[Dict[str, Any], int]:
        return self._report(data or {}, exit_code, message), exit_code

    def _report(self, results: Dict[str, Any], exit_code: int, message: str) -> Dict[str, Any]:
        report = RunReport(
            command=self.command,
            input_digest=self.input_digest,
            results=results,
            timing={'seconds': round(time.perf_counter() - self._started, 6)},
            tool_version=self.config.APP_VERSION,
            seed=self.config.SEED,
            exit_code=exit_code,
            message=message
        )
        payload = report.to_dict()
        errors = self.report_schema.validate(payload)
        if errors:
            logger.warning(f"El reporte de '{self.command}' no cumple el esquema: {errors}")
        return payload

    @staticmethod
    def render_text(payload: Dict[str, Any]) -> str:
        """Salida legible; cada valor certificado lleva su etiqueta de cita"""
        lines = [f"command: {payload['command']}", f"exit_code: {payload['exit_code']}"]
        if payload.get('message'):
            lines.append(f"message: {payload['message']}")
        for key, value in payload.get('results', {}).items():
            entries = value if isinstance(value, list) else [value]
            if entries and all(isinstance(entry, dict) and 'citation' in entry for entry in entries):
                for entry in entries:
                    lines.append(f"{key}: {entry['kind']} {json.dumps(entry['values'], sort_keys=True)} "
                                 f"[{entry['citation']}]")
            elif isinstance(value, (dict, list)):
                lines.append(f"{key}: {json.dumps(value, sort_keys=True)}")
            else:
                lines.append(f"{key}: {value}")
        return "\n".join(lines)
