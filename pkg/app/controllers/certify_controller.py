"""
Controlador del Certificador - Comandos certify, classify-cubic y extract
"""
import logging
from typing import Dict, Any, List, Tuple

from .base_controller import BaseController
from ..services.certifier_service import CertifierService
from ..repositories.report_repository import ReportRepository
from ..schemas.certificate_schema import CertificateSchema
from ..exceptions.custom_exceptions import SearchBudgetExceededError

logger = logging.getLogger(__name__)


class CertifyController(BaseController):
    """Controlador para emitir los certificados disponibles de un grafo"""

    command = 'certify'

    def __init__(self, certifier_service=None, graph_service=None, graph_repository=None, config=None):
        super().__init__(graph_service, graph_repository, config)
        self.certifier_service = certifier_service or CertifierService(graph_service=self.graph_service,
                                                                       config=self.config)
        self.certificate_schema = CertificateSchema()

    def execute(self, source: str) -> Tuple[Dict[str, Any], int]:
        """certify INPUT"""
        try:
            graph = self.load_graph(source)
            self.certifier_service.validate_business_rules(graph=graph)
            certificates: List[Dict[str, Any]] = []
            notes: List[str] = []

            try:
                lower = self.certifier_service.certify_lower_bound(graph)
                if lower is not None:
                    certificates.append(lower.to_dict())
                else:
                    notes.append("Sin cota inferior: Δ < 2 o existe subgrafo par generador")
            except SearchBudgetExceededError as e:
                notes.append(f"UNDECIDED: {str(e)} (nodos={e.nodes}, límite={e.limit})")

            certificates.append(self.certifier_service.upper_bound_vizing(graph).to_dict())

            degrees = set(graph.degrees())
            if len(degrees) == 1:
                r = degrees.pop()
                if r % 2 and r >= 3:
                    try:
                        exact = self.certifier_service.palette_index_odd_regular_max(graph)
                        if exact is not None:
                            certificates.append(exact.to_dict())
                    except SearchBudgetExceededError as e:
                        notes.append(f"UNDECIDED: {str(e)}")
                if r == 3 and self.graph_service.is_connected(graph):
                    certificates.append(self.certifier_service.classify_cubic(graph).to_dict())

            return self.success_response(
                data={
                    'certificates': self.certificate_schema.dump(certificates, many=True),
                    'notes': notes
                },
                message=f"{len(certificates)} certificados emitidos"
            )
        except Exception as e:
            return self.handle_exception(e)


class ClassifyCubicController(BaseController):
    """Controlador para la clasificación exacta de grafos cúbicos conexos"""

    command = 'classify-cubic'

    def __init__(self, certifier_service=None, graph_service=None, graph_repository=None, config=None):
        super().__init__(graph_service, graph_repository, config)
        self.certifier_service = certifier_service or CertifierService(graph_service=self.graph_service,
                                                                       config=self.config)
        self.certificate_schema = CertificateSchema()

    def execute(self, source: str) -> Tuple[Dict[str, Any], int]:
        """classify-cubic INPUT"""
        try:
            graph = self.load_graph(source)
            certificate = self.certifier_service.classify_cubic(graph)
            return self.success_response(
                data={'value': certificate.values['exact'], 'certificate': self.certificate_schema.dump(certificate.to_dict())},
                message=f"Índice de paleta {certificate.values['exact']}"
            )
        except Exception as e:
            return self.handle_exception(e)


class ExtractController(BaseController):
    """Controlador para extraer un subgrafo par generador desde una coloración dada"""

    command = 'extract'

    def __init__(self, certifier_service=None, report_repository=None, graph_service=None,
                 graph_repository=None, config=None):
        super().__init__(graph_service, graph_repository, config)
        self.certifier_service = certifier_service or CertifierService(graph_service=self.graph_service,
                                                                       config=self.config)
        self.report_repository = report_repository or ReportRepository()

    def execute(self, source: str, coloring_location: str) -> Tuple[Dict[str, Any], int]:
        """extract INPUT --coloring ARCHIVO"""
        try:
            graph = self.load_graph(source)
            coloring_service = self.certifier_service.coloring_service
            coloring = coloring_service.coloring_from_dict(graph, self.report_repository.load(coloring_location))
            witness, trace = self.certifier_service.extract_trace(graph, coloring)
            return self.success_response(
                data={
                    'witness': witness.to_dict(),
                    'degrees': witness.degrees(),
                    'iterations': sum(1 for entry in trace if 'iteration' in entry),
                    'trace': trace
                },
                message=f"Subgrafo par generador con {len(witness.edges)} aristas"
            )
        except Exception as e:
            return self.handle_exception(e)
