"""
Servicio de Reproducción - Ejecuta la tabla de aceptación y escribe el CSV de resultados
"""
import logging
import os
import random
from typing import Any, Callable, Dict, List, Optional, Sequence

import yaml

from .base_service import BaseService
from .graph_service import GraphService
from .even_space_service import EvenSpaceService
from .certifier_service import CertifierService
from .family_service import FamilyService
from .corpus_service import CorpusService
from ..models.graph_model import Graph
from ..models.family_model import FamilySpec, FAMILY_KINDS
from ..models.certificate_model import (
    ColorSet, ADDITIVITY_CITATION, CUBIC_CLASS, CITATIONS, EXACT_ODD_REGULAR_MAX, LOWER_BOUND_GT_DELTA
)
from ..models.even_space_model import EvenSubgraphWitness, NO_STRUCTURAL
from ..repositories.report_repository import ReportRepository
from ..exceptions.custom_exceptions import (
    ValidationError, FileProcessingError, InvariantViolationError, ReproductionMismatchError
)

logger = logging.getLogger(__name__)

CSV_COLUMNS = ('instance', 'claimed', 'computed', 'certificate-kind', 'agreement')
CSV_FILENAME = 'reproduction.csv'

GROUPS = ('cubic', 'census', 'regular-max', 'quadratic', 'apex', 'extraction', 'remark1', 'additivity',
          'even-oracle')


class ReproductionService(BaseService):
    """Servicio que reproduce los resultados de la tabla de aceptación"""

    def __init__(self, graph_service=None, coloring_service=None, even_space_service=None,
                 certifier_service=None, family_service=None, corpus_service=None,
                 report_repository=None, config=None):
        super().__init__(config)
        self.graph_service = graph_service or GraphService(self.config)
        self.even_space_service = even_space_service or EvenSpaceService(self.graph_service, self.config)
        self.certifier_service = certifier_service or CertifierService(
            graph_service=self.graph_service, even_space_service=self.even_space_service, config=self.config
        )
        self.coloring_service = coloring_service or self.certifier_service.coloring_service
        self.family_service = family_service or FamilyService(self.graph_service, self.config)
        self.corpus_service = corpus_service or CorpusService(
            self.graph_service, self.coloring_service, self.family_service, self.config
        )
        self.report_repository = report_repository or ReportRepository()
        self._runners: Dict[str, Callable[[Dict[str, Any]], List[Dict[str, str]]]] = {
            'cubic': self._run_cubic,
            'census': self._run_census,
            'regular-max': self._run_regular_max,
            'quadratic': self._run_quadratic,
            'apex': self._run_apex,
            'extraction': self._run_extraction,
            'remark1': self._run_remark1,
            'additivity': self._run_additivity,
            'even-oracle': self._run_even_oracle,
        }
        logger.info("ReproductionService inicializado")

    def load_table(self) -> Dict[str, Any]:
        try:
            with open(self.config.ACCEPTANCE_FILE, encoding='utf-8') as handle:
                return yaml.safe_load(handle) or {}
        except (OSError, yaml.YAMLError) as e:
            raise FileProcessingError(f"No se pudo leer la tabla de aceptación: {str(e)}")

    def select_groups(self, only: Optional[str]) -> List[str]:
        """Grupos a ejecutar según el filtro --only (None ejecuta todos)"""
        if only is None:
            return list(GROUPS)
        selected = [name.strip() for name in only.split(',') if name.strip()]
        self.validate_business_rules(groups=selected)
        return [name for name in GROUPS if name in selected]

    def reproduce(self, out_dir: str, only: Optional[str] = None) -> Dict[str, Any]:
        """
        Ejecuta los grupos seleccionados y escribe el CSV

        Raises:
            ValidationError: filtro vacío o grupo desconocido
            ReproductionMismatchError: alguna fila no coincide (el CSV ya quedó escrito)
        """
        groups = self.select_groups(only)
        table = self.load_table()
        rows: List[Dict[str, str]] = []
        for group in groups:
            logger.info(f"Ejecutando grupo de aceptación '{group}'")
            rows.extend(self._runners[group](table.get(group) or {}))
        if not rows:
            raise ValidationError("no rows selected")

        location = self.report_repository.save_csv(os.path.join(out_dir, CSV_FILENAME), CSV_COLUMNS, rows)
        mismatches = [row for row in rows if row['agreement'] != 'yes']
        summary = {
            'csv': location,
            'groups': groups,
            'rows': len(rows),
            'agreeing': len(rows) - len(mismatches),
            'mismatches': [row['instance'] for row in mismatches]
        }
        if mismatches:
            raise ReproductionMismatchError(
                f"{len(mismatches)} filas en desacuerdo: {', '.join(summary['mismatches'][:10])}", rows=mismatches
            )
        return summary

    # Grupos de aceptación

    def _run_cubic(self, params: Dict[str, Any]) -> List[Dict[str, str]]:
        rows = []
        for instance in params.get('instances', []):
            graph = self.resolve_instance(instance['name'])
            classified = self.certifier_service.classify_cubic(graph).values['exact']
            solved = self.coloring_service.palette_index_exact(graph, c_max=4).value
            rows.append(self._row(
                instance['name'], instance['claimed'], self._joined(classified, solved), CUBIC_CLASS,
                classified == solved == instance['claimed']
            ))
        return rows

    def _run_census(self, params: Dict[str, Any]) -> List[Dict[str, str]]:
        rows = []
        for order, expected in sorted(params.get('orders', {}).items()):
            graphs = self.family_service.connected_cubic_graphs(int(order))
            rows.append(self._row(f"cubic-census-{order}", expected, len(graphs), 'census', len(graphs) == expected))
            for position, graph in enumerate(graphs):
                classified = self.certifier_service.classify_cubic(graph).values['exact']
                solved = self.coloring_service.palette_index_exact(graph, c_max=4).value
                name = f"cubic-{order}-{position}:{self.graph_service.to_graph6(graph)}"
                rows.append(self._row(name, classified, solved, CUBIC_CLASS, classified == solved))
        return rows

    def _run_regular_max(self, params: Dict[str, Any]) -> List[Dict[str, str]]:
        rows = []
        for k in params.get('k', []):
            graph = self.family_service.bridge_star(k)
            certificate = self.certifier_service.palette_index_odd_regular_max(graph)
            claimed = 2 * k + 2
            if certificate is None:
                rows.append(self._row(f"BRIDGE_STAR-{k}", claimed, 'none', EXACT_ODD_REGULAR_MAX, False))
                continue
            structural = (certificate.evidence['lower_bound']['evidence']['verdict']['certificate']['kind']
                          == NO_STRUCTURAL)
            colors = certificate.evidence['coloring']['c_max']
            agrees = certificate.values['exact'] == claimed and structural and colors == claimed
            rows.append(self._row(f"BRIDGE_STAR-{k}", claimed, certificate.values['exact'], certificate.kind, agrees))
        return rows

    def _run_quadratic(self, params: Dict[str, Any]) -> List[Dict[str, str]]:
        rows = []
        for k in params.get('k', []):
            union, predicted = self.family_service.quadratic_union(k)
            components = []
            for component in self.graph_service.component_subgraphs(union):
                certificate = self.certifier_service.palette_index_odd_regular_max(component)
                if certificate is None:
                    raise InvariantViolationError(f"Una componente de H_{k} no recibió certificado exacto")
                components.append((component, certificate.values['exact']))
            total = self.certifier_service.union_palette_index_distinct_degrees(components)
            delta = max(union.degrees())
            formula = (delta * delta + 4 * delta - 5) // 4
            rows.append(self._row(f"QUADRATIC_UNION-{k}", predicted, total, ADDITIVITY_CITATION,
                                  total == predicted == formula))
        return rows

    def _run_apex(self, params: Dict[str, Any]) -> List[Dict[str, str]]:
        rows = []
        for entry in params.get('exact', []):
            k = entry['k']
            graph = self.family_service.connected_quadratic(k)
            result = self.coloring_service.palette_index_exact(graph, c_max=entry['c_max'])
            rows.append(self._row(f"CONNECTED_QUADRATIC-{k}", f">{entry['greater_than']}", result.value,
                                  result.exactness_flag, result.value > entry['greater_than']))
        for k in params.get('structural', []):
            graph = self.family_service.connected_quadratic(k)
            delta = max(graph.degrees())
            connected = self.graph_service.is_connected(graph)
            rows.append(self._row(f"CONNECTED_QUADRATIC-{k}", f"Δ={2 * k + 2};connected",
                                  f"Δ={delta};{'connected' if connected else 'disconnected'}", 'structure',
                                  delta == 2 * k + 2 and connected))
        return rows

    def _run_extraction(self, params: Dict[str, Any]) -> List[Dict[str, str]]:
        count = params.get('samples', 0)
        if not count:
            return []
        failures = []
        for label, coloring in self.corpus_service.colored_samples(count):
            try:
                witness, trace = self.certifier_service.extract_trace(coloring.graph, coloring)
                EvenSubgraphWitness(coloring.graph, witness.edges)
                iterations = sum(1 for entry in trace if 'iteration' in entry)
                if iterations > coloring.c_max:
                    failures.append(label)
            except (InvariantViolationError, ValueError) as e:
                logger.warning(f"Extracción fallida en {label}: {str(e)}")
                failures.append(label)
        passed = count - len(failures)
        return [self._row(f"extraction-{count}", f"{count}/{count}", f"{passed}/{count}",
                          CITATIONS[LOWER_BOUND_GT_DELTA], not failures)]

    def _run_remark1(self, params: Dict[str, Any]) -> List[Dict[str, str]]:
        rows = []
        for label, coloring in self.corpus_service.remark_samples(params.get('graphs', 0)):
            graph = coloring.graph
            table = self.coloring_service.palettes(coloring)
            violations = 0
            for bits in range(1 << coloring.c_max):
                subset = ColorSet(coloring.c_max, bits)
                by_phi = self.certifier_service.phi_is_even_test(graph, coloring, table, subset)
                direct = self.even_space_service.is_even_subgraph(
                    graph, self.certifier_service.color_subgraph(coloring, subset)
                )
                violations += by_phi != direct
            rows.append(self._row(f"{label}-c{coloring.c_max}", 0, violations, 'parity-map', violations == 0))
        return rows

    def _run_additivity(self, params: Dict[str, Any]) -> List[Dict[str, str]]:
        pairs = params.get('pairs', 0)
        if not pairs:
            return []
        rng = random.Random(self.config.SEED + 2)
        samples = self.corpus_service.remark_samples(20)
        tables = [self.coloring_service.palettes(coloring) for _, coloring in samples]
        violations = 0
        for _ in range(pairs):
            position = rng.randrange(len(samples))
            coloring, table = samples[position][1], tables[position]
            first = ColorSet(coloring.c_max, rng.getrandbits(coloring.c_max))
            second = ColorSet(coloring.c_max, rng.getrandbits(coloring.c_max))
            combined = self.certifier_service.phi(coloring, table, first.symmetric_difference(second))
            summed = (self.certifier_service.phi(coloring, table, first)
                      + self.certifier_service.phi(coloring, table, second))
            violations += combined != summed
        return [self._row(f"additivity-{pairs}", 0, violations, 'parity-map', violations == 0)]

    def _run_even_oracle(self, params: Dict[str, Any]) -> List[Dict[str, str]]:
        rows = []
        corpus = self.corpus_service.even_oracle_corpus()[:params.get('graphs', 0)]
        for label, graph in corpus:
            oracle = self.even_space_service.brute_force_spanning_even(graph)
            verdict = self.even_space_service.spanning_even_no_isolated(graph)
            agrees = oracle.status == verdict.status
            if verdict.is_yes:
                agrees = agrees and min(verdict.witness.degrees()) >= 2
            kind = verdict.certificate.get('kind', 'witness') if verdict.certificate else 'witness'
            rows.append(self._row(label, oracle.status, verdict.status, kind, agrees))
        return rows

    # Utilidades

    def resolve_instance(self, name: str) -> Graph:
        """Grafo con nombre (K4, PETERSEN, ...) o familia KIND-k (BRIDGE_STAR-1)"""
        kind, _, parameter = name.rpartition('-')
        if kind.upper().replace('-', '_') in FAMILY_KINDS and parameter.isdigit():
            graph, _ = self.family_service.generate(FamilySpec(kind, int(parameter)))
            return graph
        return self.corpus_service.named(name)

    @staticmethod
    def _joined(*values: Any) -> str:
        distinct = sorted({str(value) for value in values})
        return distinct[0] if len(distinct) == 1 else '/'.join(str(value) for value in values)

    @staticmethod
    def _row(instance: str, claimed: Any, computed: Any, kind: str, agreement: bool) -> Dict[str, str]:
        return {
            'instance': instance,
            'claimed': str(claimed),
            'computed': str(computed),
            'certificate-kind': kind,
            'agreement': 'yes' if agreement else 'no'
        }

    def validate_business_rules(self, **kwargs) -> None:
        groups: Sequence[str] = kwargs.get('groups', [])
        errors = []
        if not groups:
            errors.append("no rows selected")
        unknown = [name for name in groups if name not in GROUPS]
        if unknown:
            errors.append(f"Grupos desconocidos: {', '.join(unknown)} (disponibles: {', '.join(GROUPS)})")
        self._raise_if(errors)
