"""
Servicio Certificador - Mapa de paridad, extracción de subgrafos pares y certificados del índice de paleta
"""
import logging
from itertools import combinations
from typing import Any, Dict, List, Optional, Sequence, Tuple, Union

from .base_service import BaseService
from .graph_service import GraphService
from .coloring_service import ColoringService
from .even_space_service import EvenSpaceService
from ..models.graph_model import Graph, EdgeSubset
from ..models.coloring_model import EdgeColoring, PaletteTable
from ..models.certificate_model import (
    ColorSet, ParityVector, Certificate,
    LOWER_BOUND_GT_DELTA, EXACT_ODD_REGULAR_MAX, CUBIC_CLASS, UPPER_BOUND_VIZING
)
from ..models.even_space_model import EvenSubgraphWitness, VERDICT_UNDECIDED, NO_STRUCTURAL, NO_EXHAUSTIVE
from ..exceptions.custom_exceptions import (
    ValidationError, ContractError, SearchBudgetExceededError, InvariantViolationError
)
from ..utils.bitsets import popcount, mask_from

logger = logging.getLogger(__name__)


class CertifierService(BaseService):
    """Servicio para certificar cotas y valores exactos del índice de paleta"""

    def __init__(self, graph_service=None, coloring_service=None, even_space_service=None, config=None):
        super().__init__(config)
        self.graph_service = graph_service or GraphService(self.config)
        self.coloring_service = coloring_service or ColoringService(
            graph_service=self.graph_service, certifier_service=self, config=self.config
        )
        self.even_space_service = even_space_service or EvenSpaceService(
            graph_service=self.graph_service, config=self.config
        )
        logger.info("CertifierService inicializado")

    # Mapa de paridad

    def phi(self, coloring: EdgeColoring, table: PaletteTable, subset: ColorSet) -> ParityVector:
        """Bit i = |P_i ∩ A| mod 2"""
        if subset.c_max != coloring.c_max:
            raise ContractError(
                f"El conjunto de colores usa el universo 1..{subset.c_max} y la coloración 1..{coloring.c_max}"
            )
        bits = 0
        for index, mask in enumerate(table.masks):
            if popcount(mask & subset.bits) % 2:
                bits |= 1 << index
        return ParityVector(table.t, bits)

    def phi_is_even_test(self, graph: Graph, coloring: EdgeColoring, table: PaletteTable,
                         subset: ColorSet) -> bool:
        """G_A es par si y solo si φ(A) es el vector nulo"""
        self._check_owner(graph, coloring)
        return self.phi(coloring, table, subset).is_zero()

    def color_subgraph(self, coloring: EdgeColoring, subset: ColorSet) -> EdgeSubset:
        """Aristas cuyo color pertenece a A"""
        if subset.c_max != coloring.c_max:
            raise ContractError("El conjunto de colores no pertenece al universo de la coloración")
        return EdgeSubset.from_indices(
            coloring.graph.m,
            (index for index, color in enumerate(coloring.colors) if subset.bits >> (color - 1) & 1)
        )

    # Extracción constructiva

    def extract_spanning_even(self, graph: Graph, coloring: EdgeColoring) -> EvenSubgraphWitness:
        witness, _ = self.extract_trace(graph, coloring)
        return witness

    def extract_trace(self, graph: Graph, coloring: EdgeColoring) -> Tuple[EvenSubgraphWitness, List[Dict[str, Any]]]:
        """
        Extrae un subgrafo par generador sin vértices aislados a partir de una
        coloración propia con t <= δ paletas

        Hace crecer A desde el vacío: en el menor vértice aislado de G_A toma
        R_j (δ colores menores de su paleta más α), busca la primera colisión
        φ(I1) = φ(I2) entre subconjuntos no vacíos de R_j y reemplaza A por
        A △ (I1 △ I2). Cada paso agranda A, así que hay a lo sumo c_max pasos.

        Raises:
            ContractError: coloración impropia, t > δ o Δ < 2
            InvariantViolationError: A no crece o el resultado no es par (con la traza completa)
        """
        self._check_owner(graph, coloring)
        self._raise_if(self._graph_errors(graph, require_edges=True, forbid_isolated=True))
        table = self.coloring_service.palettes(coloring)
        min_degree, max_degree = self.graph_service.min_max_degree(graph)
        if max_degree < 2:
            raise ContractError(f"Se requiere Δ >= 2 y el grafo tiene Δ = {max_degree}")
        if table.t > min_degree:
            raise ContractError(f"La coloración tiene t = {table.t} paletas y δ = {min_degree}: se requiere t <= δ")

        c_max = coloring.c_max
        trace: List[Dict[str, Any]] = []

        used = coloring.used_colors()
        if len(used) == min_degree:
            # Grafo r-regular donde todos los vértices ven los mismos r colores
            if min_degree % 2 == 0:
                edges = EdgeSubset.full(graph.m)
                trace.append({'special_case': 'all-edges', 'colors': len(used)})
            else:
                edges = coloring.color_class(used[-1]).complement()
                trace.append({'special_case': 'drop-color-class', 'color': used[-1]})
            return self._witness(graph, edges, trace), trace

        selected = ColorSet(c_max)
        iteration = 0
        while True:
            covered = self.color_subgraph(coloring, selected).bits
            vertex = next((v for v in range(graph.n) if not graph.incident_mask(v) & covered), None)
            if vertex is None:
                break
            iteration += 1
            if iteration > c_max:
                raise InvariantViolationError(f"La extracción superó {c_max} iteraciones", trace=trace)

            palette_index = table.vertex_palette[vertex]
            palette = table.palette_of(vertex)
            if len(palette) > min_degree:
                alpha, rule = palette[min_degree], 1
            else:
                # Solo colores usados: un color sin aristas tiene imagen nula por φ
                alpha = next(color for color in used if color not in palette)
                rule = 2
            r_set = sorted(palette[:min_degree] + (alpha,))

            collision = self._first_collision(coloring, table, r_set)
            if collision is None:
                raise InvariantViolationError(
                    f"Sin colisión de φ en R = {r_set} para el vértice {vertex}", trace=trace
                )
            first, second = collision
            step = ColorSet.from_colors(c_max, first).symmetric_difference(ColorSet.from_colors(c_max, second))
            grown = selected.symmetric_difference(step)
            entry = {
                'iteration': iteration,
                'vertex': vertex,
                'palette_index': palette_index,
                'palette': list(palette),
                'r_set': r_set,
                'alpha': alpha,
                'rule': rule,
                'i1': list(first),
                'i2': list(second),
                'size': len(grown)
            }
            trace.append(entry)
            if len(grown) <= len(selected) or not self.phi(coloring, table, grown).is_zero():
                raise InvariantViolationError(f"El conjunto A no creció en la iteración {iteration}", trace=trace)
            logger.debug(f"Extracción: iteración {iteration} en vértice {vertex}, |A| = {len(grown)}")
            selected = grown

        return self._witness(graph, self.color_subgraph(coloring, selected), trace), trace

    def _first_collision(self, coloring: EdgeColoring, table: PaletteTable,
                         r_set: Sequence[int]) -> Optional[Tuple[Tuple[int, ...], Tuple[int, ...]]]:
        """Primer par con igual imagen por φ, en orden de tamaño y luego lexicográfico"""
        seen: Dict[int, Tuple[int, ...]] = {}
        for size in range(1, len(r_set) + 1):
            for subset in combinations(r_set, size):
                image = self.phi(coloring, table, ColorSet.from_colors(coloring.c_max, subset)).bits
                if image in seen:
                    return seen[image], subset
                seen[image] = subset
        return None

    def _witness(self, graph: Graph, edges: EdgeSubset, trace: List[Dict[str, Any]]) -> EvenSubgraphWitness:
        try:
            return EvenSubgraphWitness(graph, edges)
        except ValueError as e:
            raise InvariantViolationError(f"El subgrafo extraído no es par generador: {str(e)}", trace=trace)

    # Certificados

    def certify_lower_bound(self, graph: Graph) -> Optional[Certificate]:
        """š(G) > δ(G) cuando Δ >= 2 y no existe subgrafo par generador sin vértices aislados"""
        self._raise_if(self._graph_errors(graph, require_vertices=True, forbid_isolated=True))
        min_degree, max_degree = self.graph_service.min_max_degree(graph)
        if max_degree < 2:
            return None
        verdict = self.even_space_service.spanning_even_no_isolated(graph)
        if verdict.status == VERDICT_UNDECIDED:
            raise SearchBudgetExceededError(
                "Veredicto UNDECIDED: el presupuesto de búsqueda no alcanzó para decidir el subgrafo par",
                nodes=verdict.nodes, limit=self.config.NODE_LIMIT
            )
        if verdict.is_yes:
            return None
        return Certificate(
            LOWER_BOUND_GT_DELTA,
            values={'lower': min_degree + 1, 'greater_than': min_degree},
            evidence={'verdict': verdict.to_dict(), 'min_degree': min_degree, 'max_degree': max_degree}
        )

    def palette_index_odd_regular_max(self, graph: Graph) -> Optional[Certificate]:
        """š(G) = r+1 para G r-regular con r impar sin subgrafo par generador"""
        self._raise_if(self._graph_errors(graph, require_edges=True))
        degrees = set(graph.degrees())
        r = next(iter(degrees))
        if len(degrees) != 1 or r % 2 == 0 or r < 3:
            raise ValidationError("Se requiere un grafo regular de grado impar r >= 3")

        lower = self.certify_lower_bound(graph)
        if lower is None:
            return None
        coloring = self.coloring_service.vizing_coloring(graph)
        upper = self.coloring_service.palette_count(coloring)
        if upper != r + 1:
            raise InvariantViolationError(
                f"La coloración de Vizing tiene {upper} paletas; se esperaban exactamente {r + 1}"
            )
        logger.info(f"Certificado exacto {r + 1} para {graph}")
        return Certificate(
            EXACT_ODD_REGULAR_MAX,
            values={'exact': r + 1, 'lower': lower.values['lower'], 'upper': upper},
            evidence={'lower_bound': lower.to_dict(), 'coloring': self.coloring_service.coloring_to_dict(coloring)}
        )

    def classify_cubic(self, graph: Graph) -> Certificate:
        """Clasificación exacta de un grafo cúbico conexo: 1, 3 o 4"""
        self._raise_if(self._graph_errors(graph, require_vertices=True))
        if set(graph.degrees()) != {3}:
            raise ValidationError("El grafo debe ser 3-regular")
        if not self.graph_service.is_connected(graph):
            raise ValidationError("El grafo debe ser conexo")

        colorable, coloring = self.coloring_service.is_k_edge_colorable(graph, 3)
        if colorable:
            value = 1
            evidence = {'three_edge_colorable': True, 'coloring': self.coloring_service.coloring_to_dict(coloring)}
        else:
            has_matching, matching = self.graph_service.has_perfect_matching(graph)
            if has_matching:
                value = 3
                evidence = {'three_edge_colorable': False, 'perfect_matching': matching.indices()}
            else:
                value = 4
                evidence = {'three_edge_colorable': False, 'perfect_matching': None}
        return Certificate(CUBIC_CLASS, values={'exact': value}, evidence=evidence)

    def union_palette_index_distinct_degrees(self, components: Sequence[Tuple[Graph, int]]) -> int:
        """Suma de los índices de componentes con conjuntos de grados disjuntos dos a dos"""
        errors = []
        if not components:
            errors.append("Se requiere al menos una componente")
        degree_sets = []
        for position, (graph, value) in enumerate(components):
            errors.extend(self._graph_errors(graph, require_vertices=True))
            if not isinstance(value, int) or value < 1:
                errors.append(f"El valor de la componente {position} debe ser un entero positivo")
            if isinstance(graph, Graph):
                degree_sets.append(set(graph.degrees()))
        for i, j in combinations(range(len(degree_sets)), 2):
            shared = degree_sets[i] & degree_sets[j]
            if shared:
                errors.append(f"Las componentes {i} y {j} comparten los grados {sorted(shared)}")
        self._raise_if(errors)
        return sum(value for _, value in components)

    def upper_bound_vizing(self, graph: Graph) -> Certificate:
        """Cota superior por el número de paletas de la coloración de Vizing"""
        coloring = self.coloring_service.vizing_coloring(graph)
        upper = self.coloring_service.palette_count(coloring)
        values = {'upper': upper, 'colors': coloring.c_max}
        if graph.is_regular():
            bound = graph.degree_of(0) + 1
            if upper > bound:
                raise InvariantViolationError(f"Una coloración con r+1 colores tiene {upper} > {bound} paletas")
            values['regular_bound'] = bound
        return Certificate(
            UPPER_BOUND_VIZING,
            values=values,
            evidence={'coloring': self.coloring_service.coloring_to_dict(coloring)}
        )

    # Re-verificación

    def verify_certificate(self, graph: Graph, certificate: Union[Certificate, Dict[str, Any]]) -> bool:
        """Re-verifica la evidencia de un certificado sin confiar en quien lo emitió"""
        if isinstance(certificate, dict):
            try:
                certificate = Certificate(
                    certificate['kind'], certificate['values'], certificate['evidence'], certificate.get('citation')
                )
            except (KeyError, ValueError) as e:
                raise ValidationError(f"Certificado inválido: {str(e)}")

        if certificate.kind == LOWER_BOUND_GT_DELTA:
            return self._verify_lower_bound(graph, certificate)
        if certificate.kind == EXACT_ODD_REGULAR_MAX:
            lower = certificate.evidence.get('lower_bound') or {}
            if not lower or not self.verify_certificate(graph, lower):
                return False
            upper = self._verified_palette_count(graph, certificate.evidence.get('coloring'))
            exact = certificate.values.get('exact')
            return upper is not None and upper <= exact and lower['values']['lower'] == exact
        if certificate.kind == UPPER_BOUND_VIZING:
            upper = self._verified_palette_count(graph, certificate.evidence.get('coloring'))
            return upper is not None and upper == certificate.values.get('upper')
        return self._verify_cubic(graph, certificate)

    def _verify_lower_bound(self, graph: Graph, certificate: Certificate) -> bool:
        min_degree, max_degree = self.graph_service.min_max_degree(graph)
        if max_degree < 2 or certificate.values.get('lower') != min_degree + 1:
            return False
        evidence = certificate.evidence.get('verdict', {}).get('certificate', {})
        if evidence.get('kind') == NO_STRUCTURAL:
            vertex = evidence.get('vertex')
            if not isinstance(vertex, int) or not 0 <= vertex < graph.n:
                return False
            bridges = self.graph_service.bridges(graph)
            return not graph.incident_mask(vertex) & ~bridges.bits
        if evidence.get('kind') == NO_EXHAUSTIVE:
            return self.even_space_service.search_digest(graph) == evidence.get('digest')
        return False

    def _verify_cubic(self, graph: Graph, certificate: Certificate) -> bool:
        value = certificate.values.get('exact')
        evidence = certificate.evidence
        if value == 1:
            colors = self._verified_coloring(graph, evidence.get('coloring'))
            return colors is not None and max(colors.colors, default=0) <= 3
        colorable, _ = self.coloring_service.is_k_edge_colorable(graph, 3)
        if colorable:
            return False
        if value == 3:
            matching = evidence.get('perfect_matching') or []
            if any(not isinstance(index, int) or not 0 <= index < graph.m for index in matching):
                return False
            return self.graph_service.is_perfect_matching(graph, EdgeSubset(graph.m, mask_from(matching)))
        if value == 4:
            has_matching, _ = self.graph_service.has_perfect_matching(graph)
            return not has_matching
        return False

    def _verified_coloring(self, graph: Graph, data: Any) -> Optional[EdgeColoring]:
        try:
            return self.coloring_service.coloring_from_dict(graph, data)
        except ValidationError:
            return None

    def _verified_palette_count(self, graph: Graph, data: Any) -> Optional[int]:
        coloring = self._verified_coloring(graph, data)
        return None if coloring is None else self.coloring_service.palette_count(coloring)

    def _check_owner(self, graph: Graph, coloring: EdgeColoring) -> None:
        if coloring.graph != graph:
            raise ContractError("La coloración no pertenece al grafo indicado")

    def validate_business_rules(self, **kwargs) -> None:
        self._raise_if(self._graph_errors(kwargs.get('graph'), require_vertices=True, forbid_isolated=True))
