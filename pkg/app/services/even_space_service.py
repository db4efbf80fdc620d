"""
Servicio del Espacio Par - Espacio de ciclos sobre GF(2) y subgrafos pares generadores
"""
import hashlib
import logging
import random
from collections import deque
from typing import Optional

from .base_service import BaseService
from .graph_service import GraphService
from ..models.graph_model import Graph, EdgeSubset
from ..models.even_space_model import (
    CycleSpaceBasis, EvenSubgraphWitness, EvenSpaceVerdict,
    VERDICT_YES, VERDICT_NO, VERDICT_UNDECIDED, NO_STRUCTURAL, NO_EXHAUSTIVE
)
from ..exceptions.custom_exceptions import ValidationError
from ..utils import gf2
from ..utils.bitsets import popcount, iter_bits, lowest_bit

logger = logging.getLogger(__name__)


class _BudgetExhausted(Exception):
    pass


class EvenSpaceService(BaseService):
    """Servicio para el espacio de ciclos y la existencia de subgrafos pares generadores"""

    def __init__(self, graph_service=None, config=None):
        super().__init__(config)
        self.graph_service = graph_service or GraphService(self.config)
        logger.info("EvenSpaceService inicializado")

    def cycle_space_basis(self, graph: Graph) -> CycleSpaceBasis:
        """Ciclos fundamentales de un bosque generador BFS (uno por arista fuera del bosque)"""
        self.validate_business_rules(graph=graph)
        path_mask = [0] * graph.n
        visited = [False] * graph.n
        tree_bits = 0
        components = 0
        for root in range(graph.n):
            if visited[root]:
                continue
            components += 1
            visited[root] = True
            queue = deque([root])
            while queue:
                x = queue.popleft()
                for y, edge in graph.adjacency[x]:
                    if not visited[y]:
                        visited[y] = True
                        tree_bits |= 1 << edge
                        path_mask[y] = path_mask[x] | 1 << edge
                        queue.append(y)

        basis = []
        for edge, (u, v) in enumerate(graph.edges):
            if not tree_bits >> edge & 1:
                basis.append(EdgeSubset(graph.m, path_mask[u] ^ path_mask[v] ^ 1 << edge))
        return CycleSpaceBasis(graph, basis, components)

    def is_even_subgraph(self, graph: Graph, subset: EdgeSubset) -> bool:
        self.validate_business_rules(graph=graph, subset=subset)
        return all(popcount(graph.incident_mask(v) & subset.bits) % 2 == 0 for v in range(graph.n))

    def spanning_even_no_isolated(self, graph: Graph) -> EvenSpaceVerdict:
        """
        Decide si existe un subgrafo par generador con todo grado >= 2

        Primero elimina los puentes: un vértice que queda aislado da un NO
        estructural. Luego busca por ramificación y acotación sobre la
        inclusión de aristas con factibilidad de paridad en GF(2). Agotar el
        presupuesto de nodos produce UNDECIDED.
        """
        self.validate_business_rules(graph=graph, require_vertices=True)
        bridges = self.graph_service.bridges(graph)
        for v in range(graph.n):
            if not graph.incident_mask(v) & ~bridges.bits:
                incident = [edge for _, edge in graph.adjacency[v]]
                logger.info(f"NO estructural en {graph}: vértice {v} con aristas incidentes {incident} todas puente")
                return EvenSpaceVerdict(VERDICT_NO, certificate={
                    'kind': NO_STRUCTURAL,
                    'vertex': v,
                    'incident_bridges': incident,
                    'bridges': bridges.indices()
                })

        if self.config.WARM_START:
            witness = self._warm_start(graph)
            if witness is not None:
                logger.info(f"Testigo par encontrado por arranque aleatorio en {graph}")
                return EvenSpaceVerdict(VERDICT_YES, witness=witness)

        return self._branch_and_bound(graph, bridges)

    def _warm_start(self, graph: Graph) -> Optional[EvenSubgraphWitness]:
        """Combinaciones aleatorias de la base mejoradas con conmutaciones voraces"""
        basis = self.cycle_space_basis(graph)
        if not basis.dimension:
            return None
        rng = random.Random(self.config.SEED)

        def coverage(bits: int) -> int:
            return sum(1 for v in range(graph.n) if graph.incident_mask(v) & bits)

        for _ in range(self.config.WARM_START_TRIES):
            bits = basis.combine(rng.getrandbits(basis.dimension)).bits
            covered = coverage(bits)
            improved = True
            while improved and covered < graph.n:
                improved = False
                for vector in basis.basis:
                    candidate = bits ^ vector.bits
                    candidate_covered = coverage(candidate)
                    if candidate_covered > covered:
                        bits, covered = candidate, candidate_covered
                        improved = True
            if covered == graph.n:
                return EvenSubgraphWitness(graph, EdgeSubset(graph.m, bits))
        return None

    def _branch_and_bound(self, graph: Graph, bridges: EdgeSubset) -> EvenSpaceVerdict:
        limit = self.config.NODE_LIMIT
        trace = hashlib.sha256()
        nodes = 0
        incident = [graph.incident_mask(v) for v in range(graph.n)]

        def residual_rows(included: int, undecided: int):
            rows = [mask & undecided for mask in incident]
            rhs = [popcount(mask & included) % 2 for mask in incident]
            return rows, rhs

        def search(included: int, undecided: int, depth: int) -> Optional[int]:
            nonlocal nodes
            nodes += 1
            if nodes > limit:
                raise _BudgetExhausted()
            rows, rhs = residual_rows(included, undecided)
            if not gf2.is_consistent(rows, rhs):
                trace.update(f"{depth}:parity;".encode())
                return None
            uncovered = None
            for v, mask in enumerate(incident):
                if not mask & included:
                    if not mask & undecided:
                        trace.update(f"{depth}:stranded:{v};".encode())
                        return None
                    if uncovered is None:
                        uncovered = v
            if uncovered is None:
                completion = gf2.solve(rows, rhs)
                return included | completion
            edge = lowest_bit(incident[uncovered] & undecided)
            rest = undecided & ~(1 << edge)
            trace.update(f"{depth}:in:{edge};".encode())
            found = search(included | 1 << edge, rest, depth + 1)
            if found is not None:
                return found
            trace.update(f"{depth}:out:{edge};".encode())
            return search(included, rest, depth + 1)

        free_edges = ((1 << graph.m) - 1) & ~bridges.bits
        try:
            bits = search(0, free_edges, 0)
        except _BudgetExhausted:
            logger.warning(f"Presupuesto de {limit} nodos agotado decidiendo el subgrafo par de {graph}")
            return EvenSpaceVerdict(VERDICT_UNDECIDED, certificate={'reason': 'node-limit', 'limit': limit},
                                    nodes=nodes)

        if bits is not None:
            logger.info(f"Testigo par encontrado en {graph} ({nodes} nodos)")
            return EvenSpaceVerdict(VERDICT_YES, witness=EvenSubgraphWitness(graph, EdgeSubset(graph.m, bits)),
                                    nodes=nodes)
        logger.info(f"NO exhaustivo en {graph} ({nodes} nodos)")
        return EvenSpaceVerdict(VERDICT_NO, certificate={
            'kind': NO_EXHAUSTIVE,
            'nodes': nodes,
            'digest': trace.hexdigest(),
            'bridges': bridges.indices()
        }, nodes=nodes)

    def search_digest(self, graph: Graph) -> Optional[str]:
        """Huella de la traza de búsqueda exhaustiva (para re-verificar certificados)"""
        verdict = self._branch_and_bound(graph, self.graph_service.bridges(graph))
        if verdict.is_no:
            return verdict.certificate['digest']
        return None

    # Oráculo por fuerza bruta

    def brute_force_spanning_even(self, graph: Graph) -> EvenSpaceVerdict:
        """Enumera los 2^dim elementos del espacio de ciclos (dim acotada) con grados incrementales"""
        self.validate_business_rules(graph=graph, require_vertices=True)
        basis = self._bounded_basis(graph)
        degree = [0] * graph.n
        isolated = graph.n
        bits = 0
        for step in range(1, 1 << basis.dimension):
            vector = basis.basis[lowest_bit(step)].bits
            for edge in iter_bits(vector):
                delta = -1 if bits >> edge & 1 else 1
                for v in graph.edges[edge]:
                    if degree[v] == 0:
                        isolated -= 1
                    degree[v] += delta
                    if degree[v] == 0:
                        isolated += 1
            bits ^= vector
            if isolated == 0:
                return EvenSpaceVerdict(VERDICT_YES, witness=EvenSubgraphWitness(graph, EdgeSubset(graph.m, bits)),
                                        nodes=step)
        size = 1 << basis.dimension
        return EvenSpaceVerdict(VERDICT_NO, certificate={'kind': NO_EXHAUSTIVE, 'elements': size}, nodes=size)

    def _bounded_basis(self, graph: Graph) -> CycleSpaceBasis:
        basis = self.cycle_space_basis(graph)
        max_dimension = self.config.BRUTE_FORCE_MAX_DIMENSION
        if basis.dimension > max_dimension:
            raise ValidationError(
                f"La dimensión del espacio de ciclos ({basis.dimension}) supera el máximo {max_dimension}"
            )
        return basis

    def validate_business_rules(self, **kwargs) -> None:
        graph = kwargs.get('graph')
        errors = self._graph_errors(graph, require_vertices=kwargs.get('require_vertices', False))
        subset = kwargs.get('subset')
        if not errors and 'subset' in kwargs:
            if not isinstance(subset, EdgeSubset) or subset.m != graph.m:
                errors.append(f"El subconjunto de aristas debe tener longitud {graph.m}")
        self._raise_if(errors)
