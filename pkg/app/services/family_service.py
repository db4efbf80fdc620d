"""
Servicio de Familias - Construcciones extremales con verificación de invariantes
"""
import logging
from itertools import combinations
from typing import Any, Dict, List, Tuple

import networkx as nx

from .base_service import BaseService
from .graph_service import GraphService
from ..models.graph_model import Graph
from ..models.family_model import FamilySpec, BRIDGE_STAR, QUADRATIC_UNION
from ..models.certificate_model import (
    CITATIONS, ADDITIVITY_CITATION, EXACT_ODD_REGULAR_MAX, LOWER_BOUND_GT_DELTA
)
from ..schemas.report_schema import ManifestSchema
from ..exceptions.custom_exceptions import ValidationError, GeneratorInvariantError

logger = logging.getLogger(__name__)

MAX_CENSUS_ORDER = 10


class FamilyService(BaseService):
    """Servicio para generar las familias extremales y el censo de grafos cúbicos"""

    def __init__(self, graph_service=None, config=None):
        super().__init__(config)
        self.graph_service = graph_service or GraphService(self.config)
        self.manifest_schema = ManifestSchema()
        logger.info("FamilyService inicializado")

    def branch_graph(self, k: int) -> Graph:
        """
        K_{2k+3} sin el camino 1-0-2 ni el emparejamiento (3,4), (5,6), ...

        El vértice 0 queda con grado 2k y el resto con grado 2k+1.
        """
        self.validate_business_rules(k=k)
        order = 2 * k + 3
        removed = {(0, 1), (0, 2)} | {(i, i + 1) for i in range(3, order, 2)}
        return Graph(order, [pair for pair in combinations(range(order), 2) if pair not in removed])

    def bridge_star(self, k: int) -> Graph:
        """Centro unido al vértice de grado 2k de cada una de 2k+1 copias de la rama"""
        branch = self.branch_graph(k)
        copies = 2 * k + 1
        branches, offsets = self.graph_service.disjoint_union([branch] * copies)
        center = branches.n
        return Graph(center + 1, list(branches.edges) + [(offset, center) for offset in offsets])

    def quadratic_union(self, k: int) -> Tuple[Graph, int]:
        """Unión disjunta de bridge_star(1..k) y su índice de paleta predicho k² + 3k"""
        self.validate_business_rules(k=k)
        union, _ = self.graph_service.disjoint_union([self.bridge_star(i) for i in range(1, k + 1)])
        predicted = k * k + 3 * k
        max_degree = 2 * k + 1
        if 4 * predicted != max_degree * max_degree + 4 * max_degree - 5:
            raise GeneratorInvariantError(f"k² + 3k no coincide con (Δ²+4Δ−5)/4 para k={k}")
        return union, predicted

    def connected_quadratic(self, k: int) -> Graph:
        """H_k más un vértice ápice unido al menor vértice de cada componente"""
        union, _ = self.quadratic_union(k)
        apex = union.n
        anchors = [component[0] for component in self.graph_service.connected_components(union)]
        return Graph(apex + 1, list(union.edges) + [(anchor, apex) for anchor in anchors])

    def generate(self, spec: FamilySpec) -> Tuple[Graph, Dict[str, Any]]:
        """
        Genera la familia pedida y su manifiesto

        Raises:
            GeneratorInvariantError: algún invariante de la construcción falló
        """
        k = spec.k
        if spec.kind == BRIDGE_STAR:
            graph = self.bridge_star(k)
            predicted = {'palette_index': 2 * k + 2}
            citations = [CITATIONS[EXACT_ODD_REGULAR_MAX], CITATIONS[LOWER_BOUND_GT_DELTA]]
            invariants = self._bridge_star_invariants(graph, k)
        elif spec.kind == QUADRATIC_UNION:
            graph, value = self.quadratic_union(k)
            predicted = {'palette_index': value}
            citations = [ADDITIVITY_CITATION, CITATIONS[EXACT_ODD_REGULAR_MAX]]
            invariants = self._quadratic_invariants(graph, k)
        else:
            graph = self.connected_quadratic(k)
            predicted = {'palette_index_greater_than': k * k + 3 * k, 'max_degree': 2 * k + 2}
            citations = [ADDITIVITY_CITATION]
            invariants = self._apex_invariants(graph, k)

        failed = sorted(name for name, holds in invariants.items() if not holds)
        if failed:
            raise GeneratorInvariantError(
                f"La familia {spec.kind} con k={k} no cumple: {', '.join(failed)}",
                trace=[{'kind': spec.kind, 'k': k, 'failed': failed}]
            )

        manifest = self.manifest_schema.dump({
            'kind': spec.kind,
            'k': k,
            'n': graph.n,
            'm': graph.m,
            'graph6': self.graph_service.to_graph6(graph),
            'max_degree': max(graph.degrees()),
            'components': len(self.graph_service.connected_components(graph)),
            'predicted': predicted,
            'citations': citations,
            'invariants': invariants
        })
        logger.info(f"Familia {spec.kind} k={k} generada: n={graph.n}, m={graph.m}")
        return graph, manifest

    def _bridge_star_invariants(self, graph: Graph, k: int) -> Dict[str, bool]:
        center = graph.n - 1
        bridges = self.graph_service.bridges(graph)
        return {
            'vertex_count': graph.n == (2 * k + 1) * (2 * k + 3) + 1,
            'regular': set(graph.degrees()) == {2 * k + 1},
            'connected': self.graph_service.is_connected(graph),
            'center_edges_are_bridges': not graph.incident_mask(center) & ~bridges.bits
        }

    def _quadratic_invariants(self, graph: Graph, k: int) -> Dict[str, bool]:
        components = self.graph_service.connected_components(graph)
        degree_sets = [{graph.degree_of(v) for v in component} for component in components]
        disjoint = all(not degree_sets[i] & degree_sets[j] for i, j in combinations(range(len(degree_sets)), 2))
        delta = 2 * k + 1
        return {
            'component_count': len(components) == k,
            'component_degrees_disjoint': disjoint,
            'max_degree': max(graph.degrees()) == delta,
            'formula_identity': 4 * (k * k + 3 * k) == delta * delta + 4 * delta - 5
        }

    def _apex_invariants(self, graph: Graph, k: int) -> Dict[str, bool]:
        return {
            'connected': self.graph_service.is_connected(graph),
            'max_degree': max(graph.degrees()) == 2 * k + 2,
            'apex_degree': graph.degree_of(graph.n - 1) == k
        }

    # Censo de grafos cúbicos conexos

    def connected_cubic_graphs(self, n: int) -> List[Graph]:
        """
        Todos los grafos cúbicos conexos de orden n (hasta isomorfismo)

        Genera etiquetados en orden BFS (un vértice nuevo solo aparece como
        vecino del vértice en proceso y en orden creciente) y descarta
        duplicados con un invariante de distancias y nx.is_isomorphic.
        """
        if not isinstance(n, int) or n < 4 or n > MAX_CENSUS_ORDER:
            raise ValidationError(f"El orden del censo debe estar entre 4 y {MAX_CENSUS_ORDER}")
        if n % 2:
            return []

        neighbors = [0] * n
        degree = [0] * n
        representatives: Dict[Tuple, List[nx.Graph]] = {}
        found: List[Graph] = []

        def record() -> None:
            edges = sorted((u, w) for u in range(n) for w in range(u + 1, n) if neighbors[u] >> w & 1)
            graph = Graph(n, edges)
            nx_graph = self.graph_service.to_networkx(graph)
            key = self._census_invariant(nx_graph)
            bucket = representatives.setdefault(key, [])
            if any(nx.is_isomorphic(nx_graph, other) for other in bucket):
                return
            bucket.append(nx_graph)
            found.append(graph)

        def extend(v: int, introduced: int) -> None:
            while v < n and degree[v] == 3:
                v += 1
            if v == n:
                record()
                return
            if v >= introduced:
                return
            need = 3 - degree[v]
            old = [w for w in range(v + 1, introduced) if degree[w] < 3 and not neighbors[v] >> w & 1]
            for fresh in range(need + 1):
                if introduced + fresh > n:
                    break
                for chosen in combinations(old, need - fresh):
                    targets = chosen + tuple(range(introduced, introduced + fresh))
                    for w in targets:
                        neighbors[v] |= 1 << w
                        neighbors[w] |= 1 << v
                        degree[w] += 1
                    degree[v] = 3
                    extend(v + 1, introduced + fresh)
                    degree[v] = 3 - need
                    for w in targets:
                        neighbors[v] &= ~(1 << w)
                        neighbors[w] &= ~(1 << v)
                        degree[w] -= 1

        extend(0, 1)
        logger.info(f"Censo de cúbicos conexos con n={n}: {len(found)} grafos")
        return found

    @staticmethod
    def _census_invariant(nx_graph: nx.Graph) -> Tuple:
        triangles = nx.triangles(nx_graph)
        profile = []
        for v in nx_graph.nodes():
            layers: Dict[int, int] = {}
            for distance in nx.single_source_shortest_path_length(nx_graph, v).values():
                layers[distance] = layers.get(distance, 0) + 1
            profile.append((triangles[v], tuple(layers[d] for d in sorted(layers))))
        return tuple(sorted(profile))

    def validate_business_rules(self, **kwargs) -> None:
        k = kwargs.get('k')
        errors = []
        if not isinstance(k, int) or isinstance(k, bool) or k < 1:
            errors.append("El parámetro 'k' debe ser un entero positivo")
        self._raise_if(errors)
