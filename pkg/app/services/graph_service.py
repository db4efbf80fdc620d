"""
Servicio de Grafos - Lectura, escritura y primitivas estructurales
"""
import hashlib
import logging
from typing import Iterable, List, Optional, Sequence, Tuple

import networkx as nx

from .base_service import BaseService
from ..models.graph_model import Graph, EdgeSubset
from ..exceptions.custom_exceptions import ValidationError, ParseError
from ..utils import graph6

logger = logging.getLogger(__name__)


class GraphService(BaseService):
    """Servicio para ingesta de grafos y operaciones estructurales"""

    def __init__(self, config=None):
        super().__init__(config)
        logger.info("GraphService inicializado")

    # Ingesta y serialización

    def parse_graph6(self, text: str) -> Graph:
        """Lee una cadena graph6 (se acepta el encabezado >>graph6<<)"""
        n, edges = graph6.decode(text)
        try:
            return Graph(n, edges)
        except ValueError as e:
            raise ParseError(f"Grafo graph6 inválido: {str(e)}")

    def to_graph6(self, graph: Graph) -> str:
        """graph6 sin encabezado ni salto de línea"""
        return nx.to_graph6_bytes(self.to_networkx(graph), header=False).decode('ascii').strip()

    def parse_edge_list(self, text: str) -> Graph:
        """
        Lee una lista de aristas "u v" por línea con encabezado opcional "n m"

        La primera línea se toma como encabezado si su segundo número coincide
        con la cantidad de aristas restantes y todos los vértices restantes son
        menores que su primer número. Una única línea "n 0" es el grafo sin
        aristas de n vértices.

        Raises:
            ParseError: token no entero, lazo o arista duplicada, con número de línea
        """
        entries: List[Tuple[int, int, int]] = []
        for line_number, raw in enumerate(text.splitlines(), start=1):
            line = raw.split('#', 1)[0].strip()
            if not line:
                continue
            tokens = line.split()
            if len(tokens) != 2:
                raise ParseError(f"Se esperaban dos enteros y se encontraron {len(tokens)} tokens", line=line_number)
            try:
                u, v = int(tokens[0]), int(tokens[1])
            except ValueError:
                raise ParseError(f"Token no entero en '{line}'", line=line_number)
            if u < 0 or v < 0:
                raise ParseError(f"Los vértices deben ser enteros no negativos: '{line}'", line=line_number)
            entries.append((line_number, u, v))

        n = None
        if len(entries) > 1 or (entries and entries[0][2] == 0):
            _, header_n, header_m = entries[0]
            rest = entries[1:]
            if header_m == len(rest) and all(u < header_n and v < header_n for _, u, v in rest):
                n = header_n
                entries = rest

        edges = []
        seen = set()
        for line_number, u, v in entries:
            if u == v:
                raise ParseError(f"Lazo en el vértice {u}", line=line_number)
            key = (min(u, v), max(u, v))
            if key in seen:
                raise ParseError(f"Arista duplicada ({u},{v})", line=line_number)
            seen.add(key)
            edges.append((u, v))

        if n is None:
            n = 1 + max((max(u, v) for u, v in edges), default=-1)
        try:
            return Graph(n, edges)
        except ValueError as e:
            raise ParseError(f"Lista de aristas inválida: {str(e)}")

    def parse_input(self, text: str) -> Graph:
        """Detecta el formato (lista de aristas o graph6) y lee el grafo"""
        lines = [line.split('#', 1)[0].strip() for line in text.splitlines()]
        lines = [line for line in lines if line]
        if not lines:
            raise ParseError("La entrada está vacía")
        if all(token.lstrip('-').isdigit() for token in lines[0].split()):
            return self.parse_edge_list(text)
        if len(lines) > 1:
            raise ParseError("La entrada graph6 debe contener un único grafo", line=2)
        return self.parse_graph6(lines[0])

    def digest(self, graph: Graph) -> str:
        """Huella sha256 del grafo en graph6 más el orden de aristas"""
        payload = self.to_graph6(graph) + '|' + ','.join(f"{u}-{v}" for u, v in graph.edges)
        return hashlib.sha256(payload.encode('utf-8')).hexdigest()

    # Primitivas estructurales

    def degree(self, graph: Graph, v: int) -> int:
        self.validate_business_rules(graph=graph, vertex=v)
        return graph.degree_of(v)

    def min_max_degree(self, graph: Graph) -> Tuple[int, int]:
        self.validate_business_rules(graph=graph, require_vertices=True)
        degrees = graph.degrees()
        return min(degrees), max(degrees)

    def to_networkx(self, graph: Graph) -> nx.Graph:
        nx_graph = nx.Graph()
        nx_graph.add_nodes_from(range(graph.n))
        nx_graph.add_edges_from(graph.edges)
        return nx_graph

    def from_networkx(self, nx_graph: nx.Graph) -> Graph:
        """Convierte un grafo networkx con nodos 0..n-1 (aristas en orden lexicográfico)"""
        nodes = sorted(nx_graph.nodes())
        position = {node: index for index, node in enumerate(nodes)}
        edges = sorted((min(position[u], position[v]), max(position[u], position[v])) for u, v in nx_graph.edges())
        return Graph(len(nodes), edges)

    def bridges(self, graph: Graph) -> EdgeSubset:
        """Aristas cuya eliminación aumenta el número de componentes"""
        bits = 0
        for u, v in nx.bridges(self.to_networkx(graph)):
            bits |= 1 << graph.edge_between(u, v)
        return EdgeSubset(graph.m, bits)

    def connected_components(self, graph: Graph) -> List[List[int]]:
        """Componentes conexas ordenadas por su menor vértice"""
        components = [sorted(component) for component in nx.connected_components(self.to_networkx(graph))]
        return sorted(components, key=lambda component: component[0])

    def component_subgraphs(self, graph: Graph) -> List[Graph]:
        """Cada componente como grafo propio, vértices renumerados en orden creciente"""
        nx_graph = self.to_networkx(graph)
        return [self.from_networkx(nx_graph.subgraph(component)) for component in self.connected_components(graph)]

    def is_connected(self, graph: Graph) -> bool:
        return graph.n > 0 and len(self.connected_components(graph)) == 1

    def has_perfect_matching(self, graph: Graph) -> Tuple[bool, Optional[EdgeSubset]]:
        """Decide si existe un 1-factor; retorna el emparejamiento como testigo"""
        if graph.n % 2:
            return False, None
        if graph.n == 0:
            return True, EdgeSubset(graph.m, 0)
        matching = nx.max_weight_matching(self.to_networkx(graph), maxcardinality=True)
        if 2 * len(matching) != graph.n:
            return False, None
        witness = EdgeSubset.from_indices(graph.m, (graph.edge_between(u, v) for u, v in matching))
        if not self.is_perfect_matching(graph, witness):
            raise ValidationError("El emparejamiento obtenido no cubre todos los vértices")
        return True, witness

    def is_perfect_matching(self, graph: Graph, subset: EdgeSubset) -> bool:
        """Aristas disjuntas que cubren cada vértice exactamente una vez"""
        covered = [0] * graph.n
        for index in subset.indices():
            u, v = graph.edges[index]
            covered[u] += 1
            covered[v] += 1
        return all(count == 1 for count in covered)

    # Construcciones auxiliares

    def without_edges(self, graph: Graph, removed: Iterable[int]) -> Graph:
        """Grafo con las aristas indicadas eliminadas (los índices restantes se compactan)"""
        drop = set(removed)
        return Graph(graph.n, [edge for index, edge in enumerate(graph.edges) if index not in drop])

    def disjoint_union(self, graphs: Sequence[Graph]) -> Tuple[Graph, List[int]]:
        """Unión disjunta en orden; retorna el grafo y el desplazamiento de cada parte"""
        offsets = []
        edges = []
        total = 0
        for part in graphs:
            offsets.append(total)
            edges.extend((u + total, v + total) for u, v in part.edges)
            total += part.n
        return Graph(total, edges), offsets

    def validate_business_rules(self, **kwargs) -> None:
        """Valida el grafo y, si se indica, el vértice consultado"""
        graph = kwargs.get('graph')
        errors = self._graph_errors(graph, require_vertices=kwargs.get('require_vertices', False))
        if not errors and 'vertex' in kwargs:
            vertex = kwargs['vertex']
            if not isinstance(vertex, int) or not 0 <= vertex < graph.n:
                errors.append(f"El vértice {vertex} está fuera de 0..{graph.n - 1}")
        self._raise_if(errors)
