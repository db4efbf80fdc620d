"""
Servicio de Coloración - Coloraciones propias de aristas y solver exacto del índice de paleta
"""
import logging
from collections import defaultdict
from typing import Any, Dict, List, Optional, Tuple

from marshmallow import ValidationError as SchemaValidationError

from .base_service import BaseService
from .graph_service import GraphService
from ..models.graph_model import Graph
from ..models.coloring_model import (
    EdgeColoring, PaletteTable, PaletteIndexResult, EXACT_UNCONDITIONAL, exact_for_bounded_colors
)
from ..schemas.coloring_schema import ColoringSchema
from ..exceptions.custom_exceptions import (
    ValidationError, ParseError, ContractError, SearchBudgetExceededError, InvariantViolationError
)
from ..utils.bitsets import popcount

logger = logging.getLogger(__name__)

DISTINCT_DEGREES = 'distinct-degrees'


class _SearchFinished(Exception):
    """Señal interna: el incumbente alcanzó la cota inferior"""
    pass


class ColoringService(BaseService):
    """Servicio para construir, decidir y optimizar coloraciones de aristas"""

    def __init__(self, graph_service=None, certifier_service=None, config=None):
        super().__init__(config)
        self.graph_service = graph_service or GraphService(self.config)
        self._certifier_service = certifier_service
        self.coloring_schema = ColoringSchema()
        logger.info("ColoringService inicializado")

    @property
    def certifier_service(self):
        # Se crea bajo demanda: el certificador depende a su vez de este servicio
        if self._certifier_service is None:
            from .certifier_service import CertifierService
            self._certifier_service = CertifierService(
                graph_service=self.graph_service, coloring_service=self, config=self.config
            )
        return self._certifier_service

    # Propiedad y paletas

    def check_proper(self, coloring: EdgeColoring) -> bool:
        """Ningún vértice tiene dos aristas incidentes del mismo color"""
        graph = coloring.graph
        return all(popcount(coloring.palette_mask(v)) == graph.degree_of(v) for v in range(graph.n))

    def palettes(self, coloring: EdgeColoring) -> PaletteTable:
        if not self.check_proper(coloring):
            raise ContractError("La coloración no es propia: hay aristas incidentes con el mismo color")
        return PaletteTable.from_masks([coloring.palette_mask(v) for v in range(coloring.graph.n)])

    def palette_count(self, coloring: EdgeColoring) -> int:
        return self.palettes(coloring).t

    # Construcción de Vizing

    def vizing_coloring(self, graph: Graph) -> EdgeColoring:
        """
        Coloración propia con a lo sumo Δ+1 colores (rotación de abanicos y
        inversión de caminos cd). Determinista para un orden de aristas fijo.
        """
        self.validate_business_rules(graph=graph, require_edges=True)
        k = max(graph.degrees()) + 1
        colors = [0] * graph.m
        at: List[Dict[int, int]] = [dict() for _ in range(graph.n)]

        def free_color(v: int) -> int:
            for color in range(1, k + 1):
                if color not in at[v]:
                    return color
            raise InvariantViolationError(f"El vértice {v} no tiene colores libres entre 1..{k}")

        def recolor(assignments: List[Tuple[int, int]]) -> None:
            for index, _ in assignments:
                if colors[index]:
                    a, b = graph.edges[index]
                    del at[a][colors[index]]
                    del at[b][colors[index]]
            for index, color in assignments:
                a, b = graph.edges[index]
                colors[index] = color
                at[a][color] = index
                at[b][color] = index

        for index, (u, v) in enumerate(graph.edges):
            fan = [v]
            in_fan = {v}
            extended = True
            while extended:
                extended = False
                last = fan[-1]
                for w, edge in graph.adjacency[u]:
                    if w not in in_fan and colors[edge] and colors[edge] not in at[last]:
                        fan.append(w)
                        in_fan.add(w)
                        extended = True
                        break

            c = free_color(u)
            d = free_color(fan[-1])
            if c != d:
                path = []
                x, wanted = u, d
                while wanted in at[x]:
                    edge = at[x][wanted]
                    path.append(edge)
                    a, b = graph.edges[edge]
                    x = b if a == x else a
                    wanted = c if wanted == d else d
                recolor([(edge, c if colors[edge] == d else d) for edge in path])

            chosen = None
            for position, w in enumerate(fan):
                if position > 0:
                    previous = fan[position - 1]
                    if colors[graph.edge_between(u, w)] in at[previous]:
                        break
                if d not in at[w]:
                    chosen = position
                    break
            if chosen is None:
                raise InvariantViolationError(
                    f"No se encontró vértice del abanico libre de {d} al colorear la arista {index}",
                    trace=[{'edge': index, 'fan': fan, 'c': c, 'd': d}]
                )

            fan_edges = [graph.edge_between(u, w) for w in fan[:chosen + 1]]
            targets = [colors[fan_edges[j + 1]] for j in range(chosen)] + [d]
            recolor(list(zip(fan_edges, targets)))

        coloring = EdgeColoring(graph, colors, k)
        if not self.check_proper(coloring):
            raise InvariantViolationError("La coloración de Vizing no es propia")
        return coloring

    # Decisión de k-colorabilidad

    def is_k_edge_colorable(self, graph: Graph, k: int) -> Tuple[bool, Optional[EdgeColoring]]:
        """Decisión exacta por búsqueda completa; retorna la coloración testigo si existe"""
        self.validate_business_rules(graph=graph, k=k)
        if graph.m == 0:
            return True, EdgeColoring(graph, [], k)
        max_degree = max(graph.degrees())
        if k < max_degree:
            return False, None
        if k > max_degree:
            vizing = self.vizing_coloring(graph)
            return True, EdgeColoring(graph, vizing.colors, k)

        colors = [0] * graph.m
        used = [0] * graph.n
        full = (1 << k) - 1
        limit = self.config.NODE_LIMIT
        nodes = 0

        def most_constrained() -> Tuple[int, int]:
            best_edge, best_avail, best_size = -1, 0, k + 1
            for index, (u, v) in enumerate(graph.edges):
                if colors[index]:
                    continue
                avail = full & ~(used[u] | used[v])
                size = popcount(avail)
                if size < best_size:
                    best_edge, best_avail, best_size = index, avail, size
                    if size == 0:
                        break
            return best_edge, best_avail

        def search(colored: int, max_used: int) -> bool:
            nonlocal nodes
            if colored == graph.m:
                return True
            index, avail = most_constrained()
            u, v = graph.edges[index]
            for color in range(1, min(k, max_used + 1) + 1):
                bit = 1 << (color - 1)
                if not avail & bit:
                    continue
                nodes += 1
                if nodes > limit:
                    raise SearchBudgetExceededError(
                        f"Presupuesto agotado decidiendo {k}-colorabilidad", nodes=nodes, limit=limit
                    )
                colors[index] = color
                used[u] |= bit
                used[v] |= bit
                if search(colored + 1, max(max_used, color)):
                    return True
                colors[index] = 0
                used[u] &= ~bit
                used[v] &= ~bit
            return False

        if search(0, 0):
            logger.info(f"Grafo {graph} es {k}-coloreable por aristas ({nodes} nodos)")
            return True, EdgeColoring(graph, colors, k)
        logger.info(f"Grafo {graph} no es {k}-coloreable por aristas ({nodes} nodos)")
        return False, None

    # Solver exacto del índice de paleta

    def palette_index_exact(self, graph: Graph, c_max: Optional[int] = None) -> PaletteIndexResult:
        """
        Mínimo número de paletas distintas sobre las coloraciones propias con
        colores en 1..c_max (por defecto Δ+2), por ramificación y acotación.

        Raises:
            ValidationError: sin aristas, vértices aislados, c_max < Δ o sin coloración posible
            SearchBudgetExceededError: se agotó el presupuesto de nodos
        """
        self.validate_business_rules(graph=graph, require_edges=True, forbid_isolated=True, c_max=c_max)
        degrees = graph.degrees()
        if c_max is None:
            c_max = max(degrees) + 2
        regular = graph.is_regular()

        lower, sources = self._lower_bound(graph)

        best_value = None
        best_colors: Optional[List[int]] = None
        vizing = self.vizing_coloring(graph)
        if max(vizing.colors) <= c_max:
            best_colors = list(vizing.colors)
            best_value = self.palette_count(vizing)
            logger.info(f"Incumbente inicial de Vizing: {best_value} paletas")

        order = sorted(range(graph.m), key=lambda e: (-(degrees[graph.edges[e][0]] + degrees[graph.edges[e][1]]), e))
        classes: Dict[int, List[int]] = defaultdict(list)
        for v, degree in enumerate(degrees):
            classes[degree].append(v)
        degree_classes = sorted(classes.items())

        colors = [0] * graph.m
        used = [0] * graph.n
        remaining = list(degrees)
        full = (1 << c_max) - 1
        limit = self.config.NODE_LIMIT
        nodes = 0

        def goal() -> float:
            if best_value is None:
                return float('inf')
            target = best_value - 1
            if regular and target == 2:
                target = 1
            return target

        def palette_bound() -> int:
            total = 0
            for degree, vertices in degree_classes:
                complete = set()
                partial = []
                for v in vertices:
                    if remaining[v] == 0:
                        complete.add(used[v])
                    elif used[v]:
                        partial.append(used[v])
                forced = []
                for mask in partial:
                    if any(not mask & ~palette for palette in complete):
                        continue
                    if all(popcount(mask | other) > degree for other in forced):
                        forced.append(mask)
                total += max(1, len(complete) + len(forced))
            return total

        def feasible(u: int, v: int) -> bool:
            for x in (u, v):
                for y, edge in graph.adjacency[x]:
                    if not colors[edge] and not full & ~(used[x] | used[y]):
                        return False
            return True

        def search(position: int, max_used: int) -> None:
            nonlocal nodes, best_value, best_colors
            if position == graph.m:
                value = len(set(used))
                if value <= goal():
                    best_value = value
                    best_colors = list(colors)
                    logger.info(f"Nuevo incumbente: {value} paletas ({nodes} nodos)")
                    if best_value <= lower:
                        raise _SearchFinished()
                return
            index = order[position]
            u, v = graph.edges[index]
            avail = full & ~(used[u] | used[v])
            for color in range(1, min(c_max, max_used + 1) + 1):
                bit = 1 << (color - 1)
                if not avail & bit:
                    continue
                nodes += 1
                if nodes > limit:
                    raise SearchBudgetExceededError(
                        f"Presupuesto de {limit} nodos agotado calculando el índice de paleta",
                        nodes=nodes, limit=limit
                    )
                colors[index] = color
                used[u] |= bit
                used[v] |= bit
                remaining[u] -= 1
                remaining[v] -= 1
                if feasible(u, v) and palette_bound() <= goal():
                    search(position + 1, max(max_used, color))
                colors[index] = 0
                used[u] &= ~bit
                used[v] &= ~bit
                remaining[u] += 1
                remaining[v] += 1

        if best_value is None or best_value > lower:
            try:
                search(0, 0)
            except _SearchFinished:
                pass

        if best_value is None:
            raise ValidationError(f"No existe coloración propia de {graph} con colores en 1..{c_max}")
        if lower > best_value:
            raise InvariantViolationError(
                f"La cota inferior {lower} supera el valor encontrado {best_value}",
                trace=[{'sources': sources, 'c_max': c_max}]
            )

        unconditional = best_value == lower or best_value == 1
        if regular and degrees[0] == 3 and self.graph_service.is_connected(graph):
            classification = self.certifier_service.classify_cubic(graph).values['exact']
            if c_max >= 4 and classification != best_value:
                raise InvariantViolationError(
                    f"El solver obtuvo {best_value} pero la clasificación cúbica da {classification}"
                )
            unconditional = unconditional or classification == best_value

        flag = EXACT_UNCONDITIONAL if unconditional else exact_for_bounded_colors(c_max)
        logger.info(f"Índice de paleta de {graph}: {best_value} ({flag}, {nodes} nodos)")
        return PaletteIndexResult(
            value=best_value,
            witness=EdgeColoring(graph, best_colors, c_max),
            exactness_flag=flag,
            c_max=c_max,
            lower_bound=lower,
            nodes=nodes,
            lower_bound_sources=sources
        )

    def _lower_bound(self, graph: Graph) -> Tuple[int, List[str]]:
        """Cota inferior incondicional y las fuentes que la alcanzan"""
        candidates = [(DISTINCT_DEGREES, len(set(graph.degrees())))]
        try:
            certificate = self.certifier_service.certify_lower_bound(graph)
            if certificate is not None:
                candidates.append((certificate.citation, certificate.values['lower']))
        except SearchBudgetExceededError as e:
            logger.warning(f"Cota por subgrafo par indecisa, se omite: {str(e)}")
        lower = max(value for _, value in candidates)
        return lower, [name for name, value in candidates if value == lower]

    def kempe_swap(self, coloring: EdgeColoring, vertex: int, first: int, second: int) -> EdgeColoring:
        """Intercambia los colores first/second en la componente bicolor que contiene a vertex"""
        graph = coloring.graph
        self.validate_business_rules(graph=graph, vertex=vertex)
        colors = list(coloring.colors)
        pending = [vertex]
        seen = {vertex}
        swapped = set()
        while pending:
            x = pending.pop()
            for y, edge in graph.adjacency[x]:
                if colors[edge] in (first, second) and edge not in swapped:
                    swapped.add(edge)
                    if y not in seen:
                        seen.add(y)
                        pending.append(y)
        for edge in swapped:
            colors[edge] = second if colors[edge] == first else first
        return EdgeColoring(graph, colors, coloring.c_max)

    # Serialización

    def coloring_from_dict(self, graph: Graph, data: Any) -> EdgeColoring:
        """Lee {"c_max": int, "colors": [...]} y verifica que la coloración sea propia"""
        try:
            loaded = self.coloring_schema.load(data)
        except SchemaValidationError as e:
            raise ParseError(f"Coloración inválida: {e.messages}")
        try:
            coloring = EdgeColoring(graph, loaded['colors'], loaded['c_max'])
        except ValueError as e:
            raise ParseError(f"Coloración inválida: {str(e)}")
        if not self.check_proper(coloring):
            raise ContractError("La coloración no es propia: hay aristas incidentes con el mismo color")
        return coloring

    def coloring_to_dict(self, coloring: EdgeColoring) -> Dict[str, Any]:
        return self.coloring_schema.dump(coloring.to_dict())

    def validate_business_rules(self, **kwargs) -> None:
        """Valida el grafo, el universo de colores y el parámetro k"""
        graph = kwargs.get('graph')
        errors = self._graph_errors(
            graph,
            require_edges=kwargs.get('require_edges', False),
            forbid_isolated=kwargs.get('forbid_isolated', False)
        )
        c_max = kwargs.get('c_max')
        if not errors and c_max is not None:
            max_degree = max(graph.degrees(), default=0)
            if not isinstance(c_max, int) or c_max < max_degree:
                errors.append(f"c_max={c_max} es menor que Δ={max_degree}: no existe coloración propia")
        if not errors and 'vertex' in kwargs:
            vertex = kwargs['vertex']
            if not isinstance(vertex, int) or not 0 <= vertex < graph.n:
                errors.append(f"El vértice {vertex} está fuera de 0..{graph.n - 1}")
        if 'k' in kwargs:
            k = kwargs['k']
            if not isinstance(k, int) or k < 1:
                errors.append("El parámetro 'k' debe ser un entero positivo")
        self._raise_if(errors)
