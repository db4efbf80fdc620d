"""
Servicio de Corpus - Grafos con nombre e instancias aleatorias con semilla
"""
import logging
import random
from typing import List, Optional, Sequence, Tuple

import networkx as nx

from .base_service import BaseService
from .graph_service import GraphService
from .coloring_service import ColoringService
from .family_service import FamilyService
from ..models.graph_model import Graph
from ..models.coloring_model import EdgeColoring
from ..exceptions.custom_exceptions import ValidationError

logger = logging.getLogger(__name__)

ORACLE_CORPUS_SIZE = 50
ORACLE_MAX_DIMENSION = 14
REMARK_MAX_COLORS = 12
# Fracción máxima (1/n) de muestras donde los colores usados son exactamente δ
SHORTCUT_SHARE = 5
PERTURB_RATE = 0.85


class CorpusService(BaseService):
    """Servicio para construir los grafos y coloraciones de los experimentos"""

    def __init__(self, graph_service=None, coloring_service=None, family_service=None, config=None):
        super().__init__(config)
        self.graph_service = graph_service or GraphService(self.config)
        self.coloring_service = coloring_service or ColoringService(graph_service=self.graph_service,
                                                                    config=self.config)
        self.family_service = family_service or FamilyService(graph_service=self.graph_service, config=self.config)
        logger.info("CorpusService inicializado")

    # Grafos con nombre

    def complete(self, n: int) -> Graph:
        return self.graph_service.from_networkx(nx.complete_graph(n))

    def cycle(self, n: int) -> Graph:
        """Ciclo con aristas 01, 12, ..., (n-1)0 en orden"""
        self.validate_business_rules(n=n, minimum=3)
        return Graph(n, [(i, (i + 1) % n) for i in range(n)])

    def path(self, n: int) -> Graph:
        self.validate_business_rules(n=n, minimum=1)
        return Graph(n, [(i, i + 1) for i in range(n - 1)])

    def star(self, leaves: int) -> Graph:
        return Graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])

    def petersen(self) -> Graph:
        return self.graph_service.from_networkx(nx.petersen_graph())

    def circulant(self, n: int, jumps: Sequence[int]) -> Graph:
        return self.graph_service.from_networkx(nx.circulant_graph(n, list(jumps)))

    def named(self, name: str) -> Graph:
        """K4, K5, C5, P3, K1_3, PETERSEN, ... (sin distinguir mayúsculas)"""
        key = name.strip().upper()
        if key == 'PETERSEN':
            return self.petersen()
        if key.startswith('K1_') and key[3:].isdigit():
            return self.star(int(key[3:]))
        if len(key) > 1 and key[1:].isdigit():
            builders = {'K': self.complete, 'C': self.cycle, 'P': self.path}
            if key[0] in builders:
                return builders[key[0]](int(key[1:]))
        raise ValidationError(f"Grafo con nombre desconocido: {name}")

    # Instancias aleatorias

    def random_tree(self, n: int, rng: random.Random) -> Graph:
        """Árbol uniforme a partir de una secuencia de Prüfer"""
        self.validate_business_rules(n=n, minimum=2)
        if n == 2:
            return self.path(2)
        return self.graph_service.from_networkx(nx.from_prufer_sequence([rng.randrange(n) for _ in range(n - 2)]))

    def random_gnp(self, n: int, p: float, rng: random.Random) -> Graph:
        return self.graph_service.from_networkx(nx.gnp_random_graph(n, p, seed=rng.randrange(1 << 30)))

    def even_oracle_corpus(self, seed: Optional[int] = None) -> List[Tuple[str, Graph]]:
        """Corpus fijo de 50 grafos con espacio de ciclos de dimensión acotada"""
        rng = random.Random(self.config.SEED if seed is None else seed)
        corpus: List[Tuple[str, Graph]] = []
        for n in (2, 3, 5, 8, 12):
            corpus.append((f"tree-{n}", self.random_tree(n, rng)))
        for n in range(3, 9):
            corpus.append((f"C{n}", self.cycle(n)))
        corpus += [
            ('K4', self.complete(4)),
            ('K5', self.complete(5)),
            ('PETERSEN', self.petersen()),
            ('BRIDGE_STAR-1', self.family_service.bridge_star(1)),
            ('K1_3', self.star(3)),
            ('K3_3', self.graph_service.from_networkx(nx.complete_bipartite_graph(3, 3))),
            ('C8(1,4)', self.circulant(8, [1, 4])),
            ('K4-K4', self.graph_service.disjoint_union([self.complete(4), self.complete(4)])[0]),
        ]
        index = 0
        while len(corpus) < ORACLE_CORPUS_SIZE:
            n = rng.randint(5, 12)
            graph = self.random_gnp(n, rng.uniform(0.2, 0.6), rng)
            if graph.m == 0 or graph.m - graph.n + len(self.graph_service.connected_components(graph)) > ORACLE_MAX_DIMENSION:
                continue
            corpus.append((f"gnp-{index}", graph))
            index += 1
        return corpus

    # Coloraciones de muestra

    def equitable_circulant_coloring(self, n: int, jumps: Sequence[int], c_max: Optional[int] = None,
                                     with_diameter: bool = False) -> EdgeColoring:
        """
        Circulante de orden par con saltos impares: la arista (i, i+j) del
        salto número s recibe el color 2s+1 o 2s+2 según la paridad de i.
        Con with_diameter se agrega el emparejamiento (i, i+n/2) con un color propio.
        """
        errors = []
        if n % 2 or any(j % 2 == 0 or not 0 < j < n // 2 for j in jumps) or len(set(jumps)) != len(jumps):
            errors.append("Se requiere n par y saltos impares distintos menores que n/2")
        self._raise_if(errors)
        edges = []
        colors = []
        for position, jump in enumerate(jumps):
            for i in range(n):
                edges.append((i, (i + jump) % n))
                colors.append(2 * position + 1 + i % 2)
        used = 2 * len(jumps)
        if with_diameter:
            used += 1
            for i in range(n // 2):
                edges.append((i, i + n // 2))
                colors.append(used)
        return EdgeColoring(Graph(n, edges), colors, c_max or used)

    def matching_bipartite_coloring(self, half: int, r: int, rng: random.Random,
                                    c_max: Optional[int] = None) -> EdgeColoring:
        """Grafo bipartito r-regular como unión de r emparejamientos perfectos disjuntos (color i)"""
        self.validate_business_rules(n=half, minimum=r)
        while True:
            used = set()
            edges = []
            colors = []
            for color in range(1, r + 1):
                for _ in range(100):
                    permutation = list(range(half))
                    rng.shuffle(permutation)
                    pairs = [(i, half + permutation[i]) for i in range(half)]
                    if not used.intersection(pairs):
                        break
                else:
                    break
                used.update(pairs)
                edges.extend(pairs)
                colors.extend([color] * half)
            if len(edges) == half * r:
                return EdgeColoring(Graph(2 * half, edges), colors, c_max or r)

    def perturb(self, coloring: EdgeColoring, rng: random.Random, steps: int = 2) -> EdgeColoring:
        """Intercambios de Kempe y recoloreos de una arista con un color libre en ambos extremos"""
        graph = coloring.graph
        for _ in range(steps):
            edge = rng.randrange(graph.m)
            u, v = graph.edges[edge]
            blocked = coloring.palette_mask(u) | coloring.palette_mask(v)
            free = [color for color in range(1, coloring.c_max + 1) if not blocked >> (color - 1) & 1]
            if free and rng.random() < 0.5:
                colors = list(coloring.colors)
                colors[edge] = rng.choice(free)
                coloring = EdgeColoring(graph, colors, coloring.c_max)
            else:
                other = rng.randint(1, coloring.c_max)
                if other != coloring.colors[edge]:
                    coloring = self.coloring_service.kempe_swap(coloring, u, coloring.colors[edge], other)
        return coloring

    def colored_samples(self, count: int, seed: Optional[int] = None) -> List[Tuple[str, EdgeColoring]]:
        """
        Coloraciones propias con t <= δ y Δ >= 2: circulantes pares equitativos,
        circulantes impares de clase 1, bipartitos regulares y perturbaciones
        que conservan t <= δ; el universo declarado c_max tiene colores de sobra.
        A lo sumo count // SHORTCUT_SHARE muestras usan exactamente δ colores;
        el resto introduce colores nuevos y recorre la extracción completa.
        """
        rng = random.Random(self.config.SEED if seed is None else seed)
        samples: List[Tuple[str, EdgeColoring]] = []
        attempts = 0
        shortcuts = 0
        while len(samples) < count:
            attempts += 1
            if attempts > 50 * count:
                raise ValidationError(f"No se pudieron generar {count} coloraciones con t <= δ")
            source = rng.randrange(3)
            if source < 2:
                n = 2 * rng.randint(3, 8)
                odd_jumps = [j for j in range(1, n // 2) if j % 2]
                jumps = sorted(rng.sample(odd_jumps, rng.randint(1, min(2, len(odd_jumps)))))
                base = self.equitable_circulant_coloring(n, jumps, with_diameter=source == 1)
                label = f"circulant-{n}-{'-'.join(map(str, jumps))}{'-d' if source == 1 else ''}"
            else:
                r = rng.randint(2, 4)
                half = rng.randint(r, 7)
                base = self.matching_bipartite_coloring(half, r, rng)
                label = f"bipartite-{half}-{r}"
            if max(base.graph.degrees()) < 2:
                continue
            c_max = base.c_max + rng.randint(1, 3)
            coloring = EdgeColoring(base.graph, base.colors, c_max)
            if rng.random() < PERTURB_RATE:
                coloring = self.perturb(coloring, rng, steps=rng.randint(1, 3))
                label += '-perturbed'
            min_degree = min(coloring.graph.degrees())
            if self.coloring_service.palette_count(coloring) > min_degree:
                continue
            if len(coloring.used_colors()) == min_degree:
                if shortcuts >= count // SHORTCUT_SHARE:
                    continue
                shortcuts += 1
            samples.append((f"{label}-c{c_max}-{len(samples)}", coloring))
        return samples

    def remark_samples(self, count: int, seed: Optional[int] = None) -> List[Tuple[str, EdgeColoring]]:
        """Grafos aleatorios con coloraciones propias en universos de a lo sumo 12 colores"""
        rng = random.Random(self.config.SEED + 1 if seed is None else seed)
        samples: List[Tuple[str, EdgeColoring]] = []
        while len(samples) < count:
            graph = self.random_gnp(rng.randint(5, 10), rng.uniform(0.3, 0.6), rng)
            if graph.m == 0 or max(graph.degrees()) + 1 > REMARK_MAX_COLORS:
                continue
            vizing = self.coloring_service.vizing_coloring(graph)
            c_max = rng.randint(vizing.c_max, REMARK_MAX_COLORS)
            relabel = rng.sample(range(1, c_max + 1), vizing.c_max)
            coloring = EdgeColoring(graph, [relabel[color - 1] for color in vizing.colors], c_max)
            coloring = self.perturb(coloring, rng, steps=rng.randint(0, 3))
            samples.append((f"remark-{len(samples)}", coloring))
        return samples

    def validate_business_rules(self, **kwargs) -> None:
        n = kwargs.get('n')
        minimum = kwargs.get('minimum', 0)
        errors = []
        if not isinstance(n, int) or n < minimum:
            errors.append(f"El orden debe ser un entero mayor o igual a {minimum}")
        self._raise_if(errors)
