"""
Modelo de Grafo - Grafo simple no dirigido con índices estables
"""
from typing import Dict, Any, Iterable, List, Optional, Tuple

from .base_model import BaseModel
from ..utils.bitsets import popcount, iter_bits, mask_from


class Graph(BaseModel):
    """Grafo simple: vértices 0..n-1 y aristas indexadas 0..m-1 en orden de entrada"""

    MAX_VERTICES = 1 << 16

    def __init__(self, n: int, edges: Iterable[Tuple[int, int]] = ()):
        self._n = n
        self._edges = tuple((int(u), int(v)) for u, v in edges)
        self.validate()

        adjacency: List[List[Tuple[int, int]]] = [[] for _ in range(n)]
        incident = [0] * n
        edge_index: Dict[Tuple[int, int], int] = {}
        for index, (u, v) in enumerate(self._edges):
            adjacency[u].append((v, index))
            adjacency[v].append((u, index))
            incident[u] |= 1 << index
            incident[v] |= 1 << index
            edge_index[(min(u, v), max(u, v))] = index
        self._adjacency = tuple(tuple(items) for items in adjacency)
        self._incident = tuple(incident)
        self._edge_index = edge_index

    @property
    def n(self) -> int:
        return self._n

    @property
    def m(self) -> int:
        return len(self._edges)

    @property
    def edges(self) -> Tuple[Tuple[int, int], ...]:
        return self._edges

    @property
    def adjacency(self) -> Tuple[Tuple[Tuple[int, int], ...], ...]:
        """Por vértice, la lista de (vecino, índice de arista)"""
        return self._adjacency

    def degree_of(self, v: int) -> int:
        return len(self._adjacency[v])

    def degrees(self) -> List[int]:
        return [len(items) for items in self._adjacency]

    def incident_mask(self, v: int) -> int:
        """Bitset de las aristas incidentes a v"""
        return self._incident[v]

    def edge_between(self, u: int, v: int) -> Optional[int]:
        """Índice de la arista uv, o None si no existe"""
        return self._edge_index.get((min(u, v), max(u, v)))

    def edge_set(self) -> frozenset:
        """Conjunto de aristas sin orden (para comparar grafos equivalentes)"""
        return frozenset(frozenset(edge) for edge in self._edges)

    def is_regular(self) -> bool:
        return self._n > 0 and len(set(self.degrees())) == 1

    def to_dict(self) -> Dict[str, Any]:
        return {
            'n': self._n,
            'm': self.m,
            'edges': [[u, v] for u, v in self._edges]
        }

    def validate(self) -> None:
        """Valida que el grafo sea simple y que los extremos existan"""
        errors = []

        if self._n < 0:
            errors.append("El número de vértices no puede ser negativo")
        elif self._n >= self.MAX_VERTICES:
            errors.append(f"El número de vértices debe ser menor a {self.MAX_VERTICES}")

        seen = set()
        for index, (u, v) in enumerate(self._edges):
            if not (0 <= u < self._n and 0 <= v < self._n):
                errors.append(f"La arista {index} ({u},{v}) tiene extremos fuera de rango")
                continue
            if u == v:
                errors.append(f"La arista {index} ({u},{v}) es un lazo")
                continue
            key = (min(u, v), max(u, v))
            if key in seen:
                errors.append(f"La arista {index} ({u},{v}) está duplicada")
            seen.add(key)

        if errors:
            raise ValueError("; ".join(errors))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and self._edges == other._edges

    def __hash__(self) -> int:
        return hash((self._n, self._edges))

    def __repr__(self) -> str:
        return f"<Graph(n={self._n}, m={self.m})>"


class EdgeSubset(BaseModel):
    """Subconjunto de aristas como vector de bits de longitud m"""

    def __init__(self, m: int, bits: int = 0):
        self.m = m
        self.bits = bits
        self.validate()

    @classmethod
    def from_indices(cls, m: int, indices: Iterable[int]) -> 'EdgeSubset':
        return cls(m, mask_from(indices))

    @classmethod
    def full(cls, m: int) -> 'EdgeSubset':
        return cls(m, (1 << m) - 1)

    def indices(self) -> List[int]:
        return list(iter_bits(self.bits))

    def symmetric_difference(self, other: 'EdgeSubset') -> 'EdgeSubset':
        self._check_same_length(other)
        return EdgeSubset(self.m, self.bits ^ other.bits)

    def complement(self) -> 'EdgeSubset':
        return EdgeSubset(self.m, ((1 << self.m) - 1) & ~self.bits)

    def _check_same_length(self, other: 'EdgeSubset') -> None:
        if self.m != other.m:
            raise ValueError(f"Los subconjuntos tienen longitudes distintas: {self.m} y {other.m}")

    def to_dict(self) -> Dict[str, Any]:
        return {'m': self.m, 'edges': self.indices()}

    def validate(self) -> None:
        errors = []
        if self.m < 0:
            errors.append("La longitud del subconjunto no puede ser negativa")
        if self.bits < 0 or self.bits >> max(self.m, 0):
            errors.append(f"El subconjunto contiene aristas fuera de 0..{self.m - 1}")
        if errors:
            raise ValueError("; ".join(errors))

    def __contains__(self, index: int) -> bool:
        return bool(self.bits >> index & 1)

    def __len__(self) -> int:
        return popcount(self.bits)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, EdgeSubset):
            return NotImplemented
        return self.m == other.m and self.bits == other.bits

    def __hash__(self) -> int:
        return hash((self.m, self.bits))

    def __repr__(self) -> str:
        return f"<EdgeSubset(m={self.m}, edges={self.indices()})>"
