"""
Modelo de Coloración - Coloraciones de aristas, tablas de paletas y resultados del solver
"""
from typing import Dict, Any, Iterable, List, Optional, Sequence, Tuple

from .base_model import BaseModel
from .graph_model import Graph, EdgeSubset
from ..utils.bitsets import iter_bits


EXACT_UNCONDITIONAL = 'exact-unconditional'


def exact_for_bounded_colors(c_max: int) -> str:
    """Etiqueta de exactitud restringida al universo de colores 1..c_max"""
    return f'exact-for-bounded-colors({c_max})'


class EdgeColoring(BaseModel):
    """Asignación arista -> color en {1..c_max}; el universo c_max se declara explícito"""

    def __init__(self, graph: Graph, colors: Sequence[int], c_max: int):
        self.graph = graph
        self.colors = tuple(int(color) for color in colors)
        self.c_max = int(c_max)
        self.validate()

    def used_colors(self) -> List[int]:
        return sorted(set(self.colors))

    def palette_mask(self, v: int) -> int:
        """Paleta de v como bitset (bit color-1)"""
        mask = 0
        for _, index in self.graph.adjacency[v]:
            mask |= 1 << (self.colors[index] - 1)
        return mask

    def color_class(self, color: int) -> EdgeSubset:
        return EdgeSubset.from_indices(
            self.graph.m, (index for index, value in enumerate(self.colors) if value == color)
        )

    def to_dict(self) -> Dict[str, Any]:
        return {'c_max': self.c_max, 'colors': list(self.colors)}

    def validate(self) -> None:
        errors = []
        if len(self.colors) != self.graph.m:
            errors.append(
                f"La coloración tiene {len(self.colors)} colores pero el grafo tiene {self.graph.m} aristas"
            )
        if self.c_max < 0 or (self.graph.m > 0 and self.c_max < 1):
            errors.append("El universo de colores debe contener al menos un color")
        out_of_range = [index for index, color in enumerate(self.colors) if not 1 <= color <= self.c_max]
        if out_of_range:
            errors.append(f"Las aristas {out_of_range[:10]} tienen colores fuera de 1..{self.c_max}")
        if errors:
            raise ValueError("; ".join(errors))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, EdgeColoring):
            return NotImplemented
        return self.graph == other.graph and self.colors == other.colors and self.c_max == other.c_max

    def __hash__(self) -> int:
        return hash((self.colors, self.c_max))

    def __repr__(self) -> str:
        return f"<EdgeColoring(m={len(self.colors)}, c_max={self.c_max})>"


class PaletteTable(BaseModel):
    """Paletas distintas P_1..P_t (orden lexicográfico) y la paleta de cada vértice"""

    def __init__(self, palettes: Iterable[Iterable[int]], vertex_palette: Sequence[int]):
        self.palettes = tuple(tuple(sorted(palette)) for palette in palettes)
        self.vertex_palette = tuple(vertex_palette)
        self.validate()
        self.masks = tuple(sum(1 << (color - 1) for color in palette) for palette in self.palettes)

    @classmethod
    def from_masks(cls, vertex_masks: Sequence[int]) -> 'PaletteTable':
        """Construye la tabla canónica a partir de las paletas por vértice"""
        distinct = sorted({tuple(color + 1 for color in iter_bits(mask)) for mask in vertex_masks})
        position = {palette: index for index, palette in enumerate(distinct)}
        vertex_palette = [position[tuple(color + 1 for color in iter_bits(mask))] for mask in vertex_masks]
        return cls(distinct, vertex_palette)

    @property
    def t(self) -> int:
        return len(self.palettes)

    def palette_of(self, v: int) -> Tuple[int, ...]:
        return self.palettes[self.vertex_palette[v]]

    def to_dict(self) -> Dict[str, Any]:
        return {
            't': self.t,
            'palettes': [list(palette) for palette in self.palettes],
            'vertex_palette': list(self.vertex_palette)
        }

    def validate(self) -> None:
        errors = []
        if len(set(self.palettes)) != len(self.palettes):
            errors.append("Las paletas deben ser distintas entre sí")
        if self.vertex_palette and not self.palettes:
            errors.append("Debe existir al menos una paleta cuando hay vértices")
        if any(not 0 <= index < len(self.palettes) for index in self.vertex_palette):
            errors.append("Hay vértices asociados a paletas inexistentes")
        if errors:
            raise ValueError("; ".join(errors))

    def __repr__(self) -> str:
        return f"<PaletteTable(t={self.t})>"


class PaletteIndexResult(BaseModel):
    """Resultado del solver exacto: valor, coloración testigo y bandera de exactitud"""

    def __init__(self, value: int, witness: EdgeColoring, exactness_flag: str, c_max: int,
                 lower_bound: int = 1, nodes: int = 0, lower_bound_sources: Optional[List[str]] = None):
        self.value = value
        self.witness = witness
        self.exactness_flag = exactness_flag
        self.c_max = c_max
        self.lower_bound = lower_bound
        self.nodes = nodes
        self.lower_bound_sources = lower_bound_sources or []
        self.validate()

    def to_dict(self) -> Dict[str, Any]:
        return {
            'value': self.value,
            'exactness_flag': self.exactness_flag,
            'c_max': self.c_max,
            'lower_bound': self.lower_bound,
            'lower_bound_sources': list(self.lower_bound_sources),
            'nodes': self.nodes,
            'witness': self.witness.to_dict()
        }

    def validate(self) -> None:
        errors = []
        if self.value < 1:
            errors.append("El índice de paleta debe ser al menos 1")
        if self.lower_bound > self.value:
            errors.append("La cota inferior no puede superar al valor")
        if errors:
            raise ValueError("; ".join(errors))

    def __repr__(self) -> str:
        return f"<PaletteIndexResult(value={self.value}, flag='{self.exactness_flag}')>"
