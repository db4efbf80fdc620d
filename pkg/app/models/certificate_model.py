"""
Modelos del certificador - Conjuntos de colores, vectores de paridad y certificados
"""
from typing import Dict, Any, Iterable, List, Optional, Tuple

from .base_model import BaseModel
from ..utils.bitsets import popcount, iter_bits, mask_from


LOWER_BOUND_GT_DELTA = 'LOWER_BOUND_GT_DELTA'
EXACT_ODD_REGULAR_MAX = 'EXACT_ODD_REGULAR_MAX'
CUBIC_CLASS = 'CUBIC_CLASS'
UPPER_BOUND_VIZING = 'UPPER_BOUND_VIZING'

CERTIFICATE_KINDS = (LOWER_BOUND_GT_DELTA, EXACT_ODD_REGULAR_MAX, CUBIC_CLASS, UPPER_BOUND_VIZING)

CITATIONS = {
    LOWER_BOUND_GT_DELTA: 'lower-bound:no-spanning-even',
    EXACT_ODD_REGULAR_MAX: 'odd-regular-max',
    CUBIC_CLASS: 'cubic-classification',
    UPPER_BOUND_VIZING: 'vizing-upper'
}

ADDITIVITY_CITATION = 'disjoint-union-additivity'


class ColorSet(BaseModel):
    """Subconjunto A del universo de colores {1..c_max} (bit color-1)"""

    def __init__(self, c_max: int, bits: int = 0):
        self.c_max = c_max
        self.bits = bits
        self.validate()

    @classmethod
    def from_colors(cls, c_max: int, colors: Iterable[int]) -> 'ColorSet':
        return cls(c_max, mask_from(color - 1 for color in colors))

    def colors(self) -> List[int]:
        return [index + 1 for index in iter_bits(self.bits)]

    def symmetric_difference(self, other: 'ColorSet') -> 'ColorSet':
        if self.c_max != other.c_max:
            raise ValueError("Los conjuntos de colores pertenecen a universos distintos")
        return ColorSet(self.c_max, self.bits ^ other.bits)

    def to_dict(self) -> Dict[str, Any]:
        return {'c_max': self.c_max, 'colors': self.colors()}

    def validate(self) -> None:
        errors = []
        if self.c_max < 0:
            errors.append("El universo de colores no puede ser negativo")
        if self.bits < 0 or self.bits >> max(self.c_max, 0):
            errors.append(f"El conjunto contiene colores fuera de 1..{self.c_max}")
        if errors:
            raise ValueError("; ".join(errors))

    def __len__(self) -> int:
        return popcount(self.bits)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ColorSet):
            return NotImplemented
        return self.c_max == other.c_max and self.bits == other.bits

    def __hash__(self) -> int:
        return hash((self.c_max, self.bits))

    def __repr__(self) -> str:
        return f"<ColorSet({self.colors()})>"


class ParityVector(BaseModel):
    """Imagen de un conjunto de colores en Z_2^t (bit i = paridad en la paleta i)"""

    def __init__(self, t: int, bits: int = 0):
        self.t = t
        self.bits = bits
        self.validate()

    def is_zero(self) -> bool:
        return self.bits == 0

    def as_tuple(self) -> Tuple[int, ...]:
        return tuple(self.bits >> index & 1 for index in range(self.t))

    def __add__(self, other: 'ParityVector') -> 'ParityVector':
        if self.t != other.t:
            raise ValueError("Los vectores de paridad tienen longitudes distintas")
        return ParityVector(self.t, self.bits ^ other.bits)

    def to_dict(self) -> Dict[str, Any]:
        return {'t': self.t, 'bits': list(self.as_tuple())}

    def validate(self) -> None:
        if self.t < 0 or self.bits < 0 or self.bits >> max(self.t, 0):
            raise ValueError(f"El vector de paridad no cabe en longitud {self.t}")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ParityVector):
            return NotImplemented
        return self.t == other.t and self.bits == other.bits

    def __hash__(self) -> int:
        return hash((self.t, self.bits))

    def __repr__(self) -> str:
        return f"<ParityVector({self.as_tuple()})>"


class Certificate(BaseModel):
    """Evidencia etiquetada sobre el índice de paleta, verificable fuera de línea"""

    def __init__(self, kind: str, values: Dict[str, Any], evidence: Dict[str, Any],
                 citation: Optional[str] = None):
        self.kind = kind
        self.values = dict(values)
        self.evidence = dict(evidence)
        self.citation = citation or CITATIONS.get(kind, '')
        self.validate()

    def to_dict(self) -> Dict[str, Any]:
        return {
            'kind': self.kind,
            'values': dict(self.values),
            'evidence': dict(self.evidence),
            'citation': self.citation
        }

    def validate(self) -> None:
        errors = []
        if self.kind not in CERTIFICATE_KINDS:
            errors.append(f"Tipo de certificado desconocido: {self.kind}")
        if not self.values:
            errors.append("El certificado debe declarar al menos un valor")
        if errors:
            raise ValueError("; ".join(errors))

    def __repr__(self) -> str:
        return f"<Certificate(kind='{self.kind}', values={self.values})>"
