"""
Modelo de Familia - Parámetros de las construcciones extremales
"""
from typing import Dict, Any

from .base_model import BaseModel


BRIDGE_STAR = 'BRIDGE_STAR'
QUADRATIC_UNION = 'QUADRATIC_UNION'
CONNECTED_QUADRATIC = 'CONNECTED_QUADRATIC'

FAMILY_KINDS = (BRIDGE_STAR, QUADRATIC_UNION, CONNECTED_QUADRATIC)


class FamilySpec(BaseModel):
    """Tipo de familia y parámetro k"""

    def __init__(self, kind: str, k: int):
        self.kind = kind.strip().upper().replace('-', '_') if isinstance(kind, str) else kind
        self.k = k
        self.validate()

    def to_dict(self) -> Dict[str, Any]:
        return {'kind': self.kind, 'k': self.k}

    def validate(self) -> None:
        errors = []
        if self.kind not in FAMILY_KINDS:
            errors.append(f"El tipo de familia debe ser uno de: {', '.join(FAMILY_KINDS)}")
        if not isinstance(self.k, int) or isinstance(self.k, bool) or self.k < 1:
            errors.append("El parámetro 'k' debe ser un entero positivo")
        if errors:
            raise ValueError("; ".join(errors))

    def __repr__(self) -> str:
        return f"<FamilySpec(kind='{self.kind}', k={self.k})>"
