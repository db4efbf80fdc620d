"""
Modelos del espacio de ciclos - Bases, testigos pares y veredictos de existencia
"""
from typing import Dict, Any, List, Optional

from .base_model import BaseModel
from .graph_model import Graph, EdgeSubset
from ..utils.bitsets import popcount


VERDICT_YES = 'YES'
VERDICT_NO = 'NO'
VERDICT_UNDECIDED = 'UNDECIDED'

NO_STRUCTURAL = 'structural'
NO_EXHAUSTIVE = 'exhaustive'


class CycleSpaceBasis(BaseModel):
    """Base de ciclos fundamentales del espacio par de un grafo"""

    def __init__(self, graph: Graph, basis: List[EdgeSubset], components: int):
        self.graph = graph
        self.basis = list(basis)
        self.components = components
        self.validate()

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def combine(self, selector: int) -> EdgeSubset:
        """Suma GF(2) de los vectores de la base elegidos por el bitset selector"""
        bits = 0
        index = 0
        while selector:
            if selector & 1:
                bits ^= self.basis[index].bits
            selector >>= 1
            index += 1
        return EdgeSubset(self.graph.m, bits)

    def to_dict(self) -> Dict[str, Any]:
        return {
            'dimension': self.dimension,
            'components': self.components,
            'basis': [vector.indices() for vector in self.basis]
        }

    def validate(self) -> None:
        errors = []
        expected = self.graph.m - self.graph.n + self.components
        if self.dimension != expected:
            errors.append(f"La dimensión {self.dimension} no coincide con m - n + c = {expected}")
        if any(vector.m != self.graph.m for vector in self.basis):
            errors.append("Todos los vectores de la base deben tener longitud m")
        if errors:
            raise ValueError("; ".join(errors))

    def __repr__(self) -> str:
        return f"<CycleSpaceBasis(dimension={self.dimension})>"


class EvenSubgraphWitness(BaseModel):
    """Subgrafo par; en su variante generadora todo vértice tiene grado par >= 2"""

    def __init__(self, graph: Graph, edges: EdgeSubset, spanning: bool = True):
        self.graph = graph
        self.edges = edges
        self.spanning = spanning
        self.validate()

    def degrees(self) -> List[int]:
        return [popcount(self.graph.incident_mask(v) & self.edges.bits) for v in range(self.graph.n)]

    def to_dict(self) -> Dict[str, Any]:
        return {'edges': self.edges.indices(), 'spanning_without_isolated': self.spanning}

    def validate(self) -> None:
        errors = []
        if self.edges.m != self.graph.m:
            errors.append("El testigo no pertenece al grafo")
        else:
            degrees = self.degrees()
            odd = [v for v, degree in enumerate(degrees) if degree % 2]
            if odd:
                errors.append(f"Los vértices {odd[:10]} tienen grado impar en el testigo")
            if self.spanning:
                isolated = [v for v, degree in enumerate(degrees) if degree == 0]
                if isolated:
                    errors.append(f"Los vértices {isolated[:10]} quedan aislados en el testigo")
        if errors:
            raise ValueError("; ".join(errors))

    def __repr__(self) -> str:
        return f"<EvenSubgraphWitness(edges={len(self.edges)})>"


class EvenSpaceVerdict(BaseModel):
    """Veredicto YES (testigo), NO (certificado) o UNDECIDED (presupuesto agotado)"""

    def __init__(self, status: str, witness: Optional[EvenSubgraphWitness] = None,
                 certificate: Optional[Dict[str, Any]] = None, nodes: int = 0):
        self.status = status
        self.witness = witness
        self.certificate = certificate or {}
        self.nodes = nodes
        self.validate()

    @property
    def is_yes(self) -> bool:
        return self.status == VERDICT_YES

    @property
    def is_no(self) -> bool:
        return self.status == VERDICT_NO

    def to_dict(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {'verdict': self.status, 'nodes': self.nodes}
        if self.witness is not None:
            data['witness'] = self.witness.to_dict()
        if self.certificate:
            data['certificate'] = dict(self.certificate)
        return data

    def validate(self) -> None:
        errors = []
        if self.status not in (VERDICT_YES, VERDICT_NO, VERDICT_UNDECIDED):
            errors.append(f"Veredicto desconocido: {self.status}")
        if self.status == VERDICT_YES and self.witness is None:
            errors.append("Un veredicto YES requiere testigo")
        if self.status == VERDICT_NO and self.certificate.get('kind') not in (NO_STRUCTURAL, NO_EXHAUSTIVE):
            errors.append("Un veredicto NO requiere certificado estructural o exhaustivo")
        if errors:
            raise ValueError("; ".join(errors))

    def __repr__(self) -> str:
        return f"<EvenSpaceVerdict(status='{self.status}')>"
