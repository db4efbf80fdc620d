"""
Excepciones personalizadas del laboratorio de índice de paleta
"""
from typing import Any, Dict, List, Optional


class ValidationError(Exception):
    """Excepción para errores de validación de entradas y precondiciones"""
    pass


class ParseError(ValidationError):
    """Excepción para errores de lectura de grafos y coloraciones"""

    def __init__(self, message: str, offset: Optional[int] = None, line: Optional[int] = None):
        self.offset = offset
        self.line = line
        if offset is not None:
            message = f"{message} (byte {offset})"
        elif line is not None:
            message = f"{message} (línea {line})"
        super().__init__(message)


class FileProcessingError(ParseError):
    """Excepción para archivos de entrada que no se pueden leer"""
    pass


class ContractError(ValidationError):
    """Excepción para violaciones del contrato de una operación"""
    pass


class ServiceError(Exception):
    """Excepción base para errores de servicios"""
    pass


class SearchBudgetExceededError(ServiceError):
    """Excepción para búsquedas que agotan el presupuesto de nodos"""

    def __init__(self, message: str, nodes: int = 0, limit: int = 0):
        self.nodes = nodes
        self.limit = limit
        super().__init__(message)


class InvariantViolationError(ServiceError):
    """Excepción para invariantes internos rotos (errores de programación)"""

    def __init__(self, message: str, trace: Optional[List[Dict[str, Any]]] = None):
        self.trace = trace or []
        super().__init__(message)


class GeneratorInvariantError(InvariantViolationError):
    """Excepción para familias generadas que no cumplen sus invariantes"""
    pass


class ReproductionMismatchError(ServiceError):
    """Excepción para filas de aceptación en desacuerdo"""

    def __init__(self, message: str, rows: Optional[List[Dict[str, Any]]] = None):
        self.rows = rows or []
        super().__init__(message)
