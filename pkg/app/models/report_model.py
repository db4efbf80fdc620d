"""
Modelo de Reporte - Resultado reproducible de un comando
"""
from typing import Dict, Any

from .base_model import BaseModel


class RunReport(BaseModel):
    """Reporte de ejecución: idéntico entre corridas salvo el bloque de tiempos"""

    def __init__(self, **kwargs):
        self.command = kwargs.get('command', '')
        self.input_digest = kwargs.get('input_digest', None)
        self.results = kwargs.get('results', {})
        self.timing = kwargs.get('timing', {})
        self.tool_version = kwargs.get('tool_version', '')
        self.seed = kwargs.get('seed', None)
        self.exit_code = kwargs.get('exit_code', 0)
        self.message = kwargs.get('message', '')
        self.validate()

    def to_dict(self) -> Dict[str, Any]:
        return {
            'command': self.command,
            'input_digest': self.input_digest,
            'results': self.results,
            'timing': self.timing,
            'tool_version': self.tool_version,
            'seed': self.seed,
            'exit_code': self.exit_code,
            'message': self.message
        }

    def deterministic_dict(self) -> Dict[str, Any]:
        """Reporte sin tiempos (lo comparable entre corridas)"""
        data = self.to_dict()
        data.pop('timing')
        return data

    def validate(self) -> None:
        errors = []
        if not self.command or not self.command.strip():
            errors.append("El campo 'command' es obligatorio")
        if not self.tool_version:
            errors.append("El campo 'tool_version' es obligatorio")
        if not isinstance(self.results, dict):
            errors.append("El campo 'results' debe ser un diccionario")
        if errors:
            raise ValueError("; ".join(errors))

    def __repr__(self) -> str:
        return f"<RunReport(command='{self.command}', exit_code={self.exit_code})>"
