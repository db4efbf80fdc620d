"""
Controlador de Familias - Comando generate
"""
import os
from typing import Dict, Any, Optional, Tuple

from .base_controller import BaseController
from ..services.family_service import FamilyService
from ..models.family_model import FamilySpec
from ..exceptions.custom_exceptions import ValidationError


class GenerateController(BaseController):
    """Controlador para generar familias extremales con su manifiesto"""

    command = 'generate'

    def __init__(self, family_service=None, graph_service=None, graph_repository=None, config=None):
        super().__init__(graph_service, graph_repository, config)
        self.family_service = family_service or FamilyService(self.graph_service, self.config)

    def execute(self, kind: str, k: int, out: Optional[str] = None) -> Tuple[Dict[str, Any], int]:
        """generate KIND K [--out PATH]"""
        try:
            try:
                spec = FamilySpec(kind, k)
            except ValueError as e:
                raise ValidationError(str(e))

            graph, manifest = self.family_service.generate(spec)
            self.input_digest = self.graph_service.digest(graph)

            location = out or os.path.join(self.config.OUTPUT_DIR, f"{spec.kind.lower()}-{spec.k}.g6")
            graph_file = self.graph_repository.save(location, manifest['graph6'])
            manifest_file = self.graph_repository.save_manifest(
                self.graph_repository.manifest_location(location), manifest
            )
            checks = ', '.join(f"{name}={'ok' if holds else 'FAIL'}" for name, holds in sorted(manifest['invariants'].items()))
            return self.success_response(
                data={'manifest': manifest, 'files': {'graph6': graph_file, 'manifest': manifest_file}},
                message=f"{spec.kind} k={spec.k}: n={graph.n}, m={graph.m}; {checks}"
            )
        except Exception as e:
            return self.handle_exception(e)
