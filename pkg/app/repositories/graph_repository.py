"""
Repositorio de Grafos - Resolución de entradas y escritura de grafos generados
"""
import json
import logging
import os
import sys
from pathlib import Path
from typing import Any, Dict, Optional, TextIO

from .base_repository import BaseRepository
from ..exceptions.custom_exceptions import FileProcessingError

logger = logging.getLogger(__name__)

STDIN_MARKER = '-'


class GraphRepository(BaseRepository):
    """Repositorio para leer entradas (ruta, '-' o graph6 en línea) y escribir grafos"""

    def __init__(self, stdin: Optional[TextIO] = None):
        self.stdin = stdin

    def load(self, location: str) -> str:
        """
        Obtiene el texto de una entrada

        Args:
            location: ruta de archivo, '-' para stdin o un literal graph6

        Returns:
            El texto crudo de la entrada
        """
        if location == STDIN_MARKER:
            stream = self.stdin or sys.stdin
            return stream.read()
        # Si no es archivo ni stdin, se interpreta como graph6 en línea
        if self.is_inline(location):
            return location
        try:
            return Path(location).read_text(encoding='utf-8')
        except (OSError, UnicodeDecodeError) as e:
            raise FileProcessingError(f"No se pudo leer el archivo '{location}': {str(e)}")

    def is_inline(self, location: str) -> bool:
        return location != STDIN_MARKER and not self.exists(location)

    def exists(self, location: str) -> bool:
        return os.path.isfile(location)

    def save(self, location: str, payload: Any) -> str:
        """Escribe un grafo en graph6 (una línea)"""
        path = Path(location)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(f"{payload}\n", encoding='utf-8')
        logger.info(f"Grafo escrito en {path}")
        return str(path)

    def save_manifest(self, location: str, manifest: Dict[str, Any]) -> str:
        """Escribe el manifiesto JSON junto al grafo"""
        path = Path(location)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(json.dumps(manifest, indent=2, sort_keys=True) + '\n', encoding='utf-8')
        logger.info(f"Manifiesto escrito en {path}")
        return str(path)

    def manifest_location(self, location: str) -> str:
        return str(Path(location).with_suffix('.json'))
