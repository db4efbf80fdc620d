"""
Repositorio de Reportes - Escritura de reportes JSON y tablas CSV
"""
import csv
import json
import logging
from pathlib import Path
from typing import Any, Dict, List, Sequence

from .base_repository import BaseRepository
from ..exceptions.custom_exceptions import FileProcessingError

logger = logging.getLogger(__name__)


class ReportRepository(BaseRepository):
    """Repositorio para reportes de ejecución y tablas de reproducción"""

    def save(self, location: str, payload: Any) -> str:
        """Guarda un reporte JSON con claves ordenadas"""
        path = Path(location)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(json.dumps(payload, indent=2, sort_keys=True) + '\n', encoding='utf-8')
        logger.info(f"Reporte escrito en {path}")
        return str(path)

    def save_csv(self, location: str, columns: Sequence[str], rows: List[Dict[str, Any]]) -> str:
        """Guarda filas como CSV con terminador de línea fijo"""
        path = Path(location)
        path.parent.mkdir(parents=True, exist_ok=True)
        with path.open('w', encoding='utf-8', newline='') as handle:
            writer = csv.DictWriter(handle, fieldnames=list(columns), lineterminator='\n', extrasaction='ignore')
            writer.writeheader()
            for row in rows:
                writer.writerow(row)
        logger.info(f"Tabla CSV escrita en {path} ({len(rows)} filas)")
        return str(path)

    def load(self, location: str) -> Any:
        try:
            return json.loads(Path(location).read_text(encoding='utf-8'))
        except (OSError, ValueError) as e:
            raise FileProcessingError(f"No se pudo leer el reporte '{location}': {str(e)}")

    def exists(self, location: str) -> bool:
        return Path(location).is_file()
