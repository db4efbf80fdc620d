"""
Configuración de la aplicación - Parámetros de búsqueda, semillas y salida
"""
import os

from dotenv import load_dotenv

load_dotenv()


class Config:
    """Configuración base de la aplicación"""

    # Configuración básica
    DEBUG = os.getenv('DEBUG', 'False').lower() == 'true'
    LOG_LEVEL = os.getenv('PALETTE_LAB_LOG_LEVEL', 'WARNING').upper()

    # Configuración de la aplicación
    APP_NAME = 'palette-lab'
    APP_VERSION = '1.0.0'

    # Presupuesto de búsqueda (nodos) para las búsquedas exactas
    NODE_LIMIT = int(os.getenv('PALETTE_LAB_NODE_LIMIT', '2000000'))

    # Semilla para arranques aleatorios y corpus aleatorios
    SEED = int(os.getenv('PALETTE_LAB_SEED', '20240229'))

    # Arranque aleatorio del subgrafo par generador
    WARM_START = os.getenv('PALETTE_LAB_WARM_START', 'True').lower() == 'true'
    WARM_START_TRIES = int(os.getenv('PALETTE_LAB_WARM_START_TRIES', '64'))

    # Directorio de salida por defecto
    OUTPUT_DIR = os.getenv('PALETTE_LAB_OUTPUT_DIR', 'out')

    # Límite de dimensión del espacio de ciclos para el oráculo por fuerza bruta
    BRUTE_FORCE_MAX_DIMENSION = 20

    # Tabla de aceptación de reproduce-paper
    ACCEPTANCE_FILE = os.getenv(
        'PALETTE_LAB_ACCEPTANCE_FILE',
        os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))), 'data', 'acceptance.yaml')
    )


class DevelopmentConfig(Config):
    """Configuración para desarrollo"""
    LOG_LEVEL = 'DEBUG' if Config.DEBUG else Config.LOG_LEVEL


class TestingConfig(Config):
    """Configuración para pruebas"""
    NODE_LIMIT = int(os.getenv('PALETTE_LAB_NODE_LIMIT', '200000'))
    WARM_START_TRIES = 16


class ProductionConfig(Config):
    """Configuración para producción"""
    DEBUG = False


def get_config():
    """Retorna la configuración según el entorno"""
    env = os.getenv('PALETTE_LAB_ENV', 'development').lower()

    if env == 'production':
        return ProductionConfig()
    elif env == 'testing':
        return TestingConfig()
    else:
        return DevelopmentConfig()
