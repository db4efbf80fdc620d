"""
Punto de entrada principal de la aplicación
"""
from app import create_app

# Crear la CLI
cli = create_app()

if __name__ == '__main__':
    cli()
