"""
Aplicación principal del laboratorio de índice de paleta (palette-lab)
"""
import json
import logging
import sys

import click

from .config.settings import get_config


def create_app(config=None):
    """Factory function para crear la CLI"""

    config = config or get_config()

    # Configurar logging (stderr; stdout queda para el reporte)
    logging.basicConfig(
        stream=sys.stderr,
        level=getattr(logging, str(config.LOG_LEVEL).upper(), logging.WARNING),
        format='%(asctime)s %(levelname)s %(name)s: %(message)s'
    )

    @click.group(name=config.APP_NAME)
    @click.version_option(version=config.APP_VERSION, prog_name=config.APP_NAME)
    @click.pass_context
    def cli(ctx):
        """Índice de paleta: cálculo exacto, certificados y familias extremales"""
        ctx.obj = config

    configure_commands(cli)

    return cli


def emit(ctx, result, output_format='json'):
    """Imprime el reporte y termina con su código de salida"""
    from .controllers.base_controller import BaseController

    payload, exit_code = result
    if output_format == 'text':
        click.echo(BaseController.render_text(payload))
    else:
        click.echo(json.dumps(payload, indent=2, sort_keys=True))
    ctx.exit(exit_code)


def configure_commands(cli):
    """Configura los comandos de la CLI"""
    from .controllers.palette_controller import PaletteIndexController
    from .controllers.certify_controller import CertifyController, ClassifyCubicController, ExtractController
    from .controllers.even_subgraph_controller import EvenSubgraphController
    from .controllers.family_controller import GenerateController
    from .controllers.reproduction_controller import ReproduceController

    format_option = click.option('--format', 'output_format', type=click.Choice(['json', 'text']),
                                 default='json', show_default=True, help='Formato del reporte')

    @cli.command('palette-index')
    @click.argument('source', metavar='INPUT')
    @click.option('--cmax', 'c_max', type=int, default=None, help='Universo de colores (por defecto Δ+2)')
    @format_option
    @click.pass_context
    def palette_index(ctx, source, c_max, output_format):
        """Índice de paleta exacto con coloración testigo"""
        emit(ctx, PaletteIndexController(config=ctx.obj).execute(source, c_max=c_max), output_format)

    @cli.command('certify')
    @click.argument('source', metavar='INPUT')
    @format_option
    @click.pass_context
    def certify(ctx, source, output_format):
        """Todos los certificados aplicables al grafo"""
        emit(ctx, CertifyController(config=ctx.obj).execute(source), output_format)

    @cli.command('generate')
    @click.argument('kind', metavar='KIND')
    @click.argument('k', type=int)
    @click.option('--out', 'out', default=None, help='Ruta del graph6 generado')
    @format_option
    @click.pass_context
    def generate(ctx, kind, k, out, output_format):
        """Genera BRIDGE_STAR, QUADRATIC_UNION o CONNECTED_QUADRATIC"""
        emit(ctx, GenerateController(config=ctx.obj).execute(kind, k, out=out), output_format)

    @cli.command('reproduce-paper')
    @click.option('--out', 'out_dir', default=None, help='Directorio del CSV de resultados')
    @click.option('--only', 'only', default=None, help='Grupos separados por comas')
    @format_option
    @click.pass_context
    def reproduce_paper(ctx, out_dir, only, output_format):
        """Ejecuta la tabla de aceptación y escribe reproduction.csv"""
        emit(ctx, ReproduceController(config=ctx.obj).execute(out_dir, only=only), output_format)

    @cli.command('even-subgraph')
    @click.argument('source', metavar='INPUT')
    @format_option
    @click.pass_context
    def even_subgraph(ctx, source, output_format):
        """Decide si existe un subgrafo par generador sin vértices aislados"""
        emit(ctx, EvenSubgraphController(config=ctx.obj).execute(source), output_format)

    @cli.command('classify-cubic')
    @click.argument('source', metavar='INPUT')
    @format_option
    @click.pass_context
    def classify_cubic(ctx, source, output_format):
        """Índice de paleta de un grafo cúbico conexo (1, 3 o 4)"""
        emit(ctx, ClassifyCubicController(config=ctx.obj).execute(source), output_format)

    @cli.command('extract')
    @click.argument('source', metavar='INPUT')
    @click.option('--coloring', 'coloring', required=True, help='Archivo JSON {"c_max", "colors"}')
    @format_option
    @click.pass_context
    def extract(ctx, source, coloring, output_format):
        """Extrae un subgrafo par generador desde una coloración con t <= δ"""
        emit(ctx, ExtractController(config=ctx.obj).execute(source, coloring), output_format)
