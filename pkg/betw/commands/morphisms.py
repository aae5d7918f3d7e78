"""
Morphism commands
"""
import click
from flask import Blueprint

from betw.models import MorphismMode
from betw.services.format_service import FormatService
from betw.services.morphism_service import MorphismService
from betw.utils.decorators import exit_status
from betw.utils.formatting import echo_reports

morphisms_bp = Blueprint('morphisms', __name__, cli_group=None)


@morphisms_bp.cli.command('morphism')
@click.argument('source', type=click.Path(exists=True, dir_okay=False))
@click.argument('target', type=click.Path(exists=True, dir_okay=False))
@click.option('--map', 'point_map', required=True, help='Point map as "0:0,1:1,..."')
@click.option('--mode', type=click.Choice([m.value for m in MorphismMode]), default='bounded', show_default=True)
@click.option('--json', 'as_json', is_flag=True)
@exit_status
def morphism(source, target, point_map, mode, as_json):
    """Check a point map between two frame files as a (co-)bounded morphism."""
    src = FormatService.load_frame(source)
    dst = FormatService.load_frame(target)
    fmap = MorphismService.parse_point_map(point_map, src.n, dst.n)
    report = MorphismService.check_morphism(src, dst, fmap, MorphismMode(mode))
    echo_reports('morphism', [report], as_json)
    return report.holds
