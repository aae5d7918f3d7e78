"""
Canonical frame commands
"""
import click
from flask import Blueprint

from betw.models import CfProperty
from betw.services.canonical_service import CanonicalService
from betw.services.format_service import FormatService
from betw.utils.decorators import exit_status
from betw.utils.formatting import echo_json, echo_reports

canonical_bp = Blueprint('canonical', __name__, cli_group=None)


@canonical_bp.cli.command('canonical')
@click.argument('path', type=click.Path(exists=True, dir_okay=False))
@click.option('--extension', is_flag=True, help='Also print the canonical extension and the Stone map')
@click.option('--check', 'prop', help="Canonical frame property (BT0Cf, ..., SsubQ) or 'all'")
@click.option('--json', 'as_json', is_flag=True)
@exit_status
def canonical(path, extension, prop, as_json):
    """Print the canonical frame (Q and S) of an algebra file."""
    alg = FormatService.load_algebra(path)
    cf = CanonicalService.canonical_frame(alg)
    ok = True

    if as_json:
        payload = {'command': 'canonical', 'axiom': 'canonical-frame', 'holds': True, 'witness': None,
                   'count': cf.m, 'q': [list(t) for t in cf.q.triples()], 's': [list(t) for t in cf.s.triples()]}
        if extension:
            ext = CanonicalService.canonical_extension(alg)
            payload['extension'] = {'f': list(ext.ext.f_atoms), 'g': list(ext.ext.g_atoms)}
            payload['stone'] = list(ext.stone)
        echo_json(payload)
    else:
        click.echo('# Q')
        click.echo(FormatService.format_frame(cf.q), nl=False)
        click.echo('# S')
        click.echo(FormatService.format_frame(cf.s), nl=False)
        if extension:
            ext = CanonicalService.canonical_extension(alg)
            click.echo('# extension')
            click.echo(FormatService.format_algebra(ext.ext), nl=False)
            for x, image in enumerate(ext.stone):
                click.echo(f'h {x} -> {image}')

    if extension:
        report = CanonicalService.verify_stone_embedding(alg)
        echo_reports('canonical', [report], as_json, m=alg.m)
        ok = report.holds

    if prop:
        props = list(CfProperty) if prop == 'all' else [CfProperty.parse(prop)]
        reports = [CanonicalService.check_cf_property(alg, p, cf) for p in props]
        echo_reports('canonical', reports, as_json, ultrafilters=True)
        ok = ok and all(r.holds for r in reports)
    return ok
