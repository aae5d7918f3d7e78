"""
Algebra commands - axiom checks and representability on PS-algebra files
"""
import click
from flask import Blueprint, current_app

from betw.models import AlgebraAxiom
from betw.services.balg_service import BalgService
from betw.services.format_service import FormatService
from betw.services.search_service import SearchService
from betw.utils.decorators import exclusive, exit_status
from betw.utils.formatting import echo_json, echo_reports, element_label, point_set

algebras_bp = Blueprint('algebras', __name__, cli_group=None)


@algebras_bp.cli.command('check-algebra')
@click.argument('path', type=click.Path(exists=True, dir_okay=False))
@click.option('--axiom', 'axiom_tag', help='Check a single axiom (ABT0, ABT1f, ..., FiveForD)')
@click.option('--all', 'check_all', is_flag=True,
              help='Every axiom plus classification, discriminator and obstruction search')
@click.option('--json', 'as_json', is_flag=True, help='One JSON object per check')
@exit_status
def check_algebra(path, axiom_tag, check_all, as_json):
    """Check b-algebra axioms on an algebra file."""
    exclusive(click.get_current_context(), axiom=axiom_tag, all=check_all)
    alg = FormatService.load_algebra(path)
    current_app.logger.info(f"Loaded {alg} from {path}")

    if axiom_tag:
        reports = [BalgService.check_algebra_axiom(alg, AlgebraAxiom.parse(axiom_tag))]
    else:
        reports = BalgService.axiom_vector(alg)
        if check_all:
            reports += [BalgService.discriminator_check(alg), BalgService.obstruction_report(alg)]
    echo_reports('check-algebra', reports, as_json, m=alg.m)

    if check_all:
        label = BalgService.classify_algebra(alg).value
        if as_json:
            echo_json({'command': 'check-algebra', 'axiom': 'class', 'holds': True,
                       'witness': None, 'count': None, 'label': label})
        else:
            click.echo(f'class: {label}')
    return all(r.holds for r in reports)


@algebras_bp.cli.command('embed')
@click.argument('path', type=click.Path(exists=True, dir_okay=False))
@click.option('--max-points', type=click.IntRange(min=1), default=None, help='Largest frame to try (default EMBED_MAX_POINTS)')
@click.option('--search-anyway', is_flag=True, help='Run the bounded search even when an obstruction is found')
@click.option('--threads', type=click.IntRange(min=1), default=None, help='Worker processes (default THREADS)')
@click.option('--json', 'as_json', is_flag=True)
@exit_status
def embed(path, max_points, search_anyway, threads, as_json):
    """Look for a b-frame whose complex algebra contains the algebra."""
    alg = FormatService.load_algebra(path)
    if max_points is None:
        max_points = current_app.config['EMBED_MAX_POINTS']
    if threads is None:
        threads = current_app.config['THREADS']

    obstruction = BalgService.obstruction_report(alg)
    if not obstruction.holds:
        echo_reports('embed', [obstruction], as_json, m=alg.m)
        if not search_anyway:
            return False

    result = SearchService.representability_search(alg, max_points, threads=threads)
    if as_json:
        payload = {'command': 'embed', 'axiom': 'representable', 'holds': result.found,
                   'witness': None, 'count': result.compositions_tried}
        if result.found:
            payload['frame'] = [list(t) for t in result.witness.frame.triples()]
            payload['atom_images'] = list(result.witness.atom_images)
        echo_json(payload)
        return result.found

    if not result.found:
        click.echo(f'✗ no b-frame with at most {max_points} points '
                   f'({result.compositions_tried} block compositions tried)')
        return False
    witness = result.witness
    click.echo(f'✓ embeds into the complex algebra of a b-frame on {witness.frame.n} points')
    for p, block in enumerate(witness.atom_images):
        click.echo(f'  {element_label(1 << p, alg.m)} -> {point_set(block, witness.frame.n)}')
    click.echo(FormatService.format_frame(witness.frame), nl=False)
    return True
