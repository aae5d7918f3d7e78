"""
Search commands - bounded enumeration and separating models
"""
import click
from flask import Blueprint, current_app

from betw.models import AlgebraAxiom, FrameAxiom, MIA_TAG, SearchSpec, SearchStatus
from betw.services.format_service import FormatService
from betw.services.search_service import SearchService
from betw.utils.decorators import exit_status
from betw.utils.formatting import echo_json

search_bp = Blueprint('search', __name__, cli_group=None)

KINDS = {'frames': 'frame', 'algebras': 'algebra'}


def parse_tags(text, kind):
    """Comma-separated axiom tags for a search kind; MIA is accepted for algebras"""
    tags = set()
    for name in (part.strip() for part in (text or '').split(',')):
        if not name:
            continue
        if kind == 'algebra' and name == MIA_TAG:
            tags.add(MIA_TAG)
        elif kind == 'algebra':
            tags.add(AlgebraAxiom.parse(name))
        else:
            tags.add(FrameAxiom.parse(name))
    return frozenset(tags)


def _model_json(model):
    if hasattr(model, 'triples'):
        return [list(t) for t in model.triples()]
    return {'f': list(model.f_atoms), 'g': list(model.g_atoms)}


@search_bp.cli.command('search')
@click.argument('kind', type=click.Choice(list(KINDS)))
@click.option('--size', type=int, required=True, help='Points (frames) or atoms (algebras)')
@click.option('--satisfy', default='', help='Comma-separated tags the models must satisfy')
@click.option('--violate', default='', help='Comma-separated tags the models must violate')
@click.option('--limit', type=int, default=10, show_default=True, help='Models to print; the count stays exact')
@click.option('--budget', type=int, default=None, help='Stop after this many candidates')
@click.option('--modulo-iso', is_flag=True, help='Count isomorphism classes')
@click.option('--sample', is_flag=True, help='Draw --budget random candidates instead of enumerating')
@click.option('--first', is_flag=True, help='Stop at the first model (separating model search)')
@click.option('--seed', type=int, default=None)
@click.option('--threads', type=click.IntRange(min=1), default=None, help='Worker processes (default THREADS)')
@click.option('--json', 'as_json', is_flag=True)
@exit_status
def search(kind, size, satisfy, violate, limit, budget, modulo_iso, sample, first, seed, threads, as_json):
    """Enumerate frames or algebras satisfying and violating the given axioms."""
    kind = KINDS[kind]
    spec = SearchSpec(
        kind=kind,
        size=size,
        satisfy=parse_tags(satisfy, kind),
        violate=parse_tags(violate, kind),
        limit=limit,
        budget=budget,
        modulo_iso=modulo_iso,
        sample=sample,
        seed=current_app.config['SEED'] if seed is None else seed,
    )
    if threads is None:
        threads = current_app.config['THREADS']

    if first:
        result = SearchService.find_separating_model(spec, threads=threads)
        ok = result.status is SearchStatus.FOUND
    else:
        result = SearchService.enumerate(spec, threads=threads)
        ok = result.count > 0

    if as_json:
        echo_json({'command': 'search', 'axiom': None, 'holds': ok, 'witness': None, 'count': result.count,
                   'status': result.status.value, 'examined': result.examined,
                   'models': [_model_json(model) for model in result.models]})
        return ok

    click.echo(f'count {result.count} ({result.status.value}, {result.examined} candidates examined)')
    for model in result.models:
        click.echo('')
        if kind == 'frame':
            click.echo(FormatService.format_frame(model), nl=False)
        else:
            click.echo(FormatService.format_algebra(model), nl=False)
    return ok
