"""
Complex algebra commands - conditions, tabulation and generated subalgebras
"""
import click
from flask import Blueprint, current_app

from betw.models import ComplexCondition
from betw.services.complex_service import ComplexService
from betw.services.format_service import FormatService
from betw.utils.decorators import exclusive, exit_status
from betw.utils.formatting import echo_json, echo_reports, format_report, point_set

complex_bp = Blueprint('complex', __name__, cli_group=None)


def _parse_masks(text, n):
    masks = []
    for item in (part.strip() for part in text.split(',')):
        if not item:
            continue
        try:
            mask = int(item)
        except ValueError:
            raise ValueError(f"Generator '{item}' is not a decimal point-set mask")
        if not 0 <= mask < (1 << n):
            raise ValueError(f"Generator {mask} out of range for {n} points")
        masks.append(mask)
    return masks


@complex_bp.cli.command('complex')
@click.argument('path', type=click.Path(exists=True, dir_okay=False))
@click.option('--check', 'condition', help="Condition tag (BT0c, ..., DAGc) or 'all'")
@click.option('--correspondence', is_flag=True, help='Compare each frame axiom with its complex condition')
@click.option('--tabulate', is_flag=True, help='Print the full complex algebra in algebra format')
@click.option('--generate', 'generators', help='Comma-separated point-set masks generating a subalgebra')
@click.option('--sample-budget', type=int, default=None, help='Random tuples per condition above four points')
@click.option('--seed', type=int, default=None)
@click.option('--json', 'as_json', is_flag=True)
@exit_status
def complex_command(path, condition, correspondence, tabulate, generators, sample_budget, seed, as_json):
    """Work with the full complex algebra of a frame file."""
    ctx = click.get_current_context()
    exclusive(ctx, check=condition, correspondence=correspondence, tabulate=tabulate, generate=generators)
    frame = FormatService.load_frame(path)
    sample_budget = sample_budget or current_app.config['SAMPLE_BUDGET']
    seed = current_app.config['SEED'] if seed is None else seed

    if tabulate:
        click.echo(FormatService.format_algebra(ComplexService.complex_to_psalgebra(frame)), nl=False)
        return True

    if generators is not None:
        result = ComplexService.generate_subalgebra(frame, _parse_masks(generators, frame.n))
        if as_json:
            echo_json({'command': 'complex', 'axiom': 'subalgebra', 'holds': True, 'witness': None,
                       'count': len(result.carrier), 'carrier': list(result.carrier),
                       'atoms': list(result.atoms)})
        else:
            click.echo(f'carrier ({len(result.carrier)} sets): '
                       + ' '.join(point_set(xs, frame.n) for xs in result.carrier))
            click.echo('atoms: ' + ' '.join(point_set(xs, frame.n) for xs in result.atoms))
            if result.algebra is not None:
                click.echo(FormatService.format_algebra(result.algebra), nl=False)
        return True

    if correspondence:
        pairs = ComplexService.correspondence(frame, sample_budget, seed)
        agree = True
        for frame_report, complex_report in pairs:
            match = frame_report.holds == complex_report.holds
            agree = agree and match
            if as_json:
                echo_json({**complex_report.to_dict('complex'), 'frame_axiom': frame_report.axiom.value,
                           'frame_holds': frame_report.holds})
            else:
                click.echo(f"{'=' if match else '≠'} {format_report(frame_report)}  |  {format_report(complex_report)}")
        return agree

    if condition is None or condition == 'all':
        conditions = list(ComplexCondition)
    else:
        conditions = [ComplexCondition.parse(condition)]
    reports = [ComplexService.check_complex_condition(frame, c, sample_budget, seed) for c in conditions]
    echo_reports('complex', reports, as_json)
    return all(r.holds for r in reports)
