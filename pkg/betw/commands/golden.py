"""
Golden suite command
"""
import click
from flask import Blueprint, current_app

from betw.services.golden_service import GoldenService
from betw.utils.decorators import exit_status
from betw.utils.formatting import echo_json

golden_bp = Blueprint('golden', __name__, cli_group=None)


@golden_bp.cli.command('verify-paper')
@click.option('--json', 'as_json', is_flag=True)
@exit_status
def verify_paper(as_json):
    """Re-check every reference structure in FIXTURES_PATH against its known verdicts."""
    results = GoldenService.run(current_app.config['FIXTURES_PATH'])
    for result in results:
        if as_json:
            echo_json({'command': 'verify-paper', 'axiom': result.name, 'holds': result.passed,
                       'witness': None, 'count': None, 'detail': result.detail})
        else:
            line = f"{'✓' if result.passed else '✗'} {result.name}"
            if not result.passed:
                line += f'  [{result.detail}]'
            click.echo(line)
    passed = sum(r.passed for r in results)
    if not as_json:
        click.echo(f'{passed}/{len(results)} checks passed')
    return passed == len(results)
