"""
Frame commands - axiom checks on a frame file
"""
import click
from flask import Blueprint, current_app

from betw.models import FrameAxiom
from betw.services.format_service import FormatService
from betw.services.frame_service import FrameService
from betw.utils.decorators import exclusive, exit_status
from betw.utils.formatting import echo_json, echo_reports

frames_bp = Blueprint('frames', __name__, cli_group=None)


@frames_bp.cli.command('check-frame')
@click.argument('path', type=click.Path(exists=True, dir_okay=False))
@click.option('--axiom', 'axiom_tag', help='Check a single axiom (BT0, BT1, BT2, BT3, BTW, BT2s, C)')
@click.option('--all', 'check_all', is_flag=True, help='Check every frame axiom (default)')
@click.option('--classify', is_flag=True, help='Also print the most specific frame class')
@click.option('--json', 'as_json', is_flag=True, help='One JSON object per check')
@exit_status
def check_frame(path, axiom_tag, check_all, classify, as_json):
    """Check betweenness axioms on a frame file."""
    exclusive(click.get_current_context(), axiom=axiom_tag, all=check_all)
    frame = FormatService.load_frame(path)
    current_app.logger.info(f"Loaded {frame} from {path}")

    if axiom_tag:
        reports = [FrameService.check_frame_axiom(frame, FrameAxiom.parse(axiom_tag))]
    else:
        reports = FrameService.axiom_vector(frame)
    echo_reports('check-frame', reports, as_json)

    if classify:
        label = FrameService.classify_frame(frame).value
        if as_json:
            echo_json({'command': 'check-frame', 'axiom': 'class', 'holds': True,
                       'witness': None, 'count': None, 'label': label})
        else:
            click.echo(f'class: {label}')
    return all(r.holds for r in reports)
