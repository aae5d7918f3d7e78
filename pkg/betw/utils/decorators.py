from functools import wraps

import click
from flask import current_app


def exit_status(f):
    """Decorator mapping a command's verdict to its exit code

    The command returns True when every requested check holds (or the search found
    something) and False otherwise. ValueError from input files or options becomes
    exit code 2 with the message on stderr.
    """
    @wraps(f)
    def decorated_function(*args, **kwargs):
        ctx = click.get_current_context()
        try:
            ok = f(*args, **kwargs)
        except ValueError as e:
            current_app.logger.debug(f"{ctx.command_path} rejected its input: {str(e)}")
            click.echo(f"Error: {str(e)}", err=True)
            ctx.exit(2)
        ctx.exit(0 if ok else 1)
    return decorated_function


def exclusive(ctx, **flags):
    """Raise a usage error when more than one of the named options is set"""
    given = [name for name, value in flags.items() if value]
    if len(given) > 1:
        raise click.UsageError(f"Options {' and '.join('--' + g.replace('_', '-') for g in given)} are mutually exclusive", ctx)
