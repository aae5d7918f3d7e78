#!/usr/bin/env python
"""Command-line entry point: `betw <command>` or `python manage.py <command>`"""
import os

import click
from flask.cli import FlaskGroup

from betw import create_app


def _create_app():
    return create_app(os.getenv('BETW_ENV', 'default'))


@click.group(cls=FlaskGroup, create_app=_create_app, add_default_commands=False, add_version_option=False)
def cli():
    """Betweenness frames and algebras: axiom checks, canonical frames and bounded model search."""


if __name__ == '__main__':
    cli()
