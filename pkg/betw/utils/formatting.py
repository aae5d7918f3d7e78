"""Rendering helpers for elements, point sets and reports"""
import click
from flask import json

ATOM_NAMES = 'abcdefghijklmnop'


def element_name(mask, m):
    """Atom-set name of an element: 0, 1 or {a,c}"""
    if mask == 0:
        return '0'
    if mask == (1 << m) - 1:
        return '1'
    return '{' + ','.join(ATOM_NAMES[p] for p in range(m) if (mask >> p) & 1) + '}'


def element_label(mask, m):
    """Name plus decimal mask, e.g. {a,c}(5)"""
    return f'{element_name(mask, m)}({mask})'


def point_set(mask, n):
    return '{' + ','.join(str(u) for u in range(n) if (mask >> u) & 1) + '}'


def format_witness(report, m=None, ultrafilters=False):
    """Witness as text; element masks are named when m is given"""
    if report.witness is None:
        return ''
    if ultrafilters:
        return '(' + ', '.join(f'u_{ATOM_NAMES[p]}' for p in report.witness) + ')'
    if m is not None:
        return '(' + ', '.join(element_label(x, m) for x in report.witness) + ')'
    return '(' + ', '.join(str(x) for x in report.witness) + ')'


def format_report(report, m=None, ultrafilters=False):
    mark = '✓' if report.holds else '✗'
    line = f'{mark} {report.axiom.value}'
    if not report.holds:
        line += f'  witness {format_witness(report, m, ultrafilters)}'
        if report.note:
            line += f'  [{report.note}]'
    return line


def echo_reports(command, reports, as_json, m=None, ultrafilters=False):
    """Print reports as text lines or one JSON object per report"""
    for report in reports:
        if as_json:
            click.echo(json.dumps(report.to_dict(command=command)))
        else:
            click.echo(format_report(report, m, ultrafilters))


def echo_json(payload):
    click.echo(json.dumps(payload))
