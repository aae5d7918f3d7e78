"""Tests for the frame and algebra text formats"""
import os

import pytest

from betw.services.format_service import FormatService
from conftest import FIXTURES_DIR


@pytest.mark.parametrize('name', sorted(os.listdir(FIXTURES_DIR)))
def test_fixture_round_trip(name):
    with open(os.path.join(FIXTURES_DIR, name), encoding='utf-8') as handle:
        text = handle.read()
    if name.endswith('.frame'):
        parsed = FormatService.parse_frame(text)
        assert FormatService.parse_frame(FormatService.format_frame(parsed)) == parsed
    else:
        parsed = FormatService.parse_algebra(text)
        assert FormatService.parse_algebra(FormatService.format_algebra(parsed)) == parsed


def test_frame_comments_blank_lines_and_duplicates():
    frame = FormatService.parse_frame('# two points\n\nframe 2\nt 0 1 1  # end\nt 0 1 1\n')
    assert list(frame.triples()) == [(0, 1, 1)]


def test_format_frame_sorts_triples():
    frame = FormatService.parse_frame('frame 2\nt 1 1 1\nt 0 0 0\n')
    assert FormatService.format_frame(frame) == 'frame 2\nt 0 0 0\nt 1 1 1\n'


@pytest.mark.parametrize('text, line', [
    ('frame 2\nt 0 0 2\n', 2),
    ('frame 2\nt 0 0\n', 2),
    ('frame 2\nx 0 0 0\n', 2),
    ('# header\nframes 2\n', 2),
    ('frame 17\n', 1),
    ('frame two\n', 1),
    ('frame 2\nt 0 0 0\nt a 0 0\n', 3),
])
def test_frame_errors_name_the_line(text, line):
    with pytest.raises(ValueError, match=f'Line {line}:'):
        FormatService.parse_frame(text)


def test_empty_frame_file():
    with pytest.raises(ValueError, match='Empty input'):
        FormatService.parse_frame('# nothing here\n')


def test_algebra_entries_in_any_order():
    alg = FormatService.parse_algebra('psalg 1\ng 0 0 0\nf 0 0 1\n')
    assert alg.f_atoms == (1,) and alg.g_atoms == (0,)


def test_algebra_duplicate_entry():
    with pytest.raises(ValueError, match='Line 4: duplicate entry f 0 0'):
        FormatService.parse_algebra('psalg 1\nf 0 0 1\ng 0 0 0\nf 0 0 1\n')


def test_algebra_missing_entry():
    with pytest.raises(ValueError, match=r'Missing g entries for atom pairs \[\(0, 1\), \(1, 1\)\]'):
        FormatService.parse_algebra(
            'psalg 2\nf 0 0 1\nf 0 1 1\nf 1 0 1\nf 1 1 1\ng 0 0 0\ng 1 0 0\n'
        )


@pytest.mark.parametrize('text, message', [
    ('psalg 1\nf 0 0 2\ng 0 0 0\n', 'Line 2: mask 2 out of range'),
    ('psalg 1\nf 0 1 1\ng 0 0 0\n', r'Line 2: atom pair \(0, 1\) out of range'),
    ('psalg 6\n', 'Line 1: size must be between 1 and 5'),
    ('psalg 1\nh 0 0 1\n', "Line 2: expected 'f|g <p> <q> <mask>'"),
])
def test_algebra_errors(text, message):
    with pytest.raises(ValueError, match=message):
        FormatService.parse_algebra(text)


def test_load_fixture_structures(fx):
    assert fx['table1'].m == 3
    assert fx['nonrep8'].size == 8
    assert fx['gpairs4'].n == 4
    assert fx['wnot3'].size == 19
