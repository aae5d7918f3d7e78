"""Tests for bounded and co-bounded morphisms"""
import pytest
from hypothesis import given, strategies as st

from betw.models import Frame, MorphismMode, PointMap
from betw.services.frame_service import FrameService
from betw.services.morphism_service import MorphismService


def test_parity_map_fails_back():
    chain6 = FrameService.build_frame('chain', 6)
    universal2 = FrameService.build_frame('universal', 2)
    parity = MorphismService.parse_point_map('0:0,1:1,2:0,3:1,4:0,5:1', 6, 2)
    report = MorphismService.check_morphism(chain6, universal2, parity, MorphismMode.BOUNDED)
    assert report.witness == (1, 0, 1)
    assert report.note == 'back'


def test_collapse_is_cobounded_but_not_bounded(fx):
    collapse = MorphismService.parse_point_map('0:0, 1:0', 2, 1)
    empty = Frame(1, 0)
    assert MorphismService.check_morphism(fx['identity2'], empty, collapse, MorphismMode.COBOUNDED).holds
    report = MorphismService.check_morphism(fx['identity2'], empty, collapse, MorphismMode.BOUNDED)
    assert report.witness == (0, 0, 0)
    assert report.note == 'forth'


def test_identity_map_is_both(fx):
    identity = MorphismService.parse_point_map('0:0,1:1,2:2', 3, 3)
    for mode in MorphismMode:
        assert MorphismService.check_morphism(fx['wnot3'], fx['wnot3'], identity, mode).holds


@given(st.integers(min_value=0, max_value=(1 << 27) - 1), st.permutations(range(3)))
def test_permutations_onto_the_image_frame_are_bounded(bits, perm):
    frame = Frame(3, bits)
    image = Frame.from_triples(3, [(perm[i], perm[j], perm[k]) for i, j, k in frame.triples()])
    fmap = PointMap(3, 3, tuple(perm))
    assert MorphismService.check_morphism(frame, image, fmap, MorphismMode.BOUNDED).holds
    assert MorphismService.check_morphism(frame, image, fmap, MorphismMode.COBOUNDED).holds


@pytest.mark.parametrize('text, message', [
    ('0:0,1', 'not of the form'),
    ('0:0,2:1', 'out of range'),
    ('0:0,0:1', 'mapped twice'),
    ('0:0', 'not total'),
    ('0:0,1:5', 'out of range for 2 target points'),
])
def test_parse_point_map_errors(text, message):
    with pytest.raises(ValueError, match=message):
        MorphismService.parse_point_map(text, 2, 2)


def test_compose():
    first = PointMap(3, 2, (0, 1, 1))
    second = PointMap(2, 2, (1, 0))
    assert MorphismService.compose(first, second).mapping == (1, 0, 0)
    with pytest.raises(ValueError):
        MorphismService.compose(second, first)


def test_map_must_match_frames(fx):
    fmap = PointMap(2, 2, (0, 1))
    with pytest.raises(ValueError, match='Map goes from 2 to 2 points'):
        MorphismService.check_morphism(fx['chain3'], fx['identity2'], fmap, MorphismMode.BOUNDED)


def _pullback(frame, fmap):
    """Frame on fmap's source points holding exactly the triples that fmap sends into frame"""
    n = fmap.source_n
    return Frame.from_triples(n, [
        (x, y, z) for x in range(n) for y in range(n) for z in range(n)
        if frame.has(fmap(x), fmap(y), fmap(z))
    ])


def _surjections(source_n, target_n):
    covering = st.permutations(range(target_n))
    rest = st.lists(st.integers(min_value=0, max_value=target_n - 1),
                    min_size=source_n - target_n, max_size=source_n - target_n)
    return st.tuples(covering, rest).map(lambda parts: PointMap(source_n, target_n, tuple(parts[0]) + tuple(parts[1])))


@given(st.integers(min_value=0, max_value=(1 << 8) - 1), _surjections(3, 2), _surjections(4, 3))
def test_bounded_morphisms_compose_along_pullbacks(bits, second, first):
    top = Frame(2, bits)
    middle = _pullback(top, second)
    bottom = _pullback(middle, first)
    assert MorphismService.check_morphism(middle, top, second, MorphismMode.BOUNDED).holds
    assert MorphismService.check_morphism(bottom, middle, first, MorphismMode.BOUNDED).holds
    composite = MorphismService.compose(first, second)
    assert MorphismService.check_morphism(bottom, top, composite, MorphismMode.BOUNDED).holds


def test_bounded_morphisms_compose_on_reflexive_two_point_frames():
    reflexive = [Frame(2, bits) for bits in range(1 << 8) if bits & 0b10000001 == 0b10000001]
    maps = [PointMap(2, 2, images) for images in ((0, 0), (0, 1), (1, 0), (1, 1))]
    bounded = [
        (src, dst, fmap) for src in reflexive for dst in reflexive for fmap in maps
        if MorphismService.check_morphism(src, dst, fmap, MorphismMode.BOUNDED).holds
    ]
    composed = 0
    for src, mid, first in bounded:
        for mid2, dst, second in bounded:
            if mid2 != mid:
                continue
            composite = MorphismService.compose(first, second)
            assert MorphismService.check_morphism(src, dst, composite, MorphismMode.BOUNDED).holds
            composed += 1
    assert composed >= len(bounded) > 0


@given(st.integers(min_value=0, max_value=(1 << 27) - 1),
       st.lists(st.integers(min_value=0, max_value=1), min_size=3, max_size=3))
def test_universal_target_only_fails_back(bits, images):
    universal = FrameService.build_frame('universal', 2)
    report = MorphismService.check_morphism(Frame(3, bits), universal, PointMap(3, 2, tuple(images)),
                                            MorphismMode.BOUNDED)
    assert report.holds or report.note == 'back'


def test_universal_source_onto_universal_target_is_bounded():
    fmap = PointMap(3, 2, (0, 1, 1))
    assert MorphismService.check_morphism(FrameService.build_frame('universal', 3),
                                          FrameService.build_frame('universal', 2),
                                          fmap, MorphismMode.BOUNDED).holds
