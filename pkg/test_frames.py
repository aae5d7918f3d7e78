"""Tests for frame construction and the frame axioms"""
import pytest
from hypothesis import given, strategies as st

from betw.models import BinaryRelation, Frame, FrameAxiom, FrameClass
from betw.services.frame_service import FrameService
from betw.utils.clauses import satisfies

frames3 = st.integers(min_value=0, max_value=(1 << 27) - 1).map(lambda bits: Frame(3, bits))


def test_build_standard_frames():
    identity = FrameService.build_frame('identity', 3)
    assert sorted(identity.triples()) == [(0, 0, 0), (1, 1, 1), (2, 2, 2)]
    assert FrameService.build_frame('universal', 2).size == 8
    chain = FrameService.build_frame('chain', 3)
    assert chain.has(0, 1, 2) and chain.has(2, 1, 0)
    assert not chain.has(0, 2, 1)


@pytest.mark.parametrize('kind, n, triples', [
    ('ring', 3, None),
    ('identity', 0, None),
    ('identity', 17, None),
    ('from_triples', 2, None),
    ('chain', 2, [(0, 0, 0)]),
    ('from_triples', 2, [(0, 0, 2)]),
])
def test_build_frame_rejects_bad_input(kind, n, triples):
    with pytest.raises(ValueError):
        FrameService.build_frame(kind, n, triples)


def test_wnot3_satisfies_btw_but_not_bt3(fx):
    wnot3 = fx['wnot3']
    assert FrameService.check_frame_axiom(wnot3, FrameAxiom.BTW).holds
    report = FrameService.check_frame_axiom(wnot3, FrameAxiom.BT3)
    assert not report.holds
    assert report.witness == (0, 1, 2)
    assert FrameService.classify_frame(wnot3) is FrameClass.WEAK


def test_universal_two_point_frame_fails_btw():
    report = FrameService.check_frame_axiom(FrameService.build_frame('universal', 2), FrameAxiom.BTW)
    assert report.witness == (0, 1)


def test_chain_is_strong_and_identity_is_not():
    assert FrameService.classify_frame(FrameService.build_frame('chain', 4)) is FrameClass.STRONG
    # <0,0,1> is missing, so BT2s fails, but BT0-BT3 hold
    assert FrameService.classify_frame(FrameService.build_frame('identity', 2)) is FrameClass.BFRAME


def test_empty_frame_is_ps_only():
    assert FrameService.classify_frame(Frame(2, 0)) is FrameClass.PS_ONLY


def test_axiom_c_only_constrains_distinct_points(fx):
    assert FrameService.holds(fx['chain3'], FrameAxiom.C)
    report = FrameService.check_frame_axiom(fx['wnot3'], FrameAxiom.C)
    assert report.witness == (0, 1, 2)


@given(frames3)
def test_clauses_agree_with_checker(frame):
    for axiom in FrameAxiom:
        clauses = FrameService.axiom_clauses(3, axiom)
        assert satisfies(frame.bits, clauses) == FrameService.holds(frame, axiom), axiom


@given(frames3)
def test_classification_is_cumulative(frame):
    label = FrameService.classify_frame(frame)
    if label is FrameClass.STRONG:
        assert FrameService.is_b_frame(frame)
    if label in (FrameClass.STRONG, FrameClass.BFRAME):
        assert FrameService.holds(frame, FrameAxiom.BTW)


def test_strong_antisymmetry_iff_b_frame_for_reflexive_relations():
    reflexive = 0
    for bits in range(1 << 9):
        rel = BinaryRelation(3, bits)
        if not rel.is_reflexive():
            continue
        reflexive += 1
        antisymmetric = FrameService.is_strongly_antisymmetric(rel).holds
        assert antisymmetric == FrameService.is_b_frame(FrameService.betweenness_from_binary(rel)), bits
    assert reflexive == 64


def test_reflexive_cycle_witness():
    cycle = BinaryRelation.from_pairs(3, [(0, 0), (1, 1), (2, 2), (0, 1), (1, 2), (2, 0)])
    report = FrameService.is_strongly_antisymmetric(cycle)
    assert report.witness == (0, 1, 2)


def test_closure_of_seed(fx):
    result = FrameService.close_expanding(fx['gpairs4'])
    assert result.consistent
    assert FrameService.is_b_frame(result.frame)
    assert FrameService.classify_frame(result.frame) is FrameClass.STRONG
    assert fx['gpairs4'].bits & ~result.frame.bits == 0


def test_closure_reports_bt3_clash():
    seed = Frame.from_triples(3, [(0, 1, 2), (0, 2, 1)])
    result = FrameService.close_expanding(seed)
    assert not result.consistent
    assert result.frame.has(2, 1, 0) and result.frame.has(0, 0, 1)


@given(frames3)
def test_closure_is_least_and_idempotent(frame):
    closed = FrameService.close_expanding(frame).frame
    assert frame.bits & ~closed.bits == 0
    for axiom in (FrameAxiom.BT0, FrameAxiom.BT1, FrameAxiom.BT2):
        assert FrameService.holds(closed, axiom)
    assert FrameService.close_expanding(closed).frame == closed


@given(frames3)
def test_complement_is_an_involution(frame):
    complement = FrameService.complement(frame)
    assert complement.bits & frame.bits == 0
    assert FrameService.complement(complement) == frame


def test_middles_table():
    frame = Frame.from_triples(2, [(0, 1, 0), (0, 0, 0), (1, 1, 0)])
    assert frame.middles == (0b11, 0, 0b10, 0)
