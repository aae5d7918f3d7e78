"""Tests for bounded enumeration, separating models and representability search"""
from itertools import permutations, product

import pytest

from betw.models import (
    AlgebraAxiom, Frame, FrameAxiom, MIA_TAG, PSAlgebra, SearchSpec, SearchStatus, expand_join, expand_meet,
)
from betw.services.balg_service import BalgService, F_ONLY_AXIOMS
from betw.services.canonical_service import CanonicalService
from betw.services.frame_service import FrameService
from betw.services.search_service import SearchService, canonical_frame_form, compositions

F = FrameAxiom
A = AlgebraAxiom
B_FRAME = frozenset({F.BT0, F.BT1, F.BT2, F.BT3})
STRONG_FRAME = frozenset({F.BT0, F.BT1, F.BT2s, F.BT3})
B_ALGEBRA = frozenset({A.ABT0, A.ABT1f, A.ABT1g, A.ABT2, A.ABT3, A.wMIA})


def _frames(size, satisfy=(), violate=(), **kwargs):
    spec = SearchSpec(kind='frame', size=size, satisfy=frozenset(satisfy), violate=frozenset(violate), **kwargs)
    return SearchService.enumerate(spec)


def _algebras(size, satisfy=(), violate=(), **kwargs):
    spec = SearchSpec(kind='algebra', size=size, satisfy=frozenset(satisfy), violate=frozenset(violate), **kwargs)
    return SearchService.enumerate(spec)


def _lex_key(frame):
    return tuple((frame.bits >> t) & 1 for t in range(frame.n ** 3))


@pytest.mark.parametrize('kind, size, satisfy, expected', [
    ('frame', 1, B_FRAME, 1),
    ('frame', 2, B_FRAME, 2),
    ('frame', 2, STRONG_FRAME, 1),
    ('algebra', 1, B_ALGEBRA, 2),
])
def test_known_counts(kind, size, satisfy, expected):
    search = _frames if kind == 'frame' else _algebras
    result = search(size, satisfy)
    assert result.count == expected
    assert result.status is SearchStatus.EXHAUSTED


@pytest.mark.parametrize('satisfy, violate', [
    (B_FRAME, ()),
    ({F.BT0}, {F.BT1}),
    ({F.BT0, F.BT2}, {F.BTW}),
    ((), {F.C}),
])
def test_frame_search_matches_filtering_every_relation(satisfy, violate):
    expected = [
        Frame(2, bits) for bits in range(1 << 8)
        if all(FrameService.holds(Frame(2, bits), a) for a in satisfy)
        and not any(FrameService.holds(Frame(2, bits), a) for a in violate)
    ]
    result = _frames(2, satisfy, violate)
    assert result.count == len(expected)
    assert sorted(f.bits for f in result.models) == sorted(f.bits for f in expected)


def test_algebra_search_matches_filtering_every_table():
    expected = []
    for f0, g0 in product(range(2), repeat=2):
        alg = PSAlgebra(1, (f0,), (g0,))
        if all(BalgService.holds(alg, a) for a in B_ALGEBRA):
            expected.append(alg)
    result = _algebras(1, B_ALGEBRA)
    assert sorted((a.f_atoms, a.g_atoms) for a in result.models) == sorted((a.f_atoms, a.g_atoms) for a in expected)


def _filter_two_atom_tables(satisfy, violate):
    """Every (f, g) atom-table pair on two atoms, checked axiom by axiom on the full tables"""
    tables = list(product(range(4), repeat=4))
    f_tables = {atoms: expand_join(2, atoms) for atoms in tables}
    g_tables = {atoms: expand_meet(2, atoms) for atoms in tables}

    def holds(f_atoms, g_atoms, axiom):
        g_table = None if axiom in F_ONLY_AXIOMS else g_tables[g_atoms]
        return BalgService.check_tables(2, f_tables[f_atoms], g_table, axiom).holds

    found = []
    for f_atoms in tables:
        if not all(holds(f_atoms, None, a) for a in satisfy & F_ONLY_AXIOMS):
            continue
        if any(holds(f_atoms, None, a) for a in violate & F_ONLY_AXIOMS):
            continue
        for g_atoms in tables:
            if all(holds(f_atoms, g_atoms, a) for a in satisfy - F_ONLY_AXIOMS) \
                    and not any(holds(f_atoms, g_atoms, a) for a in violate - F_ONLY_AXIOMS):
                found.append((f_atoms, g_atoms))
    return sorted(found)


@pytest.mark.parametrize('satisfy, violate', [
    (B_ALGEBRA, frozenset()),
    (frozenset({A.ABT0, A.ABT1f, A.ABT2}), frozenset()),
    (frozenset({A.ABT2s, A.ABTW}), frozenset()),
    (frozenset({A.ABT1g, A.FiveForD}), frozenset({A.wMIA})),
    (frozenset({A.ABT0}), frozenset({A.ABT1f})),
])
def test_two_atom_search_matches_filtering_every_table(satisfy, violate):
    result = _algebras(2, satisfy, violate)
    assert result.status is SearchStatus.EXHAUSTED
    assert sorted((a.f_atoms, a.g_atoms) for a in result.models) == _filter_two_atom_tables(satisfy, violate)


def test_frames_come_out_in_lexicographic_order():
    models = _frames(3, B_FRAME).models
    assert len(models) > 2
    keys = [_lex_key(f) for f in models]
    assert keys == sorted(keys)


def test_limit_truncates_models_not_the_count():
    full = _frames(3, B_FRAME)
    limited = _frames(3, B_FRAME, limit=2)
    assert limited.count == full.count
    assert limited.models == full.models[:2]
    assert _frames(3, B_FRAME, limit=0).models == []


def test_modulo_iso_keeps_one_frame_per_class():
    full = _frames(3, B_FRAME)
    classes = {canonical_frame_form(f).bits for f in full.models}
    reduced = _frames(3, B_FRAME, modulo_iso=True)
    assert reduced.count == len(classes)
    assert {canonical_frame_form(f).bits for f in reduced.models} == classes


def test_budget_is_reported():
    result = _frames(3, budget=5)
    assert result.status is SearchStatus.BUDGET
    assert result.examined == 5
    assert result.count == 5


def test_budgeted_search_on_four_points():
    result = _frames(4, B_FRAME, budget=50)
    assert result.status in (SearchStatus.BUDGET, SearchStatus.EXHAUSTED)
    assert all(FrameService.is_b_frame(f) for f in result.models)


def test_sampling_is_deterministic_per_seed():
    first = _frames(2, {F.BT0}, sample=True, budget=100, seed=7)
    again = _frames(2, {F.BT0}, sample=True, budget=100, seed=7)
    assert first.models == again.models
    assert first.count > 0
    assert all(FrameService.holds(f, F.BT0) for f in first.models)


def test_parallel_frame_search_matches_sequential():
    spec = SearchSpec(kind='frame', size=3, satisfy=B_FRAME)
    sequential = SearchService.enumerate(spec)
    parallel = SearchService.enumerate(spec, threads=2)
    assert parallel.count == sequential.count
    assert parallel.models == sequential.models


def test_parallel_algebra_search_matches_sequential():
    spec = SearchSpec(kind='algebra', size=2, satisfy=frozenset({A.ABT0, A.ABT1f, A.ABT1g, A.ABT3}))
    sequential = SearchService.enumerate(spec)
    parallel = SearchService.enumerate(spec, threads=2)
    assert parallel.count == sequential.count
    assert sorted((a.f_atoms, a.g_atoms) for a in parallel.models) == \
        sorted((a.f_atoms, a.g_atoms) for a in sequential.models)


def test_mia_tag_filters_algebras():
    result = _algebras(1, B_ALGEBRA | {MIA_TAG})
    assert result.count > 0
    assert all(CanonicalService.is_mia(a) for a in result.models)
    without = _algebras(1, B_ALGEBRA, {MIA_TAG})
    assert result.count + without.count == _algebras(1, B_ALGEBRA).count


def test_separating_model_is_the_first_in_order():
    spec = SearchSpec(kind='frame', size=2, satisfy=frozenset({F.BT0}), violate=frozenset({F.BT1}))
    found = SearchService.find_separating_model(spec)
    assert found.status is SearchStatus.FOUND
    assert found.first == SearchService.enumerate(spec).models[0]
    assert not FrameService.holds(found.first, F.BT1)


def test_no_separating_model():
    # BT1 only constrains distinct end points
    spec = SearchSpec(kind='frame', size=1, satisfy=frozenset({F.BT0}), violate=frozenset({F.BT1}))
    result = SearchService.find_separating_model(spec)
    assert result.status is SearchStatus.EXHAUSTED
    assert result.first is None


def test_bt3_without_btw_on_two_points():
    spec = SearchSpec(kind='frame', size=2, satisfy=frozenset({F.BT3}), violate=frozenset({F.BTW}))
    found = SearchService.find_separating_model(spec)
    assert found.status is SearchStatus.FOUND
    assert list(found.first.triples()) == [(1, 0, 1)]


def test_btw_does_not_give_bt3_on_three_points():
    spec = SearchSpec(
        kind='frame', size=3, satisfy=frozenset({F.BT0, F.BT1, F.BT2, F.BTW}), violate=frozenset({F.BT3}),
    )
    found = SearchService.find_separating_model(spec)
    assert found.status is SearchStatus.FOUND
    assert FrameService.holds(found.first, F.BTW)
    assert not FrameService.holds(found.first, F.BT3)


def test_weak_mia_is_independent_on_three_atoms():
    satisfy = frozenset({A.ABT1f, A.ABT1g, A.ABT3, A.ABT2s, A.FiveForD})
    spec = SearchSpec(kind='algebra', size=3, satisfy=satisfy, violate=frozenset({A.wMIA}), budget=100_000)
    found = SearchService.find_separating_model(spec)
    assert found.status is SearchStatus.FOUND
    assert not BalgService.holds(found.first, A.wMIA)
    assert all(BalgService.holds(found.first, a) for a in satisfy)


def test_abt0_does_not_give_abt1f_on_two_atoms():
    result = _algebras(2, {A.ABT0}, {A.ABT1f})
    assert result.count > 0
    assert BalgService.holds(result.first, A.ABT0)
    assert not BalgService.holds(result.first, A.ABT1f)


def test_independence_scan_reports_smallest_size():
    scan = SearchService.independence_scan([F.BT0, F.BT1], 'frame', max_size=3)
    size, result = scan[F.BT0]
    assert size == 1
    assert result.first.bits == 0
    size, result = scan[F.BT1]
    assert size == 2
    assert FrameService.holds(result.first, F.BT0)


@pytest.mark.parametrize('spec, message', [
    (SearchSpec(kind='frame', size=5, budget=10), 'at most 4 points'),
    (SearchSpec(kind='frame', size=4), 'needs a budget'),
    (SearchSpec(kind='algebra', size=3), 'needs a budget'),
    (SearchSpec(kind='algebra', size=4, budget=10), 'at most 3 atoms'),
])
def test_search_bounds(spec, message):
    with pytest.raises(ValueError, match=message):
        SearchService.enumerate(spec)


def test_search_spec_validation():
    with pytest.raises(ValueError, match='kind'):
        SearchSpec(kind='relation', size=2)
    with pytest.raises(ValueError, match='does not apply'):
        SearchSpec(kind='frame', size=2, satisfy=frozenset({MIA_TAG}))
    with pytest.raises(ValueError, match='both satisfied and violated'):
        SearchSpec(kind='frame', size=2, satisfy=frozenset({F.BT0}), violate=frozenset({F.BT0}))
    with pytest.raises(ValueError, match='Sampling needs a budget'):
        SearchSpec(kind='frame', size=2, sample=True)
    with pytest.raises(ValueError, match='Expected a frame search spec'):
        SearchService.enumerate_frames(SearchSpec(kind='algebra', size=1))


def test_compositions():
    assert list(compositions(4, 2)) == [(1, 3), (2, 2), (3, 1)]
    assert list(compositions(3, 3)) == [(1, 1, 1)]
    assert list(compositions(2, 3)) == []
    assert len(list(compositions(6, 3))) == 10


def test_canonical_frame_form_is_invariant(fx):
    wnot3 = fx['wnot3']
    for perm in permutations(range(3)):
        image = Frame.from_triples(3, [(perm[i], perm[j], perm[k]) for i, j, k in wnot3.triples()])
        assert canonical_frame_form(image) == canonical_frame_form(wnot3)
    assert canonical_frame_form(wnot3).bits <= wnot3.bits


@pytest.mark.parametrize('name, points', [('qnots-a0', 1), ('qnots-a1', 2)])
def test_small_algebras_are_representable(fx, name, points):
    result = SearchService.representability_search(fx[name], max_points=points)
    assert result.found
    assert result.witness.frame.n == points
    assert FrameService.is_b_frame(result.witness.frame)


def test_representability_bound_is_checked(fx):
    for bad in (0, 7):
        with pytest.raises(ValueError, match='max_points'):
            SearchService.representability_search(fx['qnots-a0'], max_points=bad)


def test_one_point_is_too_few_for_a1(fx):
    result = SearchService.representability_search(fx['qnots-a1'], max_points=1)
    assert not result.found
    # the single composition (1,) on one point
    assert result.compositions_tried == 1
    assert SearchService.representability_search(fx['qnots-a1'], max_points=2).compositions_tried == 2


def test_non_representable_algebra_has_no_small_frame(fx):
    assert not SearchService.representability_search(fx['nonrep8'], max_points=5).found
