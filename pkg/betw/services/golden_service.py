"""
Golden suite: reference structures from fixtures/ and the exact verdicts expected of them.

Every check is a composition of service calls; nothing here decides an axiom itself.
"""
import os

from betw.models import (
    AlgebraAxiom, AlgebraClass, BinaryRelation, CfProperty, ComplexCondition, Frame, FrameAxiom,
    FrameClass, GoldenResult, MorphismMode, PSAlgebra, SearchSpec,
)
from betw.services.balg_service import BalgService
from betw.services.canonical_service import CanonicalService
from betw.services.complex_service import ComplexService
from betw.services.format_service import FormatService
from betw.services.frame_service import FrameService
from betw.services.morphism_service import MorphismService
from betw.services.search_service import SearchService
from betw.utils.log import get_logger

FRAME_FIXTURES = ('wnot3', 'gpairs4', 'identity2', 'chain3')
ALGEBRA_FIXTURES = ('qnots-a0', 'qnots-a1', 'fourelem-a1', 'fourelem-a2', 'table1', 'nonrep8')

B_AXIOMS = frozenset({FrameAxiom.BT0, FrameAxiom.BT1, FrameAxiom.BT2, FrameAxiom.BT3})
STRONG_AXIOMS = frozenset({FrameAxiom.BT0, FrameAxiom.BT1, FrameAxiom.BT2s, FrameAxiom.BT3})
B_ALGEBRA_AXIOMS = frozenset({
    AlgebraAxiom.ABT0, AlgebraAxiom.ABT1f, AlgebraAxiom.ABT1g, AlgebraAxiom.ABT2, AlgebraAxiom.ABT3,
    AlgebraAxiom.wMIA,
})


def _expect(report, holds, witness=None):
    passed = report.holds == holds and (witness is None or report.witness == tuple(witness))
    return passed, repr(report)


def _equal(actual, expected):
    return actual == expected, f'got {actual!r}, expected {expected!r}'


def _all_hold(reports):
    failing = [r for r in reports if not r.holds]
    return not failing, ', '.join(repr(r) for r in failing) or 'all hold'


def _count(kind, size, satisfy):
    return SearchService.enumerate(SearchSpec(kind=kind, size=size, satisfy=frozenset(satisfy), limit=0)).count


def _correspondence_agrees(frame):
    mismatched = [
        (f.axiom.value, c.axiom.value)
        for f, c in ComplexService.correspondence(frame)
        if f.holds != c.holds
    ]
    return not mismatched, f'mismatched: {mismatched}' if mismatched else 'all seven agree'


def _principal_mia(max_points):
    for n in range(1, max_points + 1):
        spec = SearchSpec(kind='frame', size=n, satisfy=B_AXIOMS)
        for frame in SearchService.enumerate(spec).models:
            if not CanonicalService.is_mia(ComplexService.complex_to_psalgebra(frame)):
                return False, f'complex algebra of {frame} is not a MIA'
    return True, f'every b-frame on up to {max_points} points'


class GoldenService:
    """Service for the reference checks behind `betw verify-paper`"""

    @staticmethod
    def load_fixtures(path):
        """
        Load every reference structure from a fixtures directory.

        Returns:
            dict: fixture name -> Frame or PSAlgebra
        """
        if not os.path.isdir(path):
            raise ValueError(f"Fixtures directory not found: {path}")
        fixtures = {}
        for name in FRAME_FIXTURES:
            fixtures[name] = FormatService.load_frame(os.path.join(path, f'{name}.frame'))
        for name in ALGEBRA_FIXTURES:
            fixtures[name] = FormatService.load_algebra(os.path.join(path, f'{name}.psalg'))
        return fixtures

    @staticmethod
    def checks(fx):
        """
        Named reference checks over the loaded fixtures.

        Args:
            fx: Fixtures from load_fixtures

        Returns:
            list of (name, callable returning (passed, detail))
        """
        a0, a1 = fx['qnots-a0'], fx['qnots-a1']
        four1, four2 = fx['fourelem-a1'], fx['fourelem-a2']
        table1, nonrep8 = fx['table1'], fx['nonrep8']
        wnot3, gpairs4 = fx['wnot3'], fx['gpairs4']
        identity2, chain3 = fx['identity2'], fx['chain3']

        check = BalgService.check_algebra_axiom
        check_frame = FrameService.check_frame_axiom
        A = AlgebraAxiom

        cycle = BinaryRelation.from_pairs(3, [(0, 0), (1, 1), (2, 2), (0, 1), (1, 2), (2, 0)])
        order = BinaryRelation.from_pairs(3, [(x, y) for x in range(3) for y in range(3) if x <= y])
        chain6 = FrameService.build_frame('chain', 6)
        universal2 = FrameService.build_frame('universal', 2)
        parity = MorphismService.parse_point_map('0:0,1:1,2:0,3:1,4:0,5:1', 6, 2)
        collapse = MorphismService.parse_point_map('0:0,1:0', 2, 1)
        empty1 = Frame(1, 0)

        def closure():
            return FrameService.close_expanding(gpairs4)

        def closure_suff(xs, ys):
            frame = closure().frame
            return _equal(ComplexService.suff(frame, xs, ys), frame.full)

        def embeds(alg, points):
            result = SearchService.representability_search(alg, max_points=points)
            if not result.found:
                return False, f'no b-frame with at most {points} points'
            n = result.witness.frame.n
            return n == points, f'found on {n} points'

        items = [
            ('complex algebra of the one-point frame is A0',
             lambda: _equal(ComplexService.complex_to_psalgebra(FrameService.build_frame('identity', 1)), a0)),
            ('A1 is a strong b-algebra', lambda: _equal(BalgService.classify_algebra(a1), AlgebraClass.STRONG)),
            ('A0 is a MIA', lambda: _equal(CanonicalService.is_mia(a0), True)),
            ('A1 is not a MIA', lambda: _equal(CanonicalService.is_mia(a1), False)),
            ('A1 has a discriminator', lambda: _expect(BalgService.discriminator_check(a1), True)),
            ('two-element algebra with f = 0, g = 1 has no discriminator',
             lambda: _expect(BalgService.discriminator_check(PSAlgebra(1, (0,), (1,))), False, (1,))),
            ('four-element A1 satisfies ABT1f', lambda: _expect(check(four1, A.ABT1f), True)),
            ('four-element A1 fails ABT1g at (a,b)', lambda: _expect(check(four1, A.ABT1g), False, (1, 2))),
            ('four-element A2 satisfies ABT1g', lambda: _expect(check(four2, A.ABT1g), True)),
            ('four-element A2 fails ABT1f at (a,b)', lambda: _expect(check(four2, A.ABT1f), False, (1, 2))),
            ('3-atom table satisfies ABT1f, ABT1g, ABT3, ABT2s and FiveForD',
             lambda: _all_hold([check(table1, a) for a in (A.ABT1f, A.ABT1g, A.ABT3, A.ABT2s, A.FiveForD)])),
            ('3-atom table fails wMIA at ({b}, {c})', lambda: _expect(check(table1, A.wMIA), False, (2, 4))),
            ('3-atom table is PS-algebra-only',
             lambda: _equal(BalgService.classify_algebra(table1), AlgebraClass.PS_ONLY)),
            ('3-atom table: S is not inside Q at (u_b, u_a, u_c)',
             lambda: _expect(CanonicalService.check_cf_property(table1, CfProperty.SsubQ), False, (1, 0, 2))),
            ('3-atom table: Stone map embeds into the canonical extension',
             lambda: _expect(CanonicalService.verify_stone_embedding(table1), True)),
            ('non-representable algebra satisfies the b-algebra axioms',
             lambda: _all_hold([check(nonrep8, a) for a in A if a in B_ALGEBRA_AXIOMS])),
            ('non-representable algebra has the obstruction ({a}, {c})',
             lambda: _expect(BalgService.obstruction_report(nonrep8), False, (1, 4))),
            ('non-representable algebra: Stone map embeds into the canonical extension',
             lambda: _expect(CanonicalService.verify_stone_embedding(nonrep8), True)),
            ('non-representable algebra: canonical frame satisfies BT3Cf',
             lambda: _expect(CanonicalService.check_cf_property(nonrep8, CfProperty.BT3Cf), True)),
            ('A1 x A1 fails ABTW at ({a})',
             lambda: _expect(check(BalgService.product_algebra(a1, a1), A.ABTW), False, (1,))),
            ('Wnot3 satisfies BTW', lambda: _expect(check_frame(wnot3, FrameAxiom.BTW), True)),
            ('Wnot3 fails BT3 at <0,1,2>', lambda: _expect(check_frame(wnot3, FrameAxiom.BT3), False, (0, 1, 2))),
            ('closure of the 4-point seed is consistent', lambda: _equal(closure().consistent, True)),
            ('closure of the 4-point seed is a strong b-frame',
             lambda: _equal(FrameService.classify_frame(closure().frame), FrameClass.STRONG)),
            ('closure: suff({0},{1}) = U', lambda: closure_suff(0b0001, 0b0010)),
            ('closure: suff({2},{3}) = U', lambda: closure_suff(0b0100, 0b1000)),
            ('identity2: frame axioms match complex conditions', lambda: _correspondence_agrees(identity2)),
            ('chain3: frame axioms match complex conditions', lambda: _correspondence_agrees(chain3)),
            ('Wnot3: frame axioms match complex conditions', lambda: _correspondence_agrees(wnot3)),
            ('chain3: DAGc holds',
             lambda: _expect(ComplexService.check_complex_condition(chain3, ComplexCondition.DAGc), True)),
            ('chain3: relation is recovered from suff', lambda: _equal(ComplexService.reconstruct_relation(chain3), chain3)),
            ('Wnot3: relation is recovered from suff', lambda: _equal(ComplexService.reconstruct_relation(wnot3), wnot3)),
            ('chain3 is a strong b-frame', lambda: _equal(FrameService.classify_frame(chain3), FrameClass.STRONG)),
            ('identity2 embeds into its canonical frame',
             lambda: _expect(CanonicalService.frame_ultrafilter_embedding(identity2), True)),
            ('reflexive 3-cycle is not strongly antisymmetric',
             lambda: _expect(FrameService.is_strongly_antisymmetric(cycle), False, (0, 1, 2))),
            ('reflexive 3-cycle does not induce a b-frame',
             lambda: _equal(FrameService.is_b_frame(FrameService.betweenness_from_binary(cycle)), False)),
            ('linear order on 3 points induces chain3',
             lambda: _equal(FrameService.betweenness_from_binary(order), chain3)),
            ('parity map from the 6-chain fails back at <1,0,1>',
             lambda: _expect(MorphismService.check_morphism(chain6, universal2, parity, MorphismMode.BOUNDED),
                             False, (1, 0, 1))),
            ('collapsing identity2 onto the empty point is co-bounded',
             lambda: _expect(MorphismService.check_morphism(identity2, empty1, collapse, MorphismMode.COBOUNDED),
                             True)),
            ('collapsing identity2 onto the empty point is not bounded',
             lambda: _expect(MorphismService.check_morphism(identity2, empty1, collapse, MorphismMode.BOUNDED),
                             False, (0, 0, 0))),
            ('one b-frame on 1 point', lambda: _equal(_count('frame', 1, B_AXIOMS), 1)),
            ('two b-frames on 2 points', lambda: _equal(_count('frame', 2, B_AXIOMS), 2)),
            ('one strong b-frame on 2 points', lambda: _equal(_count('frame', 2, STRONG_AXIOMS), 1)),
            ('two b-algebras on 1 atom', lambda: _equal(_count('algebra', 1, B_ALGEBRA_AXIOMS), 2)),
            ('complex algebras of small b-frames are MIAs', lambda: _principal_mia(2)),
            ('A0 embeds on 1 point', lambda: embeds(a0, 1)),
            ('A1 embeds on 2 points', lambda: embeds(a1, 2)),
            ('non-representable algebra has no b-frame up to 5 points',
             lambda: _equal(SearchService.representability_search(nonrep8, max_points=5).found, False)),
        ]
        return items

    @staticmethod
    def run(path):
        """
        Run the golden suite against the fixtures in path.

        Returns:
            list of GoldenResult in suite order
        """
        log = get_logger()
        fixtures = GoldenService.load_fixtures(path)
        results = []
        for name, thunk in GoldenService.checks(fixtures):
            passed, detail = thunk()
            if not passed:
                log.warning(f"Golden check failed: {name} ({detail})")
            results.append(GoldenResult(name=name, passed=passed, detail=detail))
        log.info(f"Golden suite: {sum(r.passed for r in results)}/{len(results)} passed")
        return results
