from betw.models import (
    AxiomReport, CanonicalExtension, CanonicalFrame, CfProperty, CheckTag, Frame, FrameAxiom, PSAlgebra,
)
from betw.services.algebra_service import AlgebraService
from betw.services.complex_service import ComplexService, TABULATION_MAX_POINTS
from betw.services.frame_service import FrameService

# Cf properties that are plain frame axioms on Q or on S
_FRAME_LEVEL = {
    CfProperty.BT0Cf: ('q', FrameAxiom.BT0),
    CfProperty.BT1Cf_f: ('q', FrameAxiom.BT1),
    CfProperty.BT1Cf_g: ('s', FrameAxiom.BT1),
    CfProperty.BT2Cf: ('q', FrameAxiom.BT2),
    CfProperty.BT2sCf: ('q', FrameAxiom.BT2s),
    CfProperty.BTWCf: ('s', FrameAxiom.BTW),
}


class CanonicalService:
    """Service for canonical frames and canonical extensions of finite PS-algebras"""

    @staticmethod
    def _definitional_relations(alg):
        """
        Q and S straight from the ultrafilter definitions:
        Q(u1,u2,u3) iff f[u1 x u3] is inside u2; S(u1,u2,u3) iff g[u1 x u3] meets u2.
        """
        m = alg.m
        ultrafilters = AlgebraService.ultrafilters(alg)
        members = [[x for x in alg.elements() if u.contains(x)] for u in ultrafilters]
        q_bits = 0
        s_bits = 0
        for p in range(m):
            for r in range(m):
                f_images = {alg.f(x, z) for x in members[p] for z in members[r]}
                g_images = {alg.g(x, z) for x in members[p] for z in members[r]}
                for q, u in enumerate(ultrafilters):
                    index = p * m * m + q * m + r
                    if all(u.contains(v) for v in f_images):
                        q_bits |= 1 << index
                    if any(u.contains(v) for v in g_images):
                        s_bits |= 1 << index
        return q_bits, s_bits

    @staticmethod
    def canonical_frame(alg, verify=True):
        """
        Canonical frame of alg on its m principal ultrafilters.

        Q(p,q,r) iff q <= f(p,r) and S(p,q,r) iff q <= g(p,r) for atoms p, q, r; the
        ultrafilter definitions are evaluated as well and must agree.

        Returns:
            CanonicalFrame
        """
        m = alg.m
        q_bits = 0
        s_bits = 0
        for p in range(m):
            for r in range(m):
                f_val = alg.f_atom(p, r)
                g_val = alg.g_atom(p, r)
                for q in range(m):
                    index = p * m * m + q * m + r
                    if (f_val >> q) & 1:
                        q_bits |= 1 << index
                    if (g_val >> q) & 1:
                        s_bits |= 1 << index

        if verify:
            expected_q, expected_s = CanonicalService._definitional_relations(alg)
            if (expected_q, expected_s) != (q_bits, s_bits):
                raise AssertionError(f"Atom-level canonical relations disagree with ultrafilter definitions for {alg}")

        return CanonicalFrame(
            ultrafilters=tuple(AlgebraService.ultrafilters(alg)),
            q=Frame(m, q_bits),
            s=Frame(m, s_bits),
        )

    @staticmethod
    def check_cf_property(alg, prop, cf=None):
        """
        Decide one canonical-frame property over all ultrafilter triples.

        Returns:
            AxiomReport; witnesses are ultrafilter (atom) indices
        """
        cf = cf or CanonicalService.canonical_frame(alg)

        if prop in _FRAME_LEVEL:
            which, axiom = _FRAME_LEVEL[prop]
            report = FrameService.check_frame_axiom(getattr(cf, which), axiom)
            if report.holds:
                return AxiomReport.ok(prop)
            return AxiomReport.failed(prop, report.witness)

        m = cf.m
        if prop is CfProperty.BT3Cf:
            # Q(u1,u2,u3) and S(u1,u3,u2) imply u2 = u3
            for a, b, c in cf.q.triples():
                if b != c and cf.s.has(a, c, b):
                    return AxiomReport.failed(prop, (a, b, c))
            return AxiomReport.ok(prop)
        if prop is CfProperty.SsubQ:
            for a, b, c in cf.s.triples():
                if not cf.q.has(a, b, c):
                    return AxiomReport.failed(prop, (a, b, c))
            return AxiomReport.ok(prop)
        raise ValueError(f"Unsupported canonical frame property: {prop} (m = {m})")

    @staticmethod
    def is_mia(alg):
        """Q_f = S_g"""
        cf = CanonicalService.canonical_frame(alg)
        return cf.q.bits == cf.s.bits

    @staticmethod
    def q_reduct(alg):
        """The frame <Ult(A), Q_f>"""
        return CanonicalService.canonical_frame(alg).q

    @staticmethod
    def stone(alg, x):
        """Set of ultrafilters containing x, as a mask over ultrafilter indices"""
        out = 0
        for u in AlgebraService.ultrafilters(alg):
            if u.contains(x):
                out |= 1 << u.atom
        return out

    @staticmethod
    def _check_cap(alg):
        if alg.m > TABULATION_MAX_POINTS:
            raise ValueError(f"Canonical extension supports at most {TABULATION_MAX_POINTS} atoms, got {alg.m}")

    @staticmethod
    def canonical_extension(alg):
        """
        Complex algebra of the canonical frame: poss over Q for f and suff over S for g.

        Returns:
            CanonicalExtension with the extension and the Stone map as a tuple indexed by element
        """
        CanonicalService._check_cap(alg)
        cf = CanonicalService.canonical_frame(alg)
        f_part = ComplexService.complex_to_psalgebra(cf.q)
        g_part = ComplexService.complex_to_psalgebra(cf.s)
        ext = PSAlgebra(alg.m, f_part.f_atoms, g_part.g_atoms)
        stone = tuple(CanonicalService.stone(alg, x) for x in alg.elements())
        return CanonicalExtension(ext=ext, stone=stone)

    @staticmethod
    def verify_stone_embedding(alg):
        """
        h(f(x,y)) = poss_Q(h(x), h(y)) and h(g(x,y)) = suff_S(h(x), h(y)) for all x, y, with
        h injective and a Boolean homomorphism.

        Returns:
            AxiomReport with the least failing pair
        """
        CanonicalService._check_cap(alg)
        cf = CanonicalService.canonical_frame(alg)
        top = alg.top
        h = [CanonicalService.stone(alg, x) for x in alg.elements()]
        tag = CheckTag.STONE_EMBEDDING

        if len(set(h)) != alg.size:
            first = next(x for x in alg.elements() if h.index(h[x]) != x)
            return AxiomReport.failed(tag, (h.index(h[first]), first), note='not injective')

        for x in alg.elements():
            if h[top & ~x] != cf.q.full & ~h[x]:
                return AxiomReport.failed(tag, (x,), note='complement')
            for y in alg.elements():
                if h[x | y] != h[x] | h[y]:
                    return AxiomReport.failed(tag, (x, y), note='join')
                if h[alg.f(x, y)] != ComplexService.poss(cf.q, h[x], h[y]):
                    return AxiomReport.failed(tag, (x, y), note='f')
                if h[alg.g(x, y)] != ComplexService.suff(cf.s, h[x], h[y]):
                    return AxiomReport.failed(tag, (x, y), note='g')
        return AxiomReport.ok(tag)

    @staticmethod
    def frame_ultrafilter_embedding(frame):
        """
        x -> principal ultrafilter of {x} carries B onto both Q and S of the canonical
        frame of the full complex algebra.
        """
        alg = ComplexService.complex_to_psalgebra(frame)
        cf = CanonicalService.canonical_frame(alg)
        tag = CheckTag.FRAME_EMBEDDING
        n = frame.n
        for x in range(n):
            for y in range(n):
                for z in range(n):
                    b = frame.has(x, y, z)
                    if b != cf.q.has(x, y, z):
                        return AxiomReport.failed(tag, (x, y, z), note='Q')
                    if b != cf.s.has(x, y, z):
                        return AxiomReport.failed(tag, (x, y, z), note='S')
        return AxiomReport.ok(tag)

    @staticmethod
    def frame_canonical_extension(frame):
        """Canonical frame of the full complex algebra of frame"""
        return CanonicalService.canonical_frame(ComplexService.complex_to_psalgebra(frame))
