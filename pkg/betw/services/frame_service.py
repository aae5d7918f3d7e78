from betw.models import (
    AxiomReport, CheckTag, ClosureResult, Frame, FrameAxiom, FrameClass,
    MAX_POINTS,
)
from betw.utils.log import get_logger

FRAME_KINDS = ('identity', 'universal', 'chain', 'from_triples')


class FrameService:
    """Service for building ternary frames and checking betweenness axioms on them"""

    @staticmethod
    def build_frame(kind, n, triples=None):
        """
        Build one of the standard frames.

        Args:
            kind: 'identity', 'universal', 'chain' or 'from_triples'
            n: Point count (1..16)
            triples: Triple list, only for kind 'from_triples'

        Returns:
            Frame
        """
        if kind not in FRAME_KINDS:
            raise ValueError(f"Unknown frame kind '{kind}' (expected one of: {', '.join(FRAME_KINDS)})")
        if not isinstance(n, int) or not 1 <= n <= MAX_POINTS:
            raise ValueError(f"n must be between 1 and {MAX_POINTS}, got {n}")
        if kind == 'from_triples':
            if triples is None:
                raise ValueError("Kind 'from_triples' needs a triple list")
            return Frame.from_triples(n, triples)
        if triples is not None:
            raise ValueError(f"Triples can only be supplied for kind 'from_triples', not '{kind}'")

        if kind == 'identity':
            return Frame.from_triples(n, [(i, i, i) for i in range(n)])
        if kind == 'universal':
            return Frame(n, (1 << (n ** 3)) - 1)
        # chain: B induced by 0 <= 1 <= ... <= n-1
        return Frame.from_triples(n, [
            (i, j, k)
            for i in range(n) for j in range(n) for k in range(n)
            if i <= j <= k or k <= j <= i
        ])

    @staticmethod
    def check_frame_axiom(frame, axiom):
        """
        Decide one frame axiom.

        Returns:
            AxiomReport with the lexicographically least violating tuple on failure
        """
        n = frame.n
        has = frame.has
        points = range(n)

        if axiom is FrameAxiom.BT0:
            for a in points:
                if not has(a, a, a):
                    return AxiomReport.failed(axiom, (a,))
        elif axiom is FrameAxiom.BT1:
            for a, b, c in frame.triples():
                if not has(c, b, a):
                    return AxiomReport.failed(axiom, (a, b, c))
        elif axiom is FrameAxiom.BT2:
            for a, b, c in frame.triples():
                if not has(a, a, b):
                    return AxiomReport.failed(axiom, (a, b, c))
        elif axiom is FrameAxiom.BT3:
            for a, b, c in frame.triples():
                if b != c and has(a, c, b):
                    return AxiomReport.failed(axiom, (a, b, c))
        elif axiom is FrameAxiom.BTW:
            for a in points:
                for b in points:
                    if a != b and has(a, b, a):
                        return AxiomReport.failed(axiom, (a, b))
        elif axiom is FrameAxiom.BT2s:
            for a in points:
                for b in points:
                    if not has(a, a, b):
                        return AxiomReport.failed(axiom, (a, b))
        elif axiom is FrameAxiom.C:
            # only triples of three distinct points are constrained
            for a, b, c in frame.triples():
                if len({a, b, c}) == 3 and has(a, c, b):
                    return AxiomReport.failed(axiom, (a, b, c))
        else:
            raise ValueError(f"Unsupported frame axiom: {axiom}")
        return AxiomReport.ok(axiom)

    @staticmethod
    def holds(frame, axiom):
        return FrameService.check_frame_axiom(frame, axiom).holds

    @staticmethod
    def axiom_vector(frame):
        """Reports for all frame axioms in declaration order"""
        return [FrameService.check_frame_axiom(frame, axiom) for axiom in FrameAxiom]

    @staticmethod
    def classify_frame(frame):
        """
        Most specific label among strong b-frame, b-frame, weak b-frame, PS-frame-only.
        """
        verdict = {axiom: FrameService.holds(frame, axiom) for axiom in FrameAxiom}
        base = verdict[FrameAxiom.BT0] and verdict[FrameAxiom.BT1]
        strong = base and verdict[FrameAxiom.BT2s] and verdict[FrameAxiom.BT3]
        bframe = base and verdict[FrameAxiom.BT2] and verdict[FrameAxiom.BT3]
        weak = base and verdict[FrameAxiom.BT2] and verdict[FrameAxiom.BTW]

        if strong and not bframe:
            raise AssertionError(f"Strong b-frame fails the b-frame axioms: {frame}")
        if bframe and not weak:
            raise AssertionError(f"b-frame fails the weak b-frame axioms: {frame}")

        if strong:
            return FrameClass.STRONG
        if bframe:
            return FrameClass.BFRAME
        if weak:
            return FrameClass.WEAK
        return FrameClass.PS_ONLY

    @staticmethod
    def is_b_frame(frame):
        return FrameService.classify_frame(frame) in (FrameClass.STRONG, FrameClass.BFRAME)

    @staticmethod
    def is_strongly_antisymmetric(rel):
        """x R y R z R x implies y = z; least (x, y, z) witness on failure"""
        n = rel.n
        has = rel.has
        for x in range(n):
            for y in range(n):
                if not has(x, y):
                    continue
                for z in range(n):
                    if y != z and has(y, z) and has(z, x):
                        return AxiomReport.failed(CheckTag.STRONG_ANTISYMMETRY, (x, y, z))
        return AxiomReport.ok(CheckTag.STRONG_ANTISYMMETRY)

    @staticmethod
    def betweenness_from_binary(rel):
        """B_R(x, y, z) iff x R y R z or z R y R x"""
        n = rel.n
        has = rel.has
        return Frame.from_triples(n, [
            (x, y, z)
            for x in range(n) for y in range(n) for z in range(n)
            if (has(x, y) and has(y, z)) or (has(z, y) and has(y, x))
        ])

    @staticmethod
    def close_expanding(seed):
        """
        Least superset of seed closed under the expanding rules BT0, BT1 and BT2.

        Returns:
            ClosureResult; consistent is True iff the closure satisfies BT3
        """
        n = seed.n
        present = set(seed.triples())
        present.update((a, a, a) for a in range(n))
        pending = list(present)
        while pending:
            a, b, c = pending.pop()
            for derived in ((c, b, a), (a, a, b)):
                if derived not in present:
                    present.add(derived)
                    pending.append(derived)

        frame = Frame.from_triples(n, present)
        bt3 = FrameService.check_frame_axiom(frame, FrameAxiom.BT3)
        if not bt3.holds:
            get_logger().info(f"Expanding closure of {seed} clashes with BT3 at {bt3.witness}")
        return ClosureResult(frame=frame, consistent=bt3.holds)

    @staticmethod
    def complement(frame):
        """The frame with relation -B"""
        return Frame(frame.n, ((1 << (frame.n ** 3)) - 1) & ~frame.bits)

    @staticmethod
    def axiom_clauses(n, axiom):
        """
        Clauses over triple variables equivalent to a frame axiom.

        Variable t + 1 stands for the triple with index t.

        Returns:
            list of clauses (lists of signed ints)
        """
        def var(i, j, k):
            return i * n * n + j * n + k + 1

        points = range(n)
        clauses = []
        if axiom is FrameAxiom.BT0:
            clauses = [[var(a, a, a)] for a in points]
        elif axiom is FrameAxiom.BT1:
            clauses = [
                [-var(a, b, c), var(c, b, a)]
                for a in points for b in points for c in points if a != c
            ]
        elif axiom is FrameAxiom.BT2:
            clauses = [
                [-var(a, b, c), var(a, a, b)]
                for a in points for b in points for c in points
                if (a, b, c) != (a, a, b)
            ]
        elif axiom is FrameAxiom.BT3:
            clauses = [
                [-var(a, b, c), -var(a, c, b)]
                for a in points for b in points for c in points if b < c
            ]
        elif axiom is FrameAxiom.BTW:
            clauses = [[-var(a, b, a)] for a in points for b in points if a != b]
        elif axiom is FrameAxiom.BT2s:
            clauses = [[var(a, a, b)] for a in points for b in points]
        elif axiom is FrameAxiom.C:
            clauses = [
                [-var(a, b, c), -var(a, c, b)]
                for a in points for b in points for c in points
                if b < c and a != b and a != c
            ]
        else:
            raise ValueError(f"Unsupported frame axiom: {axiom}")
        return clauses
