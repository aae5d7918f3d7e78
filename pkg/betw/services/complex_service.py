import random

from betw.models import AxiomReport, ComplexCondition, Frame, FrameAxiom, PSAlgebra, SubalgebraResult
from betw.services.frame_service import FrameService
from betw.utils.log import get_logger

TABULATION_MAX_POINTS = 4

# Conditions with the side condition that every set argument is nonempty
_NONEMPTY_ARGS = {
    ComplexCondition.BTWc: (0,),
    ComplexCondition.BT2sc: (1,),
    ComplexCondition.DAGc: (0, 1),
}

_ARITY = {
    ComplexCondition.BT0c: 1,
    ComplexCondition.BT1cf: 2,
    ComplexCondition.BT1cg: 2,
    ComplexCondition.BT2c: 3,
    ComplexCondition.BT3c: 2,
    ComplexCondition.BTWc: 1,
    ComplexCondition.BT2sc: 2,
    ComplexCondition.DAGc: 2,
}

# Frame axiom each complex condition corresponds to
CORRESPONDENCE = (
    (FrameAxiom.BT0, ComplexCondition.BT0c),
    (FrameAxiom.BT1, ComplexCondition.BT1cf),
    (FrameAxiom.BT1, ComplexCondition.BT1cg),
    (FrameAxiom.BT2, ComplexCondition.BT2c),
    (FrameAxiom.BT3, ComplexCondition.BT3c),
    (FrameAxiom.BTW, ComplexCondition.BTWc),
    (FrameAxiom.BT2s, ComplexCondition.BT2sc),
)


class ComplexService:
    """Service for the full complex algebra of a frame: poss_B and suff_B on point sets"""

    @staticmethod
    def _check_set(frame, points):
        if points < 0 or points >> frame.n:
            raise ValueError(f"Point set {points} has points outside 0..{frame.n - 1}")

    @staticmethod
    def poss(frame, xs, ys):
        """{u : <x,u,y> in B for some x in xs, y in ys}"""
        n = frame.n
        middles = frame.middles
        out = 0
        for x in range(n):
            if (xs >> x) & 1:
                row = x * n
                for y in range(n):
                    if (ys >> y) & 1:
                        out |= middles[row + y]
        return out

    @staticmethod
    def suff(frame, xs, ys):
        """{u : <x,u,y> in B for all x in xs, y in ys}"""
        n = frame.n
        middles = frame.middles
        out = frame.full
        for x in range(n):
            if (xs >> x) & 1:
                row = x * n
                for y in range(n):
                    if (ys >> y) & 1:
                        out &= middles[row + y]
        return out

    @staticmethod
    def complex_op(frame, mode, xs, ys):
        """
        Apply f_B (mode 'poss') or g_B (mode 'suff') to two point sets.

        Args:
            frame: Frame
            mode: 'poss' or 'suff'
            xs, ys: Point sets as bit masks

        Returns:
            int: resulting point set
        """
        ComplexService._check_set(frame, xs)
        ComplexService._check_set(frame, ys)
        if mode == 'poss':
            return ComplexService.poss(frame, xs, ys)
        if mode == 'suff':
            return ComplexService.suff(frame, xs, ys)
        raise ValueError(f"Mode must be 'poss' or 'suff', got '{mode}'")

    @staticmethod
    def _condition_holds(frame, cond, args):
        poss = ComplexService.poss
        suff = ComplexService.suff
        full = frame.full

        if cond is ComplexCondition.BT0c:
            (x,) = args
            return x & ~poss(frame, x, x) == 0
        if cond is ComplexCondition.BT1cf:
            x, y = args
            return poss(frame, x, y) & ~poss(frame, y, x) == 0
        if cond is ComplexCondition.BT1cg:
            x, y = args
            return suff(frame, x, y) & ~suff(frame, y, x) == 0
        if cond is ComplexCondition.BT2c:
            x, y, z = args
            lhs = y & poss(frame, x, z)
            rhs = poss(frame, x & poss(frame, x, y), z)
            return lhs & ~rhs == 0
        if cond is ComplexCondition.BT3c:
            x, y = args
            inner = suff(frame, x, full & ~y) & y
            return poss(frame, x, inner) & ~y == 0
        if cond is ComplexCondition.BTWc:
            (x,) = args
            return suff(frame, x, x) & ~x == 0
        if cond is ComplexCondition.BT2sc:
            x, y = args
            return x & ~poss(frame, x, y) == 0
        if cond is ComplexCondition.DAGc:
            x, y = args
            return suff(frame, x, y) & ~poss(frame, x, y) == 0
        raise ValueError(f"Unsupported complex condition: {cond}")

    @staticmethod
    def _in_range(cond, args):
        return all(args[i] != 0 for i in _NONEMPTY_ARGS.get(cond, ()))

    @staticmethod
    def check_complex_condition(frame, cond, sample_budget=None, seed=0):
        """
        Decide a complex-algebra condition over all tuples of point sets.

        Frames with more than four points are checked on sample_budget random tuples.

        Returns:
            AxiomReport with the least violating tuple of point sets on failure
        """
        arity = _ARITY[cond]
        subsets = range(1 << frame.n)

        if frame.n <= TABULATION_MAX_POINTS:
            def tuples(k):
                if k == 0:
                    yield ()
                    return
                for first in subsets:
                    for rest in tuples(k - 1):
                        yield (first,) + rest
            candidates = tuples(arity)
        else:
            if sample_budget is None:
                raise ValueError(
                    f"Frames with more than {TABULATION_MAX_POINTS} points need a sample budget, got n = {frame.n}"
                )
            rng = random.Random(seed)
            candidates = sorted(
                tuple(rng.randrange(1 << frame.n) for _ in range(arity)) for _ in range(sample_budget)
            )
            get_logger().debug(f"Sampling {cond.value} on {sample_budget} tuples (seed {seed})")

        for args in candidates:
            if ComplexService._in_range(cond, args) and not ComplexService._condition_holds(frame, cond, args):
                return AxiomReport.failed(cond, args)
        return AxiomReport.ok(cond)

    @staticmethod
    def correspondence(frame, sample_budget=None, seed=0):
        """Pairs (frame axiom report, complex condition report) for the seven correspondences"""
        return [
            (
                FrameService.check_frame_axiom(frame, axiom),
                ComplexService.check_complex_condition(frame, cond, sample_budget, seed),
            )
            for axiom, cond in CORRESPONDENCE
        ]

    @staticmethod
    def reconstruct_relation(frame):
        """
        Union of X x suff_B(X, Y) x Y over all pairs of point sets.

        Above four points the union runs over singleton pairs only; suff_B is
        antitone, so larger pairs contribute nothing new.
        """
        n = frame.n
        if n <= TABULATION_MAX_POINTS:
            pairs = [(xs, ys) for xs in range(1 << n) for ys in range(1 << n)]
        else:
            pairs = [(1 << x, 1 << y) for x in range(n) for y in range(n)]

        bits = 0
        for xs, ys in pairs:
            middle = ComplexService.suff(frame, xs, ys)
            if not middle:
                continue
            for x in range(n):
                if not (xs >> x) & 1:
                    continue
                for u in range(n):
                    if not (middle >> u) & 1:
                        continue
                    for y in range(n):
                        if (ys >> y) & 1:
                            bits |= 1 << (x * n * n + u * n + y)
        return Frame(n, bits)

    @staticmethod
    def generate_subalgebra(frame, generators=()):
        """
        Least family of point sets containing the generators, empty set and U that is
        closed under union, complement, f_B and g_B.

        Returns:
            SubalgebraResult with the carrier, its atoms and the induced PSAlgebra
        """
        if frame.n > TABULATION_MAX_POINTS:
            raise ValueError(f"Subalgebra generation supports at most {TABULATION_MAX_POINTS} points, got {frame.n}")
        for gen in generators:
            ComplexService._check_set(frame, gen)

        full = frame.full
        carrier = {0, full, *generators}
        changed = True
        while changed:
            changed = False
            current = sorted(carrier)
            new = set()
            for xs in current:
                new.add(full & ~xs)
                for ys in current:
                    new.add(xs | ys)
                    new.add(ComplexService.poss(frame, xs, ys))
                    new.add(ComplexService.suff(frame, xs, ys))
            if not new <= carrier:
                carrier |= new
                changed = True

        carrier = tuple(sorted(carrier))
        atoms = tuple(
            xs for xs in carrier
            if xs and not any(ys and ys != xs and ys & ~xs == 0 for ys in carrier)
        )

        def as_atoms(points):
            return tuple(i for i, atom in enumerate(atoms) if atom & ~points == 0)

        unions = set()
        for k in range(1 << len(atoms)):
            union = 0
            for i, atom in enumerate(atoms):
                if (k >> i) & 1:
                    union |= atom
            unions.add(union)
        is_full = unions == set(carrier)

        f_values = {
            (xs, ys): ComplexService.poss(frame, xs, ys) for xs in carrier for ys in carrier
        }
        g_values = {
            (xs, ys): ComplexService.suff(frame, xs, ys) for xs in carrier for ys in carrier
        }

        algebra = None
        if is_full:
            m = len(atoms)

            def mask_of(points):
                return sum(1 << i for i in as_atoms(points))

            f_atoms = tuple(mask_of(f_values[(p, q)]) for p in atoms for q in atoms)
            g_atoms = tuple(mask_of(g_values[(p, q)]) for p in atoms for q in atoms)
            algebra = PSAlgebra(m, f_atoms, g_atoms)

        return SubalgebraResult(
            carrier=carrier,
            atoms=atoms,
            is_full_powerset_of_carrier_atoms=is_full,
            algebra=algebra,
            f_values=f_values,
            g_values=g_values,
        )

    @staticmethod
    def complex_to_psalgebra(frame):
        """
        Tabulate the full complex algebra; atoms are the singletons.

        Returns:
            PSAlgebra with m = n
        """
        n = frame.n
        if n > TABULATION_MAX_POINTS:
            raise ValueError(f"Tabulation supports at most {TABULATION_MAX_POINTS} points, got {n}")
        # on singletons poss and suff agree: both are {u : <x,u,y>}
        table = tuple(frame.middles)
        return PSAlgebra(n, table, table)
