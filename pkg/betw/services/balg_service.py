from betw.models import (
    AlgebraAxiom, AlgebraClass, AxiomReport, CheckTag, MAX_ATOMS, ObstructionCertificate, PSAlgebra,
)

# Axioms that only mention f; checkable before g is chosen
F_ONLY_AXIOMS = frozenset({AlgebraAxiom.ABT0, AlgebraAxiom.ABT1f, AlgebraAxiom.ABT2, AlgebraAxiom.ABT2s})


def _leq(x, y):
    return x & ~y == 0


class BalgService:
    """Service for betweenness-algebra axioms on finite PS-algebras"""

    @staticmethod
    def check_tables(m, f_table, g_table, axiom):
        """
        Decide an axiom on full tables. g_table may be None for the f-only axioms.

        Returns:
            AxiomReport with the least violating element tuple on failure
        """
        size = 1 << m
        top = size - 1
        elements = range(size)
        f = f_table
        g = g_table
        if g is None and axiom not in F_ONLY_AXIOMS:
            raise ValueError(f"Axiom {axiom.value} needs the g table")

        if axiom is AlgebraAxiom.ABT0:
            for x in elements:
                if not _leq(x, f[x][x]):
                    return AxiomReport.failed(axiom, (x,))
        elif axiom is AlgebraAxiom.ABT1f:
            for x in elements:
                for y in elements:
                    if f[x][y] != f[y][x]:
                        return AxiomReport.failed(axiom, (x, y))
        elif axiom is AlgebraAxiom.ABT1g:
            for x in elements:
                for y in elements:
                    if g[x][y] != g[y][x]:
                        return AxiomReport.failed(axiom, (x, y))
        elif axiom is AlgebraAxiom.ABT2:
            # y . f(x,z) <= f(x . f(x,y), z)
            for x in elements:
                fx = f[x]
                for y in elements:
                    left_arg = x & fx[y]
                    shifted = f[left_arg]
                    for z in elements:
                        if not _leq(y & fx[z], shifted[z]):
                            return AxiomReport.failed(axiom, (x, y, z))
        elif axiom is AlgebraAxiom.ABT3:
            # f(x, g(x,-y) . y) <= y
            for x in elements:
                for y in elements:
                    inner = g[x][top & ~y] & y
                    if not _leq(f[x][inner], y):
                        return AxiomReport.failed(axiom, (x, y))
        elif axiom is AlgebraAxiom.wMIA:
            for x in elements:
                for y in elements:
                    if x and y and not _leq(g[x][y], f[x][y]):
                        return AxiomReport.failed(axiom, (x, y))
        elif axiom is AlgebraAxiom.ABTW:
            for a in elements:
                if a and not _leq(g[a][a], a):
                    return AxiomReport.failed(axiom, (a,))
        elif axiom is AlgebraAxiom.ABT2s:
            for a in elements:
                for b in elements:
                    if b and not _leq(a, f[a][b]):
                        return AxiomReport.failed(axiom, (a, b))
        elif axiom is AlgebraAxiom.FiveForD:
            for a in elements:
                for b in elements:
                    if a & b and not _leq(g[a][b], f[a][b]):
                        return AxiomReport.failed(axiom, (a, b))
        else:
            raise ValueError(f"Unsupported algebra axiom: {axiom}")
        return AxiomReport.ok(axiom)

    @staticmethod
    def check_algebra_axiom(alg, axiom):
        return BalgService.check_tables(alg.m, alg.f_table, alg.g_table, axiom)

    @staticmethod
    def holds(alg, axiom):
        return BalgService.check_algebra_axiom(alg, axiom).holds

    @staticmethod
    def axiom_vector(alg):
        """Reports for all algebra axioms in declaration order"""
        return [BalgService.check_algebra_axiom(alg, axiom) for axiom in AlgebraAxiom]

    @staticmethod
    def classify_algebra(alg):
        """
        Most specific label among strong b-algebra, b-algebra, weak b-algebra, PS-algebra-only.

        Every label other than PS-algebra-only requires wMIA.
        """
        v = {axiom: BalgService.holds(alg, axiom) for axiom in AlgebraAxiom}
        A = AlgebraAxiom
        strong = v[A.ABT1f] and v[A.ABT1g] and v[A.ABT3] and v[A.wMIA] and v[A.ABT2s]
        balg = v[A.ABT0] and v[A.ABT1f] and v[A.ABT1g] and v[A.ABT2] and v[A.ABT3] and v[A.wMIA]
        weak = v[A.ABT0] and v[A.ABT1f] and v[A.ABT1g] and v[A.ABT2] and v[A.ABTW] and v[A.wMIA]

        if strong and not balg:
            raise AssertionError(f"Strong b-algebra fails the b-algebra axioms: {alg}")
        if balg and not weak:
            raise AssertionError(f"b-algebra fails ABTW: {alg}")

        if strong:
            return AlgebraClass.STRONG
        if balg:
            return AlgebraClass.BALGEBRA
        if weak:
            return AlgebraClass.WEAK
        return AlgebraClass.PS_ONLY

    @staticmethod
    def discriminator(alg):
        """d(a) = f(a,a) + -g(a,a) for every element"""
        top = alg.top
        return tuple(alg.f(a, a) | (top & ~alg.g(a, a)) for a in alg.elements())

    @staticmethod
    def discriminator_check(alg):
        """d is the unary discriminator: d(0) = 0 and d(a) = 1 for a != 0"""
        d = BalgService.discriminator(alg)
        for a in alg.elements():
            expected = 0 if a == 0 else alg.top
            if d[a] != expected:
                return AxiomReport.failed(CheckTag.DISCRIMINATOR, (a,))
        return AxiomReport.ok(CheckTag.DISCRIMINATOR)

    @staticmethod
    def meet_below_f(alg):
        """x . y <= f(x, y) for all x, y"""
        for x in alg.elements():
            for y in alg.elements():
                if not _leq(x & y, alg.f(x, y)):
                    return AxiomReport.failed(CheckTag.MEET_BELOW_F, (x, y))
        return AxiomReport.ok(CheckTag.MEET_BELOW_F)

    @staticmethod
    def g_top_pairs(alg):
        """Pairs (a, b) of nonzero elements with g(a, b) = 1"""
        top = alg.top
        return [
            (a, b)
            for a in range(1, alg.size) for b in range(1, alg.size)
            if alg.g(a, b) == top
        ]

    @staticmethod
    def product_algebra(left, right):
        """
        Direct product; atoms of right are shifted by left.m and operators act componentwise.

        Returns:
            PSAlgebra with split = left.m
        """
        m = left.m + right.m
        if m > MAX_ATOMS:
            raise ValueError(f"Product needs {m} atoms, more than the cap of {MAX_ATOMS}")
        shift = left.m
        right_top = right.top << shift
        left_top = left.top
        f_atoms = []
        g_atoms = []
        for p in range(m):
            for q in range(m):
                if p < shift and q < shift:
                    # (f_L(p,q), f_R(0,0)) and (g_L(p,q), g_R(0,0))
                    f_atoms.append(left.f_atom(p, q))
                    g_atoms.append(left.g_atom(p, q) | right_top)
                elif p >= shift and q >= shift:
                    f_atoms.append(right.f_atom(p - shift, q - shift) << shift)
                    g_atoms.append((right.g_atom(p - shift, q - shift) << shift) | left_top)
                else:
                    # one argument is zero in each component
                    f_atoms.append(0)
                    g_atoms.append(left_top | right_top)
        return PSAlgebra(m, tuple(f_atoms), tuple(g_atoms), split=shift)

    @staticmethod
    def representability_obstruction(alg):
        """
        Least (a, c) with a != 0, g(a,a) = a, 0 != c <= f(a,c) and g(a,c) = 0.

        A certificate proves alg is not a subalgebra of the complex algebra of any b-frame.

        Returns:
            ObstructionCertificate or None
        """
        for a in range(1, alg.size):
            if alg.g(a, a) != a:
                continue
            for c in range(1, alg.size):
                if _leq(c, alg.f(a, c)) and alg.g(a, c) == 0:
                    cert = ObstructionCertificate(a, c)
                    if not cert.holds_on(alg):
                        raise AssertionError(f"Obstruction certificate ({a}, {c}) does not re-verify")
                    return cert
        return None

    @staticmethod
    def obstruction_report(alg):
        cert = BalgService.representability_obstruction(alg)
        if cert is None:
            return AxiomReport.ok(CheckTag.OBSTRUCTION_FREE)
        return AxiomReport.failed(CheckTag.OBSTRUCTION_FREE, (cert.a, cert.c), note=', '.join(cert.facts))
