from collections.abc import Mapping
from itertools import permutations

from betw.models import (
    AxiomReport, MAX_ATOMS, OperatorLaw, PSAlgebra, Ultrafilter,
    expand_join, expand_meet,
)


class AlgebraService:
    """Service for finite Boolean algebras with a possibility operator f and a sufficiency operator g"""

    @staticmethod
    def _atom_entries(m, entries, name):
        """Flatten an atom table given as {(p, q): mask} or as m rows of m masks"""
        if isinstance(entries, Mapping):
            flat = []
            for p in range(m):
                for q in range(m):
                    if (p, q) not in entries:
                        raise ValueError(f"Table {name} is missing the entry for atoms ({p}, {q})")
                    flat.append(entries[(p, q)])
            extra = set(entries) - {(p, q) for p in range(m) for q in range(m)}
            if extra:
                raise ValueError(f"Table {name} has entries outside {m} atoms: {sorted(extra)}")
            return tuple(flat)

        rows = list(entries)
        if len(rows) == m * m and all(isinstance(r, int) for r in rows):
            return tuple(rows)
        if len(rows) != m or any(len(row) != m for row in rows):
            raise ValueError(f"Table {name} must have {m} rows of {m} entries")
        return tuple(mask for row in rows for mask in row)

    @staticmethod
    def make_algebra(m, f_entries, g_entries):
        """
        Build a PS-algebra from its atom tables.

        Args:
            m: Atom count (1..5)
            f_entries: f on atom pairs, {(p, q): mask} or nested rows
            g_entries: g on atom pairs, same shape

        Returns:
            PSAlgebra whose expanded tables pass validate_operators
        """
        if not isinstance(m, int) or not 1 <= m <= MAX_ATOMS:
            raise ValueError(f"m must be between 1 and {MAX_ATOMS}, got {m}")
        f_atoms = AlgebraService._atom_entries(m, f_entries, 'f')
        g_atoms = AlgebraService._atom_entries(m, g_entries, 'g')
        alg = PSAlgebra(m, f_atoms, g_atoms)

        failed = [r for r in AlgebraService.validate_operators(m, alg.f_table, alg.g_table) if not r.holds]
        if failed:
            raise AssertionError(f"Expanded tables break operator laws: {failed}")
        return alg

    @staticmethod
    def expand(m, f_atoms, g_atoms):
        """Full 2^m x 2^m tables (f, g) determined by the atom tables"""
        return expand_join(m, tuple(f_atoms)), expand_meet(m, tuple(g_atoms))

    @staticmethod
    def validate_operators(m, f_table, g_table):
        """
        Check the possibility and sufficiency laws on full tables.

        Args:
            m: Atom count
            f_table: f_table[x][y] for all element masks
            g_table: g_table[x][y] for all element masks

        Returns:
            list of AxiomReport, one per OperatorLaw
        """
        size = 1 << m
        top = size - 1
        elements = range(size)
        if len(f_table) != size or len(g_table) != size:
            raise ValueError(f"Tables must have {size} rows for {m} atoms")

        def normal(table, unit, law):
            for x in elements:
                for y in elements:
                    if (x == 0 or y == 0) and table[x][y] != unit:
                        return AxiomReport.failed(law, (x, y))
            return AxiomReport.ok(law)

        def additive(table, combine, law, first):
            for x in elements:
                for x2 in elements:
                    for y in elements:
                        if first:
                            lhs = table[x | x2][y]
                            rhs = combine(table[x][y], table[x2][y])
                        else:
                            lhs = table[y][x | x2]
                            rhs = combine(table[y][x], table[y][x2])
                        if lhs != rhs:
                            return AxiomReport.failed(law, (x, x2, y) if first else (y, x, x2))
            return AxiomReport.ok(law)

        join = lambda a, b: a | b
        meet = lambda a, b: a & b
        return [
            normal(f_table, 0, OperatorLaw.P_NORMALITY),
            additive(f_table, join, OperatorLaw.P_ADDITIVITY_1, True),
            additive(f_table, join, OperatorLaw.P_ADDITIVITY_2, False),
            normal(g_table, top, OperatorLaw.S_CONORMALITY),
            additive(g_table, meet, OperatorLaw.S_COADDITIVITY_1, True),
            additive(g_table, meet, OperatorLaw.S_COADDITIVITY_2, False),
        ]

    @staticmethod
    def ultrafilters(alg):
        """The m principal ultrafilters, one per atom"""
        return [Ultrafilter(p) for p in range(alg.m)]

    @staticmethod
    def permute_mask(mask, perm):
        """Image of an element under the atom permutation p -> perm[p]"""
        out = 0
        for p, image in enumerate(perm):
            if (mask >> p) & 1:
                out |= 1 << image
        return out

    @staticmethod
    def permute(alg, perm):
        """Isomorphic copy of alg with atom p renamed to perm[p]"""
        m = alg.m
        f_atoms = [0] * (m * m)
        g_atoms = [0] * (m * m)
        for p in range(m):
            for q in range(m):
                target = perm[p] * m + perm[q]
                f_atoms[target] = AlgebraService.permute_mask(alg.f_atom(p, q), perm)
                g_atoms[target] = AlgebraService.permute_mask(alg.g_atom(p, q), perm)
        return PSAlgebra(m, tuple(f_atoms), tuple(g_atoms))

    @staticmethod
    def canonical_form(alg):
        """Least (f_atoms, g_atoms) over all atom permutations"""
        return min(
            (permuted.f_atoms, permuted.g_atoms)
            for permuted in (AlgebraService.permute(alg, perm) for perm in permutations(range(alg.m)))
        )

    @staticmethod
    def isomorphic(left, right):
        if left.m != right.m:
            return False
        return AlgebraService.canonical_form(left) == AlgebraService.canonical_form(right)
