"""Ordered model enumeration for small clause sets.

Variables are 1..num_vars, literals are signed ints (DIMACS style). Models are
returned as int bit vectors with bit v-1 set when variable v is true. Decisions
are taken on the lowest undecided variable, False before True, with the SAT
solver pruning every branch that has no model; models therefore come out in
lexicographic order of (bit 0, bit 1, ...).
"""
from pysat.solvers import Solver

SOLVER_NAME = 'minisat22'


class ClauseEnumerator:
    """Lexicographic model enumeration on top of an incremental SAT solver"""

    def __init__(self, num_vars, clauses, solver_name=SOLVER_NAME):
        self.num_vars = num_vars
        self.solver_name = solver_name
        self.clauses = [list(c) for c in clauses]
        self.trivially_unsat = any(not c for c in self.clauses)
        for clause in self.clauses:
            for lit in clause:
                if not lit or not 1 <= abs(lit) <= num_vars:
                    raise ValueError(f"Literal {lit} out of range for {num_vars} variables")

    def _solver(self):
        solver = Solver(name=self.solver_name, bootstrap_with=self.clauses)
        # every variable exists in the solver even when no clause mentions it
        for var in range(1, self.num_vars + 1):
            solver.add_clause([var, -var])
        return solver

    @staticmethod
    def _bits(path):
        bits = 0
        for lit in path:
            if lit > 0:
                bits |= 1 << (lit - 1)
        return bits

    def _search(self, solver, path, fixed, var):
        while var <= self.num_vars and var in fixed:
            var += 1
        if var > self.num_vars:
            yield self._bits(path)
            return
        for lit in (-var, var):
            path.append(lit)
            if solver.solve(assumptions=path):
                yield from self._search(solver, path, fixed, var + 1)
            path.pop()

    def models(self, assumptions=()):
        """Yield every model extending the assumption literals, in lexicographic order"""
        if self.trivially_unsat:
            return
        path = list(assumptions)
        fixed = {abs(lit) for lit in path}
        with self._solver() as solver:
            if solver.solve(assumptions=path):
                yield from self._search(solver, path, fixed, 1)

    def first_model(self, assumptions=()):
        return next(iter(self.models(assumptions)), None)


def prefix_assumptions(num_vars, width):
    """Assumption lists fixing variables 1..width, in lexicographic order"""
    width = min(width, num_vars)
    chunks = []
    for k in range(1 << width):
        # variable 1 is the most significant decision
        chunks.append([(v + 1) if (k >> (width - 1 - v)) & 1 else -(v + 1) for v in range(width)])
    return chunks


def satisfies(bits, clauses):
    """Check a bit-vector assignment against a clause list"""
    for clause in clauses:
        if not any(((bits >> (abs(lit) - 1)) & 1) == (1 if lit > 0 else 0) for lit in clause):
            return False
    return True
