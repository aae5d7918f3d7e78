"""Bounded enumeration of frames and algebras, separating models and representability search.

Frames are enumerated as models of the clause form of the satisfied axioms, so the
order is lexicographic in the triple vector (triple 0 first, absent before present).
Algebras are enumerated in two stages: f atom tables first, filtered by the axioms
that only mention f, then g atom tables for each surviving f.
"""
import random
from dataclasses import dataclass, field
from itertools import permutations, product
from multiprocessing import Pool

from betw.models import (
    AlgebraAxiom, EmbeddingWitness, Frame, FrameAxiom, MIA_TAG, PSAlgebra, RepresentabilityResult,
    SearchResult, SearchSpec, SearchStatus, expand_join, expand_meet,
)
from betw.services.algebra_service import AlgebraService
from betw.services.balg_service import BalgService, F_ONLY_AXIOMS
from betw.services.canonical_service import CanonicalService
from betw.services.complex_service import ComplexService
from betw.services.frame_service import FrameService
from betw.utils.clauses import ClauseEnumerator, prefix_assumptions, satisfies
from betw.utils.log import get_logger

FRAME_EXHAUSTIVE_MAX = 3
FRAME_BUDGET_MAX = 4
ALGEBRA_EXHAUSTIVE_MAX = 2
ALGEBRA_BUDGET_MAX = 3
EMBED_MAX_POINTS = 6
PREFIX_WIDTH = 4

B_FRAME_AXIOMS = (FrameAxiom.BT0, FrameAxiom.BT1, FrameAxiom.BT2, FrameAxiom.BT3)


@dataclass
class _ScanOutcome:
    """Partial result of one chunk of an enumeration"""
    count: int = 0
    models: list = field(default_factory=list)
    classes: dict = field(default_factory=dict)
    examined: int = 0
    budget_hit: bool = False

    def accept(self, model, key, keep):
        if key is not None:
            self.classes.setdefault(key, model)
            return
        self.count += 1
        if keep is None or len(self.models) < keep:
            self.models.append(model)


def _merge(outcomes, limit, modulo_iso, first_only):
    result = SearchResult()
    classes = {}
    for outcome in outcomes:
        result.examined += outcome.examined
        if outcome.budget_hit:
            result.status = SearchStatus.BUDGET
        if modulo_iso:
            for key, model in outcome.classes.items():
                classes.setdefault(key, model)
        else:
            result.count += outcome.count
            result.models.extend(outcome.models)
        if first_only and (outcome.count or outcome.classes):
            # later chunks come after this one in enumeration order
            break
    if modulo_iso:
        result.count = len(classes)
        result.models = list(classes.values())
    if first_only:
        result.models = result.models[:1]
        result.count = len(result.models)
        if result.models:
            result.status = SearchStatus.FOUND
    if limit is not None:
        result.models = result.models[:limit]
    return result


def _ordered(tags, family):
    return [tag for tag in family if tag in tags]


# frames

def canonical_frame_form(frame):
    """Least triple vector over all point permutations"""
    n = frame.n
    triples = list(frame.triples())
    best = None
    for perm in permutations(range(n)):
        bits = 0
        for i, j, k in triples:
            bits |= 1 << (perm[i] * n * n + perm[j] * n + perm[k])
        if best is None or bits < best:
            best = bits
    return Frame(n, best)


def _frame_clauses(n, satisfy):
    clauses = []
    for axiom in _ordered(satisfy, FrameAxiom):
        clauses.extend(FrameService.axiom_clauses(n, axiom))
    return clauses


def _frame_accepted(frame, satisfy, violate):
    return (
        all(FrameService.holds(frame, axiom) for axiom in satisfy)
        and not any(FrameService.holds(frame, axiom) for axiom in violate)
    )


def _scan_frames(n, satisfy, violate, assumptions, budget, keep, modulo_iso, first_only):
    """Worker: enumerate one prefix chunk of clause models"""
    enumerator = ClauseEnumerator(n ** 3, _frame_clauses(n, satisfy))
    outcome = _ScanOutcome()
    for bits in enumerator.models(assumptions):
        if budget is not None and outcome.examined >= budget:
            outcome.budget_hit = True
            break
        outcome.examined += 1
        frame = Frame(n, bits)
        if any(FrameService.holds(frame, axiom) for axiom in violate):
            continue
        key = canonical_frame_form(frame).bits if modulo_iso else None
        outcome.accept(frame, key, keep)
        if first_only:
            break
    return outcome


def _sample_frames(n, satisfy, violate, budget, seed, modulo_iso):
    rng = random.Random(seed)
    clauses = _frame_clauses(n, satisfy)
    outcome = _ScanOutcome(budget_hit=True)
    seen = set()
    for _ in range(budget):
        outcome.examined += 1
        bits = rng.getrandbits(n ** 3)
        if bits in seen or not satisfies(bits, clauses):
            continue
        seen.add(bits)
        frame = Frame(n, bits)
        if any(FrameService.holds(frame, axiom) for axiom in violate):
            continue
        outcome.accept(frame, canonical_frame_form(frame).bits if modulo_iso else None, None)
    outcome.models.sort(key=lambda f: f.bits)
    return outcome


# algebras

def _f_domains(m, satisfy):
    """Free f entries (upper triangle when f is symmetric) and their atom-local value ranges"""
    symmetric = AlgebraAxiom.ABT1f in satisfy
    entries = [(p, q) for p in range(m) for q in range(m) if not (symmetric and q < p)]
    domains = []
    for p, q in entries:
        values = []
        for v in range(1 << m):
            if AlgebraAxiom.ABT0 in satisfy and p == q and not (v >> p) & 1:
                continue
            if AlgebraAxiom.ABT2s in satisfy:
                if not (v >> p) & 1:
                    continue
                if symmetric and not (v >> q) & 1:
                    continue
            values.append(v)
        domains.append(values)
    return entries, domains


def _g_domains(m, satisfy, f_atoms):
    symmetric = AlgebraAxiom.ABT1g in satisfy
    entries = [(p, q) for p in range(m) for q in range(m) if not (symmetric and q < p)]
    domains = []
    for p, q in entries:
        f_pq = f_atoms[p * m + q]
        if MIA_TAG in satisfy:
            # Q_f = S_g on atoms means the two tables coincide
            domains.append([f_pq])
            continue
        values = []
        for v in range(1 << m):
            if AlgebraAxiom.wMIA in satisfy:
                if v & ~f_pq:
                    continue
                if symmetric and v & ~f_atoms[q * m + p]:
                    continue
            if p == q and AlgebraAxiom.FiveForD in satisfy and v & ~f_pq:
                continue
            if p == q and AlgebraAxiom.ABTW in satisfy and v & ~(1 << p):
                continue
            values.append(v)
        domains.append(values)
    return entries, domains


def _fill(m, entries, values, symmetric):
    """Atom table from the free entries; the lower triangle mirrors the upper one when symmetric"""
    table = [0] * (m * m)
    for (p, q), v in zip(entries, values):
        table[p * m + q] = v
        if symmetric:
            table[q * m + p] = v
    return tuple(table)


class _AlgebraFilter:
    """Staged axiom filter shared by the scanning and sampling paths"""

    def __init__(self, m, satisfy, violate):
        self.m = m
        self.satisfy = satisfy
        self.violate = violate
        self.f_satisfy = _ordered(satisfy & F_ONLY_AXIOMS, AlgebraAxiom)
        self.f_violate = _ordered(violate & F_ONLY_AXIOMS, AlgebraAxiom)
        self.g_satisfy = _ordered(satisfy - F_ONLY_AXIOMS, AlgebraAxiom)
        self.g_violate = _ordered(violate - F_ONLY_AXIOMS, AlgebraAxiom)

    def f_passes(self, f_table):
        m = self.m
        return (
            all(BalgService.check_tables(m, f_table, None, a).holds for a in self.f_satisfy)
            and not any(BalgService.check_tables(m, f_table, None, a).holds for a in self.f_violate)
        )

    def g_passes(self, f_atoms, g_atoms, f_table, g_table):
        m = self.m
        mia = f_atoms == g_atoms
        if MIA_TAG in self.satisfy and not mia:
            return False
        if MIA_TAG in self.violate and mia:
            return False
        return (
            all(BalgService.check_tables(m, f_table, g_table, a).holds for a in self.g_satisfy)
            and not any(BalgService.check_tables(m, f_table, g_table, a).holds for a in self.g_violate)
        )


def _scan_algebras(m, satisfy, violate, first_value, budget, keep, modulo_iso, first_only):
    """Worker: enumerate all algebras whose first free f entry equals first_value (None = all)"""
    check = _AlgebraFilter(m, satisfy, violate)
    f_entries, f_domains = _f_domains(m, satisfy)
    if first_value is not None:
        f_domains = [[first_value]] + f_domains[1:]
    f_symmetric = AlgebraAxiom.ABT1f in satisfy
    g_symmetric = AlgebraAxiom.ABT1g in satisfy
    outcome = _ScanOutcome()

    for f_values in product(*f_domains):
        if budget is not None and outcome.examined >= budget:
            outcome.budget_hit = True
            break
        f_atoms = _fill(m, f_entries, f_values, f_symmetric)
        f_table = expand_join(m, f_atoms)
        if not check.f_passes(f_table):
            outcome.examined += 1
            continue

        g_entries, g_domains = _g_domains(m, satisfy, f_atoms)
        for g_values in product(*g_domains):
            if budget is not None and outcome.examined >= budget:
                outcome.budget_hit = True
                break
            outcome.examined += 1
            g_atoms = _fill(m, g_entries, g_values, g_symmetric)
            g_table = expand_meet(m, g_atoms)
            if not check.g_passes(f_atoms, g_atoms, f_table, g_table):
                continue
            alg = PSAlgebra(m, f_atoms, g_atoms)
            key = AlgebraService.canonical_form(alg) if modulo_iso else None
            outcome.accept(alg, key, keep)
            if first_only:
                return outcome
        if outcome.budget_hit:
            break
    return outcome


def _sample_algebras(m, satisfy, violate, budget, seed, modulo_iso):
    rng = random.Random(seed)
    check = _AlgebraFilter(m, satisfy, violate)
    f_entries, f_domains = _f_domains(m, satisfy)
    outcome = _ScanOutcome(budget_hit=True)
    seen = set()
    for _ in range(budget):
        outcome.examined += 1
        f_values = [rng.choice(d) for d in f_domains] if all(f_domains) else None
        if f_values is None:
            break
        f_atoms = _fill(m, f_entries, f_values, AlgebraAxiom.ABT1f in satisfy)
        g_entries, g_domains = _g_domains(m, satisfy, f_atoms)
        if not all(g_domains):
            continue
        g_values = [rng.choice(d) for d in g_domains]
        g_atoms = _fill(m, g_entries, g_values, AlgebraAxiom.ABT1g in satisfy)
        if (f_atoms, g_atoms) in seen:
            continue
        seen.add((f_atoms, g_atoms))
        f_table = expand_join(m, f_atoms)
        if not check.f_passes(f_table):
            continue
        if not check.g_passes(f_atoms, g_atoms, f_table, expand_meet(m, g_atoms)):
            continue
        alg = PSAlgebra(m, f_atoms, g_atoms)
        outcome.accept(alg, AlgebraService.canonical_form(alg) if modulo_iso else None, None)
    outcome.models.sort(key=lambda a: (a.f_atoms, a.g_atoms))
    return outcome


def _algebra_accepted(alg, satisfy, violate):
    def holds(tag):
        if tag == MIA_TAG:
            return CanonicalService.is_mia(alg)
        return BalgService.holds(alg, tag)

    return all(holds(tag) for tag in satisfy) and not any(holds(tag) for tag in violate)


# representability

def compositions(n, parts):
    """Ordered ways to write n as a sum of parts positive block sizes, in lexicographic order"""
    if parts == 1:
        if n >= 1:
            yield (n,)
        return
    for first in range(1, n - parts + 2):
        for rest in compositions(n - first, parts - 1):
            yield (first,) + rest


def _blocks(sizes):
    blocks = []
    start = 0
    for size in sizes:
        blocks.append(((1 << size) - 1) << start)
        start += size
    return tuple(blocks)


def _embedding_clauses(alg, n, blocks):
    """b-frame clauses plus the constraints i(f(p,q)) = poss(i(p), i(q)) and i(g(p,q)) = suff(i(p), i(q))"""
    clauses = []
    for axiom in B_FRAME_AXIOMS:
        clauses.extend(FrameService.axiom_clauses(n, axiom))

    def image(x):
        points = 0
        for p, block in enumerate(blocks):
            if (x >> p) & 1:
                points |= block
        return points

    m = alg.m
    members = [[x for x in range(n) if (block >> x) & 1] for block in blocks]
    for p in range(m):
        for q in range(m):
            f_img = image(alg.f_atom(p, q))
            g_img = image(alg.g_atom(p, q))
            for u in range(n):
                group = [x * n * n + u * n + y + 1 for x in members[p] for y in members[q]]
                if (f_img >> u) & 1:
                    clauses.append(group)
                else:
                    clauses.extend([-v] for v in group)
                if (g_img >> u) & 1:
                    clauses.extend([v] for v in group)
                else:
                    clauses.append([-v for v in group])
    return clauses


def _embed_composition(alg, n, sizes):
    """Worker: first b-frame realising alg with the given block sizes, or None"""
    blocks = _blocks(sizes)
    enumerator = ClauseEnumerator(n ** 3, _embedding_clauses(alg, n, blocks))
    bits = enumerator.first_model()
    if bits is None:
        return None
    return EmbeddingWitness(frame=Frame(n, bits), atom_images=blocks)


def _verify_embedding(alg, witness):
    frame = witness.frame
    if not FrameService.is_b_frame(frame):
        return False
    image = witness.image
    for x in alg.elements():
        for y in alg.elements():
            if image(alg.f(x, y)) != ComplexService.poss(frame, image(x), image(y)):
                return False
            if image(alg.g(x, y)) != ComplexService.suff(frame, image(x), image(y)):
                return False
    return image(alg.top) == frame.full


class SearchService:
    """Service for bounded model search over frames and PS-algebras"""

    @staticmethod
    def enumerate_frames(spec, threads=1, first_only=False):
        """
        Enumerate frames on spec.size points satisfying spec.satisfy and violating spec.violate.

        Args:
            spec: SearchSpec with kind 'frame'
            threads: Worker processes for unbudgeted runs
            first_only: Stop at the first accepted frame

        Returns:
            SearchResult; count is exact unless status is BUDGET
        """
        if spec.kind != 'frame':
            raise ValueError(f"Expected a frame search spec, got kind '{spec.kind}'")
        n = spec.size
        if n > FRAME_BUDGET_MAX:
            raise ValueError(f"Frame search supports at most {FRAME_BUDGET_MAX} points, got {n}")
        if n > FRAME_EXHAUSTIVE_MAX and spec.budget is None:
            raise ValueError(f"Frame search on {n} points needs a budget (exhaustive up to {FRAME_EXHAUSTIVE_MAX})")
        satisfy = frozenset(spec.satisfy)
        violate = frozenset(spec.violate)
        keep = 1 if first_only else spec.limit
        log = get_logger()

        if spec.sample:
            outcomes = [_sample_frames(n, satisfy, violate, spec.budget, spec.seed, spec.modulo_iso)]
        elif spec.budget is not None or threads <= 1:
            outcomes = [_scan_frames(n, satisfy, violate, (), spec.budget, keep, spec.modulo_iso, first_only)]
        else:
            chunks = prefix_assumptions(n ** 3, PREFIX_WIDTH)
            log.info(f"Enumerating frames on {n} points in {len(chunks)} chunks with {threads} workers")
            args = [(n, satisfy, violate, chunk, None, keep, spec.modulo_iso, first_only) for chunk in chunks]
            with Pool(threads) as pool:
                outcomes = pool.starmap(_scan_frames, args)

        result = _merge(outcomes, spec.limit, spec.modulo_iso, first_only)
        for frame in result.models:
            if not _frame_accepted(frame, satisfy, violate):
                raise AssertionError(f"Search returned a frame that does not meet the request: {frame}")
        if result.status is SearchStatus.BUDGET:
            log.warning(f"Frame search on {n} points hit the budget after {result.examined} candidates")
        log.info(f"Frame search on {n} points: {result.count} accepted, {result.examined} examined")
        return result

    @staticmethod
    def enumerate_algebras(spec, threads=1, first_only=False):
        """
        Enumerate PS-algebras on spec.size atoms; f tables first, then g tables per surviving f.

        Returns:
            SearchResult; count is exact unless status is BUDGET
        """
        if spec.kind != 'algebra':
            raise ValueError(f"Expected an algebra search spec, got kind '{spec.kind}'")
        m = spec.size
        if m > ALGEBRA_BUDGET_MAX:
            raise ValueError(f"Algebra search supports at most {ALGEBRA_BUDGET_MAX} atoms, got {m}")
        if m > ALGEBRA_EXHAUSTIVE_MAX and spec.budget is None:
            raise ValueError(f"Algebra search on {m} atoms needs a budget (exhaustive up to {ALGEBRA_EXHAUSTIVE_MAX})")
        satisfy = frozenset(spec.satisfy)
        violate = frozenset(spec.violate)
        keep = 1 if first_only else spec.limit
        log = get_logger()

        if spec.sample:
            outcomes = [_sample_algebras(m, satisfy, violate, spec.budget, spec.seed, spec.modulo_iso)]
        elif spec.budget is not None or threads <= 1:
            outcomes = [_scan_algebras(m, satisfy, violate, None, spec.budget, keep, spec.modulo_iso, first_only)]
        else:
            _, f_domains = _f_domains(m, satisfy)
            args = [(m, satisfy, violate, v, None, keep, spec.modulo_iso, first_only) for v in f_domains[0]]
            log.info(f"Enumerating algebras on {m} atoms in {len(args)} chunks with {threads} workers")
            with Pool(threads) as pool:
                outcomes = pool.starmap(_scan_algebras, args)

        result = _merge(outcomes, spec.limit, spec.modulo_iso, first_only)
        for alg in result.models:
            if not _algebra_accepted(alg, satisfy, violate):
                raise AssertionError(f"Search returned an algebra that does not meet the request: {alg}")
        if result.status is SearchStatus.BUDGET:
            log.warning(f"Algebra search on {m} atoms hit the budget after {result.examined} candidates")
        log.info(f"Algebra search on {m} atoms: {result.count} accepted, {result.examined} examined")
        return result

    @staticmethod
    def enumerate(spec, threads=1, first_only=False):
        if spec.kind == 'frame':
            return SearchService.enumerate_frames(spec, threads, first_only)
        return SearchService.enumerate_algebras(spec, threads, first_only)

    @staticmethod
    def find_separating_model(spec, threads=1):
        """
        First model in enumeration order that satisfies spec.satisfy and violates every tag in spec.violate.

        Returns:
            SearchResult with status FOUND (model in result.first), EXHAUSTED or BUDGET
        """
        return SearchService.enumerate(spec, threads, first_only=True)

    @staticmethod
    def independence_scan(axioms, kind, max_size, budget=None, threads=1):
        """
        For each axiom, look for a model of the other axioms that violates it, size by size.

        Sizes above the exhaustive cap are only scanned when a budget is given.

        Returns:
            dict axiom -> (size, SearchResult); size is None when nothing was found
        """
        exhaustive_cap = FRAME_EXHAUSTIVE_MAX if kind == 'frame' else ALGEBRA_EXHAUSTIVE_MAX
        budget_cap = FRAME_BUDGET_MAX if kind == 'frame' else ALGEBRA_BUDGET_MAX
        log = get_logger()
        results = {}
        for axiom in axioms:
            others = frozenset(a for a in axioms if a != axiom)
            outcome = (None, None)
            for size in range(1, min(max_size, budget_cap) + 1):
                if size > exhaustive_cap and budget is None:
                    break
                spec = SearchSpec(
                    kind=kind, size=size, satisfy=others, violate=frozenset({axiom}),
                    budget=budget if size > exhaustive_cap else None,
                )
                result = SearchService.find_separating_model(spec, threads)
                outcome = (None, result)
                if result.status is SearchStatus.FOUND:
                    outcome = (size, result)
                    break
            log.info(f"Independence of {getattr(axiom, 'value', axiom)}: {'found' if outcome[0] else 'not found'}")
            results[axiom] = outcome
        return results

    @staticmethod
    def representability_search(alg, max_points, threads=1):
        """
        Look for a b-frame whose complex algebra contains alg, trying frames of m..max_points points.

        Atom images are contiguous blocks; for each block-size composition the b-frame is
        found by clause propagation over its triples.

        Returns:
            RepresentabilityResult; witness is None when the bound is exhausted
        """
        if not isinstance(max_points, int) or not 1 <= max_points <= EMBED_MAX_POINTS:
            raise ValueError(f"max_points must be between 1 and {EMBED_MAX_POINTS}, got {max_points}")
        log = get_logger()
        tried = 0
        for n in range(alg.m, max_points + 1):
            sizes_list = list(compositions(n, alg.m))
            tried += len(sizes_list)
            log.info(f"Representability on {n} points: {len(sizes_list)} block compositions")
            if threads > 1 and len(sizes_list) > 1:
                with Pool(min(threads, len(sizes_list))) as pool:
                    witnesses = pool.starmap(_embed_composition, [(alg, n, s) for s in sizes_list])
            else:
                witnesses = []
                for sizes in sizes_list:
                    witnesses.append(_embed_composition(alg, n, sizes))
                    if witnesses[-1] is not None:
                        break
            for witness in witnesses:
                if witness is None:
                    continue
                if not _verify_embedding(alg, witness):
                    raise AssertionError(f"Embedding witness on {n} points does not reproduce the operators")
                return RepresentabilityResult(witness=witness, max_points=max_points, compositions_tried=tried)
        return RepresentabilityResult(witness=None, max_points=max_points, compositions_tried=tried)
