"""Value types shared by the services: frames, algebras, reports and search specs"""
from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property
from typing import Optional, Union

MAX_POINTS = 16
MAX_ATOMS = 5

# Pseudo-tag accepted by the algebra search: Q_f = S_g on the canonical frame
MIA_TAG = 'MIA'


class FrameAxiom(Enum):
    """Frame-level betweenness axioms"""
    BT0 = 'BT0'
    BT1 = 'BT1'
    BT2 = 'BT2'
    BT3 = 'BT3'
    BTW = 'BTW'
    BT2s = 'BT2s'
    C = 'C'

    @classmethod
    def parse(cls, name):
        return _parse_tag(cls, name)


class AlgebraAxiom(Enum):
    """Betweenness-algebra axioms on a PS-algebra"""
    ABT0 = 'ABT0'
    ABT1f = 'ABT1f'
    ABT1g = 'ABT1g'
    ABT2 = 'ABT2'
    ABT3 = 'ABT3'
    wMIA = 'wMIA'
    ABTW = 'ABTW'
    ABT2s = 'ABT2s'
    FiveForD = 'FiveForD'

    @classmethod
    def parse(cls, name):
        return _parse_tag(cls, name)


class ComplexCondition(Enum):
    """Conditions on the full complex algebra of a frame"""
    BT0c = 'BT0c'
    BT1cf = 'BT1cf'
    BT1cg = 'BT1cg'
    BT2c = 'BT2c'
    BT3c = 'BT3c'
    BTWc = 'BTWc'
    BT2sc = 'BT2sc'
    DAGc = 'DAGc'

    @classmethod
    def parse(cls, name):
        return _parse_tag(cls, name)


class CfProperty(Enum):
    """Properties of the canonical frame (Q_f, S_g)"""
    BT0Cf = 'BT0Cf'
    BT1Cf_f = 'BT1Cf_f'
    BT1Cf_g = 'BT1Cf_g'
    BT2Cf = 'BT2Cf'
    BT3Cf = 'BT3Cf'
    BT2sCf = 'BT2sCf'
    BTWCf = 'BTWCf'
    SsubQ = 'SsubQ'

    @classmethod
    def parse(cls, name):
        return _parse_tag(cls, name)


class OperatorLaw(Enum):
    """Laws of possibility (P) and sufficiency (S) operators"""
    P_NORMALITY = 'P-normality'
    P_ADDITIVITY_1 = 'P-additivity(1)'
    P_ADDITIVITY_2 = 'P-additivity(2)'
    S_CONORMALITY = 'S-co-normality'
    S_COADDITIVITY_1 = 'S-co-additivity(1)'
    S_COADDITIVITY_2 = 'S-co-additivity(2)'


class CheckTag(Enum):
    """Tags for reports that are not axioms of a closed family"""
    STRONG_ANTISYMMETRY = 'strong-antisymmetry'
    DISCRIMINATOR = 'discriminator'
    MEET_BELOW_F = 'meet-below-f'
    STONE_EMBEDDING = 'stone-embedding'
    FRAME_EMBEDDING = 'frame-embedding'
    OBSTRUCTION_FREE = 'obstruction-free'
    BOUNDED = 'bounded'
    COBOUNDED = 'cobounded'


class MorphismMode(Enum):
    BOUNDED = 'bounded'
    COBOUNDED = 'cobounded'


class FrameClass(Enum):
    STRONG = 'strong b-frame'
    BFRAME = 'b-frame'
    WEAK = 'weak b-frame'
    PS_ONLY = 'PS-frame-only'


class AlgebraClass(Enum):
    STRONG = 'strong b-algebra'
    BALGEBRA = 'b-algebra'
    WEAK = 'weak b-algebra'
    PS_ONLY = 'PS-algebra-only'


class SearchStatus(Enum):
    FOUND = 'found'
    EXHAUSTED = 'exhausted'
    BUDGET = 'budget'


def _parse_tag(enum_cls, name):
    """Look a tag up by its printed name"""
    for member in enum_cls:
        if member.value == name:
            return member
    known = ', '.join(m.value for m in enum_cls)
    raise ValueError(f"Unknown {enum_cls.__name__} tag '{name}' (expected one of: {known})")


Tag = Union[FrameAxiom, AlgebraAxiom, ComplexCondition, CfProperty, OperatorLaw, CheckTag]


@dataclass(frozen=True)
class AxiomReport:
    """Verdict of one check with the least violating tuple"""
    axiom: Tag
    holds: bool
    witness: Optional[tuple] = None
    note: Optional[str] = None

    def __post_init__(self):
        if self.holds and self.witness is not None:
            raise ValueError(f"Report for {self.axiom.value} holds but carries witness {self.witness}")
        if not self.holds and self.witness is None:
            raise ValueError(f"Report for {self.axiom.value} fails without a witness")

    @classmethod
    def ok(cls, axiom):
        return cls(axiom, True)

    @classmethod
    def failed(cls, axiom, witness, note=None):
        return cls(axiom, False, tuple(witness), note)

    def to_dict(self, command=None, count=None):
        return {
            'command': command,
            'axiom': self.axiom.value,
            'holds': self.holds,
            'witness': list(self.witness) if self.witness is not None else None,
            'count': count,
        }

    def __repr__(self):
        verdict = 'holds' if self.holds else f'fails at {self.witness}'
        return f'<AxiomReport {self.axiom.value} {verdict}>'


def _check_size(name, value, upper):
    if not isinstance(value, int) or value < 1 or value > upper:
        raise ValueError(f"{name} must be between 1 and {upper}, got {value}")


@dataclass(frozen=True)
class Frame:
    """Ternary frame on points 0..n-1; bit i*n*n + j*n + k encodes <i,j,k> (j between i and k)"""
    n: int
    bits: int = 0

    def __post_init__(self):
        _check_size('n', self.n, MAX_POINTS)
        if self.bits < 0 or self.bits >> (self.n ** 3):
            raise ValueError(f"Triple vector does not fit {self.n} points")

    @classmethod
    def from_triples(cls, n, triples):
        _check_size('n', n, MAX_POINTS)
        bits = 0
        for triple in triples:
            i, j, k = triple
            for index in (i, j, k):
                if not 0 <= index < n:
                    raise ValueError(f"Point index {index} out of range for {n} points in triple {tuple(triple)}")
            bits |= 1 << (i * n * n + j * n + k)
        return cls(n, bits)

    def index(self, i, j, k):
        return i * self.n * self.n + j * self.n + k

    def has(self, i, j, k):
        return (self.bits >> (i * self.n * self.n + j * self.n + k)) & 1 == 1

    def triples(self):
        """Yield stored triples in ascending index order"""
        n = self.n
        bits = self.bits
        while bits:
            low = bits & -bits
            t = low.bit_length() - 1
            yield (t // (n * n), (t // n) % n, t % n)
            bits ^= low

    @property
    def size(self):
        return bin(self.bits).count('1')

    @property
    def full(self):
        return (1 << self.n) - 1

    @cached_property
    def middles(self):
        """middles[x * n + y] is the point set {u : <x,u,y>}"""
        n = self.n
        table = [0] * (n * n)
        for i, j, k in self.triples():
            table[i * n + k] |= 1 << j
        return tuple(table)

    def __repr__(self):
        return f'<Frame n={self.n} triples={self.size}>'


@dataclass(frozen=True)
class BinaryRelation:
    """Binary relation on points 0..n-1; bit i*n + j encodes i R j"""
    n: int
    bits: int = 0

    def __post_init__(self):
        _check_size('n', self.n, MAX_POINTS)
        if self.bits < 0 or self.bits >> (self.n ** 2):
            raise ValueError(f"Pair vector does not fit {self.n} points")

    @classmethod
    def from_pairs(cls, n, pairs):
        _check_size('n', n, MAX_POINTS)
        bits = 0
        for i, j in pairs:
            if not (0 <= i < n and 0 <= j < n):
                raise ValueError(f"Pair ({i}, {j}) out of range for {n} points")
            bits |= 1 << (i * n + j)
        return cls(n, bits)

    def has(self, i, j):
        return (self.bits >> (i * self.n + j)) & 1 == 1

    def is_reflexive(self):
        return all(self.has(i, i) for i in range(self.n))


def expand_join(m, atoms):
    """Full table of the additive normal operator with the given atom table"""
    size = 1 << m
    # rows[p][y]: join of atoms[p][q] over q in y
    rows = []
    for p in range(m):
        row = [0] * size
        for y in range(1, size):
            low = (y & -y).bit_length() - 1
            row[y] = row[y & (y - 1)] | atoms[p * m + low]
        rows.append(row)
    table = [[0] * size]
    for x in range(1, size):
        low = (x & -x).bit_length() - 1
        prev = table[x & (x - 1)]
        row = rows[low]
        table.append([prev[y] | row[y] for y in range(size)])
    return tuple(tuple(row) for row in table)


def expand_meet(m, atoms):
    """Full table of the co-additive co-normal operator with the given atom table"""
    size = 1 << m
    top = size - 1
    rows = []
    for p in range(m):
        row = [top] * size
        for y in range(1, size):
            low = (y & -y).bit_length() - 1
            row[y] = row[y & (y - 1)] & atoms[p * m + low]
        rows.append(row)
    table = [[top] * size]
    for x in range(1, size):
        low = (x & -x).bit_length() - 1
        prev = table[x & (x - 1)]
        row = rows[low]
        table.append([prev[y] & row[y] for y in range(size)])
    return tuple(tuple(row) for row in table)


@dataclass(frozen=True)
class PSAlgebra:
    """Finite Boolean algebra on m atoms with binary operators f and g stored on atom pairs.

    Elements are masks over the atoms; f_atoms[p * m + q] is f(p, q) for atoms p, q.
    split records the atom count of the left factor for product algebras.
    """
    m: int
    f_atoms: tuple
    g_atoms: tuple
    split: Optional[int] = None

    def __post_init__(self):
        _check_size('m', self.m, MAX_ATOMS)
        for name, table in (('f', self.f_atoms), ('g', self.g_atoms)):
            if len(table) != self.m * self.m:
                raise ValueError(f"Table {name} needs {self.m * self.m} atom entries, got {len(table)}")
            for mask in table:
                if not 0 <= mask < (1 << self.m):
                    raise ValueError(f"Table {name} entry {mask} out of range for {self.m} atoms")

    @property
    def size(self):
        return 1 << self.m

    @property
    def top(self):
        return (1 << self.m) - 1

    def elements(self):
        return range(1 << self.m)

    def f_atom(self, p, q):
        return self.f_atoms[p * self.m + q]

    def g_atom(self, p, q):
        return self.g_atoms[p * self.m + q]

    @cached_property
    def f_table(self):
        return expand_join(self.m, self.f_atoms)

    @cached_property
    def g_table(self):
        return expand_meet(self.m, self.g_atoms)

    def f(self, x, y):
        return self.f_table[x][y]

    def g(self, x, y):
        return self.g_table[x][y]

    def __repr__(self):
        return f'<PSAlgebra m={self.m} f={list(self.f_atoms)} g={list(self.g_atoms)}>'


@dataclass(frozen=True)
class Ultrafilter:
    """Principal ultrafilter generated by an atom"""
    atom: int

    def contains(self, x):
        return (x >> self.atom) & 1 == 1


@dataclass(frozen=True)
class CanonicalFrame:
    """Ultrafilters of a finite algebra with Q_f and S_g stored as frames on atom indices"""
    ultrafilters: tuple
    q: Frame
    s: Frame

    @property
    def m(self):
        return len(self.ultrafilters)


@dataclass(frozen=True)
class ObstructionCertificate:
    """Pair (a, c) proving an algebra is not a subalgebra of any b-frame complex algebra"""
    a: int
    c: int
    facts: tuple = ('a != 0', 'g(a,a) = a', '0 != c <= f(a,c)', 'g(a,c) = 0')

    def holds_on(self, alg):
        return (
            self.a != 0
            and alg.g(self.a, self.a) == self.a
            and self.c != 0
            and self.c & ~alg.f(self.a, self.c) == 0
            and alg.g(self.a, self.c) == 0
        )


@dataclass(frozen=True)
class PointMap:
    """Total map from the points of one frame to another"""
    source_n: int
    target_n: int
    mapping: tuple

    def __post_init__(self):
        if len(self.mapping) != self.source_n:
            raise ValueError(f"Map must send all {self.source_n} source points, got {len(self.mapping)}")
        for point in self.mapping:
            if not 0 <= point < self.target_n:
                raise ValueError(f"Image {point} out of range for {self.target_n} target points")

    @property
    def is_surjective(self):
        return set(self.mapping) == set(range(self.target_n))

    def __call__(self, point):
        return self.mapping[point]


SearchTagT = Union[FrameAxiom, AlgebraAxiom, str]


@dataclass(frozen=True)
class SearchSpec:
    """What to enumerate: kind, size, axioms to satisfy and to violate"""
    kind: str
    size: int
    satisfy: frozenset = frozenset()
    violate: frozenset = frozenset()
    limit: Optional[int] = None
    budget: Optional[int] = None
    modulo_iso: bool = False
    sample: bool = False
    seed: int = 0

    def __post_init__(self):
        if self.kind not in ('frame', 'algebra'):
            raise ValueError(f"Search kind must be 'frame' or 'algebra', got '{self.kind}'")
        overlap = set(self.satisfy) & set(self.violate)
        if overlap:
            names = ', '.join(sorted(_tag_name(t) for t in overlap))
            raise ValueError(f"Tags both satisfied and violated: {names}")
        allowed = FrameAxiom if self.kind == 'frame' else AlgebraAxiom
        for tag in set(self.satisfy) | set(self.violate):
            if isinstance(tag, allowed):
                continue
            if self.kind == 'algebra' and tag == MIA_TAG:
                continue
            raise ValueError(f"Tag {_tag_name(tag)} does not apply to {self.kind} search")
        if self.limit is not None and self.limit < 0:
            raise ValueError(f"limit must be non-negative, got {self.limit}")
        if self.budget is not None and self.budget < 1:
            raise ValueError(f"budget must be positive, got {self.budget}")
        if self.sample and self.budget is None:
            raise ValueError("Sampling needs a budget")


def _tag_name(tag):
    return tag.value if isinstance(tag, Enum) else str(tag)


@dataclass
class SearchResult:
    """Outcome of an enumeration: exact count unless the budget ran out"""
    count: int = 0
    models: list = field(default_factory=list)
    status: SearchStatus = SearchStatus.EXHAUSTED
    examined: int = 0

    @property
    def first(self):
        return self.models[0] if self.models else None


@dataclass(frozen=True)
class EmbeddingWitness:
    """b-frame plus the point blocks the algebra's atoms are sent to"""
    frame: Frame
    atom_images: tuple

    def image(self, x):
        """Point set the element x is sent to"""
        points = 0
        for p, block in enumerate(self.atom_images):
            if (x >> p) & 1:
                points |= block
        return points


@dataclass(frozen=True)
class RepresentabilityResult:
    witness: Optional[EmbeddingWitness]
    max_points: int
    compositions_tried: int = 0

    @property
    def found(self):
        return self.witness is not None


@dataclass(frozen=True)
class ClosureResult:
    frame: Frame
    consistent: bool


@dataclass(frozen=True)
class SubalgebraResult:
    """Carrier of a generated subalgebra of a complex algebra and its induced algebra"""
    carrier: tuple
    atoms: tuple
    is_full_powerset_of_carrier_atoms: bool
    algebra: Optional[PSAlgebra]
    f_values: dict = field(default_factory=dict)
    g_values: dict = field(default_factory=dict)


@dataclass(frozen=True)
class CanonicalExtension:
    ext: PSAlgebra
    stone: tuple


@dataclass(frozen=True)
class GoldenResult:
    """Outcome of one reference check of the golden suite"""
    name: str
    passed: bool
    detail: str = ''
