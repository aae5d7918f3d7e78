"""Line-oriented text formats for frames and PS-algebras (see docs/format.md)"""
from betw.models import Frame, MAX_ATOMS, MAX_POINTS, PSAlgebra


def _content_lines(text):
    """Yield (line number, fields) for non-blank lines with comments stripped"""
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split('#', 1)[0].strip()
        if line:
            yield number, line.split()


def _int_field(value, number, what):
    try:
        return int(value)
    except ValueError:
        raise ValueError(f"Line {number}: {what} must be a decimal integer, got '{value}'")


def _header(lines, keyword, upper):
    try:
        number, fields = next(lines)
    except StopIteration:
        raise ValueError(f"Empty input: expected a '{keyword} <size>' header")
    if len(fields) != 2 or fields[0] != keyword:
        raise ValueError(f"Line {number}: expected '{keyword} <size>', got '{' '.join(fields)}'")
    size = _int_field(fields[1], number, 'size')
    if not 1 <= size <= upper:
        raise ValueError(f"Line {number}: size must be between 1 and {upper}, got {size}")
    return size


class FormatService:
    """Service for reading and writing the frame and algebra text formats"""

    @staticmethod
    def parse_frame(text):
        """
        Parse 'frame <n>' followed by 't <i> <j> <k>' lines.

        Duplicate triples are accepted once.

        Returns:
            Frame
        """
        lines = _content_lines(text)
        n = _header(lines, 'frame', MAX_POINTS)
        bits = 0
        for number, fields in lines:
            if len(fields) != 4 or fields[0] != 't':
                raise ValueError(f"Line {number}: expected 't <i> <j> <k>', got '{' '.join(fields)}'")
            i, j, k = (_int_field(v, number, 'point') for v in fields[1:])
            for point in (i, j, k):
                if not 0 <= point < n:
                    raise ValueError(f"Line {number}: point {point} out of range for {n} points")
            bits |= 1 << (i * n * n + j * n + k)
        return Frame(n, bits)

    @staticmethod
    def format_frame(frame, header='frame'):
        lines = [f'{header} {frame.n}']
        lines.extend(f't {i} {j} {k}' for i, j, k in frame.triples())
        return '\n'.join(lines) + '\n'

    @staticmethod
    def parse_algebra(text):
        """
        Parse 'psalg <m>' followed by exactly m*m 'f <p> <q> <mask>' and m*m 'g <p> <q> <mask>' lines.

        Returns:
            PSAlgebra
        """
        lines = _content_lines(text)
        m = _header(lines, 'psalg', MAX_ATOMS)
        entries = {'f': {}, 'g': {}}
        for number, fields in lines:
            if len(fields) != 4 or fields[0] not in entries:
                raise ValueError(f"Line {number}: expected 'f|g <p> <q> <mask>', got '{' '.join(fields)}'")
            op = fields[0]
            p, q, mask = (_int_field(v, number, 'entry') for v in fields[1:])
            if not (0 <= p < m and 0 <= q < m):
                raise ValueError(f"Line {number}: atom pair ({p}, {q}) out of range for {m} atoms")
            if not 0 <= mask < (1 << m):
                raise ValueError(f"Line {number}: mask {mask} out of range for {m} atoms")
            if (p, q) in entries[op]:
                raise ValueError(f"Line {number}: duplicate entry {op} {p} {q}")
            entries[op][(p, q)] = mask

        for op, table in entries.items():
            missing = [(p, q) for p in range(m) for q in range(m) if (p, q) not in table]
            if missing:
                raise ValueError(f"Missing {op} entries for atom pairs {missing}")

        def flat(table):
            return tuple(table[(p, q)] for p in range(m) for q in range(m))

        return PSAlgebra(m, flat(entries['f']), flat(entries['g']))

    @staticmethod
    def format_algebra(alg):
        m = alg.m
        lines = [f'psalg {m}']
        for op, atom in (('f', alg.f_atom), ('g', alg.g_atom)):
            lines.extend(f'{op} {p} {q} {atom(p, q)}' for p in range(m) for q in range(m))
        return '\n'.join(lines) + '\n'

    @staticmethod
    def load_frame(path):
        with open(path, encoding='utf-8') as handle:
            return FormatService.parse_frame(handle.read())

    @staticmethod
    def load_algebra(path):
        with open(path, encoding='utf-8') as handle:
            return FormatService.parse_algebra(handle.read())
