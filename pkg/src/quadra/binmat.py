"""Square (0,1)-matrices stored as row bitmasks, plus the single-matrix predicates."""

from __future__ import annotations

from dataclasses import dataclass

MAX_DEGREE = 16


class MatrixFormatError(ValueError):
    """Malformed matrix text. Carries 1-based line/column of the offending input."""

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        loc = ""
        if line is not None:
            loc = f" (line {line}"
            if column is not None:
                loc += f", column {column}"
            loc += ")"
        super().__init__(message + loc)


@dataclass(frozen=True, order=True)
class BinMatrix:
    """An n-by-n (0,1)-matrix.

    rows[i] holds row i as an n-bit integer with column 0 at the most
    significant bit, so comparing row tuples is the same as comparing the
    concatenated 0/1 strings lexicographically.
    """

    n: int
    rows: tuple[int, ...]

    def __post_init__(self):
        if not 1 <= self.n <= MAX_DEGREE:
            raise ValueError(f"degree must be in 1..{MAX_DEGREE}, got {self.n}")
        if len(self.rows) != self.n:
            raise ValueError(f"expected {self.n} rows, got {len(self.rows)}")
        full = (1 << self.n) - 1
        for i, r in enumerate(self.rows):
            if r & ~full:
                raise ValueError(f"row {i} has bits beyond column {self.n}")

    @classmethod
    def from_rows(cls, rows):
        """Build from an iterable of rows, each an iterable of 0/1 entries."""
        rows = [list(r) for r in rows]
        n = len(rows)
        masks = []
        for r in rows:
            if len(r) != n:
                raise ValueError("matrix must be square")
            m = 0
            for v in r:
                if v not in (0, 1):
                    raise ValueError(f"entries must be 0 or 1, got {v!r}")
                m = (m << 1) | v
            masks.append(m)
        return cls(n, tuple(masks))

    @classmethod
    def from_strings(cls, strings):
        """Build from row strings like "0110"."""
        return cls.from_rows([[int(c) for c in s] for s in strings])

    @classmethod
    def from_text(cls, text):
        """Parse the matrix text format: degree on line 1, then n rows of 0/1 characters."""
        lines = text.splitlines()
        if not lines or not lines[0].strip():
            raise MatrixFormatError("missing degree line", line=1)
        try:
            n = int(lines[0].strip())
        except ValueError:
            raise MatrixFormatError(f"degree is not an integer: {lines[0].strip()!r}", line=1) from None
        if not 1 <= n <= MAX_DEGREE:
            raise MatrixFormatError(f"degree must be in 1..{MAX_DEGREE}, got {n}", line=1)
        if len(lines) < n + 1:
            raise MatrixFormatError(f"expected {n} rows, found {len(lines) - 1}", line=len(lines) + 1)
        masks = []
        for i in range(n):
            row = lines[i + 1].strip()
            if len(row) != n:
                raise MatrixFormatError(f"expected {n} characters, found {len(row)}", line=i + 2)
            m = 0
            for j, c in enumerate(row):
                if c not in "01":
                    raise MatrixFormatError(f"invalid character {c!r}", line=i + 2, column=j + 1)
                m = (m << 1) | (c == "1")
            masks.append(m)
        return cls(n, tuple(masks))

    def to_text(self):
        """Render in the matrix text format (degree line plus row lines)."""
        return "\n".join([str(self.n)] + list(self.row_strings())) + "\n"

    def row_strings(self):
        return tuple(format(r, f"0{self.n}b") for r in self.rows)

    def entry(self, i, j):
        return (self.rows[i] >> (self.n - 1 - j)) & 1

    def columns(self):
        """Column bitmasks under the same MSB-first convention (bit n-1-i is entry i,j)."""
        n = self.n
        cols = []
        for j in range(n):
            c = 0
            for i in range(n):
                c = (c << 1) | ((self.rows[i] >> (n - 1 - j)) & 1)
            cols.append(c)
        return tuple(cols)

    def ones_count(self):
        return sum(r.bit_count() for r in self.rows)


def transpose(m: BinMatrix) -> BinMatrix:
    return BinMatrix(m.n, m.columns())


def zero_count(m: BinMatrix) -> int:
    return m.n * m.n - m.ones_count()


def has_zero_line(m: BinMatrix) -> bool:
    if any(r == 0 for r in m.rows):
        return True
    union = 0
    for r in m.rows:
        union |= r
    return union != (1 << m.n) - 1


def row_sum_multiset(m: BinMatrix) -> tuple[int, ...]:
    return tuple(sorted(r.bit_count() for r in m.rows))


def col_sum_multiset(m: BinMatrix) -> tuple[int, ...]:
    return tuple(sorted(c.bit_count() for c in m.columns()))


def is_regular(m: BinMatrix) -> bool:
    """Constant row sums and constant column sums."""
    sums = {r.bit_count() for r in m.rows}
    if len(sums) != 1:
        return False
    return len({c.bit_count() for c in m.columns()}) == 1


def _pairs_quadrangular(vecs):
    for i in range(len(vecs)):
        for j in range(i + 1, len(vecs)):
            if (vecs[i] & vecs[j]).bit_count() == 1:
                return False
    return True


def is_quadrangular(m: BinMatrix) -> bool:
    """No two distinct rows, and no two distinct columns, share exactly one common 1."""
    return _pairs_quadrangular(m.rows) and _pairs_quadrangular(m.columns())


def _row_sq(rows, n):
    # adj[i]: bitmask of other rows sharing at least one 1 with row i
    adj = [0] * n
    for i in range(n):
        for j in range(i + 1, n):
            if rows[i] & rows[j]:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    for s in range(1, 1 << n):
        size = s.bit_count()
        if size < 2:
            continue
        ok = True
        t = s
        while t:
            low = t & -t
            i = low.bit_length() - 1
            if not adj[i] & s:
                ok = False
                break
            t ^= low
        if not ok:
            continue
        ones = 0
        twice = 0
        t = s
        while t:
            low = t & -t
            r = rows[low.bit_length() - 1]
            twice |= ones & r
            ones |= r
            t ^= low
        if twice.bit_count() < size:
            return False
    return True


def is_row_strongly_quadrangular(m: BinMatrix) -> bool:
    """Every set S of pairwise-linked rows spans at least |S| columns with two or more ones."""
    return _row_sq(m.rows, m.n)


def is_strongly_quadrangular(m: BinMatrix) -> bool:
    return _row_sq(m.rows, m.n) and _row_sq(m.columns(), m.n)


def is_indecomposable(m: BinMatrix) -> bool:
    """No r x (n-r) all-zero submatrix for any nonempty proper row subset."""
    n = m.n
    for rmask in range(1, (1 << n) - 1):
        union = 0
        t = rmask
        while t:
            low = t & -t
            union |= m.rows[low.bit_length() - 1]
            t ^= low
        if union.bit_count() <= rmask.bit_count():
            return False
    return True
