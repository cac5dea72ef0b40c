"""Skew tableaux over graded alphabets.

Semistandard means: rows weakly increase left to right, columns weakly
increase top to bottom, even letters are strict down columns and odd letters
are strict along rows.  Cells are addressed 1-based as (row, col); row r of a
shape outer/inner occupies columns inner_r+1 .. outer_r.

Anti-normal tableaux live inside a fixed rectangle: the shape is (w^h)/inner
and bumping runs right to left (largest entry at the bottom right).
"""

from dataclasses import dataclass, field

from . import base
from .errors import InsertionOverflow, KacCrystalError


@dataclass(frozen=True)
class Tableau:
    alphabet: str
    outer: tuple
    inner: tuple
    rows: tuple
    # presentation hint for serialization; not part of tableau identity
    antinormal: bool = field(default=False, compare=False)

    def __post_init__(self):
        if len(self.rows) != len(self.outer):
            raise ValueError("row count does not match outer shape")
        for i, row in enumerate(self.rows):
            if len(row) != self.outer[i] - self.inner_row(i + 1):
                raise ValueError("row %d has wrong length" % (i + 1,))

    def inner_row(self, r):
        return self.inner[r - 1] if r - 1 < len(self.inner) else 0

    @property
    def nrows(self):
        return len(self.outer)

    @property
    def ncols(self):
        return self.outer[0] if self.outer else 0

    def has_cell(self, r, c):
        return 1 <= r <= self.nrows and self.inner_row(r) < c <= self.outer[r - 1]

    def cell(self, r, c):
        return self.rows[r - 1][c - 1 - self.inner_row(r)]

    def cells(self):
        for r in range(1, self.nrows + 1):
            for c in range(self.inner_row(r) + 1, self.outer[r - 1] + 1):
                yield r, c

    def set_cell(self, r, c, code):
        rows = list(self.rows)
        row = list(rows[r - 1])
        row[c - 1 - self.inner_row(r)] = code
        rows[r - 1] = tuple(row)
        return Tableau(self.alphabet, self.outer, self.inner, tuple(rows), self.antinormal)

    def column(self, c):
        """(row, value) pairs of column c, top to bottom."""
        out = []
        for r in range(1, self.nrows + 1):
            if self.has_cell(r, c):
                out.append((r, self.cell(r, c)))
        return out

    def size(self):
        return sum(len(row) for row in self.rows)

    def weight(self, rank):
        total = base.Weight.zero(rank)
        for r, c in self.cells():
            total = total.add(base.letter_weight(rank, self.alphabet, self.cell(r, c)))
        return total

    def is_semistandard(self):
        if not base.is_partition(self.outer) or not base.is_partition(self.inner):
            return False
        for i in range(len(self.outer)):
            if self.inner_row(i + 1) > self.outer[i]:
                return False
        for r, c in self.cells():
            v = self.cell(r, c)
            if self.has_cell(r, c - 1):
                left = self.cell(r, c - 1)
                if left > v or (left == v and base.letter_parity(self.alphabet, v) == 1):
                    return False
            if self.has_cell(r - 1, c):
                up = self.cell(r - 1, c)
                if up > v or (up == v and base.letter_parity(self.alphabet, v) == 0):
                    return False
        return True

    def to_json(self):
        return {
            "alphabet": self.alphabet,
            "outer": list(self.outer),
            "inner": list(self.inner),
            "antinormal": self.antinormal,
            "rows": [
                [base.letter_str(self.alphabet, v) for v in row] for row in self.rows
            ],
        }

    @staticmethod
    def from_json(data):
        alphabet = data["alphabet"]
        rows = tuple(
            tuple(base.letter_parse(alphabet, v) for v in row) for row in data["rows"]
        )
        return Tableau(
            alphabet,
            tuple(data["outer"]),
            tuple(data["inner"]),
            rows,
            bool(data.get("antinormal", False)),
        )


def make_tableau(alphabet, outer, rows, inner=(), antinormal=False):
    return Tableau(alphabet, tuple(outer), tuple(inner), tuple(tuple(r) for r in rows), antinormal)


def empty_tableau(alphabet, outer, inner=None, antinormal=False):
    """Tableau with no cells: inner defaults to outer."""
    outer = tuple(outer)
    inner = outer if inner is None else tuple(inner)
    return Tableau(alphabet, outer, inner, ((),) * len(outer), antinormal)


def highest_barred(rank, mu):
    """Source of the barred-letter crystal on a straight shape: row i is
    filled with the (m - i + 1)-th barred letter."""
    mu = base.normalize_partition(mu)
    rows = tuple(
        (-(rank.m - i),) * mu[i] for i in range(len(mu))
    )
    return Tableau(base.ALPHABET_BPLUS, mu, (), rows)


def highest_unbarred(rank, nu):
    """Source of the unbarred-letter crystal on a straight shape: column j is
    filled with the letter j."""
    nu = base.normalize_partition(nu)
    rows = tuple(
        tuple(range(1, nu[i] + 1)) for i in range(len(nu))
    )
    return Tableau(base.ALPHABET_BMINUS, nu, (), rows)


def enumerate_sst(alphabet, rank, outer, inner=()):
    """All semistandard fillings of outer/inner, by brute cell-by-cell fill."""
    outer = tuple(outer)
    inner = base.normalize_partition(inner)
    letters = base.alphabet_letters(alphabet, rank)
    cells = []
    for r in range(1, len(outer) + 1):
        lo = inner[r - 1] if r - 1 < len(inner) else 0
        for c in range(lo + 1, outer[r - 1] + 1):
            cells.append((r, c))
    grid = {}
    results = []

    def fill(k):
        if k == len(cells):
            rows = []
            for r in range(1, len(outer) + 1):
                lo = inner[r - 1] if r - 1 < len(inner) else 0
                rows.append(tuple(grid[(r, c)] for c in range(lo + 1, outer[r - 1] + 1)))
            results.append(Tableau(alphabet, outer, inner, tuple(rows)))
            return
        r, c = cells[k]
        for v in letters:
            if (r, c - 1) in grid:
                left = grid[(r, c - 1)]
                if left > v or (left == v and base.letter_parity(alphabet, v) == 1):
                    continue
            if (r - 1, c) in grid:
                up = grid[(r - 1, c)]
                if up > v or (up == v and base.letter_parity(alphabet, v) == 0):
                    continue
            grid[(r, c)] = v
            fill(k + 1)
            del grid[(r, c)]

    fill(0)
    return results


def count_sst(alphabet, rank, outer, inner=()):
    return len(enumerate_sst(alphabet, rank, outer, inner))


# ---------------------------------------------------------------------------
# reading words

READ_BY_COLUMNS = "columns"
READ_BY_ROWS = "rows"


def reading_cells(t, order=READ_BY_COLUMNS):
    """Cell positions in an admissible reading order.

    Both orders read each cell before the cells below it and to its left:
    columns right to left scanned top down, or rows top down scanned right
    to left.
    """
    cells = []
    if order == READ_BY_COLUMNS:
        for c in range(t.ncols, 0, -1):
            for r, _ in t.column(c):
                cells.append((r, c))
    elif order == READ_BY_ROWS:
        for r in range(1, t.nrows + 1):
            for c in range(t.outer[r - 1], t.inner_row(r), -1):
                cells.append((r, c))
    else:
        raise ValueError("unknown reading order %r" % (order,))
    return cells


def reading_word(t, order=READ_BY_COLUMNS):
    return [t.cell(r, c) for r, c in reading_cells(t, order)]


# ---------------------------------------------------------------------------
# insertion

def column_insert(t, code):
    """Column insertion into a straight-shape tableau.

    An even letter bumps the smallest entry >= it, an odd letter the smallest
    entry strictly greater; the bumped entry moves one column right.
    Returns (tableau, created_cell).
    """
    if t.inner and any(t.inner):
        raise KacCrystalError("column insertion requires a straight shape")
    alphabet = t.alphabet
    heights = list(base.conjugate(t.outer))
    grid = {rc: t.cell(*rc) for rc in t.cells()}
    a = code
    c = 1
    while True:
        height = heights[c - 1] if c - 1 < len(heights) else 0
        strict = base.letter_parity(alphabet, a) == 1
        target = None
        for r in range(1, height + 1):
            v = grid[(r, c)]
            if v > a or (v == a and not strict):
                target = r
                break
        if target is None:
            created = (height + 1, c)
            grid[created] = a
            if c - 1 < len(heights):
                heights[c - 1] += 1
            else:
                heights.append(1)
            break
        a, grid[(target, c)] = grid[(target, c)], a
        c += 1
    if not base.is_partition(tuple(heights)):
        raise InsertionOverflow("insertion produced an invalid shape")
    outer = base.conjugate(tuple(heights))
    rows = tuple(
        tuple(grid[(r, c)] for c in range(1, outer[r - 1] + 1))
        for r in range(1, len(outer) + 1)
    )
    out = Tableau(alphabet, outer, (), rows)
    if not out.is_semistandard():
        raise InsertionOverflow("insertion produced an invalid tableau")
    return out, created


def word_to_tableau(alphabet, word):
    """Insert a word left to right into an initially empty tableau."""
    t = Tableau(alphabet, (), (), ())
    for a in word:
        t, _ = column_insert(t, a)
    return t


def antinormal_insert(t, code):
    """Bumping insertion into an anti-normal tableau inside its rectangle.

    Starting at the rightmost column, an even letter replaces the largest
    entry <= it and an odd letter the largest entry strictly below it; the
    replaced entry carries into the next column left.  When a column has no
    candidate the letter lands on top of that column and a new cell is
    created.  Returns (tableau, created_cell).
    """
    outer = t.outer
    if len(set(outer)) > 1:
        raise KacCrystalError("anti-normal insertion requires a rectangle")
    width = t.ncols
    height = t.nrows
    a = code
    grid = {rc: t.cell(*rc) for rc in t.cells()}
    inner = list(t.inner) + [0] * (height - len(t.inner))
    for c in range(width, 0, -1):
        top = sum(1 for x in inner if x >= c)  # row above the column's cells
        strict = base.letter_parity(t.alphabet, a) == 1
        target = None
        for r in range(height, top, -1):
            v = grid[(r, c)]
            if v < a or (v == a and not strict):
                target = r
                break
        if target is None:
            if top == 0:
                raise InsertionOverflow("bumping exited the rectangle")
            if inner[top - 1] != c:
                raise InsertionOverflow("created cell breaks the inner shape")
            grid[(top, c)] = a
            inner[top - 1] -= 1
            created = (top, c)
            return _from_grid(t, tuple(inner), grid), created
        a, grid[(target, c)] = grid[(target, c)], a
    raise InsertionOverflow("bumping exited the rectangle")


def antinormal_delete(t, cell):
    """Reverse one anti-normal insertion given the created cell.

    Returns (tableau, code) where code is the letter originally inserted.
    """
    outer = t.outer
    width = t.ncols
    height = t.nrows
    r0, c0 = cell
    if not t.has_cell(r0, c0):
        raise KacCrystalError("cell %r is not in the tableau" % (cell,))
    grid = {rc: t.cell(*rc) for rc in t.cells()}
    inner = list(t.inner) + [0] * (height - len(t.inner))
    top = sum(1 for x in inner if x >= c0)
    if r0 != top + 1:
        raise KacCrystalError("cell %r is not on top of its column" % (cell,))
    a = grid.pop((r0, c0))
    inner[r0 - 1] += 1
    for c in range(c0 + 1, width + 1):
        top = sum(1 for x in inner if x >= c)
        strict = base.letter_parity(t.alphabet, a) == 1
        target = None
        for r in range(top + 1, height + 1):
            v = grid[(r, c)]
            if v > a or (v == a and not strict):
                target = r
                break
        if target is None:
            raise KacCrystalError("cannot reverse insertion at %r" % (cell,))
        a, grid[(target, c)] = grid[(target, c)], a
    return _from_grid(t, tuple(inner), grid), a


def _from_grid(t, inner, grid):
    rows = []
    for r in range(1, t.nrows + 1):
        lo = inner[r - 1] if r - 1 < len(inner) else 0
        rows.append(tuple(grid[(r, c)] for c in range(lo + 1, t.outer[r - 1] + 1)))
    while inner and inner[-1] == 0:
        inner = inner[:-1]
    return Tableau(t.alphabet, t.outer, tuple(inner), tuple(rows), t.antinormal)
