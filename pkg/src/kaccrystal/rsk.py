"""Insertion bijection between the Kac crystal model and tableau pairs.

The domain element is (S, U, V): a set of odd negative roots, a barred-dual
tableau on a rectangle minus mu, and an unbarred tableau.  Listing S in the
order (by j, then by i) as pairs (i_1, j_1) .. (i_r, j_r), the barred-dual
letters d(i_r), .., d(i_1) are bumped into U from the last pair to the first;
the recording tableau stores j_k in the cell created by d(i_k).  The result
is (P, Q, V) with sh(P) = rect/eta and sh(Q) = mu/eta for some eta inside mu.

Barred colors act on P alone, unbarred colors on (Q, V) by the upper tensor
rule, and color 0 follows a right-to-left column scan of the aligned pair
(P, Q).
"""

from dataclasses import dataclass

from . import base, kac, tableaux, wordops
from .errors import InsertionOverflow, KacCrystalError, PreconditionViolated


@dataclass(frozen=True)
class KappaElement:
    rank: base.Rank
    p: tableaux.Tableau
    q: tableaux.Tableau
    v: tableaux.Tableau

    @property
    def ell(self):
        return self.p.ncols

    @property
    def eta(self):
        return self.p.inner

    @property
    def mu(self):
        return self.q.outer

    def key(self):
        return (self.p.inner, self.p.rows, self.q.rows, self.v.rows)

    def weight(self):
        return (
            self.p.weight(self.rank)
            .add(self.q.weight(self.rank))
            .add(self.v.weight(self.rank))
        )

    def to_json(self):
        return {
            "P": self.p.to_json(),
            "Q": self.q.to_json(),
            "V": self.v.to_json(),
        }


def check_window(lam, ell):
    """Domain window of the insertion bijection (closed version).

    The barred part must be nonpositive, the unbarred part nonnegative, and
    the rectangle wide enough that mu = ell + barred part is a partition of
    nonnegative parts.
    """
    rank = lam.rank
    bs = lam.coords[: rank.m]
    us = lam.coords[rank.m:]
    if bs[0] > 0:
        raise PreconditionViolated("barred part of %s has positive entries" % lam)
    if us[-1] < 0:
        raise PreconditionViolated("unbarred part of %s has negative entries" % lam)
    if ell + bs[rank.m - 1] < 0:
        raise PreconditionViolated("rectangle width %d too small for %s" % (ell, lam))


def rho(elem):
    """Forward insertion map on a dual-model Kac crystal element."""
    rank = elem.rank
    if elem.t_plus.alphabet != base.ALPHABET_BDUAL:
        raise KacCrystalError("insertion map needs a barred-dual first factor")
    mu = elem.t_plus.inner + (0,) * (rank.m - len(elem.t_plus.inner))
    p = elem.t_plus
    records = []
    for i, j in reversed(elem.s.sorted(kac.PREC)):
        p, cell = tableaux.antinormal_insert(p, i)
        records.append((cell, j))
    eta = p.inner + (0,) * (rank.m - len(p.inner))
    grid = {cell: j for cell, j in records}
    rows = []
    for r in range(1, rank.m + 1):
        rows.append(tuple(grid[(r, c)] for c in range(eta[r - 1] + 1, mu[r - 1] + 1)))
    q = tableaux.Tableau(base.ALPHABET_BMINUS, mu, p.inner, tuple(rows), True)
    if not q.is_semistandard():
        raise InsertionOverflow("recording tableau is not semistandard")
    return KappaElement(rank, p, q, elem.t_minus)


def rho_inverse(kelem):
    """Undo the insertions in reverse chronological order.

    The cell undone next is the top cell of a recording column holding the
    smallest record; among equal records the rightmost column goes first.
    """
    rank = kelem.rank
    p, q = kelem.p, kelem.q
    mu = q.outer
    pairs = []
    while q.size() > 0:
        candidates = []
        for c in range(1, (mu[0] if mu else 0) + 1):
            col = q.column(c)
            if col:
                r, val = col[0]
                candidates.append((val, -c, r))
        val, negc, r = min(candidates)
        c = -negc
        p, code = tableaux.antinormal_delete(p, (r, c))
        pairs.append((code, val))
        q = _drop_top(q, r, c)
    roots = kac.OddRootSet.of(rank, pairs)
    if len(roots.roots) != len(pairs):
        raise KacCrystalError("recording data does not define a root set")
    return kac.KacElement(rank, roots, p, kelem.v)


def _drop_top(q, r, c):
    grid = {rc: q.cell(*rc) for rc in q.cells()}
    del grid[(r, c)]
    inner = list(q.inner) + [0] * (q.nrows - len(q.inner))
    if inner[r - 1] != c - 1:
        raise KacCrystalError("cell (%d, %d) is not removable" % (r, c))
    inner[r - 1] = c
    rows = []
    for i in range(1, q.nrows + 1):
        rows.append(tuple(grid[(i, cc)] for cc in range(inner[i - 1] + 1, q.outer[i - 1] + 1)))
    inner_t = tuple(inner)
    while inner_t and inner_t[-1] == 0:
        inner_t = inner_t[:-1]
    return tableaux.Tableau(q.alphabet, q.outer, inner_t, tuple(rows), q.antinormal)


# ---------------------------------------------------------------------------
# operators on the image side


def _column_tops(kelem, c):
    """Top entries of column c in P and Q; None when the column is empty."""
    p, q = kelem.p, kelem.q
    pcol = p.column(c)
    qcol = q.column(c)
    a = pcol[0][1] if pcol else None
    b = qcol[0][1] if qcol else None
    return a, b


def _zero_scan(kelem):
    """Right-to-left column scan deciding how color 0 acts.

    Returns ("+", c) when a cell pair can be added at column c, ("-", c)
    when the top pair of column c can be removed, or (None, None).
    """
    ell = kelem.ell
    for c in range(ell, 0, -1):
        a, b = _column_tops(kelem, c)
        if a is None or a > 1:
            return "+", c
        if b == 1:
            return "-", c
    return None, None


def _add_zero(kelem, c):
    rank = kelem.rank
    p, q = kelem.p, kelem.q
    inner = list(p.inner) + [0] * (rank.m - len(p.inner))
    top = sum(1 for x in inner if x >= c)
    if top == 0 or inner[top - 1] != c:
        raise InsertionOverflow("color 0 addition breaks the inner shape")
    new_p = _with_cell_added(p, top, c, 1)
    new_q = _with_cell_added(q, top, c, 1)
    return KappaElement(rank, new_p, new_q, kelem.v)


def _remove_zero(kelem, c):
    rank = kelem.rank
    p, q = kelem.p, kelem.q
    pcol = p.column(c)
    r = pcol[0][0]
    new_p = _with_cell_removed(p, r, c)
    new_q = _with_cell_removed(q, r, c)
    return KappaElement(rank, new_p, new_q, kelem.v)


def _with_cell_added(t, r, c, code):
    grid = {rc: t.cell(*rc) for rc in t.cells()}
    grid[(r, c)] = code
    inner = list(t.inner) + [0] * (t.nrows - len(t.inner))
    if inner[r - 1] != c:
        raise InsertionOverflow("cell (%d, %d) is not addable" % (r, c))
    inner[r - 1] = c - 1
    return _rebuild(t, inner, grid)


def _with_cell_removed(t, r, c):
    grid = {rc: t.cell(*rc) for rc in t.cells()}
    del grid[(r, c)]
    inner = list(t.inner) + [0] * (t.nrows - len(t.inner))
    if inner[r - 1] != c - 1:
        raise InsertionOverflow("cell (%d, %d) is not removable" % (r, c))
    inner[r - 1] = c
    return _rebuild(t, inner, grid)


def _rebuild(t, inner, grid):
    rows = []
    for i in range(1, t.nrows + 1):
        rows.append(
            tuple(grid[(i, cc)] for cc in range(inner[i - 1] + 1, t.outer[i - 1] + 1))
        )
    inner_t = tuple(inner)
    while inner_t and inner_t[-1] == 0:
        inner_t = inner_t[:-1]
    out = tableaux.Tableau(t.alphabet, t.outer, inner_t, tuple(rows), t.antinormal)
    if not out.is_semistandard():
        raise InsertionOverflow("color 0 produced an invalid tableau")
    return out


def apply_kappa(k, direction, kelem):
    """Colored operator on an image-side element; None when null."""
    rank = kelem.rank
    if k == 0:
        sign, c = _zero_scan(kelem)
        if direction == wordops.LOWER:
            return _add_zero(kelem, c) if sign == "+" else None
        return _remove_zero(kelem, c) if sign == "-" else None
    if k < 0:
        p = wordops.tableau_apply(rank, k, direction, kelem.p)
        if p is None:
            return None
        return KappaElement(rank, p, kelem.q, kelem.v)
    eps1, phi1 = wordops.tableau_eps_phi(rank, k, kelem.q)
    eps2, phi2 = wordops.tableau_eps_phi(rank, k, kelem.v)
    if wordops.tensor_select(k, direction, eps1, phi1, eps2, phi2) == 1:
        q = wordops.tableau_apply(rank, k, direction, kelem.q)
        if q is None:
            return None
        return KappaElement(rank, kelem.p, q, kelem.v)
    v = wordops.tableau_apply(rank, k, direction, kelem.v)
    if v is None:
        return None
    return KappaElement(rank, kelem.p, kelem.q, v)


# ---------------------------------------------------------------------------
# exhaustive domain and image enumeration (small ranks)


def _subpartitions(mu):
    """All partitions contained in mu."""
    mu = tuple(mu)
    if not mu:
        return [()]
    out = []

    def rec(row, prev, acc):
        if row == len(mu):
            out.append(tuple(acc))
            return
        for v in range(min(prev, mu[row]), -1, -1):
            acc.append(v)
            rec(row + 1, v, acc)
            acc.pop()

    rec(0, mu[0] if mu else 0, [])
    return [base.normalize_partition(p) for p in out]


def enumerate_domain(lam, ell):
    """All (S, U, V) for a weight in the window, as Kac crystal elements."""
    rank = lam.rank
    check_window(lam, ell)
    m, n = rank
    mu = tuple(ell + b for b in lam.coords[:m])
    nu = base.conjugate(lam.coords[m:])
    us = tableaux.enumerate_sst(base.ALPHABET_BDUAL, rank, (ell,) * m, mu)
    vs = tableaux.enumerate_sst(base.ALPHABET_BMINUS, rank, nu)
    out = []
    for mask in range(1 << (m * n)):
        s = kac.OddRootSet.from_mask(rank, mask)
        for u in us:
            for v in vs:
                out.append(kac.KacElement(rank, s, u, v))
    return out


def enumerate_image(lam, ell):
    """All (P, Q, V) with sh(P) = rect/eta, sh(Q) = mu/eta, eta inside mu."""
    rank = lam.rank
    check_window(lam, ell)
    m = rank.m
    mu = tuple(ell + b for b in lam.coords[:m])
    nu = base.conjugate(lam.coords[m:])
    vs = tableaux.enumerate_sst(base.ALPHABET_BMINUS, rank, nu)
    out = []
    for eta in _subpartitions(mu):
        ps = tableaux.enumerate_sst(base.ALPHABET_BDUAL, rank, (ell,) * m, eta)
        qs = tableaux.enumerate_sst(base.ALPHABET_BMINUS, rank, mu, eta)
        for p in ps:
            for q in qs:
                for v in vs:
                    out.append(
                        KappaElement(
                            rank,
                            tableaux.Tableau(p.alphabet, p.outer, p.inner, p.rows, True),
                            tableaux.Tableau(q.alphabet, q.outer, q.inner, q.rows, True),
                            v,
                        )
                    )
    return out
