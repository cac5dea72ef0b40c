"""Crystal of a Kac module: power set of odd roots times two tableau factors.

A vertex is (S, T+, T-) where S is a set of odd negative roots encoded by the
pairs (i, j) with -eps(bi) + eps(j) in S, T+ is a barred-letter tableau (or a
barred-dual one in the dual model used by the insertion bridge) and T- an
unbarred-letter tableau.  Barred colors act on (S, T+) by the lower tensor
rule, unbarred colors on (S, T-) by the upper rule, and color 0 adds or
removes the root -eps(b1) + eps(1) in S.
"""

import functools
from dataclasses import dataclass

from . import base, tableaux, wordops
from .errors import NotDominant, SizeCapExceeded

# orders on the odd negative roots, as sort keys on the pairs (i, j)
PREC = "prec"          # by j, then by i
PREC_PRIME = "prec1"   # by i, then by descending j
PREC_DPRIME = "prec2"  # by i, then by j


def root_sort_key(order):
    if order == PREC:
        return lambda p: (p[1], p[0])
    if order == PREC_PRIME:
        return lambda p: (p[0], -p[1])
    if order == PREC_DPRIME:
        return lambda p: (p[0], p[1])
    raise ValueError("unknown root order %r" % (order,))


@dataclass(frozen=True)
class OddRootSet:
    rank: base.Rank
    roots: frozenset

    @staticmethod
    def empty(rank):
        return OddRootSet(rank, frozenset())

    @staticmethod
    def of(rank, pairs):
        pairs = frozenset(tuple(p) for p in pairs)
        for i, j in pairs:
            if not (1 <= i <= rank.m and 1 <= j <= rank.n):
                raise ValueError("root index %r out of range" % ((i, j),))
        return OddRootSet(rank, pairs)

    def sorted(self, order=PREC):
        return sorted(self.roots, key=root_sort_key(order))

    def mask(self):
        n = self.rank.n
        out = 0
        for i, j in self.roots:
            out |= 1 << ((i - 1) * n + (j - 1))
        return out

    @staticmethod
    def from_mask(rank, mask):
        pairs = set()
        for i in range(1, rank.m + 1):
            for j in range(1, rank.n + 1):
                if mask >> ((i - 1) * rank.n + (j - 1)) & 1:
                    pairs.add((i, j))
        return OddRootSet(rank, frozenset(pairs))

    def bits(self):
        return [
            [1 if (i, j) in self.roots else 0 for j in range(1, self.rank.n + 1)]
            for i in range(1, self.rank.m + 1)
        ]

    def weight(self):
        total = base.Weight.zero(self.rank)
        for i, j in self.roots:
            total = total.add(base.odd_negative_root(self.rank, i, j))
        return total

    def _pairs_for(self, k):
        """(eps, phi) contributions of each root for color k, scan-sorted."""
        order = PREC if k < 0 else PREC_PRIME
        roots = self.sorted(order)
        out = []
        for i, j in roots:
            if k < 0:
                eps = 1 if i == -k + 1 else 0
                phi = 1 if i == -k else 0
            else:
                eps = 1 if j == k + 1 else 0
                phi = 1 if j == k else 0
            out.append((eps, phi))
        return roots, out

    def eps_phi(self, k):
        if k == 0:
            eps = 1 if (1, 1) in self.roots else 0
            return eps, 1 - eps
        _, pairs = self._pairs_for(k)
        _, _, eps, phi = wordops.bracket(pairs, upper=k > 0)
        return eps, phi

    def apply(self, k, direction):
        if k == 0:
            if direction == wordops.RAISE:
                if (1, 1) not in self.roots:
                    return None
                return OddRootSet(self.rank, self.roots - {(1, 1)})
            if (1, 1) in self.roots:
                return None
            return OddRootSet(self.rank, self.roots | {(1, 1)})
        roots, pairs = self._pairs_for(k)
        e_idx, f_idx, _, _ = wordops.bracket(pairs, upper=k > 0)
        idx = e_idx if direction == wordops.RAISE else f_idx
        if idx is None:
            return None
        i, j = roots[idx]
        if k < 0:
            new = (i - 1, j) if direction == wordops.RAISE else (i + 1, j)
        else:
            new = (i, j - 1) if direction == wordops.RAISE else (i, j + 1)
        return OddRootSet(self.rank, (self.roots - {(i, j)}) | {new})


@dataclass(frozen=True)
class KacElement:
    rank: base.Rank
    s: OddRootSet
    t_plus: tableaux.Tableau
    t_minus: tableaux.Tableau

    def weight(self, offset=None):
        w = self.s.weight().add(self.t_plus.weight(self.rank)).add(
            self.t_minus.weight(self.rank)
        )
        return w if offset is None else w.add(offset)

    def key(self):
        return (self.s.mask(), self.t_plus.rows, self.t_minus.rows)

    def to_json(self):
        return {
            "S": self.s.bits(),
            "Tplus": self.t_plus.to_json(),
            "Tminus": self.t_minus.to_json(),
        }


def apply_kac(k, direction, elem):
    """Colored operator on a Kac crystal element; None when null."""
    rank = elem.rank
    if k == 0:
        s = elem.s.apply(0, direction)
        if s is None:
            return None
        return KacElement(rank, s, elem.t_plus, elem.t_minus)
    if k < 0:
        eps1, phi1 = elem.s.eps_phi(k)
        eps2, phi2 = wordops.tableau_eps_phi(rank, k, elem.t_plus)
        if wordops.tensor_select(k, direction, eps1, phi1, eps2, phi2) == 1:
            s = elem.s.apply(k, direction)
            if s is None:
                return None
            return KacElement(rank, s, elem.t_plus, elem.t_minus)
        t = wordops.tableau_apply(rank, k, direction, elem.t_plus)
        if t is None:
            return None
        return KacElement(rank, elem.s, t, elem.t_minus)
    eps1, phi1 = elem.s.eps_phi(k)
    eps2, phi2 = wordops.tableau_eps_phi(rank, k, elem.t_minus)
    if wordops.tensor_select(k, direction, eps1, phi1, eps2, phi2) == 1:
        s = elem.s.apply(k, direction)
        if s is None:
            return None
        return KacElement(rank, s, elem.t_plus, elem.t_minus)
    t = wordops.tableau_apply(rank, k, direction, elem.t_minus)
    if t is None:
        return None
    return KacElement(rank, elem.s, elem.t_plus, t)


# ---------------------------------------------------------------------------
# component tables for fast graph assembly


class FactorTable:
    """All elements of a tableau crystal with per-color operator arrays."""

    def __init__(self, alphabet, rank, outer, inner=()):
        self.alphabet = alphabet
        self.rank = rank
        elems = tableaux.enumerate_sst(alphabet, rank, outer, inner)
        elems.sort(key=lambda t: t.rows)
        self.elements = elems
        self.index = {t.rows: i for i, t in enumerate(elems)}
        self.weights = [t.weight(rank).coords for t in elems]
        self.colors = base.alphabet_colors(alphabet, rank)
        self.e = {}
        self.f = {}
        self.eps = {}
        self.phi = {}
        for k in self.colors:
            ek, fk, epsk, phik = [], [], [], []
            for t in elems:
                epsv, phiv = wordops.tableau_eps_phi(rank, k, t)
                epsk.append(epsv)
                phik.append(phiv)
                up = wordops.tableau_apply(rank, k, wordops.RAISE, t)
                ek.append(None if up is None else self.index[up.rows])
                dn = wordops.tableau_apply(rank, k, wordops.LOWER, t)
                fk.append(None if dn is None else self.index[dn.rows])
            self.e[k], self.f[k] = ek, fk
            self.eps[k], self.phi[k] = epsk, phik

    def sources(self):
        ks = self.colors
        return [
            i
            for i in range(len(self.elements))
            if all(self.eps[k][i] == 0 for k in ks)
        ]


@functools.lru_cache(maxsize=None)
def factor_table(alphabet, rank, outer, inner=()):
    return FactorTable(alphabet, rank, outer, inner)


class OddTable:
    """All subsets of the odd negative roots, indexed by bit mask."""

    def __init__(self, rank):
        self.rank = rank
        size = 1 << (rank.m * rank.n)
        self.sets = [OddRootSet.from_mask(rank, mask) for mask in range(size)]
        self.weights = [s.weight().coords for s in self.sets]
        self.e = {}
        self.f = {}
        self.eps = {}
        self.phi = {}
        for k in base.colors(rank):
            ek, fk, epsk, phik = [], [], [], []
            for s in self.sets:
                epsv, phiv = s.eps_phi(k)
                epsk.append(epsv)
                phik.append(phiv)
                up = s.apply(k, wordops.RAISE)
                ek.append(None if up is None else up.mask())
                dn = s.apply(k, wordops.LOWER)
                fk.append(None if dn is None else dn.mask())
            self.e[k], self.f[k] = ek, fk
            self.eps[k], self.phi[k] = epsk, phik


@functools.lru_cache(maxsize=None)
def odd_table(rank):
    return OddTable(rank)


# ---------------------------------------------------------------------------
# graph generation

MODEL_STANDARD = "standard"
MODEL_DUAL = "dual"

DEFAULT_CAP = 200000


def _standard_factors(lam):
    """Factor shapes for a dominant weight, with constant weight offset.

    Negative coordinates are handled by shifting the shape into partition
    range; the offset restores the true weights.  Operators do not see the
    shift because full barred columns contribute canceling signature pairs.
    """
    rank = lam.rank
    m, n = rank
    bs = lam.coords[:m]
    us = lam.coords[m:]
    cb = min(bs[m - 1], 0)
    cu = min(us[n - 1], 0)
    shape_plus = base.normalize_partition(tuple(b - cb for b in bs))
    shape_minus = base.conjugate(tuple(u - cu for u in us))
    offset = base.delta_plus(rank).scale(cb).add(base.delta_minus(rank).scale(cu))
    return shape_plus, shape_minus, offset


def dual_ell(lam):
    """Smallest rectangle width leaving room for every recording row.

    A full root set records n entries in each row of the inner shape, so
    the smallest inner row ell + lambda_b1 must be at least n.
    """
    b1 = lam.coords[lam.rank.m - 1]
    return max(1, lam.rank.n - b1)


def _dual_factors(lam, ell):
    rank = lam.rank
    m, n = rank
    bs = lam.coords[:m]
    us = lam.coords[m:]
    if bs[0] > 0 or us[n - 1] < 0 or ell + bs[m - 1] < 0:
        raise NotDominant(
            "dual model needs nonpositive barred and nonnegative unbarred parts"
        )
    mu = base.normalize_partition(tuple(ell + b for b in bs))
    shape_minus = base.conjugate(us)
    return (ell,) * m, mu, shape_minus


class CrystalGraph:
    """Edge-colored graph of a Kac crystal, generated breadth first."""

    def __init__(self, rank, lam, model, s_table, plus_table, minus_table, offset):
        self.rank = rank
        self.lam = lam
        self.model = model
        self.s_table = s_table
        self.plus_table = plus_table
        self.minus_table = minus_table
        self.offset = offset
        self.vertices = []
        self.index = {}
        self.edges = []

    def element(self, vid):
        si, pi, vi = self.vertices[vid]
        return KacElement(
            self.rank,
            self.s_table.sets[si],
            self.plus_table.elements[pi],
            self.minus_table.elements[vi],
        )

    def weight_coords(self, vid):
        si, pi, vi = self.vertices[vid]
        off = self.offset.coords
        ws = self.s_table.weights[si]
        wp = self.plus_table.weights[pi]
        wv = self.minus_table.weights[vi]
        return tuple(a + b + c + d for a, b, c, d in zip(ws, wp, wv, off))

    def weight(self, vid):
        return base.Weight(self.rank, self.weight_coords(vid))

    def step(self, vid, k, direction):
        """Table-driven operator application; returns a vertex id or None."""
        triple = self._step_triple(self.vertices[vid], k, direction)
        return None if triple is None else self.index.get(triple)

    def _step_triple(self, triple, k, direction):
        si, pi, vi = triple
        st, pt, vt = self.s_table, self.plus_table, self.minus_table
        if k == 0:
            s2 = st.e[0][si] if direction == wordops.RAISE else st.f[0][si]
            return None if s2 is None else (s2, pi, vi)
        if k < 0:
            sel = wordops.tensor_select(
                k, direction, st.eps[k][si], st.phi[k][si], pt.eps[k][pi], pt.phi[k][pi]
            )
            if sel == 1:
                s2 = st.e[k][si] if direction == wordops.RAISE else st.f[k][si]
                return None if s2 is None else (s2, pi, vi)
            p2 = pt.e[k][pi] if direction == wordops.RAISE else pt.f[k][pi]
            return None if p2 is None else (si, p2, vi)
        sel = wordops.tensor_select(
            k, direction, st.eps[k][si], st.phi[k][si], vt.eps[k][vi], vt.phi[k][vi]
        )
        if sel == 1:
            s2 = st.e[k][si] if direction == wordops.RAISE else st.f[k][si]
            return None if s2 is None else (s2, pi, vi)
        v2 = vt.e[k][vi] if direction == wordops.RAISE else vt.f[k][vi]
        return None if v2 is None else (si, pi, v2)

    def generate(self, start):
        ks = base.colors(self.rank)
        self.vertices.append(start)
        self.index[start] = 0
        queue = [start]
        head = 0
        edge_set = set()
        while head < len(queue):
            cur = queue[head]
            head += 1
            cid = self.index[cur]
            for k in ks:
                down = self._step_triple(cur, k, wordops.LOWER)
                if down is not None:
                    did = self._intern(down, queue)
                    edge_set.add((cid, k, did))
                up = self._step_triple(cur, k, wordops.RAISE)
                if up is not None:
                    uid = self._intern(up, queue)
                    edge_set.add((uid, k, cid))
        self.edges = sorted(edge_set)

    def _intern(self, triple, queue):
        vid = self.index.get(triple)
        if vid is None:
            vid = len(self.vertices)
            self.vertices.append(triple)
            self.index[triple] = vid
            queue.append(triple)
        return vid

    def source_vertices(self):
        """Vertices killed by every raising operator (no incoming edge)."""
        indeg = set(dst for _, _, dst in self.edges)
        return [v for v in range(len(self.vertices)) if v not in indeg]

    def to_json(self):
        return {
            "rank": [self.rank.m, self.rank.n],
            "lambda": str(self.lam),
            "model": self.model,
            "vertices": [
                dict(id=v, wt=str(self.weight(v)), **self.element(v).to_json())
                for v in range(len(self.vertices))
            ],
            "edges": [list(e) for e in self.edges],
        }

    def to_dot(self):
        lines = ["digraph crystal {"]
        for v in range(len(self.vertices)):
            lines.append('  v%d [label="%d", tooltip="%s"];' % (v, v, self.weight(v)))
        for src, k, dst in self.edges:
            lines.append('  v%d -> v%d [label="%d"];' % (src, dst, k))
        lines.append("}")
        return "\n".join(lines) + "\n"


def generate_graph(lam, cap=DEFAULT_CAP, model=MODEL_STANDARD, ell=None):
    rank = lam.rank
    if not lam.is_dominant():
        raise NotDominant("%s is not dominant" % lam)
    st = odd_table(rank)
    if model == MODEL_STANDARD:
        shape_plus, shape_minus, offset = _standard_factors(lam)
        pt = factor_table(base.ALPHABET_BPLUS, rank, shape_plus)
        vt = factor_table(base.ALPHABET_BMINUS, rank, shape_minus)
    elif model == MODEL_DUAL:
        if ell is None:
            ell = dual_ell(lam)
        outer, mu, shape_minus = _dual_factors(lam, ell)
        pt = factor_table(base.ALPHABET_BDUAL, rank, outer, mu)
        vt = factor_table(base.ALPHABET_BMINUS, rank, shape_minus)
        offset = base.Weight.zero(rank)
    else:
        raise ValueError("unknown model %r" % (model,))
    cardinality = (1 << (rank.m * rank.n)) * len(pt.elements) * len(vt.elements)
    if cardinality > cap:
        raise SizeCapExceeded(cardinality, cap)
    g = CrystalGraph(rank, lam, model, st, pt, vt, offset)
    start = (0, _unique_source(pt), _unique_source(vt))
    g.generate(start)
    return g


def _unique_source(table):
    srcs = table.sources()
    return srcs[0] if srcs else 0
