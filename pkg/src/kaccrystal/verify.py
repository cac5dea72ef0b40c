"""Verification suite: crystal axioms, connectedness, characters, bridges.

Each check returns a CheckResult with a machine-readable witness on failure.
The sweep runs every dominant weight with coordinates in a box for a list of
ranks.  Weights that define literally the same graph up to a constant weight
offset (their factor shapes coincide after shifting into partition range)
share one full check run; all three graph checks are invariant under that
offset, and the sharing is recorded in the result counts.
"""

import json
import time
from collections import Counter
from dataclasses import dataclass, field

from . import base, embedding, kac, rsk, tableaux, wordops
from .errors import KacCrystalError

DEFAULT_RANKS = ((1, 1), (2, 1), (1, 2), (2, 2), (3, 2))
DEFAULT_BOX = (-2, 4)


@dataclass
class CheckResult:
    name: str
    ok: bool
    witness: str = None
    counts: dict = field(default_factory=dict)
    ms: float = 0.0

    def to_json(self):
        return {
            "name": self.name,
            "pass": self.ok,
            "witness": self.witness,
            "counts": self.counts,
            "ms": round(self.ms, 3),
        }


def _timed(fn):
    def wrapper(*args, **kwargs):
        t0 = time.perf_counter()
        res = fn(*args, **kwargs)
        res.ms = (time.perf_counter() - t0) * 1000.0
        return res

    return wrapper


@_timed
def check_axioms(g):
    """Per-color degrees, raising/lowering reciprocity, weight steps."""
    rank = g.rank
    roots = {k: base.simple_root(rank, k) for k in base.colors(rank)}
    outdeg = set()
    indeg = set()
    for src, k, dst in g.edges:
        if (src, k) in outdeg:
            return CheckResult("axioms", False, "two %d-edges out of vertex %d" % (k, src))
        if (dst, k) in indeg:
            return CheckResult("axioms", False, "two %d-edges into vertex %d" % (k, dst))
        outdeg.add((src, k))
        indeg.add((dst, k))
        if g.step(src, k, wordops.LOWER) != dst:
            return CheckResult(
                "axioms", False, "lowering at color %d from vertex %d misses edge" % (k, src)
            )
        if g.step(dst, k, wordops.RAISE) != src:
            return CheckResult(
                "axioms", False, "raising at color %d from vertex %d not reciprocal" % (k, dst)
            )
        expect = tuple(a - b for a, b in zip(g.weight_coords(src), roots[k].coords))
        if g.weight_coords(dst) != expect:
            return CheckResult(
                "axioms", False, "weight step wrong on edge (%d, %d, %d)" % (src, k, dst)
            )
        if k == 0:
            if g.step(dst, 0, wordops.LOWER) is not None:
                return CheckResult("axioms", False, "color 0 applied twice at vertex %d" % src)
            if g.step(src, 0, wordops.RAISE) is not None:
                return CheckResult("axioms", False, "color 0 raised twice at vertex %d" % dst)
    return CheckResult("axioms", True, counts={"vertices": len(g.vertices), "edges": len(g.edges)})


@_timed
def check_connected(g):
    """Single component plus a census of raising-killed vertices.

    Exactly one source may carry the generating weight; sources at other
    weights exist and are reported, not rejected.
    """
    nv = len(g.vertices)
    adj = [[] for _ in range(nv)]
    for src, _, dst in g.edges:
        adj[src].append(dst)
        adj[dst].append(src)
    seen = [False] * nv
    components = 0
    for v0 in range(nv):
        if seen[v0]:
            continue
        components += 1
        stack = [v0]
        seen[v0] = True
        while stack:
            v = stack.pop()
            for w in adj[v]:
                if not seen[w]:
                    seen[w] = True
                    stack.append(w)
    sources = g.source_vertices()
    lam_coords = g.lam.coords
    genuine = [v for v in sources if g.weight_coords(v) == lam_coords]
    fakes = [v for v in sources if g.weight_coords(v) != lam_coords]
    ok = components == 1 and len(genuine) == 1
    witness = None
    if components != 1:
        witness = "%d components" % components
    elif len(genuine) != 1:
        witness = "%d sources at the generating weight" % len(genuine)
    elif fakes:
        witness = "fake source example: vertex %d at weight %s" % (
            fakes[0],
            g.weight(fakes[0]),
        )
    return CheckResult(
        "connected",
        ok,
        witness,
        {"components": components, "sources": len(sources), "fake_sources": len(fakes)},
    )


@_timed
def check_character(g):
    """Vertex count and weight multiset against the factored oracle.

    The oracle multiplies the root power set with both tableau factors,
    whose fillings are enumerated directly, never through the operators.
    """
    expected = (
        (1 << (g.rank.m * g.rank.n))
        * len(g.plus_table.elements)
        * len(g.minus_table.elements)
    )
    if len(g.vertices) != expected:
        return CheckResult(
            "character",
            False,
            "vertex count %d, expected %d" % (len(g.vertices), expected),
        )
    off = g.offset.coords
    oracle = Counter()
    partial = Counter()
    for ws in g.s_table.weights:
        for wp in g.plus_table.weights:
            partial[tuple(a + b for a, b in zip(ws, wp))] += 1
    for key, mult in partial.items():
        for wv in g.minus_table.weights:
            oracle[tuple(a + b + c for a, b, c in zip(key, wv, off))] += mult
    got = Counter(g.weight_coords(v) for v in range(len(g.vertices)))
    if got != oracle:
        diff = next(iter((got - oracle) + (oracle - got)))
        return CheckResult(
            "character", False, "weight multiplicity differs at %s" % (diff,)
        )
    return CheckResult("character", True, counts={"vertices": expected})


@_timed
def check_rho_commutation(lam, ell=None):
    """Exhaustive round-trip, bijectivity and intertwining of the insertion
    map on the full domain of a weight in the window."""
    rank = lam.rank
    if ell is None:
        ell = kac.dual_ell(lam)
    domain = rsk.enumerate_domain(lam, ell)
    image_keys = set(k.key() for k in rsk.enumerate_image(lam, ell))
    seen = set()
    ks = base.colors(rank)
    for b in domain:
        try:
            img = rsk.rho(b)
        except KacCrystalError as exc:
            return CheckResult("rho", False, "forward map failed on %s: %s" % (b, exc))
        key = img.key()
        if key in seen:
            return CheckResult("rho", False, "two elements share image %s" % (key,))
        seen.add(key)
        if key not in image_keys:
            return CheckResult("rho", False, "image %s outside the target set" % (key,))
        back = rsk.rho_inverse(img)
        if back != b:
            return CheckResult("rho", False, "round trip failed at %s" % (b,))
        if img.weight() != b.weight():
            return CheckResult("rho", False, "weight not preserved at %s" % (b,))
        for k in ks:
            for direction in (wordops.RAISE, wordops.LOWER):
                lhs = kac.apply_kac(k, direction, b)
                rhs = rsk.apply_kappa(k, direction, img)
                if (lhs is None) != (rhs is None):
                    return CheckResult(
                        "rho",
                        False,
                        "null mismatch at color %d (%s) on %s" % (k, direction, b),
                    )
                if lhs is not None and rsk.rho(lhs).key() != rhs.key():
                    return CheckResult(
                        "rho",
                        False,
                        "intertwining fails at color %d (%s) on %s" % (k, direction, b),
                    )
    if len(seen) != len(image_keys):
        return CheckResult(
            "rho",
            False,
            "image has %d elements, target %d" % (len(seen), len(image_keys)),
        )
    return CheckResult("rho", True, counts={"domain": len(domain)})


@_timed
def check_compatibility(rank, shape, cap=kac.DEFAULT_CAP):
    """The hook tableau crystal embeds into its Kac crystal.

    Checks injectivity, weight preservation, intertwining, the image size
    against the brute-force filling count, and the partial inverse.
    """
    shape = base.normalize_partition(shape)
    lam = base.hook_weight(rank, shape)
    tabs = tableaux.enumerate_sst(base.ALPHABET_B, rank, shape)
    images = {}
    ks = base.colors(rank)
    for t in tabs:
        b = embedding.xi(rank, t)
        if b.weight() != t.weight(rank):
            return CheckResult("compatibility", False, "weight differs at %s" % (t.rows,))
        key = b.key()
        if key in images:
            return CheckResult("compatibility", False, "two tableaux map to %s" % (key,))
        images[key] = t
        back = embedding.pi_bar(rank, b)
        if back != t:
            return CheckResult(
                "compatibility", False, "partial inverse fails at %s" % (t.rows,)
            )
    g = kac.generate_graph(lam, cap=cap)
    index = {t.rows: t for t in tabs}
    for t in tabs:
        b = embedding.xi(rank, t)
        for k in ks:
            for direction in (wordops.RAISE, wordops.LOWER):
                moved = wordops.tableau_apply(rank, k, direction, t)
                if moved is None:
                    continue
                target = kac.apply_kac(k, direction, b)
                if target is None or target.key() != embedding.xi(rank, moved).key():
                    return CheckResult(
                        "compatibility",
                        False,
                        "intertwining fails at color %d (%s) on %s" % (k, direction, t.rows),
                    )
    image_keys = set(images)
    hits = 0
    for v in range(len(g.vertices)):
        b = g.element(v)
        back = embedding.pi_bar(rank, b)
        if b.key() in image_keys:
            hits += 1
            if back is None or back.rows not in index:
                return CheckResult(
                    "compatibility", False, "image element rejected at vertex %d" % v
                )
        elif back is not None and embedding.xi(rank, back).key() != b.key():
            return CheckResult(
                "compatibility", False, "inverse leaves the image at vertex %d" % v
            )
    if hits != len(tabs):
        return CheckResult(
            "compatibility",
            False,
            "image size %d, filling count %d" % (hits, len(tabs)),
        )
    return CheckResult(
        "compatibility", True, counts={"tableaux": len(tabs), "vertices": len(g.vertices)}
    )


@_timed
def check_reading_order(rank, shape):
    """Operator results agree for both admissible reading orders."""
    shape = base.normalize_partition(shape)
    tabs = tableaux.enumerate_sst(base.ALPHABET_B, rank, shape)
    for t in tabs:
        for k in base.colors(rank):
            for direction in (wordops.RAISE, wordops.LOWER):
                a = wordops.tableau_apply(rank, k, direction, t, tableaux.READ_BY_COLUMNS)
                b = wordops.tableau_apply(rank, k, direction, t, tableaux.READ_BY_ROWS)
                if a != b:
                    return CheckResult(
                        "reading-order",
                        False,
                        "orders disagree at color %d (%s) on %s" % (k, direction, t.rows),
                    )
    return CheckResult("reading-order", True, counts={"tableaux": len(tabs)})


# ---------------------------------------------------------------------------
# sweeps


def dominant_tuples(length, lo, hi):
    out = []

    def rec(acc, ceiling):
        if len(acc) == length:
            out.append(tuple(acc))
            return
        for v in range(ceiling, lo - 1, -1):
            acc.append(v)
            rec(acc, v)
            acc.pop()

    rec([], hi)
    return out


def default_instances(ranks=DEFAULT_RANKS, box=DEFAULT_BOX):
    lo, hi = box
    for m, n in ranks:
        rank = base.make_rank(m, n)
        for bs in dominant_tuples(m, lo, hi):
            for us in dominant_tuples(n, lo, hi):
                yield base.Weight(rank, bs + us)


def check_graph_instance(lam, cap=kac.DEFAULT_CAP):
    g = kac.generate_graph(lam, cap=cap)
    return [check_axioms(g), check_connected(g), check_character(g)]


def _class_key(lam):
    shape_plus, shape_minus, _ = kac._standard_factors(lam)
    return (lam.rank, base.normalize_partition(shape_plus), shape_minus)


def run_sweep(ranks=DEFAULT_RANKS, box=DEFAULT_BOX, cap=kac.DEFAULT_CAP, threads=1):
    """Graph checks over every dominant weight in the box.

    Returns (reports, ok).  Weights sharing a graph up to weight offset are
    checked once; their reports point at the representative.
    """
    instances = list(default_instances(ranks, box))
    classes = {}
    order = []
    for lam in instances:
        key = _class_key(lam)
        if key not in classes:
            classes[key] = lam
            order.append(key)
    rep_results = {}
    if threads > 1:
        import concurrent.futures

        args = [(classes[key].rank, str(classes[key]), cap) for key in order]
        with concurrent.futures.ProcessPoolExecutor(max_workers=threads) as pool:
            for key, results in zip(order, pool.map(_sweep_worker, args)):
                rep_results[key] = results
    else:
        for key in order:
            rep_results[key] = check_graph_instance(classes[key], cap=cap)
    reports = []
    ok = True
    for lam in instances:
        key = _class_key(lam)
        rep = classes[key]
        checks = []
        for res in rep_results[key]:
            counts = dict(res.counts)
            if rep is not lam:
                counts["checked_as"] = str(rep)
            checks.append(
                CheckResult(res.name, res.ok, res.witness, counts, res.ms)
            )
            ok = ok and res.ok
        reports.append(
            {
                "instance": {"rank": [lam.rank.m, lam.rank.n], "lambda": str(lam)},
                "checks": [c.to_json() for c in checks],
            }
        )
    return reports, ok


def _sweep_worker(arg):
    (m, n), lam_text, cap = arg
    lam = base.Weight.parse(base.make_rank(m, n), lam_text)
    return check_graph_instance(lam, cap=cap)


def report_to_json(reports):
    return json.dumps(reports, indent=2, sort_keys=True)
