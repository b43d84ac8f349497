"""Structural facts checked exhaustively on small hosts.

Each ``check_*`` function scans one host (wrapped in a Ctx) for every
configuration matching its hypothesis and asserts the conclusion on each
hit.  The return value is the number of hits, so a runner can tell the
difference between "held everywhere" and "never applied"; a suite only
counts if its hypothesis fired on at least one host.

Hosts are expected to be simple and Tutte 3-connected.  The minor tag n
follows the library convention: None means no minor condition.  Two checks
(the collinearity of stubborn cocircuit elements, and fat lines after a
contraction) are stated without a minor tag and always use the plain
notions, whatever the Ctx carries.
"""

import random
from itertools import combinations, combinations_with_replacement, product

import oracles

from carambole.contractibility import (has_minor_bool,
                                       is_vertically_contractible_set,
                                       n_deletable_elements,
                                       vertically_contractible_elements)
from carambole.free_family import is_free_family
from carambole.matroid import sort_labels
from carambole.structures import find_biwebs, find_caramboles, \
    find_vertbarriers, rank3_cocircuits


class Ctx:
    """One (host, minor tag) pair with lazily cached scan results."""

    def __init__(self, m, n=None, tag=""):
        self.m = m
        self.n = n
        self.tag = tag or "host"
        self._cache = {}

    def __repr__(self):
        return "Ctx(%s, n=%s)" % (self.tag, "-" if self.n is None else "set")

    def _get(self, key, fn):
        if key not in self._cache:
            self._cache[key] = fn()
        return self._cache[key]

    @property
    def labs(self):
        return self._get("labs", lambda: sort_labels(self.m.labels))

    @property
    def rank(self):
        return self._get("rank", self.m.rank)

    @property
    def n_ok(self):
        """Does the host actually have the tagged minor?"""
        return self._get("n_ok", lambda: self.n is None or
                         has_minor_bool(self.m, self.n))

    @property
    def vc(self):
        return self._get("vc", lambda: frozenset(
            vertically_contractible_elements(self.m, self.n)))

    @property
    def vc_plain(self):
        if self.n is None:
            return self.vc
        return self._get("vc_plain", lambda: frozenset(
            vertically_contractible_elements(self.m, None)))

    @property
    def plain_deletable(self):
        return self._get("plain_deletable", lambda: frozenset(
            e for e in self.labs
            if self.m.delete([e]).is_tutte_3connected()))

    @property
    def n_deletable(self):
        return self._get("n_deletable", lambda: frozenset(
            n_deletable_elements(self.m, self.n)))

    @property
    def rank3_cocircuits(self):
        return self._get("r3cc", lambda: rank3_cocircuits(self.m))

    @property
    def vertbarriers(self):
        return self._get("vb", lambda: find_vertbarriers(self.m, self.n))

    @property
    def caramboles(self):
        return self._get("car", lambda: find_caramboles(self.m, self.n))

    @property
    def filament_lines(self):
        return self._get("fil", lambda: frozenset(
            frozenset(c.ys) for c in self.caramboles))

    @property
    def biwebs(self):
        return self._get("bw", lambda: find_biwebs(self.m, self.n))

    @property
    def triangles(self):
        return self._get("tri", self.m.triangles)

    @property
    def lines(self):
        return self._get("lines", lambda: [frozenset(f)
                                           for f in self.m.nontrivial_lines()])

    def vertical(self, subset):
        key = ("vert", frozenset(subset))
        if key not in self._cache:
            self._cache[key] = is_vertically_contractible_set(
                self.m, self.n, sort_labels(subset))[0]
        return self._cache[key]

    @property
    def rank3_restrictions(self):
        """Restrictions to closures of the rank-3 cocircuits, deduplicated."""
        def build():
            seen = set()
            out = []
            if self.rank == 3:
                seen.add(frozenset(self.labs))
                out.append(self.m)
            for cstar in self.rank3_cocircuits:
                flat = frozenset(self.m.closure(cstar))
                if flat in seen:
                    continue
                seen.add(flat)
                out.append(self.m.restrict(flat))
            return out
        return self._get("r3rest", build)


def _two_line_bases(h):
    """Base points making h the parallel connection of two nontrivial lines.

    For a simple rank-3 matroid this is exactly: the ground set is the
    union of two rank-2 flats whose intersection is one point.
    """
    if h.rank() != 3:
        return ()
    ground = set(h.labels)
    lines = [set(f) for f in h.nontrivial_lines()]
    out = set()
    for l1, l2 in combinations(lines, 2):
        inter = l1 & l2
        if len(inter) == 1 and (l1 | l2) == ground:
            out.update(inter)
    return tuple(sort_labels(out))


# ---------------------------------------------------------------------------
# Foundations
# ---------------------------------------------------------------------------

def _sample_subsets(ctx, limit=320):
    labs = ctx.labs
    n = len(labs)
    if (1 << n) <= limit:
        subs = [tuple(labs[i] for i in range(n) if mask >> i & 1)
                for mask in range(1 << n)]
    else:
        rng = random.Random(1009 + 31 * n)
        subs = [()]
        while len(subs) < limit:
            subs.append(tuple(e for e in labs if rng.random() < 0.5))
    return subs


def check_rank_axioms(ctx):
    m = ctx.m
    subs = _sample_subsets(ctx)
    fired = 0
    for a in subs:
        ra = m.rank(a)
        assert 0 <= ra <= len(a), (ctx.tag, a)
        for e in ctx.labs[:4]:
            if e in a:
                continue
            rae = m.rank(a + (e,))
            assert ra <= rae <= ra + 1, (ctx.tag, a, e)
        fired += 1
    rng = random.Random(733 + m.size)
    for _ in range(160):
        a = set(rng.choice(subs))
        b = set(rng.choice(subs))
        lhs = m.rank(a | b) + m.rank(a & b)
        rhs = m.rank(a) + m.rank(b)
        assert lhs <= rhs, (ctx.tag, sorted(a), sorted(b))
        fired += 1
    return fired


def check_duality_identity(ctx):
    m = ctx.m
    md = m.dual()
    r = m.rank()
    ground = set(ctx.labs)
    fired = 0
    for a in _sample_subsets(ctx):
        expect = len(a) + m.rank(ground - set(a)) - r
        assert md.rank(a) == expect, (ctx.tag, a)
        assert md.dual().rank(a) == m.rank(a), (ctx.tag, a)
        fired += 1
    return fired


def check_si_vertical_equivalence(ctx):
    """Partition-scan vertical 3-connectivity against the si reading."""
    m = ctx.m
    minors = [m]
    minors += [m.contract([e]) for e in ctx.labs]
    minors += [m.delete([e]) for e in ctx.labs]
    fired = 0
    for q in minors:
        if q.rank() < 3 or q.size > 18:
            continue
        scan = not q.vertical_separation_exists(3)
        si3 = q.simplify()[0].is_tutte_3connected()
        assert scan == si3, (ctx.tag, sorted(q.labels, key=str))
        assert q.is_vertically_3connected() == si3, (ctx.tag,)
        fired += 1
    return fired


# ---------------------------------------------------------------------------
# Rank-3 hosts and cocircuit geometry
# ---------------------------------------------------------------------------

def check_rank3_two_point_circuit_or_split(ctx):
    """Connected simple rank-3 hosts: any two elements share a 4-circuit,
    unless the host splits as two lines glued at one of them."""
    fired = 0
    for h in ctx.rank3_restrictions:
        if not oracles.brute_connected(h):
            continue
        fours = [set(c) for c in h.circuits(4) if len(c) == 4]
        bases = set(_two_line_bases(h))
        for a, b in combinations_with_replacement(sort_labels(h.labels), 2):
            ok = (a in bases or b in bases
                  or any(a in c and b in c for c in fours))
            assert ok, (ctx.tag, a, b)
            fired += 1
    return fired


def check_cocircuit_pair_union_rank(ctx):
    """Two distinct cocircuits always span rank 4 or more (rank >= 4)."""
    if ctx.rank < 4:
        return 0
    cocs = [set(c) for c in ctx.m.cocircuits()]
    fired = 0
    for c, d in combinations(cocs, 2):
        assert ctx.m.rank(c | d) >= 4, (ctx.tag, sorted(c, key=str),
                                        sorted(d, key=str))
        fired += 1
    return fired


def check_apex_contractions_agree(ctx):
    """Contracting the apex with any element of its rank-3 cocircuit gives
    the same simplification up to isomorphism; the contractibility verdict
    of the pair is likewise uniform over the cocircuit."""
    if not ctx.n_ok:
        return 0
    m = ctx.m
    fired = 0
    for cstar in ctx.rank3_cocircuits:
        apexes = sort_labels(m.closure(cstar) - set(cstar))
        for p in apexes:
            ref = None
            verdicts = set()
            for x in cstar:
                si_px = m.contract([p, x]).simplify()[0]
                if ref is None:
                    ref = si_px
                else:
                    assert ref.find_isomorphism(si_px) is not None, \
                        (ctx.tag, cstar, p, x)
                verdicts.add(ctx.vertical((x, p)))
            assert len(verdicts) == 1, (ctx.tag, cstar, p)
            fired += 1
    return fired


def check_four_circuit_elements_contract(ctx):
    """Inside the closure of a rank-3 cocircuit, membership in a 4-circuit
    certifies vertical contractibility."""
    if not ctx.n_ok:
        return 0
    m = ctx.m
    fired = 0
    for cstar in ctx.rank3_cocircuits:
        h = m.restrict(m.closure(cstar))
        fours = [set(c) for c in h.circuits(4) if len(c) == 4]
        for x in cstar:
            if not any(x in c for c in fours):
                continue
            assert x in ctx.vc, (ctx.tag, cstar, x)
            fired += 1
    return fired


def check_stubborn_cocircuit_elements_collinear(ctx):
    """Two or more non-contractible elements in a rank-3 cocircuit lie on
    one nontrivial line, and the cocircuit still offers a contractible
    element.  Plain notions, no minor tag."""
    fired = 0
    for cstar in ctx.rank3_cocircuits:
        stubborn = [x for x in cstar if x not in ctx.vc_plain]
        if len(stubborn) < 2:
            continue
        sset = set(stubborn)
        assert any(sset <= line for line in ctx.lines), (ctx.tag, cstar)
        assert any(x in ctx.vc_plain for x in cstar), (ctx.tag, cstar)
        fired += 1
    return fired


# ---------------------------------------------------------------------------
# Vertbarriers
# ---------------------------------------------------------------------------

def check_barrier_coloop_contracts(ctx):
    if not ctx.n_ok:
        return 0
    fired = 0
    for vb in ctx.vertbarriers:
        if vb.connected:
            continue
        assert vb.coloop in ctx.vc, (ctx.tag, vb.cocircuit, vb.apex)
        fired += 1
    return fired


def check_barrier_line_propagates(ctx):
    """A non-contractible element y of a disconnected barrier's line is the
    apex of another barrier containing the rest of the line."""
    if not ctx.n_ok:
        return 0
    fired = 0
    for vb in ctx.vertbarriers:
        if vb.connected:
            continue
        line = set(vb.line)
        for y in sort_labels(line):
            if y in ctx.vc:
                continue
            rest = line - {y}
            ok = any(w.apex == y and rest <= set(w.cocircuit)
                     for w in ctx.vertbarriers)
            assert ok, (ctx.tag, vb.cocircuit, vb.apex, y)
            fired += 1
    return fired


def check_connected_barrier_dichotomy(ctx):
    """Connected barriers: the whole cocircuit contracts, or the apexed
    restriction is two glued lines and everything off the base contracts."""
    if not ctx.n_ok:
        return 0
    m = ctx.m
    fired = 0
    for vb in ctx.vertbarriers:
        if not vb.connected:
            continue
        fired += 1
        if all(x in ctx.vc for x in vb.cocircuit):
            continue
        h = m.restrict(set(vb.cocircuit) | {vb.apex})
        bases = _two_line_bases(h)
        ok = any(all(x in ctx.vc for x in vb.cocircuit if x != b)
                 for b in bases)
        assert ok, (ctx.tag, vb.cocircuit, vb.apex)
    return fired


def check_barrier_line_filament_or_vc(ctx):
    """Rank >= 4: a disconnected barrier's line is a filament of the host
    or carries a contractible element."""
    if ctx.rank < 4 or not ctx.n_ok:
        return 0
    fired = 0
    for vb in ctx.vertbarriers:
        if vb.connected:
            continue
        line = frozenset(vb.line)
        ok = line in ctx.filament_lines or any(y in ctx.vc for y in line)
        assert ok, (ctx.tag, vb.cocircuit, vb.apex)
        fired += 1
    return fired


# ---------------------------------------------------------------------------
# Biwebs
# ---------------------------------------------------------------------------

def check_strict_biweb_shared_rim_contracts(ctx):
    """Rank >= 4: in a strict biweb the element shared by both triads is
    vertically contractible."""
    if ctx.rank < 4 or not ctx.n_ok:
        return 0
    fired = 0
    for bw in ctx.biwebs:
        if not bw.strict:
            continue
        assert bw.ys[2] in ctx.vc, (ctx.tag, bw.ys, bw.x1, bw.x2)
        fired += 1
    return fired


def check_biweb_rank_floor(ctx):
    if ctx.rank < 4 or not ctx.n_ok:
        return 0
    fired = 0
    for bw in ctx.biwebs:
        w = set(bw.ys) | {bw.x1, bw.x2}
        assert ctx.m.rank(w) >= 4, (ctx.tag, bw.ys, bw.x1, bw.x2)
        fired += 1
    return fired


def check_biweb_triangle_unique(ctx):
    """With no deletable elements around, the biweb triangle is the only
    triangle meeting the biweb.

    Needs the host to keep rank 3 after contracting the triangle, so rank 5
    up.  At rank 4 the claim is genuinely false for a degenerate minor tag:
    the rank-4 wheel has a biweb meeting two fan triangles besides its own,
    and with a rank-3 tag no rank-4 host can produce a biweb at all.
    """
    if ctx.rank < 5 or not ctx.n_ok or ctx.n_deletable:
        return 0
    fired = 0
    for bw in ctx.biwebs:
        w = set(bw.ys) | {bw.x1, bw.x2}
        meeting = [t for t in ctx.triangles if set(t) & w]
        assert len(meeting) == 1 and set(meeting[0]) == set(bw.ys), \
            (ctx.tag, bw.ys, bw.x1, bw.x2, meeting)
        fired += 1
    return fired


def check_biweb_triangle_contracts(ctx):
    """Same scope as the uniqueness check above (it is what makes the
    contraction simple)."""
    if ctx.rank < 5 or not ctx.n_ok or ctx.n_deletable:
        return 0
    fired = 0
    for bw in ctx.biwebs:
        assert ctx.m.contract(bw.ys).is_tutte_3connected(), \
            (ctx.tag, bw.ys, bw.x1, bw.x2)
        fired += 1
    return fired


def check_biweb_outside_apex_pins_rank(ctx):
    """An element outside the biweb's span that contracts with the triangle
    but not alone forces the host rank to be exactly 5."""
    if ctx.rank < 4 or not ctx.n_ok:
        return 0
    m = ctx.m
    fired = 0
    for bw in ctx.biwebs:
        w = set(bw.ys) | {bw.x1, bw.x2}
        outside = [p for p in ctx.labs if p not in m.closure(w)]
        for p in outside:
            if p in ctx.vc:
                continue
            if not ctx.vertical(tuple(bw.ys) + (p,)):
                continue
            assert ctx.rank == 5, (ctx.tag, bw.ys, p)
            fired += 1
    return fired


# ---------------------------------------------------------------------------
# Lifting through deletions and contractions
# ---------------------------------------------------------------------------

def check_vc_survives_host_deletion(ctx):
    """If deleting x keeps the host 3-connected, contractibility verdicts
    computed in the smaller host hold in the full one."""
    if not ctx.n_ok:
        return 0
    m = ctx.m
    fired = 0
    for x in ctx.plain_deletable:
        dm = m.delete([x])
        for e in vertically_contractible_elements(dm, ctx.n):
            assert e in ctx.vc, (ctx.tag, x, e)
        fired += 1
    return fired


def check_fat_line_after_contraction(ctx):
    """Four collinear points of a 3-connected single-element contraction
    yield a deletable element or two contractible ones among them.  Plain
    notions, no minor tag."""
    m = ctx.m
    fired = 0
    for x in ctx.labs:
        mx = m.contract([x])
        if mx.size < 5 or not mx.is_tutte_3connected():
            continue
        if mx.rank() == 2:
            flats = [tuple(sorted(mx.labels, key=str))]
        else:
            flats = mx.nontrivial_lines()
        for flat in flats:
            if len(flat) < 4:
                continue
            for quad in combinations(sort_labels(flat), 4):
                dels = [y for y in quad if y in ctx.plain_deletable]
                vcs = [y for y in quad if y in ctx.vc_plain]
                assert dels or len(vcs) >= 2, (ctx.tag, x, quad)
                fired += 1
    return fired


# ---------------------------------------------------------------------------
# Free families
# ---------------------------------------------------------------------------

def _family_universe(ctx):
    members = [(e,) for e in sort_labels(ctx.vc)]
    seen = set()
    for car in ctx.caramboles:
        if car.ys not in seen:
            seen.add(car.ys)
            members.append(car.ys)
    return members


def check_free_family_closure_subsets(ctx):
    """Replacing each member of a free family by any nonempty subset of its
    closure keeps the family free."""
    if not ctx.n_ok:
        return 0
    m = ctx.m
    fired = 0
    universe = _family_universe(ctx)
    pairs = [pp for pp in combinations(universe, 2)
             if is_free_family(m, pp)[0]]
    for family in pairs[:60]:
        choices = []
        for a in family:
            cl = sort_labels(m.closure(a))
            opts = [tuple(cl), (cl[0],)]
            if len(cl) >= 2:
                opts.append((cl[0], cl[1]))
            choices.append(opts)
        for picked in product(*choices):
            ok, info = is_free_family(m, picked)
            assert ok, (ctx.tag, family, picked, info)
            fired += 1
    return fired


def check_free_family_lifts_through_contraction(ctx):
    """A free family of M/X whose members keep their rank in M extends by X
    itself to a free family of M."""
    m = ctx.m
    fired = 0
    basis = []
    for e in ctx.labs:
        if m.rank(basis + [e]) == len(basis) + 1:
            basis.append(e)
    xsets = [(e,) for e in ctx.labs] + list(combinations(basis, 2))
    for xset in xsets:
        mx = m.contract(xset)
        cands = [(a,) for a in sort_labels(mx.labels) if mx.rank([a]) == 1]
        if mx.rank() >= 3:
            cands += [tuple(sort_labels(f)) for f in mx.nontrivial_lines()
                      if m.rank(f) == 2]
        keep = [c for c in cands if mx.rank(c) == m.rank(c)]
        families = [(c,) for c in keep]
        families += [pp for pp in combinations(keep, 2)
                     if not (set(pp[0]) & set(pp[1]))
                     and is_free_family(mx, pp)[0]]
        for fam in families[:80]:
            if len(fam) == 1 and not is_free_family(mx, fam)[0]:
                continue
            ok, info = is_free_family(m, (tuple(xset),) + fam)
            assert ok, (ctx.tag, xset, fam, info)
            fired += 1
    return fired


ALL_CHECKS = (
    ("rank_axioms", check_rank_axioms),
    ("duality_identity", check_duality_identity),
    ("si_vertical_equivalence", check_si_vertical_equivalence),
    ("rank3_two_point_circuit_or_split", check_rank3_two_point_circuit_or_split),
    ("cocircuit_pair_union_rank", check_cocircuit_pair_union_rank),
    ("apex_contractions_agree", check_apex_contractions_agree),
    ("four_circuit_elements_contract", check_four_circuit_elements_contract),
    ("barrier_coloop_contracts", check_barrier_coloop_contracts),
    ("barrier_line_propagates", check_barrier_line_propagates),
    ("connected_barrier_dichotomy", check_connected_barrier_dichotomy),
    ("barrier_line_filament_or_vc", check_barrier_line_filament_or_vc),
    ("strict_biweb_shared_rim_contracts", check_strict_biweb_shared_rim_contracts),
    ("stubborn_cocircuit_elements_collinear",
     check_stubborn_cocircuit_elements_collinear),
    ("vc_survives_host_deletion", check_vc_survives_host_deletion),
    ("fat_line_after_contraction", check_fat_line_after_contraction),
    ("biweb_rank_floor", check_biweb_rank_floor),
    ("biweb_triangle_unique", check_biweb_triangle_unique),
    ("biweb_triangle_contracts", check_biweb_triangle_contracts),
    ("biweb_outside_apex_pins_rank", check_biweb_outside_apex_pins_rank),
    ("free_family_closure_subsets", check_free_family_closure_subsets),
    ("free_family_lifts_through_contraction",
     check_free_family_lifts_through_contraction),
)


def run_checks(ctxs, checks=ALL_CHECKS):
    """Totals of hypothesis hits per check over the given contexts."""
    fired = {name: 0 for name, _ in checks}
    for ctx in ctxs:
        for name, fn in checks:
            fired[name] += fn(ctx)
    return fired


def standard_contexts(pool=None):
    """The acceptance instance set: every 3-connected simple graph on up to
    six vertices (plain, and tagged with M(K4) where the rank allows a
    proper minor), plus the 200-instance random explicit pool."""
    from carambole.graphs import canonical_g6, complete_graph, corpus
    from carambole.matroid import graphic_matroid

    k4 = graphic_matroid(complete_graph(4))
    out = []
    for g in corpus(6):
        m = graphic_matroid(g)
        tag = canonical_g6(g)
        out.append(Ctx(m, None, tag))
        if m.rank() >= 4:
            out.append(Ctx(m, k4, tag + "+K4"))
    if pool is None:
        pool = oracles.random_matroid_pool()
    for i, pm in enumerate(pool):
        out.append(Ctx(pm, None, "rand%03d" % i))
    return out


if __name__ == "__main__":
    import time

    start = time.time()
    ctxs = standard_contexts()
    print("%d contexts built in %.1fs" % (len(ctxs), time.time() - start))
    t0 = time.time()
    fired = run_checks(ctxs)
    for name, cnt in fired.items():
        flag = "" if cnt else "   <- never fired"
        print("%-42s %8d%s" % (name, cnt, flag))
    print("checks done in %.1fs" % (time.time() - t0))
