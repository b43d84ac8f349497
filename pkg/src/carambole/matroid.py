"""Matroids as thin views over a shared rank backend.

Every matroid here is stored flattened as ``dual?(base / C \\ D)``: a rank
backend on a fixed ground space, a contract mask, a delete mask, a dual flag,
and the surviving positions with their labels.  Taking minors or duals never
copies the backend, and rank results are cached on the backend keyed by base
masks, so a connectivity scan over many minors of one instance shares work.

The public surface speaks frozensets of labels; masks stay internal.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import DomainError
from .graphs import SimpleGraph, simple_graph_from_multigraph

_SCAN_LIMIT = 22


def _lkey(label):
    """Sort key tolerant of mixed int/str label universes."""
    if isinstance(label, bool) or not isinstance(label, int):
        return (1, str(label))
    return (0, label)


def sort_labels(labels):
    return sorted(labels, key=_lkey)


# ---------------------------------------------------------------------------
# Rank backends
# ---------------------------------------------------------------------------

class RankBase:
    """Rank oracle on masks over positions 0..n0-1, with a result cache."""

    def __init__(self, n0):
        self.n0 = n0
        self._cache = {}

    def rank_mask(self, mask):
        got = self._cache.get(mask)
        if got is None:
            got = self._rank(mask)
            self._cache[mask] = got
        return got

    def _rank(self, mask):
        raise NotImplementedError


class GraphicBase(RankBase):
    """Cycle matroid of a multigraph; loops and parallel edges allowed."""

    def __init__(self, nv, edge_list):
        super().__init__(len(edge_list))
        self.nv = nv
        self.edge_list = tuple(tuple(e) for e in edge_list)
        for u, v in self.edge_list:
            if not (0 <= u < nv and 0 <= v < nv):
                raise DomainError("edge endpoint outside vertex range")

    def _rank(self, mask):
        parent = {}

        def find(x):
            root = x
            while parent.get(root, root) != root:
                root = parent[root]
            while parent.get(x, x) != x:
                parent[x], x = root, parent[x]
            return root

        r = 0
        m = mask
        while m:
            b = m & -m
            m ^= b
            u, v = self.edge_list[b.bit_length() - 1]
            if u == v:
                continue
            ru, rv = find(u), find(v)
            if ru != rv:
                parent[ru] = rv
                r += 1
        return r


class LinearBase(RankBase):
    """Column matroid of a matrix, over GF(p) or over the rationals."""

    def __init__(self, columns, modulus=None):
        super().__init__(len(columns))
        if modulus is not None and modulus < 2:
            raise DomainError("modulus must be at least 2")
        self.modulus = modulus
        cols = []
        for col in columns:
            if modulus is None:
                cols.append(tuple(Fraction(x) for x in col))
            else:
                cols.append(tuple(int(x) % modulus for x in col))
        if cols and any(len(c) != len(cols[0]) for c in cols):
            raise DomainError("columns must share a height")
        self.columns = tuple(cols)

    def _rank(self, mask):
        p = self.modulus
        basis = []  # reduced columns with pivot index
        r = 0
        m = mask
        while m:
            b = m & -m
            m ^= b
            vec = list(self.columns[b.bit_length() - 1])
            for pivot, bcol in basis:
                coef = vec[pivot]
                if coef:
                    if p is None:
                        vec = [x - coef * y for x, y in zip(vec, bcol)]
                    else:
                        vec = [(x - coef * y) % p for x, y in zip(vec, bcol)]
            pivot = next((i for i, x in enumerate(vec) if x), None)
            if pivot is None:
                continue
            inv = (1 / vec[pivot]) if p is None else pow(vec[pivot], -1, p)
            if p is None:
                vec = [x * inv for x in vec]
            else:
                vec = [(x * inv) % p for x in vec]
            basis.append((pivot, vec))
            r += 1
        return r


class UniformBase(RankBase):
    def __init__(self, r, n):
        if not 0 <= r <= n:
            raise DomainError("uniform matroid needs 0 <= r <= n")
        super().__init__(n)
        self.r = r

    def rank_mask(self, mask):
        return min(self.r, mask.bit_count())

    def _rank(self, mask):
        return self.rank_mask(mask)


class TableBase(RankBase):
    """Rank function tabulated over all subsets; the universal small backend."""

    def __init__(self, n0, table):
        super().__init__(n0)
        if len(table) != 1 << n0:
            raise DomainError("rank table has wrong length")
        self.table = bytes(table)

    def rank_mask(self, mask):
        return self.table[mask]

    def _rank(self, mask):
        return self.table[mask]


class RelaxedBase(RankBase):
    """Relax one circuit-hyperplane of the inner backend into a basis."""

    def __init__(self, inner, ch_mask):
        super().__init__(inner.n0)
        full = (1 << inner.n0) - 1
        r = inner.rank_mask(full)
        if ch_mask.bit_count() != r or inner.rank_mask(ch_mask) != r - 1:
            raise DomainError("mask is not a circuit-hyperplane: wrong rank shape")
        m = ch_mask
        while m:
            b = m & -m
            m ^= b
            if inner.rank_mask(ch_mask & ~b) != r - 1:
                raise DomainError("mask is not a circuit: a proper subset is dependent")
        m = full & ~ch_mask
        while m:
            b = m & -m
            m ^= b
            if inner.rank_mask(ch_mask | b) != r:
                raise DomainError("mask is not a hyperplane: closure grows within rank")
        self.inner = inner
        self.ch_mask = ch_mask

    def rank_mask(self, mask):
        if mask == self.ch_mask:
            return self.inner.rank_mask(mask) + 1
        return self.inner.rank_mask(mask)

    def _rank(self, mask):
        return self.rank_mask(mask)


class ClosureBase(RankBase):
    """Backend defined by a closure operator; rank computed greedily.

    The caller promises the operator satisfies the matroid closure axioms;
    greedy counting of closure-escaping elements is then the rank.
    """

    def __init__(self, n0, closure_fn):
        super().__init__(n0)
        self.closure_fn = closure_fn

    def _rank(self, mask):
        flat = self.closure_fn(0)
        r = 0
        rest = mask & ~flat
        while rest:
            b = rest & -rest
            r += 1
            flat = self.closure_fn(flat | b)
            rest = mask & ~flat
        return r


# ---------------------------------------------------------------------------
# The view
# ---------------------------------------------------------------------------

class Matroid:
    __slots__ = ("base", "cmask", "dmask", "is_dual", "keep", "keepmask",
                 "labels", "_pos", "_rank_full")

    def __init__(self, base, cmask=0, dmask=0, is_dual=False, keep=None, labels=None):
        self.base = base
        self.cmask = cmask
        self.dmask = dmask
        self.is_dual = bool(is_dual)
        if keep is None:
            keep = tuple(i for i in range(base.n0) if not ((cmask | dmask) >> i) & 1)
        self.keep = tuple(keep)
        km = 0
        for i in self.keep:
            km |= 1 << i
        self.keepmask = km
        if km & (cmask | dmask):
            raise DomainError("kept positions overlap contracted or deleted ones")
        if labels is None:
            labels = self.keep
        self.labels = tuple(labels)
        if len(self.labels) != len(self.keep):
            raise DomainError("labels do not match kept positions")
        self._pos = {lab: p for lab, p in zip(self.labels, self.keep)}
        if len(self._pos) != len(self.labels):
            raise DomainError("duplicate labels")
        self._rank_full = None

    # -- basics ------------------------------------------------------------

    @property
    def size(self):
        return len(self.keep)

    def ground(self):
        return frozenset(self.labels)

    def __contains__(self, label):
        return label in self._pos

    def __repr__(self):
        return "Matroid(n=%d, r=%d%s)" % (self.size, self.rank(), ", dual" if self.is_dual else "")

    def _mask_of(self, subset):
        m = 0
        for lab in subset:
            try:
                m |= 1 << self._pos[lab]
            except KeyError:
                raise DomainError("label %r not in ground set" % (lab,)) from None
        return m

    def _labels_of(self, mask):
        out = []
        for lab, p in zip(self.labels, self.keep):
            if (mask >> p) & 1:
                out.append(lab)
        return frozenset(out)

    def _minor_rank(self, mask):
        base = self.base
        return base.rank_mask(mask | self.cmask) - base.rank_mask(self.cmask)

    def _rank_mask(self, mask):
        if not self.is_dual:
            return self._minor_rank(mask)
        return mask.bit_count() + self._minor_rank(self.keepmask & ~mask) \
            - self._minor_rank(self.keepmask)

    # -- rank and derived quantities ----------------------------------------

    def rank(self, subset=None):
        if subset is None:
            if self._rank_full is None:
                self._rank_full = self._rank_mask(self.keepmask)
            return self._rank_full
        return self._rank_mask(self._mask_of(subset))

    def corank(self, subset=None):
        return self.dual().rank(subset)

    def is_independent(self, subset):
        m = self._mask_of(subset)
        return self._rank_mask(m) == m.bit_count()

    def is_coindependent(self, subset):
        return self.dual().is_independent(subset)

    def closure(self, subset):
        m = self._mask_of(subset)
        r = self._rank_mask(m)
        out = m
        rest = self.keepmask & ~m
        while rest:
            b = rest & -rest
            rest ^= b
            if self._rank_mask(m | b) == r:
                out |= b
        return self._labels_of(out)

    def coclosure(self, subset):
        return self.dual().closure(subset)

    def loops(self):
        return frozenset(lab for lab in self.labels if self.rank([lab]) == 0)

    def coloops(self):
        return self.dual().loops()

    def lambda_(self, subset):
        m = self._mask_of(subset)
        return self._rank_mask(m) + self._rank_mask(self.keepmask & ~m) - self.rank()

    # -- minors --------------------------------------------------------------

    def minor(self, contract=(), delete=()):
        am = self._mask_of(contract)
        bm = self._mask_of(delete)
        if am & bm:
            raise DomainError("contract and delete sets overlap")
        if self.is_dual:
            ncm, ndm = self.cmask | bm, self.dmask | am
        else:
            ncm, ndm = self.cmask | am, self.dmask | bm
        gone = am | bm
        keep = tuple(p for p in self.keep if not (gone >> p) & 1)
        labels = tuple(lab for lab, p in zip(self.labels, self.keep) if not (gone >> p) & 1)
        return Matroid(self.base, ncm, ndm, self.is_dual, keep, labels)

    def contract(self, subset):
        return self.minor(contract=subset)

    def delete(self, subset):
        return self.minor(delete=subset)

    def restrict(self, subset):
        want = set(subset)
        return self.delete([lab for lab in self.labels if lab not in want])

    def dual(self):
        return Matroid(self.base, self.cmask, self.dmask, not self.is_dual,
                       self.keep, self.labels)

    def relabel(self, mapping):
        return Matroid(self.base, self.cmask, self.dmask, self.is_dual,
                       self.keep, tuple(mapping[lab] for lab in self.labels))

    # -- parallel / series structure -----------------------------------------

    def parallel_classes(self):
        """Non-loop elements grouped by their rank-1 flat."""
        groups = {}
        for lab in self.labels:
            if self.rank([lab]) == 0:
                continue
            key = self.closure([lab]) - self.loops()
            groups.setdefault(key, []).append(lab)
        return [frozenset(v) for _, v in
                sorted(groups.items(),
                       key=lambda kv: _lkey(sort_labels(kv[1])[0]))]

    def series_classes(self):
        return self.dual().parallel_classes()

    def is_simple(self):
        return not self.loops() and all(len(c) == 1 for c in self.parallel_classes())

    def is_cosimple(self):
        return self.dual().is_simple()

    def simplify(self):
        """Keep the least label of each parallel class, dropping loops.

        Returns (restriction, mapping) where mapping sends each non-loop
        label to its surviving representative.
        """
        reps = {}
        keep = []
        for cls in self.parallel_classes():
            rep = sort_labels(cls)[0]
            keep.append(rep)
            for lab in cls:
                reps[lab] = rep
        return self.restrict(keep), reps

    def cosimplify(self):
        sim, reps = self.dual().simplify()
        return sim.dual(), reps

    # -- circuits --------------------------------------------------------------

    def circuits(self, max_size=None):
        """All circuits with at most max_size elements, sorted.

        Found by extending independent sets: the unique circuit inside
        I + e is {x : (I + e) - x is independent}.
        """
        n = self.size
        cap = n if max_size is None else min(max_size, n)
        if max_size is None and n > 20:
            raise DomainError("uncapped circuit enumeration limited to 20 elements")
        positions = self.keep
        found = set()

        def extend(imask, isize, start):
            for idx in range(start, n):
                b = 1 << positions[idx]
                m2 = imask | b
                if self._rank_mask(m2) == isize + 1:
                    if isize + 1 <= cap - 1:
                        extend(m2, isize + 1, idx + 1)
                else:
                    circ = 0
                    mm = m2
                    while mm:
                        x = mm & -mm
                        mm ^= x
                        rest = m2 & ~x
                        if self._rank_mask(rest) == isize:
                            circ |= x
                    found.add(circ)
            # dependencies with elements before the anchor are caught when
            # those elements anchor their own independent sets
            if imask:
                for idx in range(n):
                    b = 1 << positions[idx]
                    if b & imask:
                        continue
                    m2 = imask | b
                    if self._rank_mask(m2) == isize:
                        circ = 0
                        mm = m2
                        while mm:
                            x = mm & -mm
                            mm ^= x
                            if self._rank_mask(m2 & ~x) == isize:
                                circ |= x
                        found.add(circ)

        extend(0, 0, 0)
        circuits = [tuple(sort_labels(self._labels_of(m))) for m in found]
        circuits = [c for c in circuits if len(c) <= cap]
        circuits.sort(key=lambda c: tuple(_lkey(x) for x in c))
        return circuits

    def cocircuits(self, max_size=None):
        return self.dual().circuits(max_size)

    def triangles(self):
        return [c for c in self.circuits(3) if len(c) == 3]

    def triads(self):
        return [c for c in self.cocircuits(3) if len(c) == 3]

    def fundamental_circuit(self, element, basis):
        """The unique circuit inside basis + element, for a dependent union."""
        bm = self._mask_of(basis)
        eb = 1 << self._pos[element]
        if eb & bm:
            raise DomainError("element already in the given independent set")
        if self._rank_mask(bm) != bm.bit_count():
            raise DomainError("given set is not independent")
        m2 = bm | eb
        if self._rank_mask(m2) == m2.bit_count():
            return None
        circ = 0
        mm = m2
        size = m2.bit_count()
        while mm:
            x = mm & -mm
            mm ^= x
            if self._rank_mask(m2 & ~x) == size - 1:
                circ |= x
        return self._labels_of(circ)

    def nontrivial_lines(self):
        """Rank-2 flats with at least 3 elements, via closures of pairs."""
        labs = sort_labels(self.labels)
        seen = set()
        out = []
        for i, a in enumerate(labs):
            if self.rank([a]) == 0:
                continue
            for b in labs[i + 1:]:
                if self.rank([a, b]) != 2:
                    continue
                fl = self.closure([a, b])
                if len(fl) >= 3 and fl not in seen:
                    seen.add(fl)
                    out.append(fl)
        out.sort(key=lambda f: (len(f), sort_labels(f)))
        return out

    # -- connectivity -----------------------------------------------------------

    def graphic_view(self):
        """(nv, edges aligned with labels) when the underlying backend is graphic.

        Contracted base edges merge their endpoints, deleted ones vanish;
        loops and parallel edges in the result are kept as such.  Returns
        None for non-graphic backends.  The dual flag is reported so callers
        can decide whether graph reasoning applies.
        """
        if not isinstance(self.base, GraphicBase):
            return None
        parent = list(range(self.base.nv))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        m = self.cmask
        while m:
            b = m & -m
            m ^= b
            u, v = self.base.edge_list[b.bit_length() - 1]
            ru, rv = find(u), find(v)
            if ru != rv:
                parent[ru] = rv
        roots = sorted({find(v) for v in range(self.base.nv)})
        remap = {r: i for i, r in enumerate(roots)}
        edges = []
        for p in self.keep:
            u, v = self.base.edge_list[p]
            edges.append((remap[find(u)], remap[find(v)]))
        return len(roots), edges, self.is_dual

    def _tutte_scan(self):
        n = self.size
        if n <= 1:
            return True
        if n > _SCAN_LIMIT:
            raise DomainError("partition scan limited to %d elements" % _SCAN_LIMIT)
        positions = self.keep[1:]
        r = self.rank()
        for sub in range(1, 1 << (n - 1)):
            am = 0
            s = sub
            idx = 0
            while s:
                if s & 1:
                    am |= 1 << positions[idx]
                s >>= 1
                idx += 1
            asz = am.bit_count()
            bsz = n - asz
            lam = self._rank_mask(am) + self._rank_mask(self.keepmask & ~am) - r
            if lam == 0:
                return False
            if asz >= 2 and bsz >= 2 and lam <= 1:
                return False
        return True

    def is_tutte_3connected(self):
        """No 1- or 2-separation; graphs route through vertex connectivity.

        Tutte connectivity is self-dual, so the dual flag on a graphic view
        does not matter.
        """
        n = self.size
        if n <= 1:
            return True
        gv = self.graphic_view()
        if gv is None or n <= 5:
            return self._tutte_scan()
        nv, edges, _ = gv
        seen = set()
        for u, v in edges:
            if u == v:
                return False
            key = (u, v) if u < v else (v, u)
            if key in seen:
                return False
            seen.add(key)
        sg = simple_graph_from_multigraph(nv, edges)
        if len(sg.edges) != n:
            raise DomainError("edge count changed while simplifying a simple view")
        return sg.is_three_connected()

    def vertical_separation_exists(self, k):
        """Direct scan: is there a vertical j-separation for some j < k?"""
        n = self.size
        if n > _SCAN_LIMIT:
            raise DomainError("partition scan limited to %d elements" % _SCAN_LIMIT)
        if n <= 1:
            return False
        r = self.rank()
        positions = self.keep[1:]
        for sub in range(1, 1 << (n - 1)):
            am = 0
            s = sub
            idx = 0
            while s:
                if s & 1:
                    am |= 1 << positions[idx]
                s >>= 1
                idx += 1
            ra = self._rank_mask(am)
            rb = self._rank_mask(self.keepmask & ~am)
            lam = ra + rb - r
            if lam <= k - 2 and min(ra, rb) > lam:
                return True
        return False

    def si_is_3connected(self):
        sim, _ = self.simplify()
        return sim.is_tutte_3connected()

    def is_vertically_3connected(self):
        """Vertical 3-connectivity; rank at most 2 passes by convention.

        For rank 3 and above this is equivalent to the simplification being
        Tutte 3-connected, which is the route taken here because it stays
        fast on large instances; the equivalence against the partition-scan
        definition is covered by tests on small ground sets.
        """
        if self.rank() <= 2:
            return True
        return self.si_is_3connected()

    def is_vertically_kconnected(self, k):
        """No vertical j-separation for j < k (rank <= 2 passes when k <= 3)."""
        if k <= 1:
            return True
        if self.rank() <= 2 and k <= 3:
            return True
        if k == 3 and self.rank() >= 3:
            return self.si_is_3connected()
        return not self.vertical_separation_exists(k)

    # -- comparisons -------------------------------------------------------------

    def rank_table_bytes(self):
        """Rank of every subset, positions ordered by sorted label; 16 elements max."""
        n = self.size
        if n > 16:
            raise DomainError("rank table limited to 16 elements")
        order = sort_labels(self.labels)
        pos = [self._pos[lab] for lab in order]
        out = bytearray(1 << n)
        for sub in range(1 << n):
            m = 0
            s = sub
            idx = 0
            while s:
                if s & 1:
                    m |= 1 << pos[idx]
                s >>= 1
                idx += 1
            out[sub] = self._rank_mask(m)
        return bytes(out)

    def rank_table_equals(self, other):
        if self.ground() != other.ground():
            return False
        return self.rank_table_bytes() == other.rank_table_bytes()

    def as_table_matroid(self):
        """Copy into a TableBase backend (labels preserved, sorted order)."""
        order = sort_labels(self.labels)
        base = TableBase(len(order), self.rank_table_bytes())
        return Matroid(base, labels=tuple(order))

    def find_isomorphism(self, other):
        """Label bijection preserving rank, or None.

        Backtracks over images with singleton/pair/prefix rank pruning, then
        confirms at the leaf that the circuit families correspond.
        """
        n = self.size
        if n != other.size or self.rank() != other.rank():
            return None
        if n > 15:
            raise DomainError("isomorphism search limited to 15 elements")
        mine = sort_labels(self.labels)
        theirs = sort_labels(other.labels)
        c1 = self.circuits()
        c2 = other.circuits()
        if sorted(len(c) for c in c1) != sorted(len(c) for c in c2):
            return None
        circ2 = {frozenset(c) for c in c2}
        srank1 = {a: self.rank([a]) for a in mine}
        srank2 = {b: other.rank([b]) for b in theirs}

        assign = {}
        used = set()

        def ok_pairwise(a, b):
            for a2, b2 in assign.items():
                if self.rank([a, a2]) != other.rank([b, b2]):
                    return False
            return True

        def rec(i):
            if i == n:
                for c in c1:
                    if frozenset(assign[x] for x in c) not in circ2:
                        return False
                return True
            a = mine[i]
            for b in theirs:
                if b in used or srank1[a] != srank2[b]:
                    continue
                if not ok_pairwise(a, b):
                    continue
                assign[a] = b
                used.add(b)
                prefix = mine[:i + 1]
                if self.rank(prefix) == other.rank([assign[x] for x in prefix]):
                    if rec(i + 1):
                        return True
                del assign[a]
                used.discard(b)
            return False

        if rec(0):
            return dict(assign)
        return None


# ---------------------------------------------------------------------------
# Constructors
# ---------------------------------------------------------------------------

def graphic_matroid(g, labels=None):
    """Cycle matroid of a SimpleGraph; elements are its edge ids."""
    base = GraphicBase(g.n, g.edges)
    return Matroid(base, labels=labels)


def bond_matroid(g, labels=None):
    return graphic_matroid(g, labels).dual()


def uniform_matroid(r, n):
    return Matroid(UniformBase(r, n))


def linear_matroid(columns, modulus=None, labels=None):
    return Matroid(LinearBase(columns, modulus), labels=labels)


def _wheel_base(n):
    """Rank-n wheel as a multigraph: rim edges 0..n-1 first, then spokes."""
    if n < 2:
        raise DomainError("wheel rank must be at least 2")
    rim = [(i, (i + 1) % n) for i in range(n)]
    spokes = [(i, n) for i in range(n)]
    return GraphicBase(n + 1, rim + spokes)


def wheel_matroid(n):
    return Matroid(_wheel_base(n))


def whirl_matroid(n):
    """The rank-n whirl: relax the rim circuit-hyperplane of the wheel."""
    return Matroid(RelaxedBase(_wheel_base(n), (1 << n) - 1))


def matroid_from_rank_table(labels, table):
    return Matroid(TableBase(len(labels), table), labels=tuple(sort_labels(labels)))


# ---------------------------------------------------------------------------
# Explicit text format: `E <n>`, `R <r>`, then one line per basis listing
# sorted element indices.  Elements are indexed 0..n-1 in sorted label order.
# ---------------------------------------------------------------------------

def emit_bases_text(m):
    if m.size > 18:
        raise DomainError("basis listing limited to 18 elements")
    order = sort_labels(m.labels)
    r = m.rank()
    lines = ["E %d" % m.size, "R %d" % r]
    from itertools import combinations
    count = 0
    for combo in combinations(range(m.size), r):
        if m.is_independent([order[i] for i in combo]):
            lines.append(" ".join(str(i) for i in combo))
            count += 1
            if count > 400000:
                raise DomainError("too many bases to list")
    return "\n".join(lines) + "\n"


def parse_bases_text(text):
    """Inverse of emit_bases_text; reconstructs via r(S) = max |S ∩ B|."""
    n = r = None
    bases = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line.startswith("E "):
            n = int(line[2:])
        elif line.startswith("R "):
            r = int(line[2:])
        else:
            try:
                bases.append([int(tok) for tok in line.split()])
            except ValueError:
                raise DomainError("line %d: expected element indices" % lineno) from None
    if n is None or r is None:
        raise DomainError("missing E or R header line")
    if n > 18:
        raise DomainError("basis text limited to 18 elements")
    if not bases:
        if r != 0:
            raise DomainError("no bases listed but positive rank declared")
        bases = [[]]
    base_masks = []
    for b in bases:
        if len(b) != r:
            raise DomainError("basis %r has size %d, rank is %d" % (b, len(b), r))
        mask = 0
        for idx in b:
            if not 0 <= idx < n:
                raise DomainError("basis index %d outside 0..%d" % (idx, n - 1))
            mask |= 1 << idx
        base_masks.append(mask)
    table = bytearray(1 << n)
    for sub in range(1 << n):
        table[sub] = max((sub & bm).bit_count() for bm in base_masks)
    if table[(1 << n) - 1] != r:
        raise DomainError("listed bases do not reach the declared rank")
    return Matroid(TableBase(n, bytes(table)))
