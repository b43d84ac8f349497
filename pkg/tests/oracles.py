"""Brute-force reference implementations used as test oracles.

Everything here recomputes matroid and graph notions straight from the
definitions with subset scans, partition scans and permutation search,
independently of the algorithms in the package.  Deliberately slow; the
callers keep the sizes small.
"""

import itertools
import random

from carambole import linear_matroid, sort_labels


def subsets_of(labels, min_size=0, max_size=None):
    labels = list(labels)
    if max_size is None:
        max_size = len(labels)
    for size in range(min_size, max_size + 1):
        for combo in itertools.combinations(labels, size):
            yield combo


def brute_circuits(m, max_size=None):
    """Minimal dependent subsets by exhaustive scan in size order."""
    labels = sort_labels(m.labels)
    found = []
    for cand in subsets_of(labels, 1, max_size):
        cset = set(cand)
        if any(c <= cset for c in found):
            continue
        if not m.is_independent(cand):
            found.append(cset)
    return sorted(tuple(sort_labels(c)) for c in found)


def brute_cocircuits(m, max_size=None):
    return brute_circuits(m.dual(), max_size)


def graph_cycles(g):
    """Edge sets of simple cycles: connected subgraphs, every degree two."""
    out = []
    for cand in subsets_of(range(len(g.edges)), 3):
        deg = {}
        for e in cand:
            u, v = g.edges[e]
            deg[u] = deg.get(u, 0) + 1
            deg[v] = deg.get(v, 0) + 1
        if any(d != 2 for d in deg.values()):
            continue
        verts = sorted(deg)
        adj = {v: [] for v in verts}
        for e in cand:
            u, v = g.edges[e]
            adj[u].append(v)
            adj[v].append(u)
        seen = {verts[0]}
        stack = [verts[0]]
        while stack:
            for w in adj[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        if len(seen) == len(verts):
            out.append(tuple(cand))
    return sorted(out)


def _vertex_subset_connected(g, verts, removed=()):
    verts = [v for v in verts if v not in removed]
    if not verts:
        return True
    keep = set(verts)
    seen = {verts[0]}
    stack = [verts[0]]
    while stack:
        u = stack.pop()
        for a, b in g.edges:
            if a == u and b in keep and b not in seen:
                seen.add(b)
                stack.append(b)
            elif b == u and a in keep and a not in seen:
                seen.add(a)
                stack.append(a)
    return len(seen) == len(verts)


def graph_bonds(g):
    """Minimal edge cuts: vertex bipartitions with both sides connected."""
    n = g.n
    out = set()
    for r in range(1, n):
        for side in itertools.combinations(range(n), r):
            sset = set(side)
            cut = tuple(e for e, (u, v) in enumerate(g.edges)
                        if (u in sset) != (v in sset))
            if not cut:
                continue
            rest = [v for v in range(n) if v not in sset]
            if _cut_side_connected(g, sset) and _cut_side_connected(g, rest):
                out.add(cut)
    return sorted(out)


def _cut_side_connected(g, side):
    side = set(side)
    if not side:
        return False
    start = next(iter(side))
    seen = {start}
    stack = [start]
    while stack:
        u = stack.pop()
        for a, b in g.edges:
            if a in side and b in side:
                if a == u and b not in seen:
                    seen.add(b)
                    stack.append(b)
                elif b == u and a not in seen:
                    seen.add(a)
                    stack.append(a)
    return len(seen) == len(side)


def graph_is_3connected(g):
    """No cut set of at most two vertices, at least four vertices."""
    if g.n < 4:
        return False
    all_verts = list(range(g.n))
    if not _vertex_subset_connected(g, all_verts):
        return False
    for cut in itertools.chain(itertools.combinations(all_verts, 1),
                               itertools.combinations(all_verts, 2)):
        if not _vertex_subset_connected(g, all_verts, removed=set(cut)):
            return False
    return True


def graphic_rank(g, edge_subset):
    """Vertices touched minus components of the subgraph."""
    edges = [g.edges[e] for e in edge_subset]
    verts = sorted({v for e in edges for v in e})
    parent = {v: v for v in verts}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    comps = len(verts)
    for u, v in edges:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
            comps -= 1
    return len(verts) - comps


def matroid_lambda(m, subset):
    labels = set(m.labels)
    rest = sort_labels(labels - set(subset))
    return m.rank(subset) + m.rank(rest) - m.rank()


def brute_connected(m):
    labels = sort_labels(m.labels)
    if len(labels) <= 1:
        return True
    for side in subsets_of(labels, 1, len(labels) - 1):
        if matroid_lambda(m, side) == 0:
            return False
    return True


def brute_tutte_3connected(m):
    """No 1- or 2-separation, straight from the partition definition."""
    labels = sort_labels(m.labels)
    n = len(labels)
    for side in subsets_of(labels, 1, n - 1):
        lam = matroid_lambda(m, side)
        if lam == 0:
            return False
        if lam <= 1 and 2 <= len(side) <= n - 2:
            return False
    return True


def brute_vertically_3connected(m):
    """No vertical 1- or 2-separation: both sides of rank at least j."""
    labels = set(m.labels)
    for side in subsets_of(sort_labels(labels), 1, len(labels) - 1):
        rest = sort_labels(labels - set(side))
        ra, rb = m.rank(side), m.rank(rest)
        lam = ra + rb - m.rank()
        for j in (1, 2):
            if lam <= j - 1 and ra >= j and rb >= j:
                return False
    return True


def brute_isomorphism(m1, m2):
    """Permutation search over full rank tables; None if no map exists."""
    a = sort_labels(m1.labels)
    b = sort_labels(m2.labels)
    if len(a) != len(b) or m1.rank() != m2.rank():
        return None
    n = len(a)
    ta = _full_table(m1, a)
    tb = _full_table(m2, b)
    for perm in itertools.permutations(range(n)):
        ok = True
        for mask in range(1 << n):
            image = 0
            rem = mask
            while rem:
                low = rem & -rem
                image |= 1 << perm[low.bit_length() - 1]
                rem ^= low
            if ta[mask] != tb[image]:
                ok = False
                break
        if ok:
            return {a[i]: b[perm[i]] for i in range(n)}
    return None


def _full_table(m, labels):
    n = len(labels)
    table = [0] * (1 << n)
    for mask in range(1 << n):
        subset = [labels[i] for i in range(n) if mask >> i & 1]
        table[mask] = m.rank(subset)
    return table


# ---------------------------------------------------------------------------
# A reusable pool of random explicit matroids
# ---------------------------------------------------------------------------

def _gf2_columns(rng, r, n):
    space = [tuple((v >> i) & 1 for i in range(r)) for v in range(1, 1 << r)]
    if n > len(space):
        return None
    return rng.sample(space, n)


def _gf3_columns(rng, r, n):
    reps = []
    for v in itertools.product(range(3), repeat=r):
        if not any(v):
            continue
        lead = next(x for x in v if x)
        if lead == 1:
            reps.append(v)
    if n > len(reps):
        return None
    return rng.sample(reps, n)


def _rational_columns(rng, r, n):
    cols = []
    guard = 0
    while len(cols) < n and guard < 500:
        guard += 1
        v = tuple(rng.randint(-3, 3) for _ in range(r))
        if not any(v):
            continue
        if any(_parallel(v, w) for w in cols):
            continue
        cols.append(v)
    return cols if len(cols) == n else None


def _parallel(v, w):
    return all(v[i] * w[j] == v[j] * w[i]
               for i in range(len(v)) for j in range(len(v)))


def random_matroid_pool(count=200, seed=90125, max_elements=9):
    """Simple 3-connected explicit matroids from random linear ones."""
    rng = random.Random(seed)
    makers = [(_gf2_columns, 2), (_gf3_columns, 3), (_rational_columns, None)]
    pool = []
    seen = set()
    while len(pool) < count:
        maker, modulus = makers[rng.randrange(len(makers))]
        r = rng.randint(3, 5)
        n = rng.randint(max(6, r + 2), max_elements)
        cols = maker(rng, r, n)
        if cols is None:
            continue
        m = linear_matroid(cols, modulus).as_table_matroid()
        if rng.random() < 0.25:
            m = m.dual().as_table_matroid()
        if not (m.is_simple() and m.is_tutte_3connected()):
            continue
        key = m.rank_table_bytes()
        if key in seen:
            continue
        seen.add(key)
        pool.append(m)
    return pool
