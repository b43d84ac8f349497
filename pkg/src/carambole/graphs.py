"""Small simple graphs: graph6 codec, connectivity, canonical forms, minors.

Vertices are 0..n-1 and vertex sets are Python ints used as bitmasks, so the
exhaustive parts (cut scans, branch-set backtracking, corpus dedup) run on
cheap integer ops. Everything in this module is exact; nothing samples.
"""

from __future__ import annotations

from dataclasses import dataclass

from .budget import NO_DEADLINE
from .errors import DomainError, FormatError


class SimpleGraph:
    """Immutable simple graph with sorted edge list and adjacency bitmasks.

    Edges get dense ids 0..m-1 in lexicographic (u, v) order; those ids are
    the element labels of the graphic and bond matroids built on top.
    """

    __slots__ = ("n", "edges", "adj", "_edge_index", "_cert", "_cert_perm")

    def __init__(self, n, edges):
        if n < 0:
            raise DomainError("vertex count must be nonnegative")
        seen = set()
        norm = []
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise DomainError("edge (%r, %r) outside vertex range" % (u, v))
            if u == v:
                raise DomainError("loop at vertex %d not allowed in a simple graph" % u)
            e = (u, v) if u < v else (v, u)
            if e in seen:
                raise DomainError("parallel edge %r not allowed in a simple graph" % (e,))
            seen.add(e)
            norm.append(e)
        norm.sort()
        self.n = n
        self.edges = tuple(norm)
        adj = [0] * n
        for u, v in norm:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        self.adj = tuple(adj)
        self._edge_index = {e: i for i, e in enumerate(norm)}
        self._cert = None
        self._cert_perm = None

    def __eq__(self, other):
        return isinstance(other, SimpleGraph) and self.n == other.n and self.edges == other.edges

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        return "SimpleGraph(n=%d, m=%d)" % (self.n, len(self.edges))

    def edge_id(self, u, v):
        e = (u, v) if u < v else (v, u)
        try:
            return self._edge_index[e]
        except KeyError:
            raise DomainError("no edge %r in graph" % (e,)) from None

    def degree(self, v):
        return self.adj[v].bit_count()

    def degree_sequence(self):
        return tuple(sorted(self.adj[v].bit_count() for v in range(self.n)))

    def is_connected(self):
        if self.n <= 1:
            return True
        return _reach(self.adj, 1, (1 << self.n) - 1) == (1 << self.n) - 1

    def is_three_connected(self):
        """Vertex 3-connectivity; requires at least 4 vertices by convention."""
        n = self.n
        if n < 4:
            return False
        full = (1 << n) - 1
        if _reach(self.adj, 1, full) != full:
            return False
        for u in range(n):
            for v in range(u + 1, n):
                removed = full & ~(1 << u) & ~(1 << v)
                start = removed & -removed
                if _reach(self.adj, start, removed) != removed:
                    return False
        return True

    def delete_edges(self, edge_ids):
        drop = set(edge_ids)
        return SimpleGraph(self.n, [e for i, e in enumerate(self.edges) if i not in drop])

    def delete_vertices(self, vs):
        """Remove vertices (renumbering the rest) together with incident edges."""
        drop = set(vs)
        keep = [v for v in range(self.n) if v not in drop]
        remap = {v: i for i, v in enumerate(keep)}
        edges = [(remap[u], remap[v]) for u, v in self.edges if u not in drop and v not in drop]
        return SimpleGraph(len(keep), edges)

    def contract_simplify(self, edge_ids):
        """Contract the given edges, then drop loops and parallel duplicates.

        The result forgets edge identities; use it for connectivity checks
        and minor routing, not for anything that tracks elements.
        """
        parent = list(range(self.n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        contracted = set(edge_ids)
        for i in contracted:
            u, v = self.edges[i]
            ru, rv = find(u), find(v)
            if ru != rv:
                parent[ru] = rv
        roots = sorted({find(v) for v in range(self.n)})
        remap = {r: i for i, r in enumerate(roots)}
        out = set()
        for i, (u, v) in enumerate(self.edges):
            if i in contracted:
                continue
            a, b = remap[find(u)], remap[find(v)]
            if a != b:
                out.add((a, b) if a < b else (b, a))
        return SimpleGraph(len(roots), sorted(out))


def _reach(adj, start_bit, allowed):
    """Bitmask BFS closure of start_bit inside allowed."""
    seen = start_bit & allowed
    frontier = seen
    while frontier:
        nxt = 0
        m = frontier
        while m:
            b = m & -m
            m ^= b
            nxt |= adj[b.bit_length() - 1]
        frontier = nxt & allowed & ~seen
        seen |= frontier
    return seen


def simple_graph_from_multigraph(nv, edges):
    """Collapse loops, parallel edges and isolated vertices to a SimpleGraph."""
    used = set()
    for u, v in edges:
        if u != v:
            used.add(u)
            used.add(v)
    keep = sorted(used)
    remap = {v: i for i, v in enumerate(keep)}
    out = set()
    for u, v in edges:
        if u == v:
            continue
        a, b = remap[u], remap[v]
        out.add((a, b) if a < b else (b, a))
    return SimpleGraph(len(keep), sorted(out))


# ---------------------------------------------------------------------------
# graph6 codec
#
# Single-byte header only (n <= 62): first byte is n + 63, then the upper
# triangle bits x(0,1), x(0,2), x(1,2), x(0,3), ... packed big-endian into
# 6-bit groups, each emitted as group + 63, zero-padded on the right.
# ---------------------------------------------------------------------------

_G6_HEADER = ">>graph6<<"


def parse_graph6(line):
    s = line.strip()
    if s.startswith(_G6_HEADER):
        s = s[len(_G6_HEADER):]
    if not s:
        raise FormatError("empty graph6 line", offset=0)
    data = s.encode("ascii", errors="replace")
    first = data[0]
    if first == 126:
        raise FormatError("vertex counts above 62 are not supported", offset=0)
    if not 63 <= first <= 125:
        raise FormatError("bad graph6 size byte %r" % chr(first), offset=0)
    n = first - 63
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(data) - 1 < need:
        raise FormatError("graph6 line truncated: need %d payload bytes, got %d"
                          % (need, len(data) - 1), offset=len(data))
    if len(data) - 1 > need:
        raise FormatError("graph6 line has %d trailing bytes" % (len(data) - 1 - need),
                          offset=1 + need)
    bits = []
    for k in range(need):
        byte = data[1 + k]
        if not 63 <= byte <= 126:
            raise FormatError("bad graph6 payload byte %r" % chr(byte), offset=1 + k)
        val = byte - 63
        for shift in range(5, -1, -1):
            bits.append((val >> shift) & 1)
    for k in range(nbits, len(bits)):
        if bits[k]:
            raise FormatError("nonzero padding bit in graph6 payload", offset=1 + k // 6)
    edges = []
    k = 0
    for v in range(1, n):
        for u in range(v):
            if bits[k]:
                edges.append((u, v))
            k += 1
    return SimpleGraph(n, edges)


def emit_graph6(g):
    if g.n > 62:
        raise DomainError("graph6 emission limited to 62 vertices")
    out = [g.n + 63]
    acc = 0
    nacc = 0
    for v in range(1, g.n):
        for u in range(v):
            acc = (acc << 1) | ((g.adj[u] >> v) & 1)
            nacc += 1
            if nacc == 6:
                out.append(acc + 63)
                acc, nacc = 0, 0
    if nacc:
        out.append((acc << (6 - nacc)) + 63)
    return bytes(out).decode("ascii")


# ---------------------------------------------------------------------------
# Canonical forms
# ---------------------------------------------------------------------------

def _wl_partition(g):
    """Stable 1-dimensional refinement colors, isomorphism-invariant."""
    colors = [g.adj[v].bit_count() for v in range(g.n)]
    while True:
        sigs = []
        for v in range(g.n):
            nb = []
            m = g.adj[v]
            while m:
                b = m & -m
                m ^= b
                nb.append(colors[b.bit_length() - 1])
            nb.sort()
            sigs.append((colors[v], tuple(nb)))
        order = sorted(set(sigs))
        lookup = {s: i for i, s in enumerate(order)}
        new = [lookup[s] for s in sigs]
        if new == colors:
            return colors
        colors = new


def canonical_labeling(g):
    """Canonical certificate and a labeling that achieves it.

    Vertices are scheduled class by class (classes ordered by refined color),
    and within the schedule we take the lexicographically greatest sequence
    of adjacency chunks. Ties cause branching, so the returned certificate is
    a true canonical form, not a heuristic.
    """
    n = g.n
    if n == 0:
        return b"\x00", ()
    colors = _wl_partition(g)
    classes = {}
    for v in range(n):
        classes.setdefault(colors[v], []).append(v)
    schedule = []
    for c in sorted(classes):
        schedule.extend([c] * len(classes[c]))
    members = {c: tuple(vs) for c, vs in classes.items()}

    best_chunks = None
    best_perm = None
    adj = g.adj

    def rec(placed, used, chunks, tight):
        nonlocal best_chunks, best_perm
        t = len(placed)
        if t == n:
            if best_chunks is None or chunks > best_chunks:
                best_chunks = list(chunks)
                best_perm = list(placed)
            return
        pool = [v for v in members[schedule[t]] if not (used >> v) & 1]
        scored = []
        for v in pool:
            chunk = 0
            av = adj[v]
            for w in placed:
                chunk = (chunk << 1) | ((av >> w) & 1)
            scored.append((chunk, v))
        top = max(c for c, _ in scored)
        if tight and best_chunks is not None:
            ref = best_chunks[t]
            if top < ref:
                return
            still_tight = top == ref
        else:
            still_tight = tight
        for chunk, v in scored:
            if chunk != top:
                continue
            chunks.append(chunk)
            rec(placed + [v], used | (1 << v), chunks, still_tight and best_chunks is not None)
            chunks.pop()

    rec([], 0, [], True)
    payload = bytearray([n])
    for t, chunk in enumerate(best_chunks):
        width = max(1, (t + 7) // 8)
        payload.extend(chunk.to_bytes(width, "big"))
    return bytes(payload), tuple(best_perm)


def canonical_cert(g):
    if g._cert is None:
        cert, perm = canonical_labeling(g)
        g._cert = cert
        g._cert_perm = perm
    return g._cert


def canonical_graph(g):
    """Relabel so that isomorphic graphs become equal."""
    canonical_cert(g)
    perm = g._cert_perm
    pos = {v: i for i, v in enumerate(perm)}
    return SimpleGraph(g.n, [(pos[u], pos[v]) for u, v in g.edges])


def canonical_g6(g):
    return emit_graph6(canonical_graph(g))


def are_isomorphic(g, h):
    return g.n == h.n and canonical_cert(g) == canonical_cert(h)


# ---------------------------------------------------------------------------
# Named families
# ---------------------------------------------------------------------------

def complete_graph(n):
    return SimpleGraph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def complete_bipartite(a, b):
    return SimpleGraph(a + b, [(u, a + v) for u in range(a) for v in range(b)])


def wheel_graph(n):
    """Wheel with an n-cycle rim (vertices 0..n-1) and hub n."""
    if n < 3:
        raise DomainError("wheel rim needs at least 3 vertices")
    edges = [(v, (v + 1) % n) for v in range(n)]
    edges += [(v, n) for v in range(n)]
    return SimpleGraph(n + 1, edges)


def prism_graph():
    """Two triangles 012 and 345 joined by the matching 03, 14, 25."""
    return SimpleGraph(6, [(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5),
                           (0, 3), (1, 4), (2, 5)])


def octahedron_graph():
    return SimpleGraph(6, [(u, v) for u in range(6) for v in range(u + 1, 6)
                           if (u, v) not in {(0, 1), (2, 3), (4, 5)}])


def k3n_triple_prime(n):
    """K_{3,n} plus all three edges inside the 3-vertex class.

    Vertices 0, 1, 2 form the (high-degree) 3-class; 3..n+2 are the degree-3
    class. For n >= 4 the vertices of degree above 3 are exactly 0, 1, 2.
    """
    if n < 1:
        raise DomainError("n must be positive")
    edges = [(0, 1), (0, 2), (1, 2)]
    edges += [(u, 3 + i) for u in range(3) for i in range(n)]
    return SimpleGraph(n + 3, edges)


_NAMED = {
    "K4": lambda: complete_graph(4),
    "K5": lambda: complete_graph(5),
    "K6": lambda: complete_graph(6),
    "K33": lambda: complete_bipartite(3, 3),
    "K34": lambda: complete_bipartite(3, 4),
    "K35": lambda: complete_bipartite(3, 5),
    "K36": lambda: complete_bipartite(3, 6),
    "K44": lambda: complete_bipartite(4, 4),
    "W3": lambda: wheel_graph(3),
    "W4": lambda: wheel_graph(4),
    "W5": lambda: wheel_graph(5),
    "W6": lambda: wheel_graph(6),
    "W7": lambda: wheel_graph(7),
    "W8": lambda: wheel_graph(8),
    "K34'''": lambda: k3n_triple_prime(4),
    "K35'''": lambda: k3n_triple_prime(5),
    "prism": prism_graph,
    "octahedron": octahedron_graph,
    "cube": lambda: SimpleGraph(8, [(0, 1), (1, 2), (2, 3), (0, 3),
                                    (4, 5), (5, 6), (6, 7), (4, 7),
                                    (0, 4), (1, 5), (2, 6), (3, 7)]),
}


def named_graph(name):
    key = name.replace(",", "").replace("_", "")
    if key in _NAMED:
        return _NAMED[key]()
    raise DomainError("unknown graph name %r (known: %s)"
                      % (name, ", ".join(sorted(_NAMED))))


# ---------------------------------------------------------------------------
# Corpus of 3-connected graphs
# ---------------------------------------------------------------------------

_corpus_cache = {}


def corpus(max_vertices):
    """All pairwise non-isomorphic 3-connected simple graphs on <= max_vertices.

    Generated by vertex augmentation: every graph on m vertices arises from a
    graph on m-1 plus one vertex, and deleting a vertex from a c-connected
    graph leaves one (c-1)-connected.  So level m only needs to retain graphs
    of connectivity max(0, 3 - (max_vertices - m)), which keeps the dedup
    workload small.  Results are sorted by (vertex count, certificate).
    """
    if max_vertices > 10:
        raise DomainError("generated corpus capped at 10 vertices; use a graph6 file beyond that")
    if max_vertices < 4:
        return []
    if max_vertices in _corpus_cache:
        return list(_corpus_cache[max_vertices])

    def conn_at_least(g, c):
        if c <= 0:
            return True
        if c == 1:
            return g.is_connected()
        if not g.is_connected():
            return False
        full = (1 << g.n) - 1
        if c == 2:
            if g.n < 3:
                return False
            for v in range(g.n):
                rem = full & ~(1 << v)
                start = rem & -rem
                if _reach(g.adj, start, rem) != rem:
                    return False
            return True
        return g.is_three_connected()

    level = {canonical_cert(SimpleGraph(1, [])): SimpleGraph(1, [])}
    result = []
    for m in range(2, max_vertices + 1):
        need = max(0, 3 - (max_vertices - m))
        nxt = {}
        for parent in level.values():
            base_edges = list(parent.edges)
            for nbhd in range(1 << parent.n):
                edges = base_edges + [(v, parent.n) for v in range(parent.n) if (nbhd >> v) & 1]
                child = SimpleGraph(parent.n + 1, edges)
                if not conn_at_least(child, need):
                    continue
                cert = canonical_cert(child)
                if cert not in nxt:
                    nxt[cert] = canonical_graph(child)
        level = nxt
        if m >= 4:
            for cert in sorted(level):
                g = level[cert]
                if g.is_three_connected():
                    result.append(g)
    _corpus_cache[max_vertices] = result
    return list(result)


def corpus_from_file(path):
    """Parse a graph6 file and keep the 3-connected entries, input order."""
    out = []
    with open(path, "r", encoding="ascii") as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            try:
                g = parse_graph6(line)
            except FormatError as exc:
                raise FormatError("line %d: %s" % (lineno, exc)) from None
            if g.is_three_connected():
                out.append(g)
    return out


# ---------------------------------------------------------------------------
# Graph minors by branch-set backtracking
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class MinorWitnessGraph:
    """Branch sets certifying target as a minor of host.

    branch_sets[i] is the set of host vertices standing for target vertex i.
    """

    host: SimpleGraph
    target: SimpleGraph
    branch_sets: tuple

    def vertex_map(self):
        return {i: frozenset(bs) for i, bs in enumerate(self.branch_sets)}

    def contracted_edges(self):
        """Host edge ids of a spanning tree inside each branch set."""
        out = []
        for bs in self.branch_sets:
            seen = {min(bs)}
            while len(seen) < len(bs):
                grown = False
                for u, v in self.host.edges:
                    if u in bs and v in bs and (u in seen) != (v in seen):
                        seen.add(u if v in seen else v)
                        out.append(self.host.edge_id(u, v))
                        grown = True
                if not grown:
                    raise DomainError("branch set %r not connected" % (sorted(bs),))
        return sorted(out)

    def kept_edges(self):
        """For each target edge, the least host edge joining its branch sets."""
        owner = {}
        for i, bs in enumerate(self.branch_sets):
            for v in bs:
                owner[v] = i
        kept = {}
        for eid, (u, v) in enumerate(self.host.edges):
            a, b = owner.get(u), owner.get(v)
            if a is None or b is None or a == b:
                continue
            key = (a, b) if a < b else (b, a)
            if key in self.target._edge_index and key not in kept:
                kept[key] = eid
        return kept

    def deleted_edges(self):
        used = set(self.contracted_edges()) | set(self.kept_edges().values())
        return sorted(set(range(len(self.host.edges))) - used)

    def verify(self):
        """Check the witness from scratch: disjoint, connected, all adjacencies."""
        used = set()
        for bs in self.branch_sets:
            if not bs:
                return False
            if used & set(bs):
                return False
            used |= set(bs)
            mask = 0
            for v in bs:
                mask |= 1 << v
            start = mask & -mask
            if _reach(self.host.adj, start, mask) != mask:
                return False
        for a, b in self.target.edges:
            hit = False
            for u in self.branch_sets[a]:
                for v in self.branch_sets[b]:
                    if (self.host.adj[u] >> v) & 1:
                        hit = True
                        break
                if hit:
                    break
            if not hit:
                return False
        return True


def _twin_chains(h):
    """Vertex -> earlier vertex it must follow (branch-set min order).

    Two target vertices are interchangeable when swapping them is an
    automorphism, i.e. N(u) - v = N(v) - u.  Ordering the branch-set minima
    along each chain of interchangeable vertices removes that symmetry from
    the search without losing any minor.
    """
    classes = []
    for v in range(h.n):
        placed = False
        for cls in classes:
            ok = True
            for u in cls:
                bu = (1 << u)
                bv = (1 << v)
                if (h.adj[u] & ~bv) != (h.adj[v] & ~bu):
                    ok = False
                    break
            if ok:
                cls.append(v)
                placed = True
                break
        if not placed:
            classes.append([v])
    chain = {}
    for cls in classes:
        for prev, cur in zip(cls, cls[1:]):
            chain[cur] = prev
    return chain


def find_minor(host, target, deadline=NO_DEADLINE):
    """Branch-set model of target inside host, or None after exhaustion.

    Deterministic: target vertices are placed highest-degree-first (ties by
    how constrained they are, then index), candidate branch sets come out in
    a fixed enumeration order, and the first model found is returned.
    """
    if target.n == 0:
        return MinorWitnessGraph(host, target, ())
    if target.n > host.n or len(target.edges) > len(host.edges):
        return None

    order = []
    placed_mask = 0
    while len(order) < target.n:
        best = None
        for v in range(target.n):
            if (placed_mask >> v) & 1:
                continue
            key = ((target.adj[v] & placed_mask).bit_count(), target.adj[v].bit_count(), -v)
            if best is None or key > best[0]:
                best = (key, v)
        order.append(best[1])
        placed_mask |= 1 << best[1]

    chain = _twin_chains(target)
    adj = host.adj
    full = (1 << host.n) - 1
    branch = {}
    nbr_of_branch = {}
    ticker = [0]

    def neighborhood(mask):
        out = 0
        m = mask
        while m:
            b = m & -m
            m ^= b
            out |= adj[b.bit_length() - 1]
        return out & ~mask

    def connected_sets(anchor, allowed, max_size):
        """Connected subsets containing anchor inside allowed, each once."""
        out = []
        abit = 1 << anchor

        def grow(cur, frontier, forb):
            out.append(cur)
            if cur.bit_count() >= max_size:
                return
            ext = frontier & ~forb
            f = forb
            while ext:
                b = ext & -ext
                ext ^= b
                u = b.bit_length() - 1
                grow(cur | b, (frontier | adj[u]) & allowed & ~(cur | b), f)
                f |= b

        grow(abit, adj[anchor] & allowed & ~abit, 0)
        return out

    def place(level, avail):
        ticker[0] += 1
        if not ticker[0] & 1023:
            deadline.check(partial={"placed": level})
        if level == target.n:
            return True
        hv = order[level]
        remaining = target.n - level
        max_size = avail.bit_count() - (remaining - 1)
        if max_size < 1:
            return False
        req = [branch[u] for u in range(target.n)
               if (target.adj[hv] >> u) & 1 and u in branch]
        if req:
            anchor_pool = neighborhood(req[0]) & avail
        else:
            anchor_pool = avail
        min_floor = -1
        if hv in chain and chain[hv] in branch:
            prev = branch[chain[hv]]
            min_floor = (prev & -prev).bit_length() - 1

        done_anchors = 0
        pool = anchor_pool
        while pool:
            abit = pool & -pool
            pool ^= abit
            anchor = abit.bit_length() - 1
            for cand in connected_sets(anchor, avail & ~done_anchors, max_size):
                low = (cand & -cand).bit_length() - 1
                if low <= min_floor:
                    continue
                nb = neighborhood(cand)
                ok = True
                for bm in req:
                    if not nb & bm:
                        ok = False
                        break
                if not ok:
                    continue
                avail2 = avail & ~cand
                # every placed branch set must keep enough fresh neighbors
                # for its not-yet-placed target neighbors
                feasible = True
                for u, bm in branch.items():
                    needs = 0
                    for w in range(target.n):
                        if (target.adj[u] >> w) & 1 and w not in branch and w != hv:
                            needs += 1
                    if needs and (nbr_of_branch[u] & avail2).bit_count() < needs:
                        feasible = False
                        break
                if feasible:
                    needs = 0
                    for w in range(target.n):
                        if (target.adj[hv] >> w) & 1 and w not in branch:
                            needs += 1
                    if needs and (nb & avail2).bit_count() < needs:
                        feasible = False
                if not feasible:
                    continue
                branch[hv] = cand
                nbr_of_branch[hv] = nb
                if place(level + 1, avail2):
                    return True
                del branch[hv]
                del nbr_of_branch[hv]
            done_anchors |= abit
        return False

    if place(0, full):
        sets = []
        for v in range(target.n):
            bm = branch[v]
            vs = []
            while bm:
                b = bm & -bm
                bm ^= b
                vs.append(b.bit_length() - 1)
            sets.append(frozenset(vs))
        witness = MinorWitnessGraph(host, target, tuple(sets))
        assert witness.verify()
        return witness
    return None


def has_graph_minor(host, target, deadline=NO_DEADLINE):
    return find_minor(host, target, deadline) is not None


# ---------------------------------------------------------------------------
# The sharpness family of instances
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SharpInstance:
    """K_{3,n}''' glued to K_{m,m} along the three high-degree vertices.

    The union graph G carries a bond matroid whose distance to the bond
    matroid of K_{m,m} is exactly 2n+3, and the n star triples plus the
    three edges inside U form the extremal free family.
    """

    graph: SimpleGraph
    n: int
    m: int
    u_vertices: tuple        # the three shared vertices
    v_vertices: tuple        # the n degree-3 vertices of the K part
    star_triples: tuple      # per v_i, frozenset of its star edge ids
    u_edge_ids: frozenset    # the three edges inside U
    k_edge_ids: frozenset    # all edges of the K part
    h_edge_ids: frozenset    # all edges of the K_{m,m} part
    expected_k: int

    def h_graph(self):
        return complete_bipartite(self.m, self.m)


def sharpness_instance(n, m):
    if n < 4 or m < 4:
        raise DomainError("sharpness instance needs n >= 4 and m >= 4")
    u = (0, 1, 2)
    vs = tuple(range(3, 3 + n))
    a_side = tuple(range(3 + n, 3 + n + m))
    b_extra = tuple(range(3 + n + m, 3 + n + m + (m - 3)))
    b_side = u + b_extra
    edges = [(0, 1), (0, 2), (1, 2)]
    edges += [(uu, v) for uu in u for v in vs]
    edges += [(a, b) if a < b else (b, a) for a in a_side for b in b_side]
    g = SimpleGraph(3 + n + m + (m - 3), edges)

    u_edge_ids = frozenset(g.edge_id(0, 1) for _ in (0,)) | {g.edge_id(0, 2), g.edge_id(1, 2)}
    stars = []
    for v in vs:
        stars.append(frozenset(g.edge_id(uu, v) for uu in u))
    k_ids = frozenset().union(u_edge_ids, *stars)
    h_ids = frozenset(range(len(g.edges))) - k_ids

    # rank(M*(G)) - rank(M*(K_{m,m})) via edge/vertex counts; both connected
    k_val = (len(g.edges) - g.n + 1) - (m * m - 2 * m + 1)
    if k_val != 2 * n + 3:
        raise DomainError("rank gap %d does not match 2n+3" % k_val)
    for v in vs:
        if g.degree(v) != 3:
            raise DomainError("vertex %d should have degree 3" % v)
    for uu in u:
        if g.degree(uu) <= 3:
            raise DomainError("shared vertex %d should have degree above 3" % uu)
    return SharpInstance(graph=g, n=n, m=m, u_vertices=u, v_vertices=vs,
                         star_triples=tuple(stars), u_edge_ids=u_edge_ids,
                         k_edge_ids=k_ids, h_edge_ids=h_ids, expected_k=k_val)
