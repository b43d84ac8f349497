"""Detection of the small configurations a 3-connected host can carry:
triangles, triads and nontrivial lines; apexed rank-3 cocircuits
(vertbarriers); biwebs and triwebs; general caramboles with their filament
and hull; plus the rank-n theta matroid and the parallel-connection
reconstruction that regrows a host around a contracted filament.

Detectors return certified objects.  Whenever a detected pattern is obliged
to carry a property and the direct recheck of that property fails, the
detector raises CounterexampleError instead of silently dropping the find.
"""

from dataclasses import dataclass
from itertools import combinations

from .budget import NO_DEADLINE
from .errors import BudgetError, CounterexampleError, DomainError
from .contractibility import (has_minor_bool, is_vertically_contractible_set,
                              n_is_empty)
from .matroid import ClosureBase, Matroid, linear_matroid, sort_labels, _lkey


def _tkey(labels):
    return tuple(_lkey(x) for x in labels)


def is_circuit(m, subset):
    subset = sort_labels(subset)
    if not subset or len(set(subset)) != len(subset):
        return False
    k = len(subset)
    if m.rank(subset) != k - 1:
        return False
    return all(m.rank([e for e in subset if e != x]) == k - 1 for x in subset)


def is_cocircuit(m, subset):
    return is_circuit(m.dual(), subset)


def small_structures(m):
    """Triangles, triads and nontrivial lines of a simple matroid."""
    if not m.is_simple():
        raise DomainError("structure scan expects a simple matroid")
    return {
        "triangles": [tuple(sort_labels(t)) for t in m.triangles()],
        "triads": [tuple(sort_labels(t)) for t in m.triads()],
        "nontrivialLines": [tuple(sort_labels(f)) for f in m.nontrivial_lines()],
    }


# ---------------------------------------------------------------------------
# Vertbarriers: rank-3 cocircuits with an apex in their closure
# ---------------------------------------------------------------------------

@dataclass
class Vertbarrier:
    cocircuit: tuple
    apex: object
    witness_x: object
    connected: bool
    line: tuple
    coloop: object
    certificate: dict


def rank3_cocircuits(m, deadline=NO_DEADLINE):
    """All cocircuits spanning rank 3, via hyperplane complements."""
    r = m.rank()
    if r < 3:
        return []
    labs = sort_labels(m.labels)
    seen = set()
    out = []
    for combo in combinations(labs, r - 1):
        deadline.check(out)
        if m.rank(combo) != r - 1:
            continue
        h = m.closure(combo)
        if h in seen:
            continue
        seen.add(h)
        c = tuple(lab for lab in labs if lab not in h)
        if m.rank(c) == 3:
            out.append(c)
    out.sort(key=_tkey)
    return out


def _is_connected_matroid(m):
    labs = sort_labels(m.labels)
    k = len(labs)
    if k <= 1:
        return True
    r = m.rank()
    rest = labs[1:]
    for pick in range(1 << (k - 1)):
        side = [labs[0]] + [rest[i] for i in range(k - 1) if (pick >> i) & 1]
        if len(side) == k:
            continue
        other = [lab for lab in labs if lab not in set(side)]
        if m.rank(side) + m.rank(other) == r:
            return False
    return True


def _line_coloop_split(m):
    """Partition of a restriction into (nontrivial line, coloop), or None."""
    labs = sort_labels(m.labels)
    r = m.rank()
    cols = [e for e in labs if m.rank([x for x in labs if x != e]) == r - 1]
    if len(cols) != 1:
        return None
    line = [e for e in labs if e != cols[0]]
    if len(line) < 3 or m.rank(line) != 2:
        return None
    return tuple(line), cols[0]


def find_vertbarriers(m, n=None, deadline=NO_DEADLINE):
    """Every (rank-3 cocircuit, apex) pair whose joint contraction with one
    cocircuit element stays vertically 3-connected with an N-minor.

    One element is checked per pair and recorded as the witness; validity
    for the rest of the cocircuit follows and is not re-run here (the
    equivalence is property-tested separately).  Disconnected pairs carry
    their line/coloop split; a disconnected restriction that fails to split
    that way is a refutation and raises.
    """
    if not m.is_simple():
        raise DomainError("vertbarrier scan expects a simple matroid")
    out = []
    for cstar in rank3_cocircuits(m, deadline):
        apexes = sort_labels(m.closure(cstar) - set(cstar))
        for p in apexes:
            deadline.check(out)
            ok, cert = is_vertically_contractible_set(m, n, (cstar[0], p),
                                                      deadline)
            if not ok:
                continue
            around = m.restrict(set(cstar) | {p})
            if _is_connected_matroid(around):
                out.append(Vertbarrier(cstar, p, cstar[0], True, None, None,
                                       cert))
                continue
            split = _line_coloop_split(around)
            if split is None:
                raise CounterexampleError(
                    "disconnected apexed cocircuit is not a line plus a coloop",
                    payload={"cocircuit": cstar, "apex": p})
            line, coloop = split
            if coloop == p or p not in set(line):
                raise CounterexampleError(
                    "apex landed on the coloop side of the split",
                    payload={"cocircuit": cstar, "apex": p})
            out.append(Vertbarrier(cstar, p, cstar[0], False, line, coloop,
                                   cert))
    out.sort(key=lambda v: (_tkey(v.cocircuit), _lkey(v.apex)))
    return out


# ---------------------------------------------------------------------------
# Caramboles, triwebs, biwebs
# ---------------------------------------------------------------------------

@dataclass
class Carambole:
    """Hull elements xs aligned with filament elements ys: dropping y_i from
    the filament and adding x_i gives a cocircuit of the host."""

    xs: tuple
    ys: tuple
    host: object
    n_tag: object
    cocircuits: tuple
    line_certificate: dict

    @property
    def n(self):
        return len(self.ys)

    @property
    def filament(self):
        return self.ys

    @property
    def hull(self):
        return self.xs

    @property
    def is_triweb(self):
        return isinstance(self, Triweb)


@dataclass
class Triweb(Carambole):
    contracted_3connected: bool = False


def _certify_line(m, n_tag, xs, ys, deadline):
    """Vertical N-contractibility certificate for the filament candidate.

    The cheap sufficient checks go first: an N-minor surviving in M/x_i,y_i
    or in M/y_i,y_j already settles the question for the whole line.  The
    direct si(M/L) check is the fallback and the exact criterion.
    """
    si_m, _ = m.contract(ys).simplify()
    if not si_m.is_tutte_3connected():
        if m.rank() >= 4:
            raise CounterexampleError(
                "cocircuit pattern without a contractible line",
                payload={"hull": xs, "filament": ys})
        return None
    if n_is_empty(n_tag):
        return {"kind": "empty"}
    for i in range(len(ys)):
        pair = (xs[i], ys[i])
        if has_minor_bool(m.contract(pair), n_tag, deadline):
            return {"kind": "pair", "pair": pair}
    for i, j in combinations(range(len(ys)), 2):
        pair = (ys[i], ys[j])
        if has_minor_bool(m.contract(pair), n_tag, deadline):
            return {"kind": "pair", "pair": pair}
    if has_minor_bool(si_m, n_tag, deadline):
        return {"kind": "direct"}
    return None


def find_caramboles(m, n=None, deadline=NO_DEADLINE, max_assignments=128):
    """Scan nontrivial lines for filaments; triwebs come out flagged.

    For each line L and each y in it, the hull candidates are the elements
    x outside L making (L-y)+x a cocircuit.  Every distinct assignment is
    certified separately.  Hosts of rank at least 4 get the hard guarantee:
    a matched pattern whose line fails certification raises instead of
    being skipped.
    """
    if not m.is_simple():
        raise DomainError("carambole scan expects a simple matroid")
    labs = sort_labels(m.labels)
    out = []
    for flat in m.nontrivial_lines():
        ys = tuple(sort_labels(flat))
        cands = []
        for y in ys:
            base = [v for v in ys if v != y]
            xs_here = [x for x in labs
                       if x not in flat and is_cocircuit(m, base + [x])]
            if not xs_here:
                cands = None
                break
            cands.append(xs_here)
        if cands is None:
            continue
        total = 1
        for c in cands:
            total *= len(c)
        if total > max_assignments:
            raise BudgetError("more than %d hull assignments on one line"
                              % max_assignments, partial=out)
        for pick in range(total):
            idx = pick
            xs = []
            for c in cands:
                xs.append(c[idx % len(c)])
                idx //= len(c)
            xs = tuple(xs)
            if len(set(xs)) != len(xs):
                continue
            deadline.check(out)
            cert = _certify_line(m, n, xs, ys, deadline)
            if cert is None:
                continue
            cocs = tuple(tuple(sort_labels([x for x in ys if x != y] + [xs[i]]))
                         for i, y in enumerate(ys))
            if len(ys) == 3:
                contracted = m.contract(ys)
                c3 = contracted.is_tutte_3connected()
                if not c3 and m.rank() >= 4:
                    raise CounterexampleError(
                        "triweb triangle fails to contract 3-connectedly",
                        payload={"hull": xs, "filament": ys})
                out.append(Triweb(xs, ys, m, n, cocs, cert, c3))
            else:
                out.append(Carambole(xs, ys, m, n, cocs, cert))
    out.sort(key=lambda k: (_tkey(k.ys), _tkey(k.xs)))
    return out


def certify_filament(m, ys, xs, n=None, deadline=NO_DEADLINE):
    """Certify one named filament candidate without scanning every line.

    xs[i] is the hull partner of ys[i]; pairs are reordered so the result
    matches what find_caramboles would emit for the same line.  Shape
    problems are DomainErrors; a pattern that fails its obligated property
    raises CounterexampleError.
    """
    if len(xs) != len(ys):
        raise DomainError("one hull element per filament element")
    if len(ys) < 3:
        raise DomainError("a filament has at least three elements")
    pairs = sorted(zip(ys, xs), key=lambda p: _lkey(p[0]))
    ys = tuple(y for y, _ in pairs)
    xs = tuple(x for _, x in pairs)
    if len(set(ys)) != len(ys) or len(set(xs)) != len(xs):
        raise DomainError("hull and filament elements must be distinct")
    if set(xs) & set(ys):
        raise DomainError("hull meets the filament")
    flat = m.closure(ys)
    if tuple(sort_labels(flat)) != ys or m.rank(ys) != 2:
        raise CounterexampleError(
            "claimed filament is not a full line",
            payload={"filament": ys,
                     "closure": tuple(sort_labels(flat)),
                     "rank": m.rank(ys)})
    cocs = []
    for i, y in enumerate(ys):
        coc = tuple(sort_labels([v for v in ys if v != y] + [xs[i]]))
        if not is_cocircuit(m, coc):
            raise CounterexampleError("hull pattern is not a cocircuit",
                                      payload={"expected": coc})
        cocs.append(coc)
    cert = _certify_line(m, n, xs, ys, deadline)
    if cert is None:
        raise CounterexampleError(
            "line does not contract to a 3-connected host with the minor",
            payload={"filament": ys, "hull": xs})
    if len(ys) == 3:
        c3 = m.contract(ys).is_tutte_3connected()
        if not c3 and m.rank() >= 4:
            raise CounterexampleError(
                "triweb triangle fails to contract 3-connectedly",
                payload={"hull": xs, "filament": ys})
        return Triweb(xs, ys, m, n, tuple(cocs), cert, c3)
    return Carambole(xs, ys, m, n, tuple(cocs), cert)


@dataclass
class Biweb:
    """Two triads hanging off a vertically N-contractible triangle.

    Roles: the triads are {x1, y2, y3} and {x2, y1, y3}.  Strict means no
    third element completes the pattern to a triweb on the same triangle.
    """

    x1: object
    x2: object
    ys: tuple
    strict: bool
    host: object
    n_tag: object
    triangle_certificate: dict
    completions: tuple

    @property
    def elements(self):
        return (self.x1, self.x2) + self.ys


def find_biwebs(m, n=None, deadline=NO_DEADLINE):
    if not m.is_simple():
        raise DomainError("biweb scan expects a simple matroid")
    labs = sort_labels(m.labels)
    triads = {frozenset(t) for t in m.triads()}
    out = []
    for tri in m.triangles():
        tset = sort_labels(tri)
        vert = None
        for y3 in tset:
            y1, y2 = [y for y in tset if y != y3]
            x1s = [x for x in labs
                   if x not in tri and frozenset((x, y2, y3)) in triads]
            x2s = [x for x in labs
                   if x not in tri and frozenset((x, y1, y3)) in triads]
            for x1 in x1s:
                for x2 in x2s:
                    if x1 == x2:
                        continue
                    deadline.check(out)
                    if vert is None:
                        vert = is_vertically_contractible_set(m, n, tset,
                                                              deadline)
                    ok, cert = vert
                    if not ok:
                        break
                    x3s = tuple(x for x in labs
                                if x not in tri and x not in (x1, x2)
                                and frozenset((x, y1, y2)) in triads)
                    out.append(Biweb(x1, x2, (y1, y2, y3), not x3s, m, n,
                                     cert, x3s))
                if vert is not None and not vert[0]:
                    break
            if vert is not None and not vert[0]:
                break
    out.sort(key=lambda b: (_tkey(b.ys), _lkey(b.x1), _lkey(b.x2)))
    return out


# ---------------------------------------------------------------------------
# Circuits across a filament contraction
# ---------------------------------------------------------------------------

def circuit_transfer(m, k, circuit):
    """Image of a host circuit in M/L, certified to still be a circuit."""
    circuit = tuple(sort_labels(circuit))
    if not is_circuit(m, circuit):
        raise DomainError("transfer needs a circuit of the host")
    lset = set(k.ys)
    if set(circuit) <= lset:
        raise DomainError("circuit lies inside the filament")
    image = tuple(x for x in circuit if x not in lset)
    if not is_circuit(m.contract(k.ys), image):
        raise CounterexampleError(
            "circuit image is not a circuit after contracting the filament",
            payload={"circuit": circuit, "image": image})
    return image


def expand_circuit(m, k, circuit):
    """All host circuits whose image under the filament contraction is the
    given circuit.

    A host circuit can use at most two filament elements (three collinear
    points would hide a smaller dependency), so the candidates are exactly
    the unions with at most two of them; each is confirmed by the rank
    oracle.
    """
    circuit = tuple(sort_labels(circuit))
    lset = sort_labels(k.ys)
    if set(circuit) & set(lset):
        raise DomainError("expansion starts from a circuit of the contraction")
    if not is_circuit(m.contract(k.ys), circuit):
        raise DomainError("expansion needs a circuit of the contraction")
    found = []
    for size in (0, 1, 2):
        for extra in combinations(lset, size):
            cand = tuple(sort_labels(circuit + extra))
            if is_circuit(m, cand):
                found.append(cand)
    found.sort(key=lambda c: (len(c), _tkey(c)))
    return found


# ---------------------------------------------------------------------------
# The rank-n theta matroid
# ---------------------------------------------------------------------------

@dataclass
class ThetaMatroid:
    n: int
    xs: tuple
    ys: tuple
    matroid: Matroid


def theta(n):
    """Rank-n matroid on x_1..x_n, y_1..y_n whose dual carries the ys as a
    line, the xs as a coline, and each (ys - y_i) + x_i as a cocircuit.

    Realized over the rationals: y_i is the i-th unit vector and x_i walks
    the line { (j - i) : j } through the all-ones direction.  The three
    defining dual properties are rechecked at construction and refusal to
    hold raises.
    """
    if n < 3:
        raise DomainError("theta needs at least three line points")
    width = len(str(n))
    xs = tuple("x%0*d" % (width, i) for i in range(1, n + 1))
    ys = tuple("y%0*d" % (width, i) for i in range(1, n + 1))
    cols = [[j - i for j in range(1, n + 1)] for i in range(1, n + 1)]
    cols += [[1 if j == i else 0 for j in range(n)] for i in range(n)]
    m = linear_matroid(cols, labels=xs + ys)
    d = m.dual()
    if d.rank(ys) != 2 or d.closure(ys) != frozenset(ys):
        raise CounterexampleError("theta: ys do not form a line of the dual")
    if m.rank(xs) != 2 or m.closure(xs) != frozenset(xs):
        raise CounterexampleError("theta: xs do not form a coline of the dual")
    for i in range(n):
        coc = [y for j, y in enumerate(ys) if j != i] + [xs[i]]
        if not is_circuit(m, coc):
            raise CounterexampleError(
                "theta: expected dual cocircuit missing", payload={"i": i})
    return ThetaMatroid(n, xs, ys, m)


# ---------------------------------------------------------------------------
# Reconstruction: regrow the host from its filament contraction
# ---------------------------------------------------------------------------

def _fresh_y_labels(taken, n):
    width = len(str(n))
    stem = "y"
    while True:
        ys = tuple("%s%0*d" % (stem, width, i) for i in range(1, n + 1))
        if not (set(ys) & taken):
            return ys
        stem += "y"


def _verify_modular_line(t, xset):
    """The glue line must be modular in the theta side: rank-sum equality
    against every flat, enumerated as closures of all subsets."""
    labs = sort_labels(t.labels)
    flats = set()
    for size in range(len(labs) + 1):
        for sub in combinations(labs, size):
            flats.add(t.closure(sub))
    rx = t.rank(xset)
    xs = set(xset)
    for f in flats:
        lhs = t.rank(f) + rx
        rhs = t.rank(f | xs) + t.rank(f & xs)
        if lhs != rhs:
            raise DomainError(
                "glue line is not modular against the flat %r"
                % (sort_labels(f),))


def reconstruct(h, xset, n):
    """Host M with a filament over xset such that contracting it returns h.

    Dually: glue the theta matroid onto h* along the line xset (their flats
    interleave through the mutual closure fixpoint), then dualize.  The
    round trip M/ys = h, the cocircuit pattern, and 3-connectivity of the
    result are rechecked and raise on failure.
    """
    xset = tuple(sort_labels(xset))
    if len(set(xset)) != len(xset) or any(x not in h for x in xset):
        raise DomainError("hull must be a set of elements of the base")
    if n != len(xset):
        raise DomainError("hull size must match n")
    if n < 3:
        raise DomainError("reconstruction needs at least three hull elements")
    if not h.is_cosimple():
        raise DomainError("base must be cosimple")
    if h.corank(xset) != 2:
        raise DomainError("hull is not corank 2 in the base")
    if not h.is_tutte_3connected():
        raise DomainError("base must be 3-connected for the round trip")

    ys = _fresh_y_labels(set(h.labels), n)
    th = theta(n)
    mapping = dict(zip(th.xs, xset))
    mapping.update(zip(th.ys, ys))
    t = th.matroid.relabel(mapping)
    _verify_modular_line(t, xset)

    dh = h.dual()
    for size in range(n + 1):
        for sub in combinations(xset, size):
            if dh.rank(sub) != t.rank(sub):
                raise DomainError(
                    "base dual and theta disagree on the glue line ranks")

    ground = tuple(sort_labels(h.labels)) + ys
    pos = {lab: i for i, lab in enumerate(ground)}
    e1 = [lab for lab in ground if lab in h]
    e2 = list(xset) + list(ys)

    def closure_fn(mask):
        cur = mask
        while True:
            inside = {lab for lab in ground if (cur >> pos[lab]) & 1}
            grown = set(dh.closure([lab for lab in e1 if lab in inside]))
            grown |= t.closure([lab for lab in e2 if lab in inside])
            nxt = 0
            for lab in grown:
                nxt |= 1 << pos[lab]
            if nxt == cur:
                return cur
            cur = nxt

    p = Matroid(ClosureBase(len(ground), closure_fn), labels=ground)
    if p.rank() != dh.rank() + n - 2:
        raise CounterexampleError(
            "glued dual has the wrong rank",
            payload={"got": p.rank(), "want": dh.rank() + n - 2})
    m = p.dual()
    if m.size <= 16:
        m = m.as_table_matroid()

    contracted = m.contract(ys)
    if h.size <= 16:
        if not contracted.rank_table_equals(h):
            raise CounterexampleError("contracting the new filament does not "
                                      "return the base")
    else:
        hl = sort_labels(h.labels)
        for size in (1, 2, 3):
            for sub in combinations(hl, size):
                if contracted.rank(sub) != h.rank(sub):
                    raise CounterexampleError(
                        "contracting the new filament does not return the base")
    if not m.is_tutte_3connected():
        raise CounterexampleError("reconstructed host is not 3-connected")
    if m.rank(ys) != 2 or m.closure(ys) != frozenset(ys):
        raise CounterexampleError("new filament is not a line of the host")
    for i in range(n):
        coc = [y for j, y in enumerate(ys) if j != i] + [xset[i]]
        if not is_cocircuit(m, coc):
            raise CounterexampleError(
                "reconstructed host misses a hull cocircuit",
                payload={"i": i})
    si_m, _ = contracted.simplify()
    if not si_m.is_tutte_3connected():
        raise CounterexampleError("new filament is not vertically contractible")
    return m
