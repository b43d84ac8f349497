"""Minor oracle and the deletion/contraction classification of elements.

Everything here is a pure query over immutable matroids.  The module-level
memo stores only yes/no answers under backend-independent fingerprints, so
parallel workers can rebuild it independently without disagreeing.
"""

from dataclasses import dataclass
from itertools import combinations
import random

from .budget import NO_DEADLINE
from .errors import CounterexampleError, DomainError
from .graphs import SimpleGraph, canonical_cert, find_minor
from .matroid import Matroid, sort_labels

_MINOR_MEMO = {}
_NO_ROUTE = object()


def clear_minor_memo():
    _MINOR_MEMO.clear()


def minor_memo_size():
    return len(_MINOR_MEMO)


def n_is_empty(n):
    return n is None or n.size == 0


def _simple_graph_of(m):
    """The simple graph behind a graphic view, or None.

    Returns (graph, eid_by_label, dual) where eid_by_label maps each matroid
    label to the graph's edge id.  Views with loops or parallel edges are
    rejected; the callers fall back to the generic search for those.
    """
    gv = m.graphic_view()
    if gv is None:
        return None
    nv, edges, dual = gv
    seen = set()
    for u, v in edges:
        if u == v:
            return None
        key = (u, v) if u < v else (v, u)
        if key in seen:
            return None
        seen.add(key)
    used = sorted({v for e in edges for v in e})
    remap = {v: i for i, v in enumerate(used)}
    g = SimpleGraph(len(used), [(remap[u], remap[v]) for u, v in edges])
    eid = {lab: g.edge_id(remap[u], remap[v])
           for lab, (u, v) in zip(m.labels, edges)}
    return g, eid, dual


def _memo_key(m):
    sg = _simple_graph_of(m)
    if sg is not None:
        g, _, dual = sg
        return (b"D" if dual else b"G") + canonical_cert(g)
    if m.size <= 16:
        return b"T" + m.rank_table_bytes()
    return None


@dataclass
class MinorWitnessMatroid:
    """Certificate that M.minor(contract_set, delete_set) is a copy of N."""

    contract_set: tuple
    delete_set: tuple
    isomorphism: dict

    def verify(self, m, n):
        """Recheck the certificate from scratch.

        Rank preservation is confirmed on every subset up to 12 elements;
        beyond that, on all subsets of size <= 3 plus a seeded sample.
        """
        if set(self.contract_set) & set(self.delete_set):
            return False
        if not m.is_independent(self.contract_set):
            return False
        if not m.is_coindependent(self.delete_set):
            return False
        minor = m.minor(self.contract_set, self.delete_set)
        if minor.ground() != set(self.isomorphism):
            return False
        if set(self.isomorphism.values()) != n.ground():
            return False
        labs = sort_labels(minor.labels)
        if len(labs) <= 12:
            subsets = []
            for size in range(len(labs) + 1):
                subsets.extend(combinations(labs, size))
        else:
            subsets = [()]
            for size in (1, 2, 3):
                subsets.extend(combinations(labs, size))
            rng = random.Random(0xC0C0)
            for _ in range(500):
                subsets.append(tuple(lab for lab in labs if rng.random() < 0.5))
        f = self.isomorphism
        return all(minor.rank(s) == n.rank([f[x] for x in s]) for s in subsets)


def _normalize_witness(m, contract, delete, iso):
    """Rewrite (contract, delete) so contract is independent and delete is
    coindependent, keeping the minor on the kept ground set unchanged.

    Loops of M/basis(contract) move to the delete side; the delete side then
    donates a greedy basis extension of the kept set to the contract side.
    The kept-set ranks survive both moves by submodularity.
    """
    cset = []
    extra = []
    for c in sort_labels(contract):
        if m.rank(cset + [c]) > m.rank(cset):
            cset.append(c)
        else:
            extra.append(c)
    dset = sort_labels(list(delete) + extra)
    kept = sort_labels(iso)
    have = m.rank(kept + cset)
    moved = []
    for d in dset:
        if have == m.rank():
            break
        if m.rank(kept + cset + moved + [d]) > have:
            moved.append(d)
            have += 1
    cset = sort_labels(cset + moved)
    dset = tuple(d for d in dset if d not in set(moved))
    return MinorWitnessMatroid(tuple(cset), tuple(dset), iso)


def _route_graph_of(m):
    """Like _simple_graph_of, but collapses loops and parallel classes.

    Returns (graph, eid_by_label, dual, dropped labels).  Discarding the
    dropped labels is sound whenever the target is simple: a simple minor
    never uses a loop or a second copy of a parallel edge, and the drop is
    recorded as a deletion of the primal view.
    """
    gv = m.graphic_view()
    if gv is None:
        return None
    nv, edges, dual = gv
    rep = {}
    dropped = []
    for lab, (u, v) in zip(m.labels, edges):
        if u == v:
            dropped.append(lab)
            continue
        key = (u, v) if u < v else (v, u)
        if key in rep:
            dropped.append(lab)
        else:
            rep[key] = lab
    used = sorted({v for e in rep for v in e})
    remap = {v: i for i, v in enumerate(used)}
    g = SimpleGraph(len(used), [(remap[u], remap[v]) for u, v in rep])
    eid = {lab: g.edge_id(remap[u], remap[v]) for (u, v), lab in rep.items()}
    return g, eid, dual, tuple(dropped)


def _graphic_route(m, n, deadline):
    hm = _route_graph_of(m)
    hn = _simple_graph_of(n)
    if hm is None or hn is None:
        return _NO_ROUTE
    host, host_eid, mdual, dropped = hm
    target, target_eid, ndual = hn
    if mdual != ndual:
        return _NO_ROUTE
    if target.n < 4 or not target.is_three_connected():
        return _NO_ROUTE
    w = find_minor(host, target, deadline)
    if w is None:
        return None
    host_label = {e: lab for lab, e in host_eid.items()}
    target_label = {e: lab for lab, e in target_eid.items()}
    contracted = tuple(sort_labels(host_label[e] for e in w.contracted_edges()))
    deleted = tuple(sort_labels(
        [host_label[e] for e in w.deleted_edges()] + list(dropped)))
    iso = {host_label[he]: target_label[target.edge_id(*pair)]
           for pair, he in w.kept_edges().items()}
    if mdual:
        # (M(G)/C \ D)* = M(G)* \ C / D, so the roles swap in the dual view.
        contracted, deleted = deleted, contracted
    return _normalize_witness(m, contracted, deleted, iso)


def _search_minor(m, n, deadline):
    """Backtracking over (independent contraction, spanning keep-set)."""
    need_c = m.rank() - n.rank()
    labs = sort_labels(m.labels)
    ne = n.size
    if ne > 15:
        raise DomainError("generic minor search is limited to 15-element targets")

    def contract_sets(idx, chosen):
        deadline.check()
        if len(chosen) == need_c:
            yield tuple(chosen)
            return
        for j in range(idx, len(labs)):
            chosen.append(labs[j])
            if m.is_independent(chosen):
                yield from contract_sets(j + 1, chosen)
            chosen.pop()

    for iset in contract_sets(0, []):
        mm = m.contract(iset)
        pool = [lab for lab in labs if lab not in set(iset)]
        # walk keep-sets one at a time so the first isomorphic leaf wins
        rneed = n.rank()

        def leaves(idx, chosen):
            deadline.check()
            if len(chosen) == ne:
                if mm.rank(chosen) == rneed:
                    yield tuple(chosen)
                return
            if len(pool) - idx < ne - len(chosen):
                return
            if mm.rank(chosen + pool[idx:]) < rneed:
                return
            for j in range(idx, len(pool)):
                chosen.append(pool[j])
                yield from leaves(j + 1, chosen)
                chosen.pop()

        for kset in leaves(0, []):
            cand = mm.restrict(kset)
            iso = cand.find_isomorphism(n)
            if iso is not None:
                dels = tuple(lab for lab in pool if lab not in set(kset))
                return MinorWitnessMatroid(iset, dels, iso)
    return None


def has_minor(m, n, deadline=NO_DEADLINE):
    """A witness that N is a minor of M, or None.

    Graphic pairs (both primal or both dual views of simple graphs, target
    3-connected) route through the graph minor search; everything else runs
    the generic contraction/keep-set backtracking.
    """
    if n_is_empty(n):
        return MinorWitnessMatroid((), (), {})
    if n.size > m.size or n.rank() > m.rank() or n.corank() > m.corank():
        return None
    km, kn = _memo_key(m), _memo_key(n)
    key = (km, kn) if km is not None and kn is not None else None
    if key is not None and _MINOR_MEMO.get(key) is False:
        return None
    w = _graphic_route(m, n, deadline)
    if w is _NO_ROUTE:
        w = _search_minor(m, n, deadline)
    if key is not None:
        _MINOR_MEMO[key] = w is not None
    return w


def has_minor_bool(m, n, deadline=NO_DEADLINE):
    """Memo-backed predicate form of has_minor (no witness)."""
    if n_is_empty(n):
        return True
    if n.size > m.size or n.rank() > m.rank() or n.corank() > m.corank():
        return False
    km, kn = _memo_key(m), _memo_key(n)
    key = (km, kn) if km is not None and kn is not None else None
    if key is not None and key in _MINOR_MEMO:
        return _MINOR_MEMO[key]
    return has_minor(m, n, deadline) is not None


@dataclass
class ElementClassification:
    """The four deletion/contraction flags of one element."""

    element: object
    n_deletable: bool
    cyclically_n_deletable: bool
    n_contractible: bool
    vertically_n_contractible: bool
    witnesses: dict

    def flags(self):
        return {
            "nDeletable": self.n_deletable,
            "cyclicallyNDeletable": self.cyclically_n_deletable,
            "nContractible": self.n_contractible,
            "verticallyNContractible": self.vertically_n_contractible,
        }


def _minor_ok(m, n, deadline):
    if n_is_empty(n):
        return True, None
    w = has_minor(m, n, deadline)
    return w is not None, w


def classify_element(m, n, e, deadline=NO_DEADLINE):
    if e not in m:
        raise DomainError("element %r is not in the ground set" % (e,))
    witnesses = {}

    deleted = m.delete([e])
    n_del = deleted.is_tutte_3connected()
    if n_del:
        n_del, w = _minor_ok(deleted, n, deadline)
        if n_del:
            witnesses["nDeletable"] = w

    co_deleted, co_map = deleted.cosimplify()
    cyc = co_deleted.is_tutte_3connected()
    if cyc:
        cyc, w = _minor_ok(co_deleted, n, deadline)
        if cyc:
            witnesses["cyclicallyNDeletable"] = {"cosimplification": co_map,
                                                 "minor": w}

    contracted = m.contract([e])
    n_con = contracted.is_tutte_3connected()
    if n_con:
        n_con, w = _minor_ok(contracted, n, deadline)
        if n_con:
            witnesses["nContractible"] = w

    si_con, si_map = contracted.simplify()
    vert = si_con.is_tutte_3connected()
    if vert:
        vert, w = _minor_ok(si_con, n, deadline)
        if vert:
            witnesses["verticallyNContractible"] = {"simplification": si_map,
                                                    "minor": w}

    if n_con and not vert:
        raise CounterexampleError(
            "contractible element fails the vertical form",
            payload={"element": e})
    if n_del and not cyc:
        raise CounterexampleError(
            "deletable element fails the cyclic form",
            payload={"element": e})
    return ElementClassification(e, n_del, cyc, n_con, vert, witnesses)


def is_vertically_contractible_set(m, n, subset, deadline=NO_DEADLINE):
    """Is si(M/subset) 3-connected with an N-minor?  (flag, witness)."""
    subset = sort_labels(subset)
    if not subset:
        raise DomainError("vertical contractibility needs a nonempty set")
    si_m, rep = m.contract(subset).simplify()
    if not si_m.is_tutte_3connected():
        return False, None
    ok, w = _minor_ok(si_m, n, deadline)
    if not ok:
        return False, None
    return True, {"simplification": rep, "minor": w}


def _vertical_bool(m, n, subset, deadline=NO_DEADLINE):
    si_m, _ = m.contract(subset).simplify()
    return si_m.is_tutte_3connected() and (
        n_is_empty(n) or has_minor_bool(si_m, n, deadline))


def vertically_contractible_elements(m, n, deadline=NO_DEADLINE):
    return tuple(e for e in sort_labels(m.labels)
                 if _vertical_bool(m, n, [e], deadline))


def n_contractible_elements(m, n, deadline=NO_DEADLINE):
    out = []
    for e in sort_labels(m.labels):
        con = m.contract([e])
        if con.is_tutte_3connected() and (
                n_is_empty(n) or has_minor_bool(con, n, deadline)):
            out.append(e)
    return tuple(out)


def n_deletable_elements(m, n, deadline=NO_DEADLINE):
    out = []
    for e in sort_labels(m.labels):
        dm = m.delete([e])
        if dm.is_tutte_3connected() and (
                n_is_empty(n) or has_minor_bool(dm, n, deadline)):
            out.append(e)
    return tuple(out)


def is_replaceable(m, n, p, s=(), vc=None, deadline=NO_DEADLINE):
    """(S,N)-replaceability of p: is p in cl(S + I) - cl(S) for some set I
    of vertically N-contractible elements?

    Using all of them at once is exact by closure monotonicity.  The witness
    is the prefix-greedy I in label order; S defaults to the empty set, which
    gives plain N-replaceability.
    """
    s = sort_labels(s)
    if p in set(s):
        raise DomainError("replaceability asks about an element outside S")
    if vc is None:
        vc = vertically_contractible_elements(m, n, deadline)
    if p in m.closure(s):
        return False, None
    if p not in m.closure(list(s) + list(vc)):
        return False, None
    chosen = []
    for v in vc:
        chosen.append(v)
        if p in m.closure(list(s) + chosen):
            return True, tuple(chosen)
    raise AssertionError("closure monotonicity violated")
