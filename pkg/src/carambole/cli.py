"""Command-line front end.

Four commands: analyze checks one (host, minor) pair against every theorem
line; sweep runs analyze across a corpus; sharpness builds the glued
extremal instance and verifies its family, maximality and edge-deletion
claims; reconstruct tears a filament out of a host and regrows it.  Every
run writes a JSON or CSV report plus a PNG figure next to it, and failing
instances get a replayable counterexample directory.

Exit codes: 0 all pass, 1 some check failed, 2 usage problem, 3 budget ran
out with a partial report.
"""

import argparse
import os
import sys
from multiprocessing import Pool

from .budget import Deadline
from .contractibility import has_minor_bool, is_vertically_contractible_set
from .errors import (BudgetError, CounterexampleError, DomainError,
                     FormatError)
from .figures import line_item_figure, sharpness_figure, sweep_figure
from .free_family import (exhaustive_max_free_family, is_free_family,
                          verify_bounds)
from .graphs import (canonical_g6, corpus, corpus_from_file, emit_graph6,
                     named_graph, parse_graph6, sharpness_instance)
from .matroid import (bond_matroid, graphic_matroid, parse_bases_text,
                      sort_labels)
from .report import (LineItem, RunConfig, VerificationReport, report_payload,
                     render_csv, render_json, write_counterexample)
from .structures import certify_filament, find_caramboles, reconstruct

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3


def _load_graph(spec):
    """A graph from a name, a graph6 string, or a file with a graph6 line."""
    if os.path.exists(spec):
        with open(spec) as fh:
            for line in fh:
                line = line.strip()
                if line:
                    return parse_graph6(line)
        raise FormatError("no graph6 line in %r" % spec)
    try:
        return named_graph(spec)
    except DomainError:
        return parse_graph6(spec)


def _load_host(args):
    """(matroid, label, graph or None) for --graph/--matroid style flags."""
    if getattr(args, "matroid", None):
        with open(args.matroid) as fh:
            m = parse_bases_text(fh.read())
        return m, os.path.basename(args.matroid), None
    if not getattr(args, "graph", None):
        raise DomainError("need --graph or --matroid")
    g = _load_graph(args.graph)
    if args.dual:
        return bond_matroid(g), "dual:" + canonical_g6(g), g
    return graphic_matroid(g), canonical_g6(g), g


def _load_minor(args):
    spec = getattr(args, "minor", None)
    if not spec or spec == "empty":
        return None, "empty"
    if os.path.exists(spec):
        with open(spec) as fh:
            text = fh.read()
        head = text.lstrip()
        if head.startswith("E ") or head.startswith("#"):
            return parse_bases_text(text), os.path.basename(spec)
    g = _load_graph(spec)
    if getattr(args, "dual", False):
        return bond_matroid(g), "dual:" + canonical_g6(g)
    return graphic_matroid(g), canonical_g6(g)


def _out_paths(args, default_stem):
    out = args.out or (default_stem + "." + args.format)
    stem = os.path.splitext(out)[0]
    return out, stem + ".png"


def _config(args, command):
    return RunConfig(
        command=command,
        corpus=getattr(args, "corpus", None),
        minor=getattr(args, "minor", None),
        sharp_n=getattr(args, "n", None),
        sharp_m=getattr(args, "m", None),
        budget_seconds=args.budget_seconds,
        total_budget_seconds=getattr(args, "total_budget_seconds", 3600.0),
        workers=getattr(args, "workers", 1),
        out=args.out,
        fmt=args.format)


def _emit(config, reports, out_path, fig_renderer=None):
    payload = report_payload(config, reports)
    text = render_json(payload) if config.fmt == "json" else render_csv(payload)
    with open(out_path, "w") as fh:
        fh.write(text)
    if fig_renderer is not None:
        fig_renderer(payload)
    return payload


def _status_exit(payload):
    return {"pass": EXIT_PASS, "fail": EXIT_FAIL,
            "budget": EXIT_BUDGET}[payload["status"]]


def _counterexample_dir(stem, report, matroid=None, graph=None):
    safe = "".join(ch if ch.isalnum() else "_"
                   for ch in report.instance_id)[:80]
    dirpath = "%s_counterexamples/%s" % (stem, safe)
    g6 = emit_graph6(graph) if graph is not None else None
    write_counterexample(dirpath, report, matroid=matroid, graph6_line=g6)
    report.counterexample = dirpath
    return dirpath


# ---------------------------------------------------------------------------
# analyze
# ---------------------------------------------------------------------------

def _cmd_analyze(args):
    config = _config(args, "analyze")
    config.validate()
    m, host_label, host_graph = _load_host(args)
    n, minor_label = _load_minor(args)
    k = m.rank() - (0 if n is None else n.rank())
    if k < 2:
        print("rank gap k = %d is below 2; nothing to verify" % k,
              file=sys.stderr)
        return EXIT_USAGE
    deadline = Deadline(args.budget_seconds, "analyze")
    instance_id = "%s>%s" % (host_label, minor_label)
    report = verify_bounds(m, n, deadline, instance_id=instance_id)
    out, fig = _out_paths(args, "analyze_report")
    stem = os.path.splitext(out)[0]
    if report.status == "fail":
        _counterexample_dir(stem, report, matroid=m, graph=host_graph)
    payload = _emit(config, [report], out,
                    lambda p: line_item_figure(p["instances"][0], fig))
    print("analyze %s: %s -> %s" % (instance_id, payload["status"], out))
    return _status_exit(payload)


# ---------------------------------------------------------------------------
# sweep
# ---------------------------------------------------------------------------

def _sweep_jobs(args):
    if args.max_n is not None:
        hosts = corpus(args.max_n)
    elif args.corpus and args.corpus.startswith("gen:"):
        hosts = corpus(int(args.corpus[4:]))
    elif args.corpus:
        hosts = corpus_from_file(args.corpus)
    else:
        raise DomainError("sweep needs --corpus or --max-n")
    if args.minor:
        minors = [_load_graph(args.minor)]
    else:
        minors = hosts
    jobs = []
    for g in hosts:
        mg = graphic_matroid(g)
        for h in minors:
            if g.n - h.n < 2:
                continue
            hm = graphic_matroid(h)
            if not has_minor_bool(mg, hm):
                continue
            jobs.append((emit_graph6(g), emit_graph6(h),
                         args.budget_seconds))
    return jobs


def _sweep_one(job):
    g6g, g6h, budget = job
    g = parse_graph6(g6g)
    h = parse_graph6(g6h)
    m = graphic_matroid(g)
    n = graphic_matroid(h)
    deadline = Deadline(budget, "sweep instance")
    instance_id = "%s>%s" % (canonical_g6(g), canonical_g6(h))
    return verify_bounds(m, n, deadline, instance_id=instance_id)


def _cmd_sweep(args):
    config = _config(args, "sweep")
    config.validate()
    jobs = _sweep_jobs(args)
    total = Deadline(args.total_budget_seconds, "sweep")
    if args.workers > 1:
        with Pool(args.workers) as pool:
            reports = pool.map(_sweep_one, jobs)
    else:
        reports = []
        for job in jobs:
            total.check([r.to_dict() for r in reports])
            reports.append(_sweep_one(job))
    out, fig = _out_paths(args, "sweep_report")
    stem = os.path.splitext(out)[0]
    for rep in reports:
        if rep.status == "fail":
            g6 = rep.instance_id.split(">")[0]
            _counterexample_dir(stem, rep,
                                matroid=graphic_matroid(parse_graph6(g6)),
                                graph=parse_graph6(g6))
    payload = _emit(config, reports, out, lambda p: sweep_figure(p, fig))
    print("sweep: %d instances, %s -> %s"
          % (len(reports), payload["status"], out))
    return _status_exit(payload)


# ---------------------------------------------------------------------------
# sharpness
# ---------------------------------------------------------------------------

def _sharpness_family(inst, m, n, deadline):
    """The prescribed extremal family: star-triple filaments, then the
    three edges inside the shared triangle as singletons."""
    g = inst.graph
    members = []
    for star in inst.star_triples:
        ys = sort_labels(star)
        xs = []
        for y in ys:
            ends = set()
            for other in ys:
                if other != y:
                    ends.update(g.edges[other])
            pair = tuple(sorted(ends & set(inst.u_vertices)))
            xs.append(g.edge_id(*pair))
        car = certify_filament(m, tuple(ys), tuple(xs), n, deadline)
        members.append((tuple(ys), "filament", car))
    for e in sort_labels(inst.u_edge_ids):
        ok, cert = is_vertically_contractible_set(m, n, [e], deadline)
        if not ok:
            raise CounterexampleError(
                "shared-triangle edge %r is not vertically contractible"
                % (e,), payload={"element": e})
        members.append(((e,), "singleton", cert))
    return members


def _cmd_sharpness(args):
    config = _config(args, "sharpness")
    config.validate()
    inst = sharpness_instance(args.n, args.m)
    m = bond_matroid(inst.graph)
    n = bond_matroid(inst.h_graph())
    deadline = Deadline(args.budget_seconds, "sharpness")
    expected = (inst.expected_k + 1) // 2 + 1
    items = []
    k = m.rank() - n.rank()
    items.append(LineItem("k", "pass" if k == inst.expected_k else "fail",
                          {"k": k, "expected": inst.expected_k}))
    member_sets = []
    try:
        fam = _sharpness_family(inst, m, n, deadline)
        member_sets = [mm[0] for mm in fam]
        ok, wit = is_free_family(m, member_sets)
        good = ok and len(fam) == expected
        witness = {"size": len(fam), "expected": expected, "free": ok,
                   "members": [list(s) for s in member_sets]}
        if not ok:
            witness["freeness"] = wit
        items.append(LineItem("family", "pass" if good else "fail", witness))
    except (CounterexampleError, DomainError) as err:
        items.append(LineItem("family", "fail", {"message": str(err)}))
    try:
        best, _ = exhaustive_max_free_family(m, n, deadline)
        items.append(LineItem("maximal",
                              "pass" if best == expected else "fail",
                              {"maxFamilySize": best, "expected": expected}))
    except BudgetError as err:
        items.append(LineItem("maximal", "budget", {"message": str(err)}))
    bad = []
    n_graph = inst.h_graph()
    for e in sort_labels(inst.h_edge_ids):
        deleted = inst.graph.delete_edges([e])
        if has_minor_bool(graphic_matroid(deleted), graphic_matroid(n_graph),
                          deadline):
            bad.append(e)
    items.append(LineItem("deletions", "pass" if not bad else "fail",
                          {"checked": len(inst.h_edge_ids),
                           "violations": bad}))
    report = VerificationReport(
        instance_id="sharpness-n%d-m%d" % (args.n, args.m),
        edges=m.size, rank_host=m.rank(), rank_minor=n.rank(), k=k,
        line_items=items)
    out, fig = _out_paths(args, "sharpness_report")
    stem = os.path.splitext(out)[0]
    if report.status == "fail":
        _counterexample_dir(stem, report, matroid=None, graph=inst.graph)
    payload = _emit(config, [report], out,
                    lambda p: sharpness_figure(inst, member_sets, fig))
    print("sharpness n=%d m=%d: k=%d family=%d %s -> %s"
          % (args.n, args.m, k, len(member_sets), payload["status"], out))
    return _status_exit(payload)


# ---------------------------------------------------------------------------
# reconstruct
# ---------------------------------------------------------------------------

def _cmd_reconstruct(args):
    config = _config(args, "reconstruct")
    config.validate()
    m, host_label, host_graph = _load_host(args)
    deadline = Deadline(args.budget_seconds, "reconstruct")
    cars = find_caramboles(m, None, deadline)
    if not cars:
        print("no carambole in %s to reconstruct around" % host_label,
              file=sys.stderr)
        return EXIT_USAGE
    car = cars[0]
    items = [LineItem("carambole", "pass",
                      {"filament": list(car.ys), "hull": list(car.xs)})]
    try:
        h = m.contract(car.ys)
        rebuilt = reconstruct(h, car.xs, len(car.ys))
        wit = {"elements": rebuilt.size, "rank": rebuilt.rank()}
        if rebuilt.size <= 15 and m.size <= 15:
            iso = rebuilt.find_isomorphism(m)
            wit["isomorphic"] = iso is not None
            status = "pass" if iso is not None else "fail"
        else:
            wit["check"] = "postconditions"
            status = "pass"
        items.append(LineItem("reconstruction", status, wit))
    except (CounterexampleError, DomainError) as err:
        items.append(LineItem("reconstruction", "fail",
                              {"message": str(err)}))
    report = VerificationReport(
        instance_id="reconstruct:%s" % host_label,
        edges=m.size, rank_host=m.rank(), rank_minor=0, k=m.rank(),
        line_items=items)
    out, fig = _out_paths(args, "reconstruct_report")
    stem = os.path.splitext(out)[0]
    if report.status == "fail":
        _counterexample_dir(stem, report, matroid=m, graph=host_graph)
    payload = _emit(config, [report], out,
                    lambda p: line_item_figure(p["instances"][0], fig))
    print("reconstruct %s: %s -> %s" % (host_label, payload["status"], out))
    return _status_exit(payload)


# ---------------------------------------------------------------------------
# entry point
# ---------------------------------------------------------------------------

def _add_common(sub):
    sub.add_argument("--budget-seconds", type=float, default=60.0)
    sub.add_argument("--out", default=None)
    sub.add_argument("--format", choices=("json", "csv"), default="json")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="carambole",
        description="verify contractible-structure bounds on matroids")
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("analyze", help="check one (host, minor) pair")
    p.add_argument("--graph", help="graph6 string, named graph, or file")
    p.add_argument("--matroid", help="explicit bases file")
    p.add_argument("--dual", action="store_true",
                   help="use bond matroids for host and minor")
    p.add_argument("--minor", default=None,
                   help="graph6 | name | file | empty")
    _add_common(p)
    p.set_defaults(fn=_cmd_analyze)

    p = subs.add_parser("sweep", help="corpus x minor pairs with gap >= 2")
    p.add_argument("--corpus", default=None, help="graph6 file or gen:N")
    p.add_argument("--max-n", type=int, default=None,
                   help="shorthand for --corpus gen:N")
    p.add_argument("--minor", default=None,
                   help="restrict to one minor (graph6 | name | file)")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--total-budget-seconds", type=float, default=3600.0)
    _add_common(p)
    p.set_defaults(fn=_cmd_sweep)

    p = subs.add_parser("sharpness", help="extremal glued instance checks")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    _add_common(p)
    p.set_defaults(fn=_cmd_sharpness)

    p = subs.add_parser("reconstruct",
                        help="contract a filament and regrow the host")
    p.add_argument("--graph", help="graph6 string, named graph, or file")
    p.add_argument("--matroid", help="explicit bases file")
    p.add_argument("--dual", action="store_true")
    _add_common(p)
    p.set_defaults(fn=_cmd_reconstruct)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (DomainError, FormatError) as err:
        print("error: %s" % err, file=sys.stderr)
        return EXIT_USAGE
    except BudgetError as err:
        print("budget exhausted: %s" % err, file=sys.stderr)
        return EXIT_BUDGET


if __name__ == "__main__":
    sys.exit(main())
