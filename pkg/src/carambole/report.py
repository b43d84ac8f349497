"""Report types and serialization for the verification front end.

One VerificationReport per analyzed instance, each carrying theorem-level
line items with a status of pass, fail, skipped or budget.  JSON output is
deterministic: keys are sorted and instances ordered by id, so two runs of
the same configuration differ only in the timestamp and the per-item
elapsed times.  Comparisons should go through strip_timing.  CSV output is
a flat projection with one row per line item.
"""

import csv
import json
import os
import time
from dataclasses import dataclass, field

from .errors import DomainError
from .matroid import emit_bases_text

SCHEMA_VERSION = 1

COMMANDS = ("analyze", "sweep", "sharpness", "reconstruct")
FORMATS = ("json", "csv")


@dataclass
class LineItem:
    name: str
    status: str
    witness: dict = field(default_factory=dict)
    elapsed: float = 0.0

    def to_dict(self):
        return {"name": self.name, "status": self.status,
                "witness": self.witness, "elapsed": round(self.elapsed, 3)}


@dataclass
class VerificationReport:
    """Everything recorded about one (host, minor) instance."""

    instance_id: str
    edges: int
    rank_host: int
    rank_minor: int
    k: int
    line_items: list
    trace_digest: list = field(default_factory=list)
    counterexample: str = None

    @property
    def status(self):
        seen = [item.status for item in self.line_items]
        if "fail" in seen:
            return "fail"
        if "budget" in seen:
            return "budget"
        return "pass"

    def to_dict(self):
        return {"instanceId": self.instance_id,
                "edges": self.edges,
                "rankHost": self.rank_host,
                "rankMinor": self.rank_minor,
                "k": self.k,
                "status": self.status,
                "lineItems": [item.to_dict() for item in self.line_items],
                "traceDigest": self.trace_digest,
                "counterexample": self.counterexample}


@dataclass
class RunConfig:
    command: str
    corpus: str = None
    minor: str = None
    sharp_n: int = None
    sharp_m: int = None
    budget_seconds: float = 60.0
    total_budget_seconds: float = 3600.0
    workers: int = 1
    out: str = None
    fmt: str = "json"

    def validate(self):
        if self.command not in COMMANDS:
            raise DomainError("unknown command %r" % (self.command,))
        if self.budget_seconds <= 0 or self.total_budget_seconds <= 0:
            raise DomainError("budgets must be positive")
        if self.workers < 1:
            raise DomainError("worker count must be positive")
        if self.fmt not in FORMATS:
            raise DomainError("unknown report format %r" % (self.fmt,))
        if self.out:
            parent = os.path.dirname(os.path.abspath(self.out)) or "."
            if not os.path.isdir(parent) or not os.access(parent, os.W_OK):
                raise DomainError("output path %r is not writable" % (self.out,))

    def to_dict(self):
        return {"command": self.command, "corpus": self.corpus,
                "minor": self.minor, "sharpN": self.sharp_n,
                "sharpM": self.sharp_m,
                "budgetSeconds": self.budget_seconds,
                "totalBudgetSeconds": self.total_budget_seconds,
                "workers": self.workers, "format": self.fmt}


def report_payload(config, reports):
    reports = sorted(reports, key=lambda r: r.instance_id)
    statuses = [r.status for r in reports]
    if "fail" in statuses:
        overall = "fail"
    elif "budget" in statuses:
        overall = "budget"
    else:
        overall = "pass"
    return {"schemaVersion": SCHEMA_VERSION,
            "timestamp": time.strftime("%Y-%m-%dT%H:%M:%SZ", time.gmtime()),
            "config": config.to_dict(),
            "status": overall,
            "instances": [r.to_dict() for r in reports]}


def render_json(payload):
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def render_csv(payload):
    """Flat projection: one row per line item, instances already sorted."""
    import io

    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["instanceId", "edges", "rankHost", "rankMinor", "k",
                     "item", "status", "witness", "elapsed"])
    for inst in payload["instances"]:
        for item in inst["lineItems"]:
            writer.writerow([
                inst["instanceId"], inst["edges"], inst["rankHost"],
                inst["rankMinor"], inst["k"], item["name"], item["status"],
                json.dumps(item["witness"], sort_keys=True),
                item["elapsed"]])
    return buf.getvalue()


def strip_timing(payload):
    """Copy of the payload without timestamp and elapsed fields.

    Wall-clock values are the only run-to-run noise in a report, so equality
    after stripping is the right determinism check.
    """
    if isinstance(payload, dict):
        return {k: strip_timing(v) for k, v in payload.items()
                if k not in ("timestamp", "elapsed")}
    if isinstance(payload, list):
        return [strip_timing(v) for v in payload]
    return payload


def write_report(path, config, reports):
    payload = report_payload(config, reports)
    text = render_json(payload) if config.fmt == "json" else render_csv(payload)
    with open(path, "w") as fh:
        fh.write(text)
    return payload


def write_counterexample(dirpath, report, matroid=None, graph6_line=None):
    """Materialize a failing instance for offline replay.

    instance.g6 appears when the host is graphic, matroid.txt always (either
    explicit bases or a size note), report.json carries the single failing
    report.
    """
    os.makedirs(dirpath, exist_ok=True)
    if graph6_line is not None:
        with open(os.path.join(dirpath, "instance.g6"), "w") as fh:
            fh.write(graph6_line.rstrip("\n") + "\n")
    with open(os.path.join(dirpath, "matroid.txt"), "w") as fh:
        if matroid is None:
            fh.write("no explicit matroid recorded\n")
        elif matroid.size <= 18:
            fh.write(emit_bases_text(matroid))
        else:
            fh.write("too large for explicit bases: %d elements, rank %d\n"
                     % (matroid.size, matroid.rank()))
    with open(os.path.join(dirpath, "report.json"), "w") as fh:
        fh.write(json.dumps(report.to_dict(), indent=2, sort_keys=True) + "\n")
    return dirpath
