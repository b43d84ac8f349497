"""Figure rendering for reports.

Every command that writes a report also drops a PNG next to it: a line-item
bar for single instances, a size-versus-gap scatter for sweeps, and a graph
drawing with the extremal family highlighted for sharpness runs.  Uses the
Agg backend so headless runs work.
"""

import math

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402

STATUS_COLORS = {"pass": "#2a9d5c", "fail": "#d9484d",
                 "skipped": "#b9b9b9", "budget": "#e3a93c"}


def line_item_figure(report_dict, path):
    """Horizontal status bar per theorem line item of one instance."""
    items = report_dict["lineItems"]
    names = [it["name"] for it in items][::-1]
    colors = [STATUS_COLORS.get(it["status"], "#777777")
              for it in items][::-1]
    fig, ax = plt.subplots(figsize=(6, 0.5 * max(4, len(items))))
    ax.barh(range(len(items)), [1] * len(items), color=colors)
    ax.set_yticks(range(len(items)), names)
    ax.set_xticks([])
    for i, it in enumerate(items[::-1]):
        ax.text(0.02, i, it["status"], va="center", color="white",
                fontweight="bold")
    ax.set_title("%s  (k = %d)" % (report_dict["instanceId"][:60],
                                   report_dict["k"]))
    fig.tight_layout()
    fig.savefig(path, dpi=110)
    plt.close(fig)
    return path


def _family_size(inst):
    for it in inst["lineItems"]:
        if it["name"] == "family_bound" and it["status"] == "pass":
            return it["witness"].get("size")
    return None


def sweep_figure(payload, path):
    """Family size against rank gap, with the guaranteed bound curve."""
    ks, sizes, colors = [], [], []
    for inst in payload["instances"]:
        size = _family_size(inst)
        if size is None:
            continue
        ks.append(inst["k"])
        sizes.append(size)
        colors.append(STATUS_COLORS.get(inst["status"], "#777777"))
    fig, ax = plt.subplots(figsize=(6, 4))
    if ks:
        # spread coincident points a little so densities stay visible
        counts = {}
        jx, jy = [], []
        for k, s in zip(ks, sizes):
            c = counts.get((k, s), 0)
            counts[(k, s)] = c + 1
            jx.append(k + 0.03 * c)
            jy.append(s + 0.03 * c)
        ax.scatter(jx, jy, c=colors, s=22, alpha=0.8, edgecolors="none")
        kmax = max(ks)
        grid = list(range(2, kmax + 1))
        ax.plot(grid, [math.ceil(k / 2) + 1 for k in grid], "k--",
                label="ceil(k/2)+1")
        ax.legend()
    ax.set_xlabel("rank gap k")
    ax.set_ylabel("free family size")
    ax.set_title("families built vs. guaranteed bound (%d instances)"
                 % len(payload["instances"]))
    fig.tight_layout()
    fig.savefig(path, dpi=110)
    plt.close(fig)
    return path


def sharpness_figure(inst, members, path):
    """The glued graph with the extremal family's edges highlighted."""
    g = inst.graph
    pos = {}
    for i, u in enumerate(inst.u_vertices):
        pos[u] = (2.0 + 2.0 * i, 3.0)
    for i, v in enumerate(inst.v_vertices):
        span = max(len(inst.v_vertices) - 1, 1)
        pos[v] = (6.0 * i / span, 4.6)
    # vertices of the m,m part: everything not yet placed
    rest = [v for v in range(g.n) if v not in pos]
    half = (len(rest) + 1) // 2
    for i, v in enumerate(rest[:half]):
        span = max(half - 1, 1)
        pos[v] = (6.0 * i / span, 1.4)
    for i, v in enumerate(rest[half:]):
        span = max(len(rest) - half - 1, 1)
        pos[v] = (6.0 * i / span, 0.0)
    member_color = {}
    cmap = plt.get_cmap("tab10")
    for mi, mem in enumerate(members):
        for eid in mem:
            member_color[eid] = cmap(mi % 10)
    fig, ax = plt.subplots(figsize=(7, 6))
    for eid, (u, v) in enumerate(g.edges):
        x = [pos[u][0], pos[v][0]]
        y = [pos[u][1], pos[v][1]]
        if eid in member_color:
            ax.plot(x, y, color=member_color[eid], linewidth=2.4, zorder=3)
        else:
            ax.plot(x, y, color="#cccccc", linewidth=0.8, zorder=1)
    for v, (x, y) in pos.items():
        ax.scatter([x], [y], s=60, color="#333333", zorder=4)
    ax.set_title("sharpness n=%d m=%d: extremal family edges"
                 % (inst.n, inst.m))
    ax.set_axis_off()
    fig.tight_layout()
    fig.savefig(path, dpi=110)
    plt.close(fig)
    return path
