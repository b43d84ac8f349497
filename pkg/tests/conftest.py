"""Shared fixtures and the acceptance-criteria summary hook.

The expensive inputs (random matroid pool, graph corpus pairs, the big
invariant sweep) are session-scoped so the acceptance module and the unit
modules share one computation.  Acceptance tests call record_criterion and
the terminal summary prints one verdict line per criterion at the end of
the run.
"""

import os
import sys

sys.path.insert(0, os.path.dirname(__file__))

import pytest

_acceptance_lines = {}


def record_criterion(number, title, ok, detail=""):
    _acceptance_lines[number] = (title, bool(ok), detail)


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _acceptance_lines:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_acceptance_lines):
        title, ok, detail = _acceptance_lines[number]
        verdict = "PASS" if ok else "FAIL"
        line = "criterion %d: %s - %s" % (number, verdict, title)
        if detail:
            line += " (%s)" % detail
        terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def pool():
    import oracles

    return oracles.random_matroid_pool()


@pytest.fixture(scope="session")
def corpus7_pairs():
    """All (host, minor) graph pairs the sweep command would enumerate at 7."""
    from carambole.contractibility import has_minor_bool
    from carambole.graphs import corpus
    from carambole.matroid import graphic_matroid

    hosts = corpus(7)
    pairs = []
    for g in hosts:
        mg = graphic_matroid(g)
        for h in hosts:
            if g.n - h.n < 2:
                continue
            if has_minor_bool(mg, graphic_matroid(h)):
                pairs.append((g, h))
    return pairs


@pytest.fixture(scope="session")
def lemma_fired(pool):
    import lemmas

    ctxs = lemmas.standard_contexts(pool)
    return lemmas.run_checks(ctxs)
