from __future__ import annotations

import os
import random
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from mpreclusion.graph import Graph, make_graph  # noqa: E402


def random_graph(rng: random.Random, n: int, p: float | None = None) -> Graph:
    p = rng.random() if p is None else p
    return make_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p])


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20240611)


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return make_graph(10, outer + spokes + inner)


# -- certificate audit ---------------------------------------------------------------
# Every finite mp computed during the session has its certificate checked on the spot.

AUDIT = {"checked": 0}


def _install_certificate_audit() -> None:
    import mpreclusion.preclusion as P

    original = P.mp
    verify_certificate = P.verify_certificate

    def audited_mp(g):
        r = original(g)
        if r.value is not None:
            assert len(r.certificate.F) == r.value, f"certificate size differs from mp on {g}"
            assert verify_certificate(g, r.certificate), f"unsound certificate on {g}"
            AUDIT["checked"] += 1
        return r

    audited_mp.__wrapped__ = original
    for name, mod in list(sys.modules.items()):
        if name.startswith("mpreclusion") and getattr(mod, "mp", None) is original:
            mod.mp = audited_mp


def pytest_configure(config):
    import mpreclusion.analysis  # noqa: F401  load every module before patching
    import mpreclusion.cli  # noqa: F401

    _install_certificate_audit()


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
    terminalreporter.write_line(f"certificates audited this session: {AUDIT['checked']}")
