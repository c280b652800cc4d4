"""Independent reference implementations used as test oracles.

These are deliberately naive: plain dict BFS, float-free neighbor tests,
brute-force enumeration. They share no code with the package beyond the
parameter type.
"""
from collections import deque
from fractions import Fraction
from math import floor

import pytest

from grid_chroma.hops import RadioParams


def oracle_neighbors(r):
    r = Fraction(r)
    k = floor(r)
    return [(dx, dy) for dx in range(-k, k + 1) for dy in range(-k, k + 1)
            if (dx or dy) and Fraction(dx * dx + dy * dy) <= r * r]


def oracle_hops(r, h, box, source=(0, 0), inside=None):
    """BFS hop counts up to ``h`` as a dict; ``inside`` optionally restricts nodes."""
    nb = oracle_neighbors(r)
    dist = {source: 0}
    q = deque([source])
    while q:
        p = q.popleft()
        if dist[p] == h:
            continue
        for dx, dy in nb:
            n = (p[0] + dx, p[1] + dy)
            if abs(n[0]) > box or abs(n[1]) > box or n in dist:
                continue
            if inside is not None and not inside(n):
                continue
            dist[n] = dist[p] + 1
            q.append(n)
    return dist


def oracle_shortest_norm2(u1, u2, span=40):
    best = None
    for a in range(-span, span + 1):
        for b in range(-span, span + 1):
            if a == 0 and b == 0:
                continue
            x, y = a * u1[0] + b * u2[0], a * u1[1] + b * u2[1]
            n = x * x + y * y
            if best is None or n < best:
                best = n
    return best


@pytest.fixture(params=[("1", 1), ("1", 3), ("1.5", 2), ("2", 3), ("2.5", 2), ("3", 1)],
                ids=lambda p: f"R{p[0]}h{p[1]}")
def radio(request):
    return RadioParams(request.param[0], request.param[1])


ACCEPTANCE_LINES = []


def report(criterion, ok, detail):
    line = f"criterion {criterion:>2}: {'PASS' if ok else 'FAIL'}  {detail}"
    ACCEPTANCE_LINES.append(line)
    print(line)
    return ok


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
