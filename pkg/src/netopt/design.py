"""Topology design: diameter-3 label-frugal spanning networks and k-regular graphs."""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .graph import Graph, GraphFormatError


class LabeledComplete:
    """Complete graph on ``0..n-1`` with a positive integer label per pair."""

    def __init__(self, n: int, labels):
        if n < 2:
            raise ValueError("a labeled complete graph needs at least 2 vertices")
        self.n = n
        self.lab = [[0] * n for _ in range(n)]
        if callable(labels):
            labels = {(u, v): labels(u, v) for u in range(n) for v in range(u + 1, n)}
        for (u, v), a in dict(labels).items():
            if u == v or not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"bad pair ({u},{v})")
            if a < 1:
                raise ValueError(f"label of ({u},{v}) must be positive")
            self.lab[u][v] = self.lab[v][u] = a
        for u in range(n):
            for v in range(u + 1, n):
                if not self.lab[u][v]:
                    raise ValueError(f"pair ({u},{v}) has no label")

    def label(self, u: int, v: int) -> int:
        return self.lab[u][v]


def parse_labels(text: str) -> LabeledComplete:
    """``n`` on the first line, then one ``u v label`` line per pair."""
    rows = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            rows.append((lineno, line.split()))
    if not rows:
        raise GraphFormatError("line 1: empty labels file")
    try:
        n = int(rows[0][1][0])
    except ValueError:
        raise GraphFormatError(f"line {rows[0][0]}: expected vertex count") from None
    labels = {}
    for lineno, tok in rows[1:]:
        if len(tok) != 3:
            raise GraphFormatError(f"line {lineno}: expected 'u v label'")
        try:
            u, v, a = map(int, tok)
        except ValueError:
            raise GraphFormatError(f"line {lineno}: non-integer field") from None
        labels[(min(u, v), max(u, v))] = a
    try:
        return LabeledComplete(n, labels)
    except ValueError as exc:
        raise GraphFormatError(str(exc)) from None


@dataclass
class DesignResult:
    center: tuple
    attach: list  # attach[v] in {x, y}; None for x and y themselves
    labels: list

    @property
    def num_labels(self) -> int:
        return len(self.labels)

    def edges(self) -> list[tuple[int, int]]:
        x, y = self.center
        return [(x, y)] + [(a, v) for v, a in enumerate(self.attach) if a is not None]


def greedy_center(lc: LabeledComplete, x: int, y: int) -> DesignResult:
    """Greedy attachment for a fixed central edge in O(n).

    Labels touching ``x`` or ``y`` are renumbered densely; ``num[j]`` counts
    pending vertices having ``j`` among their two labels, and a vertex
    leaves every list as soon as one of its labels becomes used.
    """
    n = lc.n
    if x == y or not (0 <= x < n and 0 <= y < n):
        raise ValueError(f"invalid center edge ({x},{y})")
    lab = lc.lab
    others = [v for v in range(n) if v != x and v != y]
    ids: dict[int, int] = {}
    for v in others:
        for a in (lab[x][v], lab[y][v]):
            if a not in ids:
                ids[a] = len(ids)
    cxy = ids.setdefault(lab[x][y], len(ids))
    q = len(ids)
    used = [False] * q
    used[cxy] = True
    num = [0] * q
    lists: list[set] = [set() for _ in range(q)]
    lx = {v: ids[lab[x][v]] for v in others}
    ly = {v: ids[lab[y][v]] for v in others}
    for v in others:
        if lx[v] == cxy or ly[v] == cxy:
            continue
        lists[lx[v]].add(v)
        num[lx[v]] += 1
        if ly[v] != lx[v]:
            lists[ly[v]].add(v)
            num[ly[v]] += 1

    def mark(j: int) -> None:
        used[j] = True
        for w in list(lists[j]):
            for p in {lx[w], ly[w]}:
                if w in lists[p]:
                    lists[p].discard(w)
                    num[p] -= 1

    attach: list = [None] * n
    for v in others:
        a, b = lx[v], ly[v]
        if used[a]:
            attach[v] = x
        elif used[b]:
            attach[v] = y
        elif a == b or num[a] >= num[b]:
            attach[v] = x
            mark(a)
        else:
            attach[v] = y
            mark(b)
    chosen = {lab[x][y]} | {lab[attach[v]][v] for v in others}
    return DesignResult((x, y), attach, sorted(chosen))


def _default_x(lc: LabeledComplete) -> int:
    return min(range(lc.n), key=lambda v: (len({lc.lab[v][u] for u in range(lc.n) if u != v}), v))


def diameter3_design(lc: LabeledComplete, center_mode="all_edges", x=None, y=None) -> DesignResult:
    """Best greedy result over the candidate central edges.

    ``center_mode`` is ``all_edges`` (every pair ``x < y``), ``fixed_x``
    (``x`` given or the vertex seeing the fewest distinct labels, paired
    with every other vertex) or ``fixed_edge``.  Fewest labels wins, then
    the lexicographically smallest center.
    """
    n = lc.n
    if center_mode == "all_edges":
        centers = [(a, b) for a in range(n) for b in range(a + 1, n)]
    elif center_mode == "fixed_x":
        x = _default_x(lc) if x is None else x
        if not 0 <= x < n:
            raise ValueError(f"vertex {x} outside 0..{n - 1}")
        centers = [(x, b) for b in range(n) if b != x]
    elif center_mode == "fixed_edge":
        if x is None or y is None:
            raise ValueError("fixed_edge needs both x and y")
        centers = [(x, y)]
    else:
        raise ValueError(f"unknown center mode {center_mode!r}; valid: all_edges, fixed_x, fixed_edge")
    best = None
    for c in centers:
        r = greedy_center(lc, *c)
        if best is None or (r.num_labels, c) < (best.num_labels, best.center):
            best = r
    return best


def hop_diameter(n: int, edges) -> float:
    """Largest BFS hop distance over all pairs; inf if disconnected."""
    adj = [[] for _ in range(n)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    worst = 0
    for s in range(n):
        dist = [-1] * n
        dist[s] = 0
        dq = deque([s])
        while dq:
            a = dq.popleft()
            for b in adj[a]:
                if dist[b] < 0:
                    dist[b] = dist[a] + 1
                    dq.append(b)
        if min(dist) < 0:
            return float("inf")
        worst = max(worst, max(dist))
    return worst


def _as_graph(n: int, edges) -> Graph:
    return Graph(n, sorted((min(u, v), max(u, v), 1) for u, v in edges))


def kregular_even(n: int, k: int) -> Graph:
    """Connected k-regular graph for even k by repeated edge subdivision.

    Start from the complete graph on ``k + 1`` vertices.  With a left group
    ``L`` of ``k/2`` vertices and a right group ``R`` completely joined to
    it, the ``x``-th new vertex of a batch subdivides the matching
    ``(L[i], R[(i + x) mod k/2])``.  After a full batch the new vertices are
    completely joined to ``L`` and become the next ``R``.
    """
    if k < 2 or k % 2:
        raise ValueError("even construction needs an even k >= 2")
    if n < k + 1:
        raise ValueError(f"need n >= k+1 = {k + 1}, got {n}")
    h = k // 2
    edges = {(u, v) for u in range(k + 1) for v in range(u + 1, k + 1)}
    left = list(range(h))
    right = list(range(h, k))
    nxt = k + 1
    while nxt < n:
        batch = []
        for x in range(min(h, n - nxt)):
            a = nxt
            for i in range(h):
                b, c = left[i], right[(i + x) % h]
                edges.remove((min(b, c), max(b, c)))
                edges.add((b, a))
                edges.add((c, a))
            batch.append(a)
            nxt += 1
        if len(batch) == h:
            assert all((b, a) in edges for b in left for a in batch)
            right = batch
    return _as_graph(n, edges)


def _walecki(n: int) -> tuple[list[list[int]], list[tuple[int, int]]]:
    """Hamiltonian cycles (vertex sequences) and, for even n, the leftover 1-factor.

    Vertex 0 plays infinity; the rest form a cyclic group whose zig-zag
    paths ``r, r+1, r-1, r+2, ...`` are closed through vertex 0.
    """
    if n % 2:
        m = (n - 1) // 2
        mod = 2 * m
        offs = [0]
        for j in range(1, m):
            offs += [j, -j]
        if m:
            offs.append(m)
        cycles = [[0] + [(r + o) % mod + 1 for o in offs] for r in range(m)]
        return cycles, []
    m = n // 2
    mod = 2 * m - 1
    offs = [0]
    for j in range(1, m):
        offs += [j, -j]
    cycles = [[0] + [(r + o) % mod + 1 for o in offs] for r in range(m - 1)]
    factor = [(0, m - 1 + 1)]
    for a in range(mod):
        b = (-1 - a) % mod
        if a < b:
            factor.append((a + 1, b + 1))
    return cycles, factor


def kregular_general(n: int, k: int) -> Graph:
    """Connected k-regular graph from ``k // 2`` Walecki cycles plus the 1-factor for odd k."""
    if n < 1 or k < 0:
        raise ValueError("need n >= 1 and k >= 0")
    if k >= n:
        raise ValueError(f"degree k={k} must be below n={n}")
    if (n * k) % 2:
        raise ValueError(f"handshake constraint violated: n*k = {n * k} is odd")
    if k == 0 and n > 1:
        raise ValueError("k=0 gives a disconnected graph for n > 1")
    if k == 1 and n > 2:
        raise ValueError("k=1 gives a disconnected perfect matching for n > 2")
    cycles, factor = _walecki(n)
    edges = set()
    for cyc in cycles[: k // 2]:
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            edges.add((min(a, b), max(a, b)))
    if k % 2:
        edges.update((min(a, b), max(a, b)) for a, b in factor)
    return _as_graph(n, edges)


def check_regular(g: Graph, k: int) -> list[str]:
    """Problems found with ``g`` as a connected simple k-regular graph; empty if none."""
    issues = []
    seen = set()
    deg = [0] * g.n
    for e in g.edges:
        if e.u == e.v:
            issues.append(f"self-loop at {e.u}")
        key = (min(e.u, e.v), max(e.u, e.v))
        if key in seen:
            issues.append(f"parallel edge {key}")
        seen.add(key)
        deg[e.u] += 1
        deg[e.v] += 1
    bad = [v for v in range(g.n) if deg[v] != k]
    if bad:
        issues.append(f"{len(bad)} vertices with degree != {k}")
    if g.n and hop_diameter(g.n, [(e.u, e.v) for e in g.edges]) == float("inf"):
        issues.append("disconnected")
    return issues
