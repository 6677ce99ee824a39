"""Quivers, Fomin-Zelevinsky mutation, canonical forms and mutation classes.

A quiver here is always loop-free, 2-cycle-free, without parallel arrows,
and connected (simply laced finite type).  Vertices are 1-based.  Canonical
forms are computed by minimizing an adjacency encoding over all vertex
permutations compatible with an iteratively refined degree partition; with
at most 9 vertices this needs no external graph canonicalization machinery.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from .errors import (
    CapExceededError,
    DisconnectedError,
    LoopError,
    MultipleArrowError,
    NotDynkinError,
    ParallelArrowError,
    TwoCycleError,
)

DEFAULT_CLASS_CAP = 100000


@dataclass(frozen=True)
class Quiver:
    vertex_count: int
    arrows: tuple  # tuple of (source, target), 1-based

    @staticmethod
    def make(vertex_count, arrows) -> "Quiver":
        q = Quiver(vertex_count, tuple((int(s), int(t)) for s, t in arrows))
        validate(q)
        return q

    @property
    def arrow_set(self):
        return frozenset(self.arrows)

    def out_neighbors(self, v):
        return [t for s, t in self.arrows if s == v]

    def in_neighbors(self, v):
        return [s for s, t in self.arrows if t == v]

    def undirected_degree(self, v):
        return sum(1 for s, t in self.arrows if v in (s, t))

    def relabel(self, perm) -> "Quiver":
        """Apply a vertex permutation given as a dict old -> new."""
        return Quiver(self.vertex_count, tuple(sorted((perm[s], perm[t]) for s, t in self.arrows)))

    def exchange_matrix(self):
        """Skew-symmetric matrix b[i][j] = #arrows i->j - #arrows j->i (0-based)."""
        n = self.vertex_count
        b = [[0] * n for _ in range(n)]
        for s, t in self.arrows:
            b[s - 1][t - 1] += 1
            b[t - 1][s - 1] -= 1
        return b

    def __str__(self):
        arr = ", ".join(f"{s}->{t}" for s, t in sorted(self.arrows))
        return f"Quiver({self.vertex_count}; {arr})"


@dataclass(frozen=True)
class Cycle:
    """A chordless cycle, listed in walk order starting at its least vertex.

    For oriented cycles the walk follows the arrows, so (v0, v1, ..., v_{k-1})
    means arrows v0->v1->...->v0.
    """

    vertices: tuple
    oriented: bool

    @property
    def length(self):
        return len(self.vertices)

    def arrow_list(self):
        """The cycle's arrows in walk order (only meaningful when oriented)."""
        vs = self.vertices
        return [(vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs))]


def validate(q: Quiver) -> None:
    n = q.vertex_count
    if n < 1:
        raise ValueError("quiver needs at least one vertex")
    seen = set()
    for s, t in q.arrows:
        if not (1 <= s <= n and 1 <= t <= n):
            raise ValueError(f"arrow ({s},{t}) out of vertex range 1..{n}")
        if s == t:
            raise LoopError(f"loop at vertex {s}")
        if (s, t) in seen:
            raise ParallelArrowError(f"parallel arrow ({s},{t})")
        if (t, s) in seen:
            raise TwoCycleError(f"2-cycle between {s} and {t}")
        seen.add((s, t))
    # connectivity of the underlying graph
    if n > 1:
        adj = {v: set() for v in range(1, n + 1)}
        for s, t in q.arrows:
            adj[s].add(t)
            adj[t].add(s)
        seen_v = {1}
        stack = [1]
        while stack:
            v = stack.pop()
            for w in adj[v]:
                if w not in seen_v:
                    seen_v.add(w)
                    stack.append(w)
        if len(seen_v) != n:
            raise DisconnectedError(f"underlying graph is disconnected ({len(seen_v)} of {n} vertices reachable)")


def mutate(q: Quiver, k: int) -> Quiver:
    """Fomin-Zelevinsky mutation at vertex k (1-based)."""
    n = q.vertex_count
    if not (1 <= k <= n):
        raise ValueError(f"vertex {k} out of range 1..{n}")
    b = q.exchange_matrix()
    kk = k - 1
    nb = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            if i == kk or j == kk:
                nb[i][j] = -b[i][j]
            else:
                bik, bkj = b[i][kk], b[kk][j]
                prod = bik * bkj
                corr = max(prod, 0) if bik > 0 else -max(prod, 0)
                nb[i][j] = b[i][j] + corr
    arrows = []
    for i in range(n):
        for j in range(n):
            v = nb[i][j]
            if v > 1:
                raise MultipleArrowError(
                    f"mutation at {k} produced multiplicity {v} between {i + 1} and {j + 1}"
                )
            if v == 1:
                arrows.append((i + 1, j + 1))
    return Quiver(n, tuple(sorted(arrows)))


# ---------------------------------------------------------------------------
# Canonical form
# ---------------------------------------------------------------------------

def _refined_colors(n, arrows):
    out_adj = [[] for _ in range(n)]
    in_adj = [[] for _ in range(n)]
    for s, t in arrows:
        out_adj[s - 1].append(t - 1)
        in_adj[t - 1].append(s - 1)
    colors = [(len(out_adj[v]), len(in_adj[v])) for v in range(n)]
    comp = {c: i for i, c in enumerate(sorted(set(colors)))}
    colors = [comp[c] for c in colors]
    while True:
        sigs = [
            (
                colors[v],
                tuple(sorted(colors[w] for w in out_adj[v])),
                tuple(sorted(colors[w] for w in in_adj[v])),
            )
            for v in range(n)
        ]
        comp = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [comp[s] for s in sigs]
        if new == colors:
            return colors
        colors = new


@lru_cache(maxsize=None)
def _canonical_data(n, arrows):
    """Minimal adjacency encoding over color-respecting permutations.

    Returns (canonical arrow tuple, position-of-vertex list). The encoding
    appended at depth k is the adjacency border between the new vertex and
    all previously placed ones, so lexicographic minimization can prune
    branch-by-branch.
    """
    colors = _refined_colors(n, arrows)
    slot_color = sorted(colors)
    arrow_set = frozenset((s - 1, t - 1) for s, t in arrows)
    by_color = {}
    for v, c in enumerate(colors):
        by_color.setdefault(c, []).append(v)

    best_code = None
    best_perm = None
    assigned = []
    used = [False] * n

    def border(v):
        chunk = []
        for w in assigned:
            chunk.append(1 if (w, v) in arrow_set else 0)
            chunk.append(1 if (v, w) in arrow_set else 0)
        return tuple(chunk)

    def dfs(k, prefix):
        nonlocal best_code, best_perm
        if k == n:
            if best_code is None or prefix < best_code:
                best_code = list(prefix)
                best_perm = assigned.copy()
            return
        cands = [v for v in by_color[slot_color[k]] if not used[v]]
        scored = sorted((border(v), v) for v in cands)
        low = scored[0][0]
        for chunk, v in scored:
            if chunk != low:
                break
            ext = prefix + list(chunk)
            if best_code is not None and ext > best_code[: len(ext)]:
                continue
            assigned.append(v)
            used[v] = True
            dfs(k + 1, ext)
            assigned.pop()
            used[v] = False

    dfs(0, [])
    pos = [0] * n
    for k, v in enumerate(best_perm):
        pos[v] = k
    canon_arrows = tuple(sorted((pos[s - 1] + 1, pos[t - 1] + 1) for s, t in arrows))
    return canon_arrows, pos


def canonical_form(q: Quiver) -> bytes:
    """Relabeling-invariant encoding; equal iff the quivers are isomorphic."""
    canon_arrows, _ = _canonical_data(q.vertex_count, tuple(sorted(q.arrows)))
    body = ";".join(f"{s}>{t}" for s, t in canon_arrows)
    return f"{q.vertex_count}|{body}".encode("ascii")


def canonical_representative(q: Quiver) -> Quiver:
    """The canonically relabeled quiver of q's isomorphism class."""
    canon_arrows, _ = _canonical_data(q.vertex_count, tuple(sorted(q.arrows)))
    return Quiver(q.vertex_count, canon_arrows)


def enumerate_class(seed: Quiver, cap: int = DEFAULT_CLASS_CAP):
    """All quivers in the mutation class of seed, one canonical representative
    per isomorphism class, sorted by canonical form."""
    validate(seed)
    start = canonical_representative(seed)
    found = {canonical_form(start): start}
    frontier = [start]
    while frontier:
        nxt = []
        for rep in frontier:
            for k in range(1, rep.vertex_count + 1):
                m = canonical_representative(mutate(rep, k))
                key = canonical_form(m)
                if key not in found:
                    if len(found) >= cap:
                        raise CapExceededError(cap)
                    found[key] = m
                    nxt.append(m)
        frontier = nxt
    return [found[k] for k in sorted(found)]


# ---------------------------------------------------------------------------
# Chordless cycles
# ---------------------------------------------------------------------------

def chordless_cycles(q: Quiver):
    """All vertex subsets inducing exactly a cycle, tagged oriented or not.

    Brute-force subset scan; fine for the at-most-9-vertex quivers here.
    """
    n = q.vertex_count
    arrow_set = q.arrow_set
    edges = {}
    for s, t in q.arrows:
        edges.setdefault(s, set()).add(t)
        edges.setdefault(t, set()).add(s)
    cycles = []
    for size in range(3, n + 1):
        for subset in itertools.combinations(range(1, n + 1), size):
            sset = set(subset)
            deg = {}
            edge_count = 0
            for s, t in q.arrows:
                if s in sset and t in sset:
                    edge_count += 1
                    deg[s] = deg.get(s, 0) + 1
                    deg[t] = deg.get(t, 0) + 1
            if edge_count != size or any(deg.get(v, 0) != 2 for v in subset):
                continue
            # walk the 2-regular induced graph; a full walk = a single cycle
            start = subset[0]
            walk = [start]
            prev, cur = start, min(w for w in edges[start] if w in sset)
            while cur != start:
                walk.append(cur)
                prev, cur = cur, next(w for w in edges[cur] if w in sset and w != prev)
            if len(walk) != size:
                continue
            oriented_fwd = all((walk[i], walk[(i + 1) % size]) in arrow_set for i in range(size))
            oriented_bwd = all((walk[(i + 1) % size], walk[i]) in arrow_set for i in range(size))
            if oriented_bwd:
                walk = [walk[0]] + walk[1:][::-1]
            cycles.append(Cycle(tuple(walk), oriented_fwd or oriented_bwd))
    return cycles


def oriented_triangle_count(q: Quiver) -> int:
    return sum(1 for c in chordless_cycles(q) if c.oriented and c.length == 3)


# ---------------------------------------------------------------------------
# Dynkin type detection and standard seeds
# ---------------------------------------------------------------------------

def _classify_tree(q: Quiver):
    n = q.vertex_count
    degs = {v: q.undirected_degree(v) for v in range(1, n + 1)}
    if any(d > 3 for d in degs.values()):
        return None
    branch = [v for v, d in degs.items() if d == 3]
    if not branch:
        return ("A", n)
    if len(branch) > 1:
        return None
    center = branch[0]
    adj = {v: set() for v in range(1, n + 1)}
    for s, t in q.arrows:
        adj[s].add(t)
        adj[t].add(s)
    arms = []
    for start in adj[center]:
        length = 1
        prev, cur = center, start
        while True:
            nxt = [w for w in adj[cur] if w != prev]
            if not nxt:
                break
            prev, cur = cur, nxt[0]
            length += 1
        arms.append(length)
    arms.sort()
    if arms[0] == 1 and arms[1] == 1:
        return ("D", n)
    if arms == [1, 2, 2]:
        return ("E", 6)
    if arms == [1, 2, 3]:
        return ("E", 7)
    if arms == [1, 2, 4]:
        return ("E", 8)
    return None


def detect_dynkin(q: Quiver, cap: int = DEFAULT_CLASS_CAP):
    """Mutate until an acyclic quiver appears and classify its underlying tree."""
    validate(q)
    start = canonical_representative(q)
    found = {canonical_form(start)}
    frontier = [start]
    while frontier:
        nxt = []
        for rep in frontier:
            if len(rep.arrows) == rep.vertex_count - 1:
                shape = _classify_tree(rep)
                if shape is None:
                    raise NotDynkinError(f"tree quiver {rep} is not of ADE shape")
                return shape
            for k in range(1, rep.vertex_count + 1):
                m = canonical_representative(mutate(rep, k))
                key = canonical_form(m)
                if key not in found:
                    if len(found) >= cap:
                        raise NotDynkinError(f"no tree quiver within {cap} classes")
                    found.add(key)
                    nxt.append(m)
        frontier = nxt
    raise NotDynkinError("mutation class exhausted without finding a tree quiver")


def dynkin_seed(family: str, rank: int) -> Quiver:
    """Fixed seed orientations: A_n a directed path, D_n a fork into a path,
    E_6/7/8 a directed path with one extra arrow into vertex 3."""
    family = family.upper()
    if family == "A":
        if rank < 2:
            raise ValueError("type A needs rank >= 2")
        return Quiver.make(rank, [(i, i + 1) for i in range(1, rank)])
    if family == "D":
        if rank < 4:
            raise ValueError("type D needs rank >= 4")
        arrows = [(1, 3), (2, 3)] + [(i, i + 1) for i in range(3, rank)]
        return Quiver.make(rank, arrows)
    if family == "E":
        if rank not in (6, 7, 8):
            raise ValueError("type E needs rank in {6, 7, 8}")
        arrows = [(i, i + 1) for i in range(1, rank - 1)] + [(rank, 3)]
        return Quiver.make(rank, arrows)
    raise ValueError(f"unknown family {family!r}")
