"""Bounded exhaustive backtracking searches for extremal square-free words.

Each search either exhausts its space below the cap (outcome max_length, with
every witness of that length) or finds a word of cap length (outcome
bound_exceeded, evidence of an unbounded family).  Reaching the cap is never
conflated with a proven maximum.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import Graph
from .morphisms import Colouring
from .words import Word, _extension_square_free


@dataclass(frozen=True)
class SearchResult:
    outcome: str  # "max_length" or "bound_exceeded"
    length: int   # the exact maximum, or the cap that was reached
    witnesses: tuple[Word, ...]  # all words attaining the maximum (max_length only)
    nodes_explored: int

    @property
    def bound_exceeded(self) -> bool:
        return self.outcome == "bound_exceeded"

    def render(self) -> str:
        lines = [f"outcome={self.outcome} {self.length}"]
        lines.extend(f"witness={w.text()}" for w in self.witnesses)
        lines.append(f"nodes={self.nodes_explored}")
        return "\n".join(lines)


def _finish(best_len: int, witnesses: list[tuple[int, ...]], alphabet: int,
            nodes: int) -> SearchResult:
    words = tuple(Word(w, alphabet) for w in sorted(set(witnesses)))
    return SearchResult("max_length", best_len, words, nodes)


def longest_square_free_walk(g: Graph, cap: int) -> SearchResult:
    """Exhaust all square-free walks of g up to cap letters.

    Depth-first from every start vertex, extending one vertex at a time and
    pruning with the incremental suffix-square check.
    """
    if cap < 1:
        raise ValueError("cap must be >= 1")
    nodes = 0
    best = 0
    witnesses: list[tuple[int, ...]] = []
    buf: list[int] = []
    adjacency = g.adjacency

    def dfs() -> bool:
        nonlocal nodes, best, witnesses
        nodes += 1
        d = len(buf)
        if d > best:
            best = d
            witnesses = [tuple(buf)]
        elif d == best:
            witnesses.append(tuple(buf))
        if d >= cap:
            return True
        for u in adjacency[buf[-1]]:
            buf.append(u)
            if _extension_square_free(buf):
                if dfs():
                    return True
            buf.pop()
        return False

    for s in range(g.vertex_count):
        buf = [s]
        if dfs():
            return SearchResult("bound_exceeded", cap, (), nodes)
    return _finish(best, witnesses, max(g.vertex_count, 1), nodes)


def longest_square_free_tournament(alphabet_size: int, cap: int) -> SearchResult:
    """Exhaust all square-free tournament words over A_alphabet_size up to cap.

    The consumed ordered pairs are carried as search state: letter a may
    follow letter b only while the reverse pair ab has not occurred.
    """
    if alphabet_size < 1 or cap < 1:
        raise ValueError("alphabet_size and cap must be >= 1")
    nodes = 0
    best = 0
    witnesses: list[tuple[int, ...]] = []
    buf: list[int] = []
    pairs: set[tuple[int, int]] = set()

    def dfs() -> bool:
        nonlocal nodes, best, witnesses
        nodes += 1
        d = len(buf)
        if d > best:
            best = d
            witnesses = [tuple(buf)]
        elif d == best:
            witnesses.append(tuple(buf))
        if d >= cap:
            return True
        last = buf[-1]
        for a in range(alphabet_size):
            if a == last:
                continue  # an immediate square
            if (a, last) in pairs:
                continue  # the reverse order is already a factor
            new = (last, a)
            added = new not in pairs
            buf.append(a)
            if added:
                pairs.add(new)
            if _extension_square_free(buf):
                if dfs():
                    return True
            if added:
                pairs.discard(new)
            buf.pop()
        return False

    for s in range(alphabet_size):
        buf = [s]
        pairs.clear()
        if dfs():
            return SearchResult("bound_exceeded", cap, (), nodes)
    return _finish(best, witnesses, alphabet_size, nodes)


def max_coloured_walk(g: Graph, phi: Colouring, cap: int) -> SearchResult:
    """Longest walk of g whose image under phi is square-free, up to cap.

    The square check runs on the colour word; the walk itself may repeat.
    Witnesses are the walks (vertex words), not their colourings.
    """
    if cap < 1:
        raise ValueError("cap must be >= 1")
    if phi.source_alphabet_size != g.vertex_count:
        raise ValueError("colouring must be defined on the graph's vertices")
    nodes = 0
    best = 0
    witnesses: list[tuple[int, ...]] = []
    buf: list[int] = []
    cols: list[int] = []
    colour_of = phi.images
    adjacency = g.adjacency

    def dfs() -> bool:
        nonlocal nodes, best, witnesses
        nodes += 1
        d = len(buf)
        if d > best:
            best = d
            witnesses = [tuple(buf)]
        elif d == best:
            witnesses.append(tuple(buf))
        if d >= cap:
            return True
        for u in adjacency[buf[-1]]:
            buf.append(u)
            cols.append(colour_of[u])
            if _extension_square_free(cols):
                if dfs():
                    return True
            buf.pop()
            cols.pop()
        return False

    for s in range(g.vertex_count):
        buf = [s]
        cols = [colour_of[s]]
        if dfs():
            return SearchResult("bound_exceeded", cap, (), nodes)
    return _finish(best, witnesses, max(g.vertex_count, 1), nodes)


@dataclass(frozen=True)
class GammaLowerBoundReport:
    """Outcome of sweeping every k-colouring class of a graph."""

    verdict: bool  # True: every colouring class stays finite below the cap
    colours: int
    cap: int
    entries: tuple[tuple[Colouring, SearchResult], ...]

    def __bool__(self) -> bool:
        return self.verdict

    def render(self) -> str:
        lines = []
        for phi, res in self.entries:
            phi_text = Word(phi.images, phi.target_alphabet_size).text()
            lines.append(f"colouring={phi_text} outcome={res.outcome} {res.length}")
        lines.append(f"verdict={'true' if self.verdict else 'false'}")
        return "\n".join(lines)


def _canonical_colourings(n: int, k: int):
    """Colourings of n vertices with up to k colours, one per colour-permutation
    class (restricted growth strings: each new colour is the next unused index)."""
    if n == 0:
        yield ()
        return
    out: list[int] = [0]

    def rec(mx: int):
        if len(out) == n:
            yield tuple(out)
            return
        for v in range(min(mx + 1, k - 1) + 1):
            out.append(v)
            yield from rec(max(mx, v))
            out.pop()

    yield from rec(0)


def verify_gamma_lower_bound(g: Graph, k: int, cap: int) -> GammaLowerBoundReport:
    """Confirm that no k-colouring of g admits a square-free walk of cap length.

    All colourings are enumerated up to permutation of the k colours (the
    square-freeness of a coloured walk is invariant under relabelling the
    colours).  Verdict True means every class exhausted below the cap.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    entries = []
    verdict = True
    for images in _canonical_colourings(g.vertex_count, k):
        phi = Colouring(g.vertex_count, k, images)
        res = max_coloured_walk(g, phi, cap)
        if res.bound_exceeded:
            verdict = False
        entries.append((phi, res))
    return GammaLowerBoundReport(verdict, k, cap, tuple(entries))
