"""Walk words on graphs: validation, colourings, the existence/colour-number
classifier, and the lazy witness-walk generators for every positive case."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional

from .graphs import (Graph, components, find_c4, find_claw, find_p5,
                     find_triangle, induced_subgraph)
from .morphisms import (ALPHA_C4, ALPHA_T5, BETA_P5, TAU, Colouring,
                        InfiniteWordStream, fixed_point_stream, image_stream)
from .words import Word


def find_non_edge(g: Graph, w: Word) -> Optional[tuple[int, tuple[int, int]]]:
    """First adjacent letter pair of w that is not an edge of g, or None."""
    if w.alphabet_size != g.vertex_count:
        raise ValueError(
            f"word alphabet size {w.alphabet_size} != vertex count {g.vertex_count}")
    letters = w.letters
    for p in range(len(letters) - 1):
        if not g.has_edge(letters[p], letters[p + 1]):
            return (p, (letters[p], letters[p + 1]))
    return None


def is_g_word(g: Graph, w: Word) -> bool:
    """True iff every adjacent letter pair of w is an edge of g."""
    return find_non_edge(g, w) is None


def apply_colouring(phi: Colouring, w: Word) -> Word:
    """Letterwise image of w under phi; the length is preserved."""
    return Word(tuple(phi.images[a] for a in w.letters), phi.target_alphabet_size)


@dataclass(frozen=True)
class ComponentClassification:
    vertices: tuple[int, ...]
    shape_text: str
    exists: bool
    gamma: Optional[int]
    witness: Optional[str]
    witness_vertices: Optional[tuple[int, ...]]


@dataclass(frozen=True)
class Classification:
    """Verdict for a graph: does an infinite square-free walk exist, and the
    least number of colours making one square-free (3 or 4 when defined)."""

    exists: bool
    gamma: Optional[int]
    witness: Optional[str]
    witness_vertices: Optional[tuple[int, ...]]
    components: tuple[ComponentClassification, ...]


def _classify_connected(g: Graph) -> tuple[bool, Optional[int], Optional[str], Optional[tuple[int, ...]]]:
    tri = find_triangle(g)
    if tri is not None:
        return True, 3, "C3", tri
    p5 = find_p5(g)
    if p5 is not None:
        return True, 3, "P5", p5
    c4 = find_c4(g)
    if c4 is not None:
        return True, 4, "C4", c4
    claw = find_claw(g)
    if claw is not None:
        return True, 4, "K13", claw
    return False, None, None, None


def classify(g: Graph) -> Classification:
    """Decide existence of an infinite square-free walk and the colour number.

    An infinite square-free walk exists iff some component contains a
    triangle, a 4-cycle, a 5-vertex path or a degree-3 vertex (a 5-cycle
    contains a 5-vertex path, so it needs no separate detector).  The colour
    number is 3 exactly when a triangle or 5-vertex path is present, else 4;
    across components the minimum wins, since a walk stays in one component.
    """
    comp_reports = []
    for comp in components(g):
        sub, relabel = induced_subgraph(g, comp.vertices)
        back = {new: old for old, new in relabel.items()}
        exists, gamma, witness, wverts = _classify_connected(sub)
        comp_reports.append(ComponentClassification(
            vertices=comp.vertices,
            shape_text=comp.shape.describe(),
            exists=exists,
            gamma=gamma,
            witness=witness,
            witness_vertices=tuple(back[v] for v in wverts) if wverts else None,
        ))
    defined = [c for c in comp_reports if c.exists]
    if not defined:
        return Classification(False, None, None, None, tuple(comp_reports))
    best_gamma = min(c.gamma for c in defined)
    best = next(c for c in comp_reports if c.exists and c.gamma == best_gamma)
    return Classification(True, best_gamma, best.witness, best.witness_vertices,
                          tuple(comp_reports))


def render_classification(c: Classification) -> str:
    """Stable key=value rendering, one line plus one line per component."""
    if c.exists:
        lines = [f"exists=true gamma={c.gamma} witness={c.witness}"]
    else:
        lines = ["exists=false"]
    for idx, comp in enumerate(c.components):
        vs = ",".join(str(v) for v in comp.vertices)
        line = f"component={idx} vertices={vs} shape={comp.shape_text}"
        if comp.exists:
            line += f" exists=true gamma={comp.gamma} witness={comp.witness}"
        else:
            line += " exists=false"
        lines.append(line)
    return "\n".join(lines)


def thue_stream() -> InfiniteWordStream:
    """The ternary square-free word 012021012102..., fixed point of TAU."""
    return fixed_point_stream(TAU, 0)


def p5_walk_stream() -> InfiniteWordStream:
    """Square-free walk on the path 0-1-2-3-4 (image of the Thue word under BETA_P5)."""
    return image_stream(BETA_P5, thue_stream())


def c4_walk_uniform_stream() -> InfiniteWordStream:
    """Square-free walk on the 4-cycle via the uniform morphism ALPHA_C4."""
    return image_stream(ALPHA_C4, thue_stream())


def dean_reduced_stream() -> InfiniteWordStream:
    """Square-free word over A4 that is reduced in the free group on two
    generators (0, 1 with inverses 2, 3): any square-free walk on the
    4-cycle qualifies, since 0/2 and 1/3 are never adjacent there."""
    return c4_walk_uniform_stream()


def tournament5_stream() -> InfiniteWordStream:
    """Square-free tournament word over A5 (image of the Thue word under ALPHA_T5)."""
    return image_stream(ALPHA_T5, thue_stream())


def claw_walk_stream(g: Graph, hub: int) -> InfiniteWordStream:
    """Square-free walk alternating between a degree->=3 hub and three of its
    neighbours: the Thue letters are mapped to the three smallest neighbours
    and the hub is interleaved after each."""
    if not 0 <= hub < g.vertex_count:
        raise ValueError(f"hub {hub} outside vertex range")
    ns = g.neighbours(hub)
    if len(ns) < 3:
        raise ValueError(f"hub {hub} has degree {len(ns)}, need at least 3")
    targets = ns[:3]
    thue = thue_stream()

    def factory() -> Iterator[int]:
        for t in thue.letters():
            yield targets[t]
            yield hub

    return InfiniteWordStream(g.vertex_count, factory)


def cycle_walk_stream(n: int) -> InfiniteWordStream:
    """Square-free walk on the n-cycle.

    Base case n=3 is the Thue word (every ternary word walks the complete
    triangle); each larger cycle inserts the new letter n-1 between adjacent
    pairs (0, n-2) and (n-2, 0) of the (n-1)-cycle walk.  Deleting n-1 maps
    any square back to a square of the inner walk, so square-freeness lifts.
    """
    if n < 3:
        raise ValueError("cycle walks need n >= 3")
    if n == 3:
        return thue_stream()
    inner = cycle_walk_stream(n - 1)

    def factory() -> Iterator[int]:
        it = inner.letters()
        prev = next(it)
        yield prev
        for x in it:
            if (prev == 0 and x == n - 2) or (prev == n - 2 and x == 0):
                yield n - 1
            yield x
            prev = x

    return InfiniteWordStream(n, factory)


def cycle_walk_p5_stream(n: int) -> InfiniteWordStream:
    """Alternative square-free walk on the n-cycle for n >= 5: stay on the
    five-vertex path 0-1-2-3-4, whose edges the cycle contains."""
    if n < 5:
        raise ValueError("the path-based cycle walk needs n >= 5")

    def factory() -> Iterator[int]:
        return p5_walk_stream().letters()

    return InfiniteWordStream(n, factory)
