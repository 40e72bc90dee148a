"""Elementary collapses, verified collapse sequences, and collapsibility certificates.

A face is free when it is properly contained in exactly one other face; in
a downward-closed complex that forces the containment to be of codimension
one.  An elementary collapse removes a free face together with its unique
proper coface, which preserves the homotopy type (hence homology and the
Euler characteristic).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Optional, Tuple

from .complexes import SimplicialComplex
from .errors import (
    EmptyComplexError,
    NotFreeError,
    SingletonComponentError,
    UnknownVertexError,
)
from .posets import (
    Poset,
    dual_poset,
    maximal_elements,
    poset_dowker_complex,
    singleton_component_witness,
)


@dataclass(frozen=True)
class CollapseStep:
    """A free face together with its unique proper coface, as label tuples."""

    free_face: tuple
    coface: tuple

    def __post_init__(self):
        free = tuple(sorted(self.free_face))
        coface = tuple(sorted(self.coface))
        object.__setattr__(self, "free_face", free)
        object.__setattr__(self, "coface", coface)
        if not set(free) < set(coface) or len(coface) != len(free) + 1:
            raise ValueError(
                f"coface {coface} must properly contain {free} with one extra vertex"
            )


@dataclass(frozen=True)
class CollapseSequence:
    """An ordered list of collapse steps applied to an initial complex."""

    initial: SimplicialComplex
    steps: Tuple[CollapseStep, ...]

    def __post_init__(self):
        object.__setattr__(self, "steps", tuple(self.steps))


def _proper_cofaces(k: SimplicialComplex, face: tuple) -> list:
    fs = set(face)
    return sorted(g for g in k.faces if fs < set(g))


def free_coface(k: SimplicialComplex, face: Iterable[str]) -> Optional[tuple]:
    """The unique proper coface of ``face`` if there is exactly one, else None.

    ``face`` is given by labels and must be a face of ``k``.
    """
    idx = k.universe.face_from_labels(face)
    if idx not in k.faces:
        raise NotFreeError(tuple(face), None)
    cofaces = _proper_cofaces(k, idx)
    if len(cofaces) == 1:
        return k.face_labels(cofaces[0])
    return None


def apply_step(k: SimplicialComplex, step: CollapseStep) -> SimplicialComplex:
    """Remove a free face and its coface; the result stays downward closed."""
    try:
        idx = k.universe.face_from_labels(step.free_face)
    except UnknownVertexError:
        raise NotFreeError(step.free_face, None) from None
    if idx not in k.faces:
        raise NotFreeError(step.free_face, None)
    cofaces = _proper_cofaces(k, idx)
    if len(cofaces) != 1:
        raise NotFreeError(step.free_face, [k.face_labels(c) for c in cofaces])
    actual = k.face_labels(cofaces[0])
    if actual != step.coface:
        raise NotFreeError(step.free_face, [actual])
    return SimplicialComplex(k.universe, k.faces - {idx, cofaces[0]})


def verify_sequence(seq: CollapseSequence) -> SimplicialComplex:
    """Replay every step, failing with the index of the first invalid one."""
    current = seq.initial
    for i, step in enumerate(seq.steps):
        try:
            current = apply_step(current, step)
        except NotFreeError as exc:
            raise NotFreeError(exc.face, exc.cofaces, index=i) from None
    return current


def collapse_leq_to_strict(p: Poset, side: str) -> CollapseSequence:
    """A collapse sequence from the non-strict Dowker complex down to the strict one.

    The faces missing from the strict complex are exactly those containing a
    maximal element y (for the L side, a minimal one, handled by dualizing).
    Those faces form one cone per maximal y over the elements strictly below
    it, so matching each face A+{y} without x0 to A+{y,x0}, where x0 is the
    least element below y, and emitting the pairs in decreasing dimension
    removes the whole cone by elementary collapses.  Maximal elements are
    processed in ascending index order; their face families are disjoint, so
    the interleaving stays legal.
    """
    if side not in ("k", "l"):
        raise ValueError(f"side must be 'k' or 'l', got {side!r}")
    witness = singleton_component_witness(p)
    if witness is not None:
        raise SingletonComponentError(witness)
    initial = poset_dowker_complex(p, False, side)
    target = poset_dowker_complex(p, True, side)
    q = p if side == "k" else dual_poset(p)
    labels = q.elements.labels
    steps = []
    for y_label in maximal_elements(q):
        y = q.elements.index(y_label)
        below = [i for i in range(len(q)) if q.up[i] >> y & 1 and i != y]
        x0 = below[0]
        others = below[1:]
        for size in range(len(others), -1, -1):
            level = []
            for subset in itertools.combinations(others, size):
                free = tuple(sorted(subset + (y,)))
                coface = tuple(sorted(subset + (y, x0)))
                level.append((free, coface))
            for free, coface in sorted(level):
                steps.append(
                    CollapseStep(
                        tuple(labels[i] for i in free),
                        tuple(labels[i] for i in coface),
                    )
                )
    seq = CollapseSequence(initial, tuple(steps))
    final = verify_sequence(seq)
    if final != target:
        raise AssertionError("collapse construction missed the strict complex")
    return seq


def greedy_collapse(k: SimplicialComplex) -> Tuple[SimplicialComplex, CollapseSequence]:
    """Collapse greedily until no free face remains.

    The free pair chosen at each step is the least by (descending free-face
    dimension, lexicographic face), so the result is deterministic.  A point
    core certifies contractibility; any other core means "unknown", never
    "non-contractible".
    """
    if k.is_empty:
        raise EmptyComplexError("cannot collapse the empty complex")
    faces = set(k.faces)
    cofaces = {f: 0 for f in faces}
    for t in faces:
        for r in range(1, len(t)):
            for sub in itertools.combinations(t, r):
                cofaces[sub] += 1
    steps = []
    while True:
        free = [f for f, c in cofaces.items() if c == 1]
        if not free:
            break
        f = min(free, key=lambda s: (-len(s), s))
        fs = set(f)
        c = next(t for t in faces if len(t) == len(f) + 1 and fs < set(t))
        for gone in (f, c):
            faces.remove(gone)
            del cofaces[gone]
            for r in range(1, len(gone)):
                for sub in itertools.combinations(gone, r):
                    if sub in cofaces:
                        cofaces[sub] -= 1
        steps.append(CollapseStep(k.face_labels(f), k.face_labels(c)))
    core = SimplicialComplex(k.universe, faces)
    seq = CollapseSequence(k, tuple(steps))
    if verify_sequence(seq) != core:
        raise AssertionError("greedy collapse emitted an invalid sequence")
    return core, seq
