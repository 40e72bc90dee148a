"""Covered relations between two vertex universes and their Dowker complexes.

A relation R between finite sets X and Y yields two complexes: the
K-complex on X (subsets of X related to a common y) and the L-complex on Y
(subsets of Y related to a common x).  Universes here are always finite;
the subcomplex <-> morphism correspondence implemented below genuinely
needs that, so infinite ground sets are out of scope.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Dict, Iterable, Optional, Tuple

from .complexes import SimplicialComplex, Universe, VertexMap
from .errors import (
    EmptyComplexError,
    EmptyRelationError,
    NotCoveredError,
    UniverseMismatchError,
)


class Relation:
    """An immutable subset of X x Y over two label universes."""

    __slots__ = ("x_universe", "y_universe", "pairs", "_supports")

    def __init__(self, x_universe, y_universe, pairs: Iterable[Tuple[str, str]]):
        if not isinstance(x_universe, Universe):
            x_universe = Universe(x_universe)
        if not isinstance(y_universe, Universe):
            y_universe = Universe(y_universe)
        if len(x_universe) == 0 or len(y_universe) == 0:
            raise EmptyRelationError("relation universes must be nonempty")
        pairset = set()
        for x, y in pairs:
            x_universe.index(x)
            y_universe.index(y)
            pairset.add((x, y))
        self.x_universe = x_universe
        self.y_universe = y_universe
        self.pairs: frozenset = frozenset(pairset)
        supports: Dict[str, set] = {y: set() for y in y_universe}
        for x, y in pairset:
            supports[y].add(x_universe.index(x))
        self._supports = {y: tuple(sorted(s)) for y, s in supports.items()}

    def support(self, y: str) -> tuple:
        """Sorted labels of all x related to ``y`` (possibly empty)."""
        self.y_universe.index(y)
        return self.x_universe.face_labels(self._supports[y])

    def support_face(self, y: str) -> tuple:
        """Support of ``y`` as an index tuple over the x universe."""
        self.y_universe.index(y)
        return self._supports[y]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Relation)
            and self.x_universe == other.x_universe
            and self.y_universe == other.y_universe
            and self.pairs == other.pairs
        )

    def __hash__(self) -> int:
        return hash((self.x_universe, self.y_universe, self.pairs))

    def __repr__(self) -> str:
        return (
            f"Relation({len(self.x_universe)}x{len(self.y_universe)}, "
            f"{len(self.pairs)} pairs)"
        )


def is_covered(rel: Relation) -> bool:
    """True iff every y is related to at least one x."""
    return all(rel._supports[y] for y in rel.y_universe)


def require_covered(rel: Relation) -> None:
    for y in rel.y_universe:
        if not rel._supports[y]:
            raise NotCoveredError(y)


def transpose(rel: Relation) -> Relation:
    """Swap the roles of X and Y."""
    return Relation(rel.y_universe, rel.x_universe, [(y, x) for x, y in rel.pairs])


def k_complex(rel: Relation) -> SimplicialComplex:
    """Subsets of X whose members are all related to a common y.

    Equals the union of full simplices on the supports S_y; its universe is
    the whole of X even when some x is related to nothing (such x are simply
    not vertices).
    """
    if not rel.pairs:
        raise EmptyRelationError()
    faces = set()
    for y in rel.y_universe:
        s = rel._supports[y]
        for k in range(1, len(s) + 1):
            faces.update(itertools.combinations(s, k))
    return SimplicialComplex(rel.x_universe, faces)


def l_complex(rel: Relation) -> SimplicialComplex:
    """Subsets of Y whose members share a related x; the K-complex of the transpose."""
    return k_complex(transpose(rel))


def support_simplex(rel: Relation, y: str) -> tuple:
    """The support S_y as a face (sorted label tuple) of the K-complex."""
    face = rel.support_face(y)
    if not face:
        raise NotCoveredError(y)
    return rel.x_universe.face_labels(face)


def canonical_relation(t: SimplicialComplex) -> Relation:
    """The membership relation between vertices of ``t`` and its faces.

    Y is the set of faces of ``t`` (labelled by joining vertex labels with
    commas), and x R s iff x is a vertex of s.  Its K-complex is ``t``
    exactly, which makes this the canonical representative of the
    equivalence class of relations attached to ``t``.
    """
    if t.is_empty:
        raise EmptyComplexError("the canonical relation needs a nonempty complex")
    if any("," in lab for lab in t.universe.labels):
        raise ValueError("vertex labels containing ',' cannot name faces unambiguously")
    pairs = []
    y_labels = []
    for face in sorted(t.faces):
        labels = t.face_labels(face)
        name = ",".join(labels)
        y_labels.append(name)
        pairs.extend((lab, name) for lab in labels)
    return Relation(t.universe, y_labels, pairs)


def is_morphism(assignment: Dict[str, str], rel: Relation, rel2: Relation) -> bool:
    """True iff x R y always implies x R' assignment(y).

    Equivalently: the support of y is contained in the support of its image.
    """
    if rel.x_universe != rel2.x_universe:
        raise UniverseMismatchError()
    for y in rel.y_universe:
        if y not in assignment:
            raise ValueError(f"assignment is not total on Y: missing {y!r}")
        rel2.y_universe.index(assignment[y])
    return all((x, assignment[y]) in rel2.pairs for x, y in rel.pairs)


@dataclass(frozen=True)
class RelationMorphism:
    """A map Y -> Z satisfying the morphism law between two relations on one X."""

    source: Relation
    target: Relation
    assignment: dict = field(compare=False)

    def __post_init__(self):
        if not is_morphism(self.assignment, self.source, self.target):
            raise ValueError("assignment violates the morphism law")


def induced_l_map(m: RelationMorphism) -> VertexMap:
    """The vertex map L_Y -> L_Z induced by a relation morphism.

    Always simplicial into the target L-complex, by the morphism law.
    """
    return VertexMap(m.source.y_universe, m.target.y_universe, m.assignment)


def find_morphism(rel: Relation, rel2: Relation) -> Optional[Dict[str, str]]:
    """A morphism (Y,R) -> (Z,R') if one exists, else None.

    One exists iff the K-complex of ``rel`` is a subcomplex of the K-complex
    of ``rel2``; in that case each support S_y is a face of K_Z, hence lies
    inside some support S'_z, and we pick the least such z by index.
    """
    if rel.x_universe != rel2.x_universe:
        raise UniverseMismatchError()
    require_covered(rel)
    require_covered(rel2)
    assignment = {}
    for y in rel.y_universe:
        sy = set(rel._supports[y])
        z = next(
            (z for z in rel2.y_universe if sy <= set(rel2._supports[z])),
            None,
        )
        if z is None:
            return None
        assignment[y] = z
    return assignment


def are_equivalent(rel: Relation, rel2: Relation) -> bool:
    """True iff there are morphisms both ways; then the K-complexes coincide."""
    return find_morphism(rel, rel2) is not None and find_morphism(rel2, rel) is not None
