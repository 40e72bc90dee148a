"""Abstract simplicial complexes over interned vertex labels.

Vertices are opaque string labels, interned per universe to dense integer
indices in sorted label order.  A face is a strictly increasing tuple of
indices; a complex stores its full downward-closed face set explicitly.
All values are immutable and all operations are pure, so they can be shared
freely across workers.
"""

from __future__ import annotations

import itertools
from typing import Iterable, Mapping, Optional

from .errors import EmptyComplexError, NotSimplicialError, UnknownVertexError

Face = tuple  # strictly increasing tuple of vertex indices


class Universe:
    """An immutable vertex label set with a label <-> dense index bijection.

    Labels are interned in sorted order, so "least index" tie-breaking is
    independent of declaration order.
    """

    __slots__ = ("labels", "_index")

    def __init__(self, labels: Iterable[str]):
        unique = sorted(set(labels))
        for lab in unique:
            if not isinstance(lab, str) or not lab:
                raise ValueError(f"vertex labels must be nonempty strings, got {lab!r}")
        self.labels: tuple = tuple(unique)
        self._index = {lab: i for i, lab in enumerate(self.labels)}

    def index(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise UnknownVertexError(label) from None

    def label(self, index: int) -> str:
        return self.labels[index]

    def face_from_labels(self, labels: Iterable[str]) -> Face:
        """Canonical face (sorted, de-duplicated index tuple) for a label set."""
        return tuple(sorted({self.index(lab) for lab in labels}))

    def face_labels(self, face: Face) -> tuple:
        return tuple(self.labels[i] for i in face)

    def __contains__(self, label) -> bool:
        return label in self._index

    def __len__(self) -> int:
        return len(self.labels)

    def __iter__(self):
        return iter(self.labels)

    def __eq__(self, other) -> bool:
        return isinstance(other, Universe) and self.labels == other.labels

    def __hash__(self) -> int:
        return hash(self.labels)

    def __repr__(self) -> str:
        return f"Universe({list(self.labels)!r})"


class SimplicialComplex:
    """A downward-closed set of nonempty faces over a vertex universe.

    The universe may be larger than the vertex set (vertices are the
    0-faces).  Downward closure is validated on construction, so every
    reachable value satisfies it.
    """

    __slots__ = ("universe", "faces", "_facets", "_label_faces")

    def __init__(self, universe: Universe, faces: Iterable[Face]):
        faces = frozenset(tuple(f) for f in faces)
        n = len(universe)
        for face in faces:
            if not face:
                raise ValueError("the empty face is not allowed")
            if any(face[i] >= face[i + 1] for i in range(len(face) - 1)):
                raise ValueError(f"face {face} is not strictly increasing")
            if face[0] < 0 or face[-1] >= n:
                raise ValueError(f"face {face} has vertices outside the universe")
            if len(face) > 1:
                for sub in itertools.combinations(face, len(face) - 1):
                    if sub not in faces:
                        raise ValueError(
                            f"face set is not downward closed: {face} present, {sub} missing"
                        )
        self.universe = universe
        self.faces: frozenset = faces
        self._facets = None
        self._label_faces = None

    @property
    def is_empty(self) -> bool:
        return not self.faces

    @property
    def is_point(self) -> bool:
        return len(self.faces) == 1 and self.dimension() == 0

    def dimension(self) -> int:
        """Max face dimension; -1 for the empty complex."""
        if not self.faces:
            return -1
        return max(len(f) for f in self.faces) - 1

    def vertices(self) -> tuple:
        """Sorted indices of the 0-faces."""
        return tuple(sorted(f[0] for f in self.faces if len(f) == 1))

    def vertex_labels(self) -> tuple:
        return tuple(self.universe.label(i) for i in self.vertices())

    def n_faces(self, n: int) -> tuple:
        """All n-dimensional faces in lexicographic order."""
        return tuple(sorted(f for f in self.faces if len(f) == n + 1))

    def facets(self) -> tuple:
        """Inclusion-maximal faces in lexicographic order."""
        if self._facets is None:
            maximal = []
            for face in self.faces:
                fs = set(face)
                if not any(fs < set(g) for g in self.faces):
                    maximal.append(face)
            self._facets = tuple(sorted(maximal))
        return self._facets

    def facet_labels(self) -> tuple:
        return tuple(self.universe.face_labels(f) for f in self.facets())

    def face_labels(self, face: Face) -> tuple:
        return self.universe.face_labels(face)

    def label_faces(self) -> frozenset:
        """Faces as sorted label tuples (comparable across universes)."""
        if self._label_faces is None:
            self._label_faces = frozenset(self.universe.face_labels(f) for f in self.faces)
        return self._label_faces

    def has_face(self, face: Face) -> bool:
        return tuple(face) in self.faces

    def has_face_labels(self, labels: Iterable[str]) -> bool:
        try:
            return self.universe.face_from_labels(labels) in self.faces
        except UnknownVertexError:
            return False

    def euler_characteristic(self) -> int:
        return sum((-1) ** (len(f) - 1) for f in self.faces)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SimplicialComplex)
            and self.universe == other.universe
            and self.faces == other.faces
        )

    def __hash__(self) -> int:
        return hash((self.universe, self.faces))

    def __repr__(self) -> str:
        return (
            f"SimplicialComplex({len(self.universe)} vertices, "
            f"{len(self.faces)} faces, dim {self.dimension()})"
        )


class VertexMap:
    """A total label assignment between universes, inducing maps of complexes."""

    __slots__ = ("domain", "codomain", "mapping")

    def __init__(self, domain: Universe, codomain: Universe, mapping: Mapping[str, str]):
        for src, dst in mapping.items():
            if src not in domain:
                raise UnknownVertexError(src)
            if dst not in codomain:
                raise UnknownVertexError(dst)
        self.domain = domain
        self.codomain = codomain
        self.mapping = dict(mapping)

    def __getitem__(self, label: str) -> str:
        return self.mapping[label]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, VertexMap)
            and self.domain == other.domain
            and self.codomain == other.codomain
            and self.mapping == other.mapping
        )

    def __repr__(self) -> str:
        return f"VertexMap({self.mapping!r})"


def complex_from_facets(universe, facets: Iterable[Iterable[str]]) -> SimplicialComplex:
    """Build the downward closure of the given facets.

    ``universe`` may be a :class:`Universe` or an iterable of labels.
    Redundant (non-maximal) input facets are absorbed.
    """
    if not isinstance(universe, Universe):
        universe = Universe(universe)
    faces = set()
    for facet in facets:
        face = universe.face_from_labels(facet)
        if not face:
            raise ValueError("facets must be nonempty")
        for k in range(1, len(face) + 1):
            faces.update(itertools.combinations(face, k))
    return SimplicialComplex(universe, faces)


def full_complex(universe) -> SimplicialComplex:
    """The complex whose faces are all nonempty subsets of the universe."""
    if not isinstance(universe, Universe):
        universe = Universe(universe)
    if len(universe) == 0:
        raise EmptyComplexError("a full complex needs a nonempty universe")
    return complex_from_facets(universe, [universe.labels])


def is_subcomplex(t: SimplicialComplex, k: SimplicialComplex) -> bool:
    """True iff every face of ``t`` is a face of ``k``."""
    if t.universe == k.universe:
        return t.faces <= k.faces
    return t.label_faces() <= k.label_faces()


def apply_simplicial_map(
    f: VertexMap, source: SimplicialComplex, target: SimplicialComplex
) -> SimplicialComplex:
    """Image complex of ``source`` under ``f``, checked to land in ``target``.

    Raises :class:`NotSimplicialError` naming the first face (in canonical
    order) whose image is not a face of ``target``.
    """
    for v in source.vertex_labels():
        if v not in f.mapping:
            raise ValueError(f"map is not total on the source vertices: missing {v!r}")
    image = set()
    for face in sorted(source.faces, key=lambda s: (len(s), s)):
        img = tuple(
            sorted({target.universe.index(f[source.universe.label(i)]) for i in face})
        )
        if img not in target.faces:
            raise NotSimplicialError(source.face_labels(face))
        image.add(img)
    return SimplicialComplex(target.universe, image)


def are_contiguous(
    f: VertexMap, g: VertexMap, source: SimplicialComplex, target: SimplicialComplex
) -> bool:
    """True iff f(s) and g(s) always span a common face of the target."""
    apply_simplicial_map(f, source, target)
    apply_simplicial_map(g, source, target)
    for face in source.faces:
        joined = set()
        for i in face:
            lab = source.universe.label(i)
            joined.add(target.universe.index(f[lab]))
            joined.add(target.universe.index(g[lab]))
        if tuple(sorted(joined)) not in target.faces:
            return False
    return True


def cone_apex(k: SimplicialComplex) -> Optional[str]:
    """A vertex contained in every facet, or None.

    The existence of an apex certifies that the complex is a cone, hence
    contractible.  Ties are broken by least interned index.
    """
    facets = k.facets()
    if not facets:
        return None
    common = set(facets[0])
    for facet in facets[1:]:
        common &= set(facet)
        if not common:
            return None
    return k.universe.label(min(common))
