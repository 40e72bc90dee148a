"""Finite posets as finite T0-spaces, with their order and Dowker complexes.

Orders are stored as per-element bitmasks of the reflexive-transitive
closure, so all derived data (down-sets, components, products) is a few
bit operations.  The order <-> topology dictionary identifies each element
with its minimal open set (its down-set) and each T0 topology with the
order it induces.
"""

from __future__ import annotations

from typing import Iterable, Optional, Tuple

from .complexes import SimplicialComplex, Universe
from .errors import (
    CycleDetectedError,
    EmptyComplexError,
    EmptyResultError,
    InvalidTopologyError,
    NotRealizableError,
    NotT0Error,
)
from .relations import Relation, k_complex, l_complex


def _bits(mask: int):
    i = 0
    while mask:
        if mask & 1:
            yield i
        mask >>= 1
        i += 1


class Poset:
    """A finite partial order over a label universe.

    ``up[i]`` is the bitmask of elements above (and including) i; the
    constructor re-validates reflexivity, antisymmetry and transitivity, so
    every reachable value is a genuine partial order.
    """

    __slots__ = ("elements", "up", "down")

    def __init__(self, elements: Universe, up: Tuple[int, ...]):
        n = len(elements)
        if len(up) != n:
            raise ValueError("one up-set mask per element required")
        for i in range(n):
            if not up[i] >> i & 1:
                raise ValueError("order must be reflexive")
            for j in _bits(up[i]):
                if j != i and up[j] >> i & 1:
                    raise ValueError("order must be antisymmetric")
                if up[j] & ~up[i]:
                    raise ValueError("order must be transitive")
        down = [0] * n
        for i in range(n):
            for j in _bits(up[i]):
                down[j] |= 1 << i
        self.elements = elements
        self.up = tuple(up)
        self.down = tuple(down)

    def __len__(self) -> int:
        return len(self.elements)

    def labels(self) -> tuple:
        return self.elements.labels

    def leq(self, a: str, b: str) -> bool:
        return bool(self.up[self.elements.index(a)] >> self.elements.index(b) & 1)

    def lt(self, a: str, b: str) -> bool:
        return a != b and self.leq(a, b)

    def pairs(self) -> frozenset:
        """All (a, b) with a <= b, as labels."""
        labs = self.elements.labels
        return frozenset(
            (labs[i], labs[j]) for i in range(len(labs)) for j in _bits(self.up[i])
        )

    def strict_pairs(self) -> frozenset:
        labs = self.elements.labels
        return frozenset(
            (labs[i], labs[j])
            for i in range(len(labs))
            for j in _bits(self.up[i])
            if j != i
        )

    def cover_pairs(self) -> tuple:
        """The covering (Hasse) pairs, sorted; a minimal generating set."""
        labs = self.elements.labels
        covers = []
        for i in range(len(labs)):
            for j in _bits(self.up[i]):
                if j == i:
                    continue
                between = self.up[i] & self.down[j] & ~(1 << i) & ~(1 << j)
                if not between:
                    covers.append((labs[i], labs[j]))
        return tuple(sorted(covers))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Poset)
            and self.elements == other.elements
            and self.up == other.up
        )

    def __hash__(self) -> int:
        return hash((self.elements, self.up))

    def __repr__(self) -> str:
        return f"Poset({list(self.elements.labels)!r}, {len(self.strict_pairs())} strict pairs)"


def _witness_cycle(universe: Universe, edges, i: int, j: int) -> tuple:
    """A label cycle i -> ... -> j -> ... -> i through the generating edges."""
    adj = {}
    for a, b in edges:
        adj.setdefault(a, set()).add(b)

    def path(src, dst):
        prev = {src: None}
        queue = [src]
        while queue:
            cur = queue.pop(0)
            if cur == dst:
                out = []
                while cur is not None:
                    out.append(cur)
                    cur = prev[cur]
                return out[::-1]
            for nxt in adj.get(cur, ()):
                if nxt not in prev:
                    prev[nxt] = cur
                    queue.append(nxt)
        return [src, dst]

    cycle = path(i, j)[:-1] + path(j, i)
    return tuple(universe.label(v) for v in cycle)


def poset_from_pairs(elements: Iterable[str], pairs: Iterable[Tuple[str, str]]) -> Poset:
    """The reflexive-transitive closure of the given generating pairs.

    Raises :class:`CycleDetectedError` (with a witness cycle) when the
    closure would violate antisymmetry.
    """
    universe = Universe(elements)
    n = len(universe)
    up = [1 << i for i in range(n)]
    edges = []
    for a, b in pairs:
        ia, ib = universe.index(a), universe.index(b)
        up[ia] |= 1 << ib
        edges.append((ia, ib))
    for k in range(n):
        bit = 1 << k
        for i in range(n):
            if up[i] & bit:
                up[i] |= up[k]
    for i in range(n):
        for j in range(i + 1, n):
            if up[i] >> j & 1 and up[j] >> i & 1:
                raise CycleDetectedError(_witness_cycle(universe, edges, i, j))
    return Poset(universe, tuple(up))


def down_set(p: Poset, x: str) -> frozenset:
    """The minimal open set U_x = {y : y <= x}, as labels."""
    i = p.elements.index(x)
    return frozenset(p.elements.label(j) for j in _bits(p.down[i]))


def up_set(p: Poset, x: str) -> frozenset:
    """The minimal closed set F_x = {y : x <= y}, as labels."""
    i = p.elements.index(x)
    return frozenset(p.elements.label(j) for j in _bits(p.up[i]))


def dual_poset(p: Poset) -> Poset:
    """The same elements with the order reversed."""
    return Poset(p.elements, p.down)


def induced_subposet(p: Poset, labels: Iterable[str]) -> Poset:
    """The restriction of the order to a subset of the elements."""
    labels = set(labels)
    for lab in labels:
        p.elements.index(lab)
    pairs = [(a, b) for (a, b) in p.strict_pairs() if a in labels and b in labels]
    return poset_from_pairs(labels, pairs)


def maximal_elements(p: Poset) -> tuple:
    """Sorted labels of the elements with no strict upper bound."""
    return tuple(
        p.elements.label(i) for i in range(len(p)) if p.up[i] == 1 << i
    )


def minimal_elements(p: Poset) -> tuple:
    return tuple(
        p.elements.label(i) for i in range(len(p)) if p.down[i] == 1 << i
    )


def maximum(p: Poset) -> Optional[str]:
    """The greatest element if it exists, else None."""
    tops = maximal_elements(p)
    if len(tops) == 1 and p.down[p.elements.index(tops[0])] == (1 << len(p)) - 1:
        return tops[0]
    return None


def has_maximum(p: Poset) -> bool:
    return maximum(p) is not None


def order_complex(p: Poset) -> SimplicialComplex:
    """The complex of nonempty chains of the order."""
    if len(p) == 0:
        raise EmptyComplexError("the order complex needs a nonempty poset")
    strict_up = tuple(p.up[i] & ~(1 << i) for i in range(len(p)))
    faces = set()

    def extend(top: int, members: tuple):
        faces.add(members)
        for j in _bits(strict_up[top]):
            extend(j, tuple(sorted(members + (j,))))

    for i in range(len(p)):
        extend(i, (i,))
    return SimplicialComplex(p.elements, faces)


def poset_dowker_complex(p: Poset, strict: bool, side: str) -> SimplicialComplex:
    """The K- or L-complex of the order (or strict order) of a poset.

    The non-strict K-complex is the nerve of the minimal closed sets and
    the non-strict L-complex the nerve of the minimal open sets.  Strict
    complexes of a discrete poset are empty and reported as errors.
    """
    if side not in ("k", "l"):
        raise ValueError(f"side must be 'k' or 'l', got {side!r}")
    if len(p) == 0:
        raise EmptyComplexError("the Dowker complexes need a nonempty poset")
    pairs = p.strict_pairs() if strict else p.pairs()
    if not pairs:
        raise EmptyResultError()
    rel = Relation(p.elements, p.elements, pairs)
    return k_complex(rel) if side == "k" else l_complex(rel)


def lattice_condition(p: Poset) -> bool:
    """True iff every U_x intersect U_y is empty or some U_z."""
    return lattice_condition_witness(p) is None


def lattice_condition_witness(p: Poset) -> Optional[Tuple[str, str]]:
    """The least (x, y) whose down-set intersection is neither empty nor a down-set."""
    downs = set(p.down)
    for i in range(len(p)):
        for j in range(i + 1, len(p)):
            inter = p.down[i] & p.down[j]
            if inter and inter not in downs:
                return (p.elements.label(i), p.elements.label(j))
    return None


def realize_as_poset_k_complex(t: SimplicialComplex) -> Poset:
    """A poset whose non-strict K-complex is ``t``, when one exists.

    Requires ``t`` complete over its universe.  Each facet must own a
    private vertex (one appearing in no other facet); the least private
    vertex of each facet becomes maximal over the rest of that facet, which
    yields an order with chains of at most 2 elements whose K-complex is
    exactly ``t``.  Raises :class:`NotRealizableError` with the first facet
    whose vertices are all shared.
    """
    if t.is_empty:
        raise EmptyComplexError("cannot realize the empty complex")
    if len(t.vertices()) != len(t.universe):
        raise ValueError("complex must be complete over its universe")
    facets = t.facets()
    count = {}
    for s in facets:
        for v in s:
            count[v] = count.get(v, 0) + 1
    pairs = []
    for s in facets:
        private = [v for v in s if count[v] == 1]
        if not private:
            raise NotRealizableError(t.face_labels(s))
        y = t.universe.label(min(private))
        pairs.extend((t.universe.label(x), y) for x in s)
    return poset_from_pairs(t.universe.labels, pairs)


def product_poset(p: Poset, q: Poset) -> Poset:
    """The componentwise order on pairs, labelled ``(p,q)``."""
    labels = [pair_label(a, b) for a in p.labels() for b in q.labels()]
    pairs = [
        (pair_label(a, b), pair_label(a2, b2))
        for a in p.labels()
        for a2 in p.labels()
        if p.leq(a, a2)
        for b in q.labels()
        for b2 in q.labels()
        if q.leq(b, b2)
    ]
    return poset_from_pairs(labels, pairs)


def pair_label(x: str, y: str) -> str:
    return f"({x},{y})"


def connected_components(p: Poset) -> tuple:
    """Components of the comparability graph, each a sorted label tuple."""
    n = len(p)
    comp = [p.up[i] | p.down[i] for i in range(n)]
    seen = [False] * n
    out = []
    for i in range(n):
        if seen[i]:
            continue
        mask = 1 << i
        frontier = comp[i]
        while frontier & ~mask:
            mask |= frontier
            frontier = 0
            for j in _bits(mask):
                frontier |= comp[j]
        members = tuple(p.elements.label(j) for j in _bits(mask))
        for j in _bits(mask):
            seen[j] = True
        out.append(members)
    return tuple(sorted(out))


def singleton_component_witness(p: Poset) -> Optional[str]:
    for members in connected_components(p):
        if len(members) == 1:
            return members[0]
    return None


def is_up_set(p: Poset, labels: Iterable[str]) -> bool:
    """True iff the label set is upward closed in the order."""
    mask = 0
    for lab in labels:
        mask |= 1 << p.elements.index(lab)
    for i in _bits(mask):
        if p.up[i] & ~mask:
            return False
    return True


class FiniteTopology:
    """A finite topological space with every open set stored explicitly."""

    __slots__ = ("points", "opens")

    def __init__(self, points: Universe, opens: Iterable[frozenset]):
        if not isinstance(points, Universe):
            points = Universe(points)
        n = len(points)
        whole = (1 << n) - 1
        masks = set()
        for o in opens:
            mask = 0
            for lab in o:
                mask |= 1 << points.index(lab)
            masks.add(mask)
        masks.add(0)
        if whole not in masks:
            raise InvalidTopologyError("the whole point set must be open")
        for a in masks:
            for b in masks:
                if a | b not in masks:
                    raise InvalidTopologyError("open sets must be closed under union")
                if a & b not in masks:
                    raise InvalidTopologyError(
                        "open sets must be closed under intersection"
                    )
        self.points = points
        self.opens = frozenset(masks)

    def open_label_sets(self) -> tuple:
        """All opens as sorted label tuples, smallest first."""
        outs = []
        for mask in self.opens:
            outs.append(tuple(self.points.label(i) for i in _bits(mask)))
        return tuple(sorted(outs, key=lambda t: (len(t), t)))

    def minimal_open_mask(self, index: int) -> int:
        mask = (1 << len(self.points)) - 1
        for o in self.opens:
            if o >> index & 1:
                mask &= o
        return mask

    def minimal_open(self, label: str) -> frozenset:
        i = self.points.index(label)
        return frozenset(self.points.label(j) for j in _bits(self.minimal_open_mask(i)))

    def t0_witness(self) -> Optional[Tuple[str, str]]:
        mins = [self.minimal_open_mask(i) for i in range(len(self.points))]
        for i in range(len(mins)):
            for j in range(i + 1, len(mins)):
                if mins[i] == mins[j]:
                    return (self.points.label(i), self.points.label(j))
        return None

    def is_t0(self) -> bool:
        return self.t0_witness() is None

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, FiniteTopology)
            and self.points == other.points
            and self.opens == other.opens
        )

    def __hash__(self) -> int:
        return hash((self.points, self.opens))

    def __repr__(self) -> str:
        return f"FiniteTopology({len(self.points)} points, {len(self.opens)} opens)"


def order_to_topology(p: Poset) -> FiniteTopology:
    """The T0 topology generated by the down-sets of the order."""
    masks = {0}
    for d in p.down:
        masks |= {m | d for m in masks}
    labels = p.elements.labels
    opens = [frozenset(labels[i] for i in _bits(m)) for m in masks]
    return FiniteTopology(p.elements, opens)


def topology_to_order(t: FiniteTopology) -> Poset:
    """The specialization order x <= y iff x lies in the minimal open of y."""
    witness = t.t0_witness()
    if witness is not None:
        raise NotT0Error(witness)
    labels = t.points.labels
    pairs = []
    for j, y in enumerate(labels):
        m = t.minimal_open_mask(j)
        pairs.extend((labels[i], y) for i in _bits(m))
    return poset_from_pairs(labels, pairs)


def membership_relation(t: FiniteTopology) -> Relation:
    """The cover of nonempty opens as a relation: a point relates to the opens containing it.

    Opens are labelled by joining their point labels with commas, so the
    L-complex of the result is the nerve of the cover and the K-complex its
    Vietoris counterpart.
    """
    if any("," in lab for lab in t.points.labels):
        raise ValueError("point labels containing ',' cannot name open sets unambiguously")
    named = [(",".join(o), o) for o in t.open_label_sets() if o]
    pairs = [(point, name) for name, points in named for point in points]
    return Relation(t.points, [name for name, _ in named], pairs)
