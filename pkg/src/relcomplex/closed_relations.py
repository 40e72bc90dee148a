"""Closed relations between two posets and the theorem checks built on them.

A relation R between posets X and Y is closed when it is an up-set of the
product order.  Two hypothesis checkers live here: the "maximum in every
fiber" condition (under which the two K-complexes must have equal
homology) and the weaker "every fiber's chain complex is contractible"
condition (under which the two order complexes must).  Contractibility is
only ever certified positively (cone apex or greedy collapse to a point);
a failed certificate reports "unknown", never "non-contractible".
"""

from __future__ import annotations

from typing import Iterable, Optional, Tuple

from .collapses import greedy_collapse
from .complexes import SimplicialComplex, cone_apex
from .errors import EmptyFiberError, NotClosedError
from .homology import homology, same_homology
from .posets import (
    Poset,
    induced_subposet,
    maximal_elements,
    maximum,
    order_complex,
    pair_label,
    poset_dowker_complex,
    product_poset,
)


def closedness_witness(
    pairs: Iterable[Tuple[str, str]], x_poset: Poset, y_poset: Poset
) -> Optional[Tuple[Tuple[str, str], Tuple[str, str]]]:
    """A pair (lower, upper) violating up-closure, or None when closed."""
    pairset = set()
    for x, y in pairs:
        x_poset.elements.index(x)
        y_poset.elements.index(y)
        pairset.add((x, y))
    for x, y in sorted(pairset):
        for x2 in sorted(up_labels(x_poset, x)):
            for y2 in sorted(up_labels(y_poset, y)):
                if (x2, y2) not in pairset:
                    return ((x, y), (x2, y2))
    return None


def up_labels(p: Poset, x: str) -> tuple:
    i = p.elements.index(x)
    return tuple(
        p.elements.label(j) for j in range(len(p)) if p.up[i] >> j & 1
    )


def is_closed(pairs: Iterable[Tuple[str, str]], x_poset: Poset, y_poset: Poset) -> bool:
    """True iff the pair set is upward closed in the product order."""
    return closedness_witness(pairs, x_poset, y_poset) is None


class ClosedRelation:
    """A validated closed relation between two posets."""

    __slots__ = ("x_poset", "y_poset", "pairs")

    def __init__(self, x_poset: Poset, y_poset: Poset, pairs: Iterable[Tuple[str, str]]):
        pairs = frozenset((x, y) for x, y in pairs)
        witness = closedness_witness(pairs, x_poset, y_poset)
        if witness is not None:
            raise NotClosedError(*witness)
        self.x_poset = x_poset
        self.y_poset = y_poset
        self.pairs = pairs

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, ClosedRelation)
            and self.x_poset == other.x_poset
            and self.y_poset == other.y_poset
            and self.pairs == other.pairs
        )

    def __repr__(self) -> str:
        return f"ClosedRelation({len(self.pairs)} pairs)"


def fiber(rel: ClosedRelation, element: str, side: str) -> Poset:
    """The subposet of the opposite side related to ``element``."""
    if side == "x":
        rel.x_poset.elements.index(element)
        members = {y for x, y in rel.pairs if x == element}
        return induced_subposet(rel.y_poset, members)
    if side == "y":
        rel.y_poset.elements.index(element)
        members = {x for x, y in rel.pairs if y == element}
        return induced_subposet(rel.x_poset, members)
    raise ValueError(f"side must be 'x' or 'y', got {side!r}")


def _iter_fibers(rel: ClosedRelation):
    for x in rel.x_poset.labels():
        f = fiber(rel, x, "x")
        if len(f) == 0:
            raise EmptyFiberError(x)
        yield "x", x, f
    for y in rel.y_poset.labels():
        f = fiber(rel, y, "y")
        if len(f) == 0:
            raise EmptyFiberError(y)
        yield "y", y, f


def weak_hypothesis(rel: ClosedRelation) -> dict:
    """Check that every fiber has a maximum.

    Reports, per fiber, the maximum or the incomparable maximal elements
    witnessing its absence; ``holds`` is the conjunction.
    """
    fibers = []
    holds = True
    for side, element, sub in _iter_fibers(rel):
        top = maximum(sub)
        entry = {
            "side": side,
            "element": element,
            "elements": sorted(sub.labels()),
            "maximum": top,
        }
        if top is None:
            entry["maximal"] = sorted(maximal_elements(sub))
            holds = False
        fibers.append(entry)
    return {"hypothesis": "weak", "holds": holds, "fibers": fibers}


def _certify_contractible(k: SimplicialComplex) -> dict:
    apex = cone_apex(k)
    if apex is not None:
        return {"certificate": "cone", "apex": apex}
    core, _ = greedy_collapse(k)
    if core.is_point:
        return {"certificate": "collapsible"}
    return {"certificate": "unknown"}


def quillen_hypothesis(rel: ClosedRelation) -> dict:
    """Certify contractibility of every fiber's order complex.

    Certificates are "cone" (a vertex in every facet), "collapsible"
    (greedy collapse reaches a point) or "unknown"; only the first two
    count as certified.
    """
    fibers = []
    certified = True
    for side, element, sub in _iter_fibers(rel):
        entry = {"side": side, "element": element}
        entry.update(_certify_contractible(order_complex(sub)))
        if entry["certificate"] == "unknown":
            certified = False
        fibers.append(entry)
    return {"hypothesis": "quillen", "certified": certified, "fibers": fibers}


def relation_poset(rel: ClosedRelation) -> Poset:
    """The relation itself as a subposet of the product order."""
    labels = [pair_label(x, y) for x, y in rel.pairs]
    return induced_subposet(product_poset(rel.x_poset, rel.y_poset), labels)


def preimage_facet_check(rel: ClosedRelation, side: str) -> dict:
    """Check that each facet of a side's K-complex pulls back to a full simplex.

    For a facet s of the K-complex of the chosen side's poset, the preimage
    under the projection from the relation poset's K-complex is the
    subcomplex spanned by the pairs projecting into s; it is a full simplex
    exactly when that whole vertex set is a face.
    """
    if side not in ("x", "y"):
        raise ValueError(f"side must be 'x' or 'y', got {side!r}")
    base = rel.x_poset if side == "x" else rel.y_poset
    base_k = poset_dowker_complex(base, False, "k")
    kr = poset_dowker_complex(relation_poset(rel), False, "k")
    facets = []
    all_full = True
    for facet in base_k.facets():
        members = set(base_k.face_labels(facet))
        if side == "x":
            vertices = sorted(pair_label(x, y) for x, y in rel.pairs if x in members)
        else:
            vertices = sorted(pair_label(x, y) for x, y in rel.pairs if y in members)
        full = bool(vertices) and kr.has_face_labels(vertices)
        all_full = all_full and full
        facets.append(
            {
                "facet": list(base_k.face_labels(facet)),
                "vertices": vertices,
                "full_simplex": full,
            }
        )
    return {"side": side, "all_full": all_full, "facets": facets}


def verify_closed_relation(rel: ClosedRelation, mode: str) -> dict:
    """Run a hypothesis check and, when it holds, the theorem's conclusion.

    Mode "quillen" compares the homology of the two order complexes; mode
    "weak" compares the two K-complexes and additionally checks the facet
    preimages on both sides.  The verdict is "confirmed" when hypothesis
    and conclusion both hold, "hypothesis-not-met" when the hypothesis
    fails, and "theorem-violation" if a certified hypothesis ever came with
    a failing conclusion (which should not happen).
    """
    if mode == "quillen":
        hyp = quillen_hypothesis(rel)
        met = hyp["certified"]
        cx = order_complex(rel.x_poset)
        cy = order_complex(rel.y_poset)
        equal = same_homology(cx, cy)
        report = {
            "mode": "quillen",
            "hypothesis": hyp,
            "hypothesis_met": met,
            "cx_homology": homology(cx).as_report(),
            "cy_homology": homology(cy).as_report(),
            "same_homology": equal,
        }
        conclusion = equal
    elif mode == "weak":
        hyp = weak_hypothesis(rel)
        met = hyp["holds"]
        kx = poset_dowker_complex(rel.x_poset, False, "k")
        ky = poset_dowker_complex(rel.y_poset, False, "k")
        equal = same_homology(kx, ky)
        pre_x = preimage_facet_check(rel, "x")
        pre_y = preimage_facet_check(rel, "y")
        report = {
            "mode": "weak",
            "hypothesis": hyp,
            "hypothesis_met": met,
            "kx_homology": homology(kx).as_report(),
            "ky_homology": homology(ky).as_report(),
            "same_homology": equal,
            "preimages": {"x": pre_x, "y": pre_y},
        }
        conclusion = equal and pre_x["all_full"] and pre_y["all_full"]
    else:
        raise ValueError(f"mode must be 'quillen' or 'weak', got {mode!r}")
    if not met:
        report["verdict"] = "hypothesis-not-met"
    elif conclusion:
        report["verdict"] = "confirmed"
    else:
        report["verdict"] = "theorem-violation"
    return report
