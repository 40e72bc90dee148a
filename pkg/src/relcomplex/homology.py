"""Integer simplicial homology via boundary matrices and Smith normal form.

Everything is exact: entries are arbitrary-precision Python integers, so
torsion is observable and pivot growth is harmless at the scales this
library targets (up to roughly a thousand faces).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import List, Tuple

from .complexes import SimplicialComplex


@dataclass(frozen=True)
class IntegerMatrix:
    """An immutable integer matrix, row-major."""

    rows: int
    cols: int
    entries: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        if len(self.entries) != self.rows or any(
            len(r) != self.cols for r in self.entries
        ):
            raise ValueError("entry grid does not match the declared dimensions")
        object.__setattr__(
            self, "entries", tuple(tuple(int(v) for v in r) for r in self.entries)
        )

    @classmethod
    def from_rows(cls, rows: List[List[int]]) -> "IntegerMatrix":
        nrows = len(rows)
        ncols = len(rows[0]) if rows else 0
        return cls(nrows, ncols, tuple(tuple(r) for r in rows))

    def is_zero(self) -> bool:
        return all(v == 0 for row in self.entries for v in row)


def matrix_product(a: IntegerMatrix, b: IntegerMatrix) -> IntegerMatrix:
    if a.cols != b.rows:
        raise ValueError("inner dimensions must agree")
    bt = list(zip(*b.entries)) if b.entries else []
    rows = tuple(
        tuple(sum(x * y for x, y in zip(row, col)) for col in bt) for row in a.entries
    )
    return IntegerMatrix(a.rows, b.cols, rows)


def boundary_matrices(k: SimplicialComplex) -> List[IntegerMatrix]:
    """The boundary maps [d_1, ..., d_dim]; d_n sends n-faces to (n-1)-faces.

    Faces index rows and columns in lexicographic order; signs alternate
    along the canonical vertex order, so d_{n-1} d_n = 0.
    """
    out = []
    below = {f: i for i, f in enumerate(k.n_faces(0))}
    n = 1
    while True:
        here = k.n_faces(n)
        if not here:
            break
        rows = [[0] * len(here) for _ in below]
        for j, face in enumerate(here):
            for pos in range(len(face)):
                sub = face[:pos] + face[pos + 1 :]
                rows[below[sub]][j] = -1 if pos % 2 else 1
        out.append(IntegerMatrix(len(below), len(here), tuple(map(tuple, rows))))
        below = {f: i for i, f in enumerate(here)}
        n += 1
    return out


def smith_normal_form(m: IntegerMatrix) -> Tuple[int, ...]:
    """The positive diagonal d_1 | d_2 | ... | d_r of the Smith normal form.

    Works on a copy; pivots are chosen with smallest nonzero absolute value
    to keep intermediate entries small.  The matrix is first diagonalized
    by exact row/column reduction, then the diagonal is normalized into a
    divisibility chain by repeated gcd/lcm exchanges (which preserve the
    equivalence class).
    """
    a = [list(row) for row in m.entries]
    nr, nc = m.rows, m.cols
    diag = []
    t = 0
    while True:
        piv = None
        piv_abs = 0
        for i in range(t, nr):
            row = a[i]
            for j in range(t, nc):
                v = row[j]
                if v and (piv is None or abs(v) < piv_abs):
                    piv = (i, j)
                    piv_abs = abs(v)
        if piv is None:
            break
        a[t], a[piv[0]] = a[piv[0]], a[t]
        if piv[1] != t:
            for row in a:
                row[t], row[piv[1]] = row[piv[1]], row[t]
        while True:
            if a[t][t] < 0:
                a[t] = [-v for v in a[t]]
            p = a[t][t]
            moved = False
            for i in range(t + 1, nr):
                v = a[i][t]
                if v:
                    q = v // p
                    if q:
                        a[i] = [x - q * y for x, y in zip(a[i], a[t])]
                    if a[i][t]:
                        # remainder is a smaller pivot candidate
                        a[t], a[i] = a[i], a[t]
                        moved = True
                        break
            if moved:
                continue
            for j in range(t + 1, nc):
                v = a[t][j]
                if v:
                    q = v // p
                    if q:
                        for i in range(nr):
                            a[i][j] -= q * a[i][t]
                    if a[t][j]:
                        for row in a:
                            row[t], row[j] = row[j], row[t]
                        moved = True
                        break
            if not moved:
                break
        diag.append(a[t][t])
        t += 1
    changed = True
    while changed:
        changed = False
        for i in range(len(diag) - 1):
            x, y = diag[i], diag[i + 1]
            if y % x:
                g = math.gcd(x, y)
                diag[i], diag[i + 1] = g, x * y // g
                changed = True
    return tuple(diag)


@dataclass(frozen=True)
class HomologyProfile:
    """Betti numbers and torsion coefficients per dimension, up to the complex dimension."""

    betti: Tuple[int, ...]
    torsion: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        if len(self.betti) != len(self.torsion):
            raise ValueError("betti and torsion must cover the same dimensions")

    def as_report(self) -> dict:
        return {
            "betti": list(self.betti),
            "torsion": [list(t) for t in self.torsion],
        }

    def matches(self, other: "HomologyProfile") -> bool:
        """Equality in every dimension, padding the shorter profile with zeros."""
        n = max(len(self.betti), len(other.betti))
        return (
            self.betti + (0,) * (n - len(self.betti))
            == other.betti + (0,) * (n - len(other.betti))
            and self.torsion + ((),) * (n - len(self.torsion))
            == other.torsion + ((),) * (n - len(other.torsion))
        )


def homology(k: SimplicialComplex) -> HomologyProfile:
    """Integer homology: betti_n and the torsion coefficients of dimension n.

    betti_n = #n-faces - rank d_n - rank d_{n+1}; torsion_n is the part of
    the Smith diagonal of d_{n+1} exceeding 1.  The empty complex gets the
    empty profile.
    """
    if k.is_empty:
        return HomologyProfile((), ())
    dim = k.dimension()
    counts = [len(k.n_faces(n)) for n in range(dim + 1)]
    diagonals = [smith_normal_form(b) for b in boundary_matrices(k)]
    ranks = [0] + [len(d) for d in diagonals] + [0]
    betti = tuple(counts[n] - ranks[n] - ranks[n + 1] for n in range(dim + 1))
    torsion = tuple(
        tuple(d for d in diagonals[n] if d > 1) if n < dim else ()
        for n in range(dim + 1)
    )
    return HomologyProfile(betti, torsion)


def same_homology(a: SimplicialComplex, b: SimplicialComplex) -> bool:
    """True iff the profiles agree in every dimension (padding with zeros)."""
    return homology(a).matches(homology(b))
