"""Alexander-module presentations, Seifert recovery, intersection forms,
and kernel-basis reconstruction from Plucker points."""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from math import gcd

from sympy import Matrix, Poly, symbols

from . import strands
from .decat import ExteriorElement, plucker
from .errors import (NotDecomposable, NotUnimodular, SchemaViolation,
                     SeifertConsistencyFailure, ZeroPoint)
from .laurent import LaurentPolynomial

_t = symbols("t")


@dataclass(frozen=True)
class Presentation:
    """A + tB presents the Alexander module in a doubled surface basis."""
    a: tuple  # 2k x 2k integer matrix, as tuple of tuples
    b: tuple

    @classmethod
    def make(cls, a, b):
        a = tuple(tuple(int(x) for x in row) for row in a)
        b = tuple(tuple(int(x) for x in row) for row in b)
        if len(a) != len(b) or any(len(r) != len(a) for r in a + b):
            raise SchemaViolation("presentation matrices must be square, same size")
        return cls(a, b)

    def to_json(self):
        return {"A": [list(r) for r in self.a], "B": [list(r) for r in self.b]}

    @classmethod
    def from_json(cls, obj):
        try:
            return cls.make(obj["A"], obj["B"])
        except (KeyError, TypeError, ValueError) as exc:
            raise SchemaViolation(f"bad presentation JSON: {exc}") from exc

    @classmethod
    def from_file(cls, path):
        with open(path) as fh:
            return cls.from_json(json.load(fh))


def matrix_from_json(obj):
    try:
        return tuple(tuple(int(x) for x in row) for row in obj["matrix"])
    except (KeyError, TypeError, ValueError) as exc:
        raise SchemaViolation(f"bad matrix JSON: {exc}") from exc


def matrix_from_file(path):
    with open(path) as fh:
        return matrix_from_json(json.load(fh))


def _det_poly(m):
    """Determinant of an integer+t matrix as a LaurentPolynomial."""
    det = Matrix(m).det()
    poly = Poly(det, _t)
    return LaurentPolynomial(
        {exp[0]: int(c) for exp, c in poly.terms()})


def presentation_to_alexander(pres):
    """det(A + tB), symmetrized to a_i = a_{-i} with positive top
    coefficient when possible; the raw determinant otherwise."""
    size = len(pres.a)
    m = [[pres.a[i][j] + _t * pres.b[i][j] for j in range(size)]
         for i in range(size)]
    raw = _det_poly(m)
    sym = raw.symmetrized()
    return sym if sym is not None else raw


def alexander_from_seifert(v):
    """det(V - t V^T)."""
    size = len(v)
    m = [[v[i][j] - _t * v[j][i] for j in range(size)] for i in range(size)]
    raw = _det_poly(m)
    sym = raw.symmetrized()
    return sym if sym is not None else raw


def recover_seifert(pres, omega):
    """V = -omega (A+B)^{-1} A, exactly over the integers."""
    a = Matrix(pres.a)
    b = Matrix(pres.b)
    w = Matrix(omega)
    s = a + b
    det = s.det()
    if det not in (1, -1):
        raise NotUnimodular(f"det(A+B) = {det}, expected +-1")
    v = -w * s.adjugate() * a * det  # inv = adjugate/det, det = +-1
    v = tuple(tuple(int(x) for x in row) for row in v.tolist())
    size = len(v)
    for i in range(size):
        for j in range(size):
            if v[i][j] - v[j][i] != -omega[i][j]:
                raise SeifertConsistencyFailure("V - V^T != -omega")
    return v


# intersection forms -------------------------------------------------------
def intersection_from_pmc(pmc):
    """gamma_j . gamma_j' from the interleaving of the matched pairs."""
    n2k = pmc.num_classes
    out = [[0] * n2k for _ in range(n2k)]
    for j in range(1, n2k + 1):
        mj, pj = pmc.class_points(j)
        for jp in range(1, n2k + 1):
            if jp == j:
                continue
            mp, pp = pmc.class_points(jp)
            if mj < mp < pj < pp:
                out[j - 1][jp - 1] = 1
            elif mp < mj < pp < pj:
                out[j - 1][jp - 1] = -1
    return tuple(tuple(r) for r in out)


def intersection_from_algebra(pmc):
    """Entry (j, j') = the graded Euler characteristic of the single-strand
    space I_j A(Z, 1-k) I_{j'}."""
    n2k = pmc.num_classes
    out = [[0] * n2k for _ in range(n2k)]
    for elt in strands.basis(pmc, 1 - pmc.k):
        (s, t), = elt.pairs
        j, jp = pmc.cls(s), pmc.cls(t)
        out[j - 1][jp - 1] += -1 if elt.gr % 2 else 1
    return tuple(tuple(r) for r in out)


# integer linear algebra ---------------------------------------------------
def _hnf(rows):
    """Row-style Hermite normal form of an integer matrix (nonzero rows)."""
    rows = [list(r) for r in rows]
    m = len(rows[0]) if rows else 0
    pivot_row = 0
    for col in range(m):
        best = None
        for i in range(pivot_row, len(rows)):
            if rows[i][col]:
                if best is None or abs(rows[i][col]) < abs(rows[best][col]):
                    best = i
        if best is None:
            continue
        rows[pivot_row], rows[best] = rows[best], rows[pivot_row]
        # clear the column below by gcd steps
        changed = True
        while changed:
            changed = False
            for i in range(pivot_row + 1, len(rows)):
                if rows[i][col]:
                    q = rows[i][col] // rows[pivot_row][col]
                    rows[i] = [x - q * y for x, y in zip(rows[i], rows[pivot_row])]
                    if rows[i][col]:
                        rows[pivot_row], rows[i] = rows[i], rows[pivot_row]
                        changed = True
        if rows[pivot_row][col] < 0:
            rows[pivot_row] = [-x for x in rows[pivot_row]]
        # reduce entries above the pivot
        for i in range(pivot_row):
            q = rows[i][col] // rows[pivot_row][col]
            if q:
                rows[i] = [x - q * y for x, y in zip(rows[i], rows[pivot_row])]
        pivot_row += 1
        if pivot_row == len(rows):
            break
    return [r for r in rows[:pivot_row] if any(r)]


def left_kernel(rows):
    """Basis of {v integer : v . rows = 0}; saturated by construction.

    Runs Hermite reduction on [rows | I] and keeps the identity-side rows
    whose rows-side reduced to zero.
    """
    rows = [list(r) for r in rows]
    n = len(rows)
    m = len(rows[0]) if rows else 0
    aug = [rows[i] + [1 if j == i else 0 for j in range(n)] for i in range(n)]
    red = _hnf_full(aug, m)
    return [r[m:] for r in red if not any(r[:m])]


def _hnf_full(rows, left_cols):
    """Hermite reduction pivoting only on the first left_cols columns,
    keeping all rows (the tail rows have zero left part)."""
    rows = [list(r) for r in rows]
    pivot_row = 0
    for col in range(left_cols):
        best = None
        for i in range(pivot_row, len(rows)):
            if rows[i][col]:
                if best is None or abs(rows[i][col]) < abs(rows[best][col]):
                    best = i
        if best is None:
            continue
        rows[pivot_row], rows[best] = rows[best], rows[pivot_row]
        changed = True
        while changed:
            changed = False
            for i in range(pivot_row + 1, len(rows)):
                if rows[i][col]:
                    q = rows[i][col] // rows[pivot_row][col]
                    rows[i] = [x - q * y for x, y in zip(rows[i], rows[pivot_row])]
                    if rows[i][col]:
                        rows[pivot_row], rows[i] = rows[i], rows[pivot_row]
                        changed = True
        pivot_row += 1
        if pivot_row == len(rows):
            break
    return rows


def kernel_basis_from_plucker(p):
    """(content, rows): the primitive subgroup whose Plucker point matches.

    Solves v ^ (p/content) = 0 as an integer linear system, canonicalizes by
    Hermite normal form, and re-verifies by wedging the rows.
    """
    if p.factors != 1:
        raise SchemaViolation("expected a single-factor element")
    if not p:
        raise ZeroPoint("the Plucker point is zero")
    m = p.dims[0]
    degrees = {len(k) for k in p.terms}
    if len(degrees) != 1:
        raise NotDecomposable("mixed-degree element")
    r = degrees.pop()
    content = 0
    for c in p.terms.values():
        content = gcd(content, abs(c))
    q = {k: c // content for k, c in p.terms.items()}
    # v in W  iff  v ^ q = 0: one constraint per (r+1)-subset w, with
    # coefficient of v_i equal to +-q_{w - i}
    constraints = []
    for w in itertools.combinations(range(1, m + 1), r + 1):
        row = [0] * m
        for pos, i in enumerate(w):
            rest = w[:pos] + w[pos + 1:]
            sign = -1 if pos % 2 else 1  # moving e_i to the front of rest
            row[i - 1] = sign * q.get(rest, 0)
        constraints.append(row)
    # left kernel of the transposed constraint matrix
    transposed = [[constraints[c][i] for c in range(len(constraints))]
                  for i in range(m)]
    basis = left_kernel(transposed)
    rows = _hnf(basis)
    if len(rows) != r:
        raise NotDecomposable(
            f"solution space has rank {len(rows)}, expected {r}")
    check = plucker(rows)
    target = ExteriorElement.single(m, q)
    if check != target and check != -target:
        raise NotDecomposable("wedge of the recovered rows differs from the point")
    return content, tuple(tuple(row) for row in rows)
