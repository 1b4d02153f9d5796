"""Exact exterior-algebra integer linear algebra and decategorification maps.

Monomial order: ascending index subsets, lexicographic within each degree.
All signs depend on this order; it is fixed here and used everywhere.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass

from sympy import Matrix

from .errors import (BasisMismatch, DegreeMismatch, DimensionMismatch,
                     DimensionOdd, RankDeficient, SchemaViolation)
from .laurent import LaurentPolynomial


def _merge_sign(u, v):
    """Sign of sorting the concatenation u + v; None when they intersect."""
    if set(u) & set(v):
        return None
    inv = sum(1 for a in u for b in v if a > b)
    return -1 if inv % 2 else 1


def star_sign(u, v):
    """star(wedge_u ^ wedge_v) for complementary subsets u, v."""
    s = _merge_sign(tuple(u), tuple(v))
    if s is None:
        raise BasisMismatch("star sign needs disjoint subsets")
    return s


class ExteriorElement:
    """Integer element of Lambda*(Z^n), or of a two-factor tensor
    Lambda*(Z^{n0}) (x) Lambda*(Z^{n1}).

    terms: sorted index tuple -> coefficient (single factor), or a pair of
    sorted tuples -> coefficient (two factors).  Indices are 1-based.
    """

    def __init__(self, dims, terms=None, factors=1):
        self.factors = factors
        self.dims = tuple(dims) if factors == 2 else (int(dims),)
        self.terms = {}
        for key, c in (terms or {}).items():
            if not c:
                continue
            if factors == 1:
                key = tuple(sorted(key))
            else:
                key = (tuple(sorted(key[0])), tuple(sorted(key[1])))
            self.terms[key] = self.terms.get(key, 0) + int(c)
        self.terms = {k: c for k, c in self.terms.items() if c}

    @classmethod
    def single(cls, n, terms=None):
        return cls(n, terms, factors=1)

    @classmethod
    def two(cls, n0, n1, terms=None):
        return cls((n0, n1), terms, factors=2)

    @classmethod
    def monomial(cls, n, subset, coeff=1):
        return cls.single(n, {tuple(sorted(subset)): coeff})

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if not isinstance(other, ExteriorElement):
            return NotImplemented
        return (self.factors, self.dims, self.terms) == \
            (other.factors, other.dims, other.terms)

    def _like(self, terms):
        dims = self.dims if self.factors == 2 else self.dims[0]
        return ExteriorElement(dims, terms, self.factors)

    def __add__(self, other):
        if (self.factors, self.dims) != (other.factors, other.dims):
            raise BasisMismatch("elements over different spaces")
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, 0) + c
        return self._like(out)

    def __neg__(self):
        return self._like({k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rmul__(self, scalar):
        return self._like({k: scalar * c for k, c in self.terms.items()})

    def wedge(self, other):
        if self.factors != 1 or other.factors != 1:
            raise BasisMismatch("wedge is defined on single-factor elements")
        if self.dims != other.dims:
            raise BasisMismatch("elements over different spaces")
        out = {}
        for u, cu in self.terms.items():
            for v, cv in other.terms.items():
                s = _merge_sign(u, v)
                if s is None:
                    continue
                key = tuple(sorted(u + v))
                out[key] = out.get(key, 0) + s * cu * cv
        return self._like(out)

    def to_json(self):
        if self.factors == 1:
            return {"dimension": self.dims[0],
                    "terms": [{"indices": list(k), "coeff": c}
                              for k, c in sorted(self.terms.items())]}
        return {"dimensions": list(self.dims),
                "terms": [{"left": list(k[0]), "right": list(k[1]), "coeff": c}
                          for k, c in sorted(self.terms.items())]}

    @classmethod
    def from_json(cls, obj):
        try:
            if "dimension" in obj:
                return cls.single(int(obj["dimension"]),
                                  {tuple(t["indices"]): int(t["coeff"])
                                   for t in obj["terms"]})
            n0, n1 = obj["dimensions"]
            return cls.two(int(n0), int(n1),
                           {(tuple(t["left"]), tuple(t["right"])): int(t["coeff"])
                            for t in obj["terms"]})
        except (KeyError, TypeError, ValueError) as exc:
            raise SchemaViolation(f"bad exterior element JSON: {exc}") from exc

    def __repr__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"{c}*e{list(k)}" for k, c in sorted(self.terms.items()))


def wedge(u, v):
    return u.wedge(v)


def wedge_rows(rows, n):
    """Wedge of row vectors of Z^n, in order."""
    out = ExteriorElement.single(n, {(): 1})
    for row in rows:
        vec = ExteriorElement.single(
            n, {(i,): int(c) for i, c in enumerate(row, start=1)})
        out = out.wedge(vec)
    return out


def plucker(rows):
    """Maximal minors of an r x m integer matrix, as a degree-r element."""
    rows = [list(map(int, r)) for r in rows]
    r = len(rows)
    m = len(rows[0]) if rows else 0
    out = {}
    for cols in itertools.combinations(range(m), r):
        minor = Matrix([[row[c] for c in cols] for row in rows]).det()
        out[tuple(c + 1 for c in cols)] = int(minor)
    elt = ExteriorElement.single(m, out)
    if not elt:
        raise RankDeficient("rows are linearly dependent")
    return elt


def hodge_eta(v):
    """eta(v) = (x -> star(x ^ v)), returned through the monomial
    identification of (Lambda^j)* with Lambda^j."""
    if v.factors != 1:
        raise BasisMismatch("eta acts on single-factor elements")
    n = v.dims[0]
    full = set(range(1, n + 1))
    out = {}
    for a, c in v.terms.items():
        u = tuple(sorted(full - set(a)))
        out[u] = out.get(u, 0) + c * star_sign(u, a)
    return ExteriorElement.single(n, out)


def combine_factors(p):
    """Read a two-factor element over (Z^{n0}, Z^{n1}) in the joint basis.

    The first-factor basis maps to the negated first block of the joint
    basis, contributing (-1)^{|left subset|}; second-factor indices shift by
    n0.  Inverse to splitting a Plucker point over a two-piece boundary.
    """
    if p.factors != 2:
        raise BasisMismatch("expected a two-factor element")
    n0, n1 = p.dims
    out = {}
    for (u, v), c in p.terms.items():
        key = tuple(u) + tuple(i + n0 for i in v)
        sign = -1 if len(u) % 2 else 1
        out[key] = out.get(key, 0) + sign * c
    return ExteriorElement.single(n0 + n1, out)


class GradedEndomorphism:
    """Degree-preserving map Lambda*(Z^n) -> Lambda*(Z^n), stored as one
    integer matrix per exterior degree over the lex-ordered subset basis."""

    def __init__(self, n, blocks):
        self.n = n
        self.blocks = {}
        for j in range(n + 1):
            size = len(list(itertools.combinations(range(n), j)))
            block = blocks.get(j)
            if block is None:
                block = [[0] * size for _ in range(size)]
            self.blocks[j] = [list(map(int, row)) for row in block]
            if len(self.blocks[j]) != size or \
                    any(len(r) != size for r in self.blocks[j]):
                raise DimensionMismatch(f"degree-{j} block has the wrong shape")

    @classmethod
    def identity(cls, n):
        out = cls(n, {})
        for j, block in out.blocks.items():
            for i in range(len(block)):
                block[i][i] = 1
        return out

    def __eq__(self, other):
        if not isinstance(other, GradedEndomorphism):
            return NotImplemented
        return self.n == other.n and self.blocks == other.blocks

    def __neg__(self):
        return GradedEndomorphism(
            self.n, {j: [[-x for x in row] for row in b]
                     for j, b in self.blocks.items()})

    def trace(self, j):
        return sum(self.blocks[j][i][i] for i in range(len(self.blocks[j])))

    def to_json(self):
        return {"dimension": self.n,
                "blocks": {str(j): b for j, b in sorted(self.blocks.items())}}

    @classmethod
    def from_json(cls, obj):
        try:
            n = int(obj["dimension"])
            blocks = {int(j): b for j, b in obj["blocks"].items()}
        except (KeyError, TypeError, ValueError) as exc:
            raise SchemaViolation(f"bad endomorphism JSON: {exc}") from exc
        return cls(n, blocks)

    @classmethod
    def from_file(cls, path):
        with open(path) as fh:
            return cls.from_json(json.load(fh))


def _subset_index(n, j):
    subs = list(itertools.combinations(range(1, n + 1), j))
    return {s: i for i, s in enumerate(subs)}, subs


def upsilon(p):
    """The homomorphism v (x) v' -> eta(v) evaluated against the input,
    as a graded endomorphism.  Requires every term to preserve degree.

    The first factor lives over the reversed circle; its monomials carry the
    (-1)^{|subset|} identification sign (the same sign combine_factors uses).
    """
    if p.factors != 2:
        raise BasisMismatch("upsilon expects a two-factor element")
    n0, n1 = p.dims
    if n0 != n1:
        raise DimensionMismatch("factors of different dimension")
    n = n0
    for (a, b), _ in p.terms.items():
        if len(a) + len(b) != n:
            raise DegreeMismatch(
                f"term of bidegree ({len(a)}, {len(b)}) is not degree-preserving")
    out = GradedEndomorphism(n, {})
    for j in range(n + 1):
        index, subs = _subset_index(n, j)
        block = out.blocks[j]
        for (a, b), c in p.terms.items():
            if len(b) != j:
                continue
            u = tuple(sorted(set(range(1, n + 1)) - set(a)))
            if len(u) != j:
                continue
            sign = -1 if len(a) % 2 else 1
            block[index[b]][index[u]] += sign * c * star_sign(u, a)
    return out


def tqft_compose(f, g):
    """Block-wise matrix product f o g."""
    if f.n != g.n:
        raise DimensionMismatch("endomorphisms over different dimensions")
    out = GradedEndomorphism(f.n, {})
    for j in range(f.n + 1):
        a, b = f.blocks[j], g.blocks[j]
        size = len(a)
        out.blocks[j] = [[sum(a[i][l] * b[l][m] for l in range(size))
                          for m in range(size)] for i in range(size)]
    return out


def graded_trace(e):
    """Delta(t) = sum_i (-1)^i t^i Tr(degree k+i block)."""
    if e.n % 2:
        raise DimensionOdd("graded trace needs an even-dimensional space")
    k = e.n // 2
    out = LaurentPolynomial.zero()
    for i in range(-k, k + 1):
        sign = -1 if i % 2 else 1
        out = out + LaurentPolynomial.monomial(i, sign * e.trace(k + i))
    return out


# decategorification of structures ----------------------------------------
def psi_K0(structure):
    """[N] in the exterior algebra: one factor for a type D structure, two
    for a DD structure; each generator contributes (-1)^gr on its stored
    idempotent monomial(s)."""
    if structure.flavor == "D":
        n = structure.pmc.num_classes
        out = {}
        for g in structure.generators.values():
            key = tuple(sorted(g.idem_left))
            out[key] = out.get(key, 0) + (-1 if g.grading % 2 else 1)
        return ExteriorElement.single(n, out)
    if structure.flavor == "DD":
        n0 = structure.pmc_left.num_classes
        n1 = structure.pmc_right.num_classes
        out = {}
        for g in structure.generators.values():
            key = (tuple(sorted(g.idem_left)), tuple(sorted(g.idem_right)))
            out[key] = out.get(key, 0) + (-1 if g.grading % 2 else 1)
        return ExteriorElement.two(n0, n1, out)
    raise BasisMismatch(f"psi_K0 expects a D or DD structure, got {structure.flavor}")


def k0_functional(a_struct):
    """[M] for a type A structure, as a functional on the exterior algebra
    (monomial-dual identification); each elementary piece over the reversed
    circle carries the extra (-1)^{|s|} factor."""
    if a_struct.flavor != "A":
        raise BasisMismatch("k0_functional expects a type A structure")
    n = a_struct.pmc.num_classes
    out = {}
    for g in a_struct.generators.values():
        key = tuple(sorted(g.idem_right))
        sign = (-1 if g.grading % 2 else 1) * (-1 if len(key) % 2 else 1)
        out[key] = out.get(key, 0) + sign
    return ExteriorElement.single(n, out)


def k0_of_da(n_struct):
    """The induced Grothendieck-group endomorphism of a DA structure with
    degree-matched idempotents: entry (left idem, right idem) += (-1)^gr."""
    if n_struct.flavor != "DA":
        raise BasisMismatch("k0_of_da expects a DA structure")
    n = n_struct.pmc_right.num_classes
    out = GradedEndomorphism(n, {})
    for g in n_struct.generators.values():
        if len(g.idem_left) != len(g.idem_right):
            raise DegreeMismatch(
                f"generator {g.name} does not preserve the exterior degree")
        j = len(g.idem_right)
        index, _ = _subset_index(n, j)
        row = index[tuple(sorted(g.idem_left))]
        col = index[tuple(sorted(g.idem_right))]
        out.blocks[j][row][col] += -1 if g.grading % 2 else 1
    return out
