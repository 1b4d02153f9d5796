"""Hochschild chain groups of DA bimodules and GF(2) chain complex homology."""

from __future__ import annotations

import json
from dataclasses import dataclass

from .errors import BoundaryMismatch, NotAComplex, SchemaViolation
from .laurent import LaurentPolynomial
from .pmc import reverse


@dataclass(frozen=True)
class HochschildGenerator:
    name: str
    idem: frozenset  # the common left/right idempotent class set
    grading: int  # gr_DA(x) + i
    strands_grading: int  # i = |s| - k


@dataclass(frozen=True)
class HochschildChainGroup:
    generators: tuple

    def by_strands_grading(self):
        out = {}
        for g in self.generators:
            out.setdefault(g.strands_grading, []).append(g)
        return out


def hochschild_generators(n):
    """Generators x with equal left/right idempotent classes, gradings
    shifted by the strands grading."""
    if n.pmc_left != reverse(n.pmc_right):
        raise BoundaryMismatch(
            "Hochschild chains need boundary algebras over Z and -Z")
    k = n.pmc_right.k
    gens = []
    for g in n.generators.values():
        if g.idem_left != g.idem_right:
            continue
        i = len(g.idem_right) - k
        gens.append(HochschildGenerator(
            g.name, g.idem_right, (g.grading + i) % 2, i))
    return HochschildChainGroup(tuple(gens))


def graded_euler(ch):
    """Sum over strands gradings i of t^i times the signed generator count."""
    out = LaurentPolynomial.zero()
    for g in ch.generators:
        sign = -1 if g.grading % 2 else 1
        out = out + LaurentPolynomial.monomial(g.strands_grading, sign)
    return out


class F2ChainComplex:
    """Generators with a Z/2 grading and a differential over GF(2)."""

    def __init__(self, generators, grading, differential):
        self.generators = list(generators)
        self.grading = dict(grading)
        self.differential = {k: frozenset(v)
                             for k, v in differential.items() if v}

    def validate(self):
        errors = []
        for x, targets in self.differential.items():
            for y in targets:
                if self.grading[y] != (self.grading[x] + 1) % 2:
                    errors.append(f"d does not flip the grading at {x}")
        acc = {}
        for x, targets in self.differential.items():
            for y in targets:
                for z in self.differential.get(y, ()):
                    acc[(x, z)] = acc.get((x, z), 0) ^ 1
        errors.extend(f"d^2 != 0 from {x} to {z}"
                      for (x, z), v in acc.items() if v)
        if errors:
            raise NotAComplex("; ".join(errors))
        return True

    def homology_dimensions(self):
        """{grading: dim} of the homology, by exact rank-nullity over GF(2)."""
        self.validate()
        index = {g: i for i, g in enumerate(self.generators)}
        dims = {0: 0, 1: 0}
        for g in self.generators:
            dims[self.grading[g] % 2] += 1
        # d flips the grading, so its matrix splits by source parity; each
        # rank kills one dimension at the source and one at the target
        rank_by_target = {0: 0, 1: 0}
        for parity in (0, 1):
            sub = []
            for x, targets in self.differential.items():
                if self.grading[x] % 2 != parity:
                    continue
                row = 0
                for y in targets:
                    row |= 1 << index[y]
                sub.append(row)
            rank_by_target[(parity + 1) % 2] = _f2_rank(sub)
        return {parity: dims[parity] - rank_by_target[parity]
                - rank_by_target[(parity + 1) % 2]
                for parity in (0, 1)}

    def euler(self):
        return sum(1 if self.grading[g] % 2 == 0 else -1
                   for g in self.generators)

    def to_json(self):
        return {"generators": [{"name": _name(g),
                                "grading": self.grading[g]}
                               for g in self.generators],
                "differential": [{"source": _name(x),
                                  "targets": sorted(_name(y) for y in t)}
                                 for x, t in sorted(
                                     self.differential.items(),
                                     key=lambda kv: _name(kv[0]))]}


def _name(g):
    return "*".join(g) if isinstance(g, tuple) else str(g)


def _f2_rank(rows):
    rank = 0
    basis = []
    for row in rows:
        for b in basis:
            row = min(row, row ^ b)
        if row:
            basis.append(row)
            basis.sort(reverse=True)
            rank += 1
    return rank


def complex_from_json(obj):
    try:
        gens = [g["name"] for g in obj["generators"]]
        grading = {g["name"]: int(g["grading"]) % 2 for g in obj["generators"]}
        diff = {d["source"]: frozenset(d["targets"])
                for d in obj.get("differential", ())}
    except (KeyError, TypeError, ValueError) as exc:
        raise SchemaViolation(f"bad complex JSON: {exc}") from exc
    unknown = set(diff) - set(gens)
    unknown |= {y for t in diff.values() for y in t} - set(gens)
    if unknown:
        raise SchemaViolation(f"differential mentions unknown generators {sorted(unknown)}")
    return F2ChainComplex(gens, grading, diff)


def complex_from_file(path):
    with open(path) as fh:
        return complex_from_json(json.load(fh))
