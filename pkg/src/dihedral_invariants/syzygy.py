"""Quadratic generators of the ideal of the GT-surface.

Variables w_(r,g) index the fundamental invariants. In the z-variables
(z_(2,0) = w_(2,0) + 2 w_(d,d), all others equal) the ideal is the toric
ideal of psi_d: z_(r,g) -> y0^(d(2-r)+(d-2)g) y1^g y2^(r-g), hence spanned in
degree 2 by binomials between pairs with equal (r1 + r2, g1 + g2).
"""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from itertools import combinations_with_replacement
from typing import NamedTuple

from .exactmath import ExactMatrix, rank
from .group import check_d
from .invariants import YMonomial, poly_add, poly_mul
from .monomial import ExponentVector

BINOMIAL = "binomial"
TRINOMIAL = "trinomial"


class WIndex(NamedTuple):
    r: int
    g: int

    def __str__(self):
        return f"({self.r},{self.g})"


def _ceil_div(a: int, b: int) -> int:
    return -((-a) // b)


def gamma_lower_bound(r: int, d: int) -> int:
    return max(0, _ceil_div((r - 2) * d, d - 2))


def w_index_set(d: int) -> list[WIndex]:
    check_d(d)
    return [WIndex(r, g)
            for r in range(2 * (d - 1) + 1)
            for g in range(gamma_lower_bound(r, d), r + 1)]


def special_index(d: int) -> WIndex:
    return WIndex(2, 0)


def phi_d(w, d: int) -> dict:
    """The fundamental invariant attached to w, as {ExponentVector: int}."""
    r, g = w
    if r == g:
        return {ExponentVector(2 * d - 2 * g, g, g): 1}
    a0 = (2 - r) * d + (d - 2) * g
    a1 = r * d - (d - 1) * g
    assert a0 >= 0 and a1 >= 0, (w, d)
    return {ExponentVector(a0, a1, g): 1, ExponentVector(a0, g, a1): 1}


def psi_d(z, d: int) -> YMonomial:
    r, g = z
    y = YMonomial(d * (2 - r) + (d - 2) * g, g, r - g)
    assert min(y) >= 0 and y.weighted_degree(d) == 2 * d, (z, d)
    return y


Pair = tuple  # (WIndex, WIndex) with first <= second


def _pair(p, q) -> Pair:
    p, q = WIndex(*p), WIndex(*q)
    return (p, q) if p <= q else (q, p)


@dataclass(frozen=True)
class QuadricRelation:
    """sum of coefficient * (product of a pair of variables)."""

    kind: str
    terms: tuple  # ((coefficient, (WIndex, WIndex)), ...)
    variables: str = "w"

    @classmethod
    def from_dict(cls, coeffs: dict, variables: str = "w") -> "QuadricRelation":
        terms = tuple((c, pair) for pair, c in coeffs.items() if c != 0)
        kind = {2: BINOMIAL, 3: TRINOMIAL}.get(len(terms), f"{len(terms)}-nomial")
        return cls(kind, terms, variables)

    def as_dict(self) -> dict:
        out = defaultdict(int)
        for c, pair in self.terms:
            out[_pair(*pair)] += c
        return {k: v for k, v in out.items() if v}

    def normalized(self) -> "QuadricRelation":
        """Terms sorted by pair, overall sign making the first coefficient positive."""
        items = sorted(self.as_dict().items())
        if items and items[0][1] < 0:
            items = [(p, -c) for p, c in items]
        return QuadricRelation.from_dict(dict(items), self.variables)

    def key(self):
        return tuple((p, c) for c, p in self.normalized().terms)

    def leading_pair(self):
        return min(self.as_dict())

    def to_text(self) -> str:
        parts = []
        for i, (c, (p, q)) in enumerate(self.terms):
            mon = f"{self.variables}{p}^2" if p == q else f"{self.variables}{p}*{self.variables}{q}"
            sign = "-" if c < 0 else "+"
            mag = "" if abs(c) == 1 else f"{abs(c)}*"
            parts.append(("" if sign == "+" else "-") + mag + mon if i == 0 else f" {sign} {mag}{mon}")
        return "".join(parts)

    def latex_cells(self) -> list[str]:
        cells = []
        for i, (c, (p, q)) in enumerate(self.terms):
            v = self.variables
            mon = f"{v}_{{({p.r},{p.g})}}^{{2}}" if p == q else \
                f"{v}_{{({p.r},{p.g})}}{v}_{{({q.r},{q.g})}}"
            mag = "" if abs(c) == 1 else str(abs(c))
            if i == 0:
                cells.append(("-" if c < 0 else "") + mag + mon)
            else:
                cells.extend(["-" if c < 0 else "+", mag + mon])
        return cells

    def to_json(self) -> dict:
        return {"kind": self.kind, "variables": self.variables,
                "terms": [{"coefficient": c, "pair": [list(p), list(q)]}
                          for c, (p, q) in self.terms]}

    @classmethod
    def from_json(cls, obj) -> "QuadricRelation":
        terms = tuple((t["coefficient"], (WIndex(*t["pair"][0]), WIndex(*t["pair"][1])))
                      for t in obj["terms"])
        return cls(obj["kind"], terms, obj.get("variables", "w"))


def all_pairs(d: int) -> list[Pair]:
    return list(combinations_with_replacement(w_index_set(d), 2))


def collision_classes(d: int) -> dict:
    """Pairs of z-variables grouped by their psi_d image, i.e. by (r1 + r2, g1 + g2)."""
    classes = defaultdict(list)
    for p, q in all_pairs(d):
        classes[(p.r + q.r, p.g + q.g)].append((p, q))
    return dict(classes)


def kernel_quadrics(d: int, all_differences: bool = False) -> list[QuadricRelation]:
    """Binomial quadrics spanning the degree-2 part of ker(psi_d), in z-variables.

    Within each class the lexicographically smallest pair is the hub and every
    other pair is joined to it; with ``all_differences`` every pair of pairs is
    emitted instead (a spanning but redundant set).
    """
    rels = []
    for key in sorted(collision_classes(d)):
        members = sorted(collision_classes(d)[key])
        if all_differences:
            diffs = [(members[i], members[j]) for i in range(len(members))
                     for j in range(i + 1, len(members))]
        else:
            diffs = [(members[0], other) for other in members[1:]]
        for hub, other in diffs:
            rels.append(QuadricRelation.from_dict({hub: 1, other: -1}, "z"))
    return rels


def substitute_z(rel: QuadricRelation, d: int) -> QuadricRelation:
    """Rewrite a z-relation in w-variables via z_(2,0) = w_(2,0) + 2 w_(d,d)."""
    special = special_index(d)
    top = WIndex(d, d)

    def image(v):
        return {special: 1, top: 2} if v == special else {WIndex(*v): 1}

    out = defaultdict(int)
    for c, (p, q) in rel.terms:
        for u, cu in image(p).items():
            for v, cv in image(q).items():
                out[_pair(u, v)] += c * cu * cv
    return QuadricRelation.from_dict({k: out[k] for k in sorted(out)}, "w")


def surface_generators(d: int) -> list[QuadricRelation]:
    """Minimal quadric generators of the surface ideal, in w-variables."""
    rels = [substitute_z(rel, d) for rel in kernel_quadrics(d)]
    return sorted(rels, key=lambda rel: (rel.kind != BINOMIAL, sorted(rel.as_dict())))


def _evaluate(rel: QuadricRelation, image, mul, add):
    total = {}
    for c, (p, q) in rel.terms:
        total = add(total, mul(image(p), image(q)), c)
    return total


def verify_relation(rel: QuadricRelation, d: int) -> bool:
    """Does the relation vanish after substituting the invariants (w) or psi_d (z)?"""
    if rel.variables == "w":
        total = _evaluate(rel, lambda v: phi_d(v, d), poly_mul, poly_add)
    else:
        def y_image(v):
            return {psi_d(v, d): 1}

        def y_mul(f, g):
            out = {}
            for m1, c1 in f.items():
                for m2, c2 in g.items():
                    m = m1 * m2
                    out[m] = out.get(m, 0) + c1 * c2
            return out

        total = _evaluate(rel, y_image, y_mul, poly_add)
    return not total


def coefficient_rows(rels, d: int):
    """Coefficient vectors of relations in the basis of degree-2 monomials."""
    index = {pair: i for i, pair in enumerate(all_pairs(d))}
    rows = []
    for rel in rels:
        row = [0] * len(index)
        for pair, c in rel.as_dict().items():
            row[index[pair]] = c
        rows.append(row)
    return rows


def span_rank(rels, d: int) -> int:
    rows = coefficient_rows(rels, d)
    if not rows:
        return 0
    return rank(ExactMatrix.from_rows(rows))


def degree2_kernel_dimension(d: int) -> int:
    """dim S'_2 - number of distinct psi_d images of degree-2 monomials."""
    return len(all_pairs(d)) - len(collision_classes(d))


def quadric_count_formula(d: int) -> int:
    if d % 2 == 0:
        return (9 * d * d + 2 * d + 8) // 8
    return (9 * d * d - 4 * d + 3) // 8


def redundant_generating_set(d: int) -> list[QuadricRelation]:
    """The redundant generating families: all compatible binomials avoiding w_(2,0),
    and the trinomials (w_(2,0) + 2 w_(d,d)) w_(g,g) - w_(r2,g2) w_(r3,g3)."""
    special = special_index(d)
    idx = set(w_index_set(d))
    pairs = [pq for pq in all_pairs(d) if special not in pq]
    by_key = defaultdict(list)
    for p, q in pairs:
        by_key[(p.r + q.r, p.g + q.g)].append((p, q))
    rels = []
    for key in sorted(by_key):
        members = by_key[key]
        for i in range(len(members)):
            for j in range(i + 1, len(members)):
                rels.append(QuadricRelation.from_dict({members[i]: 1, members[j]: -1}, "w"))
    top = WIndex(d, d)
    for g1 in range(0, d + 1):
        diag = WIndex(g1, g1)
        if diag not in idx:
            continue
        for p, q in pairs:
            if p.r + q.r == g1 + 2 and p.g + q.g == g1:
                coeffs = defaultdict(int)
                coeffs[_pair(special, diag)] += 1
                coeffs[_pair(top, diag)] += 2
                coeffs[(p, q)] -= 1
                rels.append(QuadricRelation.from_dict(dict(coeffs), "w"))
    return rels


def relations_latex(rels) -> str:
    """Binomials in a two-column array, trinomials below, in aligned columns."""
    binomials = [r for r in rels if r.kind == BINOMIAL]
    others = [r for r in rels if r.kind != BINOMIAL]
    lines = []
    if binomials:
        half = (len(binomials) + 1) // 2
        left, right = binomials[:half], binomials[half:]
        lines.append(r"$$\begin{array}{lcllllcl}")
        for i in range(half):
            row = " & ".join(left[i].latex_cells())
            if i < len(right):
                row += r" & \quad \quad \quad & " + " & ".join(right[i].latex_cells())
            else:
                row += r" & \quad \quad \quad & "
            lines.append(row + r"\\")
        lines.append(r"\end{array}$$")
    if others:
        width = max(len(r.latex_cells()) for r in others)
        lines.append(r"$$\begin{array}{" + "l" + "cl" * ((width - 1) // 2) + "}")
        for rel in others:
            lines.append(" & ".join(rel.latex_cells()) + r"\\")
        lines.append(r"\end{array}$$")
    return "\n".join(lines)
