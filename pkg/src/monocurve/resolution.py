"""Pfaffian presentation data for Gorenstein non-CI sequences.

The presentation is a 5x5 skew-symmetric matrix of signed monomials phi, a
5-vector of binomials delta, the twist of the last free module and the socle
degree. Polynomials are multisets of signed exponent vectors with unit
coefficients, multiplied and cancelled exactly, so every verification here is
an exact symbolic identity.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import InternalCheckError, NotBinomialError, NotCoprimeError
from .gorenstein import (
    KIND_U,
    KIND_V,
    BresinskyForm,
    translation_vector_u,
    translation_vector_v,
)

Exponents = tuple[int, int, int, int]
PhiEntry = tuple[int, Exponents]  # (sign in {-1, 0, +1}, exponent vector)

_ZERO: Exponents = (0, 0, 0, 0)
_ZERO_BLOCKS = ((0, 1), (1, 0), (2, 3), (3, 2))


@dataclass(frozen=True)
class Monomial:
    exponents: Exponents

    def weighted_degree(self, weights) -> int:
        return sum(e * w for e, w in zip(self.exponents, weights))


@dataclass(frozen=True)
class Binomial:
    """plus - minus, both monomials with unit coefficient."""

    plus: Monomial
    minus: Monomial

    def weighted_homogeneous(self, weights) -> bool:
        return self.plus.weighted_degree(weights) == self.minus.weighted_degree(weights)


@dataclass(frozen=True)
class SkewPresentation:
    sequence: tuple[int, int, int, int]
    phi: tuple[tuple[PhiEntry, ...], ...]
    delta: tuple[Binomial, ...]
    last_twist: int
    socle_degree: int

    def __post_init__(self):
        if len(self.phi) != 5 or any(len(row) != 5 for row in self.phi):
            raise ValueError("phi must be 5x5")
        if len(self.delta) != 5:
            raise ValueError("delta must have 5 entries")
        for i in range(5):
            if self.phi[i][i][0] != 0:
                raise ValueError("phi diagonal must vanish")
            for j in range(5):
                si, ei = self.phi[i][j]
                sj, ej = self.phi[j][i]
                if si != -sj or (si != 0 and ei != ej):
                    raise ValueError("phi is not skew-symmetric")
        for i, j in _ZERO_BLOCKS:
            if self.phi[i][j][0] != 0:
                raise ValueError(f"phi[{i}][{j}] must vanish")
        if self.socle_degree != self.last_twist - 3:
            raise ValueError("socle degree must be last twist minus 3")


def _unit(var: int, power: int) -> Exponents:
    e = [0, 0, 0, 0]
    e[var] = power
    return tuple(e)


def _assemble(sequence, c, d) -> SkewPresentation:
    """Build the presentation from an arrangement and its form values."""
    c1, c2, c3, c4 = c
    upper = {
        (0, 2): _unit(1, d["d32"]),
        (0, 3): _unit(2, d["d43"]),
        (0, 4): _unit(3, d["d24"]),
        (1, 2): _unit(0, d["d21"]),
        (1, 3): _unit(3, d["d14"]),
        (1, 4): _unit(1, d["d42"]),
        (2, 4): _unit(2, d["d13"]),
        (3, 4): _unit(0, d["d31"]),
    }
    phi = [[(0, _ZERO)] * 5 for _ in range(5)]
    for (i, j), exps in upper.items():
        phi[i][j] = (1, exps)
        phi[j][i] = (-1, exps)
    delta = (
        Binomial(Monomial(_unit(0, c1)),
                 Monomial((0, 0, d["d13"], d["d14"]))),
        Binomial(Monomial(_unit(2, c3)),
                 Monomial((d["d31"], d["d32"], 0, 0))),
        Binomial(Monomial(_unit(3, c4)),
                 Monomial((0, d["d42"], d["d43"], 0))),
        Binomial(Monomial(_unit(1, c2)),
                 Monomial((d["d21"], 0, 0, d["d24"]))),
        Binomial(Monomial((d["d21"], 0, d["d43"], 0)),
                 Monomial((0, d["d32"], 0, d["d14"]))),
    )
    a1, a2, a3, a4 = sequence
    last_twist = a1 * c1 + a4 * c4 + a2 * d["d32"]
    return SkewPresentation(
        sequence=tuple(sequence),
        phi=tuple(tuple(row) for row in phi),
        delta=delta,
        last_twist=last_twist,
        socle_degree=last_twist - 3,
    )


def build_presentation(s, f: BresinskyForm) -> SkewPresentation:
    """Presentation of s from its detected form, in the form's arrangement."""
    return _assemble(f.permuted(s), f.c, f.d_values())


def pfaffian(phi, i: int) -> Binomial:
    """Pfaffian of phi with row and column i removed (i 0-based).

    For form-shaped phi exactly one of the three pfaffian terms vanishes
    structurally; anything else raises NotBinomialError.
    """
    if not 0 <= i < 5:
        raise IndexError("pfaffian index out of range")
    keep = [k for k in range(5) if k != i]
    pairs = (
        ((0, 1), (2, 3), 1),
        ((0, 2), (1, 3), -1),
        ((0, 3), (1, 2), 1),
    )
    terms = []
    for (p, q), (r, t), coef in pairs:
        s1, e1 = phi[keep[p]][keep[q]]
        s2, e2 = phi[keep[r]][keep[t]]
        if s1 == 0 or s2 == 0:
            continue
        sign = coef * s1 * s2
        exps = tuple(a + b for a, b in zip(e1, e2))
        terms.append((sign, exps))
    if len(terms) != 2 or terms[0][0] == terms[1][0]:
        raise NotBinomialError(
            f"pfaffian {i} has {len(terms)} surviving terms, not a binomial"
        )
    plus = next(e for sgn, e in terms if sgn > 0)
    minus = next(e for sgn, e in terms if sgn < 0)
    return Binomial(Monomial(plus), Monomial(minus))


def _poly(binomial: Binomial) -> dict[Exponents, int]:
    poly: dict[Exponents, int] = {}
    for sign, mono in ((1, binomial.plus), (-1, binomial.minus)):
        poly[mono.exponents] = poly.get(mono.exponents, 0) + sign
    return {e: c for e, c in poly.items() if c}


def _add_product(acc, poly, sign, exps):
    for e, coef in poly.items():
        key = tuple(a + b for a, b in zip(e, exps))
        acc[key] = acc.get(key, 0) + coef * sign
        if acc[key] == 0:
            del acc[key]


def verify_complexes(p: SkewPresentation) -> bool:
    """delta . phi = 0 and phi . delta^T = 0 as exact polynomial identities."""
    polys = [_poly(b) for b in p.delta]
    for j in range(5):
        acc: dict[Exponents, int] = {}
        for i in range(5):
            sign, exps = p.phi[i][j]
            if sign:
                _add_product(acc, polys[i], sign, exps)
        if acc:
            return False
    for i in range(5):
        acc = {}
        for j in range(5):
            sign, exps = p.phi[i][j]
            if sign:
                _add_product(acc, polys[j], sign, exps)
        if acc:
            return False
    return True


def verify_homogeneity(p: SkewPresentation) -> bool:
    """Every delta entry is weighted-homogeneous and its degree matches the
    principal relation value read back from phi."""
    b = p.sequence
    if any(not entry.weighted_homogeneous(b) for entry in p.delta):
        return False
    d32 = p.phi[0][2][1][1]
    d43 = p.phi[0][3][1][2]
    d24 = p.phi[0][4][1][3]
    d21 = p.phi[1][2][1][0]
    d14 = p.phi[1][3][1][3]
    d42 = p.phi[1][4][1][1]
    d13 = p.phi[2][4][1][2]
    d31 = p.phi[3][4][1][0]
    expected = (
        (d21 + d31) * b[0],
        (d13 + d43) * b[2],
        (d14 + d24) * b[3],
        (d32 + d42) * b[1],
        d21 * b[0] + d43 * b[2],
    )
    return all(
        entry.plus.weighted_degree(b) == want
        for entry, want in zip(p.delta, expected)
    )


def _translated_values(f: BresinskyForm, kind: str, t: int):
    c1, c2, c3, c4 = f.c
    d = f.d_values()
    if kind == KIND_U:
        direction = translation_vector_u(f)
        c = (c1 + t, c2, c3 + t, c4)
        d = dict(d, d13=d["d13"] + t, d31=d["d31"] + t)
    elif kind == KIND_V:
        direction = translation_vector_v(f)
        c = (c1, c2 + t, c3, c4 + t)
        d = dict(d, d24=d["d24"] + t, d42=d["d42"] + t)
    else:
        raise ValueError(f"unknown translation kind {kind!r}")
    return direction, c, d


def translated_presentation(s, f: BresinskyForm, kind: str, t: int) -> SkewPresentation:
    """Presentation of s + t*direction, revalidated against the new sequence."""
    if t < 0:
        raise ValueError("t must be non-negative")
    direction, c, d = _translated_values(f, kind, t)
    base = f.permuted(s)
    moved = tuple(a + t * u for a, u in zip(base, direction))
    g = math.gcd(*moved)
    if g != 1:
        raise NotCoprimeError(g, f"translated sequence {moved} has gcd {g}")
    p = _assemble(moved, c, d)
    if not verify_complexes(p):
        raise InternalCheckError("translated presentation is not a complex")
    if not verify_homogeneity(p):
        raise InternalCheckError("translated presentation is not homogeneous")
    return p


def socle_increment(f: BresinskyForm, base, kind: str, t: int) -> int:
    """Socle-degree increase of the t-translated presentation over the base."""
    if t < 0:
        raise ValueError("t must be non-negative")
    b = f.permuted(base)
    c1, _, _, c4 = f.c
    d32 = f.d32
    if kind == KIND_U:
        u = translation_vector_u(f)
        return t * t * u[0] + t * (u[0] * c1 + u[1] * d32 + u[3] * c4 + b[0])
    if kind == KIND_V:
        v = translation_vector_v(f)
        return t * t * v[3] + t * (v[0] * c1 + v[1] * d32 + v[3] * c4 + b[3])
    raise ValueError(f"unknown translation kind {kind!r}")


def presentation_to_dict(p: SkewPresentation) -> dict:
    return {
        "sequence": list(p.sequence),
        "phi": [
            [{"sign": sign, "exponents": list(exps)} for sign, exps in row]
            for row in p.phi
        ],
        "delta": [
            {"plus": list(b.plus.exponents), "minus": list(b.minus.exponents)}
            for b in p.delta
        ],
        "last_twist": p.last_twist,
        "socle_degree": p.socle_degree,
    }


def presentation_from_dict(data: dict) -> SkewPresentation:
    phi = tuple(
        tuple((entry["sign"], tuple(entry["exponents"])) for entry in row)
        for row in data["phi"]
    )
    delta = tuple(
        Binomial(Monomial(tuple(b["plus"])), Monomial(tuple(b["minus"])))
        for b in data["delta"]
    )
    return SkewPresentation(
        sequence=tuple(data["sequence"]),
        phi=phi,
        delta=delta,
        last_twist=data["last_twist"],
        socle_degree=data["socle_degree"],
    )
