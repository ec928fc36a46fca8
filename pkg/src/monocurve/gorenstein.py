"""Four-generator machinery: Bresinsky forms, classification, translation families.

A Bresinsky form is the shape a principal matrix of a Gorenstein
non-complete-intersection 4-sequence can always be brought into: zeros at
positions (1,2), (2,3), (3,4), (4,1), diagonal -c_i with c_i >= 2, the eight
remaining entries d_ij strictly positive, and every column summing to zero.
The detector searches all generator permutations and all representations of
the minimal relations for that shape; the certifier goes the other way and
recovers a certified sequence from any matrix of that shape. Classification is
cross-checked internally against the symmetry test so the two routes can never
silently disagree.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field

from .errors import (
    IdentityAssertionError,
    InconsistentClassificationError,
    InternalCheckError,
    NotApplicableError,
    NotCoprimeAdjointError,
    PreconditionError,
    WrongShapeError,
    ZeroOrNegativeEntryError,
    ZeroVectorError,
)
from .semigroup import (
    Sequence,
    all_representations,
    closure_bits,
    multiplier_order,
    normalized_kernel_column,
    profile,
)

COMPLETE_INTERSECTION = "CompleteIntersection"
GORENSTEIN_NON_CI = "GorensteinNonCI"
NON_GORENSTEIN = "NonGorenstein"
SKIPPED = "Skipped"

KIND_U = "u"
KIND_V = "v"
KIND_DIAGONAL = "diagonal"

# zero positions of the form, 0-based (row, column)
_ZERO_AT = (1, 2, 3, 0)


@dataclass(frozen=True)
class BresinskyForm:
    """The c_i / d_ij data of a form-shaped principal matrix plus the permutation
    of the original generators under which the relations take this shape."""

    c: tuple[int, int, int, int]
    d13: int
    d14: int
    d21: int
    d24: int
    d31: int
    d32: int
    d42: int
    d43: int
    perm: tuple[int, int, int, int] = (0, 1, 2, 3)

    def __post_init__(self):
        if any(ci < 2 for ci in self.c):
            raise WrongShapeError("every diagonal entry must be at most -2")
        if any(d <= 0 for d in self.d_values().values()):
            raise WrongShapeError("every d entry must be strictly positive")
        for j, total in enumerate(
            (self.d21 + self.d31 - self.c[0],
             self.d32 + self.d42 - self.c[1],
             self.d13 + self.d43 - self.c[2],
             self.d14 + self.d24 - self.c[3])
        ):
            if total != 0:
                raise WrongShapeError(f"column {j} does not sum to zero")

    def matrix(self) -> list[list[int]]:
        c1, c2, c3, c4 = self.c
        return [
            [-c1, 0, self.d13, self.d14],
            [self.d21, -c2, 0, self.d24],
            [self.d31, self.d32, -c3, 0],
            [0, self.d42, self.d43, -c4],
        ]

    def d_values(self) -> dict[str, int]:
        return {
            "d13": self.d13, "d14": self.d14, "d21": self.d21, "d24": self.d24,
            "d31": self.d31, "d32": self.d32, "d42": self.d42, "d43": self.d43,
        }

    def permuted(self, s) -> tuple[int, ...]:
        entries = tuple(s)
        return tuple(entries[p] for p in self.perm)


@dataclass(frozen=True)
class Classification:
    kind: str
    form: BresinskyForm | None = None


@dataclass(frozen=True)
class Certificate:
    t: int
    sequence: tuple[int, ...]
    gcd: int
    coprime: bool
    classification: str  # SKIPPED when not coprime


@dataclass(frozen=True)
class Finding:
    """A coprime family member that failed to classify GorensteinNonCI."""

    t: int
    sequence: tuple[int, ...]
    classification: str


@dataclass(frozen=True)
class TranslationFamily:
    base: Sequence
    kind: str
    direction: tuple[int, int, int, int]
    certificates: tuple[Certificate, ...]
    findings: tuple[Finding, ...] = field(default=())


@dataclass(frozen=True)
class ScanRow:
    t: int
    sequence: tuple[int, ...]
    gcd: int
    classification: str


@dataclass(frozen=True)
class PeriodData:
    """Output of the homogeneous-rows period construction."""

    b: int
    d: int
    q: int
    beta: int
    alpha: int
    period: int


def _det3(m, r, c):
    """3x3 determinant of rows r, columns c of a 4x4 matrix."""
    (i, j, k), (p, q, s) = r, c
    return (
        m[i][p] * (m[j][q] * m[k][s] - m[j][s] * m[k][q])
        - m[i][q] * (m[j][p] * m[k][s] - m[j][s] * m[k][p])
        + m[i][s] * (m[j][p] * m[k][q] - m[j][q] * m[k][p])
    )


def _adj_first_col4(m) -> list[int]:
    rows = (1, 2, 3)
    cols = [(1, 2, 3), (0, 2, 3), (0, 1, 3), (0, 1, 2)]
    return [(-1) ** i * _det3(m, rows, cols[i]) for i in range(4)]


def _member(gens, value: int) -> bool:
    if value == 0:
        return True
    return (closure_bits(gens, value) >> value) & 1 == 1


def _gluing_ci(gens: tuple[int, ...]) -> bool:
    n = len(gens)
    if n == 1:
        return True
    for mask in range(1 << (n - 1)):  # proper subsets containing position 0
        bm = mask << 1 | 1
        part_a = tuple(gens[i] for i in range(n) if bm >> i & 1)
        part_b = tuple(gens[i] for i in range(n) if not bm >> i & 1)
        if not part_b:
            continue
        da = math.gcd(*part_a) if len(part_a) > 1 else part_a[0]
        db = math.gcd(*part_b) if len(part_b) > 1 else part_b[0]
        if math.gcd(da, db) != 1:
            continue
        norm_a = tuple(v // da for v in part_a)
        norm_b = tuple(v // db for v in part_b)
        if not _member(norm_b, da) or not _member(norm_a, db):
            continue
        if _gluing_ci(norm_a) and _gluing_ci(norm_b):
            return True
    return False


def is_complete_intersection(s) -> bool:
    """Delorme-style gluing recursion over all splits of the generator list."""
    return _gluing_ci(tuple(s))


def _relation_data(entries: tuple[int, ...]):
    """(r_i, all representations as coefficient 4-vectors) per generator,
    or None as an early exit when some r_i < 2 (no form can exist)."""
    rs = []
    reps = []
    for i in range(4):
        others = entries[:i] + entries[i + 1:]
        r = multiplier_order(entries[i], others)
        if r < 2:
            return None
        rs.append(r)
        vecs = []
        for rep in all_representations(r * entries[i], others):
            vec = list(rep[:i]) + [0] + list(rep[i:])
            vecs.append(vec)
        reps.append(vecs)
    return rs, reps


def detect_bresinsky_form(s) -> BresinskyForm | None:
    """Search all 24 permutations and all minimal-relation representations for
    the form shape; first hit in a fixed deterministic order, else None.

    A candidate is accepted only if the first adjugate column of the assembled
    matrix recovers the (permuted) sequence itself, which certifies the rows
    as principal relations of a Gorenstein non-CI curve.
    """
    entries = tuple(s)
    if len(entries) != 4:
        raise ValueError("form detection needs exactly 4 generators")
    data = _relation_data(entries)
    if data is None:
        return None
    rs, reps = data
    for perm in itertools.permutations(range(4)):
        b = [entries[p] for p in perm]
        c = [rs[p] for p in perm]
        cands = []
        feasible = True
        for k in range(4):
            z = perm[_ZERO_AT[k]]
            p1, p2 = (perm[j] for j in range(4) if j != k and j != _ZERO_AT[k])
            rows = [
                (vec[p1], vec[p2])
                for vec in reps[perm[k]]
                if vec[z] == 0 and vec[p1] > 0 and vec[p2] > 0
            ]
            if not rows:
                feasible = False
                break
            cands.append(rows)
        if not feasible:
            continue
        row1_by_d24: dict[int, list[int]] = {}
        for d21, d24 in cands[1]:
            row1_by_d24.setdefault(d24, []).append(d21)
        row2_by_d31: dict[int, list[int]] = {}
        for d31, d32 in cands[2]:
            row2_by_d31.setdefault(d31, []).append(d32)
        row3_set = set(cands[3])
        for d13, d14 in cands[0]:
            d43 = c[2] - d13
            d24 = c[3] - d14
            if d43 <= 0 or d24 <= 0:
                continue
            for d21 in row1_by_d24.get(d24, ()):
                d31 = c[0] - d21
                if d31 <= 0:
                    continue
                for d32 in row2_by_d31.get(d31, ()):
                    d42 = c[1] - d32
                    if d42 <= 0 or (d42, d43) not in row3_set:
                        continue
                    matrix = [
                        [-c[0], 0, d13, d14],
                        [d21, -c[1], 0, d24],
                        [d31, d32, -c[2], 0],
                        [0, d42, d43, -c[3]],
                    ]
                    col = _adj_first_col4(matrix)
                    if all(v < 0 for v in col):
                        col = [-v for v in col]
                    if col == b:
                        return BresinskyForm(
                            c=tuple(c), d13=d13, d14=d14, d21=d21, d24=d24,
                            d31=d31, d32=d32, d42=d42, d43=d43, perm=perm,
                        )
    return None


def certify_bresinsky_matrix(matrix) -> Sequence:
    """Check the form shape of a 4x4 matrix and recover its certified sequence.

    Shape violations raise WrongShapeError; a non-coprime adjugate column
    raises NotCoprimeAdjointError carrying the gcd. A returned Sequence is
    certified Gorenstein non-complete-intersection.
    """
    rows = [list(r) for r in matrix]
    if len(rows) != 4 or any(len(r) != 4 for r in rows):
        raise WrongShapeError("matrix must be 4x4")
    for i in range(4):
        if rows[i][i] > -2:
            raise WrongShapeError(f"diagonal entry ({i},{i}) must be <= -2")
        z = _ZERO_AT[i]
        if rows[i][z] != 0:
            raise WrongShapeError(f"position ({i},{z}) must be zero")
        for j in range(4):
            if j not in (i, z) and rows[i][j] <= 0:
                raise WrongShapeError(f"position ({i},{j}) must be positive")
    for j in range(4):
        if sum(rows[i][j] for i in range(4)) != 0:
            raise WrongShapeError(f"column {j} does not sum to zero")
    col = normalized_kernel_column(rows)
    g = math.gcd(*col)
    if g != 1:
        raise NotCoprimeAdjointError(g)
    return Sequence(tuple(col))


def _minor_vector(rows3: list[list[int]]) -> tuple[int, ...]:
    """Alternating 3x3-minor vector of a 3x4 matrix, sign-normalized to >= 0."""
    out = []
    for k in range(4):
        cols = [j for j in range(4) if j != k]
        sub = [[row[j] for j in cols] for row in rows3]
        d = (
            sub[0][0] * (sub[1][1] * sub[2][2] - sub[1][2] * sub[2][1])
            - sub[0][1] * (sub[1][0] * sub[2][2] - sub[1][2] * sub[2][0])
            + sub[0][2] * (sub[1][0] * sub[2][1] - sub[1][1] * sub[2][0])
        )
        out.append((-1) ** k * d)
    if all(v == 0 for v in out):
        raise ZeroVectorError("all minors of the translation matrix vanish")
    if any(v > 0 for v in out) and any(v < 0 for v in out):
        raise InternalCheckError("translation vector has mixed signs")
    if out[0] < 0 or (out[0] == 0 and any(v < 0 for v in out)):
        out = [-v for v in out]
    return tuple(out)


def translation_vector_u(f: BresinskyForm) -> tuple[int, ...]:
    """Direction vector u: kernel of rows 2, (1,0,-1,0), 4 of the form."""
    c1, c2, c3, c4 = f.c
    u = _minor_vector([
        [f.d21, -c2, 0, f.d24],
        [1, 0, -1, 0],
        [0, f.d42, f.d43, -c4],
    ])
    if u[0] != u[2]:
        raise InternalCheckError("u_1 != u_3 for a valid form")
    return u


def translation_vector_v(f: BresinskyForm) -> tuple[int, ...]:
    """Direction vector v: kernel of rows 1, (0,-1,0,1), 3 of the form."""
    c1, c2, c3, c4 = f.c
    v = _minor_vector([
        [-c1, 0, f.d13, f.d14],
        [0, -1, 0, 1],
        [f.d31, f.d32, -c3, 0],
    ])
    if v[1] != v[3]:
        raise InternalCheckError("v_2 != v_4 for a valid form")
    return v


def family_matrix_A(f: BresinskyForm, t: int) -> list[list[int]]:
    """Form matrix translated along u: c1, d13, d31, c3 each grow by t."""
    if t < 0:
        raise ValueError("t must be non-negative")
    c1, c2, c3, c4 = f.c
    return [
        [-(c1 + t), 0, f.d13 + t, f.d14],
        [f.d21, -c2, 0, f.d24],
        [f.d31 + t, f.d32, -(c3 + t), 0],
        [0, f.d42, f.d43, -c4],
    ]


def family_matrix_B(f: BresinskyForm, t: int) -> list[list[int]]:
    """Form matrix translated along v: c2, d24, d42, c4 each grow by t."""
    if t < 0:
        raise ValueError("t must be non-negative")
    c1, c2, c3, c4 = f.c
    return [
        [-c1, 0, f.d13, f.d14],
        [f.d21, -(c2 + t), 0, f.d24 + t],
        [f.d31, f.d32, -c3, 0],
        [0, f.d42 + t, f.d43, -(c4 + t)],
    ]


def classify(s) -> Classification:
    """Three-way classification with an internal detector/symmetry cross-check."""
    seq = s if isinstance(s, Sequence) else Sequence(tuple(s))
    if len(seq) != 4:
        raise ValueError("classification needs exactly 4 generators")
    if is_complete_intersection(seq):
        return Classification(kind=COMPLETE_INTERSECTION)
    form = detect_bresinsky_form(seq)
    symmetric = profile(seq).symmetric
    if (form is not None) != symmetric:
        raise InconsistentClassificationError(
            f"form detector and symmetry test disagree on {tuple(seq)}: "
            f"form={'found' if form else 'none'}, symmetric={symmetric}"
        )
    if form is not None:
        return Classification(kind=GORENSTEIN_NON_CI, form=form)
    return Classification(kind=NON_GORENSTEIN)


def direction_to_original(perm, vec) -> tuple[int, ...]:
    """Map a direction given in form coordinates back to the original order."""
    out = [0, 0, 0, 0]
    for k, p in enumerate(perm):
        out[p] = vec[k]
    return tuple(out)


def rotate_form(f: BresinskyForm, k: int) -> BresinskyForm:
    """Cyclically shift the form arrangement; the zero pattern is invariant."""
    k %= 4
    if k == 0:
        return f
    m = f.matrix()
    rm = [[m[(i + k) % 4][(j + k) % 4] for j in range(4)] for i in range(4)]
    return BresinskyForm(
        c=tuple(-rm[i][i] for i in range(4)),
        d13=rm[0][2], d14=rm[0][3], d21=rm[1][0], d24=rm[1][3],
        d31=rm[2][0], d32=rm[2][1], d42=rm[3][1], d43=rm[3][2],
        perm=tuple(f.perm[(i + k) % 4] for i in range(4)),
    )


def homogeneous_rows_period(s) -> PeriodData:
    """Period of the all-ones translation family when rows 2 and 4 of the form
    (arranged with the smallest generator first) sum to zero.

    Raises NotApplicableError when the row sums are nonzero, PreconditionError
    when the sequence is not Gorenstein non-CI, and IdentityAssertionError when
    one of the guaranteed identities fails (a bug signal, never expected).
    """
    seq = s if isinstance(s, Sequence) else Sequence(tuple(s))
    cls = classify(seq)
    if cls.kind != GORENSTEIN_NON_CI:
        raise PreconditionError(
            f"sequence {tuple(seq)} classifies {cls.kind}, not {GORENSTEIN_NON_CI}"
        )
    form = cls.form
    b = list(form.permuted(seq))
    form = rotate_form(form, b.index(min(b)))
    b = list(form.permuted(seq))
    c1, c2, c3, c4 = form.c
    if c2 != form.d21 + form.d24 or c4 != form.d42 + form.d43:
        raise NotApplicableError(
            "rows 2 and 4 of the form do not both sum to zero"
        )
    a0 = b[0]
    x, y, z = b[1] - a0, b[2] - a0, b[3] - a0
    if c2 * x != form.d24 * z:
        raise IdentityAssertionError("c2*x != d24*z")
    if form.d42 * x + form.d43 * y != c4 * z:
        raise IdentityAssertionError("d42*x + d43*y != c4*z")
    if not (x < z < y):
        raise IdentityAssertionError(f"expected x < z < y, got {(x, z, y)}")
    b_const = form.d21 * c4 + form.d24 * form.d43
    d = math.gcd(x, z)
    if (c2 * d) % z or (form.d24 * d) % x:
        raise IdentityAssertionError("c2, d24 are not proportional to z/d, x/d")
    q = c2 * d // z
    if form.d24 != q * x // d:
        raise IdentityAssertionError("d24 != q*x/d")
    beta = y // math.gcd(b_const, y)
    alpha = beta * b_const // y
    if beta > d:
        raise IdentityAssertionError(f"beta={beta} exceeds d={d}")
    if translation_vector_u(form) != (b_const,) * 4:
        raise IdentityAssertionError("u is not b*(1,1,1,1)")
    return PeriodData(b=b_const, d=d, q=q, beta=beta, alpha=alpha, period=alpha * y)


def generate_family(s, kind: str, t_max: int) -> TranslationFamily:
    """Record the translated sequences s + t*direction for t = 0..t_max.

    Non-coprime members are recorded as skipped; any coprime member that does
    not classify Gorenstein non-CI becomes a Finding (reported, not raised).
    """
    seq = s if isinstance(s, Sequence) else Sequence(tuple(s))
    if t_max < 0:
        raise ValueError("t_max must be non-negative")
    cls = classify(seq)
    if cls.kind != GORENSTEIN_NON_CI:
        raise PreconditionError(
            f"family base {tuple(seq)} classifies {cls.kind}, not {GORENSTEIN_NON_CI}"
        )
    form = cls.form
    if kind == KIND_U:
        direction = direction_to_original(form.perm, translation_vector_u(form))
    elif kind == KIND_V:
        direction = direction_to_original(form.perm, translation_vector_v(form))
    elif kind == KIND_DIAGONAL:
        direction = (homogeneous_rows_period(seq).period,) * 4
    else:
        raise ValueError(f"unknown family kind {kind!r}")
    certificates = []
    findings = []
    for t in range(t_max + 1):
        raw = tuple(a + t * u for a, u in zip(seq, direction))
        g = math.gcd(*raw)
        if g != 1:
            certificates.append(Certificate(
                t=t, sequence=raw, gcd=g, coprime=False, classification=SKIPPED
            ))
            continue
        kind_t = classify(Sequence(raw)).kind
        certificates.append(Certificate(
            t=t, sequence=raw, gcd=1, coprime=True, classification=kind_t
        ))
        if kind_t != GORENSTEIN_NON_CI:
            findings.append(Finding(t=t, sequence=raw, classification=kind_t))
    return TranslationFamily(
        base=seq, kind=kind, direction=direction,
        certificates=tuple(certificates), findings=tuple(findings),
    )


def _classify_normalized(raw: tuple[int, ...]) -> tuple[int, str]:
    g = math.gcd(*raw)
    kind = classify(Sequence(tuple(v // g for v in raw))).kind
    return g, kind


def _scan_worker(args):
    t, raw = args
    g, kind = _classify_normalized(raw)
    return ScanRow(t=t, sequence=raw, gcd=g, classification=kind)


def scan_translations(s, step, t_start: int, t_end: int, workers: int = 1):
    """Classify s + t*step for every t in [t_start, t_end].

    Translates with a common factor are normalized by their gcd before
    classification (the scaled sequence defines the same curve); the gcd is
    recorded on the row. Output order is ascending t regardless of workers.
    """
    seq = s if isinstance(s, Sequence) else Sequence(tuple(s))
    step = tuple(step)
    if len(step) != 4 or len(seq) != 4:
        raise ValueError("scan needs a 4-sequence and a 4-vector step")
    if t_end < t_start:
        raise ValueError("empty scan range")
    jobs = []
    for t in range(t_start, t_end + 1):
        raw = tuple(a + t * d for a, d in zip(seq, step))
        if any(v <= 0 for v in raw):
            raise ZeroOrNegativeEntryError(
                f"translated sequence at t={t} has a non-positive entry"
            )
        jobs.append((t, raw))
    if workers > 1 and len(jobs) > 1:
        import multiprocessing

        with multiprocessing.Pool(workers) as pool:
            rows = pool.map(_scan_worker, jobs, chunksize=max(1, len(jobs) // (4 * workers)))
    else:
        rows = [_scan_worker(job) for job in jobs]
    return rows
