"""Numerical-semigroup arithmetic and principal matrices, in exact integers.

Membership tables are boolean DP arrays packed into Python big-int bitsets
(bit k set <=> k is in the semigroup), which keeps the inner loops in C while
staying exact. One "cell" of the DP table is one bit; allocation above the
configurable cell cap is refused loudly instead of thrashing.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import (
    AllocationCapError,
    DegenerateAdjugateError,
    NegativeQueryError,
    NotCoprimeError,
    ZeroOrNegativeEntryError,
)
from .intmat import adjugate_first_column, rank

DEFAULT_CELL_CAP = 10**8


@dataclass(frozen=True)
class Sequence:
    """A tuple of coprime positive integers generating a numerical semigroup."""

    entries: tuple[int, ...]

    def __post_init__(self):
        if not self.entries:
            raise ZeroOrNegativeEntryError("sequence must be non-empty")
        for v in self.entries:
            if not isinstance(v, int) or isinstance(v, bool) or v <= 0:
                raise ZeroOrNegativeEntryError(f"entry {v!r} is not a positive integer")
        g = math.gcd(*self.entries)
        if g != 1:
            raise NotCoprimeError(g)

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, i):
        return self.entries[i]


@dataclass(frozen=True)
class SemigroupProfile:
    """Frobenius number, genus, Apery set w.r.t. the multiplicity, symmetry flag."""

    frobenius: int
    genus: int
    apery: tuple[int, ...]
    symmetric: bool

    def __post_init__(self):
        if self.frobenius >= 0 and self.genus > self.frobenius + 1:
            raise AssertionError("genus exceeds frobenius + 1")


def make_sequence(raw) -> Sequence:
    """Validate a list of positive integers into a Sequence.

    Raises ZeroOrNegativeEntryError for empty/non-positive input and
    NotCoprimeError (carrying the gcd) when the entries share a factor.
    """
    return Sequence(tuple(raw))


def closure_bits(gens, bound: int, cap: int = DEFAULT_CELL_CAP) -> int:
    """Bitset of every non-negative integer combination of gens up to bound.

    The doubling shifts close the set under each generator in turn, which is
    the packed form of the usual reachability DP over 0..bound.
    """
    if bound + 1 > cap:
        raise AllocationCapError(
            f"membership table of {bound + 1} cells exceeds cap {cap}"
        )
    mask = (1 << (bound + 1)) - 1
    bits = 1
    for g in sorted(set(gens)):
        if g > bound:
            continue
        step = g
        while step <= bound:
            bits |= (bits << step) & mask
            step <<= 1
    return bits


def contains(s: Sequence, m: int, cap: int = DEFAULT_CELL_CAP) -> bool:
    """Membership of m in the semigroup, by DP over 0..m."""
    if m < 0:
        raise NegativeQueryError(f"membership query for negative value {m}")
    return (closure_bits(s.entries, m, cap) >> m) & 1 == 1


def _bit_reverse(value: int, width: int) -> int:
    if width <= 0:
        return 0
    return int(bin(value)[2:].zfill(width)[::-1], 2)


def profile(s: Sequence, cap: int = DEFAULT_CELL_CAP) -> SemigroupProfile:
    """Frobenius, genus, Apery set and symmetry of the semigroup of s.

    The membership table is grown geometrically until the top multiplicity-many
    positions are all members, which guarantees it extends past frobenius +
    multiplicity.
    """
    entries = s.entries
    m = min(entries)
    if m == 1:
        return SemigroupProfile(frobenius=-1, genus=0, apery=(0,), symmetric=True)
    bound = 8 * max(entries)
    while True:
        bits = closure_bits(entries, bound, cap)
        if (bits >> (bound - m + 1)) == (1 << m) - 1:
            break
        bound *= 2
    full = (1 << (bound + 1)) - 1
    gaps = bits ^ full
    frob = gaps.bit_length() - 1
    genus = gaps.bit_count()
    if frob < 0:
        symmetric = True
    else:
        width = frob + 1
        window = bits & ((1 << width) - 1)
        # symmetric <=> z is a gap exactly when frob - z is a member
        symmetric = (_bit_reverse(window, width) ^ window) == (1 << width) - 1
    table = bits.to_bytes(bound // 8 + 1, "little")
    apery = []
    for r in range(m):
        k = r
        while not table[k >> 3] >> (k & 7) & 1:
            k += m
        apery.append(k)
    return SemigroupProfile(
        frobenius=frob, genus=genus, apery=tuple(apery), symmetric=symmetric
    )


def _two_var_solutions(p: int, q: int, target: int):
    """All (cp, cq) >= 0 with cp*p + cq*q == target, ascending cp."""
    g = math.gcd(p, q)
    if target % g:
        return
    pp, qq, tt = p // g, q // g, target // g
    if qq == 1:
        cp0 = 0
    else:
        cp0 = (tt * pow(pp, -1, qq)) % qq
    cp = cp0
    while cp * pp <= tt:
        yield cp, (tt - cp * pp) // qq
        cp += qq


def _lex_min_rep(target: int, gens: tuple[int, ...]):
    """Lexicographically smallest coefficient tuple summing to target, or None."""
    n = len(gens)
    if n == 1:
        if target % gens[0] == 0:
            return (target // gens[0],)
        return None
    if n == 2:
        for cp, cq in _two_var_solutions(gens[0], gens[1], target):
            return (cp, cq)
        return None
    for c0 in range(target // gens[0] + 1):
        tail = _lex_min_rep(target - c0 * gens[0], gens[1:])
        if tail is not None:
            return (c0,) + tail
    return None


def all_representations(target: int, gens: tuple[int, ...]):
    """Every coefficient tuple over gens summing to target, in lex order."""
    n = len(gens)
    if n == 1:
        if target % gens[0] == 0:
            return [(target // gens[0],)]
        return []
    if n == 2:
        return sorted(_two_var_solutions(gens[0], gens[1], target))
    out = []
    for c0 in range(target // gens[0] + 1):
        for tail in all_representations(target - c0 * gens[0], gens[1:]):
            out.append((c0,) + tail)
    return out


def subsemigroup_member(gens, value: int, cap: int = DEFAULT_CELL_CAP) -> bool:
    """Membership of value in the semigroup generated by gens (gcd may be > 1)."""
    if value < 0:
        raise NegativeQueryError(f"membership query for negative value {value}")
    if value == 0:
        return True
    return (closure_bits(gens, value, cap) >> value) & 1 == 1


def multiplier_order(a_i: int, others, cap: int = DEFAULT_CELL_CAP) -> int:
    """Smallest r >= 1 with r * a_i in the semigroup generated by the others."""
    others = tuple(others)
    bound = 4 * max(max(others), a_i)
    while True:
        bits = closure_bits(others, bound, cap)
        k = 1
        while k * a_i <= bound:
            if (bits >> (k * a_i)) & 1:
                return k
            k += 1
        bound *= 2


def principal_row(s: Sequence, i: int, cap: int = DEFAULT_CELL_CAP):
    """(r_i, representation) for generator index i (0-based).

    r_i is the least positive multiplier putting r_i * a_i in the semigroup of
    the other generators; the representation is the lexicographically smallest
    coefficient tuple over the others in ascending original index order.
    """
    entries = s.entries
    n = len(entries)
    if n < 2:
        raise ValueError("principal relations need at least two generators")
    if not 0 <= i < n:
        raise IndexError(f"generator index {i} out of range")
    others = entries[:i] + entries[i + 1:]
    r = multiplier_order(entries[i], others, cap)
    rep = _lex_min_rep(r * entries[i], others)
    if rep is None:  # cannot happen: r * a_i is a member by construction
        raise AssertionError("no representation for a certified member")
    return r, rep


@dataclass(frozen=True)
class PrincipalMatrix:
    """Integer matrix of principal relations: diagonal -r_i, row . sequence = 0.

    Rank n-1 usually holds but genuinely fails for sequences whose minimal
    relations force proportional rows: for (16, 27, 45, 56) the only relations
    for 16 and 56 are 7*16 = 2*56 read both ways, so the first and last rows
    are negatives of each other and the rank drops to 2. The rank is therefore
    exposed via rank() rather than asserted here; recovery of the sequence from
    such a matrix fails loudly in inverse_principal.
    """

    sequence: Sequence
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        n = len(self.sequence)
        if len(self.rows) != n or any(len(row) != n for row in self.rows):
            raise ValueError("principal matrix must be n x n")
        for i, row in enumerate(self.rows):
            if row[i] >= 0:
                raise ValueError(f"diagonal entry {i} must be strictly negative")
            if any(v < 0 for j, v in enumerate(row) if j != i):
                raise ValueError(f"negative off-diagonal entry in row {i}")
            if sum(v * a for v, a in zip(row, self.sequence)) != 0:
                raise ValueError(f"row {i} is not a relation of the sequence")

    def rank(self) -> int:
        return rank([list(row) for row in self.rows])

    def as_lists(self) -> list[list[int]]:
        return [list(row) for row in self.rows]


def principal_matrix(s: Sequence, cap: int = DEFAULT_CELL_CAP) -> PrincipalMatrix:
    """Assemble the principal matrix of s from the per-generator rows."""
    n = len(s)
    rows = []
    for i in range(n):
        r, rep = principal_row(s, i, cap)
        row = rep[:i] + (-r,) + rep[i:]
        rows.append(row)
    return PrincipalMatrix(sequence=s, rows=tuple(rows))


def normalized_kernel_column(matrix: list[list[int]]) -> list[int]:
    """First adjugate column with signs removed; entries must share one sign."""
    col = adjugate_first_column(matrix)
    if all(v == 0 for v in col):
        raise DegenerateAdjugateError("first adjugate column is zero")
    has_pos = any(v > 0 for v in col)
    has_neg = any(v < 0 for v in col)
    if has_pos and has_neg:
        raise DegenerateAdjugateError("first adjugate column has mixed signs")
    if any(v == 0 for v in col):
        raise DegenerateAdjugateError("first adjugate column has zero entries")
    return [abs(v) for v in col]


def inverse_principal(matrix: list[list[int]]) -> Sequence:
    """Recover the sequence annihilated by a principal-shaped matrix.

    Takes the first adjugate column, normalizes all entries to be positive and
    divides out the gcd.
    """
    col = normalized_kernel_column(matrix)
    g = math.gcd(*col)
    return Sequence(tuple(v // g for v in col))


def is_principal(matrix: list[list[int]], cap: int = DEFAULT_CELL_CAP) -> bool:
    """True iff every row of the matrix is a principal relation of D^{-1}(matrix)."""
    s = inverse_principal(matrix)
    for i, row in enumerate(matrix):
        if sum(v * a for v, a in zip(row, s)) != 0:
            return False
        r, _ = principal_row(s, i, cap)
        if -row[i] != r:
            return False
    return True
