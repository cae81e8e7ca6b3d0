"""Exact linear algebra over the integers: determinants, permanents, ranks,
Smith form, and the two matrices attached to a triangular region.

Entries are arbitrary-precision Python ints; nothing here ever rounds.  The
only use of numpy is a word-size modular elimination that serves as a fast
full-rank certificate; any rank it cannot certify is recomputed by exact
fraction-free elimination.

Row and column order of the region matrices is globally fixed (ascending
reverse-lexicographic), so determinant signs are reproducible run to run.
All contracts downstream are stated on absolute values.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import ExactnessError
from .ideals import Monomial, VARIABLES, Y

#: Ryser's formula is used for permanents of general integer matrices up to
#: this size; 0/1 matrices are counted exactly by matching enumeration instead.
PERMANENT_RYSER_CAP = 24

_CERT_PRIME = 2147483629  # prime just below 2^31: modular products stay inside int64


def binom(n: int, k: int) -> int:
    """Binomial coefficient with C(n, k) = 0 for k < 0 or k > n.

    This is the lattice-path convention: paths with a negative step count do
    not exist.
    """
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


@dataclass(frozen=True)
class IntMatrix:
    """A dense matrix of Python ints, stored as a tuple of row tuples.

    Dimensions are explicit so that genuinely empty shapes (0 x k and k x 0
    matrices do occur as lattice path matrices) survive round trips.
    """

    entries: tuple[tuple[int, ...], ...]
    rows: int
    cols: int

    def __init__(self, entries: Iterable[Iterable[int]], cols: int | None = None):
        rows_t = tuple(tuple(int(e) for e in row) for row in entries)
        if rows_t:
            width = len(rows_t[0])
            if any(len(r) != width for r in rows_t):
                raise ValueError("ragged rows")
            if cols is not None and cols != width:
                raise ValueError("cols does not match row width")
            cols = width
        elif cols is None:
            cols = 0
        object.__setattr__(self, "entries", rows_t)
        object.__setattr__(self, "rows", len(rows_t))
        object.__setattr__(self, "cols", cols)

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls([[int(i == j) for j in range(n)] for i in range(n)], cols=n)

    @classmethod
    def zero(cls, rows: int, cols: int) -> "IntMatrix":
        return cls([[0] * cols for _ in range(rows)], cols=cols)

    def transpose(self) -> "IntMatrix":
        return IntMatrix(zip(*self.entries), cols=self.rows) if self.entries else IntMatrix(
            [[] for _ in range(self.cols)] if self.cols else [], cols=0
        )

    def submatrix(self, row_idx: Sequence[int], col_idx: Sequence[int]) -> "IntMatrix":
        return IntMatrix(
            [[self.entries[i][j] for j in col_idx] for i in row_idx], cols=len(col_idx)
        )

    def to_lists(self) -> list[list[int]]:
        return [list(r) for r in self.entries]

    def __str__(self) -> str:
        if not self.entries:
            return f"[] ({self.rows}x{self.cols})"
        width = max(len(str(e)) for row in self.entries for e in row)
        return "\n".join(" ".join(str(e).rjust(width) for e in row) for row in self.entries)


def determinant(matrix: IntMatrix) -> int:
    """Exact determinant by fraction-free Bareiss elimination.

    The empty 0x0 matrix has determinant 1 (empty product).
    """
    if not matrix.is_square:
        raise ValueError("determinant of a non-square matrix")
    n = matrix.rows
    if n == 0:
        return 1
    a = matrix.to_lists()
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i = a[i]
            row_k = a[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pivot - aik * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * a[n - 1][n - 1]


def _is_zero_one(matrix: IntMatrix) -> bool:
    return all(e in (0, 1) for row in matrix.entries for e in row)


def _count_matchings(matrix: IntMatrix) -> int:
    """Number of perfect matchings of a square 0/1 matrix.

    Backtracking over rows, always branching on the unmatched row with the
    fewest remaining choices; exact and fast for the sparse (at most three
    ones per line) matrices that come from triangular regions.
    """
    n = matrix.rows
    row_adj = [
        [j for j in range(n) if matrix.entries[i][j]] for i in range(n)
    ]
    if any(not adj for adj in row_adj):
        return 0
    used = [False] * n
    unmatched = set(range(n))

    def count() -> int:
        if not unmatched:
            return 1
        # branch on the tightest row; a row with no free column prunes the branch
        best_i, best_opts = -1, None
        for i in unmatched:
            opts = [j for j in row_adj[i] if not used[j]]
            if best_opts is None or len(opts) < len(best_opts):
                best_i, best_opts = i, opts
                if len(opts) <= 1:
                    break
        if not best_opts:
            return 0
        unmatched.remove(best_i)
        total = 0
        for j in best_opts:
            used[j] = True
            total += count()
            used[j] = False
        unmatched.add(best_i)
        return total

    return count()


def permanent(matrix: IntMatrix, ryser_cap: int = PERMANENT_RYSER_CAP) -> int:
    """Exact permanent.

    0/1 matrices are handled at any size by exhaustive matching enumeration
    (the permanent of a bi-adjacency matrix is the number of perfect
    matchings).  General integer matrices use Ryser's inclusion-exclusion
    formula with Gray-code updates, capped at ``ryser_cap`` since the cost is
    2^n; exceeding the cap raises rather than approximating.
    """
    if not matrix.is_square:
        raise ValueError("permanent of a non-square matrix")
    n = matrix.rows
    if n == 0:
        return 1
    if _is_zero_one(matrix):
        return _count_matchings(matrix)
    if n > ryser_cap:
        raise ValueError(f"permanent size cap exceeded ({n} > {ryser_cap})")
    # Ryser with Gray-code subset updates: per(A) = (-1)^n sum_S (-1)^|S| prod_i sum_{j in S} a_ij
    row_sums = [0] * n
    total = 0
    size = 0
    gray = 0
    for g in range(1, 1 << n):
        new_gray = g ^ (g >> 1)
        changed_bit = (gray ^ new_gray).bit_length() - 1
        if new_gray & (1 << changed_bit):
            size += 1
            for i in range(n):
                row_sums[i] += matrix.entries[i][changed_bit]
        else:
            size -= 1
            for i in range(n):
                row_sums[i] -= matrix.entries[i][changed_bit]
        gray = new_gray
        prod = 1
        for s in row_sums:
            if s == 0:
                prod = 0
                break
            prod *= s
        total += prod if (n - size) % 2 == 0 else -prod
    return total


def _rank_exact(matrix: IntMatrix) -> int:
    """Rank over the rationals by fraction-free elimination with column skips."""
    a = matrix.to_lists()
    rows, cols = matrix.rows, matrix.cols
    r = 0
    prev = 1
    for c in range(cols):
        pivot_row = next((i for i in range(r, rows) if a[i][c] != 0), None)
        if pivot_row is None:
            continue
        a[r], a[pivot_row] = a[pivot_row], a[r]
        pivot = a[r][c]
        for i in range(r + 1, rows):
            aic = a[i][c]
            row_i = a[i]
            row_r = a[r]
            for j in range(c + 1, cols):
                row_i[j] = (row_i[j] * pivot - aic * row_r[j]) // prev
            row_i[c] = 0
        prev = pivot
        r += 1
        if r == rows:
            break
    return r


def _rank_mod(matrix: IntMatrix, p: int) -> int:
    """Rank over GF(p) for p < 2^31, by vectorized modular elimination."""
    rows, cols = matrix.rows, matrix.cols
    if rows == 0 or cols == 0:
        return 0
    # reduce mod p in Python first: entries may exceed int64
    a = np.array([[e % p for e in row] for row in matrix.entries], dtype=np.int64)
    r = 0
    for c in range(cols):
        pivot_rows = np.nonzero(a[r:, c])[0]
        if pivot_rows.size == 0:
            continue
        i = r + int(pivot_rows[0])
        if i != r:
            a[[r, i]] = a[[i, r]]
        inv = pow(int(a[r, c]), -1, p)
        below = a[r + 1:, c]
        nz = np.nonzero(below)[0]
        if nz.size:
            factors = (below[nz] * inv) % p
            a[r + 1 + nz, c:] = (a[r + 1 + nz, c:] - factors[:, None] * a[r, c:]) % p
        r += 1
        if r == rows:
            break
    return r


def rank_q(matrix: IntMatrix) -> int:
    """Exact rank over the rationals.

    A single modular elimination certifies full rank (rank mod p never
    exceeds the rational rank); only matrices that fail the certificate go
    through exact fraction-free elimination.
    """
    bound = min(matrix.rows, matrix.cols)
    if bound == 0:
        return 0
    r = _rank_mod(matrix, _CERT_PRIME)
    if r == bound:
        return r
    return _rank_exact(matrix)


def is_probable_prime(n: int) -> bool:
    """Deterministic Miller-Rabin for anything below 3.3 * 10^24."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41):
        if n % p == 0:
            return n == p
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def rank_mod_p(matrix: IntMatrix, p: int) -> int:
    """Exact rank over GF(p)."""
    if not is_probable_prime(p):
        raise ValueError(f"{p} is not prime")
    if p < 2**31:
        return _rank_mod(matrix, p)
    # arbitrary-size prime fallback, plain Python
    a = [[e % p for e in row] for row in matrix.entries]
    rows, cols = matrix.rows, matrix.cols
    r = 0
    for c in range(cols):
        pivot_row = next((i for i in range(r, rows) if a[i][c]), None)
        if pivot_row is None:
            continue
        a[r], a[pivot_row] = a[pivot_row], a[r]
        inv = pow(a[r][c], -1, p)
        for i in range(r + 1, rows):
            if a[i][c]:
                f = a[i][c] * inv % p
                a[i] = [(x - f * y) % p for x, y in zip(a[i], a[r])]
        r += 1
        if r == rows:
            break
    return r


def smith_invariant_factors(matrix: IntMatrix) -> tuple[int, ...]:
    """Nonnegative invariant factors s_1 | s_2 | ... of the integer Smith form.

    Classic gcd-pivot reduction: repeatedly move a smallest-magnitude entry to
    the pivot, clear its row and column by exact division steps, then enforce
    that the pivot divides the remaining block.  Arbitrary precision, so no
    overflow is possible.
    """
    a = matrix.to_lists()
    rows, cols = matrix.rows, matrix.cols
    factors: list[int] = []
    k = 0
    while k < rows and k < cols:
        # locate a smallest nonzero entry in the remaining block
        best = None
        for i in range(k, rows):
            for j in range(k, cols):
                if a[i][j] != 0 and (best is None or abs(a[i][j]) < abs(a[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        while True:
            i0, j0 = best
            a[k], a[i0] = a[i0], a[k]
            if j0 != k:
                for row in a:
                    row[k], row[j0] = row[j0], row[k]
            if a[k][k] < 0:
                a[k] = [-e for e in a[k]]
            pivot = a[k][k]
            dirty = False
            for i in range(k + 1, rows):
                q = a[i][k] // pivot
                if q:
                    a[i] = [e - q * f for e, f in zip(a[i], a[k])]
                if a[i][k]:
                    dirty = True
            for j in range(k + 1, cols):
                q = a[k][j] // pivot
                if q:
                    for row in a:
                        row[j] -= q * row[k]
                if a[k][j]:
                    dirty = True
            if dirty:
                best = min(
                    ((i, j) for i in range(k, rows) for j in range(k, cols) if a[i][j] != 0),
                    key=lambda ij: abs(a[ij[0]][ij[1]]),
                )
                continue
            # pivot row and column are clear; enforce divisibility of the block
            offender = next(
                (
                    (i, j)
                    for i in range(k + 1, rows)
                    for j in range(k + 1, cols)
                    if a[i][j] % pivot != 0
                ),
                None,
            )
            if offender is None:
                break
            a[k] = [e + f for e, f in zip(a[k], a[offender[0]])]
            best = (k, k)
        factors.append(a[k][k])
        k += 1
    return tuple(factors)


def determinantal_divisor(matrix: IntMatrix, r: int) -> int:
    """Gcd of all r x r minors (0 if they all vanish, 1 for r = 0).

    Computed as the product of the first r invariant factors of the Smith
    form, which equals the r-th determinantal divisor.
    """
    if r < 0 or r > min(matrix.rows, matrix.cols):
        raise ValueError(f"minor order {r} out of range")
    if r == 0:
        return 1
    factors = smith_invariant_factors(matrix)
    if len(factors) < r:
        return 0
    return math.prod(factors[:r])


def factorize(n: int) -> dict[int, int]:
    """Prime factorization by trial division; fine at desk scale."""
    if n < 1:
        raise ValueError("factorize needs a positive integer")
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


# ---------------------------------------------------------------------------
# The two matrices of a triangular region
# ---------------------------------------------------------------------------


def biadjacency(region) -> IntMatrix:
    """0/1 adjacency of downward vs upward triangles of a region.

    Rows are the downward triangles, columns the upward ones, both in
    ascending reverse-lexicographic order of their labels.  Entry (i, j) is 1
    iff up label j is the down label i times a variable, so each row and each
    column carries at most three ones.  The transpose is the matrix of
    multiplication by x+y+z between the two graded pieces.
    """
    col_index = {m: j for j, m in enumerate(region.up)}
    entries = []
    for n in region.down:
        row = [0] * len(region.up)
        for v in VARIABLES:
            j = col_index.get(v * n)
            if j is not None:
                row[j] = 1
        entries.append(row)
    return IntMatrix(entries, cols=len(region.up))


@dataclass(frozen=True)
class LatticePoints:
    """Start (A) and end (E) vertices of the region's path lattice.

    Vertices sit on the triangle edges parallel to the upper-right boundary;
    the vertex shared by up triangle m and down triangle m/y is labeled m.  A
    label m maps to the plane point (d-1-ez, ex), where East steps and South
    steps are the two legal path moves.

    A-vertices lie only on an upward triangle: m is present and its down
    neighbor m/y is absent or nonexistent.  E-vertices lie only on a downward
    triangle: they are the labels y*n for present downs n with y*n absent.
    Both lists are ascending in the monomial order.
    """

    a_points: tuple[tuple[Monomial, tuple[int, int]], ...]
    e_points: tuple[tuple[Monomial, tuple[int, int]], ...]


def _lattice_coord(m: Monomial, d: int) -> tuple[int, int]:
    return (d - 1 - m.ez, m.ex)


def lattice_points(region) -> LatticePoints:
    d = region.d
    down_set = region.down_set
    up_set = region.up_set
    a_pts = [
        (m, _lattice_coord(m, d))
        for m in region.up
        if m.ey == 0 or (m // Y) not in down_set
    ]
    e_pts = [
        (Y * n, _lattice_coord(Y * n, d))
        for n in region.down
        if (Y * n) not in up_set
    ]
    return LatticePoints(tuple(a_pts), tuple(e_pts))


def lattice_path_matrix(region) -> tuple[IntMatrix, LatticePoints]:
    """Binomial matrix counting lattice paths from each A-vertex to each E-vertex.

    Entry (i, j) is C((xE-xA) + (yA-yE), xE-xA), i.e. the number of
    East/South walks in the plane, and 0 whenever either difference is
    negative.
    """
    pts = lattice_points(region)
    entries = [
        [
            binom((xe - xa) + (ya - ye), xe - xa) if xe >= xa and ya >= ye else 0
            for (_, (xe, ye)) in pts.e_points
        ]
        for (_, (xa, ya)) in pts.a_points
    ]
    matrix = IntMatrix(entries, cols=len(pts.e_points))
    return matrix, pts


def exact_quotient(num: int, den: int) -> int:
    """Integer division that must be exact; anything else is an internal error."""
    if den == 0:
        raise ExactnessError("division by zero")
    q, r = divmod(num, den)
    if r:
        raise ExactnessError(f"{num} is not divisible by {den}")
    return q
