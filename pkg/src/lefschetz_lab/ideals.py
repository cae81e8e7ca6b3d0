"""Monomials, monomial ideals, Hilbert functions and socles in K[x,y,z].

Everything is exact integer arithmetic on exponent triples.  All values are
immutable after construction and every function is pure, so the module is safe
for concurrent use and for parallel maps over ideals or degrees.

Monomials are totally ordered by the graded reverse-lexicographic order:
higher degree wins, and at equal degree ``m > m'`` iff the last non-zero entry
of the exponent difference is negative.  In degree 3 the descending chain is

    x^3 > x^2y > xy^2 > y^3 > x^2z > xyz > y^2z > xz^2 > yz^2 > z^3.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple

from .errors import NotArtinianError, ParseError

_MAX_EXPONENT = 10**9

_VAR_NAMES = ("x", "y", "z")


class Monomial(NamedTuple):
    """A monomial x^ex * y^ey * z^ez with nonnegative exponents."""

    ex: int
    ey: int
    ez: int

    @property
    def degree(self) -> int:
        return self.ex + self.ey + self.ez

    def revlex_key(self) -> tuple[int, int, int, int]:
        # At equal degree the revlex-larger monomial is the one whose
        # (ez, ey, ex) is lexicographically smaller, so negate for sorting.
        return (self.ex + self.ey + self.ez, -self.ez, -self.ey, -self.ex)

    # NamedTuple would otherwise compare tuples lexicographically, which is
    # not the monomial order; all four comparisons go through revlex_key.
    def __lt__(self, other: "Monomial") -> bool:  # type: ignore[override]
        return self.revlex_key() < other.revlex_key()

    def __le__(self, other: "Monomial") -> bool:  # type: ignore[override]
        return self.revlex_key() <= other.revlex_key()

    def __gt__(self, other: "Monomial") -> bool:  # type: ignore[override]
        return self.revlex_key() > other.revlex_key()

    def __ge__(self, other: "Monomial") -> bool:  # type: ignore[override]
        return self.revlex_key() >= other.revlex_key()

    def __mul__(self, other: "Monomial") -> "Monomial":  # type: ignore[override]
        return Monomial(self.ex + other.ex, self.ey + other.ey, self.ez + other.ez)

    def divides(self, other: "Monomial") -> bool:
        return self.ex <= other.ex and self.ey <= other.ey and self.ez <= other.ez

    def __floordiv__(self, other: "Monomial") -> "Monomial":
        """Exact division; raises if ``other`` does not divide ``self``."""
        if not other.divides(self):
            raise ValueError(f"{other} does not divide {self}")
        return Monomial(self.ex - other.ex, self.ey - other.ey, self.ez - other.ez)

    def lcm(self, other: "Monomial") -> "Monomial":
        return Monomial(max(self.ex, other.ex), max(self.ey, other.ey), max(self.ez, other.ez))

    def gcd(self, other: "Monomial") -> "Monomial":
        return Monomial(min(self.ex, other.ex), min(self.ey, other.ey), min(self.ez, other.ez))

    def __str__(self) -> str:
        if self == ONE:
            return "1"
        parts = []
        for name, e in zip(_VAR_NAMES, self):
            if e == 1:
                parts.append(name)
            elif e > 1:
                parts.append(f"{name}^{e}")
        return "".join(parts)

    def __repr__(self) -> str:
        return f"Monomial({self.ex}, {self.ey}, {self.ez})"


ONE = Monomial(0, 0, 0)
X = Monomial(1, 0, 0)
Y = Monomial(0, 1, 0)
Z = Monomial(0, 0, 1)
VARIABLES = (X, Y, Z)


class Permutation(NamedTuple):
    """A permutation of the variables {x, y, z}.

    ``image[k]`` is the index of the variable that variable ``k`` is sent to,
    so exponent ``k`` of a monomial lands in slot ``image[k]``.
    """

    image: tuple[int, int, int]

    def apply(self, m: Monomial) -> Monomial:
        e = [0, 0, 0]
        for k, target in enumerate(self.image):
            e[target] = m[k]
        return Monomial(*e)

    def inverse(self) -> "Permutation":
        inv = [0, 0, 0]
        for k, target in enumerate(self.image):
            inv[target] = k
        return Permutation(tuple(inv))

    def __str__(self) -> str:
        return ", ".join(f"{_VAR_NAMES[k]}->{_VAR_NAMES[t]}" for k, t in enumerate(self.image))


#: All six variable permutations, in lexicographic order of their image tuple.
ALL_PERMUTATIONS = tuple(
    Permutation(img)
    for img in ((0, 1, 2), (0, 2, 1), (1, 0, 2), (1, 2, 0), (2, 0, 1), (2, 1, 0))
)

IDENTITY_PERMUTATION = ALL_PERMUTATIONS[0]


def _minimalize(gens: Iterable[Monomial]) -> tuple[Monomial, ...]:
    """Drop every generator that is a multiple of another one."""
    unique = set(gens)
    minimal = [
        g for g in unique if not any(h != g and h.divides(g) for h in unique)
    ]
    # Descending revlex, the order used for canonical printing.
    minimal.sort(key=Monomial.revlex_key, reverse=True)
    return tuple(minimal)


@dataclass(frozen=True)
class MonomialIdeal:
    """A monomial ideal, stored through its minimal generating set.

    The constructor minimalizes and canonically orders whatever generators it
    is given, so downstream code only ever sees minimal generators.  The zero
    ideal is the empty generating set.
    """

    gens: tuple[Monomial, ...]

    def __init__(self, gens: Iterable[Monomial] = ()):
        object.__setattr__(self, "gens", _minimalize(gens))

    def __contains__(self, m: Monomial) -> bool:
        return any(g.divides(m) for g in self.gens)

    def __str__(self) -> str:
        if not self.gens:
            return "0"
        return ", ".join(str(g) for g in self.gens)

    @property
    def is_zero(self) -> bool:
        return not self.gens

    @property
    def is_proper(self) -> bool:
        return ONE not in self.gens

    def pure_power_exponent(self, var: int) -> int | None:
        """Smallest e with (variable)^e among the generators, else None."""
        exps = [g[var] for g in self.gens if g.degree == g[var]]
        return min(exps) if exps else None

    @property
    def is_artinian(self) -> bool:
        """True iff the ideal contains a pure power of each variable."""
        return all(self.pure_power_exponent(v) is not None for v in range(3))

    @property
    def pure_powers(self) -> tuple[int, int, int]:
        powers = tuple(self.pure_power_exponent(v) for v in range(3))
        if any(p is None for p in powers):
            raise NotArtinianError(f"ideal ({self}) lacks a pure power of some variable")
        return powers  # type: ignore[return-value]

    def with_generator(self, m: Monomial) -> "MonomialIdeal":
        return MonomialIdeal(self.gens + (m,))

    def permuted(self, sigma: Permutation) -> "MonomialIdeal":
        return MonomialIdeal(tuple(sigma.apply(g) for g in self.gens))


def parse_ideal(text: str) -> MonomialIdeal:
    """Parse an ideal expression such as ``"x^4, y^4, z^4, x^2*z^2"``.

    Grammar: ideal := mono (',' mono)*;  mono := term (('*')? term)*;
    term := ('x'|'y'|'z') ('^' uint)?.  Whitespace is ignored everywhere and
    '*' between terms is optional.  Errors carry the byte offset.
    """
    n = len(text)
    i = 0

    def skip_ws(i: int) -> int:
        while i < n and text[i].isspace():
            i += 1
        return i

    gens: list[Monomial] = []
    i = skip_ws(i)
    if i == n:
        raise ParseError("empty generator list", i)
    while True:
        exps = [0, 0, 0]
        while True:
            i = skip_ws(i)
            if i >= n or text[i] not in "xyz":
                raise ParseError("expected a variable x, y or z", i)
            var = "xyz".index(text[i])
            i += 1
            power = 1
            j = skip_ws(i)
            if j < n and text[j] == "^":
                i = skip_ws(j + 1)
                if i >= n or not text[i].isdigit():
                    raise ParseError("expected a nonnegative integer exponent", i)
                start = i
                while i < n and text[i].isdigit():
                    i += 1
                power = int(text[start:i])
                if power > _MAX_EXPONENT:
                    raise ParseError("exponent too large", start)
            exps[var] += power
            if exps[var] > _MAX_EXPONENT:
                raise ParseError("exponent too large", i)
            j = skip_ws(i)
            if j < n and text[j] == "*":
                i = j + 1
                continue
            i = j
            if i < n and text[i] in "xyz":
                continue
            break
        gens.append(Monomial(*exps))
        i = skip_ws(i)
        if i == n:
            break
        if text[i] != ",":
            raise ParseError("expected ',' between generators", i)
        i += 1
        i = skip_ws(i)
        if i == n:
            raise ParseError("trailing comma", i)
    return MonomialIdeal(gens)


@functools.lru_cache(maxsize=None)
def monomials_of_degree(j: int) -> tuple[Monomial, ...]:
    """All degree-j monomials in ascending reverse-lexicographic order."""
    if j < 0:
        return ()
    ms = [Monomial(a, b, j - a - b) for a in range(j + 1) for b in range(j + 1 - a)]
    ms.sort(key=Monomial.revlex_key)
    return tuple(ms)


@dataclass(frozen=True)
class HilbertFunction:
    """Hilbert function values from degree 0, with implicit 0 elsewhere.

    Trailing zeros are trimmed on construction, so two computations of the
    same function compare equal regardless of the requested range.
    """

    values: tuple[int, ...]

    def __init__(self, values: Iterable[int]):
        vals = list(values)
        while vals and vals[-1] == 0:
            vals.pop()
        object.__setattr__(self, "values", tuple(vals))

    def __getitem__(self, j: int) -> int:
        if 0 <= j < len(self.values):
            return self.values[j]
        return 0

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self) -> Iterator[int]:
        return iter(self.values)


@functools.lru_cache(maxsize=8192)
def hilbert_function(ideal: MonomialIdeal, d_max: int | None = None) -> HilbertFunction:
    """Hilbert function of R/I: values[j] counts degree-j monomials outside I.

    ``d_max`` defaults to the socle degree plus two, which covers every degree
    a weak Lefschetz check can ever need; the default requires an Artinian
    ideal.
    """
    if not ideal.is_proper:
        raise ValueError("the unit ideal has no Hilbert function")
    if d_max is None:
        d_max = socle_profile(ideal).socle_degree + 2
    values = [
        sum(1 for m in monomials_of_degree(j) if m not in ideal)
        for j in range(d_max + 1)
    ]
    return HilbertFunction(values)


@dataclass(frozen=True)
class SocleProfile:
    """The socle of an Artinian quotient R/I: its monomials annihilated by x, y and z."""

    socle_monomials: tuple[Monomial, ...]
    degrees: tuple[int, ...]
    type_: int
    socle_degree: int
    is_level: bool


@functools.lru_cache(maxsize=8192)
def socle_profile(ideal: MonomialIdeal) -> SocleProfile:
    """Exact socle by scanning all monomials up to the regularity bound.

    A monomial m is in the socle iff m is outside I while x*m, y*m and z*m all
    lie in I.  The scan bound (sum of the three pure-power exponents) exceeds
    the regularity, so nothing is missed.
    """
    bound = sum(ideal.pure_powers)
    socle = [
        m
        for j in range(bound + 1)
        for m in monomials_of_degree(j)
        if m not in ideal and all(v * m in ideal for v in VARIABLES)
    ]
    socle.sort(key=Monomial.revlex_key)
    degrees = tuple(sorted(m.degree for m in socle))
    return SocleProfile(
        socle_monomials=tuple(socle),
        degrees=degrees,
        type_=len(socle),
        socle_degree=max(degrees) if degrees else -1,
        is_level=len(set(degrees)) <= 1,
    )


def annihilator_of_two_monomials(m1: Monomial, m2: Monomial) -> MonomialIdeal:
    """The ideal of all polynomials whose contraction kills both monomials.

    Computed as the intersection of the two irreducible ideals
    (x^(a+1), y^(b+1), z^(c+1)) attached to m1 and m2, via pairwise lcms plus
    minimalization.  The quotient by the result has type exactly 2, with m1
    and m2 as its socle monomials.
    """
    if m1.divides(m2) or m2.divides(m1):
        raise ValueError("the two monomials must be incomparable under divisibility")
    corners1 = (Monomial(m1.ex + 1, 0, 0), Monomial(0, m1.ey + 1, 0), Monomial(0, 0, m1.ez + 1))
    corners2 = (Monomial(m2.ex + 1, 0, 0), Monomial(0, m2.ey + 1, 0), Monomial(0, 0, m2.ez + 1))
    return MonomialIdeal(tuple(g.lcm(h) for g in corners1 for h in corners2))


@dataclass(frozen=True)
class CiPeakProfile:
    """Integer degree ranges where the Hilbert function of R/(x^a,y^b,z^c)
    strictly rises, stays flat, and strictly falls.

    Each range collects the degrees j compared through h(j-2) vs h(j-1); the
    three ranges partition 1 .. a+b+c-1.
    """

    increasing: range
    flat: range
    decreasing: range


def ci_peak_profile(a: int, b: int, c: int) -> CiPeakProfile:
    """Shape of the complete-intersection Hilbert function, in closed form.

    h(j-2) < h(j-1) iff j < min{a+b, a+c, b+c, (a+b+c)/2}; equality holds up
    to max{a, b, c, (a+b+c)/2}; beyond that the function strictly falls until
    degree a+b+c-1.  Bounds are handled exactly by doubling, so half-integer
    thresholds never touch floating point.
    """
    if min(a, b, c) < 1:
        raise ValueError("exponents must be positive")
    lo2 = min(2 * (a + b), 2 * (a + c), 2 * (b + c), a + b + c)
    hi2 = max(2 * a, 2 * b, 2 * c, a + b + c)
    inc_end = (lo2 - 1) // 2  # largest j with 2j < lo2
    flat_start = (lo2 + 1) // 2  # smallest j with 2j >= lo2
    flat_end = hi2 // 2
    return CiPeakProfile(
        increasing=range(1, inc_end + 1),
        flat=range(flat_start, flat_end + 1),
        decreasing=range(flat_end + 1, a + b + c),
    )
