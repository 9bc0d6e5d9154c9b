"""Monodromy factorizations of Lefschetz fibrations over the sphere.

Vanishing cycles are words on the fiber surface group together with
their homology classes.  The homological monodromy of a Dehn twist is
the transvection x -> x + sign * <x, c> * c in the standard symplectic
basis a_1, b_1, ..., a_g, b_g.  Only this homological shadow is
computed; whether a twist product is isotopic to the identity is
checked at the homology level alone, and every report derived from it
says so.
"""

from __future__ import annotations

from dataclasses import dataclass

from .fpgroup import (
    FormatError,
    Presentation,
    quotient_by_normal_closure,
    surface_group,
)
from .word import Word, cyclic_reduce, exponent_vector, parse_word
from .zlinalg import DimensionMismatch, IntMatrix


@dataclass(frozen=True)
class HomologyClass:
    """An H_1 class on the genus-g fiber, coordinates in a_1,b_1,...,a_g,b_g."""

    coordinates: tuple[int, ...]

    def __post_init__(self):
        if len(self.coordinates) % 2:
            raise DimensionMismatch("odd coordinate length")

    @property
    def genus(self) -> int:
        return len(self.coordinates) // 2


@dataclass(frozen=True)
class VanishingCycle:
    word: Word
    homology: HomologyClass

    def __post_init__(self):
        if exponent_vector(self.word) != self.homology.coordinates:
            raise ValueError("homology class does not match the word's exponent sums")

    @classmethod
    def from_word(cls, w: Word) -> "VanishingCycle":
        w = cyclic_reduce(w)
        return cls(w, HomologyClass(exponent_vector(w)))


@dataclass(frozen=True)
class MonodromyFactorization:
    """Ordered Dehn-twist data on a genus-h fiber; leftmost twist acts first."""

    fiber_genus: int
    cycles: tuple[VanishingCycle, ...]
    signs: tuple[int, ...]

    def __post_init__(self):
        if len(self.cycles) != len(self.signs):
            raise ValueError("one sign per cycle required")
        if any(s not in (1, -1) for s in self.signs):
            raise ValueError("signs must be +1 or -1")
        fiber = surface_group(self.fiber_genus).generators
        for c in self.cycles:
            if c.word.alphabet != fiber:
                raise ValueError("cycle word is not over the fiber surface generators")


def symplectic_gram(g: int) -> IntMatrix:
    """Block diagonal [[0,1],[-1,0]] pairing for the a_i, b_i basis."""
    n = 2 * g
    rows = [[0] * n for _ in range(n)]
    for i in range(g):
        rows[2 * i][2 * i + 1] = 1
        rows[2 * i + 1][2 * i] = -1
    return IntMatrix.from_rows(rows, cols=n)


def symplectic_pairing(x: HomologyClass, y: HomologyClass) -> int:
    if len(x.coordinates) != len(y.coordinates):
        raise DimensionMismatch("pairing classes of different genus")
    total = 0
    for i in range(len(x.coordinates) // 2):
        total += x.coordinates[2 * i] * y.coordinates[2 * i + 1]
        total -= x.coordinates[2 * i + 1] * y.coordinates[2 * i]
    return total


def twist_matrix(c: HomologyClass, sign: int) -> IntMatrix:
    """Picard-Lefschetz transvection x -> x + sign * <x, c> * c."""
    if sign not in (1, -1):
        raise ValueError(f"sign {sign}")
    n = len(c.coordinates)
    jc = symplectic_gram(c.genus).apply(c.coordinates)
    rows = [
        [
            (1 if i == j else 0) + sign * c.coordinates[i] * jc[j]
            for j in range(n)
        ]
        for i in range(n)
    ]
    return IntMatrix.from_rows(rows, cols=n)


def monodromy_product(m: MonodromyFactorization) -> IntMatrix:
    """Composite action on H_1 of the fiber, first twist applied first."""
    product = IntMatrix.identity(2 * m.fiber_genus)
    for cycle, sign in zip(m.cycles, m.signs):
        product = twist_matrix(cycle.homology, sign).mul(product)
    return product


def homology_trivial(m: MonodromyFactorization) -> bool:
    """Necessary condition for the twist product to be isotopic to the
    identity: its action on H_1 is trivial.  Homological check only."""
    return monodromy_product(m) == IntMatrix.identity(2 * m.fiber_genus)


def total_space_pi1(m: MonodromyFactorization) -> Presentation:
    """Fundamental group of the total space: the fiber surface group modulo
    the normal closure of the vanishing cycles.

    Valid when the twist product is trivial in the pointed mapping class
    group; computed unconditionally, with a caveat in the label whenever
    even the homological check fails.
    """
    label = "total space pi1"
    if not homology_trivial(m):
        label += " [caveat: monodromy product is not homologically trivial]"
    q = quotient_by_normal_closure(
        surface_group(m.fiber_genus), [c.word for c in m.cycles]
    )
    return Presentation(q.generators, q.relators, label=label)


def euler_characteristic(m: MonodromyFactorization) -> int:
    """2 * (2 - 2h) + n for n critical points over the sphere."""
    return 2 * (2 - 2 * m.fiber_genus) + len(m.cycles)


# --- text format ------------------------------------------------------------


def parse_factorization(text: str) -> tuple[MonodromyFactorization, str | None]:
    """Parse the fibration/fiber_genus/cycle file format; returns the
    factorization and the label."""
    label: str | None = None
    genus: int | None = None
    cycles: list[VanishingCycle] = []
    signs: list[int] = []
    fiber = None
    seen_fibration = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        key, _, rest = line.partition(" ")
        rest = rest.strip()
        if key == "fibration":
            if seen_fibration:
                raise FormatError(f"line {lineno}: repeated fibration line")
            seen_fibration = True
            label = rest or None
        elif key == "fiber_genus":
            if genus is not None:
                raise FormatError(f"line {lineno}: repeated fiber_genus line")
            try:
                genus = int(rest)
            except ValueError:
                raise FormatError(f"line {lineno}: bad genus {rest!r}") from None
            if genus < 0:
                raise FormatError(f"line {lineno}: negative genus")
            fiber = surface_group(genus).generators
        elif key == "cycle":
            if fiber is None:
                raise FormatError(f"line {lineno}: cycle before fiber_genus")
            sign_tok, _, word_text = rest.partition(" ")
            if sign_tok not in ("+", "-"):
                raise FormatError(f"line {lineno}: expected + or -, found {sign_tok!r}")
            try:
                w = parse_word(word_text.strip(), fiber)
            except ValueError as e:
                raise FormatError(f"line {lineno}: {e}") from e
            cycles.append(VanishingCycle.from_word(w))
            signs.append(1 if sign_tok == "+" else -1)
        else:
            raise FormatError(f"line {lineno}: unknown directive {key!r}")
    if not seen_fibration or genus is None:
        raise FormatError("missing fibration/fiber_genus lines")
    return MonodromyFactorization(genus, tuple(cycles), tuple(signs)), label
