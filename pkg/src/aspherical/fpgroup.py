"""Finitely presented groups and presentation-level homomorphisms.

Covers the constructors the constructions need: surface groups with the
standard one-relator presentation, free groups, free and direct
products, quotients by normal closures of word sets, presentations of
finitely generated abelian groups, and the pinch map collapsing the
separating circle of a genus sum.

Homomorphisms carry one image word per source generator.  Validity is
certified at the abelianized level only (the image of every source
relator must have exponent vector inside the target's relation
lattice); deciding relator triviality in an arbitrary finitely
presented group is not attempted.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import zlinalg
from .word import (
    Generator,
    UnknownGenerator,
    Word,
    commutator,
    cyclic_reduce,
    empty_word,
    exponent_vector,
    generator_word,
    invert,
    multiply,
    parse_word,
    render_word,
)
from .zlinalg import FgAbelian


class InvalidGenus(ValueError):
    pass


class TargetSourceMismatch(ValueError):
    pass


class InvalidHomomorphism(ValueError):
    pass


class FormatError(ValueError):
    pass


@dataclass(frozen=True)
class Presentation:
    """Generators plus relator words; relators stay cyclically reduced."""

    generators: tuple[Generator, ...]
    relators: tuple[Word, ...]
    label: str | None = None

    def __post_init__(self):
        names = [g.name for g in self.generators]
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate generator names in {names}")
        if self.label is not None and "\n" in self.label:
            raise ValueError("label must be a single line")
        for r in self.relators:
            if r.alphabet != self.generators:
                raise ValueError("relator over a different alphabet")
            if r.letters and r.letters[0] == (r.letters[-1][0], -r.letters[-1][1]):
                raise ValueError(f"relator {render_word(r)!r} is not cyclically reduced")

    def generator_named(self, name: str) -> Generator:
        for g in self.generators:
            if g.name == name:
                return g
        raise UnknownGenerator(name)

    def word(self, text: str) -> Word:
        return parse_word(text, self.generators)


@dataclass(frozen=True)
class GroupHom:
    """A homomorphism given by one target word per source generator."""

    source: Presentation
    target: Presentation
    images: tuple[Word, ...]

    def __post_init__(self):
        if len(self.images) != len(self.source.generators):
            raise ValueError(
                f"{len(self.images)} images for {len(self.source.generators)} generators"
            )
        for w in self.images:
            if w.alphabet != self.target.generators:
                raise ValueError("image word over a different alphabet")
        matrix = zlinalg.induced_matrix(self)
        lattice = zlinalg.relator_matrix(self.target)
        for r in self.source.relators:
            image_vec = matrix.apply(exponent_vector(r))
            if not zlinalg.in_row_lattice(image_vec, lattice):
                raise InvalidHomomorphism(
                    f"image of relator {render_word(r)!r} is nontrivial in the "
                    "abelianized target"
                )


def apply_hom(f: GroupHom, w: Word) -> Word:
    """Substitute images generator-wise and freely reduce."""
    if w.alphabet != f.source.generators:
        raise ValueError("word over a different alphabet than the source")
    out = empty_word(f.target.generators)
    for i, s in w.letters:
        out = multiply(out, f.images[i] if s > 0 else invert(f.images[i]))
    return out


def identity_hom(p: Presentation) -> GroupHom:
    return GroupHom(p, p, tuple(generator_word(p.generators, i) for i in range(len(p.generators))))


def compose(f: GroupHom, g: GroupHom) -> GroupHom:
    """The composite g after f."""
    if f.target != g.source:
        raise TargetSourceMismatch("target of the first factor is not the source of the second")
    return GroupHom(f.source, g.target, tuple(apply_hom(g, w) for w in f.images))


# --- constructors -----------------------------------------------------------


def free_group(r: int) -> Presentation:
    if r < 0:
        raise ValueError("negative rank")
    gens = tuple(Generator(f"g{i + 1}") for i in range(r))
    return Presentation(gens, (), label=f"F_{r}")


def surface_relator(gens: tuple[Generator, ...]) -> Word:
    """The product of commutators [a_1,b_1]...[a_g,b_g] over paired generators."""
    w = empty_word(gens)
    for i in range(0, len(gens), 2):
        w = multiply(w, commutator(generator_word(gens, i), generator_word(gens, i + 1)))
    return w


def surface_group(g: int) -> Presentation:
    """Genus-g surface group <a_1,b_1,...,a_g,b_g | [a_1,b_1]...[a_g,b_g]>.

    Genus 0 gives the trivial group with no generators.
    """
    if g < 0:
        raise InvalidGenus("negative genus")
    if g == 0:
        return Presentation((), (), label="pi_0")
    gens = tuple(
        Generator(f"{letter}{i + 1}") for i in range(g) for letter in ("a", "b")
    )
    return Presentation(gens, (surface_relator(gens),), label=f"pi_{g}")


def _rebind(w: Word, alphabet: tuple[Generator, ...], shift: int = 0) -> Word:
    return Word(alphabet, tuple((i + shift, s) for i, s in w.letters))


def free_product(p: Presentation, q: Presentation) -> Presentation:
    """Disjoint union of generators and relators.

    Name clashes in the second factor are resolved by a numeric suffix
    (x -> x_2, x_3, ...), deterministically.
    """
    taken = {g.name for g in p.generators}
    renamed = []
    for g in q.generators:
        name = g.name
        if name in taken:
            k = 2
            while f"{name}_{k}" in taken:
                k += 1
            name = f"{name}_{k}"
        taken.add(name)
        renamed.append(Generator(name))
    gens = p.generators + tuple(renamed)
    shift = len(p.generators)
    relators = tuple(_rebind(r, gens) for r in p.relators) + tuple(
        _rebind(r, gens, shift) for r in q.relators
    )
    return Presentation(gens, relators)


def direct_product(p: Presentation, q: Presentation) -> Presentation:
    """Free product plus all mixed commutators [x, y]."""
    fp = free_product(p, q)
    shift = len(p.generators)
    comms = tuple(
        commutator(generator_word(fp.generators, i), generator_word(fp.generators, shift + j))
        for i in range(len(p.generators))
        for j in range(len(q.generators))
    )
    return Presentation(fp.generators, fp.relators + comms)


def quotient_by_normal_closure(p: Presentation, ws: list[Word]) -> Presentation:
    """Extend p's relators by the cyclically reduced words ws."""
    extra = []
    for w in ws:
        if w.alphabet != p.generators:
            names = {g.name for g in p.generators}
            for g in w.alphabet:
                if g.name not in names:
                    raise UnknownGenerator(g.name)
            w = Word(
                p.generators,
                tuple((p.generators.index(w.alphabet[i]), s) for i, s in w.letters),
            )
        extra.append(cyclic_reduce(w))
    return Presentation(p.generators, p.relators + tuple(extra), label=p.label)


def abelian_presentation(g: FgAbelian) -> Presentation:
    """One generator per free rank (g1, g2, ...) and per invariant factor
    (t1, t2, ...); relators are all pairwise commutators plus t_i^{d_i}."""
    gens = tuple(Generator(f"g{i + 1}") for i in range(g.free_rank)) + tuple(
        Generator(f"t{i + 1}") for i in range(len(g.torsion))
    )
    relators = [
        commutator(generator_word(gens, i), generator_word(gens, j))
        for i in range(len(gens))
        for j in range(i + 1, len(gens))
    ]
    for i, d in enumerate(g.torsion):
        relators.append(Word(gens, ((g.free_rank + i, 1),) * d))
    return Presentation(gens, tuple(relators), label=g.render())


def pinch_presentation_map(g1: int, g2: int) -> GroupHom:
    """Collapse the separating circle: the genus-(g1+g2) surface group onto
    the free product of the genus-g1 and genus-g2 surface groups, matching
    generators pairwise.  The separating circle [a_1,b_1]...[a_g1,b_g1]
    lands on the first factor's relator, so its image abelianizes to zero.
    """
    if g1 < 0 or g2 < 1:
        raise InvalidGenus(f"need g1 >= 0 and g2 >= 1, got ({g1}, {g2})")
    source = surface_group(g1 + g2)
    target = free_product(surface_group(g1), surface_group(g2))
    images = tuple(generator_word(target.generators, i) for i in range(len(source.generators)))
    return GroupHom(source, target, images)


# --- text format ------------------------------------------------------------


def render_presentation(p: Presentation) -> str:
    """group/gens/rel lines; generators and relators in declared order."""
    lines = [f"group {p.label}" if p.label else "group"]
    names = " ".join(g.name for g in p.generators)
    lines.append(f"gens {names}" if names else "gens")
    lines.extend(f"rel {render_word(r)}" for r in p.relators)
    return "\n".join(lines) + "\n"


def parse_presentation(text: str) -> Presentation:
    label: str | None = None
    gens: tuple[Generator, ...] | None = None
    relators: list[Word] = []
    seen_group = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        key, _, rest = line.partition(" ")
        rest = rest.strip()
        if key == "group":
            if seen_group:
                raise FormatError(f"line {lineno}: repeated group line")
            seen_group = True
            label = rest or None
        elif key == "gens":
            if not seen_group:
                raise FormatError(f"line {lineno}: gens before group")
            if gens is not None:
                raise FormatError(f"line {lineno}: repeated gens line")
            try:
                gens = tuple(Generator(name) for name in rest.split())
            except ValueError as e:
                raise FormatError(f"line {lineno}: {e}") from e
        elif key == "rel":
            if gens is None:
                raise FormatError(f"line {lineno}: rel before gens")
            try:
                relators.append(cyclic_reduce(parse_word(rest, gens)))
            except ValueError as e:
                raise FormatError(f"line {lineno}: {e}") from e
        else:
            raise FormatError(f"line {lineno}: unknown directive {key!r}")
    if not seen_group or gens is None:
        raise FormatError("missing group/gens lines")
    try:
        return Presentation(gens, tuple(relators), label=label)
    except ValueError as e:
        raise FormatError(str(e)) from e
