"""Presentation-level fiber sums and the aspherical witness pipeline.

A fibered total space is carried around as its fiber surface
presentation plus extra relators.  Summing with a trivial bundle
Sigma_e x F adjoins base generators x_j, y_j, the base surface relator
and mixed commutators, realizing pi_1(X) x pi_e at the presentation
level.  The short-surjectivity-diagram quotient and the construction
chain behind the witness presentations are the abelian-level engines:
every kernel and quotient funnels through the Smith normal form.
"""

from __future__ import annotations

from dataclasses import dataclass

from .fpgroup import (
    GroupHom,
    InvalidGenus,
    Presentation,
    abelian_presentation,
    compose,
    pinch_presentation_map,
    surface_group,
    surface_relator,
)
from .word import Generator, Word, commutator, generator_word, invert, multiply
from .zlinalg import (
    DimensionMismatch,
    FgAbelian,
    IntMatrix,
    cokernel,
    in_row_lattice,
    is_surjective_onto,
    kernel_basis,
    rank,
)


class NotSurfaceFibered(ValueError):
    pass


class NotSurjective(ValueError):
    pass


class RankTooSmall(ValueError):
    pass


class NotAspherical(ValueError):
    def __init__(self, reason: str):
        super().__init__(f"not symplectically aspherical: {reason}")
        self.reason = reason


@dataclass(frozen=True)
class SurfaceFiberedPresentation:
    """A presentation on the fiber surface generators a_1,b_1,...,a_f,b_f
    whose first relator is the surface relator; the rest are the extra
    relators cutting the total space's fundamental group out of pi_f."""

    fiber_genus: int
    presentation: Presentation

    def __post_init__(self):
        expected = surface_group(self.fiber_genus)
        if self.presentation.generators != expected.generators:
            raise NotSurfaceFibered(
                f"generators must be exactly those of the genus-{self.fiber_genus} "
                "surface group, in order"
            )
        if not self.presentation.relators or self.presentation.relators[0] != expected.relators[0]:
            raise NotSurfaceFibered("first relator must be the surface relator")

    @property
    def extra_relators(self) -> tuple[Word, ...]:
        return self.presentation.relators[1:]


def fiber_sum_with_trivial_bundle(
    x: SurfaceFiberedPresentation,
    e: int,
    action: list[list[Word]] | None = None,
) -> Presentation:
    """Presentation of the fiber sum with Sigma_e x F.

    Generators: the fiber's a_i, b_i followed by base generators
    x_1,y_1,...,x_e,y_e.  Relators: both surface relators, the mixed
    commutators [x_j,a_i], [x_j,b_i], [y_j,a_i], [y_j,b_i], then the
    extra relators of x.  The abelianization is always ab(x) + Z^{2e}.

    `action` optionally replaces the trivial monodromy of the bundle: one
    fiber word per (base generator, fiber generator) pair, giving
    relators u g u^-1 action(u, g)^-1 instead of plain commutators.
    Only the trivial action is exercised by the shipped constructions.
    """
    if e < 1:
        raise InvalidGenus(f"base genus must be at least 1, got {e}")
    f = x.fiber_genus
    fiber_gens = x.presentation.generators
    base_gens = tuple(
        Generator(f"{letter}{j + 1}") for j in range(e) for letter in ("x", "y")
    )
    gens = fiber_gens + base_gens
    if action is not None:
        if len(action) != 2 * e or any(len(row) != 2 * f for row in action):
            raise DimensionMismatch("action table must be (2e) x (2f)")
        for row in action:
            for w in row:
                if w.alphabet != fiber_gens:
                    raise ValueError("action words must be over the fiber generators")

    def fiber_word(w: Word) -> Word:
        return Word(gens, w.letters)

    def base(j: int) -> Word:
        return generator_word(gens, 2 * f + j)

    relators = [fiber_word(x.presentation.relators[0])]
    base_relator = Word(gens, ())
    for j in range(e):
        base_relator = multiply(base_relator, commutator(base(2 * j), base(2 * j + 1)))
    relators.append(base_relator)
    for j in range(e):
        for i in range(f):
            for u_idx in (2 * j, 2 * j + 1):
                for g_idx in (2 * i, 2 * i + 1):
                    u = base(u_idx)
                    g = generator_word(gens, g_idx)
                    if action is None:
                        relators.append(commutator(u, g))
                    else:
                        conj = multiply(multiply(u, g), invert(u))
                        relators.append(
                            multiply(conj, invert(fiber_word(action[u_idx][g_idx])))
                        )
    relators.extend(fiber_word(r) for r in x.extra_relators)
    return Presentation(gens, tuple(relators))


@dataclass(frozen=True)
class SsdData:
    """Abelianized short surjectivity diagram: j: A -> B, an epimorphism
    phi: A -> P, and relation matrices presenting A, B and P."""

    j_matrix: IntMatrix
    phi_matrix: IntMatrix
    a_relations: IntMatrix
    b_relations: IntMatrix
    p_relations: IntMatrix

    def __post_init__(self):
        na = self.j_matrix.cols
        if self.phi_matrix.cols != na or self.a_relations.cols != na:
            raise DimensionMismatch("inconsistent generator count for A")
        if self.b_relations.cols != self.j_matrix.rows:
            raise DimensionMismatch("inconsistent generator count for B")
        if self.p_relations.cols != self.phi_matrix.rows:
            raise DimensionMismatch("inconsistent generator count for P")


def ssd_quotient(d: SsdData) -> FgAbelian:
    """B modulo j(Ker phi), computed at the abelian level.

    Ker phi is the preimage lattice of P's relation lattice under phi,
    found as the kernel of the block matrix [phi | -relations^T]; its
    generators are pushed through j and quotiented out of B.
    """
    na = d.phi_matrix.cols
    np_ = d.phi_matrix.rows
    rp = d.p_relations.rows
    if not is_surjective_onto(d.phi_matrix, cokernel(d.p_relations), d.p_relations):
        raise NotSurjective("phi is not surjective at the abelian level")
    for r in d.a_relations.to_rows():
        if not in_row_lattice(d.phi_matrix.apply(r), d.p_relations):
            raise ValueError("phi does not respect A's relations")
        if not in_row_lattice(d.j_matrix.apply(r), d.b_relations):
            raise ValueError("j does not respect A's relations")
    block_rows = [
        list(d.phi_matrix.row(i)) + [-d.p_relations.at(j, i) for j in range(rp)]
        for i in range(np_)
    ]
    block = IntMatrix.from_rows(block_rows, cols=na + rp)
    kernel_gens = [vec[:na] for vec in kernel_basis(block)]
    kernel_gens.extend(tuple(r) for r in d.a_relations.to_rows())
    pushed = [list(d.j_matrix.apply(list(k))) for k in kernel_gens]
    pushed.extend(d.b_relations.to_rows())
    return cokernel(IntMatrix.from_rows(pushed, cols=d.j_matrix.rows))


def presentation_chain_for(gamma: FgAbelian) -> tuple[GroupHom, int]:
    """The construction chain onto an abelian group of free rank >= 2.

    With r the generator count of gamma's presentation and h = 2r: pinch
    a genus-(h+1) surface onto pi_h * pi_1, send a_1..a_r of the first
    factor over gamma's generators (killing the other surface
    generators), and send the torus factor isomorphically onto gamma's
    last two free generators.  Returns the composite pi_g -> gamma's
    presentation together with g; its abelianized matrix is surjective.
    """
    m = rank(gamma)
    if m < 2:
        raise RankTooSmall(f"need free rank at least 2, got {m}")
    target = abelian_presentation(gamma)
    r = len(target.generators)
    h = 2 * r
    pinch = pinch_presentation_map(h, 1)
    middle = pinch.target
    trivial = Word(target.generators, ())

    def tgt(i: int) -> Word:
        return generator_word(target.generators, i)

    collapse: list[Word] = []
    for i in range(h):
        collapse.append(tgt(i) if i < r else trivial)  # a_{i+1}
        collapse.append(trivial)  # b_{i+1}
    collapse.append(tgt(m - 2))  # torus factor onto the last two
    collapse.append(tgt(m - 1))  # free generators of gamma
    phi = GroupHom(middle, target, tuple(collapse))
    return compose(pinch, phi), h + 1


def witness_presentation(gamma: FgAbelian) -> Presentation:
    """A presentation abelianizing to gamma, built the way the existence
    direction of the classification does it.

    Z^2 gets the torus group.  Rank m >= 4 splits as A + Z^2 with
    A = Z^{m-2} + torsion: the chain for A yields a fibered presentation
    whose quotient is exactly A, and the trivial-bundle fiber sum with
    base genus 1 adjoins the Z^2 factor.  Everything else is rejected.
    """
    m = rank(gamma)
    if gamma == FgAbelian(2):
        p = surface_group(1)
        return Presentation(p.generators, p.relators, label=f"witness {gamma.render()}")
    if m < 2:
        reason = "free rank 0 or 1"
    elif m == 2:
        reason = "free rank 2 with torsion"
    elif m == 3:
        reason = "free rank 3"
    else:
        reason = None
    if reason is not None:
        raise NotAspherical(reason)

    a = FgAbelian(m - 2, gamma.torsion)
    hom, g = presentation_chain_for(a)
    gens = hom.source.generators
    m_prime = a.free_rank
    r = m_prime + len(a.torsion)
    h = 2 * r

    def gen(i: int, sign: int = 1) -> Word:
        return generator_word(gens, i, sign)

    # Normal generators of the chain's kernel: the killed generators, the
    # identification of the torus pair a_g, b_g with the two surface
    # generators hitting the same free generators of A, commutators making
    # the survivors commute, and the torsion powers.
    relators: list[Word] = []
    for i in range(h):
        relators.append(gen(2 * i + 1))  # b_{i+1}
    for j in range(r, h):
        relators.append(gen(2 * j))  # a_{j+1} beyond the generator range
    relators.append(multiply(gen(2 * h), gen(2 * (m_prime - 2), -1)))
    relators.append(multiply(gen(2 * h + 1), gen(2 * (m_prime - 1), -1)))
    for i in range(r):
        for j in range(i + 1, r):
            relators.append(commutator(gen(2 * i), gen(2 * j)))
    for t, dt in enumerate(a.torsion):
        relators.append(Word(gens, ((2 * (m_prime + t), 1),) * dt))

    fibered = SurfaceFiberedPresentation(
        g,
        Presentation(gens, (surface_relator(gens),) + tuple(relators)),
    )
    result = fiber_sum_with_trivial_bundle(fibered, 1)
    return Presentation(result.generators, result.relators, label=f"witness {gamma.render()}")
