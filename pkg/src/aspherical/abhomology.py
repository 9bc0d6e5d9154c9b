"""Integral homology of finitely generated abelian groups.

Homology is assembled structurally: closed formulas for the cyclic
building blocks, then the Kunneth formula

    H_n(G x H) = sum_{i+j=n} H_i(G) (x) H_j(H)  +  sum_{i+j=n-1} Tor(H_i(G), H_j(H))

iterated over the cyclic factors.  Real cohomology only sees the free
rank, which gives binomial coefficients and the cohomological dimension.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .zlinalg import FgAbelian, rank

DEFAULT_DEGREE_CAP = 8


class InvalidModulus(ValueError):
    pass


class InsufficientDegrees(ValueError):
    pass


@dataclass(frozen=True)
class GradedAbelian:
    """Homology groups indexed by degree 0..N."""

    groups: tuple[FgAbelian, ...]

    @property
    def top_degree(self) -> int:
        return len(self.groups) - 1


def homology_cyclic(n: int, k: int) -> FgAbelian:
    """H_k of the cyclic group of order n (n = 0 meaning Z, n = 1 trivial).

    Z has Z in degrees 0 and 1; Z/n has Z in degree 0, Z/n in odd degrees
    and nothing in positive even degrees.

    >>> print(homology_cyclic(2, 3).render())
    Z/2
    >>> print(homology_cyclic(0, 1).render())
    Z
    >>> print(homology_cyclic(2, 2).render())
    0
    """
    if n < 0:
        raise InvalidModulus(f"modulus {n}")
    if k < 0:
        raise ValueError(f"degree {k}")
    if k == 0:
        return FgAbelian(1)
    if n == 0:
        return FgAbelian(1) if k == 1 else FgAbelian(0)
    if n == 1:
        return FgAbelian(0)
    return FgAbelian(0, (n,)) if k % 2 else FgAbelian(0)


def graded_cyclic(n: int, max_degree: int) -> GradedAbelian:
    return GradedAbelian(tuple(homology_cyclic(n, k) for k in range(max_degree + 1)))


def _cyclic_factors(g: FgAbelian) -> tuple[int, ...]:
    return g.cyclic_orders()


def tensor(a: FgAbelian, b: FgAbelian) -> FgAbelian:
    """Z(x)Z = Z, Z(x)Z/n = Z/n, Z/m(x)Z/n = Z/gcd(m,n), extended additively.

    >>> print(tensor(FgAbelian(2), FgAbelian(0, (2,))).render())
    Z/2 + Z/2
    >>> print(tensor(FgAbelian(0, (4,)), FgAbelian(0, (6,))).render())
    Z/2
    """
    orders = []
    for x in _cyclic_factors(a):
        for y in _cyclic_factors(b):
            if x == 0:
                orders.append(y)
            elif y == 0:
                orders.append(x)
            else:
                orders.append(math.gcd(x, y))
    return FgAbelian.from_cyclic_orders(orders)


def tor(a: FgAbelian, b: FgAbelian) -> FgAbelian:
    """Tor(Z, anything) = 0 and Tor(Z/m, Z/n) = Z/gcd(m,n), extended additively."""
    orders = [
        math.gcd(x, y) for x in a.torsion for y in b.torsion
    ]
    return FgAbelian.from_cyclic_orders(orders)


def kunneth(ha: GradedAbelian, hb: GradedAbelian, n: int) -> FgAbelian:
    """Degree-n homology of a product from the factors' graded homology."""
    if ha.top_degree < n or hb.top_degree < n:
        raise InsufficientDegrees(
            f"need degrees through {n}, have {ha.top_degree} and {hb.top_degree}"
        )
    out = FgAbelian(0)
    for i in range(n + 1):
        out = out.direct_sum(tensor(ha.groups[i], hb.groups[n - i]))
    for i in range(n):
        out = out.direct_sum(tor(ha.groups[i], hb.groups[n - 1 - i]))
    return out


def group_homology_graded(g: FgAbelian, max_degree: int = DEFAULT_DEGREE_CAP) -> GradedAbelian:
    """H_0..H_max of g, folding Kunneth over its cyclic factors."""
    acc = graded_cyclic(1, max_degree)
    for n in _cyclic_factors(g):
        block = graded_cyclic(n, max_degree)
        acc = GradedAbelian(tuple(kunneth(acc, block, k) for k in range(max_degree + 1)))
    return acc


def group_homology(g: FgAbelian, k: int) -> FgAbelian:
    """
    >>> print(group_homology(FgAbelian(4), 3).render())
    Z^4
    >>> print(group_homology(FgAbelian(4, (2,)), 3).render())
    Z^4 + Z/2 + Z/2 + Z/2 + Z/2 + Z/2 + Z/2 + Z/2
    """
    return group_homology_graded(g, max_degree=k).groups[k]


def factor_homology_sum(g: FgAbelian, k: int) -> FgAbelian:
    """H_k of the free part plus H_k of each invariant factor.

    Always a direct summand of the full H_k(g); the difference is the
    cross terms the Kunneth formula contributes.
    """
    out = FgAbelian(math.comb(g.free_rank, k))
    for d in g.torsion:
        out = out.direct_sum(homology_cyclic(d, k))
    return out


def real_cohomology_rank(g: FgAbelian, k: int) -> int:
    """dim H^k(g; R): torsion dies over the reals, the free part gives an
    exterior algebra, so the answer is binomial(rank, k)."""
    if k < 0:
        raise ValueError(f"degree {k}")
    return math.comb(rank(g), k)


def real_cohomological_dimension(g: FgAbelian) -> int:
    """Largest k with H^k(g; R) nonzero; equals the free rank."""
    for k in range(rank(g), -1, -1):
        if real_cohomology_rank(g, k) > 0:
            return k
    return 0
