"""Exact integer linear algebra over arbitrary-precision integers.

Everything abelian funnels through here: Smith normal form with
unimodular transforms, cokernels in invariant-factor form, and the
epimorphism test between finitely generated abelian groups.  Matrices
are immutable and dense; all arithmetic is exact Python int arithmetic
(intermediate Smith entries can grow well past machine words).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING, Iterable, Sequence

from .word import exponent_sum

if TYPE_CHECKING:
    from .fpgroup import GroupHom, Presentation


class DimensionMismatch(ValueError):
    pass


@dataclass(frozen=True)
class IntMatrix:
    """A rows x cols integer matrix, entries stored row-major."""

    rows: int
    cols: int
    entries: tuple[int, ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValueError("negative dimensions")
        if len(self.entries) != self.rows * self.cols:
            raise ValueError("entry count does not match dimensions")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], cols: int | None = None) -> "IntMatrix":
        if rows:
            width = len(rows[0])
            if cols is not None and cols != width:
                raise DimensionMismatch(f"rows of width {width}, expected {cols}")
        else:
            width = cols if cols is not None else 0
        flat: list[int] = []
        for r in rows:
            if len(r) != width:
                raise DimensionMismatch("ragged rows")
            flat.extend(int(x) for x in r)
        return cls(len(rows), width, tuple(flat))

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls(n, n, tuple(1 if i == j else 0 for i in range(n) for j in range(n)))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntMatrix":
        return cls(rows, cols, (0,) * (rows * cols))

    def at(self, i: int, j: int) -> int:
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def to_rows(self) -> list[list[int]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def transpose(self) -> "IntMatrix":
        return IntMatrix(
            self.cols,
            self.rows,
            tuple(self.at(i, j) for j in range(self.cols) for i in range(self.rows)),
        )

    def mul(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise DimensionMismatch(f"{self.rows}x{self.cols} times {other.rows}x{other.cols}")
        flat = []
        for i in range(self.rows):
            ri = self.row(i)
            for j in range(other.cols):
                flat.append(sum(ri[k] * other.at(k, j) for k in range(self.cols)))
        return IntMatrix(self.rows, other.cols, tuple(flat))

    def apply(self, vector: Sequence[int]) -> tuple[int, ...]:
        """Matrix times column vector."""
        if len(vector) != self.cols:
            raise DimensionMismatch(f"vector of length {len(vector)}, expected {self.cols}")
        return tuple(sum(self.row(i)[k] * vector[k] for k in range(self.cols)) for i in range(self.rows))

    def render(self) -> str:
        return "\n".join(" ".join(str(x) for x in self.row(i)) for i in range(self.rows))


def parse_matrix(text: str) -> IntMatrix:
    """Rows of space-separated integers, one row per line."""
    rows = []
    for line in text.splitlines():
        line = line.strip()
        if not line:
            continue
        try:
            rows.append([int(tok) for tok in line.split()])
        except ValueError:
            raise ValueError(f"bad matrix row {line!r}") from None
    return IntMatrix.from_rows(rows)


@dataclass(frozen=True)
class SmithDecomposition:
    """u * a * v = d with u, v unimodular and d diagonal in divisor-chain form."""

    d: IntMatrix
    u: IntMatrix
    v: IntMatrix

    @property
    def diagonal(self) -> tuple[int, ...]:
        return tuple(self.d.at(i, i) for i in range(min(self.d.rows, self.d.cols)))


def _pivot(m: list[list[int]], k: int, rows: int, cols: int) -> tuple[int, int] | None:
    # Smallest nonzero absolute value; ties broken by lowest (row, col).
    best = None
    best_abs = None
    for i in range(k, rows):
        mi = m[i]
        for j in range(k, cols):
            x = mi[j]
            if x and (best_abs is None or abs(x) < best_abs):
                best, best_abs = (i, j), abs(x)
                if best_abs == 1:
                    return best
    return best


def smith_normal_form(a: IntMatrix) -> SmithDecomposition:
    """Diagonalize by unimodular row/column operations.

    The pivot rule (smallest absolute value, lowest position on ties) makes
    the sequence of operations, and hence u and v, deterministic.
    """
    rows, cols = a.rows, a.cols
    d = a.to_rows()
    u = IntMatrix.identity(rows).to_rows()
    v = IntMatrix.identity(cols).to_rows()
    k = 0
    while k < rows and k < cols:
        piv = _pivot(d, k, rows, cols)
        if piv is None:
            break
        _swap_to(d, u, v, k, piv)
        while True:
            dirty = False
            for i in range(k + 1, rows):
                if d[i][k]:
                    q = d[i][k] // d[k][k]
                    if q:
                        _row_sub(d, i, k, q)
                        _row_sub(u, i, k, q)
                    if d[i][k]:
                        dirty = True
            for j in range(k + 1, cols):
                if d[k][j]:
                    q = d[k][j] // d[k][k]
                    if q:
                        _col_sub(d, j, k, q)
                        _col_sub(v, j, k, q)
                    if d[k][j]:
                        dirty = True
            if dirty:
                _swap_to(d, u, v, k, _pivot(d, k, rows, cols))
                continue
            bad = _nondivisible(d, k, rows, cols)
            if bad is None:
                break
            # Fold the offending row into row k so the pivot can shrink to
            # the gcd on the next sweep.
            _row_add(d, k, bad[0])
            _row_add(u, k, bad[0])
        if d[k][k] < 0:
            _negate_row(d, k)
            _negate_row(u, k)
        k += 1
    return SmithDecomposition(
        IntMatrix.from_rows(d, cols=cols),
        IntMatrix.from_rows(u, cols=rows),
        IntMatrix.from_rows(v, cols=cols),
    )


def _swap_to(d, u, v, k, piv):
    i, j = piv
    if i != k:
        d[k], d[i] = d[i], d[k]
        u[k], u[i] = u[i], u[k]
    if j != k:
        for row in d:
            row[k], row[j] = row[j], row[k]
        for row in v:
            row[k], row[j] = row[j], row[k]


def _row_sub(m, i, k, q):
    mi, mk = m[i], m[k]
    for j in range(len(mi)):
        mi[j] -= q * mk[j]


def _row_add(m, k, i):
    mk, mi = m[k], m[i]
    for j in range(len(mk)):
        mk[j] += mi[j]


def _col_sub(m, j, k, q):
    for row in m:
        row[j] -= q * row[k]


def _negate_row(m, k):
    m[k] = [-x for x in m[k]]


def _nondivisible(m, k, rows, cols) -> tuple[int, int] | None:
    p = m[k][k]
    for i in range(k + 1, rows):
        mi = m[i]
        for j in range(k + 1, cols):
            if mi[j] % p:
                return (i, j)
    return None


def determinant(a: IntMatrix) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    if a.rows != a.cols:
        raise DimensionMismatch("determinant of a non-square matrix")
    n = a.rows
    if n == 0:
        return 1
    m = a.to_rows()
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k]:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


# --- finitely generated abelian groups -------------------------------------


def _factorize(n: int) -> dict[int, int]:
    out: dict[int, int] = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1 if p == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


@dataclass(frozen=True)
class FgAbelian:
    """Z^free_rank plus torsion in invariant-factor (divisor chain) form.

    Equality of values is isomorphism of groups.
    """

    free_rank: int
    torsion: tuple[int, ...] = ()

    def __post_init__(self):
        if self.free_rank < 0:
            raise ValueError("negative free rank")
        for i, d in enumerate(self.torsion):
            if d < 2:
                raise ValueError(f"invariant factor {d} < 2")
            if i and self.torsion[i] % self.torsion[i - 1]:
                raise ValueError(f"broken divisor chain {self.torsion}")

    @classmethod
    def from_cyclic_orders(cls, orders: Iterable[int]) -> "FgAbelian":
        """Normalize a list of cyclic orders (0 meaning Z, 1 dropped).

        >>> FgAbelian.from_cyclic_orders([2, 3])
        FgAbelian(free_rank=0, torsion=(6,))
        >>> print(FgAbelian.from_cyclic_orders([0, 4, 6]).render())
        Z + Z/2 + Z/12
        """
        rank = 0
        primary: dict[int, list[int]] = {}
        for n in orders:
            n = abs(int(n))
            if n == 0:
                rank += 1
            elif n > 1:
                for p, e in _factorize(n).items():
                    primary.setdefault(p, []).append(e)
        return cls(rank, _chain_from_primary(primary))

    @property
    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.torsion

    def cyclic_orders(self) -> tuple[int, ...]:
        return (0,) * self.free_rank + self.torsion

    def direct_sum(self, other: "FgAbelian") -> "FgAbelian":
        return FgAbelian.from_cyclic_orders(self.cyclic_orders() + other.cyclic_orders())

    def contains_summand(self, other: "FgAbelian") -> bool:
        """True when self is isomorphic to other plus a complement."""
        if other.free_rank > self.free_rank:
            return False
        mine = primary_decomposition(self)
        for p, exps in primary_decomposition(other).items():
            pool = list(mine.get(p, ()))
            for e in exps:
                if e not in pool:
                    return False
                pool.remove(e)
        return True

    def render(self) -> str:
        parts = []
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank:
            parts.append(f"Z^{self.free_rank}")
        parts.extend(f"Z/{d}" for d in self.torsion)
        return " + ".join(parts) if parts else "0"


def _chain_from_primary(primary: dict[int, list[int]]) -> tuple[int, ...]:
    work = {p: sorted(es, reverse=True) for p, es in primary.items() if es}
    chain: list[int] = []
    while work:
        d = 1
        for p in sorted(work):
            d *= p ** work[p][0]
        for p in list(work):
            work[p] = work[p][1:]
            if not work[p]:
                del work[p]
        chain.append(d)
    chain.reverse()
    return tuple(chain)


def cokernel(a: IntMatrix) -> FgAbelian:
    """Z^cols modulo the row lattice of `a`, in invariant-factor form."""
    diag = smith_normal_form(a).diagonal
    nonzero = [x for x in diag if x]
    return FgAbelian(a.cols - len(nonzero), tuple(x for x in nonzero if x > 1))


def abelianization(p: "Presentation") -> FgAbelian:
    """Cokernel of the relator exponent matrix."""
    return cokernel(relator_matrix(p))


def relator_matrix(p: "Presentation") -> IntMatrix:
    """Rows are relator exponent vectors, columns follow generator order."""
    from .word import exponent_vector

    return IntMatrix.from_rows(
        [list(exponent_vector(r)) for r in p.relators], cols=len(p.generators)
    )


def rank(g: FgAbelian) -> int:
    return g.free_rank


def primary_decomposition(g: FgAbelian) -> dict[int, tuple[int, ...]]:
    """Torsion as prime -> descending prime-power exponents."""
    out: dict[int, list[int]] = {}
    for d in g.torsion:
        for p, e in _factorize(d).items():
            out.setdefault(p, []).append(e)
    return {p: tuple(sorted(es, reverse=True)) for p, es in sorted(out.items())}


def exists_epimorphism(a: FgAbelian, b: FgAbelian) -> bool:
    """Whether some surjective homomorphism a -> b exists.

    Criterion: rank(a) >= rank(b), and for every prime p and every k >= 1
    the count rank(a) + #{exponents of a at p that are >= k} dominates the
    same count for b.  Validated against exhaustive homomorphism
    enumeration in the acceptance suite.
    """
    if a.free_rank < b.free_rank:
        return False
    pa = primary_decomposition(a)
    for p, exps_b in primary_decomposition(b).items():
        exps_a = pa.get(p, ())
        for k in range(1, exps_b[0] + 1):
            count_a = sum(1 for e in exps_a if e >= k)
            count_b = sum(1 for e in exps_b if e >= k)
            if a.free_rank + count_a < b.free_rank + count_b:
                return False
    return True


def induced_matrix(f: "GroupHom") -> IntMatrix:
    """Abelianized homomorphism: entry (i, j) counts target generator i in
    the image of source generator j."""
    tgt = f.target.generators
    flat = []
    for g in tgt:
        flat.extend(exponent_sum(f.images[j], g) for j in range(len(f.images)))
    return IntMatrix(len(tgt), len(f.images), tuple(flat))


def is_surjective_onto(
    f_matrix: IntMatrix, target: FgAbelian, target_relations: IntMatrix
) -> bool:
    """Whether the columns of f_matrix generate Z^n modulo target_relations."""
    if f_matrix.rows != target_relations.cols:
        raise DimensionMismatch(
            f"map into Z^{f_matrix.rows} but relations over Z^{target_relations.cols}"
        )
    if cokernel(target_relations) != target:
        raise ValueError("target group does not match its relation matrix")
    rows = [[f_matrix.at(i, j) for i in range(f_matrix.rows)] for j in range(f_matrix.cols)]
    rows.extend(target_relations.to_rows())
    return cokernel(IntMatrix.from_rows(rows, cols=f_matrix.rows)).is_trivial


def kernel_basis(a: IntMatrix) -> list[tuple[int, ...]]:
    """A lattice basis of {x : a x = 0} (columns of v at zero diagonal)."""
    snf = smith_normal_form(a)
    diag = snf.diagonal
    basis = []
    for j in range(a.cols):
        if j >= len(diag) or diag[j] == 0:
            basis.append(tuple(snf.v.at(i, j) for i in range(a.cols)))
    return basis


def in_row_lattice(vector: Sequence[int], rows_matrix: IntMatrix) -> bool:
    """Whether `vector` is an integer combination of the matrix rows."""
    if len(vector) != rows_matrix.cols:
        raise DimensionMismatch(
            f"vector of length {len(vector)} against width {rows_matrix.cols}"
        )
    snf = smith_normal_form(rows_matrix)
    diag = snf.diagonal
    for j in range(rows_matrix.cols):
        wj = sum(vector[i] * snf.v.at(i, j) for i in range(rows_matrix.cols))
        dj = diag[j] if j < len(diag) else 0
        if dj == 0:
            if wj:
                return False
        elif wj % dj:
            return False
    return True
