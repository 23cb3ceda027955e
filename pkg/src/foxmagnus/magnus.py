"""Magnus representations over Laurent polynomial rings.

Matrices act on row vectors from the right: row ``i`` of ``magnus_matrix(e)``
is the image of the basis vector ``e_i``.  With the left-to-right
composition of endomorphisms this makes ``rho(a * b) == rho(a) @ rho(b)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence, Union

from .fox import abelianized_jacobian
from .rings import LaurentPoly, Phi, abelianize
from .words import Endomorphism, FreeWord, Gen, GeneratorWord, WordError, perm


class PhiIncompatible(ValueError):
    """The automorphism does not preserve the abelianizing map."""


class NotConjugating(ValueError):
    """Some generator image is not a conjugate of a generator."""


class ClosureNotKnot(ValueError):
    """The braid closure has more than one component."""


class DivisionFails(ArithmeticError):
    """An exact polynomial division that must succeed did not."""


@dataclass(frozen=True, eq=True)
class RepMatrix:
    """Square matrix of Laurent polynomials tagged with its specialization."""

    rows: tuple[tuple[LaurentPoly, ...], ...]
    phi: Phi

    def __post_init__(self):
        dim = len(self.rows)
        if any(len(r) != dim for r in self.rows):
            raise ValueError("matrix must be square")
        names = {p.names for r in self.rows for p in r}
        if len(names) > 1:
            raise ValueError(f"entries mix variable sets {sorted(names)}")

    @property
    def dim(self) -> int:
        return len(self.rows)

    @property
    def names(self) -> tuple[str, ...]:
        return self.rows[0][0].names if self.rows else ()

    @classmethod
    def identity(cls, dim: int, phi: Phi, names: Sequence[str]) -> RepMatrix:
        one, zero = LaurentPoly.const(1, names), LaurentPoly.zero(names)
        return cls(tuple(tuple(one if i == j else zero for j in range(dim)) for i in range(dim)), phi)

    @classmethod
    def from_rows(cls, rows, phi: Phi) -> RepMatrix:
        return cls(tuple(tuple(r) for r in rows), phi)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __matmul__(self, other: RepMatrix) -> RepMatrix:
        if self.dim != other.dim or self.names != other.names:
            raise ValueError("matrix shapes or rings differ")
        n = self.dim
        zero = LaurentPoly.zero(self.names)
        rows = []
        for i in range(n):
            row = []
            for j in range(n):
                acc = zero
                for k in range(n):
                    a = self.rows[i][k]
                    if a:
                        b = other.rows[k][j]
                        if b:
                            acc = acc + a * b
                row.append(acc)
            rows.append(tuple(row))
        return RepMatrix(tuple(rows), self.phi)

    __mul__ = __matmul__

    def __sub__(self, other: RepMatrix) -> RepMatrix:
        return RepMatrix(
            tuple(tuple(a - b for a, b in zip(r, s)) for r, s in zip(self.rows, other.rows)),
            self.phi,
        )

    def is_identity(self) -> bool:
        return all(
            self.rows[i][j] == (1 if i == j else 0) for i in range(self.dim) for j in range(self.dim)
        )

    def specialize(self) -> RepMatrix:
        """Set every ``t_i`` equal to ``t``."""
        return RepMatrix(tuple(tuple(p.specialize() for p in r) for r in self.rows), Phi.BURAU)

    def det(self) -> LaurentPoly:
        return determinant(self.rows, self.names)

    def to_json(self) -> dict:
        return {
            "dim": self.dim,
            "spec": self.phi.value,
            "rows": [[p.to_terms() for p in r] for r in self.rows],
        }

    def pretty(self) -> str:
        cells = [[str(p) for p in r] for r in self.rows]
        widths = [max(len(cells[i][j]) for i in range(self.dim)) for j in range(self.dim)]
        lines = ["[ " + "  ".join(c.ljust(w) for c, w in zip(r, widths)) + " ]" for r in cells]
        return "\n".join(lines)

    def __str__(self) -> str:
        return self.pretty()


def determinant(rows, names) -> LaurentPoly:
    """Exact determinant by Laplace expansion over column subsets."""
    n = len(rows)
    if n == 0:
        return LaurentPoly.const(1, names)

    @lru_cache(maxsize=None)
    def minor(r: int, used: int) -> LaurentPoly:
        if r == n:
            return LaurentPoly.const(1, names)
        acc = LaurentPoly.zero(names)
        sign = 1
        for c in range(n):
            if used >> c & 1:
                continue
            entry = rows[r][c]
            if entry:
                term = entry * minor(r + 1, used | 1 << c)
                acc = acc + term if sign > 0 else acc - term
            sign = -sign
        return acc

    return minor(0, 0)


def _check_phi(e: Endomorphism, phi: Phi):
    n = e.rank
    for k, w in enumerate(e.images, start=1):
        if abelianize(w, phi) != abelianize(FreeWord.gen(n, k), phi):
            raise PhiIncompatible(
                f"x{k} -> {w or '1'} changes the {phi.value} abelianization; "
                + ("use the burau specialization or a pure braid" if phi is Phi.GASSNER else "not a braid-like map")
            )


def magnus_matrix(e: Endomorphism, phi: Phi) -> RepMatrix:
    """Entry ``(i, j)`` is the abelianized derivative of ``x_i^e`` by ``x_j``."""
    _check_phi(e, phi)
    rows = tuple(abelianized_jacobian(w, phi) for w in e.images)
    return RepMatrix(rows, phi)


def gassner(r: int, s: int, n: int) -> RepMatrix:
    """Gassner matrix of the pure braid generator a_rs, written out row by row."""
    if not 1 <= r < s <= n:
        raise WordError(f"gassner({r},{s}) needs 1 <= r < s <= {n}")
    t = LaurentPoly.gassner_vars(n)
    names = t[0].names
    m = [list(row) for row in RepMatrix.identity(n, Phi.GASSNER, names).rows]
    tr, ts = t[r - 1], t[s - 1]
    zero = LaurentPoly.zero(names)
    m[r - 1][r - 1] = 1 - tr + tr * ts
    m[r - 1][s - 1] = tr * (1 - tr)
    for k in range(r + 1, s):
        tk = t[k - 1]
        m[k - 1][r - 1] = (tk - 1) * (ts - 1)
        m[k - 1][s - 1] = (tk - 1) * (1 - tr)
    m[s - 1][r - 1] = 1 - ts
    m[s - 1][s - 1] = tr + zero
    return RepMatrix.from_rows(m, Phi.GASSNER)


@lru_cache(maxsize=4096)
def generator_matrix(g: Gen, n: int, phi: Phi) -> RepMatrix:
    return magnus_matrix(g.endomorphism(n), phi)


def rho(word: GeneratorWord, phi: Phi = Phi.GASSNER) -> RepMatrix:
    """Product of generator matrices in word order."""
    n = word.rank
    out = RepMatrix.identity(n, phi, phi.names(n))
    for g in word.letters:
        out = out @ generator_matrix(g, n, phi)
    return out


def rho_hat_G(word: GeneratorWord) -> RepMatrix:
    """The Gassner extension on basis-conjugating automorphisms (words in ``e[i,j]``)."""
    bad = [str(g) for g in word.letters if g.kind != "e"]
    if bad:
        raise WordError(f"not a word in e[i,j] generators: {' '.join(bad)}")
    return rho(word, Phi.GASSNER)


Conjugating = Union[Endomorphism, GeneratorWord]


def rho_hat_B(e: Conjugating) -> RepMatrix:
    """The Burau extension on conjugating automorphisms."""
    from .braids import is_conjugating

    if isinstance(e, GeneratorWord):
        e = e.endomorphism()
    if is_conjugating(e) is None:
        raise NotConjugating(f"{e} is not a conjugating automorphism")
    return magnus_matrix(e, Phi.BURAU)


def rho_hat_B_split(e: Conjugating) -> RepMatrix:
    """Same representation assembled from the decomposition ``e = perm * c``.

    ``c`` is basis-conjugating; its Gassner matrix is specialized to ``t`` and
    multiplied onto the permutation matrix.
    """
    from .braids import is_conjugating

    if isinstance(e, GeneratorWord):
        e = e.endomorphism()
    info = is_conjugating(e)
    if info is None:
        raise NotConjugating(f"{e} is not a conjugating automorphism")
    p = perm(info.permutation, e.rank)
    c = p.inverse() * e
    return magnus_matrix(p, Phi.BURAU) @ magnus_matrix(c, Phi.GASSNER).specialize()


def _unimodular_basis(n: int, names):
    one, zero = LaurentPoly.const(1, names), LaurentPoly.zero(names)
    # rows e_i - e_{i+1} (i < n) and e_n; inverse is the upper-triangular all-ones matrix
    P = [[zero] * n for _ in range(n)]
    for i in range(n - 1):
        P[i][i], P[i][i + 1] = one, -one
    P[n - 1][n - 1] = one
    Pinv = [[one if i <= j else zero for j in range(n)] for i in range(n)]
    return RepMatrix.from_rows(P, Phi.BURAU), RepMatrix.from_rows(Pinv, Phi.BURAU)


def reduced_burau(m: RepMatrix) -> RepMatrix:
    """The ``(n-1)``-dimensional block on the sum-zero row vectors.

    In the basis ``e_1 - e_2, ..., e_{n-1} - e_n, e_n`` the matrix becomes
    block lower triangular with last column ``(0, ..., 0, 1)``.
    """
    if m.phi is not Phi.BURAU or m.names != ("t",):
        raise PhiIncompatible("reduced_burau needs a matrix over Z[t, t^-1] from the burau specialization")
    n = m.dim
    P, Pinv = _unimodular_basis(n, m.names)
    q = P @ m @ Pinv
    for i in range(n):
        if q[i, n - 1] != (1 if i == n - 1 else 0):
            raise PhiIncompatible("matrix does not fix the all-ones column vector")
    return RepMatrix(tuple(r[: n - 1] for r in q.rows[: n - 1]), Phi.BURAU)


def alexander_polynomial(braid, strands: int | None = None) -> LaurentPoly:
    """Normalized Alexander polynomial of the closure of a braid whose closure is a knot.

    ``det(reduced_burau(b) - I)`` is divided by ``1 + t + ... + t^(n-1)``.
    """
    from .braids import BraidWord, braid_to_endo

    if not isinstance(braid, BraidWord):
        if strands is None:
            raise ValueError("strands is required unless a BraidWord is given")
        braid = BraidWord.parse(braid, strands) if isinstance(braid, str) else BraidWord(strands, tuple(braid))
    n = braid.strands
    if not braid.permutation().is_full_cycle():
        raise ClosureNotKnot(f"closure of {braid} has more than one component")
    red = reduced_burau(rho_hat_B(braid_to_endo(braid)))
    names = ("t",)
    d = (red - RepMatrix.identity(red.dim, Phi.BURAU, names)).det()
    cyclo = LaurentPoly(names, {(k,): 1 for k in range(n)})
    try:
        q = d.exact_divide(cyclo)
    except ArithmeticError as exc:
        raise DivisionFails(str(exc)) from exc
    return q.normalized()
