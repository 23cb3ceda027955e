"""Fox free derivatives on ZF_n and the criteria built on them."""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass

from .rings import GroupRingElem, LaurentPoly, Phi, trivialize
from .words import FreeWord, WordError


def _word_derivative(w: FreeWord, j: int) -> dict[FreeWord, int]:
    # d(l_1 ... l_m)/dx_j = sum over positions of prefix * d(l_p)/dx_j
    out: dict[FreeWord, int] = defaultdict(int)
    letters = w.letters
    for p, a in enumerate(letters):
        if a == j:
            out[FreeWord(w.rank, letters[:p])] += 1
        elif a == -j:
            out[FreeWord(w.rank, letters[: p + 1])] -= 1
    return out


def abelianized_jacobian(w: FreeWord, phi: Phi) -> tuple[LaurentPoly, ...]:
    """``(dw/dx_j)^phi`` for every j in one pass over ``w``.

    Equal to ``abelianize(fox_derivative(w, j), phi)`` but only tracks the
    abelianized prefix, so it stays linear in the length of ``w``.
    """
    n = w.rank
    gassner = phi is Phi.GASSNER
    prefix = [0] * (n if gassner else 1)
    out: list[dict] = [defaultdict(int) for _ in range(n)]
    for a in w.letters:
        k = abs(a)
        slot = k - 1 if gassner else 0
        if a > 0:
            out[k - 1][tuple(prefix)] += 1
            prefix[slot] += 1
        else:
            prefix[slot] -= 1
            out[k - 1][tuple(prefix)] -= 1
    names = phi.names(n)
    return tuple(LaurentPoly(names, d) for d in out)


def fox_derivative(v: GroupRingElem | FreeWord, j: int) -> GroupRingElem:
    """The Fox derivative of ``v`` with respect to ``x_j``."""
    v = GroupRingElem.of(v)
    if not 1 <= j <= v.rank:
        raise WordError(f"derivative index {j} out of range 1..{v.rank}")
    out: dict[FreeWord, int] = defaultdict(int)
    for w, c in v.terms.items():
        for u, d in _word_derivative(w, j).items():
            out[u] += c * d
    return GroupRingElem(v.rank, out)


def jacobian(v: GroupRingElem | FreeWord) -> list[GroupRingElem]:
    v = GroupRingElem.of(v)
    return [fox_derivative(v, j) for j in range(1, v.rank + 1)]


@dataclass(frozen=True)
class FundamentalCheck:
    holds: bool
    lhs: GroupRingElem
    rhs: GroupRingElem

    def __bool__(self):
        return self.holds


def fundamental_formula_holds(v: GroupRingElem | FreeWord) -> FundamentalCheck:
    """Compare ``v - tau(v)`` with ``sum_j (dv/dx_j)(x_j - 1)``."""
    v = GroupRingElem.of(v)
    n = v.rank
    lhs = v - trivialize(v)
    rhs = GroupRingElem(n)
    for j, d in enumerate(jacobian(v), start=1):
        rhs = rhs + d * (GroupRingElem.of(FreeWord.gen(n, j)) - 1)
    return FundamentalCheck(lhs == rhs, lhs, rhs)


@dataclass(frozen=True)
class VanishingCheck:
    vanishes: bool
    images: tuple[LaurentPoly, ...]

    def __bool__(self):
        return self.vanishes


def derivatives_vanish_under(v: FreeWord, phi: Phi) -> VanishingCheck:
    """Blanchfield's criterion: true iff every ``(dv/dx_j)^phi`` is zero.

    For the Gassner map this decides membership of ``v`` in F_n''.
    """
    images = abelianized_jacobian(v, phi)
    return VanishingCheck(all(p.is_zero() for p in images), images)
