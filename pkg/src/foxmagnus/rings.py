"""Exact arithmetic in the group ring ZF_n and in Laurent polynomial rings."""

from __future__ import annotations

import enum
import re
from collections import defaultdict
from typing import Iterable, Mapping

from .words import FreeWord, WordError


class SignatureError(ValueError):
    """Operands live in different rings."""


class Phi(enum.Enum):
    """Abelianizing specialization of F_n.

    GASSNER sends ``x_i -> t_i``; BURAU sends every ``x_i -> t``.
    """

    GASSNER = "gassner"
    BURAU = "burau"

    def names(self, n: int) -> tuple[str, ...]:
        if self is Phi.BURAU:
            return ("t",)
        return tuple(f"t{k}" for k in range(1, n + 1))


GASSNER = Phi.GASSNER
BURAU = Phi.BURAU


# --------------------------------------------------------------------------
# Laurent polynomials


class LaurentPoly:
    """Integer Laurent polynomial in named variables.

    ``names`` is ``("t1", ..., "tn")`` for the Gassner ring or ``("t",)``
    for the Burau ring.  ``terms`` maps exponent tuples to nonzero ints.
    Instances are treated as immutable.
    """

    __slots__ = ("names", "terms", "_hash")

    def __init__(self, names: Iterable[str], terms: Mapping[tuple[int, ...], int] | None = None):
        self.names = tuple(names)
        clean = {}
        for exps, c in (terms or {}).items():
            exps = tuple(exps)
            if len(exps) != len(self.names):
                raise SignatureError(f"exponent vector {exps} does not match variables {self.names}")
            if c:
                clean[exps] = int(c)
        self.terms = clean
        self._hash = None

    # constructors ---------------------------------------------------------
    @classmethod
    def zero(cls, names) -> LaurentPoly:
        return cls(names)

    @classmethod
    def const(cls, c: int, names) -> LaurentPoly:
        names = tuple(names)
        return cls(names, {(0,) * len(names): c})

    @classmethod
    def monomial(cls, exps, names, coeff: int = 1) -> LaurentPoly:
        return cls(names, {tuple(exps): coeff})

    @classmethod
    def var(cls, k: int, names) -> LaurentPoly:
        """The k-th variable (1-based)."""
        names = tuple(names)
        exps = [0] * len(names)
        exps[k - 1] = 1
        return cls(names, {tuple(exps): 1})

    @classmethod
    def gassner_vars(cls, n: int) -> list[LaurentPoly]:
        names = Phi.GASSNER.names(n)
        return [cls.var(k, names) for k in range(1, n + 1)]

    @classmethod
    def t(cls) -> LaurentPoly:
        return cls.var(1, ("t",))

    # arithmetic -----------------------------------------------------------
    def _coerce(self, other) -> LaurentPoly:
        if isinstance(other, LaurentPoly):
            if other.names != self.names:
                raise SignatureError(f"variables {self.names} vs {other.names}")
            return other
        if isinstance(other, int):
            return LaurentPoly.const(other, self.names)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly(self.names, out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly(self.names, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict = defaultdict(int)
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                out[tuple(a + b for a, b in zip(e1, e2))] += c1 * c2
        return LaurentPoly(self.names, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            if not self.is_unit():
                raise ValueError(f"{self} is not a unit; cannot take negative power")
            ((e, c),) = self.terms.items()
            return LaurentPoly(self.names, {tuple(-a for a in e): c}) ** (-k)
        out = LaurentPoly.const(1, self.names)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    # predicates -----------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def is_unit(self) -> bool:
        """Units of an integer Laurent ring are exactly the monomials ``±t^v``."""
        return len(self.terms) == 1 and abs(next(iter(self.terms.values()))) == 1

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.const(other, self.names)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.names == other.names and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.names, frozenset(self.terms.items())))
        return self._hash

    # maps -----------------------------------------------------------------
    def specialize(self) -> LaurentPoly:
        """Send every variable to a single ``t``."""
        out: dict = defaultdict(int)
        for e, c in self.terms.items():
            out[(sum(e),)] += c
        return LaurentPoly(("t",), out)

    def evaluate(self, values: Mapping[str, complex] | Iterable) -> complex:
        if isinstance(values, Mapping):
            vals = [values[n] for n in self.names]
        else:
            vals = list(values)
        total = 0
        for e, c in self.terms.items():
            term = c
            for v, a in zip(vals, e):
                term *= v**a
            total += term
        return total

    # univariate helpers -------------------------------------------------------
    def _univariate(self):
        if len(self.names) != 1:
            raise SignatureError("operation needs a single-variable polynomial")

    def exponent_range(self) -> tuple[int, int]:
        self._univariate()
        exps = [e[0] for e in self.terms]
        return min(exps), max(exps)

    def exact_divide(self, divisor: LaurentPoly) -> LaurentPoly:
        """Divide exactly in ``Z[t, t^-1]``; raise ``ArithmeticError`` if not exact."""
        self._univariate()
        divisor = self._coerce(divisor)
        if divisor.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        if self.is_zero():
            return self
        lo_d, hi_d = divisor.exponent_range()
        lead = divisor.terms[(hi_d,)]
        rem = dict((e[0], c) for e, c in self.terms.items())
        quot: dict = {}
        while rem:
            hi = max(rem)
            if hi - hi_d < min(rem) - lo_d:
                raise ArithmeticError(f"{self} is not divisible by {divisor}")
            c = rem[hi]
            if c % lead:
                raise ArithmeticError(f"{self} is not divisible by {divisor}")
            q, shift = c // lead, hi - hi_d
            quot[(shift,)] = q
            for (e,), d in divisor.terms.items():
                k = e + shift
                rem[k] = rem.get(k, 0) - q * d
                if not rem[k]:
                    del rem[k]
        return LaurentPoly(self.names, quot)

    def normalized(self) -> LaurentPoly:
        """Representative up to ``±t^k``: lowest exponent 0, positive leading coefficient."""
        self._univariate()
        if self.is_zero():
            return self
        lo, hi = self.exponent_range()
        sign = 1 if self.terms[(hi,)] > 0 else -1
        return LaurentPoly(self.names, {(e[0] - lo,): sign * c for e, c in self.terms.items()})

    # output ---------------------------------------------------------------
    def sorted_terms(self) -> list[tuple[tuple[int, ...], int]]:
        return sorted(self.terms.items(), reverse=True)

    def to_terms(self) -> list[list]:
        """Structured form: ``[[coeff, [exponents...]], ...]``."""
        return [[c, list(e)] for e, c in self.sorted_terms()]

    def _monomial_str(self, e) -> str:
        parts = []
        for name, a in zip(self.names, e):
            if a == 1:
                parts.append(name)
            elif a:
                parts.append(f"{name}^{a}")
        return "*".join(parts)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        out = []
        for k, (e, c) in enumerate(self.sorted_terms()):
            mono = self._monomial_str(e)
            mag = abs(c)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            if k == 0:
                out.append(("-" if c < 0 else "") + body)
            else:
                out.append(("- " if c < 0 else "+ ") + body)
        return " ".join(out)

    def __repr__(self) -> str:
        return f"LaurentPoly({str(self)!r})"

    @classmethod
    def parse(cls, text: str, names) -> LaurentPoly:
        """Parse the text format produced by ``str``."""
        names = tuple(names)
        index = {n: k for k, n in enumerate(names)}
        s = text.replace(" ", "").replace("^-", "^~")
        if s in ("", "0"):
            return cls(names)
        if s[0] not in "+-":
            s = "+" + s
        out: dict = defaultdict(int)
        for sign, body in re.findall(r"([+-])([^+-]+)", s):
            coeff, exps = 1, [0] * len(names)
            for factor in body.replace("~", "-").split("*"):
                m = re.fullmatch(r"([A-Za-z]\w*)(?:\^(-?\d+))?", factor)
                if m and m.group(1) in index:
                    exps[index[m.group(1)]] += int(m.group(2) or 1)
                elif factor.isdigit():
                    coeff *= int(factor)
                else:
                    raise ValueError(f"bad polynomial factor {factor!r}")
            out[tuple(exps)] += coeff if sign == "+" else -coeff
        return cls(names, out)


# --------------------------------------------------------------------------
# Group ring ZF_n




class GroupRingElem:
    """Finite integer combination of reduced words of F_rank."""

    __slots__ = ("rank", "terms", "_hash")

    def __init__(self, rank: int, terms: Mapping[FreeWord, int] | None = None):
        self.rank = rank
        clean = {}
        for w, c in (terms or {}).items():
            if w.rank != rank:
                raise WordError(f"word rank {w.rank} differs from {rank}")
            if c:
                clean[w] = int(c)
        self.terms = clean
        self._hash = None

    @classmethod
    def of(cls, x, rank: int | None = None) -> GroupRingElem:
        if isinstance(x, GroupRingElem):
            return x
        if isinstance(x, FreeWord):
            return cls(x.rank, {x: 1})
        if isinstance(x, int) and rank is not None:
            return cls(rank, {FreeWord.one(rank): x})
        raise TypeError(f"cannot coerce {x!r} into ZF_n")

    def _coerce(self, other):
        if isinstance(other, (GroupRingElem, FreeWord)) or isinstance(other, int):
            other = GroupRingElem.of(other, self.rank)
            if other.rank != self.rank:
                raise SignatureError(f"rank {self.rank} vs {other.rank}")
            return other
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out.get(w, 0) + c
        return GroupRingElem(self.rank, out)

    __radd__ = __add__

    def __neg__(self):
        return GroupRingElem(self.rank, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict = defaultdict(int)
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                out[w1 * w2] += c1 * c2
        return GroupRingElem(self.rank, out)

    def __rmul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other * self

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, (int, FreeWord)):
            other = GroupRingElem.of(other, self.rank)
        if not isinstance(other, GroupRingElem):
            return NotImplemented
        return self.rank == other.rank and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.rank, frozenset(self.terms.items())))
        return self._hash

    def sorted_terms(self) -> list[tuple[FreeWord, int]]:
        return sorted(self.terms.items(), key=lambda wc: wc[0].sort_key())

    def to_terms(self) -> list[list]:
        return [[c, list(w.letters)] for w, c in self.sorted_terms()]

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        out = []
        for k, (w, c) in enumerate(self.sorted_terms()):
            mono = "*".join(f"x{a}" if a > 0 else f"x{-a}^-1" for a in w.letters)
            if k == 0:
                body = str(c) if not mono else f"{c}*{mono}"
            else:
                body = str(abs(c)) if not mono else f"{abs(c)}*{mono}"
                body = ("- " if c < 0 else "+ ") + body
            out.append(body)
        return " ".join(out)

    def __repr__(self) -> str:
        return f"GroupRingElem({self.rank}, {str(self)!r})"


def trivialize(v: GroupRingElem | FreeWord) -> int:
    """Augmentation: every group element goes to 1."""
    if isinstance(v, FreeWord):
        return 1
    return sum(v.terms.values())


def abelianize(v: GroupRingElem | FreeWord, phi: Phi) -> LaurentPoly:
    """Apply ``x_i -> t_i`` (Gassner) or ``x_i -> t`` (Burau) termwise."""
    v = GroupRingElem.of(v)
    names = phi.names(v.rank)
    out: dict = defaultdict(int)
    for w, c in v.terms.items():
        sums = w.exponent_sums()
        key = (sum(sums),) if phi is Phi.BURAU else sums
        out[key] += c
    return LaurentPoly(names, out)
