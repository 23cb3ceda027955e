"""Free-group words and endomorphisms of F_n.

Letters are stored as signed integers: ``k`` is ``x_k`` and ``-k`` is
``x_k^-1``.  Indices are 1-based.  Endomorphisms act on the right, so
``a * b`` means "apply ``a``, then ``b``" and ``x^(ab) = (x^a)^b``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterable, Sequence


class WordError(ValueError):
    """Bad generator index, rank mismatch or malformed word."""


class ParseError(WordError):
    pass


def _letter(item) -> int:
    if isinstance(item, tuple):
        index, sign = item
        if sign not in (1, -1):
            raise WordError(f"exponent sign must be +1 or -1, got {sign}")
        return index * sign
    return int(item)


def _free_reduce(letters: Iterable[int]) -> tuple[int, ...]:
    stack: list[int] = []
    for a in letters:
        if stack and stack[-1] == -a:
            stack.pop()
        else:
            stack.append(a)
    return tuple(stack)


def _letter_key(a: int) -> tuple[int, int]:
    return (abs(a), 0 if a > 0 else 1)


@dataclass(frozen=True)
class FreeWord:
    """A freely reduced word in ``x_1 .. x_rank``.

    The constructor reduces its input, so every instance satisfies the
    reduction invariant.
    """

    rank: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        if self.rank < 1:
            raise WordError(f"rank must be positive, got {self.rank}")
        raw = tuple(_letter(a) for a in self.letters)
        for a in raw:
            if a == 0 or abs(a) > self.rank:
                raise WordError(f"generator index {abs(a)} out of range 1..{self.rank}")
        object.__setattr__(self, "letters", _free_reduce(raw))

    @classmethod
    def gen(cls, rank: int, k: int, exp: int = 1) -> FreeWord:
        return cls(rank, (k if exp > 0 else -k,) * abs(exp))

    @classmethod
    def one(cls, rank: int) -> FreeWord:
        return cls(rank, ())

    def _check(self, other: FreeWord):
        if other.rank != self.rank:
            raise WordError(f"rank mismatch: {self.rank} vs {other.rank}")

    def __mul__(self, other: FreeWord) -> FreeWord:
        if not isinstance(other, FreeWord):
            return NotImplemented
        self._check(other)
        return FreeWord(self.rank, self.letters + other.letters)

    def inverse(self) -> FreeWord:
        return FreeWord(self.rank, tuple(-a for a in reversed(self.letters)))

    __invert__ = inverse

    def __pow__(self, k: int) -> FreeWord:
        base = self if k >= 0 else self.inverse()
        return FreeWord(self.rank, base.letters * abs(k))

    def __len__(self) -> int:
        return len(self.letters)

    def __bool__(self) -> bool:
        return bool(self.letters)

    def is_identity(self) -> bool:
        return not self.letters

    def conjugate(self, by: FreeWord) -> FreeWord:
        """Return ``by^-1 * self * by``."""
        return by.inverse() * self * by

    def exponent_sums(self) -> tuple[int, ...]:
        sums = [0] * self.rank
        for a in self.letters:
            sums[abs(a) - 1] += 1 if a > 0 else -1
        return tuple(sums)

    def substitute(self, images: Sequence[FreeWord]) -> FreeWord:
        """Replace ``x_k`` by ``images[k-1]`` letterwise and reduce."""
        out: list[int] = []
        inverses: dict[int, tuple[int, ...]] = {}
        for a in self.letters:
            img = images[abs(a) - 1]
            if a > 0:
                out.extend(img.letters)
            else:
                if a not in inverses:
                    inverses[a] = img.inverse().letters
                out.extend(inverses[a])
        target = images[0].rank if images else self.rank
        return FreeWord(target, out)

    def sort_key(self):
        return (len(self.letters), tuple(_letter_key(a) for a in self.letters))

    def __lt__(self, other: FreeWord) -> bool:
        return self.sort_key() < other.sort_key()

    def __str__(self) -> str:
        return " ".join(f"x{a}" if a > 0 else f"x{-a}^-1" for a in self.letters)

    def __repr__(self) -> str:
        return f"FreeWord({self.rank}, {str(self) or '1'!r})"


def reduce(letters: Iterable, rank: int) -> FreeWord:
    """Freely reduce a raw letter sequence.

    ``letters`` may hold signed ints or ``(index, sign)`` pairs.
    """
    return FreeWord(rank, tuple(letters))


def commutator(u: FreeWord, v: FreeWord) -> FreeWord:
    """``[u, v] = u^-1 v^-1 u v``."""
    return u.inverse() * v.inverse() * u * v


_WORD_TOKEN = re.compile(r"x(\d+)(\^-1)?$")


def parse_word(text: str, rank: int) -> FreeWord:
    """Parse ``"x1 x2^-1 x3"``; the empty string is the identity."""
    letters = []
    for tok in text.split():
        m = _WORD_TOKEN.match(tok)
        if not m:
            raise ParseError(f"bad word token {tok!r}")
        k = int(m.group(1))
        letters.append(-k if m.group(2) else k)
    return FreeWord(rank, letters)


# --------------------------------------------------------------------------
# Endomorphisms


@dataclass(frozen=True)
class Endomorphism:
    """Endomorphism of F_n given by the images of the generators.

    ``inverse_images`` is carried along when the inverse is known (named
    generators and products of them); it is not part of equality.
    """

    rank: int
    images: tuple[FreeWord, ...]
    inverse_images: tuple[FreeWord, ...] | None = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        if len(self.images) != self.rank:
            raise WordError(f"need {self.rank} images, got {len(self.images)}")
        for w in self.images:
            if w.rank != self.rank:
                raise WordError(f"image rank {w.rank} differs from {self.rank}")

    def apply(self, w: FreeWord) -> FreeWord:
        if w.rank != self.rank:
            raise WordError(f"rank mismatch: {self.rank} vs {w.rank}")
        return w.substitute(self.images)

    __call__ = apply

    def __mul__(self, other: Endomorphism) -> Endomorphism:
        if not isinstance(other, Endomorphism):
            return NotImplemented
        return compose(self, other)

    def inverse(self) -> Endomorphism:
        if self.inverse_images is None:
            raise WordError("inverse not known for this endomorphism")
        return Endomorphism(self.rank, self.inverse_images, self.images)

    __invert__ = inverse

    def __pow__(self, k: int) -> Endomorphism:
        base = self if k >= 0 else self.inverse()
        out = identity(self.rank)
        for _ in range(abs(k)):
            out = compose(out, base)
        return out

    def is_identity(self) -> bool:
        return all(w.letters == (k + 1,) for k, w in enumerate(self.images))

    def __str__(self) -> str:
        parts = [f"x{k + 1} -> {w or '1'}" for k, w in enumerate(self.images)]
        return "{" + ", ".join(parts) + "}"


def apply(e: Endomorphism, w: FreeWord) -> FreeWord:
    return e.apply(w)


def compose(a: Endomorphism, b: Endomorphism) -> Endomorphism:
    """Apply ``a`` first, then ``b``: ``compose(a, b)(w) == b(a(w))``."""
    if a.rank != b.rank:
        raise WordError(f"rank mismatch: {a.rank} vs {b.rank}")
    images = tuple(b.apply(w) for w in a.images)
    inv = None
    if a.inverse_images is not None and b.inverse_images is not None:
        inv = tuple(w.substitute(a.inverse_images) for w in b.inverse_images)
    return Endomorphism(a.rank, images, inv)


def _endo(n: int, changes: dict[int, FreeWord], inv_changes: dict[int, FreeWord]) -> Endomorphism:
    ids = [FreeWord.gen(n, k) for k in range(1, n + 1)]
    images = tuple(changes.get(k, ids[k - 1]) for k in range(1, n + 1))
    inverse = tuple(inv_changes.get(k, ids[k - 1]) for k in range(1, n + 1))
    return Endomorphism(n, images, inverse)


def _flip(e: Endomorphism, exp: int) -> Endomorphism:
    if exp == 1:
        return e
    if exp == -1:
        return e.inverse()
    raise WordError(f"exponent must be +1 or -1, got {exp}")


def _need(cond: bool, msg: str):
    if not cond:
        raise WordError(msg)


def identity(n: int) -> Endomorphism:
    return _endo(n, {}, {})


def sigma(i: int, n: int, exp: int = 1) -> Endomorphism:
    """Artin generator: ``x_i -> x_i x_{i+1} x_i^-1``, ``x_{i+1} -> x_i``."""
    _need(1 <= i < n, f"sigma index {i} out of range 1..{n - 1}")
    x = lambda k: FreeWord.gen(n, k)
    xi, xj = x(i), x(i + 1)
    fwd = {i: xi * xj * ~xi, i + 1: xi}
    back = {i: xj, i + 1: ~xj * xi * xj}
    return _flip(_endo(n, fwd, back), exp)


def a_pure(r: int, s: int, n: int, exp: int = 1) -> Endomorphism:
    """Pure braid generator a_rs acting on F_n."""
    _need(1 <= r < s <= n, f"a[{r},{s}] needs 1 <= r < s <= {n}")
    x = lambda k: FreeWord.gen(n, k)
    xr, xs = x(r), x(s)
    # a_rs conjugates x_r, x_s by (x_r x_s)^-1 and the strands between by [x_r^-1, x_s^-1]^-1
    rs = xr * xs
    mid = commutator(~xr, ~xs)
    mid_back = commutator(xr, xs)
    fwd = {r: rs * xr * ~rs, s: xr * xs * ~xr}
    back = {r: ~xs * xr * xs, s: ~rs * xs * rs}
    for k in range(r + 1, s):
        fwd[k] = mid * x(k) * ~mid
        back[k] = ~mid_back * x(k) * mid_back
    return _flip(_endo(n, fwd, back), exp)


def eps(i: int, j: int, n: int, exp: int = 1) -> Endomorphism:
    """McCool generator: ``x_i -> x_j^-1 x_i x_j``."""
    _need(1 <= i <= n and 1 <= j <= n and i != j, f"e[{i},{j}] needs distinct indices in 1..{n}")
    xi, xj = FreeWord.gen(n, i), FreeWord.gen(n, j)
    return _flip(_endo(n, {i: ~xj * xi * xj}, {i: xj * xi * ~xj}), exp)


def eps3(i: int, j: int, k: int, n: int, exp: int = 1) -> Endomorphism:
    """IA generator: ``x_i -> x_i [x_j, x_k]``."""
    _need(
        all(1 <= m <= n for m in (i, j, k)) and len({i, j, k}) == 3,
        f"e[{i},{j},{k}] needs pairwise distinct indices in 1..{n}",
    )
    xi = FreeWord.gen(n, i)
    c = commutator(FreeWord.gen(n, j), FreeWord.gen(n, k))
    return _flip(_endo(n, {i: xi * c}, {i: xi * ~c}), exp)


def perm(pi: Iterable[int], n: int) -> Endomorphism:
    """``x_i -> x_{pi(i)}``; ``pi`` lists the images of 1..n."""
    images = tuple(pi)
    _need(sorted(images) == list(range(1, n + 1)), f"{images} is not a permutation of 1..{n}")
    inv = [0] * n
    for a, b in enumerate(images, start=1):
        inv[b - 1] = a
    fwd = {a: FreeWord.gen(n, b) for a, b in enumerate(images, start=1)}
    back = {a: FreeWord.gen(n, b) for a, b in enumerate(inv, start=1)}
    return _endo(n, fwd, back)


# --------------------------------------------------------------------------
# Words in named generators


_KINDS = {"s": 1, "a": 2, "e": 2, "e3": 3}


@dataclass(frozen=True)
class Gen:
    """One letter of a generator word: ``s_i``, ``a_rs``, ``e_ij`` or ``e_ijk``."""

    kind: str
    indices: tuple[int, ...]
    exp: int = 1

    def __post_init__(self):
        if _KINDS.get(self.kind) != len(self.indices):
            raise WordError(f"bad generator {self.kind}{self.indices}")
        if self.exp not in (1, -1):
            raise WordError(f"exponent must be +1 or -1, got {self.exp}")

    def inverse(self) -> Gen:
        return Gen(self.kind, self.indices, -self.exp)

    def endomorphism(self, n: int) -> Endomorphism:
        make = {"s": sigma, "a": a_pure, "e": eps, "e3": eps3}[self.kind]
        return make(*self.indices, n, exp=self.exp)

    def __str__(self) -> str:
        if self.kind == "s":
            body = f"s{self.indices[0]}"
        else:
            body = "a" if self.kind == "a" else "e"
            body += "[" + ",".join(map(str, self.indices)) + "]"
        return body + ("^-1" if self.exp < 0 else "")


@dataclass(frozen=True)
class GeneratorWord:
    """A freely reduced word in named automorphisms of F_rank."""

    rank: int
    letters: tuple[Gen, ...] = ()

    def __post_init__(self):
        stack: list[Gen] = []
        for g in self.letters:
            if stack and stack[-1] == g.inverse():
                stack.pop()
            else:
                stack.append(g)
        object.__setattr__(self, "letters", tuple(stack))

    def __mul__(self, other: GeneratorWord) -> GeneratorWord:
        if not isinstance(other, GeneratorWord):
            return NotImplemented
        if other.rank != self.rank:
            raise WordError(f"rank mismatch: {self.rank} vs {other.rank}")
        return GeneratorWord(self.rank, self.letters + other.letters)

    def inverse(self) -> GeneratorWord:
        return GeneratorWord(self.rank, tuple(g.inverse() for g in reversed(self.letters)))

    __invert__ = inverse

    def __len__(self) -> int:
        return len(self.letters)

    def endomorphism(self) -> Endomorphism:
        out = identity(self.rank)
        for g in self.letters:
            out = compose(out, g.endomorphism(self.rank))
        return out

    def substitute(self, images: dict[Gen, FreeWord], rank: int) -> FreeWord:
        """Map each generator letter to a free word (inverse letters to inverses)."""
        out = FreeWord.one(rank)
        for g in self.letters:
            if g.exp > 0:
                out = out * images[g]
            else:
                out = out * images[g.inverse()].inverse()
        return out

    def __str__(self) -> str:
        return " ".join(map(str, self.letters))


_GEN_TOKEN = re.compile(
    r"\s*(?:s(\d+)|([ae])\[\s*(\d+)\s*,\s*(\d+)\s*(?:,\s*(\d+)\s*)?\])(\^-1)?(?=\s|$)"
)


def parse_generators(text: str, rank: int) -> GeneratorWord:
    """Parse ``"s1 a[1,3]^-1 e[1,2] e[1,2,3]"`` into a GeneratorWord."""
    letters = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _GEN_TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"cannot parse generator word at {text[pos:]!r}")
        exp = -1 if m.group(6) else 1
        if m.group(1):
            letters.append(Gen("s", (int(m.group(1)),), exp))
        elif m.group(5):
            if m.group(2) != "e":
                raise ParseError(f"three indices only allowed for e: {m.group(0).strip()!r}")
            letters.append(Gen("e3", (int(m.group(3)), int(m.group(4)), int(m.group(5))), exp))
        else:
            letters.append(Gen(m.group(2), (int(m.group(3)), int(m.group(4))), exp))
        letters[-1].endomorphism(rank)  # validates indices against the rank
        pos = m.end()
    return GeneratorWord(rank, tuple(letters))


def group_commutator(a, b):
    """``[a, b] = a^-1 b^-1 a b`` for GeneratorWords or invertible Endomorphisms."""
    return a.inverse() * b.inverse() * a * b
