"""Braid, pure-braid and conjugating-automorphism structure on F_n."""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterator, Sequence

from .words import (
    Endomorphism,
    FreeWord,
    Gen,
    GeneratorWord,
    ParseError,
    WordError,
    compose,
    group_commutator,
    identity,
    parse_generators,
    sigma,
)


@dataclass(frozen=True)
class Permutation:
    """Bijection of ``{1..n}``; ``images[i-1]`` is the image of ``i``.

    Products read left to right like endomorphisms: ``(p * q)(i) == q(p(i))``.
    """

    images: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "images", tuple(self.images))
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise ValueError(f"{self.images} is not a permutation")

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def transposition(cls, i: int, j: int, n: int) -> Permutation:
        img = list(range(1, n + 1))
        img[i - 1], img[j - 1] = j, i
        return cls(tuple(img))

    @property
    def size(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __iter__(self) -> Iterator[int]:
        return iter(self.images)

    def __mul__(self, other: Permutation) -> Permutation:
        return Permutation(tuple(other(self(i)) for i in range(1, self.size + 1)))

    def inverse(self) -> Permutation:
        inv = [0] * self.size
        for i, j in enumerate(self.images, start=1):
            inv[j - 1] = i
        return Permutation(tuple(inv))

    def is_identity(self) -> bool:
        return self.images == tuple(range(1, self.size + 1))

    def cycles(self) -> list[tuple[int, ...]]:
        seen, out = set(), []
        for start in range(1, self.size + 1):
            if start in seen:
                continue
            cyc, k = [], start
            while k not in seen:
                seen.add(k)
                cyc.append(k)
                k = self(k)
            out.append(tuple(cyc))
        return out

    def is_full_cycle(self) -> bool:
        return len(self.cycles()) == 1


@dataclass(frozen=True)
class BraidWord:
    """Word in ``s_1 .. s_{n-1}``; letters are signed generator indices."""

    strands: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(self.letters))
        for a in self.letters:
            if a == 0 or abs(a) >= self.strands:
                raise WordError(f"braid generator s{abs(a)} out of range 1..{self.strands - 1}")

    @classmethod
    def parse(cls, text: str, strands: int) -> BraidWord:
        word = parse_generators(text, strands)
        out = []
        for g in word.letters:
            if g.kind != "s":
                raise ParseError(f"{g} is not a braid generator")
            out.append(g.indices[0] * g.exp)
        return cls(strands, tuple(out))

    def to_generator_word(self) -> GeneratorWord:
        return GeneratorWord(self.strands, tuple(Gen("s", (abs(a),), 1 if a > 0 else -1) for a in self.letters))

    def __mul__(self, other: BraidWord) -> BraidWord:
        return BraidWord(self.strands, self.letters + other.letters)

    def inverse(self) -> BraidWord:
        return BraidWord(self.strands, tuple(-a for a in reversed(self.letters)))

    def permutation(self) -> Permutation:
        """The image under ``s_i -> (i, i+1)``."""
        p = Permutation.identity(self.strands)
        for a in self.letters:
            p = p * Permutation.transposition(abs(a), abs(a) + 1, self.strands)
        return p

    def __str__(self) -> str:
        return " ".join(f"s{a}" if a > 0 else f"s{-a}^-1" for a in self.letters)


def braid_to_endo(b: BraidWord) -> Endomorphism:
    out = identity(b.strands)
    for a in b.letters:
        out = compose(out, sigma(abs(a), b.strands, 1 if a > 0 else -1))
    return out


def pure_generator_as_braid(i: int, j: int, n: int) -> BraidWord:
    """``a_ij = s_{j-1} ... s_{i+1} s_i^2 s_{i+1}^-1 ... s_{j-1}^-1``."""
    if not 1 <= i < j <= n:
        raise WordError(f"a[{i},{j}] needs 1 <= i < j <= {n}")
    down = tuple(range(j - 1, i, -1))
    return BraidWord(n, down + (i, i) + tuple(-k for k in reversed(down)))


def pure_generator_as_eps(i: int, j: int, n: int, variant: str = "lower") -> GeneratorWord:
    """Express a_ij through McCool generators.

    ``lower`` conjugates the core ``e[i,j]^-1 e[j,i]^-1`` by
    ``e[j-1,i] ... e[i+1,i]``; ``upper`` conjugates it by
    ``e[j-1,j]^-1 ... e[i+1,j]^-1``.
    """
    if not 1 <= i < j <= n:
        raise WordError(f"a[{i},{j}] needs 1 <= i < j <= {n}")
    if variant == "lower":
        left = [Gen("e", (k, i)) for k in range(j - 1, i, -1)]
    elif variant == "upper":
        left = [Gen("e", (k, j), -1) for k in range(j - 1, i, -1)]
    else:
        raise ValueError(f"variant must be 'lower' or 'upper', got {variant!r}")
    core = [Gen("e", (i, j), -1), Gen("e", (j, i), -1)]
    right = [g.inverse() for g in reversed(left)]
    return GeneratorWord(n, tuple(left + core + right))


# --------------------------------------------------------------------------
# Artin's recognition conditions


@dataclass(frozen=True)
class ConjugatingData:
    """``e(x_i) = f_i^-1 x_{pi(i)} f_i``."""

    permutation: Permutation
    conjugators: tuple[FreeWord, ...]


def is_conjugating(e: Endomorphism) -> ConjugatingData | None:
    n = e.rank
    targets, conjugators = [], []
    for w in e.images:
        a = w.letters
        k = 0
        while 2 * k + 1 < len(a) and a[k] == -a[-1 - k]:
            k += 1
        core = a[k : len(a) - k]
        if len(core) != 1 or core[0] < 0:
            return None
        targets.append(core[0])
        conjugators.append(FreeWord(n, a[len(a) - k :]))
    if sorted(targets) != list(range(1, n + 1)):
        return None
    return ConjugatingData(Permutation(tuple(targets)), tuple(conjugators))


def is_braid(e: Endomorphism) -> bool:
    if is_conjugating(e) is None:
        return False
    product = FreeWord(e.rank, tuple(range(1, e.rank + 1)))
    return e.apply(product) == product


# --------------------------------------------------------------------------
# Relations and named subgroups


Relation = tuple[str, GeneratorWord, GeneratorWord]


def braid_relations(n: int) -> list[Relation]:
    """All instances of the braid relations in B_n."""
    s = lambda i: GeneratorWord(n, (Gen("s", (i,)),))
    out = []
    for i in range(1, n - 1):
        out.append((f"s{i} s{i+1} s{i} = s{i+1} s{i} s{i+1}", s(i) * s(i + 1) * s(i), s(i + 1) * s(i) * s(i + 1)))
    for i in range(1, n):
        for j in range(i + 2, n):
            out.append((f"s{i} s{j} = s{j} s{i}", s(i) * s(j), s(j) * s(i)))
    return out


def pure_braid_relations(n: int) -> list[Relation]:
    """All instances of the four families of defining relations of P_n, for both signs."""
    a = lambda r, s_: GeneratorWord(n, (Gen("a", (r, s_)),))
    out: list[Relation] = []
    rng = range(1, n + 1)
    for e in (1, -1):
        pw = lambda w: w if e == 1 else ~w  # w^e
        nw = lambda w: ~w if e == 1 else w  # w^-e

        def conj(x, by, name):
            return (name + f" (eps={e:+d})", nw(by) * x * pw(by))

        for i in rng:
            for k in rng:
                for j in rng:
                    if i < k < j:
                        name, lhs = conj(a(k, j), a(i, k), f"a{i}{k}^-e a{k}{j} a{i}{k}^e")
                        u = a(i, j) * a(k, j)
                        out.append((name, lhs, pw(u) * a(k, j) * nw(u)))
                        name, lhs = conj(a(i, j), a(i, k), f"a{i}{k}^-e a{i}{j} a{i}{k}^e")
                        u = a(i, j) * a(k, j)
                        out.append((name, lhs, pw(u) * a(i, j) * nw(u)))
        for i in rng:
            for k in rng:
                for m in rng:
                    for j in rng:
                        if i < k < m < j:
                            c = group_commutator(
                                ~a(i, j) if e == 1 else a(i, j), ~a(m, j) if e == 1 else a(m, j)
                            )
                            name, lhs = conj(a(k, j), a(i, m), f"a{i}{m}^-e a{k}{j} a{i}{m}^e")
                            out.append((name, lhs, pw(c) * a(k, j) * nw(c)))
        for i in rng:
            for m in rng:
                for k in rng:
                    for j in rng:
                        if i < m and k < j and (k < i < m < j or m < k or j < i):
                            name, lhs = conj(a(k, j), a(i, m), f"a{i}{m}^-e a{k}{j} a{i}{m}^e")
                            out.append((name, lhs, a(k, j)))
    return out


def U_generators(i: int, n: int) -> list[Gen]:
    """Free generators ``a_{1,i} .. a_{i-1,i}`` of U_i."""
    if not 2 <= i <= n:
        raise WordError(f"U_{i} needs 2 <= i <= {n}")
    return [Gen("a", (k, i)) for k in range(1, i)]


def L_generators(i: int, n: int) -> list[Gen]:
    """Free generators ``e[i+1,1] .. e[i+1,i]`` of L_i."""
    if not 1 <= i <= n - 1:
        raise WordError(f"L_{i} needs 1 <= i <= {n - 1}")
    return [Gen("e", (i + 1, k)) for k in range(1, i + 1)]


def A_generators(i: int, n: int) -> list[Gen]:
    """Generators ``e[1,i+1] .. e[i,i+1]`` of the free abelian A_i."""
    if not 1 <= i <= n - 1:
        raise WordError(f"A_{i} needs 1 <= i <= {n - 1}")
    return [Gen("e", (k, i + 1)) for k in range(1, i + 1)]


def D_generators(i: int, n: int) -> list[Gen]:
    return L_generators(i, n) + A_generators(i, n)


# --------------------------------------------------------------------------
# Predicted actions of words in McCool generators


def reversed_substitution(word: GeneratorWord, i: int) -> FreeWord:
    """For a word in ``e[i,1] .. e[i,i-1]``: replace ``e[i,k]`` by ``x_k`` and reverse the syllable order.

    The result ``w*`` satisfies ``x_i^word = (w*)^-1 x_i w*``.
    """
    out = []
    for g in word.letters:
        if g.kind != "e" or g.indices[0] != i or not g.indices[1] < i:
            raise WordError(f"{g} is not of the form e[{i},k] with k < {i}")
        out.append(g.indices[1] * g.exp)
    return FreeWord(word.rank, tuple(reversed(out)))


def swapped_substitution(word: GeneratorWord) -> FreeWord:
    """For a word in ``e[1,2], e[2,1]`` on F_2: the free word ``w(x_2, x_1)``."""
    images = {Gen("e", (1, 2)): FreeWord.gen(2, 2), Gen("e", (2, 1)): FreeWord.gen(2, 1)}
    if word.rank != 2 or any(g.kind != "e" for g in word.letters):
        raise WordError("expected a word in e[1,2], e[2,1] on F_2")
    return word.substitute(images, 2)


# --------------------------------------------------------------------------
# Kernel witnesses


def random_subgroup_word(gens: Sequence[Gen], n: int, length: int, rng: random.Random) -> GeneratorWord:
    """Uniform random reduced word of exactly ``length`` letters over ``gens`` and inverses."""
    alphabet = list(gens) + [g.inverse() for g in gens]
    letters: list[Gen] = []
    while len(letters) < length:
        g = rng.choice(alphabet)
        if letters and letters[-1] == g.inverse():
            continue
        letters.append(g)
    return GeneratorWord(n, tuple(letters))


def kernel_witness(kind: str, i: int | None = None, n: int | None = None, seed=None, size: int = 3) -> GeneratorWord:
    """A nontrivial element of the second commutator subgroup of L_i or D_1.

    ``kind`` is ``"L"`` (needs ``2 <= i <= n-1``) or ``"D1"`` (rank 2).
    Built as ``[[u1, v1], [u2, v2]]`` from random subgroup words of length
    at most ``size``.  ``seed`` may be an int or a ``random.Random``.
    """
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    if kind == "D1":
        if n not in (None, 2):
            raise WordError("D1 witnesses live in Cb_2")
        n = 2
        gens = [Gen("e", (1, 2)), Gen("e", (2, 1))]
    elif kind == "L":
        if n is None or i is None or not 2 <= i <= n - 1:
            raise WordError(f"L_i witnesses need 2 <= i <= n-1, got i={i}, n={n}")
        gens = L_generators(i, n)
    else:
        raise ValueError(f"unknown witness kind {kind!r}")
    if size < 1:
        raise ValueError("size must be at least 1")
    while True:
        u1, v1, u2, v2 = (random_subgroup_word(gens, n, rng.randint(1, size), rng) for _ in range(4))
        w = group_commutator(group_commutator(u1, v1), group_commutator(u2, v2))
        if len(w) and not w.endomorphism().is_identity():
            return w
