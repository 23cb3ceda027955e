"""Hypothesis strategies shared across the test modules."""

from hypothesis import strategies as st

from foxmagnus.rings import GroupRingElem, LaurentPoly
from foxmagnus.words import FreeWord, Gen, GeneratorWord


def letters(n, max_size=12):
    return st.lists(
        st.integers(1, n).flatmap(lambda k: st.sampled_from([k, -k])), max_size=max_size
    )


def free_words(n, max_size=12):
    return letters(n, max_size).map(lambda ls: FreeWord(n, ls))


@st.composite
def ranked_words(draw, max_rank=4, max_size=12):
    n = draw(st.integers(1, max_rank))
    return draw(free_words(n, max_size))


def group_ring(n, max_terms=5, max_size=8):
    return st.dictionaries(free_words(n, max_size), st.integers(-4, 4), max_size=max_terms).map(
        lambda d: GroupRingElem(n, d)
    )


def laurent(names, max_terms=5):
    k = len(names)
    exps = st.tuples(*[st.integers(-3, 3)] * k)
    return st.dictionaries(exps, st.integers(-5, 5), max_size=max_terms).map(lambda d: LaurentPoly(names, d))


def mccool_gens(n, with_triples=False):
    gens = [Gen("e", (i, j)) for i in range(1, n + 1) for j in range(1, n + 1) if i != j]
    if with_triples:
        gens += [
            Gen("e3", (i, j, k))
            for i in range(1, n + 1)
            for j in range(1, n + 1)
            for k in range(1, n + 1)
            if len({i, j, k}) == 3
        ]
    return gens


def generator_words(n, gens, max_size=8):
    alphabet = gens + [g.inverse() for g in gens]
    return st.lists(st.sampled_from(alphabet), max_size=max_size).map(lambda ls: GeneratorWord(n, tuple(ls)))


def braid_words(n, max_size=10):
    alphabet = [Gen("s", (i,), e) for i in range(1, n) for e in (1, -1)]
    return st.lists(st.sampled_from(alphabet), max_size=max_size).map(lambda ls: GeneratorWord(n, tuple(ls)))
