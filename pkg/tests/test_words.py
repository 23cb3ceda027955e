import itertools

import pytest
from hypothesis import given, settings, strategies as st

from foxmagnus.braids import pure_braid_relations, braid_relations, reversed_substitution, swapped_substitution
from foxmagnus.words import (
    Endomorphism,
    FreeWord,
    Gen,
    GeneratorWord,
    ParseError,
    WordError,
    a_pure,
    commutator,
    compose,
    eps,
    eps3,
    group_commutator,
    identity,
    parse_generators,
    parse_word,
    perm,
    reduce,
    sigma,
)

from strategies import free_words, generator_words, letters


def W(text, n):
    return parse_word(text, n)


class TestReduce:
    def test_cancellation(self):
        assert reduce([1, -1], 2).is_identity()

    def test_cascade(self):
        assert reduce([1, 2, -2, 1], 2) == W("x1 x1", 2)

    def test_already_reduced(self):
        assert reduce([1, 2, -1], 2).letters == (1, 2, -1)

    def test_pairs_accepted(self):
        assert reduce([(1, 1), (2, -1), (2, 1)], 2) == W("x1", 2)

    def test_index_out_of_range(self):
        with pytest.raises(WordError):
            reduce([3], 2)
        with pytest.raises(WordError):
            reduce([0], 2)

    @given(st.integers(1, 4).flatmap(lambda n: st.tuples(st.just(n), letters(n, 20))))
    def test_idempotent_and_shrinking(self, case):
        n, ls = case
        w = reduce(ls, n)
        assert len(w) <= len(ls)
        assert reduce(w.letters, n) == w
        assert all(a != -b for a, b in zip(w.letters, w.letters[1:]))


class TestParse:
    def test_round_trip(self):
        w = W("x1 x2^-1 x3", 3)
        assert w.letters == (1, -2, 3)
        assert str(w) == "x1 x2^-1 x3"

    def test_empty_is_identity(self):
        assert W("", 2).is_identity()

    @pytest.mark.parametrize("bad", ["y1", "x1^2", "x", "x1^-"])
    def test_bad_tokens(self, bad):
        with pytest.raises(ParseError):
            parse_word(bad, 3)

    def test_generator_grammar(self):
        w = parse_generators("s1 a[1,3]^-1 e[2,1] e[1,2,3]^-1", 3)
        assert [str(g) for g in w.letters] == ["s1", "a[1,3]^-1", "e[2,1]", "e[1,2,3]^-1"]
        assert str(parse_generators(str(w), 3)) == str(w)

    def test_generator_grammar_reduces(self):
        assert len(parse_generators("e[1,2] e[1,2]^-1", 2)) == 0

    @pytest.mark.parametrize("bad", ["s0", "s3", "e[1,1]", "a[2,1]", "e[1,2,2]", "a[1,2,3]", "t1"])
    def test_generator_grammar_errors(self, bad):
        with pytest.raises(WordError):
            parse_generators(bad, 3)


class TestApply:
    def test_sigma(self):
        assert sigma(1, 3)(W("x1", 3)) == W("x1 x2 x1^-1", 3)
        assert sigma(1, 3)(W("x2", 3)) == W("x1", 3)
        assert sigma(1, 3)(W("x3", 3)) == W("x3", 3)

    def test_eps(self):
        assert eps(1, 2, 2)(W("x1", 2)) == W("x2^-1 x1 x2", 2)

    def test_composite_from_conjugation_argument(self):
        e = compose(eps(1, 2, 2), eps(2, 1, 2))
        assert e(W("x1", 2)) == W("x1^-1 x2^-1 x1 x2 x1", 2)
        assert e(W("x2", 2)) == W("x1^-1 x2 x1", 2)

    def test_rank_mismatch(self):
        with pytest.raises(WordError):
            sigma(1, 3)(W("x1", 2))
        with pytest.raises(WordError):
            compose(sigma(1, 3), eps(1, 2, 2))


class TestConstructors:
    def test_a_pure_middle_strand(self):
        c = commutator(W("x1^-1", 3), W("x3^-1", 3))
        assert a_pure(1, 3, 3)(W("x2", 3)) == c * W("x2", 3) * ~c

    def test_a_pure_outer_strands(self):
        n = 4
        a = a_pure(2, 3, n)
        assert a(W("x2", n)) == W("x2 x3 x2 x3^-1 x2^-1", n)
        assert a(W("x3", n)) == W("x2 x3 x2^-1", n)
        assert a(W("x1", n)) == W("x1", n) and a(W("x4", n)) == W("x4", n)

    def test_eps3(self):
        assert eps3(1, 2, 3, 3)(W("x1", 3)) == W("x1 x2^-1 x3^-1 x2 x3", 3)

    def test_perm(self):
        assert perm((2, 1), 2)(W("x1", 2)) == W("x2", 2)

    @pytest.mark.parametrize(
        "make",
        [
            lambda: eps(1, 1, 3),
            lambda: eps(1, 4, 3),
            lambda: eps3(1, 2, 2, 3),
            lambda: a_pure(2, 2, 3),
            lambda: sigma(3, 3),
            lambda: perm((1, 1), 2),
        ],
    )
    def test_invalid_indices(self, make):
        with pytest.raises(WordError):
            make()

    @pytest.mark.parametrize("n", [2, 3, 4, 5])
    def test_generator_inverses(self, n):
        gens = [sigma(i, n) for i in range(1, n)]
        gens += [a_pure(r, s, n) for r, s in itertools.combinations(range(1, n + 1), 2)]
        gens += [eps(i, j, n) for i, j in itertools.permutations(range(1, n + 1), 2)]
        gens += [eps3(i, j, k, n) for i, j, k in itertools.permutations(range(1, n + 1), 3)]
        gens += [perm(p, n) for p in itertools.permutations(range(1, n + 1))][:6]
        for g in gens:
            assert compose(g, ~g).is_identity()
            assert compose(~g, g).is_identity()

    def test_eps_inverse_formula(self):
        assert eps(1, 2, 3, exp=-1)(W("x1", 3)) == W("x2 x1 x2^-1", 3)


class TestCompose:
    def test_identity_law(self):
        assert compose(identity(2), eps(1, 2, 2)) == eps(1, 2, 2)

    def test_inverse_pair(self):
        assert compose(eps(1, 2, 2), eps(1, 2, 2, -1)) == identity(2)

    @settings(max_examples=60)
    @given(st.data())
    def test_right_action(self, data):
        n = data.draw(st.integers(1, 4))
        a = Endomorphism(n, tuple(data.draw(free_words(n, 5)) for _ in range(n)))
        b = Endomorphism(n, tuple(data.draw(free_words(n, 5)) for _ in range(n)))
        c = Endomorphism(n, tuple(data.draw(free_words(n, 5)) for _ in range(n)))
        w = data.draw(free_words(n, 8))
        assert compose(a, b)(w) == b(a(w))
        assert compose(compose(a, b), c) == compose(a, compose(b, c))

    @settings(max_examples=60)
    @given(st.integers(2, 4).flatmap(lambda n: generator_words(n, [Gen("e", (1, 2)), Gen("s", (1,)), Gen("e3", (1, 2, 3)) if n > 2 else Gen("a", (1, 2))], 6)))
    def test_known_inverse_propagates(self, word):
        e = word.endomorphism()
        assert compose(e, ~e).is_identity()
        assert (~word).endomorphism() == ~e


class TestCommutator:
    def test_trivial(self):
        assert commutator(W("x1", 2), W("x1", 2)).is_identity()

    def test_basic(self):
        assert commutator(W("x1", 2), W("x2", 2)) == W("x1^-1 x2^-1 x1 x2", 2)

    def test_group_commutator_self(self):
        e = GeneratorWord(2, (Gen("e", (1, 2)),))
        assert len(group_commutator(e, e)) == 0
        assert group_commutator(eps(1, 2, 2), eps(1, 2, 2)).is_identity()

    def test_group_commutator_endomorphism(self):
        c = group_commutator(eps(1, 2, 2), eps(2, 1, 2))
        w = group_commutator(GeneratorWord(2, (Gen("e", (1, 2)),)), GeneratorWord(2, (Gen("e", (2, 1)),)))
        assert c == w.endomorphism()


class TestRelations:
    @pytest.mark.parametrize("n", [3, 4, 5])
    def test_braid_relations(self, n):
        for name, lhs, rhs in braid_relations(n):
            assert lhs.endomorphism() == rhs.endomorphism(), name

    def test_braid_relation_count(self):
        # 3 cubic relations and 3 commuting pairs in B_5
        assert len(braid_relations(5)) == 6

    @pytest.mark.parametrize("n", [3, 4, 5])
    def test_pure_relations(self, n):
        rels = pure_braid_relations(n)
        assert rels
        for name, lhs, rhs in rels:
            assert lhs.endomorphism() == rhs.endomorphism(), name


def _fixed_first(i, n):
    return [Gen("e", (i, k)) for k in range(1, i)]


class TestConjugationFormulas:
    @settings(max_examples=80)
    @given(st.data())
    def test_reverse_word_action(self, data):
        n = data.draw(st.integers(2, 5))
        i = data.draw(st.integers(2, n))
        w = data.draw(generator_words(n, _fixed_first(i, n), 10))
        e = w.endomorphism()
        star = reversed_substitution(w, i)
        assert e(FreeWord.gen(n, i)) == FreeWord.gen(n, i).conjugate(star)
        for k in range(1, n + 1):
            if k != i:
                assert e(FreeWord.gen(n, k)) == FreeWord.gen(n, k)

    def test_reverse_word_two_syllables(self):
        n = 4
        w = parse_generators("e[4,1] e[4,1] e[4,2]^-1", n)
        # x_4 e41^2 e42^-1 = x_4^(x2^-1 x1^2)
        assert w.endomorphism()(W("x4", n)) == W("x4", n).conjugate(W("x2^-1 x1 x1", n))

    @settings(max_examples=80)
    @given(generator_words(2, [Gen("e", (1, 2)), Gen("e", (2, 1))], 10))
    def test_cb2_action(self, w):
        e = w.endomorphism()
        c = swapped_substitution(w)
        for i in (1, 2):
            x = FreeWord.gen(2, i)
            assert e(x) == x.conjugate(c)
