import itertools

import pytest
from hypothesis import given, settings, strategies as st

from schubertcalc import (
    DomainError,
    NotGrassmannianError,
    OutOfRangeError,
    ParseError,
    Partition,
    Permutation,
    Transposition,
    all_permutations,
    apply_transposition,
    c_perm,
    compose,
    conjugate_by_w0,
    descents,
    embed,
    format_permutation,
    grassmannian_from_shape,
    h_perm,
    identity,
    inverse,
    is_cover,
    is_grassmannian,
    lehmer_code,
    length,
    longest,
    parse_permutation,
    permutation_from_lehmer,
    permutation_from_word,
    r_perm,
    reduced_word,
    restrict,
    shape,
    trim,
)

W = parse_permutation("5412763")
W_PRIME = parse_permutation("6524713")
W_DPRIME = parse_permutation("7431652")


def from_cycle(cycle, n):
    """Independent cycle-notation constructor used to cross-check the
    shape-based construction of the special permutations."""
    imgs = list(range(1, n + 1))
    for i, x in enumerate(cycle):
        imgs[x - 1] = cycle[(i + 1) % len(cycle)]
    return Permutation(tuple(imgs))


def brute_force_length(w):
    count = 0
    for i in range(w.n):
        for j in range(i + 1, w.n):
            if w.images[i] > w.images[j]:
                count += 1
    return count


class TestLength:
    def test_golden_example(self):
        assert length(W) == 10
        assert length(W_PRIME) == 14
        assert length(W_DPRIME) == 14

    def test_identity(self):
        assert length(identity(7)) == 0

    def test_longest(self):
        assert longest(4).images == (4, 3, 2, 1)
        assert length(longest(4)) == 6


class TestCovers:
    def test_golden_cover(self):
        assert is_cover(W, Transposition(3, 4))

    def test_identity_adjacent(self):
        assert is_cover(identity(3), Transposition(1, 2))

    def test_descent_blocks(self):
        assert not is_cover(parse_permutation("321"), Transposition(1, 2))

    def test_value_in_between_blocks(self):
        # id(1) = 1 < id(3) = 3, but id(2) = 2 lies between
        assert not is_cover(identity(3), Transposition(1, 3))

    def test_matches_length_increment_exhaustive(self):
        for n in range(2, 6):
            for w in all_permutations(n):
                lw = length(w)
                for a, b in itertools.combinations(range(1, n + 1), 2):
                    t = Transposition(a, b)
                    jump = length(apply_transposition(w, t)) - lw
                    assert jump % 2 == 1
                    assert is_cover(w, t) == (jump == 1)


class TestApplyTransposition:
    def test_golden_chain(self):
        u = apply_transposition(W, Transposition(3, 4))
        assert u == parse_permutation("5421763")
        for t in [Transposition(1, 6), Transposition(3, 7), Transposition(1, 5)]:
            u = apply_transposition(u, t)
        assert u == W_DPRIME

    def test_involution(self):
        t = Transposition(2, 5)
        assert apply_transposition(apply_transposition(W, t), t) == W

    def test_smallest(self):
        assert apply_transposition(identity(2), Transposition(1, 2)).images == (2, 1)


class TestReducedWord:
    def test_identity_empty(self):
        assert reduced_word(identity(4)) == ()

    def test_s2(self):
        assert reduced_word(parse_permutation("21")) == (1,)

    def test_321_brute_force(self):
        word = reduced_word(parse_permutation("321"))
        assert word == (1, 2, 1)
        assert len(word) == 3
        assert permutation_from_word(3, word) == parse_permutation("321")

    def test_reconstructs_exhaustive(self):
        for n in range(1, 6):
            for w in all_permutations(n):
                word = reduced_word(w)
                assert len(word) == length(w)
                assert permutation_from_word(n, word) == w


class TestShape:
    def test_single_row(self):
        w = Permutation((1, 2, 7, 3, 4, 5, 6))
        assert shape(w, 3) == Partition((4,))
        assert w == r_perm(3, 4, 7)

    def test_identity_any_k(self):
        for k in range(1, 5):
            assert shape(identity(5), k) == Partition(())

    def test_two_parts(self):
        assert shape(parse_permutation("2413"), 2) == Partition((2, 1))

    def test_rejects_other_descents(self):
        with pytest.raises(NotGrassmannianError):
            shape(parse_permutation("321"), 1)

    def test_roundtrip_exhaustive(self):
        for n in range(2, 6):
            for k in range(1, n):
                for w in all_permutations(n):
                    if is_grassmannian(w, k):
                        assert grassmannian_from_shape(shape(w, k), k, n) == w


class TestSpecialPermutations:
    def test_r_perm(self):
        assert r_perm(2, 2, 4) == parse_permutation("1423")
        assert r_perm(2, 2, 4) == from_cycle((4, 3, 2), 4)

    def test_c_perm(self):
        assert c_perm(4, 4, 7) == parse_permutation("2345167")
        assert c_perm(4, 4, 7) == from_cycle((1, 2, 3, 4, 5), 7)

    def test_h_perm(self):
        assert h_perm(2, 2, 2, 4) == parse_permutation("2413")
        assert h_perm(2, 2, 2, 4) == from_cycle((1, 2, 4, 3), 4)

    def test_cycle_forms_exhaustive(self):
        for n in range(2, 8):
            for k in range(1, n):
                for m in range(1, n - k + 1):
                    expected = from_cycle(tuple(range(k + m, k - 1, -1)), n)
                    assert r_perm(k, m, n) == expected
                for m in range(1, k + 1):
                    if k + 1 > n:
                        continue
                    expected = from_cycle(tuple(range(k - m + 1, k + 2)), n)
                    assert c_perm(k, m, n) == expected
                for p in range(1, n - k + 1):
                    for q in range(1, k + 1):
                        cyc = tuple(range(k - q + 1, k + 1)) + tuple(range(k + p, k, -1))
                        assert h_perm(k, p, q, n) == from_cycle(cyc, n)

    def test_reductions_to_row_and_column(self):
        assert h_perm(3, 2, 1, 6) == r_perm(3, 2, 6)
        assert h_perm(3, 1, 2, 6) == c_perm(3, 2, 6)

    def test_preconditions(self):
        with pytest.raises(OutOfRangeError):
            r_perm(3, 3, 5)
        with pytest.raises(OutOfRangeError):
            c_perm(2, 3, 5)
        with pytest.raises(OutOfRangeError):
            h_perm(2, 2, 3, 7)


class TestRestrict:
    def test_small(self):
        assert restrict(parse_permutation("321"), 2) == parse_permutation("21")

    def test_identity(self):
        for p in range(1, 6):
            assert restrict(identity(5), p) == identity(4)

    def test_longest(self):
        for p in range(1, 6):
            assert restrict(longest(5), p) == longest(4)

    def test_golden(self):
        # deleting row 5 and column 7 of 5412763
        assert restrict(W, 5) == parse_permutation("541263")


class TestConjugation:
    def test_row_column_duality(self):
        assert conjugate_by_w0(r_perm(3, 4, 7)) == c_perm(4, 4, 7)

    def test_identity_fixed(self):
        assert conjugate_by_w0(identity(5)) == identity(5)

    def test_involution_and_length(self):
        for w in all_permutations(4):
            ww = conjugate_by_w0(w)
            assert conjugate_by_w0(ww) == w
            assert length(ww) == length(w)

    def test_duality_all_degrees(self):
        for n in range(2, 8):
            for k in range(1, n):
                for m in range(0, n - k + 1):
                    assert conjugate_by_w0(r_perm(k, m, n)) == c_perm(n - k, m, n)


class TestEmbed:
    def test_preserves_length_covers_shape(self):
        for n in range(2, 5):
            for w in all_permutations(n):
                for N in range(n, n + 3):
                    we = embed(w, N)
                    assert length(we) == length(w)
                    for a, b in itertools.combinations(range(1, n + 1), 2):
                        assert is_cover(we, Transposition(a, b)) == is_cover(w, Transposition(a, b))
                    for k in range(1, n):
                        if is_grassmannian(w, k):
                            assert shape(we, k) == shape(w, k)

    def test_trim_inverts_embed(self):
        assert trim(embed(W, 11)) == W

    def test_embed_shrinking_rejected(self):
        with pytest.raises(OutOfRangeError):
            embed(W, 5)


class TestGroupOps:
    def test_compose_inverse(self):
        for w in all_permutations(4):
            assert compose(w, inverse(w)) == identity(4)
            assert compose(inverse(w), w) == identity(4)

    def test_descents(self):
        assert descents(W) == (1, 2, 5, 6)
        assert descents(identity(6)) == ()

    def test_lehmer_roundtrip(self):
        for n in range(1, 6):
            for w in all_permutations(n):
                assert permutation_from_lehmer(lehmer_code(w)) == trim(w)
                assert sum(lehmer_code(w)) == length(w)


class TestTextFormat:
    def test_parse_both_forms(self):
        assert parse_permutation("5412763") == parse_permutation("5,4,1,2,7,6,3")

    def test_compact_only_small(self):
        big = Permutation(tuple(range(1, 12)))
        assert "," in format_permutation(big)
        assert parse_permutation(format_permutation(big)) == big

    def test_malformed(self):
        for bad in ["", "5,4", "0", "12a", "1,1,2"]:
            with pytest.raises(ParseError):
                parse_permutation(bad)

    @settings(max_examples=60, deadline=None)
    @given(st.permutations(list(range(1, 8))))
    def test_roundtrip(self, imgs):
        w = Permutation(tuple(imgs))
        assert parse_permutation(format_permutation(w)) == w


class TestValidation:
    def test_bad_images(self):
        with pytest.raises(DomainError):
            Permutation((1, 1, 2))
        with pytest.raises(DomainError):
            Permutation((0, 1))

    def test_bad_transposition(self):
        with pytest.raises(DomainError):
            Transposition(3, 2)
        with pytest.raises(DomainError):
            Transposition(0, 1)
