"""VT, Tenengolts, zero-indel and Hamming primitives against brute force."""
import random
from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from labelcodes.classical import (
    DigitString,
    MultipleCandidates,
    NoCodeword,
    TenengoltsParams,
    UncorrectableSyndrome,
    VtParams,
    ZeroIndelParams,
    aggregate_nonzero_sums,
    base_convert,
    derivative,
    from_digits,
    hamming_decode,
    hamming_encode,
    hamming_params,
    hamming_redundancy,
    hamming_syndrome,
    integrate,
    s_class_size,
    signature,
    tenengolts_class_of,
    tenengolts_decode,
    tenengolts_decode_enum,
    tenengolts_member,
    to_digits,
    vt_codewords,
    vt_decode_indel,
    vt_member,
    vt_syndrome,
    zero_indel_class_size,
    zero_indel_codewords,
    zero_indel_decode,
    zero_indel_member,
    zero_indel_union,
)
from math import comb


class TestDerivative:
    def test_examples(self):
        assert derivative((1, 2, 2, 0), 4) == (1, 1, 0, 2)
        assert derivative((0, 0, 0), 4) == (0, 0, 0)
        assert derivative((1, 0, 1), 2) == (1, 1, 1)

    def test_integrate_examples(self):
        assert integrate((1, 1, 0, 2), 4) == (1, 2, 2, 0)
        assert integrate((1, 1, 1), 2) == (1, 0, 1)

    @given(st.integers(2, 4), st.lists(st.integers(0, 3), max_size=16))
    @settings(max_examples=200, deadline=None)
    def test_roundtrip(self, q, values):
        x = tuple(v % q for v in values)
        assert integrate(derivative(x, q), q) == x

    def test_roundtrip_exhaustive(self):
        for q in (2, 3, 4):
            for n in range(7):
                for x in product(range(q), repeat=n):
                    assert integrate(derivative(x, q), q) == x


class TestSignature:
    def test_example(self):
        assert signature((2, 0, 1, 1)) == (0, 1, 1)

    def test_constant_word_all_ones(self):
        assert signature((5, 5, 5, 5)) == (1, 1, 1)

    def test_strictly_decreasing_all_zeros(self):
        assert signature((9, 6, 3, 1)) == (0, 0, 0)


class TestVt:
    def test_vt0_4_codebook(self):
        words = vt_codewords(VtParams(4, 0))
        assert set(words) == {
            (0, 0, 0, 0), (0, 1, 1, 0), (1, 0, 0, 1), (1, 1, 1, 1)
        }

    def test_decode_examples(self):
        p = VtParams(4, 0)
        assert vt_decode_indel((0, 0, 1), p) == (1, 0, 0, 1)
        assert vt_decode_indel((1, 0, 0, 1), p) == (1, 0, 0, 1)

    def test_decode_rejects_noncodeword(self):
        with pytest.raises(NoCodeword):
            vt_decode_indel((1, 0, 0, 0), VtParams(4, 0))

    @pytest.mark.parametrize("n", range(1, 9))
    def test_indel_inversion_exhaustive(self, n):
        # every x is a codeword of VT_{syndrome(x)}(n)
        for x in product((0, 1), repeat=n):
            p = VtParams(n, vt_syndrome(x) % (n + 1))
            assert vt_member(x, p)
            for i in range(n):
                assert vt_decode_indel(x[:i] + x[i + 1 :], p) == x
            for i in range(n + 1):
                for b in (0, 1):
                    assert vt_decode_indel(x[:i] + (b,) + x[i:], p) == x

    def test_codebooks_partition_binary_words(self):
        n = 6
        total = sum(len(vt_codewords(VtParams(n, a))) for a in range(n + 1))
        assert total == 2**n


class TestTenengolts:
    def test_member_example(self):
        assert tenengolts_member((2, 0, 1, 1), TenengoltsParams(4, 3, 1, 1))

    def test_decode_deletion_example(self):
        p = TenengoltsParams(4, 3, 1, 1)
        assert tenengolts_decode((2, 1, 1), p) == (2, 0, 1, 1)

    def test_decode_identity(self):
        p = TenengoltsParams(4, 3, 1, 1)
        assert tenengolts_decode((2, 0, 1, 1), p) == (2, 0, 1, 1)

    def test_class_of_inverse(self):
        p = tenengolts_class_of((2, 0, 1, 1), 3)
        assert (p.a, p.b) == (1, 1)

    @pytest.mark.parametrize("q,n", [(3, 4), (3, 5), (4, 4), (11, 3)])
    def test_indel_inversion_exhaustive(self, q, n):
        for x in product(range(q), repeat=n):
            p = tenengolts_class_of(x, q)
            for i in range(n):
                y = x[:i] + x[i + 1 :]
                assert tenengolts_decode(y, p) == x
                assert tenengolts_decode_enum(y, p) == x
            for i in range(n + 1):
                for v in range(q):
                    y = x[:i] + (v,) + x[i:]
                    assert tenengolts_decode(y, p) == x
                    assert tenengolts_decode_enum(y, p) == x

    def test_fast_agrees_with_enum_on_sampled_sigma11(self):
        rng = random.Random(7)
        for _ in range(150):
            n = rng.randrange(4, 8)
            x = tuple(rng.randrange(11) for _ in range(n))
            p = tenengolts_class_of(x, 11)
            i = rng.randrange(n)
            y = x[:i] + x[i + 1 :]
            assert tenengolts_decode(y, p) == tenengolts_decode_enum(y, p) == x


class TestZeroIndel:
    def test_member_example(self):
        assert zero_indel_member((0, 2, 0, 1), ZeroIndelParams(4, 2, 0, 3))

    def test_decode_insertion_example(self):
        p = ZeroIndelParams(4, 2, 0, 3)
        assert zero_indel_decode((0, 2, 0, 0, 1), p) == (0, 2, 0, 1)

    def test_decode_identity(self):
        p = ZeroIndelParams(4, 2, 0, 3)
        assert zero_indel_decode((0, 2, 0, 1), p) == (0, 2, 0, 1)

    def test_class_sizes_factor(self):
        # |T| = (q-1)^w |S| and the S sizes partition the weight class
        for m in range(1, 9):
            for w in range(m + 1):
                total = sum(s_class_size(m, w, a) for a in range(w + 1))
                assert total == comb(m, w)
                for q in (2, 3, 4):
                    for a in range(w + 1):
                        p = ZeroIndelParams(m, w, a, q)
                        enum = sum(1 for _ in zero_indel_codewords(p))
                        assert enum == zero_indel_class_size(p)
                        assert enum == (q - 1) ** w * s_class_size(m, w, a)

    def test_union_best_class_bound(self):
        union = zero_indel_union(4, 2)
        w2 = dict((w, size) for w, _, size in union.classes)[2]
        assert w2 >= comb(4, 2) / 3

    def test_union_size_bound(self):
        union = zero_indel_union(4, 2)
        assert union.size >= 7  # 31/5 rounded up

    def test_weight_zero_class(self):
        p = ZeroIndelParams(5, 0, 0, 4)
        assert list(zero_indel_codewords(p)) == [(0, 0, 0, 0, 0)]

    def test_single_zero_insertion_keeps_codewords_apart(self):
        # the Dolecek lemma, verified exhaustively at small scale
        for q, m in ((2, 7), (3, 5), (4, 4)):
            for w in range(m + 1):
                for a in range(w + 1):
                    p = ZeroIndelParams(m, w, a, q)
                    seen = {}
                    for t in zero_indel_codewords(p):
                        for i in range(m + 1):
                            s = t[:i] + (0,) + t[i:]
                            assert seen.setdefault(s, t) == t
    def test_decode_rejects_bad_lengths_and_nonmembers(self):
        p = ZeroIndelParams(3, 1, 0, 2)
        with pytest.raises(NoCodeword):
            zero_indel_decode((0, 1, 0, 0, 0), p)
        with pytest.raises(NoCodeword):
            zero_indel_decode((0, 0, 1), p)  # syndrome 3 = 1 (mod 2), not 0

    def test_multiple_candidates_never_fires_for_true_parameters(self):
        # each class is itself a single zero-indel code, so candidate
        # enumeration finds at most one member; exhausted at small scale
        for q, m in ((2, 6), (3, 5)):
            for w in range(m + 1):
                for a in range(w + 1):
                    p = ZeroIndelParams(m, w, a, q)
                    for t in zero_indel_codewords(p):
                        for i in range(m + 1):
                            zero_indel_decode(t[:i] + (0,) + t[i:], p)


class TestHamming:
    def test_canonical_matrix_shape(self):
        hp = hamming_params(11, 2)
        assert len(hp.columns) == 12
        assert hp.columns[0] == (0, 1)
        assert hp.columns[1] == (1, 0)
        assert hp.columns[-1] == (1, 10)

    def test_zero_message_zero_parity(self):
        hp = hamming_params(11, 2)
        assert hamming_redundancy((0,) * 6, hp) == (0, 0)

    def test_parity_regression(self):
        # brute-forced once over all 121 parity pairs; unique zero-syndrome
        hp = hamming_params(11, 2)
        assert hamming_redundancy((1, 0, 6, 0), hp) == (4, 3)

    def test_encoded_words_have_zero_syndrome(self):
        hp = hamming_params(11, 2)
        rng = random.Random(3)
        for _ in range(50):
            msg = tuple(rng.randrange(11) for _ in range(rng.randrange(1, 10)))
            word = hamming_encode(msg, hp)
            assert not any(hamming_syndrome(word, hp, len(msg)))

    @pytest.mark.parametrize("msg_len", range(1, 7))
    def test_all_single_substitutions_corrected(self, msg_len):
        hp = hamming_params(11, 2)
        rng = random.Random(msg_len)
        for _ in range(40):
            msg = tuple(rng.randrange(11) for _ in range(msg_len))
            word = hamming_encode(msg, hp)
            for i in range(len(word)):
                for v in range(11):
                    if v == word[i]:
                        continue
                    corrupted = word[:i] + (v,) + word[i + 1 :]
                    assert hamming_decode(corrupted, hp) == word

    def test_two_errors_rejected(self):
        # syndrome (1,1)+(1,2) = (2,3) ~ column (1,7), outside the used set
        hp = hamming_params(11, 2)
        word = hamming_encode((0, 0), hp)
        corrupted = (1, 1) + word[2:]
        with pytest.raises(UncorrectableSyndrome):
            hamming_decode(corrupted, hp)

    def test_larger_field_and_r(self):
        hp = hamming_params(5, 3)
        assert len(hp.columns) == 31
        msg = (4, 0, 3, 2, 1)
        word = hamming_encode(msg, hp)
        corrupted = ((word[0] + 2) % 5,) + word[1:]
        assert hamming_decode(corrupted, hp) == word


class TestBaseConvert:
    def test_paper_example(self):
        assert str(base_convert(7, 11, 4, 2)) == "13"

    def test_zero(self):
        assert str(base_convert(0, 11, 4, 2)) == "00"

    def test_ten(self):
        assert str(base_convert(10, 11, 4, 2)) == "22"

    def test_value_property(self):
        ds = base_convert(7, 11, 4, 2)
        assert isinstance(ds, DigitString)
        assert ds.value == 7 and ds.width == 2

    def test_overflow(self):
        with pytest.raises(ValueError):
            to_digits(16, 4, 2)

    @given(st.integers(2, 12), st.integers(1, 6), st.data())
    @settings(max_examples=200, deadline=None)
    def test_roundtrip(self, base, width, data):
        value = data.draw(st.integers(0, base**width - 1))
        assert from_digits(to_digits(value, base, width), base) == value


def test_aggregate_nonzero_sums_matches_enumeration():
    for q in (2, 3, 4):
        for w in range(5):
            counts = aggregate_nonzero_sums(w, q)
            brute = [0] * q
            for values in product(range(1, q), repeat=w):
                brute[sum(values) % q] += 1
            assert list(counts) == brute
