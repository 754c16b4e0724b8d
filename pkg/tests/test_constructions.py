"""Encoders E1/E2, the all-labels deletion code, lifting and the searches.

Regression constants here were computed by this implementation and
cross-checked by the brute-force oracles (ball disjointness and the
candidate-enumeration decoders) before being frozen.
"""
from fractions import Fraction
from itertools import product

import pytest

from labelcodes.bounds import lower_bound_size
from labelcodes.constructions import (
    AmbiguousDecoding,
    E1Layout,
    E2Layout,
    MINIMAL_SET,
    NotDecodable,
    build_all_labels_deletion_code,
    coset_decode,
    decode_all_labels_deletion,
    decode_all_labels_deletion_enum,
    e1_decode,
    e1_decode_enum,
    e1_encode,
    e2_decode,
    e2_decode_enum,
    e2_encode,
    lift_code,
    search_hamming_coset,
    search_tenengolts_labeling_code,
)
from labelcodes.formats import word_from_text, word_to_text
from labelcodes.labeling import DNA, all_labels_set, label_framed, label_word
from labelcodes.oracle import ErrorSpec, is_labeling_code

S = MINIMAL_SET


def dna(text):
    return word_from_text(text, DNA)


class TestE1Layout:
    @pytest.mark.parametrize(
        "k,n", [(2, 7), (3, 8), (4, 9), (5, 11), (6, 12), (16, 22), (17, 24)]
    )
    def test_widths(self, k, n):
        layout = E1Layout(k)
        assert layout.n == n
        assert layout.n == k + layout.separator_width + layout.beta_width + layout.gamma_width

    def test_rejects_k1(self):
        with pytest.raises(ValueError):
            E1Layout(1)


class TestE1Encode:
    def test_regression_acgt(self):
        # beta = 5 -> CC, gamma = 0 -> A over the transmitted prefix
        assert word_to_text(e1_encode(dna("ACGT")), DNA) == "ACGTGGCCA"

    def test_all_zero_prefix(self):
        # AAAA: every prefix label is 0, so beta = 0 ("AA") while the
        # all-ones signature gives gamma = 1+2+3+4 = 10 = 2 (mod 4)
        assert word_to_text(e1_encode(dna("AAAA")), DNA) == "AAAATTAAG"

    def test_systematic_prefix(self):
        for x in product(range(4), repeat=4):
            assert e1_encode(x)[:4] == x

    def test_separator_rule(self):
        assert e1_encode(dna("AT"))[2:4] == (2, 2)  # ends in T -> GG
        assert e1_encode(dna("AG"))[2:4] == (3, 3)  # ends in G -> TT

    def test_separator_position_invariants(self):
        # framed labeling: position k+2 is GG/TT, position k+1 never is
        for k in (2, 3, 4):
            for x in product(range(4), repeat=k):
                ell = label_framed(e1_encode(x), S)
                assert ell[k + 1] in (5, 10)
                assert ell[k] in (0, 6, 9)


class TestE1Decode:
    def test_identity(self):
        ell = label_framed(e1_encode(dna("ACGT")), S)
        assert ell == (0, 1, 0, 6, 9, 5, 4, 0, 2, 0)
        assert e1_decode(ell, 4) == dna("ACGT")

    def test_single_deletion_example(self):
        ell = label_framed(e1_encode(dna("ACGT")), S)
        assert e1_decode(ell[:2] + ell[3:], 4) == dna("ACGT")

    def test_rejects_garbage(self):
        with pytest.raises(NotDecodable):
            e1_decode((0,) * 10, 4)
        with pytest.raises(NotDecodable):
            e1_decode((0,) * 3, 4)

    @pytest.mark.parametrize("k", [2, 3, 4])
    def test_all_single_indels(self, k):
        codebook = {}
        for x in product(range(4), repeat=k):
            codebook[label_framed(e1_encode(x), S)] = x
        for ell, x in codebook.items():
            for i in range(len(ell)):
                u = ell[:i] + ell[i + 1 :]
                assert e1_decode(u, k) == x
                assert e1_decode_enum(u, k, codebook=codebook) == x
            for i in range(len(ell) + 1):
                for v in range(11):
                    u = ell[:i] + (v,) + ell[i:]
                    assert e1_decode(u, k) == x
                    assert e1_decode_enum(u, k, codebook=codebook) == x

    def test_enum_without_codebook(self):
        ell = label_framed(e1_encode(dna("ACGT")), S)
        assert e1_decode_enum(ell[1:], 4) == dna("ACGT")


class TestE2Layout:
    @pytest.mark.parametrize("k,r,n", [(2, 2, 9), (6, 2, 13), (9, 2, 16), (10, 3, 19)])
    def test_widths(self, k, r, n):
        layout = E2Layout(k)
        assert layout.r == r
        assert layout.n == n


class TestE2Encode:
    def test_regression_acgt(self):
        # t = 7 -> parity pair TA; parity digits (5, 1) -> blocks GG, CG
        assert word_to_text(e2_encode(dna("ACGT")), DNA) == "ACGTTAGGGCG"

    def test_zero_sum_parity_pair(self):
        # t = 0 encodes as the unlabeled pair AA
        c = e2_encode(dna("AAAA"))
        assert c[4:6] == (0, 0)

    def test_systematic_prefix(self):
        for x in product(range(4), repeat=3):
            assert e2_encode(x)[:3] == x

    def test_parity_pair_is_sum_label(self):
        for x in product(range(4), repeat=3):
            ell = label_framed(e2_encode(x), S)
            assert ell[3 + 1] == sum(ell[:3]) % 11


class TestE2Decode:
    def test_identity(self):
        ell = label_framed(e2_encode(dna("ACGT")), S)
        assert e2_decode(ell, 4) == dna("ACGT")

    @pytest.mark.parametrize("k", [2, 3, 4])
    def test_all_single_substitutions(self, k):
        codebook = {}
        for x in product(range(4), repeat=k):
            codebook[label_framed(e2_encode(x), S)] = x
        for ell, x in codebook.items():
            for i in range(len(ell)):
                for v in range(11):
                    if v == ell[i]:
                        continue
                    u = ell[:i] + (v,) + ell[i + 1 :]
                    assert e2_decode(u, k) == x
                    assert e2_decode_enum(u, k, codebook=codebook) == x

    def test_wrong_length_rejected(self):
        with pytest.raises(NotDecodable):
            e2_decode((0,) * 5, 4)

    def test_enum_without_codebook(self):
        ell = label_framed(e2_encode(dna("AC")), S)
        u = ell[:1] + ((ell[1] + 3) % 11,) + ell[2:]
        assert e2_decode_enum(u, 2) == dna("AC")


class TestAllLabelsCode:
    @pytest.mark.parametrize("q,n", [(2, 2), (2, 7), (3, 4), (4, 4)])
    def test_size_meets_lower_bound(self, q, n):
        code = build_all_labels_deletion_code(q, n)
        assert code.size >= lower_bound_size(n, q)
        assert code.size == len(code.codebook)

    def test_member_derivative_residue(self):
        # telescoping: the extended derivative always sums to x_end - x0
        code = build_all_labels_deletion_code(3, 4)
        for x in code.codebook:
            d = code.extended_derivative(x)
            assert sum(d) % 3 == (code.x_end - code.x0) % 3

    def test_counts_match_enumeration(self):
        for q, n in ((2, 4), (3, 3)):
            code = build_all_labels_deletion_code(q, n)
            for end in range(q):
                brute = 0
                for x in product(range(q), repeat=n):
                    full = (code.x0,) + x + (end,)
                    from labelcodes.classical import derivative

                    if code.union.member(derivative(full, q)[1:]):
                        brute += 1
                assert brute == code.counts_by_end[end]

    def test_formula_mode_skips_codebook(self):
        code = build_all_labels_deletion_code(2, 4, codebook_cap=4)
        assert code.codebook is None
        assert code.size == build_all_labels_deletion_code(2, 4).size

    @pytest.mark.parametrize("q,n", [(2, 6), (3, 4), (4, 3)])
    def test_decode_every_indel(self, q, n):
        code = build_all_labels_deletion_code(q, n)
        book = {label_framed(x, code.labels, code.flanks): x for x in code.codebook}
        sigma = q * q
        for ell, x in book.items():
            assert decode_all_labels_deletion(ell, code) == x
            for i in range(len(ell)):
                u = ell[:i] + ell[i + 1 :]
                assert decode_all_labels_deletion(u, code) == x
                assert decode_all_labels_deletion_enum(u, code, book) == x
            for i in range(len(ell) + 1):
                for v in range(sigma):
                    u = ell[:i] + (v,) + ell[i:]
                    assert decode_all_labels_deletion(u, code) == x
                    assert decode_all_labels_deletion_enum(u, code, book) == x

    def test_not_decodable_reported(self):
        code = build_all_labels_deletion_code(2, 4)
        with pytest.raises(NotDecodable):
            decode_all_labels_deletion((0,) * 9, code)


class TestLiftCode:
    def test_full_space(self):
        labelings = {label_framed(x, S) for x in product(range(4), repeat=3)}
        assert len(lift_code(labelings, S)) == 64

    def test_empty(self):
        assert lift_code([], S) == ()

    def test_singleton(self):
        u = label_framed(dna("ACGT"), S)
        assert lift_code([u], S) == (dna("ACGT"),)


class TestSearches:
    def test_tenengolts_regression_n4(self):
        res = search_tenengolts_labeling_code(4)
        assert (res.a, res.b, res.size) == (3, 6, 10)
        assert res.valid_count == 256

    @pytest.mark.parametrize("n", [4, 5])
    def test_tenengolts_floor(self, n):
        res = search_tenengolts_labeling_code(n)
        assert res.size >= Fraction(4**n, 11 * n)
        assert res.size >= Fraction(res.valid_count, 11 * (n + 1))

    def test_tenengolts_class_is_indel_code(self):
        res = search_tenengolts_labeling_code(4)
        for spec in (ErrorSpec(deletions=1), ErrorSpec(insertions=1)):
            assert is_labeling_code(res.codebook, S, res.flanks, spec).passed

    def test_tenengolts_partition(self):
        # class sizes over all (a, b) sum to the number of words
        from collections import Counter
        from labelcodes.classical import vt_syndrome, signature

        n = 4
        counts = Counter()
        for x in product(range(4), repeat=n):
            u = label_framed(x, S)
            counts[(vt_syndrome(signature(u)) % (n + 1), sum(u) % 11)] += 1
        assert sum(counts.values()) == 4**n

    def test_coset_regression_n4(self):
        res = search_hamming_coset(4)
        assert res.syndrome == (6, 0)
        assert res.size == 7

    @pytest.mark.parametrize("n", [3, 4, 5])
    def test_coset_floor_and_code_property(self, n):
        res = search_hamming_coset(n)
        assert res.size >= Fraction(4**n, (10 * n + 1) * 11)
        report = is_labeling_code(
            res.codebook, S, res.flanks, ErrorSpec(substitutions=1)
        )
        assert report.passed

    def test_coset_decode_all_substitutions(self):
        res = search_hamming_coset(4)
        for x in res.codebook:
            ell = label_framed(x, S, res.flanks)
            assert coset_decode(ell, res) == x
            for i in range(len(ell)):
                for v in range(11):
                    if v != ell[i]:
                        u = ell[:i] + (v,) + ell[i + 1 :]
                        assert coset_decode(u, res) == x

    def test_cosets_partition_full_space(self):
        # syndrome histogram over all of Sigma_11^n sums to 11^n
        from collections import Counter
        from labelcodes.constructions import _coset_syndrome
        from labelcodes.classical import hamming_params

        n = 3
        hp = hamming_params(11, 2)
        cols = hp.columns[: n + 1]
        counts = Counter()
        for u in product(range(11), repeat=n + 1):
            counts[_coset_syndrome(u, cols, 11)] += 1
        assert sum(counts.values()) == 11 ** (n + 1)
        assert len(counts) == 121
