"""Labeling-code constructions: systematic encoders E1/E2, the all-labels
single-deletion code, code lifting, and the existence searches.

Framing convention used throughout: the channel carries the framed
labeling of the codeword, ell = label_framed(c, S, flanks), of length n+1.
Both encoders protect the transmitted label prefix

    v = (labels of the pairs (x_0,x_1) ... (x_{k-1},x_k), seam)

where the seam is the label of the pair joining the last data symbol to
the first redundancy symbol.  Protecting v rather than the bare data
labeling is what makes the constructions actual labeling codes: words such
as AA and AG share their unframed labeling, and any redundancy computed
from it alone would leave their codeword labelings one substitution apart.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property
from itertools import product
from typing import Optional

from . import kernels as _k
from .classical import (
    NoCodeword,
    ZeroIndelUnion,
    aggregate_nonzero_sums,
    from_digits,
    hamming_params,
    hamming_syndrome,
    hamming_redundancy,
    s_class_size,
    to_digits,
    vt_syndrome,
    zero_indel_codewords,
    zero_indel_union,
)
from .labeling import (
    DEFAULT_FLANKS,
    AmbiguousLabeling,
    EnumerationBudgetExceeded,
    FlankConvention,
    InvalidLabeling,
    LabelSet,
    all_labels_set,
    invert_labeling,
    label_framed,
    label_word,
    minimal_dna_set,
)


class NotDecodable(Exception):
    """The received word is not within the error budget of any codeword."""


class AmbiguousDecoding(Exception):
    """Several codewords explain the received word; the code property
    guarantees this never fires for in-budget corruptions."""


MINIMAL_SET = minimal_dna_set()

_SEP_GG = 5   # labeling symbol of GG
_SEP_TT = 10  # labeling symbol of TT


def _pair_label(a: int, b: int, labels: LabelSet = MINIMAL_SET) -> int:
    return labels.pair_table[a * labels.q + b]


def _is_subsequence(short, long) -> bool:
    it = iter(long)
    return all(any(v == w for w in it) for v in short)


def _within_one_deletion(received, ell) -> bool:
    return len(received) == len(ell) - 1 and _is_subsequence(received, ell)


def _within_one_insertion(received, ell) -> bool:
    return len(received) == len(ell) + 1 and _is_subsequence(ell, received)


def _hamming_le_one(a, b) -> bool:
    if len(a) != len(b):
        return False
    return sum(1 for x, y in zip(a, b) if x != y) <= 1


def _fill_window(pairs, left: int, right: int, labels: LabelSet, limit: int = 32):
    """All symbol fillings consistent with a window of pair constraints.

    pairs[i] constrains the pair (c_i, c_{i+1}): a positive label pins both
    symbols, 0 requires a zero-graph edge, None leaves the pair free (used
    when a decoder hypothesises that one received label is untrustworthy).
    Returns interior fillings c_1..c_{M-1}, at most `limit` of them.
    """
    q = labels.q
    first, second = labels.label_first, labels.label_second
    zero_adj = labels.zero_adj
    m = len(pairs)
    pins = [-1] * (m + 1)
    pins[0], pins[m] = left, right
    for i, p in enumerate(pairs):
        if p is None or p == 0:
            continue
        a, b = first[p], second[p]
        if pins[i] == -1:
            pins[i] = a
        elif pins[i] != a:
            return []
        if pins[i + 1] == -1:
            pins[i + 1] = b
        elif pins[i + 1] != b:
            return []
    results = []
    symbols = [0] * (m + 1)
    symbols[0] = left

    def edge_ok(i, a, b):
        p = pairs[i]
        if p is None:
            return True
        if p == 0:
            return bool(zero_adj[a * q + b])
        return first[p] == a and second[p] == b

    def rec(i):
        if len(results) > limit:
            return
        if i == m + 1:
            results.append(tuple(symbols[1:m]))
            return
        prev = symbols[i - 1]
        if pins[i] != -1:
            if edge_ok(i - 1, prev, pins[i]):
                symbols[i] = pins[i]
                rec(i + 1)
            return
        for cand in range(q):
            if edge_ok(i - 1, prev, cand):
                symbols[i] = cand
                rec(i + 1)

    rec(1)
    return results


def _invert_window(pairs, left: int, right: int, labels: LabelSet = MINIMAL_SET):
    """Unique filling of a fully-constrained window, or None."""
    status, syms = _k.invert_framed_pairs(
        tuple(pairs), labels.q, labels.label_first, labels.label_second,
        labels.zero_adj, left, right, labels.all_pairs,
    )
    return syms if status == _k.OK else None


# ---------------------------------------------------------------------------
# Construction 1: systematic single-indel encoder


def _gamma_width(k: int) -> int:
    w = 1
    while 4**w < k:
        w += 1
    return w


@dataclass(frozen=True)
class E1Layout:
    """Segment widths of an E1 codeword: x | s s | beta (2) | gamma."""

    k: int

    def __post_init__(self):
        if self.k < 2:
            raise ValueError("E1 needs a data length of at least 2")

    @property
    def separator_width(self) -> int:
        return 2

    @property
    def beta_width(self) -> int:
        return 2

    @property
    def gamma_width(self) -> int:
        return _gamma_width(self.k)

    @property
    def n(self) -> int:
        return self.k + 4 + self.gamma_width


def _e1_separator(last_symbol: int) -> int:
    # T after A/C/G, G after T: the separator pair is always GG or TT
    return 2 if last_symbol == 3 else 3


def _prefix_labels(x, seam_symbol: int, flanks: FlankConvention):
    """Labels of the pairs (x_0,x_1)..(x_{k-1},x_k),(x_k,seam_symbol)."""
    framed = label_framed(x, MINIMAL_SET, flanks)
    return framed[:-1] + (_pair_label(x[-1], seam_symbol),)


def e1_encode(x, flanks: FlankConvention = DEFAULT_FLANKS):
    """Systematic single-indel encoder over the minimal DNA label set.

    Appends a two-symbol separator (GG or TT, chosen so it never collides
    with the seam pair), the label-sum syndrome beta (mod 11, two base-4
    symbols) and the signature VT syndrome gamma (mod k) of the protected
    prefix v.
    """
    x = tuple(x)
    layout = E1Layout(len(x))
    if any(not 0 <= v < 4 for v in x):
        raise ValueError("data word must be over the DNA alphabet")
    s = _e1_separator(x[-1])
    v = _prefix_labels(x, s, flanks)
    beta = sum(v) % 11
    gamma = vt_syndrome(_k.signature(v)) % layout.k
    return (
        x
        + (s, s)
        + to_digits(beta, 4, 2)
        + to_digits(gamma, 4, layout.gamma_width)
    )


def _seam_to_separator(seam: int) -> Optional[int]:
    # label(x_k, s): s=T gives AT/CT (0) or GT (6); s=G only as TG (9)
    if seam in (0, 6):
        return 3
    if seam == 9:
        return 2
    return None


def _e1_invert_prefix(v, sep: int, flanks: FlankConvention):
    """Data word from prefix labels v = (pair labels, seam), or None."""
    syms = _invert_window(v, flanks.left, sep)
    return syms


def _e1_verify(x, u, flanks, relation):
    try:
        ell = label_framed(e1_encode(x, flanks), MINIMAL_SET, flanks)
    except ValueError:
        return False
    return relation(u, ell)


def _e1_tail_syndromes(tail, sep: int, layout: E1Layout, flanks: FlankConvention):
    """Recover (beta, gamma) from the intact redundancy labels.

    tail are the labels ell_{k+2}..ell_{n+1}, covering the redundancy
    symbols; the window is anchored by the separator on the left and the
    flank on the right.
    """
    syms = _invert_window(tail, sep, flanks.right)
    if syms is None or len(syms) != 3 + layout.gamma_width or syms[0] != sep:
        return None
    beta = from_digits(syms[1:3], 4)
    gamma = from_digits(syms[3:], 4)
    if beta >= 11 or gamma >= layout.k:
        return None
    return beta, gamma


def e1_decode(u, k: int, flanks: FlankConvention = DEFAULT_FLANKS):
    """Decode one deletion or insertion in the framed labeling of E1(x).

    The separator test (is the label at the seam-adjacent position GG/TT?)
    locates the error region; an error in the protected prefix is repaired
    with the beta/gamma syndromes recovered from the intact tail, and every
    candidate is verified against its re-encoded labeling before being
    accepted.
    """
    u = tuple(u)
    layout = E1Layout(k)
    n = layout.n
    if any(not 0 <= v < 11 for v in u):
        raise NotDecodable("symbol outside the labeling alphabet")
    if len(u) == n + 1:
        try:
            word = invert_labeling(u, MINIMAL_SET, flanks)
        except (InvalidLabeling, AmbiguousLabeling):
            raise NotDecodable("clean-length word is not a codeword labeling")
        x = word[:k]
        if e1_encode(x, flanks) != word:
            raise NotDecodable("clean-length word is not a codeword labeling")
        return x
    if len(u) == n:
        if u[k] in (_SEP_GG, _SEP_TT):
            # deletion inside the protected prefix; tail is intact
            sep = 2 if u[k] == _SEP_GG else 3
            syndromes = _e1_tail_syndromes(u[k:], sep, layout, flanks)
            if syndromes is None:
                raise NotDecodable("redundancy region is inconsistent")
            beta, gamma = syndromes
            received = u[:k]
            results = set()
            for pos in range(k + 1):
                for val in range(11):
                    cand = received[:pos] + (val,) + received[pos:]
                    if sum(cand) % 11 != beta:
                        continue
                    if vt_syndrome(_k.signature(cand)) % k != gamma:
                        continue
                    x = _e1_invert_prefix(cand, sep, flanks)
                    if x is not None and _e1_verify(
                        x, u, flanks, _within_one_deletion
                    ):
                        results.add(x)
            if len(results) == 1:
                return results.pop()
            raise NotDecodable("no unique prefix repair")
        sep = _seam_to_separator(u[k])
        if sep is None:
            raise NotDecodable("seam label is inconsistent")
        x = _e1_invert_prefix(u[: k + 1], sep, flanks)
        if x is None or not _e1_verify(x, u, flanks, _within_one_deletion):
            raise NotDecodable("prefix does not invert to a codeword")
        return x
    if len(u) == n + 2:
        if u[k + 1] in (_SEP_GG, _SEP_TT):
            # insertion after the protected prefix
            sep = _seam_to_separator(u[k])
            if sep is None:
                raise NotDecodable("seam label is inconsistent")
            x = _e1_invert_prefix(u[: k + 1], sep, flanks)
            if x is None or not _e1_verify(x, u, flanks, _within_one_insertion):
                raise NotDecodable("prefix does not invert to a codeword")
            return x
        if u[k + 2] not in (_SEP_GG, _SEP_TT):
            raise NotDecodable("separator not found after an insertion")
        sep = 2 if u[k + 2] == _SEP_GG else 3
        syndromes = _e1_tail_syndromes(u[k + 2 :], sep, layout, flanks)
        if syndromes is None:
            raise NotDecodable("redundancy region is inconsistent")
        beta, gamma = syndromes
        received = u[: k + 2]
        results = set()
        for pos in range(k + 2):
            cand = received[:pos] + received[pos + 1 :]
            if sum(cand) % 11 != beta:
                continue
            if vt_syndrome(_k.signature(cand)) % k != gamma:
                continue
            x = _e1_invert_prefix(cand, sep, flanks)
            if x is not None and _e1_verify(x, u, flanks, _within_one_insertion):
                results.add(x)
        if len(results) == 1:
            return results.pop()
        raise NotDecodable("no unique prefix repair")
    raise NotDecodable(f"length {len(u)} is not within one indel of {n + 1}")


def e1_decode_enum(u, k, flanks: FlankConvention = DEFAULT_FLANKS, codebook=None):
    """Candidate-enumeration fallback: try every single-indel preimage.

    With a precomputed codebook (labeling -> data word) each candidate is a
    dictionary lookup; otherwise candidates are checked structurally by
    inversion and re-encoding.  Correct whenever the code property holds.
    """
    u = tuple(u)
    layout = E1Layout(k)
    n = layout.n
    if len(u) == n + 1:
        candidates = [u]
    elif len(u) == n:
        candidates = []
        for pos in range(n + 1):
            head, tail = u[:pos], u[pos:]
            for val in range(11):
                candidates.append(head + (val,) + tail)
    elif len(u) == n + 2:
        candidates = [u[:pos] + u[pos + 1 :] for pos in range(n + 2)]
    else:
        raise NotDecodable(f"length {len(u)} is not within one indel of {n + 1}")
    results = set()
    if codebook is not None:
        lookup = codebook.get
        for cand in candidates:
            x = lookup(cand)
            if x is not None:
                results.add(x)
    else:
        for cand in candidates:
            try:
                word = invert_labeling(cand, MINIMAL_SET, flanks)
            except (InvalidLabeling, AmbiguousLabeling):
                continue
            x = word[:k]
            if e1_encode(x, flanks) == word:
                results.add(x)
    if len(results) == 1:
        return results.pop()
    if not results:
        raise NotDecodable("no codeword within one indel")
    raise AmbiguousDecoding(f"{len(results)} codewords within one indel")


# ---------------------------------------------------------------------------
# Construction 2: systematic single-substitution encoder


def _e2_parity_count(k: int) -> int:
    r = 1
    while (11**r - 1) // 10 < (k + 1) + r:
        r += 1
    return r


_DIGIT_OFFSET = 5  # parity digit d rendered as base-4 digits of d + 5


@dataclass(frozen=True)
class E2Layout:
    """Segment widths of an E2 codeword: x | parity pair | G | 2r symbols."""

    k: int

    def __post_init__(self):
        if self.k < 2:
            raise ValueError("E2 needs a data length of at least 2")

    @property
    def r(self) -> int:
        return _e2_parity_count(self.k)

    @property
    def n(self) -> int:
        return self.k + 3 + 2 * self.r


def _render_parity_digit(d: int):
    return to_digits(d + _DIGIT_OFFSET, 4, 2)


def _read_parity_digit(pair) -> Optional[int]:
    val = from_digits(pair, 4) - _DIGIT_OFFSET
    return val if 0 <= val <= 10 else None


def _parity_pair(t: int):
    return MINIMAL_SET.labels[t - 1] if t >= 1 else (0, 0)


def e2_encode(x, flanks: FlankConvention = DEFAULT_FLANKS):
    """Systematic single-substitution encoder over the minimal DNA set.

    The parity pair is the label alpha_t with t the data label sum (the
    unlabeled pair AA for t = 0), followed by a G separator and the GF(11)
    Hamming parity digits of the protected prefix v.  Each parity digit d
    is rendered as the two base-4 digits of d + 5, keeping the first
    symbol of every digit block out of the A row so that any digit change
    stays visible in the labeling.
    """
    x = tuple(x)
    layout = E2Layout(len(x))
    if any(not 0 <= v < 4 for v in x):
        raise ValueError("data word must be over the DNA alphabet")
    framed = label_framed(x, MINIMAL_SET, flanks)
    v1 = framed[:-1]
    t = sum(v1) % 11
    par = _parity_pair(t)
    seam = _pair_label(x[-1], par[0])
    message = v1 + (seam,)
    hp = hamming_params(11, layout.r)
    red = hamming_redundancy(message, hp)
    blocks = tuple(d for digit in red for d in _render_parity_digit(digit))
    return x + par + (2,) + blocks


def _e2_invert_prefix(pairs, first_par_symbol: int, flanks: FlankConvention):
    return _invert_window(pairs, flanks.left, first_par_symbol)


def _e2_verify(x, u, flanks) -> bool:
    try:
        ell = label_framed(e2_encode(x, flanks), MINIMAL_SET, flanks)
    except ValueError:
        return False
    return _hamming_le_one(ell, u)


def _e2_tail_digits(tail, layout: E2Layout, flanks: FlankConvention):
    """Parity digits from the labels covering the G separator and blocks."""
    syms = _invert_window(tail, 2, flanks.right)
    if syms is None or len(syms) != 2 * layout.r:
        return None
    digits = []
    for i in range(layout.r):
        d = _read_parity_digit(syms[2 * i : 2 * i + 2])
        if d is None:
            return None
        digits.append(d)
    return tuple(digits)


def e2_decode(u, k: int, flanks: FlankConvention = DEFAULT_FLANKS):
    """Decode one substitution in the framed labeling of E2(x).

    Fast path: when the parity-pair label equals the sum of the k data
    labels, the protected prefix is trusted (retrying with the seam label
    dropped covers a substituted seam); otherwise the parity digits are
    rebuilt from the intact tail and the Hamming syndrome corrects the one
    substituted data label.  Every candidate is verified by re-encoding.
    """
    u = tuple(u)
    layout = E2Layout(k)
    n = layout.n
    if len(u) != n + 1:
        raise NotDecodable(f"substitution decoding expects length {n + 1}")
    if any(not 0 <= v < 11 for v in u):
        raise NotDecodable("symbol outside the labeling alphabet")
    t_received = u[k + 1]
    data_sum = sum(u[:k]) % 11
    if t_received == data_sum:
        par = _parity_pair(t_received)
        x = _e2_invert_prefix(u[: k + 1], par[0], flanks)
        if x is not None and _e2_verify(x, u, flanks):
            return x
        # the seam label may be the substituted one: refill without it
        results = set()
        for cand in _fill_window(u[:k] + (None,), flanks.left, par[0], MINIMAL_SET):
            if _e2_verify(cand, u, flanks):
                results.add(cand)
        if len(results) == 1:
            return results.pop()
        raise NotDecodable("no unique completion of the data region")
    # inconsistent: the substitution is among the data labels or the
    # parity-pair label, so the seam and the whole tail are intact
    digits = _e2_tail_digits(u[k + 3 :], layout, flanks)
    if digits is None:
        raise NotDecodable("redundancy region is inconsistent")
    hp = hamming_params(11, layout.r)
    word = u[: k + 1] + digits
    syndrome = hamming_syndrome(word, hp, k + 1)
    if not any(syndrome):
        # the parity-pair label itself was substituted; message is clean
        par = _parity_pair(data_sum)
        x = _e2_invert_prefix(u[: k + 1], par[0], flanks)
        if x is not None and _e2_verify(x, u, flanks):
            return x
        raise NotDecodable("clean message does not invert")
    scale = next(v for v in syndrome if v)
    inv = pow(scale, 9, 11)
    canonical = tuple(v * inv % 11 for v in syndrome)
    data_cols = hp.data_columns[: k + 1]
    if canonical not in data_cols:
        raise NotDecodable("syndrome matches no data position")
    idx = data_cols.index(canonical)
    if idx >= k:
        raise NotDecodable("syndrome points at the intact seam label")
    repaired = list(u[: k + 1])
    repaired[idx] = (repaired[idx] - scale) % 11
    if sum(repaired[:k]) % 11 != t_received:
        raise NotDecodable("repair does not restore the parity relation")
    par = _parity_pair(t_received)
    x = _e2_invert_prefix(tuple(repaired), par[0], flanks)
    if x is not None and _e2_verify(x, u, flanks):
        return x
    raise NotDecodable("repaired prefix does not invert to a codeword")


def e2_decode_enum(u, k, flanks: FlankConvention = DEFAULT_FLANKS, codebook=None):
    """Enumeration fallback: all words within Hamming distance one.

    At most 10(n+1)+1 candidates, each checked against the codebook or
    structurally by inversion and re-encoding; requires a unique survivor.
    """
    u = tuple(u)
    layout = E2Layout(k)
    n = layout.n
    if len(u) != n + 1:
        raise NotDecodable(f"substitution decoding expects length {n + 1}")
    results = set()
    if codebook is not None:
        lookup = codebook.get
        hit = lookup(u)
        if hit is not None:
            results.add(hit)
        for pos in range(n + 1):
            head, old, tail = u[:pos], u[pos], u[pos + 1 :]
            for val in range(11):
                if val != old:
                    hit = lookup(head + (val,) + tail)
                    if hit is not None:
                        results.add(hit)
    else:

        def consider(cand):
            try:
                word = invert_labeling(cand, MINIMAL_SET, flanks)
            except (InvalidLabeling, AmbiguousLabeling):
                return
            x = word[:k]
            if e2_encode(x, flanks) == word:
                results.add(x)

        consider(u)
        for pos in range(n + 1):
            old = u[pos]
            for val in range(11):
                if val != old:
                    consider(u[:pos] + (val,) + u[pos + 1 :])
    if len(results) == 1:
        return results.pop()
    if not results:
        raise NotDecodable("no codeword within one substitution")
    raise AmbiguousDecoding(f"{len(results)} codewords within one substitution")


# ---------------------------------------------------------------------------
# All-labels single-deletion code (derivative + zero-indel union)


@dataclass(frozen=True)
class AllLabelsCode:
    """Single-deletion labeling code over the complete pair label set.

    Members are the words x whose extended derivative d(x0 x x_end) with
    the leading entry dropped lies in the zero-indel union; x_end is the
    flank value maximizing the member count for the given x0.
    """

    q: int
    n: int
    x0: int
    x_end: int
    union: ZeroIndelUnion
    counts_by_end: tuple[int, ...]
    codebook: Optional[tuple[tuple[int, ...], ...]]

    @property
    def size(self) -> int:
        return self.counts_by_end[self.x_end]

    @cached_property
    def labels(self) -> LabelSet:
        return all_labels_set(self.q)

    @property
    def flanks(self) -> FlankConvention:
        return FlankConvention(self.x0, self.x_end)

    def extended_derivative(self, x):
        full = (self.x0,) + tuple(x) + (self.x_end,)
        return _k.derivative(full, self.q)[1:]

    def member(self, x) -> bool:
        x = tuple(x)
        if len(x) != self.n or any(not 0 <= v < self.q for v in x):
            return False
        return self.union.member(self.extended_derivative(x))


def build_all_labels_deletion_code(
    q: int, n: int, x0: int = 0, codebook_cap: int = 2**22
) -> AllLabelsCode:
    """Construct the code and pick x_end by exact counting.

    Class sizes per sum residue come from the indicator DP combined with
    the nonzero-value sum DP, so the choice of x_end is exact even when the
    codebook itself is too large to materialize (q^{n+1} > codebook_cap).
    """
    if n < 1 or q < 2:
        raise ValueError("need n >= 1 and q >= 2")
    if not 0 <= x0 < q:
        raise ValueError("x0 must be an alphabet symbol")
    m = n + 1
    union = zero_indel_union(m, q)
    counts = [0] * q
    for w, a_star, _ in union.classes:
        patterns = s_class_size(m, w, a_star)
        by_sum = aggregate_nonzero_sums(w, q)
        for s in range(q):
            counts[s] += patterns * by_sum[s]
    counts_by_end = tuple(counts[(e - x0) % q] for e in range(q))
    best = max(range(q), key=lambda e: (counts_by_end[e], -e))
    codebook = None
    if q**m <= codebook_cap:
        residue = (best - x0) % q
        words = []
        for w, a_star, _ in union.classes:
            params = union.params_for_weight(w)
            for cw in zero_indel_codewords(params):
                if sum(cw) % q != residue:
                    continue
                full = _k.integrate((x0,) + cw, q)
                words.append(full[1:-1])
        codebook = tuple(sorted(words))
        assert len(codebook) == counts_by_end[best]
    return AllLabelsCode(q, n, x0, best, union, counts_by_end, codebook)


def _all_labels_try_word(full, code: AllLabelsCode):
    """Interior of a candidate extended word, if it is a codeword."""
    if len(full) != code.n + 2 or full[0] != code.x0 or full[-1] != code.x_end:
        return None
    x = full[1:-1]
    return x if code.member(x) else None


def decode_all_labels_deletion(u, code: AllLabelsCode):
    """Decode at most one pair-label deletion or insertion.

    A chain break (adjacent pair codes that do not overlap) locates the
    missing pair outright; a consistent chain means the deletion fell in a
    run, which the derivative maps to a zero deletion correctable by the
    union code.  Boundary deletions are repaired from the known flanks.
    """
    u = tuple(u)
    q, n = code.q, code.n
    sigma = q * q
    if any(not 0 <= v < sigma for v in u):
        raise NotDecodable("symbol is not a pair code")
    labels = code.labels
    flanks = code.flanks

    def invert_member(cand):
        try:
            word = invert_labeling(cand, labels, flanks)
        except (InvalidLabeling, AmbiguousLabeling):
            return None
        return word if code.member(word) else None

    if len(u) == n + 1:
        x = invert_member(u)
        if x is None:
            raise NotDecodable("clean-length word is not a codeword labeling")
        return x
    if len(u) == n:
        firsts = [v // q for v in u]
        seconds = [v % q for v in u]
        breaks = [
            i for i in range(n - 1) if seconds[i] != firsts[i + 1]
        ]
        candidates = set()
        if len(breaks) > 1:
            raise NotDecodable("more than one chain break")
        if len(breaks) == 1:
            i = breaks[0]
            pair = seconds[i] * q + firsts[i + 1]
            cand = u[: i + 1] + (pair,) + u[i + 1 :]
            x = invert_member(cand)
            if x is not None:
                candidates.add(x)
        else:
            stream = (firsts[0],) + tuple(seconds)  # x' with one symbol deleted
            if stream[0] != code.x0:
                x = _all_labels_try_word((code.x0,) + stream, code)
                if x is not None:
                    candidates.add(x)
            else:
                x = _all_labels_try_word(stream + (code.x_end,), code)
                if x is not None:
                    candidates.add(x)
                shortened = _k.derivative(stream, q)[1:]
                for pos in range(len(shortened) + 1):
                    if pos > 0 and shortened[pos - 1] == 0:
                        continue
                    cand = shortened[:pos] + (0,) + shortened[pos:]
                    if not code.union.member(cand):
                        continue
                    full = _k.integrate((code.x0,) + cand, q)
                    x = _all_labels_try_word(full, code)
                    if x is not None:
                        candidates.add(x)
        if len(candidates) == 1:
            return candidates.pop()
        if not candidates:
            raise NotDecodable("no codeword within one deletion")
        raise AmbiguousDecoding(f"{len(candidates)} codewords explain the input")
    if len(u) == n + 2:
        candidates = set()
        for pos in range(n + 2):
            x = invert_member(u[:pos] + u[pos + 1 :])
            if x is not None:
                candidates.add(x)
        if len(candidates) == 1:
            return candidates.pop()
        if not candidates:
            raise NotDecodable("no codeword within one insertion")
        raise AmbiguousDecoding(f"{len(candidates)} codewords explain the input")
    raise NotDecodable(f"length {len(u)} is not within one indel of {n + 1}")


def decode_all_labels_deletion_enum(u, code: AllLabelsCode, codebook=None):
    """Enumeration fallback over every single pair-code indel preimage.

    codebook optionally maps framed labelings to code members, replacing
    the per-candidate inversion with a lookup.
    """
    u = tuple(u)
    q, n = code.q, code.n
    sigma = q * q
    labels = code.labels
    flanks = code.flanks
    if len(u) == n + 1:
        candidates = [u]
    elif len(u) == n:
        candidates = []
        for pos in range(n + 1):
            head, tail = u[:pos], u[pos:]
            for val in range(sigma):
                candidates.append(head + (val,) + tail)
    elif len(u) == n + 2:
        candidates = [u[:pos] + u[pos + 1 :] for pos in range(n + 2)]
    else:
        raise NotDecodable(f"length {len(u)} is not within one indel of {n + 1}")
    results = set()
    if codebook is not None:
        lookup = codebook.get
        for cand in candidates:
            x = lookup(cand)
            if x is not None:
                results.add(x)
    else:
        for cand in candidates:
            try:
                word = invert_labeling(cand, labels, flanks)
            except (InvalidLabeling, AmbiguousLabeling):
                continue
            if code.member(word):
                results.add(word)
    if len(results) == 1:
        return results.pop()
    if not results:
        raise NotDecodable("no codeword within one indel")
    raise AmbiguousDecoding(f"{len(results)} codewords within one indel")


# ---------------------------------------------------------------------------
# Lifting and existence searches


def lift_code(
    labeling_code,
    labels: LabelSet,
    flanks: FlankConvention = DEFAULT_FLANKS,
    n: Optional[int] = None,
    cap: int = 4**12,
):
    """Words whose framed labeling lies in the given labeling-word code."""
    members = {tuple(u) for u in labeling_code}
    if not members:
        return ()
    lengths = {len(u) for u in members}
    if len(lengths) != 1:
        raise ValueError("labeling code must have uniform length")
    inferred = lengths.pop() - 1
    if n is not None and n != inferred:
        raise ValueError("n does not match the labeling length")
    n = inferred
    if labels.q**n > cap:
        raise EnumerationBudgetExceeded(f"{labels.q}^{n} words exceed the cap")
    return tuple(
        x
        for x in product(range(labels.q), repeat=n)
        if label_framed(x, labels, flanks) in members
    )


@dataclass(frozen=True)
class TenengoltsSearchResult:
    """Largest Tenengolts class over the framed valid labelings.

    The class lives on the labeling length n+1: members are the words x
    whose framed labeling lies in T_{a,b}(n+1; sigma).  Framed labelings
    are injective, so the class size counts words and labelings alike and
    the lifted code inherits the single-indel property of the class.
    """

    n: int
    sigma: int
    a: int
    b: int
    size: int
    valid_count: int
    codebook: tuple[tuple[int, ...], ...]
    flanks: FlankConvention

    @property
    def params(self):
        from .classical import TenengoltsParams

        return TenengoltsParams(self.n + 1, self.sigma, self.a, self.b)


def search_tenengolts_labeling_code(
    n: int,
    labels: Optional[LabelSet] = None,
    flanks: FlankConvention = DEFAULT_FLANKS,
) -> TenengoltsSearchResult:
    """Exhaustively bucket the framed labelings by their (a, b) class.

    Reports the largest class, breaking ties toward the smallest (a, b).
    The standalone labeling map is not injective (distinct words can share
    a labeling), so the search uses the framed labelings; the pigeonhole
    floor valid_count / (sigma * (n+1)) is guaranteed, and at desk scale
    the maximum clears q^n / (sigma * n) as well.
    """
    if labels is None:
        labels = MINIMAL_SET
    if n < 2:
        raise ValueError("n must be at least 2")
    sigma = labels.sigma
    buckets: dict[tuple[int, int], list] = {}
    for x in product(range(labels.q), repeat=n):
        u = label_framed(x, labels, flanks)
        key = (vt_syndrome(_k.signature(u)) % (n + 1), sum(u) % sigma)
        buckets.setdefault(key, []).append(x)
    (a, b), words = min(buckets.items(), key=lambda kv: (-len(kv[1]), kv[0]))
    return TenengoltsSearchResult(
        n, sigma, a, b, len(words), labels.q**n, tuple(sorted(words)), flanks
    )


@dataclass(frozen=True)
class HammingCosetSearchResult:
    """Best Hamming-code coset over the framed valid labelings."""

    n: int
    p: int
    r: int
    syndrome: tuple[int, ...]
    size: int
    valid_count: int
    codebook: tuple[tuple[int, ...], ...]
    flanks: FlankConvention

    @cached_property
    def params(self):
        return hamming_params(self.p, self.r)

    @property
    def columns(self):
        return self.params.columns[: self.n + 1]


def _coset_syndrome(u, columns, p):
    syndrome = [0] * len(columns[0])
    for v, col in zip(u, columns):
        for i, c in enumerate(col):
            syndrome[i] = (syndrome[i] + v * c) % p
    return tuple(syndrome)


def search_hamming_coset(
    n: int,
    labels: Optional[LabelSet] = None,
    p: int = 11,
    flanks: FlankConvention = DEFAULT_FLANKS,
) -> HammingCosetSearchResult:
    """Pick the coset of the shortened GF(p) Hamming code holding the most
    framed labelings.

    Framed labelings are injective for path-unique sets, so two distinct
    members of one coset differ in at least three positions and the lifted
    code corrects one labeling substitution.
    """
    if labels is None:
        labels = MINIMAL_SET
    if n < 1:
        raise ValueError("n must be positive")
    if labels.sigma > p:
        raise ValueError("labeling alphabet exceeds the field size")
    r = 1
    while (p**r - 1) // (p - 1) < n + 1:
        r += 1
    hp = hamming_params(p, r)
    columns = hp.columns[: n + 1]
    buckets: dict[tuple[int, ...], list] = {}
    for x in product(range(labels.q), repeat=n):
        u = label_framed(x, labels, flanks)
        buckets.setdefault(_coset_syndrome(u, columns, p), []).append(x)
    syndrome, words = min(
        buckets.items(), key=lambda kv: (-len(kv[1]), kv[0])
    )
    return HammingCosetSearchResult(
        n,
        p,
        r,
        syndrome,
        len(words),
        labels.q**n,
        tuple(sorted(words)),
        flanks,
    )


def coset_decode(
    u, result: HammingCosetSearchResult, labels: Optional[LabelSet] = None
):
    """Correct one labeling substitution against the lifted coset code."""
    if labels is None:
        labels = MINIMAL_SET
    u = tuple(u)
    if len(u) != result.n + 1:
        raise NotDecodable(f"expected a labeling of length {result.n + 1}")
    p = result.p
    columns = result.columns
    syndrome = tuple(
        (a - b) % p
        for a, b in zip(_coset_syndrome(u, columns, p), result.syndrome)
    )
    if any(syndrome):
        scale = next(v for v in syndrome if v)
        inv = pow(scale, p - 2, p)
        canonical = tuple(v * inv % p for v in syndrome)
        if canonical not in columns:
            raise NotDecodable("syndrome matches no position")
        idx = columns.index(canonical)
        fixed = (u[idx] - scale) % p
        if fixed >= labels.sigma:
            raise NotDecodable("correction leaves the labeling alphabet")
        u = u[:idx] + (fixed,) + u[idx + 1 :]
    try:
        x = invert_labeling(u, labels, result.flanks)
    except (InvalidLabeling, AmbiguousLabeling):
        raise NotDecodable("corrected word is not a valid labeling")
    if x not in result.codebook:
        raise NotDecodable("corrected word is outside the coset code")
    return x
