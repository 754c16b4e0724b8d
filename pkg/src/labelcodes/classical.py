"""Classical code primitives: VT, Tenengolts, zero-indel, GF(p) Hamming.

These are the building blocks the labeling-code constructions compose.
Residue conventions matter and are pinned here once: VT codes of length n
use the modulus n+1 with a in {0..n}; the Tenengolts signature constraint
is a VT condition on the length-(n-1) signature with modulus n; zero-indel
classes of weight w use the modulus w+1.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from itertools import combinations, product
from typing import Iterator, Optional

from . import kernels as _k
from .formats import LABEL_DIGITS


class NoCodeword(Exception):
    """The input is not consistent with any codeword of the code."""


class MultipleCandidates(Exception):
    """Several codewords explain the input; signals parameter misuse."""


class UncorrectableSyndrome(Exception):
    """The Hamming syndrome does not match any single-symbol error."""


def derivative(x, q: int):
    """Mod-q difference word; injective, with integrate as its inverse."""
    return _k.derivative(tuple(x), q)


def integrate(d, q: int):
    """Prefix sums mod q: integrate(derivative(x)) == x."""
    return _k.integrate(tuple(d), q)


def signature(x):
    """Monotonicity indicator of x: bit i is 1 iff x_{i+1} >= x_i."""
    if len(x) < 1:
        raise ValueError("signature needs a nonempty word")
    return _k.signature(tuple(x))


def vt_syndrome(x) -> int:
    """Weighted index sum over 1-based positions (no modulus applied)."""
    return _k.vt_weight_sum(tuple(x))


# ---------------------------------------------------------------------------
# Varshamov-Tenengolts codes


@dataclass(frozen=True)
class VtParams:
    """VT_a(n): binary words with weighted index sum = a (mod n+1)."""

    n: int
    a: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("n must be positive")
        if not 0 <= self.a <= self.n:
            raise ValueError("a must lie in 0..n")


def vt_member(x, p: VtParams) -> bool:
    if len(x) != p.n or any(v not in (0, 1) for v in x):
        return False
    return vt_syndrome(x) % (p.n + 1) == p.a


def vt_codewords(p: VtParams):
    """All codewords of VT_a(n), by exhaustive syndrome check."""
    return [x for x in product((0, 1), repeat=p.n) if vt_member(x, p)]


def vt_decode_indel(y, p: VtParams):
    """Decode one deletion or insertion against VT_a(n).

    Deletions use the classical weight / syndrome-deficit rule; insertions
    are resolved by scanning the n+1 single-symbol removals for the unique
    codeword (uniqueness is the VT property itself).
    """
    y = tuple(y)
    n, m = p.n, p.n + 1
    if any(v not in (0, 1) for v in y):
        raise NoCodeword("input is not binary")
    if len(y) == n:
        if vt_member(y, p):
            return y
        raise NoCodeword("word of full length is not a codeword")
    if len(y) == n - 1:
        w = sum(y)
        deficit = (p.a - vt_syndrome(y)) % m
        if deficit <= w:
            # a 0 was deleted with `deficit` ones to its right
            suffix_ones = 0
            pos = len(y)
            while pos > 0 and suffix_ones < deficit:
                pos -= 1
                suffix_ones += y[pos]
            if suffix_ones != deficit:
                raise NoCodeword("syndrome deficit is inconsistent")
            x = y[:pos] + (0,) + y[pos:]
        else:
            # a 1 was deleted with deficit - w - 1 zeros to its left
            zeros_left = deficit - w - 1
            pos = 0
            seen = 0
            while pos < len(y) and seen < zeros_left:
                if y[pos] == 0:
                    seen += 1
                pos += 1
            if seen != zeros_left:
                raise NoCodeword("syndrome deficit is inconsistent")
            x = y[:pos] + (1,) + y[pos:]
        if not vt_member(x, p):
            raise NoCodeword("reconstruction failed the membership check")
        return x
    if len(y) == n + 1:
        hits = set()
        for i in range(n + 1):
            cand = y[:i] + y[i + 1 :]
            if vt_member(cand, p):
                hits.add(cand)
        if len(hits) == 1:
            return hits.pop()
        raise NoCodeword("no unique codeword under one insertion")
    raise NoCodeword(f"length {len(y)} is not within one indel of n={n}")


# ---------------------------------------------------------------------------
# Tenengolts non-binary single-indel codes


@dataclass(frozen=True)
class TenengoltsParams:
    """T_{a,b}(n; q): signature in VT_a(n-1) and symbol sum = b (mod q)."""

    n: int
    q: int
    a: int
    b: int

    def __post_init__(self):
        if self.n < 2:
            raise ValueError("n must be at least 2")
        if self.q < 2:
            raise ValueError("q must be at least 2")
        if not 0 <= self.a < self.n:
            raise ValueError("a must lie in 0..n-1")
        if not 0 <= self.b < self.q:
            raise ValueError("b must lie in 0..q-1")


def tenengolts_class_of(x, q: int) -> TenengoltsParams:
    """The (a, b) class containing x (every word is in exactly one)."""
    x = tuple(x)
    n = len(x)
    return TenengoltsParams(
        n, q, vt_syndrome(signature(x)) % n, sum(x) % q
    )


def tenengolts_member(x, p: TenengoltsParams) -> bool:
    x = tuple(x)
    if len(x) != p.n or any(not 0 <= v < p.q for v in x):
        return False
    return (
        vt_syndrome(signature(x)) % p.n == p.a
        and sum(x) % p.q == p.b
    )


def tenengolts_decode(y, p: TenengoltsParams):
    """Two-stage single-indel decoding.

    Stage one restores the binary signature through VT logic (the
    signature of the received word is the codeword signature with one bit
    deleted or inserted); stage two places the missing symbol, whose value
    the sum constraint fixes, at a position recreating that signature.
    """
    y = tuple(y)
    n, q = p.n, p.q
    if any(not 0 <= v < q for v in y):
        raise NoCodeword("input is not over the code alphabet")
    if len(y) == n:
        if tenengolts_member(y, p):
            return y
        raise NoCodeword("word of full length is not a codeword")
    sig_params = VtParams(n - 1, p.a)
    if len(y) == n - 1:
        missing = (p.b - sum(y)) % q
        target_sig = vt_decode_indel(signature(y), sig_params)
        for pos in range(n):
            cand = y[:pos] + (missing,) + y[pos:]
            if _k.signature(cand) == target_sig:
                return cand
        raise NoCodeword("no insertion position matches the signature")
    if len(y) == n + 1:
        extra = (sum(y) - p.b) % q
        target_sig = vt_decode_indel(signature(y), sig_params)
        for pos in range(n + 1):
            if y[pos] != extra:
                continue
            cand = y[:pos] + y[pos + 1 :]
            if _k.signature(cand) == target_sig:
                return cand
        raise NoCodeword("no removal position matches the signature")
    raise NoCodeword(f"length {len(y)} is not within one indel of n={n}")


def tenengolts_decode_enum(y, p: TenengoltsParams):
    """Candidate-enumeration decoder: try all single-indel preimages.

    Correct by the code property alone; the two-stage decoder must agree
    with it everywhere (asserted by the verification harness).
    """
    y = tuple(y)
    n, q = p.n, p.q
    if len(y) == n:
        if tenengolts_member(y, p):
            return y
        raise NoCodeword("word of full length is not a codeword")
    hits = set()
    if len(y) == n - 1:
        for pos in range(n):
            for v in range(q):
                cand = y[:pos] + (v,) + y[pos:]
                if tenengolts_member(cand, p):
                    hits.add(cand)
    elif len(y) == n + 1:
        for pos in range(n + 1):
            cand = y[:pos] + y[pos + 1 :]
            if tenengolts_member(cand, p):
                hits.add(cand)
    else:
        raise NoCodeword(f"length {len(y)} is not within one indel of n={n}")
    if len(hits) == 1:
        return hits.pop()
    if not hits:
        raise NoCodeword("no codeword within one indel")
    raise MultipleCandidates(f"{len(hits)} codewords within one indel")


# ---------------------------------------------------------------------------
# Zero-indel codes (S-sets and their non-binary T-extension)


@dataclass(frozen=True)
class ZeroIndelParams:
    """T_{w,a}^{m,w+1}: m-length words whose nonzero indicator has weight w
    and weighted index sum = a (mod w+1)."""

    m: int
    w: int
    a: int
    q: int

    def __post_init__(self):
        if self.m < 1:
            raise ValueError("m must be positive")
        if not 0 <= self.w <= self.m:
            raise ValueError("w must lie in 0..m")
        if not 0 <= self.a <= self.w:
            raise ValueError("a must lie in 0..w")
        if self.q < 2:
            raise ValueError("q must be at least 2")


def nonzero_indicator(t):
    return tuple(1 if v else 0 for v in t)


def zero_indel_member(t, p: ZeroIndelParams) -> bool:
    t = tuple(t)
    if len(t) != p.m or any(not 0 <= v < p.q for v in t):
        return False
    ind = nonzero_indicator(t)
    if sum(ind) != p.w:
        return False
    return vt_syndrome(ind) % (p.w + 1) == p.a


def _distinct_zero_insertions(y):
    """Insert one zero at every position that yields a distinct word."""
    for i in range(len(y) + 1):
        if i == 0 or y[i - 1] != 0:
            yield y[:i] + (0,) + y[i:]


def _distinct_zero_removals(y):
    """Remove the leading zero of each maximal zero run."""
    for i in range(len(y)):
        if y[i] == 0 and (i == 0 or y[i - 1] != 0):
            yield y[:i] + y[i + 1 :]


def zero_indel_decode(y, p: ZeroIndelParams):
    """Correct one inserted or deleted zero by run-boundary enumeration."""
    y = tuple(y)
    if len(y) == p.m:
        if zero_indel_member(y, p):
            return y
        raise NoCodeword("word of full length is not a codeword")
    if len(y) == p.m - 1:
        candidates = _distinct_zero_insertions(y)
    elif len(y) == p.m + 1:
        candidates = _distinct_zero_removals(y)
    else:
        raise NoCodeword(f"length {len(y)} is not within one zero-indel of m={p.m}")
    hits = [c for c in candidates if zero_indel_member(c, p)]
    if len(hits) == 1:
        return hits[0]
    if not hits:
        raise NoCodeword("no codeword within one zero indel")
    raise MultipleCandidates(f"{len(hits)} codewords within one zero indel")


def zero_indel_codewords(p: ZeroIndelParams) -> Iterator[tuple[int, ...]]:
    """Generate the class without enumerating all of Sigma_q^m."""
    mod = p.w + 1
    for positions in combinations(range(p.m), p.w):
        if sum(i + 1 for i in positions) % mod != p.a:
            continue
        for values in product(range(1, p.q), repeat=p.w):
            word = [0] * p.m
            for pos, v in zip(positions, values):
                word[pos] = v
            yield tuple(word)


def s_class_size(m: int, w: int, a: int) -> int:
    """|S_{w,a}^{m,w+1}| by dynamic programming over (weight, residue)."""
    mod = w + 1
    counts = [[0] * mod for _ in range(w + 1)]
    counts[0][0] = 1
    for i in range(1, m + 1):
        for j in range(min(i, w), 0, -1):
            row = counts[j]
            prev = counts[j - 1]
            shift = i % mod
            for r in range(mod):
                row[r] += prev[(r - shift) % mod]
    return counts[w][a % mod]


def zero_indel_class_size(p: ZeroIndelParams) -> int:
    return (p.q - 1) ** p.w * s_class_size(p.m, p.w, p.a)


def aggregate_nonzero_sums(w: int, q: int) -> tuple[int, ...]:
    """Count the assignments in {1..q-1}^w by their symbol sum mod q."""
    counts = [0] * q
    counts[0] = 1
    for _ in range(w):
        nxt = [0] * q
        for r, c in enumerate(counts):
            if c:
                for v in range(1, q):
                    nxt[(r + v) % q] += c
        counts = nxt
    return tuple(counts)


@dataclass(frozen=True)
class ZeroIndelUnion:
    """Union over weights of the largest class per weight.

    Distinct weights stay distinct under a single zero indel (inserting or
    deleting a zero never changes the nonzero content), so the union is
    itself a single zero-indel code.
    """

    m: int
    q: int
    classes: tuple[tuple[int, int, int], ...]  # (w, best a, class size)

    @cached_property
    def _best_a(self) -> dict[int, int]:
        return {w: a for w, a, _ in self.classes}

    @property
    def size(self) -> int:
        return sum(size for _, _, size in self.classes)

    def params_for_weight(self, w: int) -> ZeroIndelParams:
        return ZeroIndelParams(self.m, w, self._best_a[w], self.q)

    def member(self, t) -> bool:
        t = tuple(t)
        if len(t) != self.m or any(not 0 <= v < self.q for v in t):
            return False
        ind = nonzero_indicator(t)
        w = sum(ind)
        return vt_syndrome(ind) % (w + 1) == self._best_a[w]

    def decode(self, y):
        """Correct one zero indel against the union (weight is preserved)."""
        y = tuple(y)
        w = sum(nonzero_indicator(y))
        return zero_indel_decode(y, self.params_for_weight(w))


def zero_indel_union(m: int, q: int) -> ZeroIndelUnion:
    """Pick a*_w = argmax_a |T_{w,a}^{m,w+1}| per weight (smallest a on ties)."""
    classes = []
    for w in range(m + 1):
        factor = (q - 1) ** w
        best_a, best_size = 0, -1
        for a in range(w + 1):
            size = factor * s_class_size(m, w, a)
            if size > best_size:
                best_a, best_size = a, size
        classes.append((w, best_a, best_size))
    return ZeroIndelUnion(m, q, tuple(classes))


# ---------------------------------------------------------------------------
# Hamming codes over prime fields


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class HammingParams:
    """Canonical Hamming code over GF(p) with r parity digits.

    Columns are all nonzero r-vectors whose topmost nonzero entry is 1,
    ordered ascending as base-p numbers, so codewords are bit-exact across
    implementations.
    """

    p: int
    r: int
    columns: tuple[tuple[int, ...], ...]

    @cached_property
    def unit_by_coord(self) -> tuple[tuple[int, ...], ...]:
        units = []
        for i in range(self.r):
            col = [0] * self.r
            col[i] = 1
            units.append(tuple(col))
        return tuple(units)

    @cached_property
    def data_columns(self) -> tuple[tuple[int, ...], ...]:
        units = set(self.unit_by_coord)
        return tuple(c for c in self.columns if c not in units)

    @property
    def max_message_len(self) -> int:
        return len(self.columns) - self.r


@lru_cache(maxsize=None)
def hamming_params(p: int = 11, r: int = 2) -> HammingParams:
    if not _is_prime(p):
        raise ValueError("field size must be prime")
    if r < 1:
        raise ValueError("r must be positive")
    columns = []
    for val in range(1, p**r):
        col = to_digits(val, p, r)
        top = next(v for v in col if v)
        if top == 1:
            columns.append(col)
    assert len(columns) == (p**r - 1) // (p - 1)
    return HammingParams(p, r, tuple(columns))


def _word_columns(hp: HammingParams, msg_len: int):
    """Column per position: message digits first, then parity digits."""
    return hp.data_columns[:msg_len] + hp.unit_by_coord


def hamming_syndrome(word, hp: HammingParams, msg_len: int):
    cols = _word_columns(hp, msg_len)
    if len(word) != len(cols):
        raise ValueError("word length does not match the layout")
    syndrome = [0] * hp.r
    for v, col in zip(word, cols):
        for i in range(hp.r):
            syndrome[i] = (syndrome[i] + v * col[i]) % hp.p
    return tuple(syndrome)


def hamming_redundancy(msg, hp: HammingParams):
    """Parity digits making the syndrome of msg + parity zero."""
    msg = tuple(msg)
    if len(msg) + hp.r > len(hp.columns):
        raise ValueError("message too long for this code")
    if any(not 0 <= v < hp.p for v in msg):
        raise ValueError("message digits must lie in GF(p)")
    syndrome = [0] * hp.r
    for v, col in zip(msg, hp.data_columns):
        for i in range(hp.r):
            syndrome[i] = (syndrome[i] + v * col[i]) % hp.p
    return tuple((-s) % hp.p for s in syndrome)


def hamming_encode(msg, hp: HammingParams):
    msg = tuple(msg)
    return msg + hamming_redundancy(msg, hp)


def hamming_decode(word, hp: HammingParams, msg_len: Optional[int] = None):
    """Correct at most one symbol substitution via syndrome column matching."""
    word = tuple(word)
    if msg_len is None:
        msg_len = len(word) - hp.r
    syndrome = hamming_syndrome(word, hp, msg_len)
    if not any(syndrome):
        return word
    scale = next(v for v in syndrome if v)
    inv = pow(scale, hp.p - 2, hp.p)
    canonical = tuple(v * inv % hp.p for v in syndrome)
    cols = _word_columns(hp, msg_len)
    try:
        idx = cols.index(canonical)
    except ValueError:
        raise UncorrectableSyndrome(
            "syndrome matches no column; more than one error"
        ) from None
    fixed = list(word)
    fixed[idx] = (fixed[idx] - scale) % hp.p
    return tuple(fixed)


# ---------------------------------------------------------------------------
# Fixed-width base conversion


def to_digits(value: int, base: int, width: int) -> tuple[int, ...]:
    """Most-significant-first digits of value, exactly `width` of them."""
    if value < 0:
        raise ValueError("value must be non-negative")
    digits = []
    for _ in range(width):
        digits.append(value % base)
        value //= base
    if value:
        raise ValueError(f"value does not fit in {width} base-{base} digits")
    return tuple(reversed(digits))


def from_digits(digits, base: int) -> int:
    value = 0
    for d in digits:
        if not 0 <= d < base:
            raise ValueError(f"digit {d} out of range for base {base}")
        value = value * base + d
    return value


@dataclass(frozen=True)
class DigitString:
    """Fixed-width most-significant-first digit sequence."""

    base: int
    digits: tuple[int, ...]

    @property
    def width(self) -> int:
        return len(self.digits)

    @property
    def value(self) -> int:
        return from_digits(self.digits, self.base)

    def __str__(self) -> str:
        return "".join(LABEL_DIGITS[d] for d in self.digits)


def base_convert(value: int, from_base: int, to_base: int, width: int) -> DigitString:
    """Re-render an integer (given in from_base) as fixed-width to_base digits."""
    if from_base < 2 or to_base < 2:
        raise ValueError("bases must be at least 2")
    return DigitString(to_base, to_digits(value, to_base, width))
