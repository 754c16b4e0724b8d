"""Label sets, the labeling map, reconstruction, and capacity counting.

The labeling of a word x marks, per position, which label starts there
(0 = none).  With a path-unique zero graph and fixed flank symbols the
framed labeling is injective, so words can be reconstructed exactly; that
reconstruction is what every decoder in this package ultimately relies on.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property
from itertools import product
from typing import Iterable, NamedTuple, Optional

from . import kernels as _k


class InvalidLabeling(Exception):
    """The input is not the framed labeling of any word."""


class AmbiguousLabeling(Exception):
    """More than one word matches; the label set is not path-unique."""


class EnumerationBudgetExceeded(Exception):
    """An exhaustive enumeration would exceed the configured cap."""


DNA_CHARS = "ACGT"
DIGIT_CHARS = "0123456789"


@dataclass(frozen=True)
class Alphabet:
    """A q-ary alphabet with a fixed symbol-to-character rendering."""

    q: int
    chars: str = ""

    def __post_init__(self):
        if self.q < 2:
            raise ValueError("alphabet size must be at least 2")
        if not self.chars:
            chars = DNA_CHARS if self.q == 4 else DIGIT_CHARS[: self.q]
            object.__setattr__(self, "chars", chars)
        if len(self.chars) != self.q or len(set(self.chars)) != self.q:
            raise ValueError("rendering must be a bijection on the alphabet")


DNA = Alphabet(4)


@dataclass(frozen=True)
class FlankConvention:
    """Fixed known symbols before and after the word (x_0 and x_{n+1})."""

    left: int = 0
    right: int = 0


DEFAULT_FLANKS = FlankConvention(0, 0)

# The ten length-two DNA labels achieving full labeling capacity,
# in lexicographic order (A=0, C=1, G=2, T=3).
MINIMAL_DNA_LABELS = (
    (0, 1), (1, 0), (2, 0), (2, 1), (2, 2),
    (2, 3), (3, 0), (3, 1), (3, 2), (3, 3),
)


@dataclass(frozen=True)
class LabelSet:
    """An ordered, prefix-free collection of labels over a q-ary alphabet.

    Labels are kept sorted lexicographically so that the labeling symbol j
    always refers to the j-th smallest label.  kind is one of
    "minimal-dna", "all-labels", "custom".
    """

    q: int
    labels: tuple[tuple[int, ...], ...]
    kind: str = "custom"

    def __post_init__(self):
        if self.q < 2:
            raise ValueError("q must be at least 2")
        seen = set(self.labels)
        if len(seen) != len(self.labels):
            raise ValueError("labels must be distinct")
        if tuple(sorted(self.labels)) != self.labels:
            raise ValueError("labels must be sorted lexicographically")
        for lab in self.labels:
            if not lab or any(s < 0 or s >= self.q for s in lab):
                raise ValueError(f"label {lab} not over the alphabet")
        for a in self.labels:
            for b in self.labels:
                if a is not b and b[: len(a)] == a:
                    raise ValueError(f"label {a} is a prefix of {b}")

    @property
    def size(self) -> int:
        return len(self.labels)

    @cached_property
    def all_pairs(self) -> bool:
        return self.kind == "all-labels"

    @cached_property
    def sigma(self) -> int:
        """Size of the labeling alphabet."""
        return self.q * self.q if self.all_pairs else len(self.labels) + 1

    @cached_property
    def uniform_length(self) -> Optional[int]:
        lens = {len(lab) for lab in self.labels}
        return lens.pop() if len(lens) == 1 else None

    def _require_pairs(self):
        if self.uniform_length != 2:
            raise ValueError("operation requires a uniform length-2 label set")

    @cached_property
    def pair_table(self) -> bytes:
        """Flat q*q map pair -> labeling symbol (0 when unlabeled)."""
        self._require_pairs()
        table = bytearray(self.q * self.q)
        if self.all_pairs:
            for a in range(self.q):
                for b in range(self.q):
                    table[a * self.q + b] = a * self.q + b
        else:
            for j, (a, b) in enumerate(self.labels, start=1):
                table[a * self.q + b] = j
        return bytes(table)

    @cached_property
    def label_first(self) -> bytes:
        self._require_pairs()
        return bytes([0] + [lab[0] for lab in self.labels])

    @cached_property
    def label_second(self) -> bytes:
        self._require_pairs()
        return bytes([0] + [lab[1] for lab in self.labels])

    @cached_property
    def zero_edges(self) -> frozenset[tuple[int, int]]:
        """Ordered pairs carrying no label (the zero-graph edge set)."""
        self._require_pairs()
        labelled = set(self.labels)
        return frozenset(
            (a, b)
            for a in range(self.q)
            for b in range(self.q)
            if (a, b) not in labelled
        )

    @cached_property
    def zero_adj(self) -> bytes:
        adj = bytearray(self.q * self.q)
        for a, b in self.zero_edges:
            adj[a * self.q + b] = 1
        return bytes(adj)


def minimal_dna_set() -> LabelSet:
    return LabelSet(4, MINIMAL_DNA_LABELS, kind="minimal-dna")


def all_labels_set(q: int) -> LabelSet:
    labels = tuple((a, b) for a in range(q) for b in range(q))
    return LabelSet(q, labels, kind="all-labels")


def make_label_set(labels: Iterable[Iterable[int]], q: int) -> LabelSet:
    return LabelSet(q, tuple(sorted(tuple(lab) for lab in labels)))


@dataclass(frozen=True)
class ZeroGraph:
    """Directed graph on the alphabet whose edges are the unlabeled pairs."""

    q: int
    edges: frozenset[tuple[int, int]]


def zero_graph(labels: LabelSet) -> ZeroGraph:
    return ZeroGraph(labels.q, labels.zero_edges)


def check_path_unique(g: ZeroGraph, max_len: int) -> bool:
    """True iff no ordered vertex pair has two paths of equal length <= max_len.

    Path counts are propagated with a cap of 2, so the check runs in
    O(max_len * q^3) regardless of how many paths exist.
    """
    if max_len < 1:
        raise ValueError("max_len must be at least 1")
    q = g.q
    adj = [[0] * q for _ in range(q)]
    for a, b in g.edges:
        adj[a][b] = 1
    counts = [row[:] for row in adj]
    for _ in range(max_len):
        for row in counts:
            for v in row:
                if v > 1:
                    return False
        nxt = [[0] * q for _ in range(q)]
        for a in range(q):
            for m in range(q):
                c = counts[a][m]
                if c:
                    for b in range(q):
                        if adj[m][b]:
                            nxt[a][b] = min(2, nxt[a][b] + c)
        counts = nxt
    return True


def _label_word_general(x, labels: LabelSet):
    n = len(x)
    out = [0] * n
    for i in range(n):
        for j, lab in enumerate(labels.labels, start=1):
            w = len(lab)
            if i + w <= n and tuple(x[i : i + w]) == lab:
                out[i] = j
                break
    return tuple(out)


def _check_word(x, q):
    for v in x:
        if not 0 <= v < q:
            raise ValueError(f"symbol {v} outside the alphabet of size {q}")


def label_word(x, labels: LabelSet):
    """Standalone labeling: position i carries the label starting at i, else 0."""
    x = tuple(x)
    _check_word(x, labels.q)
    if labels.uniform_length == 2:
        return _k.label_word_pairs(x, labels.q, labels.pair_table)
    return _label_word_general(x, labels)


def label_framed(x, labels: LabelSet, flanks: FlankConvention = DEFAULT_FLANKS):
    """Framed labeling: one label per pair of (x_0, x, x_{n+1}), length n+1.

    For all-labels sets the symbols are pair codes q*a + b.
    """
    labels._require_pairs()
    x = tuple(x)
    _check_word(x, labels.q)
    _check_word((flanks.left, flanks.right), labels.q)
    return _k.label_framed_pairs(
        x, labels.q, labels.pair_table, flanks.left, flanks.right
    )


def invert_labeling(u, labels: LabelSet, flanks: FlankConvention = DEFAULT_FLANKS):
    """Reconstruct the unique x with label_framed(x) == u.

    Nonzero labels pin the two symbols they cover; maximal zero runs are
    filled by the unique zero-graph path between their anchors.  Raises
    InvalidLabeling when no word matches, AmbiguousLabeling when the label
    set is not path-unique and several words match.
    """
    labels._require_pairs()
    u = tuple(u)
    if not u:
        raise InvalidLabeling("a framed labeling has at least one symbol")
    for v in u:
        if not 0 <= v < labels.sigma:
            raise InvalidLabeling(f"symbol {v} outside the labeling alphabet")
    status, word = _k.invert_framed_pairs(
        u,
        labels.q,
        labels.label_first,
        labels.label_second,
        labels.zero_adj,
        flanks.left,
        flanks.right,
        labels.all_pairs,
    )
    if status == _k.INVALID:
        raise InvalidLabeling("no word has this framed labeling")
    if status == _k.AMBIGUOUS:
        raise AmbiguousLabeling("several words match; zero graph is not path-unique")
    return word


def phi(q: int) -> int:
    """Minimal number of length-two labels achieving full labeling capacity."""
    if q < 2:
        raise ValueError("q must be at least 2")
    if q % 2:
        n_q = (q + 1) ** 2 // 4
    else:
        n_q = q * (q + 2) // 4
    return q * q - n_q


class CapacityCount(NamedTuple):
    """Exact count of distinct labelings of the q^n words of length n."""

    count: int
    n: int

    @property
    def rate(self) -> float:
        return math.log2(self.count) / self.n


def empirical_capacity(
    labels: LabelSet,
    n: int,
    flanks: Optional[FlankConvention] = DEFAULT_FLANKS,
    cap: int = 4**10,
) -> CapacityCount:
    """Count distinct labelings over all of Sigma_q^n by exhaustive enumeration.

    flanks=None counts standalone labelings instead of framed ones.  The
    rate log2(count)/n is a finite-n figure, not an asymptotic limit.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if labels.q**n > cap:
        raise EnumerationBudgetExceeded(
            f"{labels.q}^{n} words exceed the cap of {cap}"
        )
    seen = set()
    if flanks is None:
        for x in product(range(labels.q), repeat=n):
            seen.add(label_word(x, labels))
    else:
        q = labels.q
        table = labels.pair_table
        left, right = flanks.left, flanks.right
        for x in product(range(q), repeat=n):
            seen.add(_k.label_framed_pairs(x, q, table, left, right))
    return CapacityCount(len(seen), n)
