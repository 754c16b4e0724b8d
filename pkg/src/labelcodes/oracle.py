"""Ground-truth machinery: error balls, the labeling-code checker, the
exhaustive decoder sweeps, and a seeded channel simulator.

Every construction in the package is validated against this module; the
checker works from the definition alone (ball disjointness), so it is
independent of the decoders it certifies.
"""
from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from itertools import product
from typing import Callable, Optional

from .classical import (
    MultipleCandidates,
    NoCodeword,
    tenengolts_class_of,
    tenengolts_decode,
    tenengolts_decode_enum,
)
from .constructions import (
    AllLabelsCode,
    AmbiguousDecoding,
    E1Layout,
    E2Layout,
    HammingCosetSearchResult,
    MINIMAL_SET,
    NotDecodable,
    coset_decode,
    decode_all_labels_deletion,
    decode_all_labels_deletion_enum,
    e1_decode,
    e1_decode_enum,
    e1_encode,
    e2_decode,
    e2_decode_enum,
    e2_encode,
    search_hamming_coset,
)
from .labeling import (
    DEFAULT_FLANKS,
    AmbiguousLabeling,
    FlankConvention,
    InvalidLabeling,
    LabelSet,
    invert_labeling,
    label_framed,
)


@dataclass(frozen=True)
class ErrorSpec:
    """Budget of substitutions, insertions and deletions (in that order)."""

    substitutions: int = 0
    insertions: int = 0
    deletions: int = 0

    def __post_init__(self):
        if min(self.substitutions, self.insertions, self.deletions) < 0:
            raise ValueError("error budgets must be non-negative")


def error_ball(u, spec: ErrorSpec, alphabet_size: int, cap: int = 10**6):
    """All words reachable from u within the error budgets.

    "At most" semantics: the ball contains u and is closed under spending
    less than the budget.  Deletions, then substitutions, then insertions
    is a canonical order reaching the full set.
    """
    u = tuple(u)
    if len(u) < spec.deletions:
        raise ValueError("word shorter than the deletion budget")
    out = {u}
    level = {u}
    for _ in range(spec.deletions):
        level = {w[:i] + w[i + 1 :] for w in level for i in range(len(w))}
        out |= level
        if len(out) > cap:
            raise ValueError("error ball exceeds the enumeration cap")
    level = set(out)
    for _ in range(spec.substitutions):
        nxt = set()
        for w in level:
            for i, old in enumerate(w):
                for v in range(alphabet_size):
                    if v != old:
                        nxt.add(w[:i] + (v,) + w[i + 1 :])
        level = nxt
        out |= level
        if len(out) > cap:
            raise ValueError("error ball exceeds the enumeration cap")
    level = set(out)
    for _ in range(spec.insertions):
        nxt = set()
        for w in level:
            for i in range(len(w) + 1):
                for v in range(alphabet_size):
                    nxt.add(w[:i] + (v,) + w[i:])
        level = nxt
        out |= level
        if len(out) > cap:
            raise ValueError("error ball exceeds the enumeration cap")
    return out


@dataclass
class VerificationReport:
    """Outcome of one exhaustive verification run."""

    target: str
    params: dict
    words_checked: int = 0
    checks: int = 0
    violations: list = field(default_factory=list)
    violation_count: int = 0
    wall_time: float = 0.0
    max_kept = 20

    @property
    def passed(self) -> bool:
        return self.violation_count == 0

    def record(self, violation):
        self.violation_count += 1
        if len(self.violations) < self.max_kept:
            self.violations.append(violation)

    def summary(self) -> str:
        verdict = "pass" if self.passed else f"FAIL ({self.violation_count})"
        return (
            f"{self.target} {self.params}: {verdict}, "
            f"{self.words_checked} words / {self.checks} checks "
            f"in {self.wall_time:.2f}s"
        )


def _is_valid_labeling(u, labels: LabelSet, flanks: FlankConvention) -> bool:
    try:
        invert_labeling(u, labels, flanks)
        return True
    except (InvalidLabeling, AmbiguousLabeling):
        return False


def is_labeling_code(
    code,
    labels: LabelSet,
    flanks: FlankConvention,
    spec: ErrorSpec,
    valid_only: bool = False,
) -> VerificationReport:
    """Check pairwise disjointness of the members' framed-labeling balls.

    Collision detection hashes every ball element to its source word, so
    the cost is the total ball mass rather than quadratic in |code|.  With
    valid_only the balls are intersected with the valid labelings first
    (the stricter reading of the channel; the permissive one is the
    default and is what every acceptance run uses).
    """
    start = time.monotonic()
    report = VerificationReport(
        target="is_labeling_code",
        params={
            "labels": labels.kind,
            "q": labels.q,
            "errors": (spec.substitutions, spec.insertions, spec.deletions),
            "valid_only": valid_only,
        },
    )
    sigma = labels.sigma
    owners: dict = {}
    for x in code:
        x = tuple(x)
        report.words_checked += 1
        u = label_framed(x, labels, flanks)
        for w in error_ball(u, spec, sigma):
            if valid_only and not _is_valid_labeling(w, labels, flanks):
                continue
            report.checks += 1
            prev = owners.get(w)
            if prev is None:
                owners[w] = x
            elif prev != x:
                report.record((prev, x, w))
    report.wall_time = time.monotonic() - start
    return report


def simulate_channel(u, spec: ErrorSpec, seed: int, alphabet_size: int):
    """Apply exactly the budgeted errors with a deterministic generator.

    Deletions first, then substitutions at distinct positions, then
    insertions; the result is always inside error_ball(u, spec).  The
    generator is random.Random(seed) (Mersenne Twister), recorded here so
    runs are reproducible from the seed alone.
    """
    rng = random.Random(seed)
    w = list(u)
    if len(w) < spec.deletions:
        raise ValueError("word shorter than the deletion budget")
    for _ in range(spec.deletions):
        del w[rng.randrange(len(w))]
    if len(w) < spec.substitutions:
        raise ValueError("not enough positions to substitute")
    for i in rng.sample(range(len(w)), spec.substitutions):
        w[i] = (w[i] + rng.randrange(1, alphabet_size)) % alphabet_size
    for _ in range(spec.insertions):
        w.insert(rng.randrange(len(w) + 1), rng.randrange(alphabet_size))
    return tuple(w)


# ---------------------------------------------------------------------------
# Exhaustive decoder sweeps


def _single_deletions(u):
    return {u[:i] + u[i + 1 :] for i in range(len(u))}


def _single_insertions(u, sigma):
    return {
        u[:i] + (v,) + u[i:] for i in range(len(u) + 1) for v in range(sigma)
    }


def _single_substitutions(u, sigma):
    out = set()
    for i, old in enumerate(u):
        for v in range(sigma):
            if v != old:
                out.add(u[:i] + (v,) + u[i + 1 :])
    return out


def _sweep(report, inputs, fast, fallback):
    """Run both decoders on every (corrupted, expected) pair."""
    for corrupted, expected in inputs:
        report.checks += 1
        try:
            got = fast(corrupted)
        except (NotDecodable, AmbiguousDecoding, NoCodeword, MultipleCandidates) as e:
            report.record((expected, corrupted, f"fast:{type(e).__name__}"))
            continue
        if got != expected:
            report.record((expected, corrupted, got))
            continue
        if fallback is not None:
            try:
                via_fallback = fallback(corrupted)
            except (
                NotDecodable,
                AmbiguousDecoding,
                NoCodeword,
                MultipleCandidates,
            ) as e:
                report.record(
                    (expected, corrupted, f"fallback:{type(e).__name__}")
                )
                continue
            if via_fallback != got:
                report.record((expected, corrupted, ("disagree", via_fallback)))


def exhaustive_decoder_check(scheme: str, **params) -> VerificationReport:
    """Exhaustively corrupt every codeword and demand perfect decoding.

    Supported schemes: "e1" (single indels), "e2" (single substitutions),
    "all-labels-del" (pair-label indels), "tenengolts" (sampled words,
    single indels), "coset" (single substitutions against the best coset).
    Fast path and enumeration fallback are compared on every input.
    """
    start = time.monotonic()
    shown = {
        k: v for k, v in params.items() if isinstance(v, (int, str, tuple))
    }
    if "code" in params:
        code_arg = params["code"]
        shown.update(q=code_arg.q, n=code_arg.n, x0=code_arg.x0)
    if "result" in params:
        shown.update(n=params["result"].n, p=params["result"].p)
    report = VerificationReport(target=scheme, params=shown)
    if scheme == "e1":
        k = params["k"]
        flanks = params.get("flanks", DEFAULT_FLANKS)
        codebook = e1_labeling_codebook(k, flanks)
        fast = lambda u: e1_decode(u, k, flanks)
        fallback = lambda u: e1_decode_enum(u, k, flanks, codebook)
        for ell, x in codebook.items():
            report.words_checked += 1
            inputs = [(ell, x)]
            inputs += [(w, x) for w in _single_deletions(ell)]
            inputs += [(w, x) for w in _single_insertions(ell, 11)]
            _sweep(report, inputs, fast, fallback)
    elif scheme == "e2":
        k = params["k"]
        flanks = params.get("flanks", DEFAULT_FLANKS)
        codebook = e2_labeling_codebook(k, flanks)
        fast = lambda u: e2_decode(u, k, flanks)
        fallback = lambda u: e2_decode_enum(u, k, flanks, codebook)
        for ell, x in codebook.items():
            report.words_checked += 1
            inputs = [(ell, x)]
            inputs += [(w, x) for w in _single_substitutions(ell, 11)]
            _sweep(report, inputs, fast, fallback)
    elif scheme == "all-labels-del":
        code: AllLabelsCode = params["code"]
        if code.codebook is None:
            raise ValueError("decoder sweep needs a materialized codebook")
        sigma = code.q * code.q
        book = {
            label_framed(x, code.labels, code.flanks): x for x in code.codebook
        }
        fast = lambda u: decode_all_labels_deletion(u, code)
        fallback = lambda u: decode_all_labels_deletion_enum(u, code, book)
        for x in code.codebook:
            report.words_checked += 1
            ell = label_framed(x, code.labels, code.flanks)
            inputs = [(ell, x)]
            inputs += [(w, x) for w in _single_deletions(ell)]
            inputs += [(w, x) for w in _single_insertions(ell, sigma)]
            _sweep(report, inputs, fast, fallback)
    elif scheme == "tenengolts":
        n = params["n"]
        q = params.get("q", 11)
        samples = params.get("samples", 200)
        seed = params.get("seed", 0)
        rng = random.Random(seed)
        for _ in range(samples):
            x = tuple(rng.randrange(q) for _ in range(n))
            p = tenengolts_class_of(x, q)
            report.words_checked += 1
            inputs = [(x, x)]
            inputs += [(w, x) for w in _single_deletions(x)]
            inputs += [(w, x) for w in _single_insertions(x, q)]
            _sweep(
                report,
                inputs,
                lambda y, p=p: tenengolts_decode(y, p),
                lambda y, p=p: tenengolts_decode_enum(y, p),
            )
    elif scheme == "coset":
        result: HammingCosetSearchResult = params.get("result") or search_hamming_coset(
            params["n"]
        )
        labels = params.get("labels", MINIMAL_SET)
        fast = lambda u: coset_decode(u, result, labels)
        for x in result.codebook:
            report.words_checked += 1
            ell = label_framed(x, labels, result.flanks)
            inputs = [(ell, x)]
            inputs += [(w, x) for w in _single_substitutions(ell, labels.sigma)]
            _sweep(report, inputs, fast, None)
    else:
        raise ValueError(f"unknown scheme {scheme!r}")
    report.wall_time = time.monotonic() - start
    return report


def e1_labeling_codebook(k: int, flanks: FlankConvention = DEFAULT_FLANKS):
    """Framed labeling -> data word for every E1 codeword of length k."""
    book = {}
    for x in product(range(4), repeat=k):
        book[label_framed(e1_encode(x, flanks), MINIMAL_SET, flanks)] = x
    return book


def e2_labeling_codebook(k: int, flanks: FlankConvention = DEFAULT_FLANKS):
    """Framed labeling -> data word for every E2 codeword of length k."""
    book = {}
    for x in product(range(4), repeat=k):
        book[label_framed(e2_encode(x, flanks), MINIMAL_SET, flanks)] = x
    return book
