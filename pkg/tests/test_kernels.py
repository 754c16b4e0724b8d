"""Backend equivalence: the compiled kernels must match the pure-Python ones."""
from itertools import product

import pytest

from labelcodes import _kernels_py
from labelcodes.labeling import all_labels_set, minimal_dna_set

try:
    from labelcodes import _kernels_cy

    BACKENDS = [_kernels_py, _kernels_cy]
except ImportError:
    BACKENDS = [_kernels_py]

S = minimal_dna_set()
ALL4 = all_labels_set(4)


@pytest.fixture(params=BACKENDS, ids=lambda m: m.BACKEND)
def backend(request):
    return request.param


def test_compiled_backend_is_available():
    # the build is expected to produce the extension in this environment
    assert len(BACKENDS) == 2


def test_derivative_integrate_roundtrip(backend):
    for q in (2, 3, 4):
        for n in range(0, 6):
            for x in product(range(q), repeat=n):
                d = backend.derivative(x, q)
                assert backend.integrate(d, q) == x


def test_derivative_matches_reference(backend):
    assert backend.derivative((1, 2, 2, 0), 4) == (1, 1, 0, 2)
    assert backend.derivative((1, 0, 1), 2) == (1, 1, 1)


def test_signature_and_weight_sum(backend):
    assert backend.signature((2, 0, 1, 1)) == (0, 1, 1)
    assert backend.signature((5,)) == ()
    assert backend.vt_weight_sum((0, 1, 1)) == 5


def test_label_kernels_agree_across_backends():
    if len(BACKENDS) < 2:
        pytest.skip("compiled backend unavailable")
    py, cy = BACKENDS
    for x in product(range(4), repeat=5):
        assert py.label_word_pairs(x, 4, S.pair_table) == cy.label_word_pairs(
            x, 4, S.pair_table
        )
        u_py = py.label_framed_pairs(x, 4, S.pair_table, 0, 0)
        u_cy = cy.label_framed_pairs(x, 4, S.pair_table, 0, 0)
        assert u_py == u_cy
        args = (4, S.label_first, S.label_second, S.zero_adj, 0, 0, False)
        assert py.invert_framed_pairs(u_py, *args) == cy.invert_framed_pairs(
            u_cy, *args
        )


def test_invert_kernel_statuses(backend):
    args = (4, S.label_first, S.label_second, S.zero_adj, 0, 0, False)
    status, word = backend.invert_framed_pairs((0, 1, 0, 6, 7), *args)
    assert status == backend.OK and word == (0, 1, 2, 3)
    # AC then AC again contradicts itself
    status, _ = backend.invert_framed_pairs((1, 1), *args)
    assert status == backend.INVALID


def test_invert_kernel_all_pairs(backend):
    args = (4, ALL4.label_first, ALL4.label_second, ALL4.zero_adj, 0, 0, True)
    u = backend.label_framed_pairs((1, 3), 4, ALL4.pair_table, 0, 0)
    assert u == (1, 7, 12)
    status, word = backend.invert_framed_pairs(u, *args)
    assert status == backend.OK and word == (1, 3)
    # broken chain: second component 3 does not match next first component 0
    status, _ = backend.invert_framed_pairs((3, 1), *args)
    assert status == backend.INVALID
