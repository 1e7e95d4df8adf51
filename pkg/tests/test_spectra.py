import math

import numpy as np
import pytest

from ddcert import bounds, gpoly, graphcore as gc, spectra
from ddcert.graphcore import StructureError


def clustered(report, nd=8):
    return [(round(v, nd) + 0.0, m) for v, m in report.eigenvalues]


def test_petersen_spectrum():
    assert clustered(spectra.eigenvalues(gc.petersen())) == [(3.0, 1), (1.0, 5), (-2.0, 4)]


def test_c5_spectrum():
    r = spectra.eigenvalues(gc.cycle(5))
    expected = sorted((2 * math.cos(2 * math.pi * j / 5) for j in range(5)), reverse=True)
    assert np.allclose(r.values, expected, atol=1e-12)
    assert [m for _, m in r.eigenvalues] == [1, 2, 2]


def test_k4_spectrum():
    assert clustered(spectra.eigenvalues(gc.complete(4))) == [(3.0, 1), (-1.0, 3)]


@pytest.mark.parametrize("name", ["petersen", "heawood", "hoffman_singleton", "k33", "cycle(8)", "complete(6)"])
def test_report_invariants(name):
    g = gc.corpus(name)
    r = spectra.eigenvalues(g)
    assert sum(m for _, m in r.eigenvalues) == g.n
    assert abs(sum(v * m for v, m in r.eigenvalues)) < 1e-8
    assert abs(sum(v * v * m for v, m in r.eigenvalues) - 2 * g.m) < 1e-8
    k = gc.regular_degree(g)
    assert abs(r.values[0] - k) < 1e-9 and r.values[1] < k - 1e-6
    assert (abs(r.values[-1] + k) < 1e-9) == gc.is_bipartite(g)
    assert r.residual_bound <= 1e-8 * k


def test_eigenvalues_deterministic():
    a, b = spectra.eigenvalues(gc.hoffman_singleton()), spectra.eigenvalues(gc.hoffman_singleton())
    assert np.array_equal(a.values, b.values) and a.eigenvalues == b.eigenvalues


def test_spectral_bound_examples():
    assert spectra.spectral_defect_lower_bound(gc.petersen(), 2).bound == 0
    heawood = spectra.spectral_defect_lower_bound(gc.heawood(), 3)
    assert heawood.bound == 8 and round(heawood.witness, 9) == -3
    assert spectra.spectral_defect_lower_bound(gc.hoffman_singleton(), 2).bound == 0


def test_spectral_bound_preconditions():
    with pytest.raises(StructureError):
        spectra.spectral_defect_lower_bound(gc.petersen(), 1)
    with pytest.raises(StructureError):
        spectra.spectral_defect_lower_bound(gc.path(4), 3)


def test_spectral_bound_sound_on_corpus():
    for name, g in gc.small_corpus(20).items():
        k = gc.regular_degree(g)
        if k < 2:
            continue
        diam = int(gc.diameter(g))
        for d in range(max(diam, 1), diam + 3):
            sb = spectra.spectral_defect_lower_bound(g, d)
            assert sb.bound <= bounds.defect(k, d, g.n), (name, d)


def test_gpoly_matrix_examples():
    assert np.array_equal(spectra.apply_gpoly_to_matrix(2, 2, gc.cycle(5)), np.ones((5, 5), dtype=int))
    assert np.array_equal(spectra.apply_gpoly_to_matrix(3, 2, gc.petersen()), np.ones((10, 10), dtype=int))
    assert np.array_equal(spectra.apply_gpoly_to_matrix(3, 0, gc.heawood()), np.eye(14, dtype=int))
    with pytest.raises(StructureError):
        spectra.apply_gpoly_to_matrix(3, 2, gc.cycle(5))


def test_gpoly_matrix_matches_coefficients():
    # explicit sum of coefficient * A^i in Python ints, independent of the recurrence
    g = gc.heawood()
    a = g.adjacency_matrix().astype(object)
    for d in range(0, 7):
        poly = gpoly.build(3, d)
        acc = np.zeros((g.n, g.n), dtype=object)
        power = np.eye(g.n, dtype=int).astype(object)
        for c in poly.coeffs:
            acc = acc + c * power
            power = power @ a
        assert np.array_equal(spectra.apply_gpoly_to_matrix(3, d, g).astype(object), acc)


def test_gpoly_matrix_object_path_for_large_d():
    g = gc.cycle(5)
    big = spectra.apply_gpoly_to_matrix(3, 60, gc.petersen())
    assert big.dtype == object
    # row sums of G(A) equal G(k) = M(k, d)
    assert all(int(s) == bounds.moore_bound(3, 60) for s in big.sum(axis=1))
    assert spectra.apply_gpoly_to_matrix(2, 4, g).dtype == np.int64


def test_defect_matrix_examples():
    p = spectra.defect_matrix_check(gc.petersen(), 2)
    assert p.ok and p.delta == 0 and not p.matrix_b.any()
    h = spectra.defect_matrix_check(gc.heawood(), 3)
    assert h.ok and h.delta == 8
    assert all(int(s) == 8 for s in h.matrix_b.sum(axis=0))
    c = spectra.defect_matrix_check(gc.cycle(5), 2)
    assert c.ok and not c.matrix_b.any()


def test_defect_matrix_flags_short_diameter():
    chk = spectra.defect_matrix_check(gc.heawood(), 2)
    assert not chk.nonneg_ok


def test_all_ones_eigen_relation():
    for name in ["petersen", "heawood", "k33", "hoffman_singleton"]:
        g = gc.corpus(name)
        k, d = gc.regular_degree(g), int(gc.diameter(g))
        assert gpoly.eval_exact(gpoly.build(k, d), k) - g.n == bounds.defect(k, d, g.n)


def test_trace_identity_on_corpus():
    for g in gc.small_corpus(20).values():
        k = gc.regular_degree(g)
        if k < 2:
            continue
        d = int(gc.diameter(g))
        assert spectra.trace_identity_gap(g, d) <= g.n * 1e-6


def test_ramanujan_examples():
    assert spectra.is_ramanujan(spectra.eigenvalues(gc.petersen()), 3)
    heawood = spectra.eigenvalues(gc.heawood())
    # literal definition: -3 is an eigenvalue other than k, and 3 > 2 sqrt 2
    assert not spectra.is_ramanujan(heawood, 3)
    assert spectra.is_ramanujan(heawood, 3, exclude_minus_k=True)
    assert spectra.is_ramanujan(spectra.eigenvalues(gc.cycle(6)), 2)
