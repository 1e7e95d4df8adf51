"""Exit criteria. Each test prints one PASS/FAIL line in the terminal summary
(see conftest.py) and enforces its own runtime budget."""

import io
import json
import random
import time
from contextlib import contextmanager

import mpmath
import numpy as np
import pytest

from ddcert import bounds, cli, gpoly, graphcore as gc, search, spectra, theorem
from ddcert.gpoly import QuadInt

pytestmark = pytest.mark.acceptance


@contextmanager
def budget(seconds):
    t0 = time.perf_counter()
    yield
    elapsed = time.perf_counter() - t0
    assert elapsed < seconds, f"took {elapsed:.2f}s, budget {seconds}s"


def spectrum_is(report, expected, tol):
    got = report.eigenvalues
    return len(got) == len(expected) and all(
        abs(v - ev) <= tol and m == em for (v, m), (ev, em) in zip(got, expected)
    )


def test_ac01_moore_identity_suite():
    with budget(5):
        for k in range(2, 13):
            for d in range(1, 21):
                m = bounds.moore_bound(k, d)
                if k >= 3:
                    assert m - bounds.bipartite_moore_bound(k, d) == (k - 1) ** d
                assert gpoly.eval_exact(gpoly.build(k, d), k) == m


def test_ac02_petersen_certificate():
    with budget(1):
        g = gc.petersen()
        assert g.n == 10 == bounds.moore_bound(3, 2)
        rep = spectra.eigenvalues(g)
        assert spectrum_is(rep, [(3, 1), (1, 5), (-2, 4)], 1e-8)
        poly = gpoly.build(3, 2)
        assert gpoly.eval_exact(poly, 1) == 0 and gpoly.eval_exact(poly, -2) == 0
        chk = spectra.defect_matrix_check(g, 2)
        assert chk.ok and not chk.matrix_b.any()
        assert spectra.spectral_defect_lower_bound(g, 2, rep).bound == 0


def test_ac03_hoffman_singleton_certificate():
    with budget(10):
        g = gc.hoffman_singleton()
        assert gc.degree_profile(g) == (7, 7, True) and g.n == 50
        assert gc.girth(g) == 5 and gc.diameter(g) == 2
        poly = gpoly.build(7, 2)
        assert gpoly.eval_exact(poly, 2) == 0 and gpoly.eval_exact(poly, -3) == 0
        chk = spectra.defect_matrix_check(g, 2)
        assert chk.ok and chk.delta == 0 and not chk.matrix_b.any()


def test_ac04_heawood_tightness():
    with budget(1):
        g = gc.heawood()
        assert g.n == 14 == bounds.bipartite_moore_bound(3, 3)
        assert bounds.defect(3, 3, g.n) == 8 == 2**3 and bounds.moore_bound(3, 3) == 22
        sb = spectra.spectral_defect_lower_bound(g, 3)
        assert sb.bound == 8 and abs(sb.witness + 3) < 1e-9
        assert gpoly.eval_exact(gpoly.build(3, 3), -3) == -8
        chk = spectra.defect_matrix_check(g, 3)
        b = chk.matrix_b
        assert chk.ok and all(int(s) == 8 for s in b.sum(axis=0)) and all(int(s) == 8 for s in b.sum(axis=1))


def test_ac05_walk_oracle_equivalence():
    with budget(60):
        corpus = gc.small_corpus(20)
        assert {"petersen", "heawood", "k33", "cycle(5)", "complete(4)"} <= set(corpus)
        for name, g in corpus.items():
            k = gc.regular_degree(g)
            for i in range(0, 5):
                walks = gc.nb_walk_counts(g, i)
                poly = spectra.apply_gpoly_to_matrix(k, i, g).astype(object)
                assert np.array_equal(walks, poly), (name, i)


def _outer_samples(rng, k, count):
    edge = 2 * (k - 1) ** 0.5
    lo, hi = edge + 1e-3, k - 1e-3
    return [rng.uniform(lo, hi) * rng.choice((1, -1)) for _ in range(count)]


def test_ac06_analytic_suite():
    with budget(60):
        rng = random.Random(20240601)
        h = mpmath.mpf("1e-6")
        for k in range(3, 11):
            for d in range(2, 31):
                g = gpoly.build(k, d)
                for x in _outer_samples(rng, k, 100):
                    ref = gpoly.eval_real(g, x, 128)
                    cf = gpoly.closed_form(k, d, x, 128)
                    assert abs(cf - ref) / max(1, abs(ref)) <= 1e-9, (k, d, x)
                    der = gpoly.derivative_eval(k, d, x, 128)
                    with mpmath.workprec(128):
                        fd = (gpoly.eval_real(g, x + h, 128) - gpoly.eval_real(g, x - h, 128)) / (2 * h)
                    assert abs(der - fd) <= 1e-5 * max(1, abs(der)), (k, d, x)
        for k in range(3, 7):
            for d in range(8, 17, 2):
                assert gpoly.monotonicity_scan(k, d, "positive", 1000)
                assert gpoly.monotonicity_scan(k, d, "negative", 1000)


def test_ac07_theorem_engine():
    with budget(5):
        d, cond = theorem.min_even_diameter(3, 2)
        assert (d, cond) == (8, True)
        cb = theorem.case_bounds(3, 8, 2)
        assert cb.nonregular_loss > 2 and cb.bipartite_loss > 2 and cb.small_girth_bound > 2
        assert cb.high_girth_bound_pos.compare(2) > 0 and cb.high_girth_bound_neg.compare(2) > 0
        assert theorem.min_even_diameter(10, 9) == (12, True)
        for k in range(3, 11):
            for c in range(1, k):
                d0, _ = theorem.min_even_diameter(k, c)
                for dd in range(d0, d0 + 21, 2):
                    assert theorem.case_bounds(k, dd, c).all_exceed()


def test_ac08_remark_interval():
    with budget(1):
        iv = theorem.generalized_moore_defect_interval(3, 8)
        assert iv.low_neg == QuadInt(144, -64, 2)
        assert iv.low_pos == QuadInt(144, 64, 2)
        assert iv.high == 384
        with mpmath.workprec(200):
            r2 = mpmath.sqrt(2)
            assert abs(mpmath.mpf(iv.low_neg.decimal(30)) - (144 - 64 * r2)) <= 1e-12
            assert abs(mpmath.mpf(iv.low_pos.decimal(30)) - (144 + 64 * r2)) <= 1e-12


def test_ac09_search_oracle():
    with budget(120):
        for d in range(1, 6):
            res = search.max_order_search(2, d, min(2 * d + 2, search.MAX_N_CAP))
            assert res.best_order == 2 * d + 1 and res.exhaustive
            assert gc.diameter(res.witness) <= d
        res = search.max_order_search(3, 2, 10)
        assert res.best_order == 10
        w = res.witness
        assert gc.degree_profile(w) == (3, 3, True) and gc.diameter(w) == 2
        assert spectra.spectral_defect_lower_bound(w, 2).bound == 0
        chk = spectra.defect_matrix_check(w, 2)
        assert chk.ok and chk.delta == 0 and not chk.matrix_b.any()


def test_ac10_cli_contract():
    def run(argv):
        buf = io.StringIO()
        code = cli.run(argv + ["--json"], stdout=buf)
        return code, json.loads(buf.getvalue())

    code, rep = run(["bounds", "-k", "3", "-d", "2"])
    r = rep["results"]
    assert code == 0 and (r["moore"], r["bipartite"], r["nonregular"]) == ("10", "6", "7")
    assert bounds.moore_bound(3, 2) == int(r["moore"])

    code, rep = run(["analyze", "--graph", "petersen", "-d", "2"])
    r = rep["results"]
    assert code == 0 and r["defect"] == "0" and r["spectral_lower_bound"] == "0"
    assert r["defect_matrix_zero"] is True and all(c["pass"] for c in rep["checks"])
    assert int(r["moore"]) - int(r["order"]) == int(r["defect"])

    code, rep = run(["certify", "-k", "3", "-c", "2"])
    r = rep["results"]
    assert code == 0 and r["d"] == "8" and r["conditional"] is True
    assert [row["exceeds_c"] for row in r["cases"]] == [True] * 5
    assert theorem.case_bounds(3, int(r["d"]), 2).all_exceed()
