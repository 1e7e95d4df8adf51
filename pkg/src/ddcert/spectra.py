"""Adjacency spectra and the spectral defect certificate.

For a k-regular graph of diameter <= d and order M(k,d) - delta, every
adjacency eigenvalue other than k satisfies |G_{k,d}(lambda)| <= delta. Here
that inequality is turned into a sound integer lower bound on delta, and the
matrix identity G_{k,d}(A) = J + B behind it is checked exactly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import mpmath
import numpy as np

from ddcert import bounds, gpoly
from ddcert.graphcore import N_CAP, Graph, StructureError, diameter, is_connected, regular_degree


class EigensolverError(RuntimeError):
    """The dense eigensolver failed or returned pairs with excessive residual."""


@dataclass
class SpectralReport:
    eigenvalues: list[tuple[float, int]]  # clustered (value, multiplicity), descending
    values: np.ndarray  # raw eigenvalues, descending
    lambda_second_abs: float
    residual_bound: float

    @property
    def n(self) -> int:
        return len(self.values)


@dataclass
class DefectMatrixCheck:
    delta: int
    row_sum_ok: bool
    col_sum_ok: bool
    nonneg_ok: bool
    matrix_b: np.ndarray

    @property
    def ok(self) -> bool:
        return self.row_sum_ok and self.col_sum_ok and self.nonneg_ok


@dataclass
class SpectralBound:
    bound: int
    witness: float
    value: float  # |G_{k,d}(witness)|
    rounding_tol: float


def _cluster(values: np.ndarray, gap: float) -> list[tuple[float, int]]:
    out: list[list[float]] = []
    for v in values:
        if out and out[-1][-1] - v <= gap:
            out[-1].append(float(v))
        else:
            out.append([float(v)])
    return [(sum(c) / len(c), len(c)) for c in out]


def eigenvalues(g: Graph, tol: float = 1e-9) -> SpectralReport:
    """Full symmetric eigendecomposition of the adjacency matrix.

    Eigenvalues closer than 10 * tol are clustered into one reported value
    with multiplicity; the raw list is kept alongside. Every eigenpair's
    residual ||Av - lambda v|| must stay within 1e-8 * max(1, max degree).
    """
    if g.n == 0:
        raise StructureError("empty graph has no spectrum")
    if g.n > N_CAP:
        raise StructureError(f"n = {g.n} exceeds cap {N_CAP}")
    a = g.adjacency_matrix(dtype=np.float64)
    try:
        w, v = np.linalg.eigh(a)
    except np.linalg.LinAlgError as exc:
        raise EigensolverError(f"eigh did not converge: {exc}") from exc
    resid = np.linalg.norm(a @ v - v * w, axis=0)
    rb = float(resid.max())
    kmax = max(1, max(len(x) for x in g.adjacency))
    if not np.all(np.isfinite(w)) or rb > 1e-8 * kmax:
        raise EigensolverError(f"eigenpair residual {rb:.3e} exceeds 1e-8 * {kmax}")
    w = w[::-1].copy()
    second = float(np.max(np.abs(w[1:]))) if len(w) > 1 else 0.0
    return SpectralReport(_cluster(w, 10 * tol), w, second, rb)


def apply_gpoly_to_matrix(k: int, d: int, g: Graph) -> np.ndarray:
    """G_{k,d}(A) by the matrix three-term recurrence, exact integers.

    Uses int64 when every intermediate entry provably fits, Python ints
    (object arrays) otherwise.
    """
    kg = regular_degree(g)
    if kg != k:
        raise StructureError(f"graph is {kg}-regular, not {k}-regular")
    n = g.n
    # entries of G_i(A) count walks of length <= i, so |A G_i| <= k M(k, i)
    big = k * bounds._moore_sum(max(k, 2), d + 1) * (k + 1)
    dtype = np.int64 if big < 2**62 else object
    a = g.adjacency_matrix().astype(dtype)
    eye = np.eye(n, dtype=np.int64).astype(dtype)
    if d == 0:
        return eye
    prev, cur = eye, a + eye
    for _ in range(1, d):
        prev, cur = cur, a @ cur - (k - 1) * prev
    return cur


def defect_matrix_check(g: Graph, d: int) -> DefectMatrixCheck:
    """B = G_{k,d}(A) - J, with its nonnegativity and row/column sums.

    A violation comes back as a failed check: it falsifies the claim that g
    is k-regular of diameter <= d.
    """
    if not is_connected(g):
        raise StructureError("defect matrix needs a connected graph")
    k = regular_degree(g)
    if k < 2:
        raise StructureError("defect matrix needs degree >= 2")
    m = bounds.moore_bound(k, d)
    delta = m - g.n
    b = apply_gpoly_to_matrix(k, d, g) - np.ones((g.n, g.n), dtype=np.int64)
    rows = b.sum(axis=1)
    cols = b.sum(axis=0)
    return DefectMatrixCheck(
        delta=delta,
        row_sum_ok=bool(all(int(r) == delta for r in rows)),
        col_sum_ok=bool(all(int(c) == delta for c in cols)),
        nonneg_ok=bool((b >= 0).all()),
        matrix_b=b,
    )


def spectral_defect_lower_bound(
    g: Graph,
    d: int,
    report: SpectralReport | None = None,
    precision_bits: int = gpoly.DEFAULT_PRECISION,
) -> SpectralBound:
    """Sound integer lower bound on the defect of g from its spectrum.

    Each numeric eigenvalue is within residual_bound of a true one, so
    |G(lambda)| is perturbed by at most residual_bound * sup|G'| over [-k, k];
    that (floored at 1e-6) is subtracted before taking the ceiling, so
    rounding can only under-report.
    """
    if not is_connected(g):
        raise StructureError("spectral bound needs a connected graph")
    k = regular_degree(g)
    if k < 2:
        raise StructureError("spectral bound needs degree >= 2")
    diam = diameter(g)
    if diam > d:
        raise StructureError(f"d = {d} is below the diameter {diam}")
    if report is None:
        report = eigenvalues(g)
    poly = gpoly.build(k, d)
    deriv = gpoly.sup_norm_derivative_bound(poly, k)
    tol = max(1e-6, 2 * report.residual_bound * deriv)
    best = SpectralBound(0, float("nan"), 0.0, tol)
    # connected: k is simple and sits at index 0
    for lam in report.values[1:]:
        val = abs(gpoly.eval_real(poly, float(lam), precision_bits))
        cand = max(0, math.ceil(float(val - mpmath.mpf(tol))))
        if math.isnan(best.witness) or float(val) > best.value:
            best = SpectralBound(cand, float(lam), float(val), tol)
    return best


def is_ramanujan(report: SpectralReport, k: int, tol: float = 1e-9, exclude_minus_k: bool = False) -> bool:
    """lambda_second_abs <= 2 sqrt(k - 1).

    By default the second largest absolute eigenvalue is taken over every
    eigenvalue except one copy of k, so a bipartite graph (which has -k in its
    spectrum) is never Ramanujan for k >= 3. exclude_minus_k=True drops -k as
    well, giving the common convention that ignores both trivial eigenvalues.
    """
    lam = report.lambda_second_abs
    if exclude_minus_k:
        rest = report.values[1:]
        rest = rest[np.abs(rest + k) > 1e-6]
        lam = float(np.max(np.abs(rest))) if len(rest) else 0.0
    return lam <= 2 * math.sqrt(k - 1) + tol


def trace_identity_gap(g: Graph, d: int, report: SpectralReport | None = None) -> float:
    """|trace G_{k,d}(A) - sum_lambda G_{k,d}(lambda)|, exact side vs numeric side."""
    k = regular_degree(g)
    if report is None:
        report = eigenvalues(g)
    exact = int(np.trace(apply_gpoly_to_matrix(k, d, g)))
    poly = gpoly.build(k, d)
    numeric = mpmath.fsum(gpoly.eval_real(poly, float(lam)) for lam in report.values)
    return float(abs(numeric - exact))
