"""Quadrature discretization of the boundary-flux and single-layer operators.

Smooth kernels on closed analytic curves get the plain trapezoid rule on the
uniform parameter grid, which converges spectrally.  Two ingredients need
care:

* the boundary-flux kernel is smooth but its diagonal is a limit, namely
  curvature(x) / (4 pi) times the local weight;
* the single-layer kernel has a log singularity.  It is split against
  log|2 sin((t - s)/2)|, whose quadrature is exact per Fourier mode (the
  multiplier is -1/(2|k|)), leaving a smooth remainder for the trapezoid
  rule.  On a circle the split has no remainder at all, so the exact
  eigenrelation S[cos n.] = -cos(n.)/(2n) holds to machine precision.

Eigendecomposition uses the symmetrization of the flux operator under the
negative single-layer inner product.  Curves whose exterior conformal radius
is near one make that raw form exactly singular on the equilibrium density,
so the Gram adds the standard shifted-kernel rank-one term
gamma/(2 pi) w w^T, gamma = log(4 (1 + max|x|)); mean-zero densities, which
is every mode except the equilibrium, are untouched.
"""

from dataclasses import dataclass

import numpy as np
import scipy.linalg

from .errors import CurveOverlap, GramNotPositive, NearSingular

MIN_CURVE_GAP = 1e-9


@dataclass(frozen=True)
class DiscreteOperator:
    """Dense Nystrom matrix with its node geometry.

    matrix acts on density samples; weights are the arc-length quadrature
    weights; curve_slices index the per-curve blocks of the node set.
    """

    matrix: np.ndarray
    weights: np.ndarray
    points: np.ndarray
    normals: np.ndarray
    curve_slices: tuple
    kind: str

    @property
    def n(self) -> int:
        return len(self.weights)


def _as_curve_list(curves):
    if hasattr(curves, "points"):
        return [curves]
    return list(curves)


def _stack_geometry(curve_list):
    slices = []
    start = 0
    for c in curve_list:
        slices.append(slice(start, start + c.n))
        start += c.n
    pts = np.concatenate([c.points for c in curve_list])
    nrm = np.concatenate([c.normals for c in curve_list])
    wts = np.concatenate([c.weights for c in curve_list])
    return pts, nrm, wts, tuple(slices)


def _check_disjoint(curve_list):
    # The off-diagonal kernel blocks are smooth only while the curves stay
    # separated by more than the local sample spacing; below that the
    # near-singularity is unresolvable, and curves that actually cross can
    # still keep their sampled nodes a fraction of the spacing apart.
    for i in range(len(curve_list)):
        for j in range(i + 1, len(curve_list)):
            d = curve_list[i].points[:, None, :] - curve_list[j].points[None, :, :]
            gap = np.sqrt(np.min(np.sum(d * d, axis=-1)))
            spacing = max(
                float(np.max(curve_list[i].weights)),
                float(np.max(curve_list[j].weights)),
            )
            if gap < max(MIN_CURVE_GAP, 0.5 * spacing):
                raise CurveOverlap(
                    "curves %d and %d come within %.3e of each other" % (i, j, gap)
                )


def discretize_np(curves) -> DiscreteOperator:
    """Nystrom matrix of the boundary-flux operator on one or more curves.

    Entry (i, j) applies kernel <x_i - y_j, nu_i> / (2 pi |x_i - y_j|^2)
    with weight w_j; the diagonal uses the curvature limit kappa_i / (4 pi).
    Off-diagonal curve blocks are the normal-derivative coupling of the
    single layer between the curves, same kernel, no special casing.
    """
    curve_list = _as_curve_list(curves)
    _check_disjoint(curve_list)
    pts, nrm, wts, slices = _stack_geometry(curve_list)
    dx = pts[:, None, 0] - pts[None, :, 0]
    dy = pts[:, None, 1] - pts[None, :, 1]
    r2 = dx * dx + dy * dy
    np.fill_diagonal(r2, 1.0)
    numer = nrm[:, None, 0] * dx + nrm[:, None, 1] * dy
    mat = numer / (2.0 * np.pi * r2) * wts[None, :]
    kappa = np.concatenate([c.curvatures for c in curve_list])
    np.fill_diagonal(mat, kappa / (4.0 * np.pi) * wts)
    return DiscreteOperator(
        matrix=mat, weights=wts, points=pts, normals=nrm, curve_slices=slices, kind="flux"
    )


def _log_sin_circulant(n_nodes):
    # quadrature of (1/2pi) int log|2 sin((t-s)/2)| f(s) ds, exact for the
    # trigonometric interpolant: Fourier multiplier -1/(2|k|), zero mean
    freqs = np.fft.fftfreq(n_nodes) * n_nodes
    mult = np.zeros(n_nodes)
    nz = freqs != 0
    mult[nz] = -0.5 / np.abs(freqs[nz])
    col = np.fft.ifft(mult).real
    return scipy.linalg.circulant(col)


def discretize_single_layer(curves) -> DiscreteOperator:
    """Nystrom matrix of the single layer log kernel on one or more curves.

    Same-curve blocks use the log-sin split; cross blocks are smooth and use
    the plain rule.  The matrix maps density samples to potential samples on
    every curve, so the full block matrix is the system single layer.
    """
    curve_list = _as_curve_list(curves)
    _check_disjoint(curve_list)
    pts, nrm, wts, slices = _stack_geometry(curve_list)
    total = len(wts)
    mat = np.zeros((total, total))
    # cross blocks: plain smooth quadrature of log|x - y| / 2pi
    dx = pts[:, None, 0] - pts[None, :, 0]
    dy = pts[:, None, 1] - pts[None, :, 1]
    r2 = dx * dx + dy * dy
    np.fill_diagonal(r2, 1.0)
    logdist = 0.5 * np.log(r2)
    for bi, si in enumerate(slices):
        for bj, sj in enumerate(slices):
            if bi != bj:
                mat[si, sj] = logdist[si, sj] / (2.0 * np.pi) * wts[None, sj]
    # same-curve blocks: split against log|2 sin((t-s)/2)|
    for s, c in zip(slices, curve_list):
        nn = c.n
        t = c.thetas
        half = 0.5 * (t[:, None] - t[None, :])
        sin_part = np.abs(2.0 * np.sin(half))
        np.fill_diagonal(sin_part, 1.0)
        smooth = logdist[s, s] - np.log(sin_part)
        np.fill_diagonal(smooth, np.log(c.jacobians))
        block = _log_sin_circulant(nn) + smooth / nn
        mat[s, s] = block * c.jacobians[None, :]
    return DiscreteOperator(
        matrix=mat, weights=wts, points=pts, normals=nrm, curve_slices=slices, kind="single_layer"
    )


def gram_matrix(sl_op: DiscreteOperator) -> np.ndarray:
    """Positive inner-product matrix -W S + gamma/(2 pi) w w^T.

    The rank-one shift rescales the log kernel so the enclosing radius sits
    safely inside the unit disk; it changes nothing on mean-zero densities.
    """
    w = sl_op.weights
    r_max = float(np.max(np.hypot(sl_op.points[:, 0], sl_op.points[:, 1])))
    gamma = np.log(4.0 * (1.0 + r_max))
    g = -(w[:, None] * sl_op.matrix) + (gamma / (2.0 * np.pi)) * np.outer(w, w)
    return 0.5 * (g + g.T)


@dataclass(frozen=True)
class SpectralDecomposition:
    """Real eigenvalues (descending) with Gram-orthonormal eigenvector columns."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray
    gram: np.ndarray
    weights: np.ndarray


def numeric_spectrum(np_op: DiscreteOperator, sl_op: DiscreteOperator) -> SpectralDecomposition:
    """Full eigendecomposition of the flux operator, symmetrized under the Gram form.

    Solves the definite pencil (G K) x = lambda G x via the square-root
    (Cholesky) reduction inside the symmetric solver; eigenvectors come out
    G-orthonormal.  If the factorization fails the Gram is checked for
    negativity (GramNotPositive) and otherwise a direct nonsymmetric solve
    with a realness check is used.
    """
    if np_op.n != sl_op.n:
        raise ValueError("operators come from different discretizations")
    g = gram_matrix(sl_op)
    a = g @ np_op.matrix
    a = 0.5 * (a + a.T)
    try:
        vals, vecs = scipy.linalg.eigh(a, g)
    except (scipy.linalg.LinAlgError, np.linalg.LinAlgError):
        gv = scipy.linalg.eigvalsh(g)
        if gv[0] < -1e-10 * max(gv[-1], 1.0):
            raise GramNotPositive(
                "inner-product matrix has eigenvalue %.3e; discretization failed" % gv[0]
            )
        vals, vecs = np.linalg.eig(np_op.matrix)
        if np.max(np.abs(vals.imag)) > 1e-8:
            raise GramNotPositive(
                "fallback eigenvalues are not real within 1e-8; discretization failed"
            )
        vals = vals.real
        vecs = vecs.real
        norms = np.sqrt(np.abs(np.einsum("ij,ik,kj->j", vecs, g, vecs)))
        norms[norms < 1e-300] = 1.0
        vecs = vecs / norms[None, :]
    order = np.argsort(vals)[::-1]
    return SpectralDecomposition(
        eigenvalues=vals[order],
        eigenvectors=vecs[:, order],
        gram=g,
        weights=np_op.weights.copy(),
    )


def resolvent_solve(np_op: DiscreteOperator, lam, rhs):
    """Solve (lambda I - K) phi = rhs for density samples phi.

    lam may be complex; a reciprocal condition estimate guards the solve and
    raises NearSingular beyond 1e14.
    """
    rhs = np.asarray(rhs)
    a = lam * np.eye(np_op.n, dtype=complex) - np_op.matrix
    anorm = np.linalg.norm(a, 1)
    lu, piv = scipy.linalg.lu_factor(a)
    rcond, info = scipy.linalg.lapack.zgecon(lu, anorm)
    if info != 0:
        raise RuntimeError("condition estimate failed with info=%d" % info)
    if rcond < 1e-14:
        raise NearSingular(
            "resolvent at lambda=%s has condition about %.2e" % (lam, 1.0 / max(rcond, 1e-300))
        )
    return scipy.linalg.lu_solve((lu, piv), rhs.astype(complex))
