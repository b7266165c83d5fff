"""Polarization tensors: quadrature evaluation and closed-form pole approximations.

The order (m, n) tensor entry contracts harmonic polynomials against the
resolvent of the boundary-flux operator K:

    M_mn = int Q_n (lambda I - K)^-1 [dP_m/dnu] dsigma,

with P_l = (x1 + i x2)^l and Q, P taken as real or imaginary parts per the
kind tag ("cc", "cs", "sc", "ss"; first letter selects the source part for
order m, second the moment part for order n).  The same entry expands over
eigenpairs phi_j of K as

    sum_j (1/2 - lambda_j) / (lambda - lambda_j) |<H, phi_j>|^2 / <phi_j, -S phi_j>

with H the harmonic polynomial itself.  The order-delta pole formulas for
the algebraic family place the (1,1) poles at +/- (delta/2) sqrt(m) and the
(2,2) cos/cos poles at +/- (delta/2) sqrt(2 (m-1)).
"""

import numpy as np

from .errors import ExactPole, OutOfRange
from .nystrom import gram_matrix, resolvent_solve


def _harmonic_parts(points, order):
    z = points[:, 0] + 1j * points[:, 1]
    return z**order


def harmonic_moment(points, order: int, part: str):
    """Samples of Re or Im (x1 + i x2)^order at the nodes."""
    vals = _harmonic_parts(points, order)
    return vals.real if part == "c" else vals.imag


def harmonic_flux(points, normals, order: int, part: str):
    """Samples of the outward normal derivative of the order-`order` harmonic."""
    z = points[:, 0] + 1j * points[:, 1]
    nu = normals[:, 0] + 1j * normals[:, 1]
    f = order * z ** (order - 1) * nu
    return f.real if part == "c" else f.imag


def _check_kind(kind):
    if kind not in ("cc", "cs", "sc", "ss"):
        raise ValueError("kind must be one of cc, cs, sc, ss, got %r" % kind)


def gpt_direct(np_op, lam, order_m: int, order_n: int, kind: str) -> complex:
    """Tensor entry via one resolvent solve on the discretized operator."""
    _check_kind(kind)
    if order_m < 1 or order_n < 1:
        raise OutOfRange("harmonic orders must be >= 1")
    src = harmonic_flux(np_op.points, np_op.normals, order_m, kind[0])
    phi = resolvent_solve(np_op, lam, src)
    q = harmonic_moment(np_op.points, order_n, kind[1])
    return complex(np.sum(q * phi * np_op.weights))


def gpt_spectral_sum(decomp, sl_op, lam, h_values, n_modes=None) -> complex:
    """Tensor entry from the eigendecomposition.

    h_values are samples of the harmonic polynomial H on the nodes of the
    same discretization that produced decomp and sl_op.  With n_modes=None
    every discrete mode enters and the result matches the direct resolvent
    value up to conditioning.  An integer n_modes keeps only the modes with
    the largest weights (0.5 - lambda_j) |<H, phi_j>|^2 / <phi_j, phi_j>_H;
    ranking by weight rather than by eigenvalue keeps the truncation stable
    when eigenvalues cluster near zero, as they do for a disk.
    """
    h_values = np.asarray(h_values)
    if len(h_values) != len(decomp.weights):
        raise ValueError("h_values length does not match the discretization")
    g = gram_matrix(sl_op)
    coupling = (h_values * decomp.weights) @ decomp.eigenvectors
    denom = np.einsum("ij,ij->j", decomp.eigenvectors, g @ decomp.eigenvectors)
    weight = (0.5 - decomp.eigenvalues) * np.abs(coupling) ** 2 / denom
    if n_modes is not None and n_modes < len(weight):
        order = np.argsort(-np.abs(weight))[:n_modes]
        weight = weight[order]
        lam_j = decomp.eigenvalues[order]
    else:
        lam_j = decomp.eigenvalues
    return complex(np.sum(weight / (lam - lam_j)))


def _pole_check(lam, poles):
    lam_c = complex(lam)
    if lam_c.imag == 0.0 and any(lam_c.real == p for p in poles):
        raise ExactPole("lambda sits exactly on a pole at %.17g" % lam_c.real)


def _parity_gate(dom, allow_even, what):
    if dom.m % 2 == 0 and not allow_even:
        raise OutOfRange(
            "%s is derived for odd m; pass allow_even=True to use the even-m extension" % what
        )


def m11_asymptotic(dom, lam, allow_even: bool = False) -> complex:
    """Order-delta (1,1) tensor: (pi/2) e^(2 rho0) (1/(lambda - p) + 1/(lambda + p)),
    poles p = +/- (delta/2) sqrt(m).  Exact for delta = 0 (disk of radius e^rho0)."""
    _parity_gate(dom, allow_even, "m11_asymptotic")
    p = 0.5 * dom.delta * np.sqrt(dom.m)
    _pole_check(lam, (p, -p))
    scale = 0.5 * np.pi * np.exp(2.0 * dom.rho0)
    return complex(scale * (1.0 / (lam - p) + 1.0 / (lam + p)))


def m22cc_asymptotic(dom, lam, allow_even: bool = False) -> complex:
    """Order-delta (2,2) cos/cos tensor with poles at +/- (delta/2) sqrt(2 (m-1)).

    pi e^(4 rho0) [ (1/2 - p)/((1/2 + p)(lambda - p)) + (1/2 + p)/((1/2 - p)(lambda + p)) ].
    Requires m >= 2; reduces to 2 pi e^(4 rho0) / lambda at delta = 0.
    """
    if dom.m < 2:
        raise OutOfRange("the (2,2) pole formula needs m >= 2, got m=%d" % dom.m)
    _parity_gate(dom, allow_even, "m22cc_asymptotic")
    p = 0.5 * dom.delta * np.sqrt(2.0 * (dom.m - 1))
    _pole_check(lam, (p, -p))
    scale = np.pi * np.exp(4.0 * dom.rho0)
    return complex(
        scale * ((0.5 - p) / ((0.5 + p) * (lam - p)) + (0.5 + p) / ((0.5 - p) * (lam + p)))
    )
