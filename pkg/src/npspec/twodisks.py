"""Spectral theory of two equal disks in bipolar coordinates.

Disks of radius r separated by a gap eps sit at centers +/- (r + eps/2) on
the x-axis.  Bipolar coordinates (xi, theta) with half-focus
alpha = sqrt(eps (r + eps/4)) put the boundaries on xi = +/- xi0,
xi0 = asinh(alpha / r); the exterior is |xi| < xi0 with infinity at (0, 0),
and r cosh(xi0) = eps/2 + r.  The scale factor is
h(xi, theta) = (cosh xi - cos theta) / alpha and arc length is
d sigma = d theta / h.

The boundary-flux operator of the pair diagonalizes per angular index n with
eigenvalues +/- exp(-2 |n| xi0) / 2; the matching potentials, densities and
single-layer traces are all closed-form and exposed here, together with the
(1,1) polarization series, its gap-distance inverse, and the field at the
gap midpoint under a uniform incident field.
"""

from dataclasses import dataclass

import numpy as np

from . import geometry
from .errors import OutOfRange, SeriesPole

PLUS = +1
MINUS = -1

_TAIL_REL = 1e-12
_N_CAP = 1 << 20


@dataclass(frozen=True)
class TwoDiskConfig:
    """Two equal disks: radius r, boundary-to-boundary gap eps."""

    r: float
    eps: float

    def __post_init__(self):
        if self.r <= 0:
            raise ValueError("disk radius must be positive, got %g" % self.r)
        if self.eps <= 0:
            raise ValueError("gap must be positive, got %g" % self.eps)

    @property
    def alpha(self) -> float:
        return float(np.sqrt(self.eps * (self.r + self.eps / 4.0)))

    @property
    def xi0(self) -> float:
        return float(np.arcsinh(self.alpha / self.r))

    @property
    def centers(self):
        c = self.r + self.eps / 2.0
        return np.array([[-c, 0.0], [c, 0.0]])

    def curves(self, n_nodes: int):
        """Left and right boundary circles, each sampled at n_nodes points."""
        left, right = self.centers
        return [
            geometry.circle(left, self.r, n_nodes),
            geometry.circle(right, self.r, n_nodes),
        ]

    def bipolar(self, points):
        """Map plane points to (xi, theta); theta in (-pi, pi]."""
        pts = np.asarray(points, dtype=float)
        z = pts[..., 0] + 1j * pts[..., 1]
        zeta = (z + self.alpha) / (z - self.alpha)
        return np.log(np.abs(zeta)), -np.angle(zeta)

    def from_bipolar(self, xi, theta):
        """Inverse map; (0, 0) is the point at infinity, excluded."""
        xi = np.asarray(xi, dtype=float)
        theta = np.asarray(theta, dtype=float)
        denom = np.cosh(xi) - np.cos(theta)
        x = self.alpha * np.sinh(xi) / denom
        y = self.alpha * np.sin(theta) / denom
        return np.stack([x, y], axis=-1)

    def scale_factor(self, xi, theta):
        """h(xi, theta); arc length on xi = const is d theta / h."""
        return (np.cosh(np.asarray(xi, dtype=float)) - np.cos(theta)) / self.alpha


def eigenvalue(cfg, n: int, sign: int) -> float:
    """Flux-operator eigenvalue sign * exp(-2 |n| xi0) / 2 for angular index n."""
    if n == 0:
        raise OutOfRange("angular index must be nonzero")
    if sign not in (PLUS, MINUS):
        raise ValueError("sign must be +1 or -1")
    return sign * 0.5 * float(np.exp(-2.0 * abs(n) * cfg.xi0))


@dataclass(frozen=True)
class DiskEigenmode:
    """Angular index, branch sign, eigenvalue and density normalization."""

    n: int
    sign: int
    eigenvalue: float
    normalization: float


def disk_eigenmode(cfg, n: int, sign: int) -> DiskEigenmode:
    lam = eigenvalue(cfg, n, sign)
    q = np.exp(-2.0 * abs(n) * cfg.xi0)
    # squared H-norm of the unnormalized density h e^{i n theta} is
    # 2 pi (1 - sign q) / |n|; the constant the antisymmetric single
    # layer sheds at infinity pairs to zero against e^{i n theta}
    norm = np.sqrt(abs(n) / (2.0 * np.pi * (1.0 - sign * q)))
    return DiskEigenmode(n=n, sign=sign, eigenvalue=lam, normalization=float(norm))


def mode_potential(cfg, n: int, sign: int, xi, theta):
    """Unnormalized harmonic mode potential, continuous across xi = +/- xi0.

    Three branches: decay e^(|n| xi) below -xi0, the symmetric/antisymmetric
    combination between the disks, decay e^(-|n| xi) above xi0.  Vanishing
    at infinity holds for the plus branch; the minus branch tends to the
    constant e^(-|n| xi0)/|n| there.
    """
    if n == 0:
        raise OutOfRange("angular index must be nonzero")
    if sign not in (PLUS, MINUS):
        raise ValueError("sign must be +1 or -1")
    xi = np.asarray(xi, dtype=float)
    theta = np.asarray(theta, dtype=float)
    xi, theta = np.broadcast_arrays(xi, theta)
    a = abs(n)
    xi0 = cfg.xi0
    s = 1.0 if sign == PLUS else -1.0
    ang = np.exp(1j * n * theta)
    below = -s / (2.0 * a) * (np.exp(a * xi0) - s * np.exp(-a * xi0)) * np.exp(a * xi)
    middle = (
        1.0 / (2.0 * a) * np.exp(-a * xi0) * (np.exp(a * xi) - s * np.exp(-a * xi))
    )
    above = 1.0 / (2.0 * a) * (np.exp(a * xi0) - s * np.exp(-a * xi0)) * np.exp(-a * xi)
    radial = np.select([xi < -xi0, xi > xi0], [below, above], default=middle)
    out = radial * ang
    return out if out.ndim else complex(out)


def eigendensity_samples(cfg, n: int, sign: int, thetas):
    """Normalized eigendensity sampled at bipolar angles, one array per disk.

    Returns (on the xi = -xi0 disk, on the xi = +xi0 disk); the two differ
    only by the factor -sign.  <psi, -S psi> = 1 under arc-length quadrature.
    """
    mode = disk_eigenmode(cfg, n, sign)
    thetas = np.asarray(thetas, dtype=float)
    h = cfg.scale_factor(cfg.xi0, thetas)  # h is even in xi
    base = mode.normalization * np.exp(1j * n * thetas) * h
    return base, -sign * base


def mode_single_layer(cfg, n: int, sign: int, xi, theta):
    """Single-layer potential of the normalized eigendensity at (xi, theta).

    Proportional to mode_potential minus its value at infinity, so it
    decays (the density has zero total charge on each disk).  The flux
    jump of the antisymmetric potential is -h e^{i n theta}, opposite to
    the density convention of eigendensity_samples, hence the sign factor.
    """
    mode = disk_eigenmode(cfg, n, sign)
    a = abs(n)
    at_infinity = 0.0 if sign == PLUS else np.exp(-a * cfg.xi0) / a
    return (
        sign
        * mode.normalization
        * (mode_potential(cfg, n, sign, xi, theta) - at_infinity)
    )


def resonance_conductivity(cfg, n: int) -> float:
    """Conductivity ratio -coth(|n| xi0) at which the plus mode of index n resonates."""
    if n == 0:
        raise OutOfRange("angular index must be nonzero")
    return float(-1.0 / np.tanh(abs(n) * cfg.xi0))


def _tail_geometric(q, m_top):
    # sum_{n > m_top} n q^n for 0 < q < 1
    return q ** (m_top + 1) * ((m_top + 1) - m_top * q) / (1.0 - q) ** 2


def m11_eps_with_tail(cfg, lam, n_max: int = 64):
    """(1,1) polarization of the pair with the truncation tail bound.

    8 pi alpha^2 sum_{n >= 1} n e^(-2 n xi0) / (lambda - e^(-2 n xi0)/2),
    truncated at n_max.  Returns (value, bound on the dropped tail).
    """
    if n_max < 1:
        raise OutOfRange("n_max must be >= 1")
    lam = complex(lam)
    q = np.exp(-2.0 * cfg.xi0)
    if lam.imag == 0.0:
        # poles accumulate at zero from the right
        n_pole = np.arange(1, max(2, int(np.ceil(14.0 / cfg.xi0))) + 1)
        poles = 0.5 * q**n_pole
        if abs(lam) < 1e-12 or np.min(np.abs(lam.real - poles)) < 1e-12:
            raise SeriesPole("lambda=%s sits on or within 1e-12 of a series pole" % lam)
    n = np.arange(1, n_max + 1)
    qn = q**n
    value = 8.0 * np.pi * cfg.alpha**2 * np.sum(n * qn / (lam - 0.5 * qn))
    # distance from lambda to the tail pole segment (0, q^(n_max+1)/2]
    top = 0.5 * q ** (n_max + 1)
    if 0.0 <= lam.real <= top:
        dist = abs(lam.imag)
    elif lam.real < 0.0:
        dist = abs(lam)
    else:
        dist = abs(lam - top)
    dist = max(dist, 1e-300)
    tail = 8.0 * np.pi * cfg.alpha**2 * _tail_geometric(q, n_max) / dist
    return complex(value), float(tail)


def m11_eps(cfg, lam, n_max: int = 64, adaptive: bool = True) -> complex:
    """Truncated (1,1) polarization series; with adaptive=True the cutoff
    doubles until the tail bound drops below 1e-12 relative."""
    value, tail = m11_eps_with_tail(cfg, lam, n_max)
    while adaptive and tail > _TAIL_REL * max(abs(value), 1e-300) and n_max < _N_CAP:
        n_max *= 2
        value, tail = m11_eps_with_tail(cfg, lam, n_max)
    return value


def x1_series(cfg, xi, theta, n_terms: int):
    """Partial sum of the harmonic expansion of the coordinate x1.

    For xi != 0,

        x1 = sign(xi) * alpha * (1 + 2 sum_{n=1}^{n_terms} e^(-n |xi|) cos n theta),

    converging to alpha sinh(xi)/(cosh(xi) - cos(theta)), the first
    component of from_bipolar.  Convergence is geometric with ratio
    e^(-|xi|), so small |xi| (nearly touching disks) needs many terms.
    """
    if n_terms < 1:
        raise OutOfRange("n_terms must be >= 1")
    xi = np.asarray(xi, dtype=float)
    theta = np.asarray(theta, dtype=float)
    if np.any(xi == 0.0):
        raise OutOfRange("the expansion requires xi != 0")
    n = np.arange(1, n_terms + 1)
    terms = np.exp(-n * np.abs(xi)[..., None]) * np.cos(n * theta[..., None])
    out = np.sign(xi) * cfg.alpha * (1.0 + 2.0 * np.sum(terms, axis=-1))
    return out if out.ndim else float(out)


def reconstruct_eps(lambda1: float, r: float) -> float:
    """Gap from the leading plus eigenvalue: xi0 = -log(2 lambda1)/2,
    eps = 2 r (cosh xi0 - 1).  Exact inverse of eigenvalue(cfg, 1, +1)."""
    if not 0.0 < lambda1 < 0.5:
        raise OutOfRange("leading eigenvalue must lie in (0, 1/2), got %g" % lambda1)
    if r <= 0:
        raise OutOfRange("disk radius must be positive")
    xi0 = -0.5 * np.log(2.0 * lambda1)
    return float(2.0 * r * (np.cosh(xi0) - 1.0))


def gap_field_with_tail(cfg, k, e0, n_max: int = 64):
    """Field x-component at the gap midpoint and the series tail bound.

    The incident field e0 along x produces, at the midpoint between the
    disks, (e0 + ep) e_x with

        ep = e0 sum_{n>=1} (1 - k)(k_n - 1)/(k - k_n) 4 n e^(-2 n xi0) (-1)^n,

    where k_n = -coth(n xi0) is the resonant conductivity of mode n.
    """
    if n_max < 1:
        raise OutOfRange("n_max must be >= 1")
    k = complex(k)
    q = np.exp(-2.0 * cfg.xi0)
    if k.imag == 0.0:
        n_pole = np.arange(1, max(2, int(np.ceil(14.0 / cfg.xi0))) + 1)
        poles = -1.0 / np.tanh(n_pole * cfg.xi0)
        if np.min(np.abs(k.real - poles)) < 1e-12 or abs(k.real + 1.0) < 1e-12:
            raise SeriesPole("k=%s sits on or within 1e-12 of a resonance" % k)
    n = np.arange(1, n_max + 1)
    k_n = -1.0 / np.tanh(n * cfg.xi0)
    terms = (1.0 - k) * (k_n - 1.0) / (k - k_n) * 4.0 * n * q**n * (-1.0) ** n
    ep = e0 * np.sum(terms)
    # tail factor bound: k_n decreases to -1, so the rational factor on the
    # tail is at most |1 - k| (|k_top| + 1) / dist(k, [k_top, -1])
    k_top = -1.0 / np.tanh((n_max + 1) * cfg.xi0)
    if k_top <= k.real <= -1.0:
        dist = abs(k.imag)
    else:
        dist = min(abs(k - k_top), abs(k + 1.0))
    dist = max(dist, 1e-300)
    c_tail = abs(1.0 - k) * (abs(k_top) + 1.0) / dist
    tail = abs(e0) * c_tail * 4.0 * _tail_geometric(q, n_max)
    return complex(ep), float(tail)


def gap_field(cfg, k, e0, n_max: int = 64, adaptive: bool = True):
    """Total field vector (e0 + ep, 0) at the gap midpoint."""
    ep, tail = gap_field_with_tail(cfg, k, e0, n_max)
    while adaptive and tail > _TAIL_REL * max(abs(ep), abs(e0), 1e-300) and n_max < _N_CAP:
        n_max *= 2
        ep, tail = gap_field_with_tail(cfg, k, e0, n_max)
    return np.array([e0 + ep, 0.0], dtype=complex)


def resonant_gap_estimate(cfg, mode_n: int, im_offset: float, e0) -> complex:
    """Near-resonance closed estimate of the gap-field perturbation.

    For k = -coth(N xi0) + i delta the dominant term is approximately
    i e0 (r / (N delta eps)) 4 e^(-2 N xi0) (-1)^N.
    """
    if mode_n < 1:
        raise OutOfRange("mode index must be >= 1")
    if im_offset == 0.0:
        raise SeriesPole("zero imaginary offset sits exactly on the resonance")
    n = mode_n
    return complex(
        1j * e0 * (cfg.r / (n * im_offset * cfg.eps))
        * 4.0 * np.exp(-2.0 * n * cfg.xi0) * (-1.0) ** n
    )
