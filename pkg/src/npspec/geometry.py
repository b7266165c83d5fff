"""Boundary geometry for the conformal family of algebraic domains and for circles.

A domain in the family is the image of the circle |zeta| = e^rho0 under

    zeta  ->  zeta + a / zeta**m,      a = e^((m+1) rho0) * delta,

so the boundary is  theta -> e^rho0 (e^(i theta) + delta e^(-i m theta)).
The integer m and the coefficient delta set the shape (2k petals for odd
m = 2k - 1), e^rho0 sets the overall size.  |delta| < 1/m keeps the
parametrization injective: the boundary speed is bounded below by
e^rho0 (1 - m |delta|) > 0.
"""

from dataclasses import dataclass

import numpy as np

from .errors import DegenerateParametrization

# Boundary speed below this is treated as a collapsed parametrization.
JACOBIAN_FLOOR = 1e-12


@dataclass(frozen=True)
class AlgebraicDomain:
    """Conformal-image domain with parameters (rho0, m, delta)."""

    rho0: float
    m: int
    delta: float

    def __post_init__(self):
        if int(self.m) != self.m or self.m < 1:
            raise ValueError("m must be a positive integer, got %r" % (self.m,))
        object.__setattr__(self, "m", int(self.m))
        if not abs(self.delta) < 1.0 / self.m:
            raise ValueError(
                "|delta| must be < 1/m for an injective boundary "
                "(m=%d allows |delta| < %.6g, got %.6g)" % (self.m, 1.0 / self.m, self.delta)
            )

    @property
    def coefficient(self) -> float:
        """The raw map coefficient a = e^((m+1) rho0) delta."""
        return np.exp((self.m + 1) * self.rho0) * self.delta

    @property
    def radius(self) -> float:
        """Size scale e^rho0 (the exterior conformal radius)."""
        return float(np.exp(self.rho0))


def boundary_point(dom, theta):
    """Boundary point(s) at parameter theta.

    Parameters
    ----------
    dom : AlgebraicDomain
    theta : float or array

    Returns
    -------
    ndarray, shape (2,) for scalar theta, else theta.shape + (2,)
    """
    theta = np.asarray(theta, dtype=float)
    z = np.exp(dom.rho0) * (np.exp(1j * theta) + dom.delta * np.exp(-1j * dom.m * theta))
    return np.stack([z.real, z.imag], axis=-1)


def _speed_complex(dom, theta):
    # dz/dtheta = i * w with w = zeta - m a zeta^-m on |zeta| = e^rho0
    theta = np.asarray(theta, dtype=float)
    return np.exp(dom.rho0) * (
        np.exp(1j * theta) - dom.m * dom.delta * np.exp(-1j * dom.m * theta)
    )


def jacobian(dom, theta):
    """Boundary speed |dz/dtheta| = e^rho0 |e^(i theta) - m delta e^(-i m theta)|.

    Raises DegenerateParametrization if the speed falls below the floor,
    which signals a size scale or delta outside the usable range.
    """
    j = np.abs(_speed_complex(dom, theta))
    if np.any(j < JACOBIAN_FLOOR):
        raise DegenerateParametrization(
            "boundary speed below %.1e for domain %r" % (JACOBIAN_FLOOR, dom)
        )
    return j if j.ndim else float(j)


def normal(dom, theta):
    """Outward unit normal; equals the tangent rotated by -90 degrees."""
    w = _speed_complex(dom, theta)
    j = np.abs(w)
    if np.any(j < JACOBIAN_FLOOR):
        raise DegenerateParametrization("normal undefined where the speed collapses")
    nu = w / j
    return np.stack([nu.real, nu.imag], axis=-1)


def curvature(dom, theta):
    """Signed curvature of the boundary, positive for a counterclockwise circle.

    With w = dz/dtheta / i and v = -d2z/dtheta2 the value is
    Re(conj(w) v) / |w|^3, all evaluated from the map, no differencing.
    """
    theta = np.asarray(theta, dtype=float)
    w = _speed_complex(dom, theta)
    v = np.exp(dom.rho0) * (
        np.exp(1j * theta) + dom.m**2 * dom.delta * np.exp(-1j * dom.m * theta)
    )
    j = np.abs(w)
    return (np.conj(w) * v).real / j**3


@dataclass(frozen=True)
class BoundaryCurve:
    """Sampled closed boundary on a uniform parameter grid.

    Fields are node arrays of common length N: parameter values, points,
    speed (arc-length factor), outward unit normals, signed curvature.
    Quadrature weight at node i is jacobians[i] * 2 pi / N.
    """

    thetas: np.ndarray
    points: np.ndarray
    jacobians: np.ndarray
    normals: np.ndarray
    curvatures: np.ndarray

    def __post_init__(self):
        n = len(self.thetas)
        if n < 8 or n % 2:
            raise ValueError("need an even node count >= 8, got %d" % n)
        for name in ("points", "jacobians", "normals", "curvatures"):
            if len(getattr(self, name)) != n:
                raise ValueError("field %s length mismatch" % name)
        if np.any(self.jacobians <= 0):
            raise ValueError("jacobians must be strictly positive")

    @property
    def n(self) -> int:
        return len(self.thetas)

    @property
    def weights(self) -> np.ndarray:
        return self.jacobians * (2.0 * np.pi / self.n)

    @property
    def arc_length(self) -> float:
        return float(np.sum(self.weights))

    def write_csv(self, stream, header: bool = True):
        """Write rows theta,x,y,jacobian,nx,ny with full float precision."""
        if header:
            stream.write("theta,x,y,jacobian,nx,ny\n")
        for i in range(self.n):
            stream.write(
                "%.17g,%.17g,%.17g,%.17g,%.17g,%.17g\n"
                % (
                    self.thetas[i],
                    self.points[i, 0],
                    self.points[i, 1],
                    self.jacobians[i],
                    self.normals[i, 0],
                    self.normals[i, 1],
                )
            )


def _signed_area(points):
    # shoelace on the sampled polygon; positive means counterclockwise
    x, y = points[:, 0], points[:, 1]
    return 0.5 * float(np.sum(x * np.roll(y, -1) - np.roll(x, -1) * y))


def discretize(dom, n_nodes: int) -> BoundaryCurve:
    """Sample the boundary at n_nodes uniform parameters.

    n_nodes must be even and at least 8 (the trapezoid rule on the uniform
    grid is spectrally accurate for these analytic curves).  Orientation is
    validated by a winding check on the sampled polygon.
    """
    if n_nodes < 8 or n_nodes % 2:
        raise ValueError("n_nodes must be even and >= 8, got %d" % n_nodes)
    thetas = 2.0 * np.pi * np.arange(n_nodes) / n_nodes
    pts = boundary_point(dom, thetas)
    jac = jacobian(dom, thetas)
    nrm = normal(dom, thetas)
    kap = curvature(dom, thetas)
    if _signed_area(pts) <= 0:
        raise DegenerateParametrization("sampled boundary is not counterclockwise")
    return BoundaryCurve(thetas=thetas, points=pts, jacobians=jac, normals=nrm, curvatures=kap)


def circle(center, radius: float, n_nodes: int) -> BoundaryCurve:
    """Counterclockwise circle as a BoundaryCurve; all fields exact."""
    if radius <= 0:
        raise ValueError("radius must be positive")
    if n_nodes < 8 or n_nodes % 2:
        raise ValueError("n_nodes must be even and >= 8, got %d" % n_nodes)
    thetas = 2.0 * np.pi * np.arange(n_nodes) / n_nodes
    nrm = np.stack([np.cos(thetas), np.sin(thetas)], axis=-1)
    pts = np.asarray(center, dtype=float)[None, :] + radius * nrm
    return BoundaryCurve(
        thetas=thetas,
        points=pts,
        jacobians=np.full(n_nodes, float(radius)),
        normals=nrm,
        curvatures=np.full(n_nodes, 1.0 / radius),
    )


def area(dom) -> float:
    """Enclosed area pi (e^(2 rho0) - m a^2 e^(-2 m rho0)), exact for the family."""
    a = dom.coefficient
    return np.pi * (np.exp(2 * dom.rho0) - dom.m * a**2 * np.exp(-2 * dom.m * dom.rho0))
