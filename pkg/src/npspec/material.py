"""Permittivity models and the map from wavelength to spectral parameter.

The spectral parameter of a conductivity ratio sigma is

    lambda = (sigma + 1) / (2 (sigma - 1)),        sigma = (2 lambda + 1) / (2 lambda - 1),

real sigma in (-inf, 0) sweeping lambda across (-1/2, 1/2).  A lossy metal
in a transparent background gives sigma(omega) = eps_metal(omega) / eps_bg
with the free-electron form eps_metal = 1 - wp^2 / (w^2 + i w / tau), so the
small-|lambda| window is crossed where eps_metal passes -eps_bg.
"""

from dataclasses import dataclass

import numpy as np

from .errors import NoContrast, OutOfRange

# speed of light in nm per second, wavelengths are vacuum nm
C_NM_PER_S = 2.99792458e17


def lambda_from_sigma(sigma):
    """Spectral parameter of a conductivity ratio."""
    sigma = complex(sigma)
    if abs(sigma - 1.0) < 1e-14:
        raise NoContrast("sigma = 1 carries no contrast")
    return (sigma + 1.0) / (2.0 * (sigma - 1.0))


def sigma_from_lambda(lam):
    """Conductivity ratio of a spectral parameter; inverse of lambda_from_sigma."""
    lam = complex(lam)
    if abs(2.0 * lam - 1.0) < 1e-14:
        raise OutOfRange("lambda = 1/2 corresponds to infinite conductivity ratio")
    return (2.0 * lam + 1.0) / (2.0 * lam - 1.0)


@dataclass(frozen=True)
class DrudeModel:
    """Free-electron metal permittivity over a wavelength window.

    omega_p and inv_tau are rad/s; eps_bg is the (real) background
    permittivity dividing the metal value; wl_min..wl_max nm is the window
    the model is considered valid on.
    """

    omega_p: float
    inv_tau: float
    eps_bg: float = 1.0
    wl_min: float = 450.0
    wl_max: float = 750.0

    def __post_init__(self):
        if self.omega_p <= 0 or self.inv_tau < 0:
            raise ValueError("need omega_p > 0 and inv_tau >= 0")
        if self.eps_bg <= 0:
            raise ValueError("background permittivity must be positive")
        if not 0 < self.wl_min < self.wl_max:
            raise ValueError("need 0 < wl_min < wl_max")

    @classmethod
    def gold_like(cls):
        """Defaults calibrated so Re lambda sweeps the small-eigenvalue window
        across the visible range; indicative only, not fitted to data."""
        return cls(omega_p=4.45e15, inv_tau=1.0e14)

    def _check_window(self, wl):
        wl = np.asarray(wl, dtype=float)
        if np.any(wl < self.wl_min) or np.any(wl > self.wl_max):
            raise OutOfRange(
                "wavelength outside the model window [%g, %g] nm" % (self.wl_min, self.wl_max)
            )
        return wl

    def sigma_of_wavelength(self, wl):
        """Complex conductivity ratio eps_metal / eps_bg at vacuum wavelength nm."""
        wl = self._check_window(wl)
        omega = 2.0 * np.pi * C_NM_PER_S / wl
        eps_metal = 1.0 - self.omega_p**2 / (omega**2 + 1j * omega * self.inv_tau)
        out = eps_metal / self.eps_bg
        return out if out.ndim else complex(out)

    def lambda_of_wavelength(self, wl):
        """Spectral parameter trace over the window."""
        sigma = np.asarray(self.sigma_of_wavelength(wl))
        if np.any(np.abs(sigma - 1.0) < 1e-14):
            raise NoContrast("sigma = 1 inside the sweep")
        out = (sigma + 1.0) / (2.0 * (sigma - 1.0))
        return out if out.ndim else complex(out)


@dataclass(frozen=True)
class SyntheticContrast:
    """Linear spectral-parameter sweep for synthetic scans.

    Re lambda moves linearly from re_start at wl_min to re_stop at wl_max
    with a constant imaginary part; the analogue of a lossy sweep with the
    loss pinned, which is what reconstruction accuracy statements assume.
    """

    wl_min: float
    wl_max: float
    re_start: float
    re_stop: float
    im: float = 1e-3

    def __post_init__(self):
        if not 0 < self.wl_min < self.wl_max:
            raise ValueError("need 0 < wl_min < wl_max")
        if self.re_start == self.re_stop:
            raise ValueError("sweep must move")

    def lambda_of_wavelength(self, wl):
        wl = np.asarray(wl, dtype=float)
        if np.any(wl < self.wl_min) or np.any(wl > self.wl_max):
            raise OutOfRange(
                "wavelength outside the sweep window [%g, %g] nm" % (self.wl_min, self.wl_max)
            )
        frac = (wl - self.wl_min) / (self.wl_max - self.wl_min)
        out = self.re_start + (self.re_stop - self.re_start) * frac + 1j * self.im
        return out if out.ndim else complex(out)


def sigma_of_wavelength(model, wl):
    """Module-level convenience: conductivity ratio of a Drude model."""
    return model.sigma_of_wavelength(wl)


def lambda_of_wavelength(model, wl):
    """Spectral parameter of any model exposing lambda_of_wavelength."""
    return model.lambda_of_wavelength(wl)


def parse_material_config(path) -> DrudeModel:
    """Read a plain key = value file with omega_p, inv_tau, eps_bg, wl_min, wl_max."""
    values = {}
    with open(path) as fh:
        for raw in fh:
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ValueError("malformed config line %r" % raw.rstrip("\n"))
            key, val = (part.strip() for part in line.split("=", 1))
            values[key] = float(val)
    known = {"omega_p", "inv_tau", "eps_bg", "wl_min", "wl_max"}
    unknown = set(values) - known
    if unknown:
        raise ValueError("unknown config keys: %s" % ", ".join(sorted(unknown)))
    if "omega_p" not in values or "inv_tau" not in values:
        raise ValueError("config must set omega_p and inv_tau")
    return DrudeModel(**values)
