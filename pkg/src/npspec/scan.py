"""Forward resonance scans over wavelength and inversion back to shape or gap.

A scan sweeps a material model across a wavelength grid, maps each
wavelength to the complex spectral parameter lambda, and records
polarization traces.  Peaks of the trace magnitudes sit where Re lambda
crosses an eigenvalue of the target, so peak positions hand back the
eigenvalues, peak heights the overall size, and the closed-form pole
locations invert to the shape parameters (m, delta) or the disk gap eps.
"""

import csv
from dataclasses import dataclass, field

import numpy as np
import scipy.signal

from . import gpt as gpt_mod
from . import twodisks
from .errors import IllConditioned, Inconsistent, NoPeaks, OutOfRange
from .geometry import AlgebraicDomain
from .nystrom import discretize_np
from .twodisks import TwoDiskConfig

M11 = "m11"
M22CC = "m22cc"


@dataclass(frozen=True)
class ResonanceScan:
    """Wavelength grid with the lambda trace and polarization magnitudes.

    m22cc may be None (two-disk targets).  Loaded CSV scans carry the trace
    magnitudes only; detection works on magnitudes either way.
    """

    wavelengths: np.ndarray
    lambdas: np.ndarray
    m11: np.ndarray
    m22cc: np.ndarray = None

    def __post_init__(self):
        n = len(self.wavelengths)
        if n < 16:
            raise ValueError("scan needs at least 16 grid points, got %d" % n)
        if np.any(np.diff(self.wavelengths) <= 0):
            raise ValueError("wavelength grid must be strictly increasing")
        if len(self.lambdas) != n or len(self.m11) != n:
            raise ValueError("trace length mismatch")
        if self.m22cc is not None and len(self.m22cc) != n:
            raise ValueError("trace length mismatch")

    def trace(self, label):
        if label == M11:
            return self.m11
        if label == M22CC:
            if self.m22cc is None:
                raise ValueError("scan carries no %s trace" % M22CC)
            return self.m22cc
        raise ValueError("unknown trace %r" % label)

    def write_csv(self, stream):
        stream.write("wavelength_nm,re_lambda,im_lambda,abs_m11,abs_m22cc\n")
        for i in range(len(self.wavelengths)):
            m22 = np.nan if self.m22cc is None else abs(self.m22cc[i])
            stream.write(
                "%.17g,%.17g,%.17g,%.17g,%.17g\n"
                % (
                    self.wavelengths[i],
                    self.lambdas[i].real,
                    self.lambdas[i].imag,
                    abs(self.m11[i]),
                    m22,
                )
            )

    @classmethod
    def read_csv(cls, path):
        with open(path) as fh:
            rows = list(csv.DictReader(fh))
        if not rows:
            raise ValueError("empty scan file %s" % path)
        wl = np.array([float(r["wavelength_nm"]) for r in rows])
        lam = np.array(
            [float(r["re_lambda"]) + 1j * float(r["im_lambda"]) for r in rows]
        )
        m11 = np.array([float(r["abs_m11"]) for r in rows])
        m22 = np.array([float(r["abs_m22cc"]) for r in rows])
        return cls(
            wavelengths=wl,
            lambdas=lam,
            m11=m11,
            m22cc=None if np.all(np.isnan(m22)) else m22,
        )


def forward_scan(target, model, wavelengths, oracle: bool = False, n_nodes: int = 256):
    """Polarization traces of a target over a wavelength grid.

    target is an AlgebraicDomain or TwoDiskConfig; model maps wavelength to
    complex lambda.  The default path uses the closed-form pole

    approximations (exact for the disk pair series); oracle=True solves the
    discretized resolvent per wavelength instead.
    """
    wavelengths = np.asarray(wavelengths, dtype=float)
    lams = np.asarray(model.lambda_of_wavelength(wavelengths))
    if isinstance(target, AlgebraicDomain):
        if oracle:
            op = discretize_np(_domain_curves(target, n_nodes))
            m11 = np.array([gpt_mod.gpt_direct(op, l, 1, 1, "cc") for l in lams])
            m22 = (
                np.array([gpt_mod.gpt_direct(op, l, 2, 2, "cc") for l in lams])
                if target.m >= 2
                else None
            )
        else:
            m11 = np.array([gpt_mod.m11_asymptotic(target, l, allow_even=True) for l in lams])
            m22 = (
                np.array([gpt_mod.m22cc_asymptotic(target, l, allow_even=True) for l in lams])
                if target.m >= 2
                else None
            )
    elif isinstance(target, TwoDiskConfig):
        if oracle:
            op = discretize_np(target.curves(n_nodes))
            m11 = np.array([gpt_mod.gpt_direct(op, l, 1, 1, "cc") for l in lams])
        else:
            m11 = np.array([twodisks.m11_eps(target, l) for l in lams])
        m22 = None
    else:
        raise TypeError("target must be AlgebraicDomain or TwoDiskConfig")
    return ResonanceScan(wavelengths=wavelengths, lambdas=lams, m11=m11, m22cc=m22)


def _domain_curves(dom, n_nodes):
    from .geometry import discretize

    return discretize(dom, n_nodes)


@dataclass(frozen=True)
class Peak:
    """One refined local maximum of a trace magnitude."""

    trace: str
    wavelength: float
    lambda_at_peak: complex
    height: float


@dataclass(frozen=True)
class PeakSet:
    """Peaks sorted by wavelength."""

    peaks: tuple

    def __iter__(self):
        return iter(self.peaks)

    def __len__(self):
        return len(self.peaks)

    def for_trace(self, label):
        return [p for p in self.peaks if p.trace == label]


def _parabolic_refine(idx, xs, ys):
    # three-point parabola through the peak sample and neighbors; the vertex
    # offset is in index units, mapped through the local grid spacing
    y0, y1, y2 = ys[idx - 1], ys[idx], ys[idx + 1]
    denom = y0 - 2.0 * y1 + y2
    if denom == 0.0:
        return xs[idx], y1
    d = 0.5 * (y0 - y2) / denom
    d = float(np.clip(d, -0.5, 0.5))
    x_ref = xs[idx] + d * 0.5 * (xs[idx + 1] - xs[idx - 1])
    y_ref = y1 - 0.25 * (y0 - y2) * d
    return x_ref, y_ref


def detect_peaks(scan, prominence=None) -> PeakSet:
    """Find strict local maxima of every trace magnitude above a prominence.

    prominence defaults to 5 percent of the magnitude range per trace.
    Peak wavelength and height are refined with the three-point parabola;
    lambda at the peak interpolates the scan's lambda trace linearly.
    Raises NoPeaks if nothing qualifies on any trace.
    """
    labels = [M11] + ([M22CC] if scan.m22cc is not None else [])
    found = []
    for label in labels:
        mags = np.abs(scan.trace(label))
        prom = prominence
        if prom is None:
            prom = 0.05 * float(mags.max() - mags.min())
        idx, _ = scipy.signal.find_peaks(mags, prominence=prom)
        for i in idx:
            wl_ref, h_ref = _parabolic_refine(i, scan.wavelengths, mags)
            lam_re = np.interp(wl_ref, scan.wavelengths, scan.lambdas.real)
            lam_im = np.interp(wl_ref, scan.wavelengths, scan.lambdas.imag)
            found.append(
                Peak(
                    trace=label,
                    wavelength=float(wl_ref),
                    lambda_at_peak=complex(lam_re, lam_im),
                    height=float(h_ref),
                )
            )
    if not found:
        raise NoPeaks("no local maximum above prominence on any trace")
    found.sort(key=lambda p: p.wavelength)
    return PeakSet(peaks=tuple(found))


@dataclass(frozen=True)
class ShapeClassification:
    """Recovered (m, delta) with the rounding residual of the m estimate."""

    m: int
    delta: float
    m_real: float
    residual: float


def classify_domain(lambda_plus: float, lambda_plus_prime: float) -> ShapeClassification:
    """Invert the two positive pole locations to the shape pair (m, delta).

    lambda_plus is the (1,1) pole (delta/2) sqrt(m), lambda_plus_prime the
    (2,2) pole (delta/2) sqrt(2 (m-1)); then

        m_real = lambda_plus^2 / (lambda_plus^2 - lambda_plus_prime^2 / 2),
        delta  = 2 sqrt(lambda_plus^2 - lambda_plus_prime^2 / 2).

    m_real farther than 0.25 from an integer, or an impossible pair, raises
    Inconsistent.
    """
    if lambda_plus <= 0:
        raise Inconsistent("need a positive (1,1) pole, got %g" % lambda_plus)
    disc = lambda_plus**2 - 0.5 * lambda_plus_prime**2
    if disc <= 0:
        raise Inconsistent(
            "pole pair (%g, %g) has no shape solution" % (lambda_plus, lambda_plus_prime)
        )
    m_real = lambda_plus**2 / disc
    m = int(round(m_real))
    residual = abs(m_real - m)
    if residual > 0.25:
        raise Inconsistent("order estimate %.4f too far from an integer" % m_real)
    if m < 1:
        raise Inconsistent("order estimate %.4f below 1" % m_real)
    delta = 2.0 * np.sqrt(disc)
    return ShapeClassification(m=m, delta=float(delta), m_real=float(m_real), residual=residual)


def size_from_peak(peak_height, im_lambda_at_peak, lambda_plus, lambda_minus) -> float:
    """Size parameter rho0 from the (1,1) peak height.

    At the positive crossing the model magnitude is
    (pi/2) e^(2 rho0) |1/(i im) + 1/(gap + i im)| with gap the pole
    separation; equal poles collapse to the single-pole magnitude
    pi e^(2 rho0) / |im|.  A pole separation below 3 |im| (but not zero)
    blends the peaks and raises IllConditioned.
    """
    im = abs(float(im_lambda_at_peak))
    if im == 0.0:
        raise IllConditioned("zero imaginary part leaves the peak height unbounded")
    if peak_height <= 0:
        raise ValueError("peak height must be positive")
    gap = float(lambda_plus) - float(lambda_minus)
    if gap < 0:
        raise ValueError("pole order reversed: lambda_plus < lambda_minus")
    if 0.0 < gap < 3.0 * im and gap > 1e-3 * im:
        raise IllConditioned(
            "pole separation %.3g below 3 x Im lambda %.3g; heights blend" % (gap, im)
        )
    model = 0.5 * np.pi * abs(1.0 / (1j * im) + 1.0 / (gap + 1j * im))
    return float(0.5 * np.log(peak_height / model))


@dataclass(frozen=True)
class ShapeReconstruction:
    """Full shape readout from one scan."""

    m: int
    delta: float
    rho0: float
    m_real: float
    residual: float
    peaks: PeakSet


def reconstruct_shape_from_scan(scan, prominence=None) -> ShapeReconstruction:
    """Recover (m, delta, rho0) from the positive-side peaks of both traces."""
    peaks = detect_peaks(scan, prominence)
    m11_pos = [p for p in peaks.for_trace(M11) if p.lambda_at_peak.real > 0]
    m22_pos = [p for p in peaks.for_trace(M22CC) if p.lambda_at_peak.real > 0]
    if not m11_pos or not m22_pos:
        raise NoPeaks("need positive-side peaks on both traces to classify")
    p11 = max(m11_pos, key=lambda p: p.height)
    p22 = max(m22_pos, key=lambda p: p.height)
    cls = classify_domain(p11.lambda_at_peak.real, p22.lambda_at_peak.real)
    rho0 = size_from_peak(
        p11.height,
        p11.lambda_at_peak.imag,
        p11.lambda_at_peak.real,
        -p11.lambda_at_peak.real,
    )
    return ShapeReconstruction(
        m=cls.m, delta=cls.delta, rho0=rho0, m_real=cls.m_real, residual=cls.residual,
        peaks=peaks,
    )


def reconstruct_gap_from_scan(scan, r: float) -> float:
    """Gap eps from the dominant positive (1,1) peak of a disk-pair scan."""
    peaks = detect_peaks(scan)
    pos = [p for p in peaks.for_trace(M11) if p.lambda_at_peak.real > 0]
    if not pos:
        raise NoPeaks("no positive-side peak to read the gap from")
    lead = max(pos, key=lambda p: p.height)
    lam1 = lead.lambda_at_peak.real
    if not 0.0 < lam1 < 0.5:
        raise OutOfRange("dominant peak at %g outside (0, 1/2)" % lam1)
    return twodisks.reconstruct_eps(lam1, r)
