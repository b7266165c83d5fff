import io

import numpy as np
import numpy.testing as npt
import pytest

from npspec import (
    AlgebraicDomain,
    IllConditioned,
    Inconsistent,
    NoPeaks,
    OutOfRange,
    ResonanceScan,
    SyntheticContrast,
    TwoDiskConfig,
    classify_domain,
    detect_peaks,
    eigenvalue,
    forward_scan,
    reconstruct_gap_from_scan,
    reconstruct_shape_from_scan,
    size_from_peak,
)
from npspec.scan import M11, M22CC
from npspec.twodisks import PLUS


def _synthetic_scan(mags, n=None, m22=None):
    mags = np.asarray(mags, dtype=float)
    n = len(mags)
    wl = np.linspace(450.0, 750.0, n)
    lam = np.linspace(-0.01, 0.1, n) + 1e-3j
    return ResonanceScan(wavelengths=wl, lambdas=lam, m11=mags, m22cc=m22)


# ------------------------------------------------------------- scan object


def test_scan_validation():
    wl = np.linspace(450, 750, 32)
    lam = np.full(32, 0.1 + 1e-3j)
    ok = np.ones(32)
    with pytest.raises(ValueError, match="at least 16"):
        ResonanceScan(wl[:10], lam[:10], ok[:10])
    bad = wl.copy()
    bad[5] = bad[4]
    with pytest.raises(ValueError, match="strictly increasing"):
        ResonanceScan(bad, lam, ok)
    with pytest.raises(ValueError, match="length mismatch"):
        ResonanceScan(wl, lam[:20], ok)
    with pytest.raises(ValueError, match="length mismatch"):
        ResonanceScan(wl, lam, ok, m22cc=ok[:20])


def test_scan_trace_access():
    scan = _synthetic_scan(np.ones(32))
    npt.assert_array_equal(scan.trace(M11), scan.m11)
    with pytest.raises(ValueError, match="no m22cc"):
        scan.trace(M22CC)
    with pytest.raises(ValueError, match="unknown trace"):
        scan.trace("m33")


def test_scan_csv_round_trip(tmp_path):
    dom = AlgebraicDomain(0.1, 3, 0.066667)
    sweep = SyntheticContrast(450.0, 750.0, -0.09, 0.09)
    scan = forward_scan(dom, sweep, np.linspace(450.0, 750.0, 64))
    buf = io.StringIO()
    scan.write_csv(buf)
    text = buf.getvalue()
    assert text.splitlines()[0] == "wavelength_nm,re_lambda,im_lambda,abs_m11,abs_m22cc"

    path = tmp_path / "scan.csv"
    path.write_text(text)
    back = ResonanceScan.read_csv(path)
    npt.assert_allclose(back.wavelengths, scan.wavelengths, rtol=1e-15)
    npt.assert_allclose(back.lambdas, scan.lambdas, rtol=1e-15)
    npt.assert_allclose(np.abs(back.m11), np.abs(scan.m11), rtol=1e-15)
    npt.assert_allclose(np.abs(back.m22cc), np.abs(scan.m22cc), rtol=1e-15)


def test_scan_csv_two_disk_has_nan_column(tmp_path):
    cfg = TwoDiskConfig(1.0, 2.0)
    sweep = SyntheticContrast(450.0, 750.0, -0.01, 0.08)
    scan = forward_scan(cfg, sweep, np.linspace(450.0, 750.0, 64))
    assert scan.m22cc is None
    buf = io.StringIO()
    scan.write_csv(buf)
    assert ",nan" in buf.getvalue().splitlines()[1]
    path = tmp_path / "pair.csv"
    path.write_text(buf.getvalue())
    assert ResonanceScan.read_csv(path).m22cc is None


# ---------------------------------------------------------- peak detection


def test_detect_peaks_refines_to_subgrid_accuracy():
    n = 301
    wl = np.linspace(450.0, 750.0, n)  # 1 nm spacing
    center = 583.17
    mags = 1.0 / ((wl - center) ** 2 + 25.0)
    scan = ResonanceScan(wl, np.linspace(0, 0.1, n) + 1e-3j, mags)
    peaks = detect_peaks(scan)
    assert len(peaks) == 1
    peak = list(peaks)[0]
    assert abs(peak.wavelength - center) < 0.1  # a tenth of the grid step
    assert peak.trace == M11
    assert peak.height >= mags.max()


def test_detect_peaks_flat_trace_raises():
    with pytest.raises(NoPeaks):
        detect_peaks(_synthetic_scan(np.ones(64)))


def test_detect_peaks_prominence_filters_minor_bumps():
    wl = np.linspace(450.0, 750.0, 301)
    big = 10.0 / ((wl - 520.0) ** 2 + 16.0)
    small = 0.8 / ((wl - 680.0) ** 2 + 16.0)
    scan = ResonanceScan(wl, np.linspace(0, 0.1, 301) + 1e-3j, big + small)
    assert len(detect_peaks(scan)) == 2  # default prominence keeps both
    strict = detect_peaks(scan, prominence=0.1)
    assert len(strict) == 1
    with pytest.raises(NoPeaks):
        detect_peaks(scan, prominence=10.0)


# ----------------------------------------------------------- classification


@pytest.mark.parametrize("m", range(2, 10))
def test_classify_round_trip(m):
    delta = 1.0 / (2 * m)
    lam_plus = 0.5 * delta * np.sqrt(m)
    lam_prime = 0.5 * delta * np.sqrt(2.0 * (m - 1))
    cls = classify_domain(lam_plus, lam_prime)
    assert cls.m == m
    npt.assert_allclose(cls.delta, delta, rtol=1e-12)
    assert cls.residual < 1e-9


def test_classify_ellipse_case():
    # m = 1 makes the second-order pole collapse to zero
    cls = classify_domain(0.5 * 0.2, 0.0)
    assert cls.m == 1
    npt.assert_allclose(cls.delta, 0.2, rtol=1e-12)


def test_classify_rejects_impossible_pairs():
    with pytest.raises(Inconsistent, match="no shape solution"):
        classify_domain(0.05, 0.05 * np.sqrt(2.0) + 1e-3)
    with pytest.raises(Inconsistent, match="positive"):
        classify_domain(-0.05, 0.02)
    # lands at m_real = 2.5, too far from any integer
    lam_plus = 0.1
    lam_prime = np.sqrt(2.0 * (0.01 - 0.01 / 2.5))
    with pytest.raises(Inconsistent, match="far from an integer"):
        classify_domain(lam_plus, lam_prime)


# ------------------------------------------------------------- peak height


def test_size_from_peak_disk_exact():
    rho0, im = 0.3, 1e-3
    height = np.pi * np.exp(2 * rho0) / im
    npt.assert_allclose(size_from_peak(height, im, 0.0, 0.0), rho0, rtol=1e-12)


def test_size_from_peak_two_pole_exact():
    rho0, im, lam_plus = -0.2, 1e-3, 0.06
    gap = 2 * lam_plus
    height = 0.5 * np.pi * np.exp(2 * rho0) * abs(1.0 / (1j * im) + 1.0 / (gap + 1j * im))
    npt.assert_allclose(size_from_peak(height, im, lam_plus, -lam_plus), rho0,
                        rtol=1e-12)


def test_size_from_peak_guards():
    with pytest.raises(IllConditioned, match="blend"):
        size_from_peak(100.0, 1e-3, 1e-3, -1e-3)  # separation 2 x im
    with pytest.raises(IllConditioned, match="unbounded"):
        size_from_peak(100.0, 0.0, 0.06, -0.06)
    with pytest.raises(ValueError, match="positive"):
        size_from_peak(-1.0, 1e-3, 0.06, -0.06)
    with pytest.raises(ValueError, match="reversed"):
        size_from_peak(100.0, 1e-3, -0.06, 0.06)


# --------------------------------------------------------- forward + invert


def test_forward_scan_sees_one_pole_pair_per_trace(shape_m3):
    sweep = SyntheticContrast(450.0, 750.0, -0.09, 0.09)
    scan = forward_scan(shape_m3, sweep, np.linspace(450.0, 750.0, 2001))
    peaks = detect_peaks(scan)
    m11_peaks = peaks.for_trace(M11)
    m22_peaks = peaks.for_trace(M22CC)
    assert len(m11_peaks) == 2
    assert len(m22_peaks) == 2
    p = 0.5 * shape_m3.delta * np.sqrt(3.0)
    npt.assert_allclose(sorted(q.lambda_at_peak.real for q in m11_peaks),
                        [-p, p], atol=5e-4)
    p2 = 0.5 * shape_m3.delta * 2.0
    npt.assert_allclose(sorted(q.lambda_at_peak.real for q in m22_peaks),
                        [-p2, p2], atol=5e-4)


@pytest.mark.parametrize("m,delta,rho0", [
    (3, 0.066667, 0.0),
    (5, 0.0333, 0.0),
    (3, 0.066667, 0.5),
    (4, 0.1, -0.2),
])
def test_shape_reconstruction_round_trip(m, delta, rho0):
    dom = AlgebraicDomain(rho0, m, delta)
    sweep = SyntheticContrast(450.0, 750.0, -0.005, 0.13)
    scan = forward_scan(dom, sweep, np.linspace(450.0, 750.0, 4001))
    rec = reconstruct_shape_from_scan(scan)
    assert rec.m == m
    npt.assert_allclose(rec.delta, delta, rtol=5e-3)
    assert abs(rec.rho0 - rho0) < 2e-3
    assert rec.residual < 0.1


def test_shape_reconstruction_needs_positive_peaks(shape_m3):
    sweep = SyntheticContrast(450.0, 750.0, -0.13, -0.005)
    scan = forward_scan(shape_m3, sweep, np.linspace(450.0, 750.0, 512))
    with pytest.raises(NoPeaks):
        reconstruct_shape_from_scan(scan)


def test_oracle_scan_agrees_with_pole_formulas(shape_m3):
    wl = np.linspace(450.0, 750.0, 201)
    sweep = SyntheticContrast(450.0, 750.0, 0.01, 0.1)
    fast = forward_scan(shape_m3, sweep, wl)
    slow = forward_scan(shape_m3, sweep, wl, oracle=True, n_nodes=128)
    peak_fast = max(detect_peaks(fast).for_trace(M11), key=lambda p: p.height)
    peak_slow = max(detect_peaks(slow).for_trace(M11), key=lambda p: p.height)
    assert abs(peak_fast.lambda_at_peak.real - peak_slow.lambda_at_peak.real) < 1e-3


def test_forward_scan_rejects_unknown_target():
    sweep = SyntheticContrast(450.0, 750.0, 0.01, 0.1)
    with pytest.raises(TypeError):
        forward_scan("blob", sweep, np.linspace(450.0, 750.0, 64))


@pytest.mark.parametrize("eps", [1.2, 1.5, 2.0])
def test_gap_reconstruction_round_trip(eps):
    cfg = TwoDiskConfig(1.0, eps)
    sweep = SyntheticContrast(450.0, 750.0, 0.005, 0.09)
    scan = forward_scan(cfg, sweep, np.linspace(450.0, 750.0, 4001))
    rec = reconstruct_gap_from_scan(scan, 1.0)
    assert isinstance(rec, float)
    npt.assert_allclose(rec, eps, rtol=1e-3)


def test_gap_reconstruction_needs_positive_peak():
    cfg = TwoDiskConfig(1.0, 2.0)
    lam1 = eigenvalue(cfg, 1, PLUS)
    sweep = SyntheticContrast(450.0, 750.0, -0.2, -0.02)
    scan = forward_scan(cfg, sweep, np.linspace(450.0, 750.0, 512))
    with pytest.raises(NoPeaks):
        reconstruct_gap_from_scan(scan, 1.0)
    assert lam1 > 0  # sanity: the pole the sweep deliberately missed
