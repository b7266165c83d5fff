"""End-to-end checks behind the ``validate`` CLI subcommand.

Each check compares a closed-form claim of the library against an
independent computation (dense quadrature spectra, exact series, synthetic
scans) at a fixed tolerance and returns a CheckResult record.  The checks
are deliberately end to end: a failure here means a user-visible guarantee
is broken, not an internal detail.  The acceptance test suite asserts on
the same records, so ``npspec validate`` and pytest cannot drift apart.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

import numpy as np

from .analytic import asymptotic_eigenpairs
from .geometry import AlgebraicDomain, discretize
from .gpt import gpt_direct, gpt_spectral_sum, harmonic_moment
from .material import SyntheticContrast
from .nystrom import discretize_np, discretize_single_layer, numeric_spectrum
from .scan import forward_scan, reconstruct_gap_from_scan, reconstruct_shape_from_scan
from .twodisks import (
    PLUS,
    TwoDiskConfig,
    eigenvalue,
    gap_field,
    m11_eps,
    reconstruct_eps,
    resonance_conductivity,
)

# the (m, delta) pairs used throughout the recovery benchmarks; delta sits
# near the middle of the injectivity range 0 < delta < 1/m for each m
REFERENCE_SHAPES = (
    (3, 0.066667),
    (4, 0.05),
    (5, 0.03333),
    (6, 0.02381),
    (7, 0.021978),
)


@dataclass
class CheckResult:
    """Outcome of one validation check."""

    name: str
    passed: bool
    details: str
    elapsed: float


def _spectrum_at(dom, n_nodes):
    cur = discretize(dom, n_nodes)
    k_op = discretize_np(cur)
    s_op = discretize_single_layer(cur)
    return k_op, s_op, numeric_spectrum(k_op, s_op)


def _worst_match(dom, n_nodes):
    """Largest gap between an order-delta eigenvalue and the quadrature
    spectrum, absolute and relative."""
    _, _, dec = _spectrum_at(dom, n_nodes)
    worst_abs = 0.0
    worst_rel = 0.0
    for pair in asymptotic_eigenpairs(dom):
        gap = float(np.min(np.abs(dec.eigenvalues - pair.eigenvalue)))
        worst_abs = max(worst_abs, gap)
        worst_rel = max(worst_rel, gap / abs(pair.eigenvalue))
    return worst_abs, worst_rel


def check_spectrum_match() -> CheckResult:
    """Order-delta eigenvalues vs dense quadrature for the reference shapes.

    Every closed-form eigenvalue must have a quadrature eigenvalue within
    max(5 delta^2, 1e-4) at 512 nodes.
    """
    t0 = time.perf_counter()
    rows = []
    ok = True
    for m, delta in REFERENCE_SHAPES:
        dom = AlgebraicDomain(0.0, m, delta)
        tol = max(5.0 * delta**2, 1e-4)
        worst, _ = _worst_match(dom, 512)
        ok = ok and worst <= tol
        rows.append("m=%d %.2e<=%.2e" % (m, worst, tol))
    return CheckResult("spectrum-match", ok, " ".join(rows), time.perf_counter() - t0)


def check_convergence_rate() -> CheckResult:
    """Halving delta shrinks the relative spectrum mismatch ~4x (m=3).

    The order-delta formulas miss at order delta^2, so the relative error
    drops by a factor in [3, 5] per halving.
    """
    t0 = time.perf_counter()
    errs = []
    for delta in (0.08, 0.04, 0.02):
        _, rel = _worst_match(AlgebraicDomain(0.0, 3, delta), 512)
        errs.append(rel)
    ratios = [errs[0] / errs[1], errs[1] / errs[2]]
    ok = all(3.0 <= r <= 5.0 for r in ratios)
    details = "errors %s ratios %.2f %.2f" % (
        " ".join("%.2e" % e for e in errs),
        ratios[0],
        ratios[1],
    )
    return CheckResult("convergence-rate", ok, details, time.perf_counter() - t0)


def check_disk_pair_spectrum() -> CheckResult:
    """Quadrature spectrum of two disks vs the exact bipolar eigenvalues.

    Gaps eps in {2, 1.5, 1.2} at unit radius; mode orders 1..3 on both
    branches must match within 1e-6 at 256 nodes per circle.
    """
    t0 = time.perf_counter()
    rows = []
    ok = True
    for eps in (2.0, 1.5, 1.2):
        cfg = TwoDiskConfig(1.0, eps)
        curves = cfg.curves(256)
        dec = numeric_spectrum(discretize_np(curves), discretize_single_layer(curves))
        worst = 0.0
        for n in (1, 2, 3):
            for sign in (PLUS, -1):
                lam = eigenvalue(cfg, n, sign)
                worst = max(worst, float(np.min(np.abs(dec.eigenvalues - lam))))
        ok = ok and worst <= 1e-6
        rows.append("eps=%g %.2e" % (eps, worst))
    return CheckResult(
        "disk-pair-spectrum", ok, " ".join(rows) + " tol 1e-6", time.perf_counter() - t0
    )


def check_polarization_identities() -> CheckResult:
    """Resolvent, spectral-sum, and series routes to the same moments.

    Four identities: direct resolvent vs spectral sum on randomized shapes
    and complex contrasts (rel 1e-8); disk first moment vs pi e^{2 rho0} /
    lambda (rel 1e-10); disk-pair series vs block spectral sum (rel 1e-8);
    far-separated pair vs twice the single-disk moment (rel 1e-2).
    """
    t0 = time.perf_counter()
    rng = np.random.default_rng(20240817)
    parts = []

    worst = 0.0
    for _ in range(20):
        m = int(rng.integers(1, 8))
        dom = AlgebraicDomain(
            float(rng.uniform(-0.3, 0.5)),
            m,
            float(rng.uniform(0.1, 0.8)) / m,
        )
        lam = complex(
            rng.uniform(-0.45, 0.45),
            float(rng.choice([-1.0, 1.0])) * rng.uniform(1e-3, 0.2),
        )
        k_op, s_op, dec = _spectrum_at(dom, 512)
        h = harmonic_moment(k_op.points, 1, "c")
        spectral = gpt_spectral_sum(dec, s_op, lam, h)
        direct = gpt_direct(k_op, lam, 1, 1, "cc")
        worst = max(worst, abs(spectral - direct) / abs(direct))
    ok_sum = worst <= 1e-8
    parts.append("sum %.1e" % worst)

    worst = 0.0
    for rho0 in (0.0, 0.4):
        disk = AlgebraicDomain(rho0, 1, 0.0)
        k_op = discretize_np(discretize(disk, 256))
        for lam in (0.3, -0.2, 0.1 + 0.05j):
            exact = np.pi * np.exp(2.0 * rho0) / lam
            got = gpt_direct(k_op, lam, 1, 1, "cc")
            worst = max(worst, abs(got - exact) / abs(exact))
    ok_disk = worst <= 1e-10
    parts.append("disk %.1e" % worst)

    cfg = TwoDiskConfig(1.0, 2.0)
    curves = cfg.curves(256)
    k_op = discretize_np(curves)
    s_op = discretize_single_layer(curves)
    dec = numeric_spectrum(k_op, s_op)
    h = harmonic_moment(k_op.points, 1, "c")
    worst = 0.0
    for lam in (0.05 + 0.01j, -0.2 + 1e-3j):
        series = m11_eps(cfg, lam)
        block = gpt_spectral_sum(dec, s_op, lam, h)
        worst = max(worst, abs(series - block) / abs(series))
    ok_pair = worst <= 1e-8
    parts.append("pair %.1e" % worst)

    far = TwoDiskConfig(1.0, 100.0)
    lam = 0.25
    rel = abs(m11_eps(far, lam) - 2.0 * np.pi / lam) / (2.0 * np.pi / lam)
    ok_far = rel <= 1e-2
    parts.append("far %.1e" % rel)

    ok = ok_sum and ok_disk and ok_pair and ok_far
    return CheckResult(
        "polarization-identities", ok, " ".join(parts), time.perf_counter() - t0
    )


def check_shape_recovery() -> CheckResult:
    """Synthetic lossy scans give back (m, delta, rho0) for the reference shapes.

    m must match exactly, delta within 2 percent relative, rho0 within 0.02
    absolute, from a linear sweep with imaginary part 1e-3.
    """
    t0 = time.perf_counter()
    model = SyntheticContrast(450.0, 750.0, -0.005, 0.13, im=1e-3)
    wl = np.linspace(450.0, 750.0, 4001)
    rows = []
    ok = True
    for m, delta in REFERENCE_SHAPES:
        dom = AlgebraicDomain(0.0, m, delta)
        rec = reconstruct_shape_from_scan(forward_scan(dom, model, wl))
        d_rel = abs(rec.delta - delta) / delta
        r_abs = abs(rec.rho0)
        good = rec.m == m and d_rel <= 0.02 and r_abs <= 0.02
        ok = ok and good
        rows.append("m=%d->%d d%.1e r%.1e" % (m, rec.m, d_rel, r_abs))
    return CheckResult("shape-recovery", ok, " ".join(rows), time.perf_counter() - t0)


def check_gap_recovery() -> CheckResult:
    """Disk-pair gap comes back from a scan and from a noiseless eigenvalue.

    Scan route within 0.1 percent for eps in {1.2, 1.5, 2}; the closed-form
    inversion of an exact leading eigenvalue within 1e-12.
    """
    t0 = time.perf_counter()
    model = SyntheticContrast(450.0, 750.0, 0.005, 0.09, im=1e-3)
    wl = np.linspace(450.0, 750.0, 4001)
    rows = []
    ok = True
    for eps in (1.2, 1.5, 2.0):
        cfg = TwoDiskConfig(1.0, eps)
        got = reconstruct_gap_from_scan(forward_scan(cfg, model, wl), 1.0)
        rel_scan = abs(got - eps) / eps
        rel_exact = abs(reconstruct_eps(eigenvalue(cfg, 1, PLUS), 1.0) - eps) / eps
        good = rel_scan <= 1e-3 and rel_exact <= 1e-12
        ok = ok and good
        rows.append("eps=%g scan %.1e exact %.1e" % (eps, rel_scan, rel_exact))
    return CheckResult("gap-recovery", ok, " ".join(rows), time.perf_counter() - t0)


def check_field_blowup() -> CheckResult:
    """Resonant gap-field enhancement scales as predicted.

    Halving the loss offset doubles the enhancement (ratio in [1.9, 2.1]);
    halving the gap at fixed loss tracks 2 exp(-2 (xi0' - xi0)) within 15
    percent across eps in [1e-3, 1e-2].
    """
    t0 = time.perf_counter()
    cfg = TwoDiskConfig(1.0, 0.01)
    k1 = resonance_conductivity(cfg, 1)
    ep = [abs(gap_field(cfg, k1 + 1j * d, 1.0)[0] - 1.0) for d in (1e-3, 5e-4)]
    loss_ratio = ep[1] / ep[0]
    ok_loss = 1.9 <= loss_ratio <= 2.1

    worst = 0.0
    for eps in (0.01, 0.002):
        vals = {}
        for e in (eps, eps / 2.0):
            c = TwoDiskConfig(1.0, e)
            k = resonance_conductivity(c, 1) + 0.01j
            vals[e] = abs(gap_field(c, k, 1.0)[0] - 1.0)
        predicted = 2.0 * np.exp(
            -2.0 * (TwoDiskConfig(1.0, eps / 2.0).xi0 - TwoDiskConfig(1.0, eps).xi0)
        )
        worst = max(worst, abs(vals[eps / 2.0] / vals[eps] / predicted - 1.0))
    ok_gap = worst <= 0.15

    details = "loss ratio %.3f, gap scaling off by %.1e" % (loss_ratio, worst)
    return CheckResult(
        "field-blowup", ok_loss and ok_gap, details, time.perf_counter() - t0
    )


def check_symmetry_zeros() -> CheckResult:
    """Rotational symmetry kills the mixed polarization entries.

    For odd-m shapes the (1,2) and (2,1) blocks and the cs/sc entries of
    the (2,2) block vanish; the quadrature values must stay below 1e-8.
    """
    t0 = time.perf_counter()
    worst = 0.0
    for rho0, m, delta in ((0.0, 3, 0.066667), (0.2, 5, 0.0333)):
        k_op = discretize_np(discretize(AlgebraicDomain(rho0, m, delta), 256))
        for order_m, order_n in ((1, 2), (2, 1)):
            for kind in ("cc", "cs", "sc", "ss"):
                worst = max(worst, abs(gpt_direct(k_op, 0.3, order_m, order_n, kind)))
        for kind in ("cs", "sc"):
            worst = max(worst, abs(gpt_direct(k_op, 0.3, 2, 2, kind)))
    ok = worst <= 1e-8
    return CheckResult(
        "symmetry-zeros", ok, "largest entry %.1e tol 1e-8" % worst,
        time.perf_counter() - t0,
    )


ALL_CHECKS = (
    check_spectrum_match,
    check_convergence_rate,
    check_disk_pair_spectrum,
    check_polarization_identities,
    check_shape_recovery,
    check_gap_recovery,
    check_field_blowup,
    check_symmetry_zeros,
)

CHECK_NAMES = tuple(fn.__name__.replace("check_", "").replace("_", "-") for fn in ALL_CHECKS)


def run_all(only=None):
    """Run the validation checks and return their CheckResult records.

    only, if given, is an iterable of check names (see CHECK_NAMES)
    restricting which checks run, in suite order.
    """
    if only is not None:
        wanted = list(only)
        unknown = [n for n in wanted if n not in CHECK_NAMES]
        if unknown:
            raise ValueError(
                "unknown check name(s) %s; known: %s"
                % (", ".join(unknown), ", ".join(CHECK_NAMES))
            )
        selected = [fn for fn, name in zip(ALL_CHECKS, CHECK_NAMES) if name in wanted]
    else:
        selected = list(ALL_CHECKS)
    return [fn() for fn in selected]


def format_report(results) -> str:
    """Fixed-width pass/fail table over the given CheckResult records."""
    width = max(len(r.name) for r in results)
    lines = []
    for r in results:
        lines.append(
            "%-*s  %s  %6.2fs  %s"
            % (width, r.name, "PASS" if r.passed else "FAIL", r.elapsed, r.details)
        )
    n_bad = sum(not r.passed for r in results)
    lines.append(
        "%d/%d checks passed" % (len(results) - n_bad, len(results))
        + ("" if n_bad == 0 else " (%d FAILED)" % n_bad)
    )
    return "\n".join(lines)
