"""Figure rendering for the CLI report path.

Every CSV-emitting subcommand drops a PNG next to its output file unless
--no-plot is given; these helpers hold the actual matplotlib calls.  All
run headless (Agg) and close their figures so batch invocations do not
accumulate state.
"""

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np


def save_boundary_plot(curves, path):
    """Outline of one or more sampled closed curves, equal aspect."""
    fig, ax = plt.subplots(figsize=(5, 5))
    for cur in curves:
        pts = np.vstack([cur.points, cur.points[:1]])
        ax.plot(pts[:, 0], pts[:, 1], lw=1.2)
    ax.set_aspect("equal")
    ax.set_xlabel("x")
    ax.set_ylabel("y")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def save_scan_plot(scan, path):
    """Trace magnitudes of a resonance scan against wavelength."""
    fig, ax = plt.subplots(figsize=(6.5, 4))
    ax.semilogy(scan.wavelengths, np.abs(scan.m11), label="|m11|")
    if scan.m22cc is not None:
        ax.semilogy(scan.wavelengths, np.abs(scan.m22cc), label="|m22cc|")
    ax.set_xlabel("wavelength (nm)")
    ax.set_ylabel("trace magnitude")
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def save_moment_plot(re_lambda, traces, path):
    """Moment magnitudes over a real-contrast sweep; traces maps label to values."""
    fig, ax = plt.subplots(figsize=(6.5, 4))
    for name, vals in traces.items():
        ax.semilogy(re_lambda, np.abs(vals), label=name)
    ax.set_xlabel("Re lambda")
    ax.set_ylabel("|moment|")
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def save_spectrum_plot(analytic, numeric, path):
    """Eigenvalues on a line: quadrature crosses under closed-form circles."""
    fig, ax = plt.subplots(figsize=(6.5, 2.2))
    if numeric is not None:
        numeric = np.asarray(numeric)
        ax.plot(numeric, np.zeros_like(numeric), "x", ms=6, label="quadrature")
    if analytic is not None:
        analytic = np.asarray(analytic)
        ax.plot(analytic, np.zeros_like(analytic), "o", mfc="none", ms=10,
                label="closed form")
    ax.set_xlabel("eigenvalue")
    ax.set_yticks([])
    ax.legend(loc="upper right")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def save_gapfield_plot(offsets, fields, estimates, path):
    """Gap-midpoint field magnitude against loss offset, log-log, with the
    closed resonant estimate overlaid when given."""
    fig, ax = plt.subplots(figsize=(6.5, 4))
    ax.loglog(offsets, np.abs(fields), label="series")
    if estimates is not None:
        ax.loglog(offsets, np.abs(estimates), "--", label="resonant estimate")
    ax.set_xlabel("imaginary conductivity offset")
    ax.set_ylabel("|field at gap midpoint|")
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
