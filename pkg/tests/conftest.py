"""Shared fixtures: cached discretizations so the suite stays fast."""

import numpy as np
import pytest

from npspec import (
    AlgebraicDomain,
    TwoDiskConfig,
    discretize,
    discretize_np,
    discretize_single_layer,
    numeric_spectrum,
)

_CACHE = {}


def operators_for(dom, n_nodes):
    """Discretize a domain once per session and reuse the matrices."""
    key = ("dom", dom.rho0, dom.m, dom.delta, n_nodes)
    if key not in _CACHE:
        cur = discretize(dom, n_nodes)
        k_op = discretize_np(cur)
        s_op = discretize_single_layer(cur)
        _CACHE[key] = (cur, k_op, s_op)
    return _CACHE[key]


def spectrum_for(dom, n_nodes):
    key = ("spectrum", dom.rho0, dom.m, dom.delta, n_nodes)
    if key not in _CACHE:
        cur, k_op, s_op = operators_for(dom, n_nodes)
        _CACHE[key] = numeric_spectrum(k_op, s_op)
    return _CACHE[key]


def twodisk_operators_for(cfg, n_nodes):
    key = ("pair", cfg.r, cfg.eps, n_nodes)
    if key not in _CACHE:
        curves = cfg.curves(n_nodes)
        k_op = discretize_np(curves)
        s_op = discretize_single_layer(curves)
        _CACHE[key] = (curves, k_op, s_op)
    return _CACHE[key]


@pytest.fixture(scope="session")
def shape_m3():
    """The first reference shape: m=3, delta=0.066667, unit size."""
    return AlgebraicDomain(0.0, 3, 0.066667)


@pytest.fixture(scope="session")
def disk_ops():
    """Unit-disk NP and single-layer operators at N=256."""
    dom = AlgebraicDomain(0.0, 1, 0.0)
    return operators_for(dom, 256)


@pytest.fixture(scope="session")
def pair_eps2():
    return TwoDiskConfig(1.0, 2.0)
