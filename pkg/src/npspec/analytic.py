"""Closed-form action of the Neumann-Poincare operator on the algebraic family.

Densities are trigonometric polynomials divided by the boundary speed J.
For 1 <= n <= m the operator maps J^-1 cos(n theta) into the span of
J^-1 cos(t_k theta) with t_k = (m+1) k - n, k = 1..n:

    K[J^-1 cos n.] = J^-1 sum_k delta^k (t_k / 2n) C(n,k) cos(t_k .)

and the sine version is the same with an overall sign flip.  Keeping only
the k = 1 , order-delta term reduces the operator on each parity block to
(+/- delta/2) M with M the anti-diagonal integer matrix built below, whose
spectrum is available in closed form.  The single layer acts as

    S[J^-1 cos n.] = -(1/2n) cos n. - (1/2n) sum_k delta^k C(n,k) cos(t_k .)
    S[J^-1 sin n.] = -(1/2n) sin n. + (1/2n) sum_k delta^k C(n,k) sin(t_k .)
"""

from dataclasses import dataclass
from math import comb

import numpy as np

from .errors import OutOfRange

COSINE = "cosine"
SINE = "sine"


@dataclass(frozen=True)
class FourierSeries:
    """Real trigonometric polynomial, optionally weighted by 1/J.

    coefficient layout: cos_coeffs[k] multiplies cos((k+1) theta) and
    sin_coeffs[k] multiplies sin((k+1) theta).  weight is "plain" for the
    bare polynomial or "over_jacobian" for polynomial / J(theta).
    """

    constant: float
    cos_coeffs: np.ndarray
    sin_coeffs: np.ndarray
    weight: str = "plain"

    def __post_init__(self):
        if self.weight not in ("plain", "over_jacobian"):
            raise ValueError("weight must be 'plain' or 'over_jacobian'")
        if len(self.cos_coeffs) != len(self.sin_coeffs):
            raise ValueError("cos/sin coefficient arrays must share a length")
        if len(self.cos_coeffs) < 1:
            raise ValueError("need at least one harmonic")

    @property
    def n_max(self) -> int:
        return len(self.cos_coeffs)

    def evaluate(self, thetas, jacobians=None):
        """Sample the series; jacobians are required for the over_jacobian weight."""
        thetas = np.asarray(thetas, dtype=float)
        k = np.arange(1, self.n_max + 1)
        ang = np.multiply.outer(thetas, k)
        out = self.constant + np.cos(ang) @ self.cos_coeffs + np.sin(ang) @ self.sin_coeffs
        if self.weight == "over_jacobian":
            if jacobians is None:
                raise ValueError("jacobian samples required for a 1/J weighted series")
            out = out / np.asarray(jacobians, dtype=float)
        return out


def _series_from_terms(freq_coeff_pairs, parity, n_max, weight):
    cos_c = np.zeros(n_max)
    sin_c = np.zeros(n_max)
    target = cos_c if parity == COSINE else sin_c
    for freq, coeff in freq_coeff_pairs:
        target[freq - 1] += coeff  # accumulate: distinct k can land on one frequency
    return FourierSeries(constant=0.0, cos_coeffs=cos_c, sin_coeffs=sin_c, weight=weight)


def _check_mode(dom, n, parity):
    if parity not in (COSINE, SINE):
        raise ValueError("parity must be %r or %r" % (COSINE, SINE))
    if n < 1:
        raise OutOfRange("harmonic index must be >= 1, got %d" % n)
    if n > dom.m:
        raise OutOfRange(
            "closed form covers 1 <= n <= m; n=%d, m=%d needs the quadrature route" % (n, dom.m)
        )


def np_apply_fourier(dom, n: int, parity: str) -> FourierSeries:
    """Image of J^-1 trig(n theta) under the boundary-flux operator.

    Returns a 1/J weighted series over frequencies t_k = (m+1) k - n.
    Valid for 1 <= n <= m only; higher harmonics have no closed form here.
    """
    _check_mode(dom, n, parity)
    m, delta = dom.m, dom.delta
    sign = 1.0 if parity == COSINE else -1.0
    terms = []
    for k in range(1, n + 1):
        t_k = (m + 1) * k - n
        terms.append((t_k, sign * delta**k * (t_k / (2.0 * n)) * comb(n, k)))
    n_top = (m + 1) * n - n
    return _series_from_terms(terms, parity, max(n_top, n), "over_jacobian")


def single_layer_fourier(dom, n: int, parity: str) -> FourierSeries:
    """Boundary trace of the single layer of J^-1 trig(n theta), a plain series."""
    _check_mode(dom, n, parity)
    m, delta = dom.m, dom.delta
    sign = -1.0 if parity == COSINE else 1.0
    terms = [(n, -1.0 / (2.0 * n))]
    for k in range(1, n + 1):
        t_k = (m + 1) * k - n
        terms.append((t_k, sign * delta**k * comb(n, k) / (2.0 * n)))
    n_top = (m + 1) * n - n
    return _series_from_terms(terms, parity, max(n_top, n), "plain")


def matrix_M(m: int) -> np.ndarray:
    """Anti-diagonal coupling matrix of the order-delta operator on one parity block.

    Column n holds the image of basis harmonic n: the single entry m+1-n
    in row m+1-n.  The operator restricted to the cosine block is
    +(delta/2) M, on the sine block -(delta/2) M.
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    out = np.zeros((m, m))
    for n in range(1, m + 1):
        out[m - n, n - 1] = m + 1 - n
    return out


def matrix_M_spectrum(m: int):
    """Closed-form eigenpairs of matrix_M(m).

    Odd m = 2k-1: eigenvalue k with vector e_k, and +/- sqrt(j (m+1-j)) with
    vectors sqrt(j) e_j +/- sqrt(m+1-j) e_{m+1-j}, j = 1..k-1.
    Even m = 2k: +/- sqrt(j (m+1-j)), j = 1..k, same vector pattern.
    Vectors are unit length, first nonzero entry positive; pairs are sorted
    by descending eigenvalue.
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    pairs = []
    if m % 2:
        k = (m + 1) // 2
        center = np.zeros(m)
        center[k - 1] = 1.0
        pairs.append((float(k), center))
        j_top = k - 1
    else:
        j_top = m // 2
    for j in range(1, j_top + 1):
        lam = np.sqrt(j * (m + 1 - j))
        for sgn in (+1.0, -1.0):
            v = np.zeros(m)
            v[j - 1] = np.sqrt(j)
            v[m - j] = sgn * np.sqrt(m + 1 - j)
            v /= np.linalg.norm(v)
            pairs.append((sgn * lam, v))
    pairs.sort(key=lambda p: -p[0])
    return pairs


@dataclass(frozen=True)
class AsymptoticEigenpair:
    """Order-delta eigenvalue with its trig-polynomial / J eigenfunction.

    mode_index is the block index j of the closed-form spectrum (the center
    mode of odd m carries j = (m+1)/2), mode_sign the +/- branch, parity the
    cosine/sine block.  Across parities the eigenvalues are exact negatives.
    """

    eigenvalue: float
    eigenfunction: FourierSeries
    parity: str
    mode_index: int
    mode_sign: int


def _block_index(vector):
    # recover j from the support of the closed-form eigenvector
    nz = np.nonzero(np.abs(vector) > 1e-14)[0]
    return int(nz[0]) + 1


def asymptotic_eigenpairs(dom):
    """All order-delta eigenpairs of the boundary-flux operator on both parity blocks.

    Eigenvalues are (delta/2) x spectrum(matrix_M) on the cosine block and the
    negatives on the sine block; eigenfunction coefficient vectors are the unit
    eigenvectors of matrix_M.  Sorted by descending eigenvalue, ties broken
    cosine before sine then +1 branch before -1.
    """
    out = []
    for base, vec in matrix_M_spectrum(dom.m):
        j = _block_index(vec)
        sgn = +1 if base >= 0 else -1
        for parity in (COSINE, SINE):
            lam = 0.5 * dom.delta * base * (1.0 if parity == COSINE else -1.0)
            fs = FourierSeries(
                constant=0.0,
                cos_coeffs=vec.copy() if parity == COSINE else np.zeros(dom.m),
                sin_coeffs=vec.copy() if parity == SINE else np.zeros(dom.m),
                weight="over_jacobian",
            )
            out.append(
                AsymptoticEigenpair(
                    eigenvalue=float(lam),
                    eigenfunction=fs,
                    parity=parity,
                    mode_index=j,
                    mode_sign=sgn,
                )
            )
    out.sort(key=lambda p: (-p.eigenvalue, p.parity != COSINE, -p.mode_sign))
    return out
