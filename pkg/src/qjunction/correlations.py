"""Quantum correlation measures of the steady state.

The stationary state is an X state in the product basis, so concurrence,
mutual information, classical correlation and discord all reduce to closed
forms in the four eigenstate populations. Entropies are in bits, with the
0 log 0 = 0 convention throughout. Each closed form ships with a
brute-force counterpart (:func:`wootters_concurrence`,
:func:`classical_correlation_grid`) computed from the density matrix
itself, kept deliberately independent of the fast path.

The measured side of the classical correlation follows the X-state
prescription: the optimum over projective measurements is taken as the
better of the z-axis and equatorial measurements. The state is symmetric
under qubit exchange, so which qubit is measured does not matter. That
two-branch prescription is exact only on a subclass of X states; the grid
oracle exists to flag (not fail) inputs where an intermediate measurement
axis does better.
"""

import math
from dataclasses import dataclass

import numpy as np

from .model import density_matrix_uncoupled


@dataclass(frozen=True)
class CorrelationReport:
    """All four measures for one steady state, plus the auxiliary coefficient K."""

    concurrence: float
    mutual_information: float
    classical_correlation: float
    discord: float
    k_coefficient: float


def _four(pops) -> tuple[float, float, float, float]:
    p1, p2, p3, p4 = (float(x) for x in pops)
    return p1, p2, p3, p4


def _xlog2x(x: float) -> float:
    return x * math.log2(x) if x > 0.0 else 0.0


def concurrence(pops) -> float:
    """Concurrence of the steady state from its populations.

    C = max(2 P_max - P1 - P4 - 2 sqrt(P2 P3), 0) with
    P_max = max(P1, P4, sqrt(P2 P3)); zero exactly for separable states.
    """
    p1, p2, p3, p4 = _four(pops)
    root = math.sqrt(p2 * p3)
    return max(2.0 * max(p1, p4, root) - p1 - p4 - 2.0 * root, 0.0)


def mutual_information(pops) -> float:
    """Quantum mutual information I = S(A) + S(B) - S(AB), in bits.

    Both marginals are diagonal with eigenvalues (1 +- (P2 - P3))/2, and the
    joint spectrum is the populations themselves, which gives

        I = 2 - log2[(1-P2+P3)^(1-P2+P3) (1+P2-P3)^(1+P2-P3)]
              + sum_n P_n log2 P_n.
    """
    p1, p2, p3, p4 = _four(pops)
    u = 1.0 + p2 - p3
    v = 1.0 - p2 + p3
    return (
        2.0
        - _xlog2x(u)
        - _xlog2x(v)
        + _xlog2x(p1)
        + _xlog2x(p2)
        + _xlog2x(p3)
        + _xlog2x(p4)
    )


def _marginal_entropy(p2: float, p3: float) -> float:
    u = 1.0 + p2 - p3
    v = 1.0 - p2 + p3
    return 1.0 - 0.5 * (_xlog2x(u) + _xlog2x(v))


def _conditional_entropy_z(p1: float, p2: float, p3: float, p4: float) -> float:
    # measurement along z: outcome weights u/2 and v/2, diagonal conditional states
    u = 1.0 + p2 - p3
    v = 1.0 - p2 + p3
    half = 0.5 * (p1 + p4)

    def term(w: float, num: float, den: float) -> float:
        return -w * math.log2(num / den) if w > 0.0 else 0.0

    return (
        term(p2, 2.0 * p2, u)
        + term(half, p1 + p4, u)
        + term(half, p1 + p4, v)
        + term(p3, 2.0 * p3, v)
    )


def k_coefficient(pops) -> float:
    """K = sqrt((P2 - P3)^2 + (P1 - P4)^2), in [0, 1]."""
    p1, p2, p3, p4 = _four(pops)
    return math.hypot(p2 - p3, p1 - p4)


def _conditional_entropy_x(k: float) -> float:
    # equatorial measurement: both outcomes yield spectrum (1 +- K)/2
    return 1.0 - 0.5 * (_xlog2x(1.0 - k) + _xlog2x(1.0 + k))


def classical_correlation(pops) -> float:
    """Classical correlation C_cl = S(B) - min over measurements of S(B|A).

    The minimum runs over the z-axis branch and the equatorial branch of
    projective measurements, the two candidates that are optimal for this
    state family.
    """
    p1, p2, p3, p4 = _four(pops)
    s1 = _conditional_entropy_z(p1, p2, p3, p4)
    s2 = _conditional_entropy_x(k_coefficient(pops))
    return max(_marginal_entropy(p2, p3) - min(s1, s2), 0.0)


def discord(pops) -> float:
    """Quantum discord Q = I - C_cl, clamped at zero within rounding noise."""
    q = mutual_information(pops) - classical_correlation(pops)
    if q < 0.0 and q > -1e-12:
        return 0.0
    return q


def correlation_report(pops) -> CorrelationReport:
    """Bundle all four correlation measures for one population vector."""
    i = mutual_information(pops)
    c_cl = classical_correlation(pops)
    q = i - c_cl
    if q < 0.0 and q > -1e-12:
        q = 0.0
    return CorrelationReport(
        concurrence=concurrence(pops),
        mutual_information=i,
        classical_correlation=c_cl,
        discord=q,
        k_coefficient=k_coefficient(pops),
    )


# --------------------------------------------------------------------------
# brute-force routes


_SIGMA_YY = np.array(
    [
        [0.0, 0.0, 0.0, -1.0],
        [0.0, 0.0, 1.0, 0.0],
        [0.0, 1.0, 0.0, 0.0],
        [-1.0, 0.0, 0.0, 0.0],
    ]
)


def wootters_concurrence(rho: np.ndarray) -> float:
    """Concurrence of an arbitrary two-qubit density matrix (Wootters route).

    Square roots of the eigenvalues of rho (sigma_y x sigma_y) rho*
    (sigma_y x sigma_y), sorted descending; C = max(0, l1 - l2 - l3 - l4).
    """
    rho = np.asarray(rho, dtype=complex)
    flipped = _SIGMA_YY @ rho.conj() @ _SIGMA_YY
    ev = np.linalg.eigvals(rho @ flipped)
    # tiny negative eigenvalues are rounding artefacts of the non-normal product
    lam = np.sqrt(np.abs(np.sort(ev.real)))
    return float(max(0.0, lam[3] - lam[2] - lam[1] - lam[0]))


def concurrence_brute_force(pops) -> float:
    """Wootters concurrence evaluated on the reconstructed density matrix."""
    return wootters_concurrence(density_matrix_uncoupled(pops))


def _xlog2x_arr(x: np.ndarray) -> np.ndarray:
    out = np.zeros_like(x)
    mask = x > 0.0
    out[mask] = x[mask] * np.log2(x[mask])
    return out


def classical_correlation_grid(pops, n_theta: int = 200, n_phi: int = 200) -> float:
    """Classical correlation by grid search over projective measurements.

    Minimizes the measured conditional entropy over measurement axes
    n(theta, phi) on one qubit (the state is exchange symmetric, so the
    side is immaterial). A finite grid can only overestimate the true
    minimum, so the result is a lower bound on the classical correlation
    up to grid resolution. For a two-outcome measurement on an X state the
    outcome weight and the conditional spectrum are available in closed
    form, which keeps the scan a pure array computation.
    """
    p1, p2, p3, p4 = _four(pops)
    c = 0.5 * (p1 + p4)
    d = 0.5 * (p4 - p1)
    theta = np.linspace(0.0, 0.5 * np.pi, n_theta)
    phi = np.linspace(0.0, 2.0 * np.pi, n_phi, endpoint=False)
    ct = np.broadcast_to(np.cos(theta)[:, None], (n_theta, n_phi))
    st = np.broadcast_to(np.sin(theta)[:, None], (n_theta, n_phi))
    # |off-diagonal| of the conditional state; phi only rotates its phase
    beta2 = (0.5 * d * st) ** 2
    cond = np.zeros((n_theta, n_phi))
    for s in (1.0, -1.0):
        alpha = 0.5 * (p2 * (1.0 + s * ct) + c * (1.0 - s * ct))
        gamma = 0.5 * (c * (1.0 + s * ct) + p3 * (1.0 - s * ct))
        weight = alpha + gamma
        radius = np.sqrt((alpha - gamma) ** 2 + 4.0 * beta2)
        lam_hi = np.clip(0.5 * (weight + radius), 0.0, None)
        lam_lo = np.clip(0.5 * (weight - radius), 0.0, None)
        cond += _xlog2x_arr(weight) - _xlog2x_arr(lam_hi) - _xlog2x_arr(lam_lo)
    return _marginal_entropy(p2, p3) - float(cond.min())
