"""Weakly nonlinear correction at the diffracted front.

The linear front carries a square-root singularity whose matching coefficient
C(beta) decides, together with the side of the sonic ray beta = alpha, whether
the diffracted front is a rarefaction (wall side) or a shock (outer side).
Amplitudes ride on the phase psi solving an implicit quadratic; the shock
location follows from the equal-area rule.

Sign bookkeeping: the printed matching coefficient evaluates positive on the
rarefaction side, while the case construction requires the expansion branch
(negative coefficient) for the phase to vanish on the front.  The rarefaction
profile therefore uses -|C(beta)|; classification is purely geometric.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

from .errors import ClassificationError, DomainError, SingularityError
from .linear_acoustics import corner_exponent
from .thermo import GasModel, ReferenceState, validate_gas


@dataclass(frozen=True)
class FrontClassification:
    kind: str  # "rarefaction" | "shock"
    beta_angle: float
    alpha: float


@dataclass(frozen=True)
class FrontWave:
    """Diagnostic bundle for one point of the diffracted front region.

    Lambda is the wave-profile value -C*sqrt(tau); tau the fast phase
    phi/delta with delta = epsilon^2.  Exposed for testing only, the CLI never
    serializes these.
    """

    C_beta: float
    Theta: float
    delta_amp: float
    Lambda: float | None
    tau: float
    psi: float | None
    phi_phase: float


def c_beta(beta_angle: float, alpha: float) -> float:
    """Matching coefficient of the front expansion along the ray beta.

    Equal in magnitude and opposite in sign to the near-front coefficient of
    the linear field on the same ray; singular on the sonic ray beta = alpha.
    """
    if beta_angle < 0.0 or beta_angle >= math.pi - alpha:
        raise DomainError(f"ray angle must lie in [0, pi - alpha), got {beta_angle}")
    if abs(beta_angle - alpha) <= 1e-12:
        raise SingularityError("matching coefficient is singular on the sonic ray")
    mu = corner_exponent(alpha)
    den = math.sin(mu * math.pi) ** 2 - math.cos(mu * beta_angle) ** 2
    return math.sqrt(2.0) * mu * math.sin(2.0 * mu * math.pi) / (math.pi * den)


def classify_front(beta_angle: float, alpha: float) -> FrontClassification:
    """Rarefaction on the wall side of the sonic ray, shock beyond it."""
    if abs(beta_angle - alpha) <= 1e-12:
        raise SingularityError("front type is undefined on the sonic ray beta = alpha")
    kind = "rarefaction" if beta_angle < alpha else "shock"
    return FrontClassification(kind=kind, beta_angle=beta_angle, alpha=alpha)


def transport_residual(
    a_profile: Callable[[float, float], float],
    r: float,
    tau: float,
    h: float,
    gas: GasModel,
) -> float:
    """Central-difference residual of the cylindrical amplitude transport law.

    Evaluates a_r + (gamma+1)/(2(1-btilde)) * a * a_tau + a/(2r); zero for any
    amplitude of the form profile(tau)/sqrt(r) carried along characteristics.
    """
    validate_gas(gas)
    if r <= 0.0:
        raise DomainError("transport residual needs r > 0")
    if h <= 0.0 or r - h <= 0.0:
        raise DomainError("stencil leaves the domain; shrink h")
    a0 = a_profile(r, tau)
    a_r = (a_profile(r + h, tau) - a_profile(r - h, tau)) / (2.0 * h)
    a_t = (a_profile(r, tau + h) - a_profile(r, tau - h)) / (2.0 * h)
    coeff = (gas.gamma + 1.0) / (2.0 * (1.0 - gas.btilde))
    return a_r + coeff * a0 * a_t + a0 / (2.0 * r)


def psi_root(phi_phase: float, r: float, C: float, epsilon: float, gas: GasModel) -> float:
    """Positive root of the implicit phase equation behind the front.

    sqrt(psi) = Pi + sqrt(phi + Pi^2) with Pi = eps*C*(gamma+1)*sqrt(r)/(2(1-btilde));
    reduces to the linear phase at eps = 0 and vanishes on the front for C < 0.
    """
    validate_gas(gas)
    if r <= 0.0:
        raise DomainError("phase root needs r > 0")
    if epsilon < 0.0:
        raise DomainError("shock strength must be nonnegative")
    pi_term = epsilon * C * (gas.gamma + 1.0) * math.sqrt(r) / (2.0 * (1.0 - gas.btilde))
    radicand = phi_phase + pi_term * pi_term
    if radicand < 0.0:
        raise DomainError(f"phase radicand negative ({radicand}); point beyond the fold")
    root = pi_term + math.sqrt(radicand)
    return root * root


def front_wave(
    r: float,
    t: float,
    beta_angle: float,
    alpha: float,
    epsilon: float,
    gas: GasModel,
    ref: ReferenceState,
) -> FrontWave:
    """Assemble the diagnostic front quantities at one (r, t) point."""
    c_val = c_beta(beta_angle, alpha)
    kind = classify_front(beta_angle, alpha).kind
    c_case = -abs(c_val) if kind == "rarefaction" else abs(c_val)
    delta = epsilon * epsilon
    phi = ref.c0 * ref.kappa0 * t - r
    tau = phi / delta if delta > 0.0 else math.inf
    lam = -c_val * math.sqrt(tau) if 0.0 <= tau < math.inf else None
    try:
        psi = psi_root(phi, r, c_case, epsilon, gas)
    except DomainError:
        psi = None
    return FrontWave(
        C_beta=c_val,
        Theta=beta_angle,
        delta_amp=delta,
        Lambda=lam,
        tau=tau,
        psi=psi,
        phi_phase=phi,
    )


def rarefaction_profile(
    r: float,
    t: float,
    beta_angle: float,
    alpha: float,
    epsilon: float,
    gas: GasModel,
    ref: ReferenceState,
    state2: tuple[float, float, float],
) -> tuple[float, float, float, float]:
    """Flow (rho, U, V, S) across a rarefaction-type diffracted front.

    Ahead of the front (r >= c0*kappa0*t) the uniform reflected state holds;
    behind it the phase-root correction is added with net amplitude
    epsilon^2 * C / sqrt(r), continuous across the front.  state2 is the
    first-order triple (rho, U, V) of the reflected state on this ray.
    """
    if classify_front(beta_angle, alpha).kind != "rarefaction":
        raise ClassificationError("rarefaction profile needs beta < alpha")
    rho2_1, u2_1, v2_1 = state2
    rho2 = ref.rho0 * (1.0 + rho2_1 * epsilon)
    u2 = ref.c0 * u2_1 * epsilon
    v2 = ref.c0 * v2_1 * epsilon
    s2 = 0.0
    front = ref.c0 * ref.kappa0 * t
    if r >= front or epsilon == 0.0:
        return rho2, u2, v2, s2
    c_case = -abs(c_beta(beta_angle, alpha))  # expansion branch
    psi = psi_root(front - r, r, c_case, epsilon, gas)
    corr = epsilon * epsilon * c_case * math.sqrt(psi) / math.sqrt(r)
    return (
        rho2 + corr * ref.rho0,
        u2 + corr * ref.c0 * ref.kappa0,
        v2,
        s2,
    )


def gradient_jump(r: float, gas: GasModel, rho0: float) -> float:
    """Radial density-gradient jump across the rarefaction front at radius r."""
    validate_gas(gas)
    if r <= 0.0:
        raise DomainError("gradient jump needs r > 0")
    return (1.0 - gas.btilde) * rho0 / ((gas.gamma + 1.0) * r)


def shock_locus(
    t: float,
    beta_angle: float,
    alpha: float,
    epsilon: float,
    gas: GasModel,
    ref: ReferenceState,
) -> float:
    """Equal-area position of the diffracted shock on the ray beta at time t."""
    if classify_front(beta_angle, alpha).kind != "shock":
        raise ClassificationError("shock locus needs beta > alpha")
    c_val = c_beta(beta_angle, alpha)
    q = (
        epsilon * epsilon * (gas.gamma + 1.0) ** 2 * c_val * c_val
        / (4.0 * (1.0 - gas.btilde) ** 2)
    )
    return ref.c0 * ref.kappa0 * t * (1.0 + q)


def shock_strength(beta_angle: float, alpha: float, epsilon: float, gas: GasModel) -> float:
    """Density jump across the diffracted shock, in units of rho0."""
    validate_gas(gas)
    if classify_front(beta_angle, alpha).kind != "shock":
        raise ClassificationError("shock strength needs beta > alpha")
    c_val = c_beta(beta_angle, alpha)
    return epsilon * epsilon * c_val * c_val * (gas.gamma + 1.0) / (2.0 * (1.0 - gas.btilde))
