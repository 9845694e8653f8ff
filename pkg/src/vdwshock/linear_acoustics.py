"""First-order acoustic field of the diffraction problem.

Outside the sonic arc the first-order density is piecewise constant (1 behind
the incident shock, 2 behind the reflected one).  Inside the arc it is the
closed-form diffraction solution written in the Busemann variable
s = (xi/kappa0)/(1 + sqrt(1-(xi/kappa0)^2)) and the corner exponent
mu = (pi/2)/(pi - alpha), with arctangents taken on the [0, pi] branch.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

from .errors import DomainError, RegionError, SingularityError
from .geometry import (
    OMEGA_1,
    OMEGA_2,
    RegionLabel,
    SelfSimilarPoint,
    make_point,
    region_classify,
)
from .thermo import GasModel, ReferenceState, validate_gas

#: ring 1 - xi/kappa0 below which the near-front asymptote replaces the
#: closed form (catastrophic cancellation guard)
FRONT_RING = 1e-14

#: formula tags carried by field samples
TAG_PIECEWISE = 50
TAG_DIFFRACTION = 51
TAG_NEAR_FRONT = 52


@dataclass(frozen=True)
class ExpansionCoefficients:
    """Perturbation coefficients of the uniform states in the shock strength.

    State-1 entries are the first- and second-order coefficients of the
    head-on jump (density, pressure, radial/angular pseudo-velocity, sound
    speed) plus the cubic-order entropy coefficient.  The state-2 first-order
    triple is populated only by state2_expansion.
    """

    rho_1: float
    p_1: float
    p_2: float
    U_1: float
    U_2: float
    V_1: float
    V_2: float
    a_1: float
    a_2: float
    s_3: float
    rho2_1: float | None = None
    U2_1: float | None = None
    V2_1: float | None = None


@dataclass(frozen=True)
class DiffractionFrame:
    mu: float
    beta_angle: float
    s: float


@dataclass(frozen=True)
class FieldSample:
    point: SelfSimilarPoint
    region: RegionLabel
    rho1: float
    formula_tag: int


def corner_exponent(alpha: float) -> float:
    if not 0.0 < alpha < math.pi / 2.0:
        raise DomainError(f"wedge half-angle must lie in (0, pi/2), got {alpha}")
    return 0.5 * math.pi / (math.pi - alpha)


def busemann_variable(xi_over_kappa0: float) -> float:
    """Map the reduced radius on [0, 1] to the Busemann disk coordinate."""
    sigma = xi_over_kappa0
    if sigma < 0.0 or sigma > 1.0 + 1e-12:
        raise DomainError(f"xi/kappa0 must lie in [0, 1], got {sigma}")
    sigma = min(sigma, 1.0)
    return sigma / (1.0 + math.sqrt(max(0.0, 1.0 - sigma * sigma)))


def diffraction_frame(
    xi: float, theta: float, alpha: float, ref: ReferenceState
) -> DiffractionFrame:
    return DiffractionFrame(
        mu=corner_exponent(alpha),
        beta_angle=theta - alpha,
        s=busemann_variable(xi / ref.kappa0),
    )


def atan_zero_pi(num: float, den: float) -> float:
    """Arctangent of num/den on the branch with codomain [0, pi].

    Ties at num = 0 resolve by the sign of the denominator (den > 0 -> 0,
    den < 0 -> pi), which is the unique branch matching the arc data of the
    diffraction solution.
    """
    if num == 0.0:
        num = 0.0  # fold -0.0 so the den<0 tie lands on pi
    t = math.atan2(num, den)
    if t < 0.0:
        t += math.pi
    return t


def state1_expansion(theta: float, gas: GasModel, ref: ReferenceState) -> ExpansionCoefficients:
    """Strength-expansion coefficients of the state behind the incident shock."""
    validate_gas(gas)
    g, bt = gas.gamma, gas.btilde
    k0 = ref.kappa0
    one_m = 1.0 - bt
    return ExpansionCoefficients(
        rho_1=1.0,
        p_1=g / one_m,
        p_2=g * (g - 1.0 + 2.0 * bt) / (2.0 * one_m * one_m),
        U_1=k0 * math.cos(theta),
        U_2=(g - 3.0 + 4.0 * bt) * k0 * math.cos(theta) / (4.0 * one_m),
        V_1=-k0 * math.sin(theta),
        V_2=(3.0 - g - 4.0 * bt) * k0 * math.sin(theta) / (4.0 * one_m),
        a_1=k0 * (g - 1.0 + 2.0 * bt) / (2.0 * one_m),
        a_2=k0 * ((g - 1.0) * (g - 3.0 + 8.0 * bt) + 8.0 * bt * bt) / (8.0 * one_m * one_m),
        s_3=g * (g * g - 1.0) / (12.0 * one_m ** 3),
    )


def state2_expansion(
    theta: float, alpha: float, ref: ReferenceState
) -> tuple[float, float, float]:
    """First-order triple (rho, U, V) of the state behind the reflected shock."""
    k0 = ref.kappa0
    return (
        2.0,
        2.0 * k0 * math.cos(alpha) * math.cos(theta - alpha),
        -2.0 * k0 * math.cos(alpha) * math.sin(theta - alpha),
    )


def first_order_piecewise(
    pt: SelfSimilarPoint, alpha: float, ref: ReferenceState
) -> FieldSample:
    """Piecewise-constant first-order density outside the sonic arc.

    On the arc itself the side of the merge point decides: 2 toward the wall
    (theta < 2*alpha), 1 beyond it.
    """
    label = region_classify(pt, alpha, ref)
    if label.region == OMEGA_1 and "sonic_arc" not in label.boundaries:
        return FieldSample(pt, label, 1.0, TAG_PIECEWISE)
    if label.region == OMEGA_2 and "sonic_arc" not in label.boundaries:
        return FieldSample(pt, label, 2.0, TAG_PIECEWISE)
    if "sonic_arc" in label.boundaries:
        value = 2.0 if pt.theta < 2.0 * alpha else 1.0
        return FieldSample(pt, label, value, TAG_PIECEWISE)
    raise RegionError(
        f"piecewise field covers Omega1/Omega2 only, point is in {label.region}"
    )


def interior_density(s: float, beta: float, mu: float) -> float:
    """Diffraction density as a function of the Busemann coordinate alone.

    Even in the wall-relative angle beta, which is what enforces the Neumann
    condition on the wedge face.
    """
    sm = s ** mu
    s2m = sm * sm
    cos_pi = math.cos(mu * math.pi)
    sin_pi = math.sin(mu * math.pi)
    cos_b = math.cos(mu * beta)
    t1 = atan_zero_pi((1.0 - s2m) * cos_pi, -(1.0 + s2m) * sin_pi + 2.0 * sm * cos_b)
    t2 = atan_zero_pi(-(1.0 - s2m) * cos_pi, (1.0 + s2m) * sin_pi + 2.0 * sm * cos_b)
    return 1.0 + (t1 + t2) / math.pi


def near_front_coefficient(theta: float, alpha: float) -> float:
    """Coefficient of sqrt(1 - xi/kappa0) in the near-arc expansion.

    Negative on the wall side of the merge point, positive beyond it;
    singular exactly there (theta = 2*alpha), where the expansion breaks down.
    """
    mu = corner_exponent(alpha)
    beta = theta - alpha
    if abs(beta - alpha) <= 1e-12:
        raise SingularityError("near-front expansion is singular at theta = 2*alpha")
    den = math.cos(mu * beta) ** 2 - math.sin(mu * math.pi) ** 2
    if den == 0.0:
        raise SingularityError("near-front expansion denominator vanished")
    return math.sqrt(2.0) * mu * math.sin(2.0 * mu * math.pi) / (math.pi * den)


def diffracted_density(
    pt: SelfSimilarPoint, alpha: float, ref: ReferenceState
) -> FieldSample:
    """First-order density in the subsonic disk (closed diffraction formula).

    At the arc the one-sided limit (the piecewise arc value) is returned; in
    the cancellation ring just inside the arc the near-front asymptote is
    used instead, except at the merge point where that asymptote is singular.
    """
    sigma = pt.xi / ref.kappa0
    if sigma > 1.0 + 1e-12:
        raise DomainError(f"diffraction formula needs xi <= kappa0, got xi/kappa0={sigma}")
    if not alpha - 1e-15 <= pt.theta <= math.pi + 1e-15:
        raise DomainError(f"theta={pt.theta} outside [alpha, pi]")
    label = region_classify(pt, alpha, ref)
    mu = corner_exponent(alpha)
    beta = pt.theta - alpha

    if sigma >= 1.0:
        value = 2.0 if beta < alpha else 1.0
        return FieldSample(pt, label, value, TAG_DIFFRACTION)
    if 1.0 - sigma < FRONT_RING:
        base = 2.0 if beta < alpha else 1.0
        c52 = near_front_coefficient(pt.theta, alpha)  # singular at the merge point
        value = base + c52 * math.sqrt(max(0.0, 1.0 - sigma))
        return FieldSample(pt, label, value, TAG_NEAR_FRONT)
    s = busemann_variable(sigma)
    return FieldSample(pt, label, interior_density(s, beta, mu), TAG_DIFFRACTION)


def diffracted_density_xi(
    xi_over_kappa0: float, theta: float, alpha: float, ref: ReferenceState
) -> FieldSample:
    """Convenience wrapper taking the reduced radius xi/kappa0 directly."""
    xi = xi_over_kappa0 * ref.kappa0
    return diffracted_density(make_point(xi * ref.c0, theta, ref), alpha, ref)


def density_pde_residual(
    field: Callable[[float, float], float],
    xi: float,
    theta: float,
    h: float,
    ref: ReferenceState,
) -> float:
    """Central-difference residual of the degenerate interior equation.

    Evaluates xi^2*((1-(xi/kappa0)^2)*rho_xi)_xi + rho_theta_theta + xi*rho_xi
    for a scalar field rho(xi, theta); second order in the step h.
    """
    if h <= 0.0:
        raise DomainError("step must be positive")
    if not 0.0 < xi < ref.kappa0:
        raise DomainError("residual stencil needs an interior radius")
    if xi - h <= 0.0 or xi + h >= ref.kappa0:
        raise DomainError("stencil leaves the radial domain; shrink h")
    k0 = ref.kappa0

    def coeff(x: float) -> float:
        return 1.0 - (x / k0) ** 2

    f0 = field(xi, theta)
    f_xp = field(xi + h, theta)
    f_xm = field(xi - h, theta)
    flux = (
        coeff(xi + 0.5 * h) * (f_xp - f0) - coeff(xi - 0.5 * h) * (f0 - f_xm)
    ) / (h * h)
    rho_tt = (field(xi, theta + h) - 2.0 * f0 + field(xi, theta - h)) / (h * h)
    rho_x = (f_xp - f_xm) / (2.0 * h)
    return xi * xi * flux + rho_tt + xi * rho_x
