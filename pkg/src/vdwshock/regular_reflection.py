"""Detachment criterion for regular reflection.

The wedge condition reduces to a cubic in X = 1 + beta_i*tan^2(phi_i); its
unique positive root fixes the threshold J = (x*-1)/beta_i that the squared
tangent of the incidence angle must reach for a regular reflection to exist.
The closed-form root is always cross-checked against a bracketing bisection.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DetachmentError, DomainError, InternalInconsistencyError
from .shock_relations import (
    ENDPOINT_SLACK,
    IncidentShockInput,
    check_incident_beta,
)
from .thermo import GasModel, validate_gas

#: closed-form root vs bisection agreement required before a root is accepted
ROOT_AGREEMENT = 1e-10


@dataclass(frozen=True)
class CubicForm:
    """Coefficients of the threshold cubic and its depressed-form constants.

    m and n are the constants of the shifted cubic y^3 + m*y + n = 0 obtained
    from h0..h3; the root of the original cubic is y - h2/(3*h3).
    """

    h0: float
    h1: float
    h2: float
    h3: float
    m: float
    n: float


@dataclass(frozen=True)
class CriterionReport:
    cubic: CubicForm | None
    x_star: float | None
    J: float | None
    phi_star: float | None
    admissible: bool
    upper_beta: float


@dataclass(frozen=True)
class ReflectionSolution:
    """Reflected-shock quantities and the uniform state behind it.

    phi_r is the signed angle whose tangent solves the wedge condition; the
    physical branch is negative (the reflected shock leans the other way
    across the flow than the incident one).  state2 is (rho2/rho0, u2, v2,
    p2/p0) in units with rho0 = p0 = 1.
    """

    beta_r: float
    phi_r: float
    delta_r: float
    M2_sq: float
    state2: tuple[float, float, float, float]


def _f_terms(beta_i: float, tan_sq_phi_i: float, gas: GasModel) -> tuple[float, float]:
    g, bt, b = gas.gamma, gas.btilde, beta_i
    t2 = tan_sq_phi_i
    a_coef = (g + 1.0 - 2.0 * bt) * b - (g - 1.0)
    term1 = t2 * (1.0 + b * b * t2) ** 2 * (1.0 - bt * b) ** 2
    term2 = (b - 1.0) * (1.0 + b * t2) * a_coef * ((g - 1.0 + 2.0 * bt * b) * b * t2 + (g + 1.0))
    return term1, term2


def F_eval(beta_i: float, tan_sq_phi_i: float, gas: GasModel) -> float:
    """Radicand of the reflected-angle formula; >= 0 iff regular reflection."""
    check_incident_beta(beta_i, gas)
    if tan_sq_phi_i < 0.0:
        raise DomainError("tan_sq_phi_i must be nonnegative")
    term1, term2 = _f_terms(beta_i, tan_sq_phi_i, gas)
    return term1 - term2


def beta_r_from_angles(beta_i: float, tan_phi_i: float, tan_phi_r: float, gas: GasModel) -> float:
    """Reflected density ratio from the two shock angles."""
    check_incident_beta(beta_i, gas)
    g, bt, b = gas.gamma, gas.btilde, beta_i
    t2 = tan_phi_i * tan_phi_i
    r2 = tan_phi_r * tan_phi_r
    den = (g + 1.0) * b * (1.0 + r2) + (g - 1.0 + 2.0 * bt * b) * (b * b * t2 - r2)
    if den == 0.0:
        raise DomainError("reflected-ratio denominator vanishes")
    return (g + 1.0) * (1.0 + b * b * t2) / den


def tan_delta_r(beta_i: float, tan_phi_i: float, tan_phi_r: float, gas: GasModel) -> float:
    """Deflection tangent behind the reflected shock, angles eliminated."""
    check_incident_beta(beta_i, gas)
    g, bt, b = gas.gamma, gas.btilde, beta_i
    t2 = tan_phi_i * tan_phi_i
    r = tan_phi_r
    r2 = r * r
    sec2 = 1.0 + r2
    two_cov = 2.0 * (1.0 - bt * b)
    num = r * (two_cov * (b * b * t2 - r2) - (g + 1.0) * (b - 1.0) * sec2)
    den = b * (g + 1.0) * (1.0 + b * t2) * sec2 - two_cov * (b * b * t2 - r2)
    if den == 0.0:
        raise DomainError("deflection denominator vanishes")
    return num / den


def tan_phi_r_branches(
    beta_i: float, tan_phi_i: float, gas: GasModel
) -> tuple[float, float, float]:
    """Both roots of the wedge condition for tan(phi_r), plus the radicand F.

    Downstream consumers use the minus branch; the plus branch degenerates to
    zero with the shock strength and is discarded.  Grazing detachment
    (F = 0 up to rounding) counts as attached, with the radicand clamped.
    """
    check_incident_beta(beta_i, gas)
    term1, term2 = _f_terms(beta_i, tan_phi_i * tan_phi_i, gas)
    f_value = term1 - term2
    if f_value < 0.0:
        if f_value >= -1e-12 * (abs(term1) + abs(term2)):
            f_value = 0.0
        else:
            raise DetachmentError(
                f"no regular reflection: F = {f_value} < 0 at beta_i={beta_i}, "
                f"tan_phi_i={tan_phi_i}"
            )
    g, bt, b = gas.gamma, gas.btilde, beta_i
    t = tan_phi_i
    t2 = t * t
    a_coef = (g + 1.0 - 2.0 * bt) * b - (g - 1.0)
    den = (1.0 + b * t2) * a_coef
    lead = -t * (1.0 + b * b * t2) * (1.0 - bt * b)
    root = math.sqrt(f_value)
    return (lead - root) / den, (lead + root) / den, f_value


def cubic_coefficients(beta_i: float, gas: GasModel) -> CubicForm:
    """Coefficients h0..h3 of the threshold cubic in X = 1 + beta_i*tan^2(phi_i)."""
    check_incident_beta(beta_i, gas)
    g, bt, b = gas.gamma, gas.btilde, beta_i
    c = (1.0 - bt * b) ** 2
    a_coef = (g + 1.0 - 2.0 * bt) * b - (g - 1.0)
    g_coef = g - 1.0 + 2.0 * bt * b
    h0 = -c * (b - 1.0) ** 2 / b
    h1 = c * (b - 1.0) * (3.0 - 1.0 / b) - 2.0 * (b - 1.0) * (1.0 - bt * b) * a_coef
    h2 = -((3.0 * b - 2.0) * c + (b - 1.0) * a_coef * g_coef)
    h3 = b * c
    b2 = h2 / h3
    b1 = h1 / h3
    b0 = h0 / h3
    m = b1 - b2 * b2 / 3.0
    n = b0 - b1 * b2 / 3.0 + 2.0 * b2 ** 3 / 27.0
    return CubicForm(h0=h0, h1=h1, h2=h2, h3=h3, m=m, n=n)


def cubic_value(cubic: CubicForm, x: float) -> float:
    return ((cubic.h3 * x + cubic.h2) * x + cubic.h1) * x + cubic.h0


def _cbrt(x: float) -> float:
    return math.copysign(abs(x) ** (1.0 / 3.0), x)


def _closed_form_root(cubic: CubicForm) -> float:
    """Largest real root of the cubic via radicals or the three-real-root cosine form."""
    m, n = cubic.m, cubic.n
    disc = n * n / 4.0 + m ** 3 / 27.0
    if disc >= 0.0:
        s = math.sqrt(disc)
        y = _cbrt(-n / 2.0 + s) + _cbrt(-n / 2.0 - s)
    else:
        # casus irreducibilis: three real roots, keep the largest
        rho = 2.0 * math.sqrt(-m / 3.0)
        arg = 3.0 * n / (m * rho)
        arg = min(1.0, max(-1.0, arg))
        y = rho * math.cos(math.acos(arg) / 3.0)
    return y - cubic.h2 / (3.0 * cubic.h3)


def _bisection_root(cubic: CubicForm) -> float:
    """Unique positive zero by sign-change bisection, independent of radicals."""
    hi = 1.0
    for _ in range(400):
        if cubic_value(cubic, hi) > 0.0:
            break
        hi *= 2.0
    else:  # pragma: no cover - coefficients guarantee growth
        raise InternalInconsistencyError("cubic does not become positive")
    lo = hi / 2.0
    while lo > 0.0 and cubic_value(cubic, lo) > 0.0:
        lo /= 2.0
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if mid == lo or mid == hi:
            break
        if cubic_value(cubic, mid) > 0.0:
            hi = mid
        else:
            lo = mid
    return 0.5 * (lo + hi)


def positive_root(cubic: CubicForm) -> float:
    """Unique positive zero of the threshold cubic, bisection-verified."""
    x_closed = _closed_form_root(cubic)
    x_bisect = _bisection_root(cubic)
    if abs(x_closed - x_bisect) > ROOT_AGREEMENT:
        raise InternalInconsistencyError(
            f"cubic root methods disagree: closed-form {x_closed} vs bisection {x_bisect}"
        )
    residual = cubic_value(cubic, x_closed)
    scale = abs(cubic.h3) * max(abs(x_closed), 1.0) ** 3
    if abs(residual) > 1e-9 * scale:
        raise InternalInconsistencyError(
            f"cubic root residual {residual} exceeds tolerance at x={x_closed}"
        )
    return x_closed


def criterion(beta_i: float, gas: GasModel) -> CriterionReport:
    """Detachment report: threshold J and critical angle for a density ratio.

    Inadmissible ratios do not raise; they come back flagged with the bound
    that excludes them (that is what blanks a table cell).
    """
    validate_gas(gas)
    upper = (gas.gamma + 1.0) / (gas.gamma - 1.0 + 2.0 * gas.btilde)
    admissible = 1.0 - ENDPOINT_SLACK <= beta_i <= upper * (1.0 + ENDPOINT_SLACK)
    if not admissible:
        return CriterionReport(
            cubic=None, x_star=None, J=None, phi_star=None, admissible=False, upper_beta=upper
        )
    cubic = cubic_coefficients(beta_i, gas)
    x_star = positive_root(cubic)
    j_value = max(0.0, (x_star - 1.0) / beta_i)
    phi_star = math.atan(math.sqrt(j_value))
    return CriterionReport(
        cubic=cubic,
        x_star=x_star,
        J=j_value,
        phi_star=phi_star,
        admissible=True,
        upper_beta=upper,
    )


def solve_regular_reflection(
    inp: IncidentShockInput, alpha: float, gas: GasModel
) -> ReflectionSolution:
    """Full regular-reflection state for an incidence angle at/above critical.

    Uses the minus branch of the wedge condition, checks that the two
    deflections cancel to 1e-10 and that the reflected ratio stays in its
    admissible band (guaranteed whenever F >= 0; a violation is reported as an
    internal inconsistency, never silently accepted).
    """
    check_incident_beta(inp.beta_i, gas)
    if not 0.0 < alpha < math.pi / 2.0:
        raise DomainError(f"wedge half-angle must lie in (0, pi/2), got {alpha}")
    if not 0.0 < inp.phi_i < math.pi / 2.0:
        raise DomainError(f"incidence angle must lie in (0, pi/2), got {inp.phi_i}")
    g, bt, b = gas.gamma, gas.btilde, inp.beta_i
    t = math.tan(inp.phi_i)

    minus, _plus, _f = tan_phi_r_branches(b, t, gas)  # raises DetachmentError when F < 0
    beta_r = beta_r_from_angles(b, t, minus, gas)
    tan_dr = tan_delta_r(b, t, minus, gas)
    tan_di = (b - 1.0) * t / (1.0 + b * t * t)
    if abs(tan_di + tan_dr) > 1e-10:
        raise InternalInconsistencyError(
            f"deflections do not cancel: tan_di={tan_di}, tan_dr={tan_dr}"
        )
    upper_r = (g + 1.0) / (g - 1.0 + 2.0 * bt * b)
    if not (1.0 - ENDPOINT_SLACK <= beta_r <= upper_r * (1.0 + ENDPOINT_SLACK)):
        raise InternalInconsistencyError(
            f"reflected ratio {beta_r} escaped its admissible band (1, {upper_r}) despite F >= 0"
        )

    r2 = minus * minus
    bb = bt * b
    m2_sq = (
        2.0 * (1.0 + beta_r * beta_r * r2) * (1.0 - bb * beta_r)
        / ((g + 1.0) * beta_r - (g - 1.0 + 2.0 * bb * beta_r))
    )
    m0_sq = 2.0 * b * (1.0 - bt) * (1.0 + t * t) / ((g + 1.0) - b * (g - 1.0 + 2.0 * bt))

    p1 = ((g + 1.0 - 2.0 * bt) * b - (g - 1.0)) / ((g + 1.0) - (g - 1.0 + 2.0 * bt) * b)
    p2 = p1 * (
        ((g + 1.0 - 2.0 * bb) * beta_r - (g - 1.0))
        / ((g + 1.0) - beta_r * (g - 1.0 + 2.0 * bb))
    )
    rho2 = b * beta_r
    a0 = math.sqrt(g / (1.0 - bt))
    a2 = math.sqrt(g * p2 / (rho2 * (1.0 - bt * rho2)))
    # flow behind the reflected shock runs along the wall; its lab speed is the
    # wall-point speed minus the pseudo-speed M2*a2
    u2 = (math.sqrt(m0_sq) * a0 - math.sqrt(m2_sq) * a2) * math.cos(alpha)
    v2 = u2 * math.tan(alpha)
    return ReflectionSolution(
        beta_r=beta_r,
        phi_r=math.atan(minus),
        delta_r=math.atan(tan_dr),
        M2_sq=m2_sq,
        state2=(rho2, u2, v2, p2),
    )


def table_generate(
    beta_grid: list[float], btilde_grid: list[float], gas_gamma: float
) -> dict[tuple[float, float], CriterionReport]:
    """Criterion reports over a (beta_i, btilde) grid at fixed gamma."""
    out: dict[tuple[float, float], CriterionReport] = {}
    for beta in beta_grid:
        for bt in btilde_grid:
            out[(beta, bt)] = criterion(beta, GasModel(gamma=gas_gamma, btilde=bt))
    return out
