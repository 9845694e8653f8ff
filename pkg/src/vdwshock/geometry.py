"""Self-similar coordinates, wavefront loci and region decomposition.

The upper half plane splits into the undisturbed region ahead of the incident
shock (Omega0), the uniform region behind it (Omega1), the uniform region
behind the straight reflected segment (Omega2) and the subsonic diffraction
disk (OmegaTilde), bounded by the incident locus, the straight reflected
line and the sonic arc zeta = a0.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError, RegionError
from .thermo import ReferenceState

#: relative half-thickness (in units of a0) used to tag boundary points
BOUNDARY_TOL = 1e-12

OMEGA_0 = "Omega0"
OMEGA_1 = "Omega1"
OMEGA_2 = "Omega2"
OMEGA_TILDE = "OmegaTilde"


@dataclass(frozen=True)
class WedgeConfig:
    alpha: float

    def __post_init__(self):
        if not 0.0 < self.alpha < math.pi / 2.0:
            raise DomainError(f"wedge half-angle must lie in (0, pi/2), got {self.alpha}")


@dataclass(frozen=True)
class SelfSimilarPoint:
    """Point (zeta, theta) with the reduced radius xi = zeta/c0 alongside."""

    zeta: float
    theta: float
    xi: float


@dataclass(frozen=True)
class PseudoFlowState:
    U: float
    V: float
    a: float


@dataclass(frozen=True)
class RegionLabel:
    region: str
    boundaries: tuple[str, ...] = ()


def make_point(zeta: float, theta: float, ref: ReferenceState) -> SelfSimilarPoint:
    if zeta < 0.0:
        raise DomainError(f"similarity radius must be nonnegative, got {zeta}")
    return SelfSimilarPoint(zeta=zeta, theta=theta, xi=zeta / ref.c0)


def incident_locus(theta: float, ref: ReferenceState) -> float:
    """Incident-shock locus zeta = a0*sec(theta), defined for theta < pi/2."""
    if not 0.0 <= theta < math.pi / 2.0:
        raise DomainError(f"incident locus needs theta in [0, pi/2), got {theta}")
    return ref.a0 / math.cos(theta)


def reflected_line(theta: float, alpha: float, ref: ReferenceState) -> float:
    """Straight reflected segment zeta* between the wall and the sonic arc."""
    if not alpha - 1e-15 <= theta <= 2.0 * alpha + 1e-15:
        raise DomainError(f"reflected line covers [alpha, 2*alpha], got theta={theta}")
    den = math.sin(theta - alpha) / math.cos(alpha) + math.sin(2.0 * alpha - theta)
    return ref.a0 * math.tan(alpha) / den


def region_classify(
    pt: SelfSimilarPoint, alpha: float, ref: ReferenceState
) -> RegionLabel:
    """Assign a region label plus tags for any boundary the point sits on.

    Interior points match exactly one region.  Points on a boundary are
    resolved by closure in the fixed priority Omega0, Omega1, Omega2,
    OmegaTilde and carry the boundary tags.  For alpha > pi/4 the printed
    decomposition leaves the patch zeta > zeta*, pi/2 < theta < 2*alpha
    uncovered; such points raise RegionError.
    """
    theta, zeta, a0 = pt.theta, pt.zeta, ref.a0
    eps = BOUNDARY_TOL * a0
    if theta < alpha - 1e-15 or theta > math.pi + 1e-15:
        raise DomainError(f"theta={theta} outside the wedge domain [alpha, pi]")

    tags = []
    inc = incident_locus(theta, ref) if theta < math.pi / 2.0 else None
    zs = reflected_line(theta, alpha, ref) if alpha <= theta <= 2.0 * alpha else None
    if inc is not None and abs(zeta - inc) <= eps:
        tags.append("incident")
    if zs is not None and abs(zeta - zs) <= eps:
        tags.append("reflected_line")
    if abs(zeta - a0) <= eps:
        tags.append("sonic_arc")

    if inc is not None and zeta >= inc - eps:
        region = OMEGA_0
    elif inc is not None and zs is not None and zs - eps <= zeta <= inc + eps:
        region = OMEGA_1
    elif theta >= 2.0 * alpha and zeta >= a0 - eps:
        region = OMEGA_1
    elif zs is not None and a0 - eps <= zeta <= zs + eps:
        region = OMEGA_2
    elif zeta <= a0 + eps:
        region = OMEGA_TILDE
    else:
        raise RegionError(
            f"point (zeta={zeta}, theta={theta}) not covered by the printed "
            f"region decomposition (alpha > pi/4 leaves a gap)"
        )
    return RegionLabel(region=region, boundaries=tuple(tags))


def eigenvalues_and_type(
    pt: SelfSimilarPoint, flow: PseudoFlowState
) -> tuple[float, float | None, float | None, str]:
    """Contact eigenvalue (multiplicity two), acoustic pair and the flow type.

    Type is decided by the sign of V^2 + (U-zeta)^2 - a^2; the acoustic pair
    exists only in the supersonic case.
    """
    if pt.zeta <= 0.0:
        raise DomainError("eigenvalues need zeta > 0")
    u_rel = flow.U - pt.zeta
    if u_rel == 0.0:
        raise DomainError("contact eigenvalue undefined at U = zeta")
    lam_contact = flow.V / (pt.zeta * u_rel)
    radicand = flow.V * flow.V + u_rel * u_rel - flow.a * flow.a
    if radicand > 0.0:
        den = pt.zeta * (u_rel * u_rel - flow.a * flow.a)
        if den == 0.0:
            raise DomainError("acoustic eigenvalues undefined at (U-zeta)^2 = a^2")
        root = flow.a * math.sqrt(radicand)
        lam_plus = (flow.V * u_rel + root) / den
        lam_minus = (flow.V * u_rel - root) / den
        return lam_contact, lam_plus, lam_minus, "supersonic"
    if radicand < 0.0:
        return lam_contact, None, None, "subsonic"
    return lam_contact, None, None, "sonic"
