"""Covolume (van der Waals) thermodynamics and upstream reference constants.

Every downstream formula is written in the dimensionless pair (gamma, btilde)
with btilde = b*rho0; dimensional quantities enter only through a
ReferenceState built from the upstream density and pressure.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError


@dataclass(frozen=True)
class GasModel:
    """Specific-heat ratio and scaled excluded volume btilde = b*rho0."""

    gamma: float
    btilde: float = 0.0


@dataclass(frozen=True)
class ThermoState:
    rho: float
    p: float


@dataclass(frozen=True)
class ReferenceState:
    """Upstream state with the derived constants of the asymptotic formulas.

    kappa0 = (1 - btilde)^(-(gamma+1)/2) and c0 = a0/kappa0 are the reduced
    wavefront constants; kappa0 = 1 exactly for an ideal gas.
    """

    rho0: float
    p0: float
    a0: float
    kappa0: float
    c0: float


def validate_gas(gas: GasModel) -> GasModel:
    """Return ``gas`` unchanged, raising on the first violated invariant."""
    if not gas.gamma > 1.0:
        raise DomainError(f"gamma must exceed 1, got {gas.gamma}")
    if gas.btilde < 0.0:
        raise DomainError(f"btilde must be nonnegative, got {gas.btilde}")
    if not gas.btilde < 1.0:
        raise DomainError(f"btilde must be below 1, got {gas.btilde}")
    return gas


def _check_state(state: ThermoState, b: float) -> None:
    if state.rho <= 0.0:
        raise DomainError(f"density must be positive, got {state.rho}")
    if state.p <= 0.0:
        raise DomainError(f"pressure must be positive, got {state.p}")
    if b * state.rho >= 1.0:
        raise DomainError(f"covolume fraction b*rho must stay below 1, got {b * state.rho}")


def sound_speed(state: ThermoState, gas: GasModel, rho0: float = 1.0) -> float:
    """Speed of sound sqrt(gamma*p / (rho*(1 - b*rho))), with b = btilde/rho0."""
    validate_gas(gas)
    b = gas.btilde / rho0
    _check_state(state, b)
    return math.sqrt(gas.gamma * state.p / (state.rho * (1.0 - b * state.rho)))


def thermo_eval(
    state: ThermoState,
    gas: GasModel,
    rho0: float = 1.0,
    reference: ThermoState | None = None,
) -> tuple[float, float, float]:
    """Internal energy, enthalpy and entropy offset for the covolume EOS.

    Returns (e, h, s_rel) with e = p*(V-b)/(gamma-1), h = p*(gamma*V-b)/(gamma-1)
    and s_rel = ln(p*(V-b)^gamma) - ln(p_ref*(V_ref-b)^gamma), i.e. the entropy
    offset (S - S_ref)/c_v.  With ``reference`` omitted the offset is taken
    against p*(V-b)^gamma = 1.  The identity h - e = p*V holds for all states.
    """
    validate_gas(gas)
    b = gas.btilde / rho0
    _check_state(state, b)
    v = 1.0 / state.rho
    e = state.p * (v - b) / (gas.gamma - 1.0)
    h = state.p * (gas.gamma * v - b) / (gas.gamma - 1.0)
    potential = math.log(state.p) + gas.gamma * math.log(v - b)
    if reference is not None:
        _check_state(reference, b)
        v_ref = 1.0 / reference.rho
        potential -= math.log(reference.p) + gas.gamma * math.log(v_ref - b)
    return e, h, potential


def reference_constants(rho0: float, p0: float, gas: GasModel) -> ReferenceState:
    """Build the upstream ReferenceState; c0*kappa0 = a0 by construction."""
    validate_gas(gas)
    if rho0 <= 0.0 or p0 <= 0.0:
        raise DomainError("reference density and pressure must be positive")
    a0 = math.sqrt(gas.gamma * p0 / (rho0 * (1.0 - gas.btilde)))
    kappa0 = (1.0 - gas.btilde) ** (-(gas.gamma + 1.0) / 2.0)
    return ReferenceState(rho0=rho0, p0=p0, a0=a0, kappa0=kappa0, c0=a0 / kappa0)
