"""Run configuration for the batch CLI: flat key-value JSON plus overrides."""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field, fields

from .errors import DomainError
from .table_fixture import FIXTURE_BETA, FIXTURE_BTILDE


def _default_beta_grid() -> list[float]:
    return list(FIXTURE_BETA)


def _default_btilde_grid() -> list[float]:
    return list(FIXTURE_BTILDE)


@dataclass
class RunConfig:
    """All CLI inputs.  Angles are degrees here; the library works in radians.

    beta_i defaults to 1 + epsilon when left unset.  beta_deg is the front
    ray angle used by the ``front`` command; eta labels the boundary state
    bordering the diffracted inner shock for the ``inner`` command.
    """

    gamma: float = 1.4
    btilde: float = 0.0
    alpha_deg: float = 45.0
    epsilon: float = 0.1
    beta_i: float | None = None
    rho0: float = 1.0
    p0: float = 1.0
    theta0: float = 0.0
    eta: float = -1.0
    beta_deg: float = 67.5
    r: float = 1.0
    t: float = 1.0
    beta_grid: list[float] = field(default_factory=_default_beta_grid)
    btilde_grid: list[float] = field(default_factory=_default_btilde_grid)
    xi_min: float = 1e-6
    xi_count: int = 21
    theta_count: int = 25
    rprime_min: float = -3.0
    rprime_max: float = 6.0
    rprime_count: int = 19
    thetaprime_min: float = -3.0
    thetaprime_max: float = 3.0
    thetaprime_count: int = 13
    btilde_sweep_max: float = 0.7
    btilde_sweep_count: int = 15
    output: str | None = None

    @property
    def alpha(self) -> float:
        return math.radians(self.alpha_deg)

    @property
    def beta_angle(self) -> float:
        return math.radians(self.beta_deg)

    def resolved_beta_i(self) -> float:
        return 1.0 + self.epsilon if self.beta_i is None else self.beta_i


_FIELD_TYPES = {f.name: f for f in fields(RunConfig)}


def _coerce(key: str, value):
    if key not in _FIELD_TYPES:
        raise DomainError(f"unknown configuration key {key!r}")
    if key == "output":
        return None if value is None else str(value)
    if key in ("beta_grid", "btilde_grid"):
        if not isinstance(value, (list, tuple)) or not value:
            raise DomainError(f"{key} must be a non-empty array of numbers")
        return [float(v) for v in value]
    if key in ("xi_count", "theta_count", "rprime_count", "thetaprime_count",
               "btilde_sweep_count"):
        iv = int(value)
        if iv != value:
            raise DomainError(f"{key} must be an integer, got {value!r}")
        return iv
    if key == "beta_i" and value is None:
        return None
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise DomainError(f"{key} must be a number, got {value!r}")
    return float(value)


def validate_config(cfg: RunConfig) -> RunConfig:
    """Re-check the module-level invariants at the CLI boundary."""
    if not cfg.gamma > 1.0:
        raise DomainError(f"gamma must exceed 1, got {cfg.gamma}")
    if not 0.0 <= cfg.btilde < 1.0:
        raise DomainError(f"btilde must lie in [0, 1), got {cfg.btilde}")
    if not 0.0 < cfg.alpha_deg < 90.0:
        raise DomainError(f"alpha_deg must lie in (0, 90), got {cfg.alpha_deg}")
    if cfg.epsilon < 0.0:
        raise DomainError(f"epsilon must be nonnegative, got {cfg.epsilon}")
    if cfg.beta_i is not None and cfg.beta_i <= 0.0:
        raise DomainError(f"beta_i must be positive, got {cfg.beta_i}")
    if cfg.rho0 <= 0.0 or cfg.p0 <= 0.0:
        raise DomainError("rho0 and p0 must be positive")
    if cfg.r <= 0.0 or cfg.t <= 0.0:
        raise DomainError("r and t must be positive")
    if not 0.0 < cfg.beta_deg < 180.0 - cfg.alpha_deg:
        raise DomainError(
            f"beta_deg must lie in (0, 180 - alpha_deg), got {cfg.beta_deg}"
        )
    if not 0.0 < cfg.xi_min < 1.0:
        raise DomainError(f"xi_min must lie in (0, 1), got {cfg.xi_min}")
    if not 0.0 < cfg.btilde_sweep_max < 1.0:
        raise DomainError(f"btilde_sweep_max must lie in (0, 1), got {cfg.btilde_sweep_max}")
    for key in ("xi_count", "theta_count", "rprime_count", "thetaprime_count",
                "btilde_sweep_count"):
        if getattr(cfg, key) < 2:
            raise DomainError(f"{key} must be at least 2")
    for name, grid in (("beta_grid", cfg.beta_grid), ("btilde_grid", cfg.btilde_grid)):
        for v in grid:
            if not math.isfinite(v):
                raise DomainError(f"{name} entries must be finite")
    for bt in cfg.btilde_grid:
        if not 0.0 <= bt < 1.0:
            raise DomainError(f"btilde_grid entries must lie in [0, 1), got {bt}")
    return cfg


def parse_config(path: str | None = None, overrides: dict | None = None) -> RunConfig:
    """Build a validated RunConfig from an optional JSON file plus overrides.

    The file must hold one flat JSON object of scalars and arrays; overrides
    win over file values.
    """
    merged: dict = {}
    if path is not None:
        try:
            with open(path, "r", encoding="utf-8") as fh:
                data = json.load(fh)
        except OSError as exc:
            raise DomainError(f"cannot read config file {path}: {exc}") from exc
        except json.JSONDecodeError as exc:
            raise DomainError(f"config file {path} is not valid JSON: {exc}") from exc
        if not isinstance(data, dict):
            raise DomainError("config file must hold a JSON object")
        merged.update(data)
    if overrides:
        merged.update(overrides)
    cfg = RunConfig()
    for key, value in merged.items():
        setattr(cfg, key, _coerce(key, value))
    return validate_config(cfg)
