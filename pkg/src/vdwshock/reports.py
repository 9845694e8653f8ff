"""Deterministic renderers for the batch commands (CSV and JSON payloads)."""

from __future__ import annotations

import json
import math

from . import inner_singular, linear_acoustics, nonlinear_front, regular_reflection
from .config import RunConfig
from .errors import DomainError
from .table_fixture import fixture_value
from .thermo import GasModel, reference_constants


def fmt(value) -> str:
    """CSV cell formatting: 12 significant digits, empty for missing values."""
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, int):
        return str(value)
    if isinstance(value, str):
        return value
    s = format(float(value), ".12g")
    return "0" if s == "-0" else s


def csv_text(header: list[str], rows: list[list]) -> str:
    lines = [",".join(header)]
    lines.extend(",".join(fmt(cell) for cell in row) for row in rows)
    return "\n".join(lines) + "\n"


def json_text(payload) -> str:
    return json.dumps(payload, sort_keys=True, indent=2) + "\n"


def _linspace(lo: float, hi: float, count: int) -> list[float]:
    if count == 1:
        return [lo]
    step = (hi - lo) / (count - 1)
    return [lo + step * i for i in range(count)]


def render_criterion(cfg: RunConfig) -> str:
    """Detachment-criterion report for one (beta_i, gamma, btilde) as JSON."""
    gas = GasModel(gamma=cfg.gamma, btilde=cfg.btilde)
    beta_i = cfg.resolved_beta_i()
    rep = regular_reflection.criterion(beta_i, gas)
    payload = {
        "beta_i": beta_i,
        "gamma": cfg.gamma,
        "btilde": cfg.btilde,
        "admissible": rep.admissible,
        "upper_beta": rep.upper_beta,
        "h0": rep.cubic.h0 if rep.cubic else None,
        "h1": rep.cubic.h1 if rep.cubic else None,
        "h2": rep.cubic.h2 if rep.cubic else None,
        "h3": rep.cubic.h3 if rep.cubic else None,
        "m": rep.cubic.m if rep.cubic else None,
        "n": rep.cubic.n if rep.cubic else None,
        "x_star": rep.x_star,
        "J": rep.J,
        "phi_star_rad": rep.phi_star,
        "phi_star_deg": math.degrees(rep.phi_star) if rep.phi_star is not None else None,
    }
    return json_text(payload)


def render_table(cfg: RunConfig) -> str:
    """Threshold grid with a side-by-side fixture-comparison column as CSV."""
    grid = regular_reflection.table_generate(cfg.beta_grid, cfg.btilde_grid, cfg.gamma)
    rows = []
    for beta in cfg.beta_grid:
        for bt in cfg.btilde_grid:
            rep = grid[(beta, bt)]
            fix = fixture_value(beta, bt)
            j = rep.J if rep.admissible else None
            diff = abs(j - fix) if (j is not None and fix is not None) else None
            phi_deg = math.degrees(rep.phi_star) if rep.admissible else None
            rows.append([beta, bt, rep.admissible, j, phi_deg, fix, diff])
    header = ["beta_i", "btilde", "admissible", "J", "phi_star_deg", "fixture_J", "abs_diff"]
    return csv_text(header, rows)


def render_field(cfg: RunConfig) -> str:
    """First-order diffraction density over a (xi/kappa0, theta) grid as CSV."""
    gas = GasModel(gamma=cfg.gamma, btilde=cfg.btilde)
    ref = reference_constants(cfg.rho0, cfg.p0, gas)
    alpha = cfg.alpha
    rows = []
    for sigma in _linspace(cfg.xi_min, 1.0, cfg.xi_count):
        for theta in _linspace(alpha, math.pi, cfg.theta_count):
            sample = linear_acoustics.diffracted_density_xi(sigma, theta, alpha, ref)
            rows.append(
                [sigma, math.degrees(theta), sample.region.region, sample.rho1,
                 sample.formula_tag]
            )
    header = ["xi_over_kappa0", "theta", "region", "rho1", "formula_tag"]
    return csv_text(header, rows)


def render_front(cfg: RunConfig) -> str:
    """Covolume sweep of the front quantities (gradient jump, locus, strength)."""
    alpha = cfg.alpha
    beta_angle = cfg.beta_angle
    if beta_angle <= alpha:
        raise DomainError(
            "front command needs beta_deg > alpha_deg (shock side of the sonic ray)"
        )
    rows = []
    for bt in _linspace(0.0, cfg.btilde_sweep_max, cfg.btilde_sweep_count):
        gas = GasModel(gamma=cfg.gamma, btilde=bt)
        ref = reference_constants(cfg.rho0, cfg.p0, gas)
        jump = nonlinear_front.gradient_jump(cfg.r, gas, cfg.rho0)
        locus = nonlinear_front.shock_locus(cfg.t, beta_angle, alpha, cfg.epsilon, gas, ref)
        strength = nonlinear_front.shock_strength(beta_angle, alpha, cfg.epsilon, gas)
        rows.append([bt, jump, locus / cfg.t, strength])
    header = ["btilde", "gradient_jump", "shock_locus_coeff", "shock_strength"]
    return csv_text(header, rows)


def render_inner(cfg: RunConfig) -> str:
    """Inner-region loci and piecewise fields over a (theta', r') grid as CSV.

    S_D uses the configured boundary label eta; the pointwise diffracted
    solution uses each point's own eta and is blank where undefined.
    """
    gas = GasModel(gamma=cfg.gamma, btilde=cfg.btilde)
    ref = reference_constants(cfg.rho0, cfg.p0, gas)
    geom = inner_singular.inner_geometry(gas, ref, theta0=cfg.theta0)
    rows = []
    for tp in _linspace(cfg.thetaprime_min, cfg.thetaprime_max, cfg.thetaprime_count):
        s_r = inner_singular.reflected_shock_locus(tp, geom)
        s_d = None
        if cfg.eta < 0.0:
            _, s_d = inner_singular.shock_loci(tp, cfg.eta, geom)
        for rp in _linspace(cfg.rprime_min, cfg.rprime_max, cfg.rprime_count):
            eta = None
            if tp != 0.0:
                eta = 2.0 * rp / (geom.kappa0 * tp * tp)
            ip = inner_singular.InnerPoint(r_prime=rp, theta_prime=tp, eta=eta)
            u_ref = inner_singular.inner_weak_solution(ip, geom, "reflected")
            u_dif = None
            if eta is not None and eta < 0.0:
                u_dif = inner_singular.inner_weak_solution(ip, geom, "diffracted")
            rows.append([tp, rp, s_r, s_d, geom.sonic_S, geom.sonic_R, u_ref, u_dif])
    header = [
        "theta_prime", "r_prime", "S_R", "S_D", "sonic_S", "sonic_R",
        "U_reflected", "U_diffracted",
    ]
    return csv_text(header, rows)
