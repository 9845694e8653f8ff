"""Release-gate verification checks and the machine-readable report.

Each check mirrors one acceptance criterion at its stated tolerance; the
fixture comparison is emitted as a non-gating report entry.  The trends check
is expected to fail honestly: the threshold computed from the printed cubic
is not strictly increasing in the density ratio at the top of the ideal-gas
column (the stored fixture shows the same dip), and that failure propagates
into the exit-code clause of the determinism check.  Neither is masked.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass

from . import inner_singular, linear_acoustics, nonlinear_front
from .config import RunConfig
from .errors import DomainError
from .geometry import reflected_line
from .linear_acoustics import atan_zero_pi
from .regular_reflection import (
    F_eval,
    beta_r_from_angles,
    criterion,
    cubic_coefficients,
    cubic_value,
    solve_regular_reflection,
    table_generate,
    tan_phi_r_branches,
    _bisection_root,
    _closed_form_root,
)
from .shock_relations import IncidentShockInput
from .table_fixture import fixture_is_blank, fixture_value
from .thermo import GasModel, reference_constants

PASS = "pass"
FAIL = "fail"
DOCUMENTED = "discrepancy-documented"

_SEED = 20260811


@dataclass(frozen=True)
class CheckResult:
    name: str
    status: str
    residual: float | None
    tolerance: float | None
    note: str


def _result(name, ok, residual, tolerance, note_ok, note_bad) -> CheckResult:
    return CheckResult(
        name=name,
        status=PASS if ok else FAIL,
        residual=residual,
        tolerance=tolerance,
        note=note_ok if ok else note_bad,
    )


def check_cubic_self_consistency() -> CheckResult:
    """Root residual, root-method agreement and coefficient-sum identity."""
    betas = [1.1 + 0.1 * i for i in range(29)]
    btildes = [0.05 * i for i in range(15)]
    gammas = [1.1, 1.4, 5.0 / 3.0]
    worst_res = worst_root = worst_sum = 0.0
    cells = 0
    for g in gammas:
        for bt in btildes:
            gas = GasModel(g, bt)
            upper = (g + 1.0) / (g - 1.0 + 2.0 * bt)
            for beta in betas:
                if not 1.0 < beta <= upper * (1.0 + 1e-12):
                    continue
                cells += 1
                cubic = cubic_coefficients(beta, gas)
                x_c = _closed_form_root(cubic)
                x_b = _bisection_root(cubic)
                worst_root = max(worst_root, abs(x_c - x_b))
                scale = cubic.h3 * x_c ** 3
                worst_res = max(worst_res, abs(cubic_value(cubic, x_c)) / scale)
                h_sum = cubic.h0 + cubic.h1 + cubic.h2 + cubic.h3
                f0 = F_eval(beta, 0.0, gas)
                worst_sum = max(worst_sum, abs(h_sum - f0) / abs(f0))
    ok = worst_res <= 1e-9 and worst_root <= 1e-10 and worst_sum <= 1e-12
    note = (
        f"{cells} admissible cells; max |F(x*)|/(h3 x*^3)={worst_res:.3e}, "
        f"max root disagreement={worst_root:.3e}, max coefficient-sum error={worst_sum:.3e}"
    )
    return _result(
        "cubic_self_consistency", ok, max(worst_res, worst_root, worst_sum), 1e-9,
        note, note,
    )


def _default_table():
    cfg = RunConfig()
    return table_generate(cfg.beta_grid, cfg.btilde_grid, 1.4), cfg


def check_table_trends() -> CheckResult:
    """Blank pattern against the fixture plus strict grid monotonicity."""
    grid, cfg = _default_table()
    blank_mismatch = []
    for beta in cfg.beta_grid:
        for bt in cfg.btilde_grid:
            if (not grid[(beta, bt)].admissible) != fixture_is_blank(beta, bt):
                blank_mismatch.append((beta, bt))
    col_viol = []
    for bt in cfg.btilde_grid:
        vals = [(b, grid[(b, bt)].J) for b in cfg.beta_grid if grid[(b, bt)].admissible]
        for i in range(1, len(vals)):
            if vals[i][1] <= vals[i - 1][1]:
                col_viol.append((vals[i - 1][0], vals[i][0], bt))
    row_viol = []
    for beta in cfg.beta_grid:
        vals = [(bt, grid[(beta, bt)].J) for bt in cfg.btilde_grid if grid[(beta, bt)].admissible]
        for i in range(1, len(vals)):
            if vals[i][1] <= vals[i - 1][1]:
                row_viol.append((beta, vals[i - 1][0], vals[i][0]))
    ok = not blank_mismatch and not col_viol and not row_viol
    if ok:
        note = "blank pattern matches fixture; rows and columns strictly monotone"
    else:
        note = (
            f"blank mismatches: {blank_mismatch or 'none'}; "
            f"column (beta-direction) violations: {col_viol or 'none'}; "
            f"row (btilde-direction) violations: {row_viol or 'none'}. "
            "The beta-direction dip at the top of the btilde=0 column is a property "
            "of the printed cubic itself (the stored fixture dips at the same corner); "
            "it is reported, not patched."
        )
    return _result("table_trends", ok, float(len(col_viol) + len(row_viol) + len(blank_mismatch)),
                   0.0, note, note)


def check_table_fixture_comparison() -> CheckResult:
    """Absolute-value comparison against the stored fixture (non-gating)."""
    grid, cfg = _default_table()
    worst = 0.0
    cells = 0
    for beta in cfg.beta_grid:
        for bt in cfg.btilde_grid:
            rep = grid[(beta, bt)]
            fix = fixture_value(beta, bt)
            if rep.admissible and fix is not None:
                cells += 1
                worst = max(worst, abs(rep.J - fix))
    return CheckResult(
        name="table_fixture_comparison",
        status=DOCUMENTED,
        residual=worst,
        tolerance=None,
        note=(
            f"max |J - fixture| = {worst:.4f} over {cells} populated cells; the fixture's "
            "producing formula/parameters are unstated and do not match the printed "
            "cubic at any gamma, so only the blank pattern is gated"
        ),
    )


def check_branch_limits() -> CheckResult:
    """Vanishing-strength limits of the two reflected-angle branches."""
    beta = 1.0 + 1e-8
    worst = 0.0
    for gas in (GasModel(1.4, 0.0), GasModel(1.4, 0.3)):
        for deg in (15.0, 30.0, 45.0, 60.0):
            t = math.tan(math.radians(deg))
            minus, plus, _ = tan_phi_r_branches(beta, t, gas)
            worst = max(worst, abs(minus + t), abs(plus))
    ok = worst <= 1e-6
    note = f"max branch-limit deviation {worst:.3e} at beta_i = 1 + 1e-8"
    return _result("branch_limits", ok, worst, 1e-6, note, note)


def _scan_oracle_minus_branch(beta: float, t: float, gas: GasModel, n: int = 1500) -> float:
    """Most negative root of the wedge condition by dense scan plus bisection.

    Composes the reflected ratio with the deflection relation directly, so it
    is independent of both the discriminant formula and the printed deflection
    elimination.
    """
    g, bt = gas.gamma, gas.btilde
    tan_di = (beta - 1.0) * t / (1.0 + beta * t * t)

    def gfun(r):
        br = beta_r_from_angles(beta, t, r, gas)
        return tan_di + (br - 1.0) * r / (1.0 + br * r * r)

    x = 1.0 + beta * t * t
    a_coef = (g + 1.0 - 2.0 * bt) * beta - (g - 1.0)
    qa = x * a_coef
    qb = 2.0 * t * (1.0 - bt * beta) * (1.0 + beta * beta * t * t)
    qc = (beta - 1.0) * ((g - 1.0 + 2.0 * bt * beta) * beta * t * t + (g + 1.0))
    bound = 1.0 + (abs(qb) + abs(qc)) / qa  # Cauchy bound on the quadratic roots
    roots = []
    prev_r = -bound
    try:
        prev_g = gfun(prev_r)
    except DomainError:
        prev_g = math.nan
    for i in range(1, n + 1):
        r = -bound + bound * i / n  # scan up to 0
        try:
            cur_g = gfun(r)
        except DomainError:
            prev_r, prev_g = r, math.nan
            continue
        if math.isfinite(prev_g) and prev_g * cur_g <= 0.0 and prev_g != cur_g:
            lo, hi = prev_r, r
            glo = prev_g
            for _ in range(100):
                mid = 0.5 * (lo + hi)
                if mid == lo or mid == hi:
                    break
                gm = gfun(mid)
                if glo * gm <= 0.0:
                    hi = mid
                else:
                    lo, glo = mid, gm
            root = 0.5 * (lo + hi)
            if abs(gfun(root)) < 1e-8:  # reject pole crossings
                roots.append(root)
        prev_r, prev_g = r, cur_g
    if not roots:
        raise AssertionError("scan oracle found no root")
    return min(roots)


def check_reflection_solve() -> CheckResult:
    """Random regular-reflection solves against the dense-scan oracle."""
    rng = random.Random(_SEED)
    worst_cancel = worst_oracle = 0.0
    n_ok = 0
    attempts = 0
    while n_ok < 200 and attempts < 2000:
        attempts += 1
        g = rng.uniform(1.1, 5.0 / 3.0)
        bt = rng.uniform(0.0, 0.7)
        gas = GasModel(g, bt)
        upper = (g + 1.0) / (g - 1.0 + 2.0 * bt)
        beta = rng.uniform(1.0 + 1e-3, min(upper * 0.999, 4.0))
        if beta <= 1.0:
            continue
        rep = criterion(beta, gas)
        phi_star = rep.phi_star
        phi_hi = math.pi / 2.0 - 0.02
        if phi_star >= phi_hi:
            continue
        phi = phi_star + rng.uniform(0.0, 1.0) * (phi_hi - phi_star)
        alpha = rng.uniform(0.05, 1.5)
        inp = IncidentShockInput(beta_i=beta, phi_i=phi)
        sol = solve_regular_reflection(inp, alpha, gas)
        t = math.tan(phi)
        tan_di = (beta - 1.0) * t / (1.0 + beta * t * t)
        worst_cancel = max(worst_cancel, abs(tan_di + math.tan(sol.delta_r)))
        oracle = _scan_oracle_minus_branch(beta, t, gas)
        closed = math.tan(sol.phi_r)
        worst_oracle = max(
            worst_oracle, abs(closed - oracle) / max(1.0, abs(closed))
        )
        upper_r = (g + 1.0) / (g - 1.0 + 2.0 * bt * beta)
        if not 1.0 - 1e-12 <= sol.beta_r <= upper_r * (1.0 + 1e-12):
            return CheckResult(
                "reflection_solve", FAIL, None, 1e-10,
                f"reflected ratio bound violated at beta={beta}, gas={gas}",
            )
        n_ok += 1
    ok = n_ok == 200 and worst_cancel <= 1e-10 and worst_oracle <= 1e-9
    note = (
        f"{n_ok} solves; max deflection-cancel residual {worst_cancel:.3e}, "
        f"max closed-form vs scan-oracle deviation {worst_oracle:.3e}"
    )
    return _result("reflection_solve", ok, max(worst_cancel, worst_oracle), 1e-9, note, note)


def check_geometry_incidence() -> CheckResult:
    """Reflected-line endpoints and covolume monotonicity of the line."""
    rng = random.Random(_SEED + 1)
    worst = 0.0
    mono_ok = True
    for _ in range(50):
        alpha = rng.uniform(0.05, 1.5)
        g = rng.uniform(1.05, 5.0 / 3.0)
        bt = rng.uniform(0.0, 0.7)
        ref = reference_constants(1.0, 1.0, GasModel(g, bt))
        za = reflected_line(alpha, alpha, ref)
        zb = reflected_line(2.0 * alpha, alpha, ref)
        worst = max(
            worst,
            abs(za - ref.a0 / math.cos(alpha)) / (ref.a0 / math.cos(alpha)),
            abs(zb - ref.a0) / ref.a0,
        )
        theta = rng.uniform(alpha, 2.0 * alpha)
        db = 1e-5
        if bt - db <= 0.0 or bt + db >= 1.0:
            continue
        z_hi = reflected_line(theta, alpha, reference_constants(1.0, 1.0, GasModel(g, bt + db)))
        z_lo = reflected_line(theta, alpha, reference_constants(1.0, 1.0, GasModel(g, bt - db)))
        if (z_hi - z_lo) / (2.0 * db) <= 0.0:
            mono_ok = False
    ok = worst <= 1e-12 and mono_ok
    note = f"max endpoint deviation {worst:.3e}; d(zeta*)/d(btilde) > 0 {'held' if mono_ok else 'VIOLATED'}"
    return _result("geometry_incidence", ok, worst, 1e-12, note, note)


def _ideal_gas_density(sigma: float, theta: float, alpha: float) -> float:
    """Independent ideal-gas specialization of the diffraction field."""
    mu = 0.5 * math.pi / (math.pi - alpha)
    s = sigma / (1.0 + math.sqrt(max(0.0, 1.0 - sigma * sigma)))
    sm = s ** mu
    s2m = sm * sm
    beta = theta - alpha
    t1 = atan_zero_pi(
        (1.0 - s2m) * math.cos(mu * math.pi),
        -(1.0 + s2m) * math.sin(mu * math.pi) + 2.0 * sm * math.cos(mu * beta),
    )
    t2 = atan_zero_pi(
        -(1.0 - s2m) * math.cos(mu * math.pi),
        (1.0 + s2m) * math.sin(mu * math.pi) + 2.0 * sm * math.cos(mu * beta),
    )
    return 1.0 + (t1 + t2) / math.pi


def check_linear_field() -> CheckResult:
    """Center/arc limits, interior-equation convergence and ideal reduction."""
    worst_center = worst_arc = worst_ideal = 0.0
    min_order = math.inf
    for alpha_deg in (30.0, 45.0, 60.0):
        alpha = math.radians(alpha_deg)
        gas = GasModel(1.4, 0.0)
        ref = reference_constants(1.0, 1.0, gas)
        s = 1e-8
        sigma = 2.0 * s / (1.0 + s * s)
        for beta in (0.0, 0.5 * (math.pi - alpha) - alpha * 0.3):
            theta = alpha + max(0.0, beta)
            val = linear_acoustics.diffracted_density_xi(sigma, theta, alpha, ref).rho1
            worst_center = max(worst_center, abs(val - math.pi / (math.pi - alpha)))
        s = 1.0 - 1e-6
        sigma = 2.0 * s / (1.0 + s * s)
        bd = linear_acoustics.diffracted_density_xi(sigma, alpha + alpha / 2.0, alpha, ref).rho1
        theta_bc = alpha + alpha + 0.55 * (math.pi - 2.0 * alpha)
        bc = linear_acoustics.diffracted_density_xi(sigma, theta_bc, alpha, ref).rho1
        worst_arc = max(worst_arc, abs(bd - 2.0), abs(bc - 1.0))

    alpha = math.pi / 4.0
    for bt in (0.0, 0.3):
        ref = reference_constants(1.0, 1.0, GasModel(1.4, bt))

        def f(xi, th, _ref=ref, _a=alpha):
            return linear_acoustics.diffracted_density_xi(xi / _ref.kappa0, th, _a, _ref).rho1

        points = [(0.5, 1.1), (0.5, 1.9), (0.3, 1.4), (0.7, 2.2), (0.62, 2.8)]
        for sig, th in points:
            xi = sig * ref.kappa0
            res = [
                abs(linear_acoustics.density_pde_residual(f, xi, th, h, ref))
                for h in (1e-2, 5e-3, 2.5e-3)
            ]
            for i in range(2):
                min_order = min(min_order, math.log2(res[i] / res[i + 1]))

    ref0 = reference_constants(1.0, 1.0, GasModel(1.4, 0.0))
    for i in range(1, 10):
        for j in range(10):
            sigma = i / 10.0
            theta = alpha + (math.pi - alpha) * j / 9.0
            ours = linear_acoustics.diffracted_density_xi(sigma, theta, alpha, ref0).rho1
            worst_ideal = max(worst_ideal, abs(ours - _ideal_gas_density(sigma, theta, alpha)))

    ok = (
        worst_center <= 1e-6
        and worst_arc <= 1e-3
        and min_order >= 1.9
        and worst_ideal <= 1e-14
    )
    note = (
        f"center dev {worst_center:.3e} (tol 1e-6), arc dev {worst_arc:.3e} (tol 1e-3), "
        f"min FD order {min_order:.3f} (need >= 1.9), ideal-gas dev {worst_ideal:.3e}"
    )
    return _result("linear_field", ok, worst_center, 1e-6, note, note)


def check_front_corrections() -> CheckResult:
    """Phase-root residual, covolume trends and front continuity."""
    rng = random.Random(_SEED + 2)
    worst_phase = 0.0
    for _ in range(200):
        g = rng.uniform(1.1, 5.0 / 3.0)
        bt = rng.uniform(0.0, 0.7)
        gas = GasModel(g, bt)
        eps = rng.uniform(0.0, 0.3)
        c = rng.uniform(-2.0, 2.0)
        front = rng.uniform(0.5, 3.0)
        r = rng.uniform(0.1, front * 0.999)
        phi = front - r
        try:
            psi = nonlinear_front.psi_root(phi, r, c, eps, gas)
        except DomainError:
            continue
        res = psi - phi - eps * c * (g + 1.0) * math.sqrt(psi * r) / (1.0 - bt)
        worst_phase = max(worst_phase, abs(res) / max(abs(psi), abs(phi), 1e-30))

    alpha = math.radians(45.0)
    beta_sh = math.radians(67.5)
    eps = 0.1
    jumps, loci, strengths = [], [], []
    for i in range(15):
        bt = 0.7 * i / 14.0
        gas = GasModel(1.4, bt)
        ref = reference_constants(1.0, 1.0, gas)
        jumps.append(nonlinear_front.gradient_jump(1.0, gas, 1.0))
        loci.append(nonlinear_front.shock_locus(1.0, beta_sh, alpha, eps, gas, ref))
        strengths.append(nonlinear_front.shock_strength(beta_sh, alpha, eps, gas))
    trends_ok = (
        all(jumps[i + 1] < jumps[i] for i in range(14))
        and all(loci[i + 1] > loci[i] for i in range(14))
        and all(strengths[i + 1] > strengths[i] for i in range(14))
    )

    worst_cont = 0.0
    beta_r_angle = alpha / 2.0
    for bt in (0.0, 0.3):
        gas = GasModel(1.4, bt)
        ref = reference_constants(1.0, 1.0, gas)
        st2 = linear_acoustics.state2_expansion(beta_r_angle + alpha, alpha, ref)
        front = ref.c0 * ref.kappa0 * 1.0
        inside = nonlinear_front.rarefaction_profile(
            front * (1.0 - 1e-13), 1.0, beta_r_angle, alpha, eps, gas, ref, st2
        )
        outside = nonlinear_front.rarefaction_profile(
            front, 1.0, beta_r_angle, alpha, eps, gas, ref, st2
        )
        worst_cont = max(worst_cont, max(abs(a - b) for a, b in zip(inside, outside)))

    ok = worst_phase <= 1e-12 and trends_ok and worst_cont <= 1e-10
    note = (
        f"max phase residual {worst_phase:.3e} (tol 1e-12); covolume trends "
        f"{'held' if trends_ok else 'VIOLATED'}; front continuity gap {worst_cont:.3e} (tol 1e-10)"
    )
    return _result("front_corrections", ok, worst_phase, 1e-12, note, note)


def check_inner_region() -> CheckResult:
    """Sonic layout, parabola asymptote, boundary recovery, residual identities."""
    gas = GasModel(1.4, 0.0)
    ref = reference_constants(1.0, 1.0, gas)
    geom = inner_singular.inner_geometry(gas, ref)
    gap_ok = geom.vartheta == 1.2 and (geom.sonic_R - geom.sonic_S) == geom.vartheta

    tp = 1e3
    asym = inner_singular.reflected_shock_locus(tp, geom) / (0.5 * geom.kappa0 * tp * tp)
    asym_ok = abs(asym - 1.0) <= 1e-3

    k0 = geom.kappa0
    recov = []
    for eta, want in ((2.0, 1.0), (0.5, 2.0), (-1.0, 1.25)):
        rp = eta * k0 * tp * tp / 2.0
        ip = inner_singular.InnerPoint(rp, tp, eta)
        if eta > 1.0:
            got = inner_singular.inner_weak_solution(ip, geom, "reflected")
        elif eta > 0.0:
            got = inner_singular.expansion_fan(eta * k0 / 2.0, tp, geom)
        else:
            got = inner_singular.inner_weak_solution(ip, geom, "diffracted")
        recov.append(abs(got - want))
    recov_ok = max(recov) <= 1e-6

    _, vertex = inner_singular.inner_rh_residual(geom, geom.theta0, 1.0, 2.0, 0.0)
    vertex_ok = abs(vertex) <= 1e-12

    worst_doc = 0.0
    for bt in (0.0, 0.3):
        gas_b = GasModel(1.4, bt)
        ref_b = reference_constants(1.0, 1.0, gas_b)
        geom_b = inner_singular.inner_geometry(gas_b, ref_b)
        for d in (1.0, 2.5):
            _, res = inner_singular.inner_rh_residual(geom_b, geom_b.theta0 + d, 1.0, 2.0, 0.0)
            expect = -2.0 * geom_b.kappa0 ** 2 * d * d
            worst_doc = max(worst_doc, abs(res - expect))
        f = math.sqrt
        fp = lambda x: 0.5 / math.sqrt(x)  # noqa: E731
        fpp = lambda x: -0.25 * x ** -1.5  # noqa: E731
        for x in (0.5, 1.0, 2.0):
            full, sub = inner_singular.similarity_residual(f, fp, fpp, x, 1.3, geom_b)
            expect = geom_b.kappa0 * (1.0 - geom_b.vartheta) / (2.0 * x)
            worst_doc = max(worst_doc, abs(full - expect), abs(sub))
        tpg = 1.3
        gap_measured = abs(
            inner_singular.expansion_fan(2.0 * geom_b.vartheta / tpg ** 2, tpg, geom_b) - 2.0
        )
        gap_expected = abs(tpg * math.sqrt(2.0 * geom_b.vartheta) - 2.0)
        worst_doc = max(worst_doc, abs(gap_measured - gap_expected))
    doc_ok = worst_doc <= 1e-9

    ok = gap_ok and asym_ok and recov_ok and vertex_ok and doc_ok
    note = (
        f"sonic gap exact: {gap_ok}; parabola asymptote dev {abs(asym - 1.0):.3e} (tol 1e-3); "
        f"boundary recovery dev {max(recov):.3e} (tol 1e-6); vertex residual {abs(vertex):.3e} "
        f"(tol 1e-12); documented-residual identity dev {worst_doc:.3e} (tol 1e-9)"
    )
    return _result("inner_region", ok, worst_doc, 1e-9, note, note)


def _render_all_data_commands(cfg: RunConfig) -> dict[str, str]:
    from . import reports

    return {
        "criterion": reports.render_criterion(cfg),
        "table": reports.render_table(cfg),
        "field": reports.render_field(cfg),
        "front": reports.render_front(cfg),
        "inner": reports.render_inner(cfg),
    }


def check_cli_determinism(other_results: list[CheckResult]) -> CheckResult:
    """Byte-identical reruns of every command, plus the zero-fail exit clause."""
    from . import reports

    cfg = RunConfig()
    first = _render_all_data_commands(cfg)
    second = _render_all_data_commands(cfg)
    nondet = sorted(name for name in first if first[name] != second[name])
    check_payload_a = reports.json_text([r.__dict__ for r in other_results])
    check_payload_b = reports.json_text([r.__dict__ for r in other_results])
    if check_payload_a != check_payload_b:
        nondet.append("check")
    fails = sorted(r.name for r in other_results if r.status == FAIL)
    ok = not nondet and not fails
    note_parts = []
    note_parts.append(
        "all command outputs byte-identical across reruns"
        if not nondet
        else f"non-deterministic commands: {nondet}"
    )
    note_parts.append(
        "zero fail entries"
        if not fails
        else f"check cannot exit 0 while these checks fail: {fails}"
    )
    note = "; ".join(note_parts)
    return _result("cli_determinism", ok, float(len(nondet) + len(fails)), 0.0, note, note)


def run_all_checks() -> list[CheckResult]:
    """All release-gate checks in their criterion order."""
    results = [
        check_cubic_self_consistency(),
        check_table_trends(),
        check_branch_limits(),
        check_reflection_solve(),
        check_geometry_incidence(),
        check_linear_field(),
        check_front_corrections(),
        check_inner_region(),
    ]
    fixture = check_table_fixture_comparison()
    determinism = check_cli_determinism(results)
    return results + [determinism, fixture]


def report_payload(results: list[CheckResult]) -> dict:
    return {
        "checks": [
            {
                "name": r.name,
                "status": r.status,
                "residual": r.residual,
                "tolerance": r.tolerance,
                "note": r.note,
            }
            for r in results
        ],
        "counts": {
            "pass": sum(1 for r in results if r.status == PASS),
            "fail": sum(1 for r in results if r.status == FAIL),
            "discrepancy-documented": sum(1 for r in results if r.status == DOCUMENTED),
        },
    }
