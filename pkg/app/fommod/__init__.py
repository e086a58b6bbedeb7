"""
Figure-of-merit module.

Closed-form cooperativities and coupling rates of resonators and trapped pulses:

    g/kappa   = sqrt(4 pi hbar c d_eff^2/(n^3 eps0 lambda^4) * Q_a Q_b/V)   (chi(2) cavity)
    chi/kappa = 3 pi hbar c chi_eff/(2 n eps0 lambda^4) * Q_a/V_k          (Kerr cavity)
    r         = v_g sqrt(hbar omega_b0 eta0)
    g_cw      = r/sqrt(T),   g_trap = pi r/(4 sqrt(2 tau0)),   kappa = alpha v_g

Attributes:
    batch_columns (list): Columns of the platform table.
"""

# Import native packages
import logging

# Import pypi packages
import numpy as np

# Import custom packages
from core.constants import c, epsilon_0, hbar, Z0
from datamod.platforms import MissingFieldError
from fommod.shg import g_from_shg, opo_threshold, p_sat, resolve_kappas

logger = logging.getLogger(__name__)

def kappa_from_q(omega,Q):
    """
    Decay rate omega/Q (rad/s).
    """
    return omega/Q

def g_chi2(p):
    """
    Single-mode chi(2) coupling rate of a cavity (rad/s).
    """
    p.require("lambda_fh","n","d_eff","V_tilde")

    return 4*p.d_eff/p.lambda_fh**3*np.sqrt(2*np.pi**3*hbar*c**3/(p.n**3*epsilon_0*p.V_tilde))

def kappa_cavity(p):
    """
    Geometric-mean decay rate (2 pi c/lambda) sqrt(2/(Q_a Q_b)) of a cavity.
    """
    p.require("Q_a","Q_b")

    return np.sqrt(kappa_from_q(p.omega_a0,p.Q_a)*kappa_from_q(p.omega_b0,p.Q_b))

def g_over_kappa_chi2(p):
    """
    Cooperativity g/kappa of a chi(2) cavity.

    Args:
        p (datamod.platforms.Platform): Needs lambda_fh, n, d_eff, Q_a, Q_b and V_tilde.

    Returns:
        (float): g/sqrt(kappa_a kappa_b).
    """
    return g_chi2(p)/kappa_cavity(p)

def chi_over_kappa_kerr(p):
    """
    Cooperativity chi/kappa of a Kerr cavity.

    Args:
        p (datamod.platforms.Platform): Needs lambda_fh, n, chi_eff, Q_a and V_tilde.

    Returns:
        (float): The cooperativity.
    """
    p.require("lambda_fh","n","chi_eff","Q_a","V_tilde")

    return 3*np.pi*hbar*c*p.chi_eff/(2*p.n*epsilon_0*p.lambda_fh**4)*p.Q_a/p.V_tilde

def r_from_eta0(p):
    """
    Parametric interaction strength v_g sqrt(hbar omega_b0 eta0) (s^-1/2).
    """
    p.require("eta0","n_g","lambda_fh")

    return p.v_g*np.sqrt(hbar*p.omega_b0*p.eta0)

def r_from_mode_area(p):
    """
    Parametric interaction strength from the normalized mode area (s^-1/2).
    """
    p.require("d_eff","n","n_g","lambda_fh","A_tilde")

    return 4*p.d_eff/p.n**2*np.sqrt(2*np.pi**3*p.n_g*hbar*c**2/(epsilon_0*p.lambda_fh**5*p.A_tilde))

def eta0_from_mode_area(p):
    """
    Normalized SHG efficiency of a waveguide from its mode area (W^-1 m^-2).
    """
    p.require("d_eff","n","n_g","lambda_fh","A_tilde")

    return 8*np.pi**2*Z0*p.n_g**3*p.d_eff**2/(p.lambda_fh**4*p.n**4*p.A_tilde)

def platform_r(p):
    """
    r from eta0 when given, from the mode area otherwise.
    """
    if p.eta0 is not None:
        return r_from_eta0(p)

    return r_from_mode_area(p)

def g_cw(p):
    """
    Coupling of the CW ring modes r/sqrt(T) (rad/s).
    """
    p.require("T_rt")

    return platform_r(p)/np.sqrt(p.T_rt)

def g_trap(p):
    """
    Coupling of the trapped pulses pi r/(4 sqrt(2 tau0)) (rad/s).
    """
    p.require("tau0")

    return np.pi*platform_r(p)/(4*np.sqrt(2*p.tau0))

def trap_enhancement(T_rt,tau0):
    """
    g_trap/g_cw = (pi/(4 sqrt(2))) sqrt(T/tau0).
    """
    return np.pi/(4*np.sqrt(2))*np.sqrt(T_rt/tau0)

def kappa_from_loss(p):
    """
    Decay rate alpha v_g of a propagation loss (rad/s).
    """
    p.require("alpha_loss","n_g")

    return p.alpha_loss*p.v_g

def platform_kappas(p):
    """
    Decay rates of a platform, from the record, the Q factors or the loss.
    """
    if p.kappa_a is not None or p.kappa_b is not None:
        return resolve_kappas(None,p.kappa_a,p.kappa_b,p.kappa_a_oc,p.kappa_b_oc)
    if p.alpha_loss is not None and p.n_g is not None:
        return resolve_kappas(kappa_from_loss(p),kappa_a_oc=p.kappa_a_oc,kappa_b_oc=p.kappa_b_oc)
    if p.Q_a is not None and p.Q_b is not None and p.lambda_fh is not None:
        return resolve_kappas(None,kappa_from_q(p.omega_a0,p.Q_a),kappa_from_q(p.omega_b0,p.Q_b),p.kappa_a_oc,p.kappa_b_oc)
    raise MissingFieldError(f"Platform {p.name!r} lacks decay rates, Q factors or alpha_loss")

def g_shg(p):
    """
    Coupling rate inferred from a measured cavity SHG efficiency (rad/s).
    """
    p.require("eta_norm")

    return g_from_shg(p.eta_norm,p.omega_a0,platform_kappas(p))

def p_th_trap(p):
    """
    OPO threshold of the trapped-pulse coupling (W).
    """
    return opo_threshold(g_trap(p),p.omega_b0,platform_kappas(p))

def p_sat_trap(p):
    """
    SHG saturation power of the trapped-pulse coupling (W).
    """
    return p_sat(p_th_trap(p))

def g_trap_over_kappa(p):
    """
    Trapped-pulse cooperativity.
    """
    return g_trap(p)/platform_kappas(p).kappa

def _per_2pi(function):
    return lambda p: function(p)/(2*np.pi)

def evaluate_platform(p):
    """
    Every figure of merit computable from a record.

    Args:
        p (datamod.platforms.Platform): The record.

    Returns:
        row (list): Name followed by one cell per column of batch_columns, None when the
        record lacks the inputs.
    """
    row = [p.name]
    for column, function in batch_columns:
        try:
            row.append(float(function(p)))
        except MissingFieldError as err:
            logger.debug(f"{column}: {err}")
            row.append(None)

    return row

def evaluate_platforms(platforms):
    """
    Rows of the platform table.

    Returns:
        headers (list): Column names.
        rows (list): One row per platform.
    """
    logger.info(f"###### Evaluating {len(platforms)} platforms ######")
    headers = ["name"]+[column for column, _ in batch_columns]

    return headers, [evaluate_platform(p) for p in platforms]

batch_columns = [("g_over_kappa_chi2",g_over_kappa_chi2),
                 ("chi_over_kappa_kerr",chi_over_kappa_kerr),
                 ("r",platform_r),
                 ("g_cw_2pi",_per_2pi(g_cw)),
                 ("g_trap_2pi",_per_2pi(g_trap)),
                 ("kappa_2pi",_per_2pi(kappa_from_loss)),
                 ("g_trap_over_g_cw",lambda p: g_trap(p)/g_cw(p)),
                 ("g_trap_over_kappa",g_trap_over_kappa),
                 ("g_shg_2pi",_per_2pi(g_shg)),
                 ("p_th",p_th_trap),
                 ("p_sat",p_sat_trap)]
