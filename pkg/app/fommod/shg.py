"""
Conversions between the coupling rate and classical SHG / OPO measurements.

With total and outcoupling decay rates kappa_u and kappa_u_oc,

    eta_norm = 4 g^2/(hbar omega_a0) * kappa_b_oc/kappa_b^2 * (kappa_a_oc/kappa_a^2)^2,
    P_th     = hbar omega_b0 kappa_a^2 kappa_b^2/(g^2 kappa_b_oc),
    P_sat    = 4 P_th.
"""

# Import native packages
from dataclasses import dataclass
import logging

# Import pypi packages
import numpy as np

# Import custom packages
from core.constants import hbar

logger = logging.getLogger(__name__)

@dataclass(frozen=True)
class Kappas:
    """
    Decay rates of both harmonics (rad/s).

    Attributes:
        kappa_a (float): FH total rate.
        kappa_b (float): SH total rate.
        kappa_a_oc (float): FH outcoupling rate.
        kappa_b_oc (float): SH outcoupling rate.
    """
    kappa_a: float
    kappa_b: float
    kappa_a_oc: float
    kappa_b_oc: float

    def __post_init__(self):
        for name, value in vars(self).items():
            if not value > 0:
                raise ValueError(f"{name} must be positive, got {value}")
        if self.kappa_a_oc > self.kappa_a or self.kappa_b_oc > self.kappa_b:
            raise ValueError(f"Outcoupling rates ({self.kappa_a_oc}, {self.kappa_b_oc}) exceed the total rates ({self.kappa_a}, {self.kappa_b})")

    @property
    def kappa(self):
        """
        float: Geometric mean sqrt(kappa_a kappa_b).
        """
        return np.sqrt(self.kappa_a*self.kappa_b)

def resolve_kappas(kappa=None,kappa_a=None,kappa_b=None,kappa_a_oc=None,kappa_b_oc=None):
    """
    Complete the decay rates with kappa_a = kappa_b/2 and critical coupling.

    Args:
        kappa (float/None): Geometric mean rate, used when neither harmonic is given.
        kappa_a (float/None): FH total rate.
        kappa_b (float/None): SH total rate.
        kappa_a_oc (float/None): FH outcoupling rate, kappa_a/2 when None.
        kappa_b_oc (float/None): SH outcoupling rate, kappa_b/2 when None.

    Returns:
        (Kappas): The completed rates.

    Raises:
        ValueError: If no rate is given or an outcoupling rate exceeds its total.
    """
    if kappa_a is None and kappa_b is None:
        if kappa is None:
            raise ValueError("At least one of kappa, kappa_a, kappa_b is required")
        kappa_a, kappa_b = kappa/np.sqrt(2), kappa*np.sqrt(2)
    elif kappa_a is None:
        kappa_a = kappa_b/2
    elif kappa_b is None:
        kappa_b = 2*kappa_a
    kappa_a_oc = kappa_a/2 if kappa_a_oc is None else kappa_a_oc
    kappa_b_oc = kappa_b/2 if kappa_b_oc is None else kappa_b_oc

    return Kappas(kappa_a,kappa_b,kappa_a_oc,kappa_b_oc)

def eta_norm_from_g(g,omega_a0,kappas):
    """
    Cavity SHG efficiency P_out/P_in^2 (W^-1) for a coupling rate g (rad/s).
    """
    return 4*g**2/(hbar*omega_a0)*kappas.kappa_b_oc/kappas.kappa_b**2*(kappas.kappa_a_oc/kappas.kappa_a**2)**2

def g_from_shg(eta_norm,omega_a0,kappas):
    """
    Coupling rate from a measured cavity SHG efficiency.

    Args:
        eta_norm (float): P_out/P_in^2 (W^-1).
        omega_a0 (float): FH angular frequency (rad/s).
        kappas (Kappas): Decay rates.

    Returns:
        (float): g (rad/s).
    """
    if not eta_norm > 0:
        raise ValueError(f"eta_norm must be positive, got {eta_norm}")

    return np.sqrt(eta_norm*hbar*omega_a0*kappas.kappa_b**2*kappas.kappa_a**4/(4*kappas.kappa_b_oc*kappas.kappa_a_oc**2))

def opo_threshold(g,omega_b0,kappas):
    """
    OPO threshold power (W).

    Args:
        g (float): Coupling rate (rad/s).
        omega_b0 (float): SH angular frequency (rad/s).
        kappas (Kappas): Decay rates.

    Returns:
        (float): P_th, 2 hbar omega_b0 kappa_a^2 kappa_b/g^2 at critical coupling.
    """
    if not g > 0:
        raise ValueError(f"Coupling rate must be positive, got {g}")

    return hbar*omega_b0*kappas.kappa_a**2*kappas.kappa_b**2/(g**2*kappas.kappa_b_oc)

def g_from_opo_threshold(p_th,omega_b0,kappas):
    """
    Coupling rate from a measured OPO threshold.
    """
    if not p_th > 0:
        raise ValueError(f"Threshold power must be positive, got {p_th}")

    return np.sqrt(hbar*omega_b0*kappas.kappa_a**2*kappas.kappa_b**2/(p_th*kappas.kappa_b_oc))

def p_sat(p_th):
    """
    SHG saturation power, 4 P_th.
    """
    return 4*p_th
