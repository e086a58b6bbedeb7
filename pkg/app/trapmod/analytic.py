"""
Closed-form bound modes of the sech^2 trap family.

For U = -alpha*xi0^-2*sech^2(xi/xi0) the FH operator -(1/2)d^2 + U and the SH operator
-(rho/2)d^2 + 2U are Pöschl-Teller problems. Their ground modes are sech^q(xi/xi0) with

    q_a(q_a+1)/2 = alpha,   q_b(q_b+1)/2 = 2*alpha/rho,

and binding energies q_a^2/(2 xi0^2) and rho*q_b^2/(2 xi0^2).
"""

# Import native packages
from dataclasses import dataclass

# Import pypi packages
import numpy as np
from scipy.special import gammaln

@dataclass(frozen=True)
class AnalyticModes:
    """
    Analytic ground modes of a sech family trap.

    Attributes:
        q_a (float): FH sech exponent.
        q_b (float): SH sech exponent.
        xi0 (float): Trap width.
        delta_a (float): FH gap (binding energy of the ground mode).
        delta_b (float): SH gap, measured from the SH continuum edge.
        matching_offset (float): Normalized omega_b0 - 2*omega_a0 that zeroes delta_000.
    """
    q_a: float
    q_b: float
    xi0: float
    delta_a: float
    delta_b: float
    matching_offset: float

    def psi_a(self,xi):
        """
        Normalized FH ground mode at xi.
        """
        return sech_power_mode(xi,self.q_a,self.xi0)

    def psi_b(self,xi):
        """
        Normalized SH ground mode at xi.
        """
        return sech_power_mode(xi,self.q_b,self.xi0)

    def lambda_a(self):
        """
        FH ground eigenvalue.
        """
        return -self.delta_a

    def lambda_b(self,delta=None):
        """
        SH ground eigenvalue for the phase mismatch delta (the matching offset by default).
        """
        delta = self.matching_offset if delta is None else delta

        return delta-self.delta_b

def sech_exponent(depth):
    """
    Positive root of q(q+1)/2 = depth.
    """
    if not depth > 0:
        raise ValueError(f"Trap depth must be positive, got {depth}")

    return (-1+np.sqrt(1+8*depth))/2

def sech_power_norm(q,xi0):
    """
    Normalization constant of sech^q(xi/xi0), from the integral xi0*sqrt(pi)*Gamma(q)/Gamma(q+1/2).
    """
    return np.exp(-0.5*(np.log(xi0)+0.5*np.log(np.pi)+gammaln(q)-gammaln(q+0.5)))

def sech_power_mode(xi,q,xi0):
    """
    Normalized sech^q profile.

    Args:
        xi (np.array): Fast-time coordinates.
        q (float): Exponent.
        xi0 (float): Width.

    Returns:
        (np.array): The mode samples.
    """
    return sech_power_norm(q,xi0)/np.cosh(np.asarray(xi)/xi0)**q

def analytic_bound_modes(alpha,rho,xi0):
    """
    Closed-form ground modes, gaps and matching offset of a sech family trap.

    Args:
        alpha (float): Depth factor.
        rho (float): GVD ratio.
        xi0 (float): Trap width.

    Returns:
        (AnalyticModes): The closed-form description.
    """
    if not (alpha > 0 and rho > 0 and xi0 > 0):
        raise ValueError(f"alpha, rho and xi0 must be positive, got {alpha}, {rho}, {xi0}")
    q_a = sech_exponent(alpha)
    q_b = sech_exponent(2*alpha/rho)
    delta_a = q_a**2/(2*xi0**2)
    delta_b = rho*q_b**2/(2*xi0**2)

    return AnalyticModes(q_a=q_a,q_b=q_b,xi0=xi0,delta_a=delta_a,delta_b=delta_b,
                         matching_offset=delta_b-2*delta_a)

def effective_g_general(alpha,rho,xi0,r_norm=1.):
    """
    Ground-mode coupling g_000 of a sech family trap.

    Args:
        alpha (float): Depth factor.
        rho (float): GVD ratio.
        xi0 (float): Trap width.
        r_norm (float): Normalized interaction strength.

    Returns:
        (float): r/(pi^(1/4) sqrt(xi0)) * Gamma(q_a+1/2) Gamma(q_a+q_b/2) Gamma(q_b+1/2)^(1/2)
        / [Gamma(q_a) Gamma(q_a+q_b/2+1/2) Gamma(q_b)^(1/2)].

    Notes:
        With alpha=1 and rho=2 this is pi*r/(4*sqrt(2*xi0)).
    """
    modes = analytic_bound_modes(alpha,rho,xi0)
    q_a, q_b = modes.q_a, modes.q_b
    log_ratio = (gammaln(q_a+0.5)+gammaln(q_a+q_b/2)+0.5*gammaln(q_b+0.5)
                 -gammaln(q_a)-gammaln(q_a+q_b/2+0.5)-0.5*gammaln(q_b))

    return r_norm/(np.pi**0.25*np.sqrt(xi0))*np.exp(log_ratio)

def gap_ratio_general(alpha,rho,xi0,r_norm=1.):
    """
    FH gap over ground-mode coupling, Delta_a/g.
    """
    return analytic_bound_modes(alpha,rho,xi0).delta_a/effective_g_general(alpha,rho,xi0,r_norm)

def xi0_for_gap_ratio(dg_ratio,alpha=1.,rho=2.,r_norm=1.):
    """
    Trap width realizing Delta_a/g = dg_ratio.

    Delta_a/g scales as xi0^(-3/2) for every member of the family, so the inverse is
    closed form.
    """
    if not dg_ratio > 0:
        raise ValueError(f"Gap ratio must be positive, got {dg_ratio}")

    return (gap_ratio_general(alpha,rho,1.,r_norm)/dg_ratio)**(2/3)

def gate_time(alpha,rho,xi0,r_norm=1.):
    """
    Analytic gate time t_pi = sqrt(2)*pi/g in units of t_c, 8*sqrt(xi0) for alpha=1, rho=2.
    """
    return np.sqrt(2)*np.pi/effective_g_general(alpha,rho,xi0,r_norm)
