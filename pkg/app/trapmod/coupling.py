"""
Nonlinear coupling and phase-mismatch tensors between eigenmodes.

    g_lmn     = r * integral conj(psi_b,l) psi_a,m psi_a,n dxi
    delta_lmn = lambda_b,l - lambda_a,m - lambda_a,n

Attributes:
    LEAKAGE_TOLERANCE (float): Relative slack on the gap bounds of the phase mismatch. The
        periodic window discretizes the continuum, so its lowest entries sit slightly below
        the gaps of the infinite line.
"""

# Import native packages
from dataclasses import dataclass
import logging

# Import pypi packages
import numpy as np

# Import custom packages
from datamod import check_same_grid

logger = logging.getLogger(__name__)

LEAKAGE_TOLERANCE = 1e-2

@dataclass(frozen=True,eq=False)
class CouplingTensors:
    """
    Attributes:
        g_lmn (np.array): Coupling tensor, SH index first, symmetric in the FH indices.
        delta_lmn (np.array): Phase-mismatch tensor, same layout.
    """
    g_lmn: np.ndarray
    delta_lmn: np.ndarray

    @property
    def g(self):
        """
        float: Ground-mode coupling |g_000|.
        """
        return abs(self.g_lmn[0,0,0])

def coupling_tensor(fh_modes,sh_modes,r_norm=1.,n_fh=None,n_sh=None):
    """
    Coupling and phase-mismatch tensors over the leading modes.

    Args:
        fh_modes (trapmod.EigenmodeSet): FH eigenmodes.
        sh_modes (trapmod.EigenmodeSet): SH eigenmodes.
        r_norm (float): Normalized interaction strength.
        n_fh (int/None): Number of FH modes to include, all by default.
        n_sh (int/None): Number of SH modes to include, all by default.

    Returns:
        (CouplingTensors): The tensors.

    Raises:
        ValueError: If the two sets live on different grids.
    """
    check_same_grid(fh_modes.grid,sh_modes.grid)
    psi_a = fh_modes.modes[:n_fh]
    psi_b = sh_modes.modes[:n_sh]
    lam_a = fh_modes.eigenvalues[:n_fh]
    lam_b = sh_modes.eigenvalues[:n_sh]

    g_lmn = r_norm*np.einsum("li,mi,ni->lmn",psi_b.conj(),psi_a,psi_a)*fh_modes.grid.dxi
    delta_lmn = lam_b[:,None,None]-lam_a[None,:,None]-lam_a[None,None,:]

    return CouplingTensors(g_lmn,delta_lmn)

def leakage_bound_violations(tensors,delta_a,delta_b,tolerance=LEAKAGE_TOLERANCE):
    """
    Entries breaking the lower bounds |delta_l00| >= Delta_b and |delta_0mn| >= Delta_a.

    Args:
        tensors (CouplingTensors): Tensors to check.
        delta_a (float): FH gap.
        delta_b (float): SH gap.
        tolerance (float): Relative slack on the bounds.

    Returns:
        violations (list): Tuples (l, m, n, |delta_lmn|, bound) of offending entries.
    """
    delta = np.abs(tensors.delta_lmn)
    violations = []
    for l in range(1,delta.shape[0]):
        if delta[l,0,0] < (1-tolerance)*delta_b:
            violations.append((l,0,0,float(delta[l,0,0]),delta_b))
    for m in range(delta.shape[1]):
        for n in range(m,delta.shape[2]):
            if (m,n) != (0,0) and delta[0,m,n] < (1-tolerance)*delta_a:
                violations.append((0,m,n,float(delta[0,m,n]),delta_a))
    for violation in violations:
        logger.warning(f"Phase mismatch |delta_{violation[0]}{violation[1]}{violation[2]}|={violation[3]:.4g} below the gap {violation[4]:.4g}")

    return violations
