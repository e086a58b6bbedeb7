"""
The two-photon quantum state and its observables.

A state in the sector spanned by the vacuum, one FH photon, two FH photons and one SH
photon is

    |phi> = (P + int Q a^dag + int int R a^dag a^dag + int S b^dag)|0>,

with R symmetric. Bosonic commutators give the norm

    |P|^2 + int |Q|^2 + 2 int int |R|^2 + int |S|^2,

the factor two on R counting both orderings of the photon pair.
"""

# Import native packages
from dataclasses import dataclass
import logging

# Import pypi packages
import numpy as np

# Import custom packages
from datamod import check_same_grid

logger = logging.getLogger(__name__)

NORMALIZATION_TOLERANCE = 1e-8

class TwoPhotonState:
    """
    Amplitudes of the two-photon state on the fast-time grid.

    Attributes:
        P (complex): Vacuum amplitude.
        Q (np.array): One FH photon amplitude.
        R (np.array): Two FH photon amplitude, symmetric.
        S (np.array): One SH photon amplitude.
        grid (datamod.Grid): The fast-time grid.
        t (float): Normalized time the amplitudes refer to.
    """

    def __init__(self,P,Q,R,S,grid,t=0.):
        n = grid.n
        self.P = complex(P)
        self.Q = np.array(Q,dtype=complex).reshape(n)
        R = np.array(R,dtype=complex).reshape(n,n)
        self.R = 0.5*(R+R.T)
        self.S = np.array(S,dtype=complex).reshape(n)
        self.grid = grid
        self.t = float(t)

    def copy(self):
        return TwoPhotonState(self.P,self.Q.copy(),self.R.copy(),self.S.copy(),self.grid,self.t)

    def norm(self):
        """
        float: Squared norm of the state.
        """
        return inner_product(self,self).real

    def __add__(self,other):
        check_same_grid(self.grid,other.grid)
        return TwoPhotonState(self.P+other.P,self.Q+other.Q,self.R+other.R,self.S+other.S,self.grid,self.t)

    def __repr__(self):
        return f"TwoPhotonState(n={self.grid.n}, t={self.t}, norm={self.norm():.12f})"

def inner_product(first,second):
    """
    Inner product <first|second>.

    Args:
        first (TwoPhotonState): Bra state.
        second (TwoPhotonState): Ket state.

    Returns:
        (complex): The overlap.
    """
    check_same_grid(first.grid,second.grid)
    dxi = first.grid.dxi

    return (np.conj(first.P)*second.P
            + np.vdot(first.Q,second.Q)*dxi
            + 2*np.vdot(first.R,second.R)*dxi**2
            + np.vdot(first.S,second.S)*dxi)

def fidelity(first,second):
    """
    |<first|second>|^2.
    """
    return abs(inner_product(first,second))**2

def distance(first,second):
    """
    Norm of the difference of two states.
    """
    difference = TwoPhotonState(first.P-second.P,first.Q-second.Q,first.R-second.R,first.S-second.S,first.grid)

    return np.sqrt(difference.norm())

def check_normalized(mode,grid):
    """
    Check that a mode is normalized on the grid.

    Raises:
        ValueError: If sum |psi|^2 dxi deviates from 1 by more than 1e-8.
    """
    norm = np.sum(np.abs(mode)**2)*grid.dxi
    if abs(norm-1) > NORMALIZATION_TOLERANCE:
        raise ValueError(f"Mode is not normalized on the grid, norm={norm:.12f}")

def init_two_photon_bound(psi0,grid,t=0.):
    """
    Two FH photons in the mode psi0, |2 0>.

    Args:
        psi0 (np.array): Normalized mode samples.
        grid (datamod.Grid): The fast-time grid.
        t (float): Time stamp of the state.

    Returns:
        (TwoPhotonState): The state with R = psi0 x psi0/sqrt(2).
    """
    check_normalized(psi0,grid)
    psi0 = np.asarray(psi0,dtype=complex)
    n = grid.n

    return TwoPhotonState(0,np.zeros(n),np.outer(psi0,psi0)/np.sqrt(2),np.zeros(n),grid,t)

def init_superposition(c0,c1,c2,psi0,grid,t=0.):
    """
    Fock superposition c0|0> + c1|1> + c2|2> in the mode psi0.

    Args:
        c0 (complex): Vacuum amplitude.
        c1 (complex): One-photon amplitude.
        c2 (complex): Two-photon amplitude.
        psi0 (np.array): Normalized mode samples.
        grid (datamod.Grid): The fast-time grid.
        t (float): Time stamp of the state.

    Returns:
        (TwoPhotonState): The state.

    Raises:
        ValueError: If the coefficients are not normalized or psi0 is not normalized.
    """
    total = abs(c0)**2+abs(c1)**2+abs(c2)**2
    if abs(total-1) > NORMALIZATION_TOLERANCE:
        raise ValueError(f"Fock coefficients are not normalized, sum |c|^2 = {total:.12f}")
    check_normalized(psi0,grid)
    psi0 = np.asarray(psi0,dtype=complex)

    return TwoPhotonState(c0,c1*psi0,c2*np.outer(psi0,psi0)/np.sqrt(2),np.zeros(grid.n),grid,t)

def init_sh_photon(psi_b,grid,t=0.):
    """
    One SH photon in the mode psi_b, |0 1>.
    """
    check_normalized(psi_b,grid)
    n = grid.n

    return TwoPhotonState(0,np.zeros(n),np.zeros((n,n)),psi_b,grid,t)

@dataclass(frozen=True,eq=False)
class Observables:
    """
    Observables of one sample.

    Attributes:
        t (float): Normalized time.
        fh_flux (np.array): <a^dag_xi a_xi>.
        sh_flux (np.array): <b^dag_xi b_xi>.
        n_sh (float): Total SH photon number.
        c20 (complex): Interaction-picture projection on |2 0> of the FH ground mode.
        c01 (complex): Interaction-picture projection on |0 1> of the SH ground mode.
        bloch (tuple): Pseudo-Pauli expectation values (X, Y, Z).
        norm (float): Squared norm of the state.
        mr (float): Manley-Rowe sum N_a + 2 N_b.
    """
    t: float
    fh_flux: np.ndarray
    sh_flux: np.ndarray
    n_sh: float
    c20: complex
    c01: complex
    bloch: tuple
    norm: float
    mr: float

def fluxes(state):
    """
    FH and SH photon flux profiles.

    Returns:
        fh_flux (np.array): |Q|^2 + 4 sum_j |R_ij|^2 dxi.
        sh_flux (np.array): |S|^2.
    """
    fh_flux = np.abs(state.Q)**2+4*np.sum(np.abs(state.R)**2,axis=1)*state.grid.dxi
    sh_flux = np.abs(state.S)**2

    return fh_flux, sh_flux

def sh_photon_number(state):
    """
    Total SH photon number.
    """
    return float(np.sum(np.abs(state.S)**2)*state.grid.dxi)

def project_two_photon(state,psi_a,lam_a,t):
    """
    Interaction-picture amplitude of two FH photons in psi_a.
    """
    dxi = state.grid.dxi
    overlap = np.sqrt(2)*(psi_a.conj() @ state.R @ psi_a.conj())*dxi**2

    return overlap*np.exp(2j*lam_a*t)

def project_single_photon(amplitude,psi,lam,t,grid):
    """
    Interaction-picture projection of a one-photon amplitude on psi.
    """
    return grid.inner(psi,amplitude)*np.exp(1j*lam*t)

def pseudo_pauli(c20,c01):
    """
    Expectation values of X = (a^dag2 b + a^2 b^dag)/sqrt(2), Y = (a^dag2 b - a^2 b^dag)/(sqrt(2) i)
    and Z = a^dag2 a^2/2 - b^dag b restricted to the two-level subspace.
    """
    coherence = np.conj(c20)*c01

    return (2*coherence.real,2*coherence.imag,abs(c20)**2-abs(c01)**2)

def observables(state,fh_modes,sh_modes,t=None):
    """
    All observables of a state.

    Args:
        state (TwoPhotonState): The state.
        fh_modes (trapmod.EigenmodeSet): FH eigenmodes, the ground mode defines |2 0>.
        sh_modes (trapmod.EigenmodeSet): SH eigenmodes, the ground mode defines |0 1>.
        t (float/None): Time used for the interaction-picture phases, the state time by default.

    Returns:
        (Observables): The sample.

    Raises:
        ValueError: On a grid mismatch.
    """
    check_same_grid(state.grid,fh_modes.grid,sh_modes.grid)
    t = state.t if t is None else t
    fh_flux, sh_flux = fluxes(state)
    n_sh = float(np.sum(sh_flux)*state.grid.dxi)
    c20 = project_two_photon(state,fh_modes.ground,fh_modes.eigenvalues[0],t)
    c01 = project_single_photon(state.S,sh_modes.ground,sh_modes.eigenvalues[0],t,state.grid)
    mr = float(np.sum(fh_flux)*state.grid.dxi+2*n_sh)

    return Observables(t=t,fh_flux=fh_flux,sh_flux=sh_flux,n_sh=n_sh,c20=complex(c20),c01=complex(c01),
                       bloch=pseudo_pauli(c20,c01),norm=state.norm(),mr=mr)
