"""
This modules sets up the trapped system every experiment works on.

Attributes:
    DEFAULT_DT (float): Default normalized time step.
"""

# Import native packages
import logging

# Import pypi packages
import numpy as np

# Import custom packages
from datamod import Grid
from datamod.normalization import DEFAULT_BOX_FACTOR, DEFAULT_N_GRID, check_grid_choice
from propmod.propagator import PropagationSystem
from trapmod import free_potential, sech_potential, solve_eigenmodes
from trapmod.analytic import analytic_bound_modes, gate_time, xi0_for_gap_ratio
from trapmod.coupling import LEAKAGE_TOLERANCE, coupling_tensor, leakage_bound_violations

logger = logging.getLogger(__name__)

DEFAULT_DT = 1e-3

class TrapModel:
    """
    One trapped (or untrapped) system: grid, potential, eigenmodes and couplings.

    Attributes:
        grid (datamod.Grid): The fast-time grid.
        potential (trapmod.TrapPotential): FH trap potential.
        rho (float): GVD ratio.
        delta (float): Normalized phase mismatch.
        r_norm (float): Normalized interaction strength.
        system (propmod.propagator.PropagationSystem): Input of the propagator.
        fh_modes (trapmod.EigenmodeSet/None): FH eigenmodes, None when untrapped.
        sh_modes (trapmod.EigenmodeSet/None): SH eigenmodes, None when untrapped.
        tensors (trapmod.coupling.CouplingTensors/None): Coupling and phase-mismatch tensors.
        g (float/None): Numerical ground-mode coupling |g_000|.
        t_pi_seed (float/None): Analytic gate time seeding the numerical search.

    Notes:
        Use the class methods to build a model from a gap ratio or without trap.
    """

    def __init__(self,potential,rho=2.,delta=0.,r_norm=1.,n_modes=8,scheme="spectral",trapped=True):
        self.grid = potential.grid
        self.potential = potential
        self.rho = rho
        self.delta = delta
        self.r_norm = r_norm
        self.system = PropagationSystem(self.grid,potential.samples,rho,delta,r_norm)
        self.fh_modes = None
        self.sh_modes = None
        self.tensors = None
        self.g = None
        self.t_pi_seed = None

        if trapped:
            logger.info("###### Solving eigenmodes ######")
            self.fh_modes = solve_eigenmodes(potential,"FH",rho,delta,n_modes,scheme)
            self.sh_modes = solve_eigenmodes(potential,"SH",rho,delta,n_modes,scheme)
            self.tensors = coupling_tensor(self.fh_modes,self.sh_modes,r_norm)
            self.g = self.tensors.g
            if potential.kind == "sech_family":
                self.t_pi_seed = gate_time(potential.alpha,rho,potential.xi0,r_norm)
            elif self.g > 0:
                self.t_pi_seed = np.sqrt(2)*np.pi/self.g
            logger.info(f"g = {self.g:.6f}, Delta_a = {self.fh_modes.gap:.6f}, Delta_b = {self.sh_modes.gap:.6f}, "
                        f"{self.fh_modes.n_bound} FH and {self.sh_modes.n_bound} SH bound modes")

    @classmethod
    def from_gap_ratio(cls,dg_ratio,alpha=1.,rho=2.,n_grid=DEFAULT_N_GRID,box=None,delta=None,r_norm=1.,
                       n_modes=8,scheme="spectral"):
        """
        Sech trap realizing a given gap to coupling ratio.

        Args:
            dg_ratio (float): Delta_a/g.
            alpha (float): Depth factor.
            rho (float): GVD ratio.
            n_grid (int): Number of samples.
            box (float/None): Window, 40*xi0 by default.
            delta (float/None): Phase mismatch, the matching offset zeroing delta_000 by default.
            r_norm (float): Normalized interaction strength.
            n_modes (int): Number of eigenpairs solved per harmonic.
            scheme (str): Discretization of the eigenproblem.

        Returns:
            (TrapModel): The model.
        """
        xi0 = xi0_for_gap_ratio(dg_ratio,alpha,rho,r_norm)
        box = DEFAULT_BOX_FACTOR*xi0 if box is None else box
        check_grid_choice(xi0,box,n_grid)
        if delta is None:
            delta = analytic_bound_modes(alpha,rho,xi0).matching_offset
        logger.info(f"Delta/g = {dg_ratio:g}: xi0 = {xi0:.6f}, box = {box:.4f}, n_grid = {n_grid}")
        potential = sech_potential(Grid(n_grid,box),alpha,xi0)

        return cls(potential,rho,delta,r_norm,min(n_modes,n_grid),scheme)

    @classmethod
    def untrapped(cls,n_grid,box,rho=2.,delta=0.,r_norm=1.):
        """
        Free system, U = 0, without eigenmodes.
        """
        return cls(free_potential(Grid(n_grid,box)),rho,delta,r_norm,trapped=False)

    @property
    def dg_ratio(self):
        """
        float: Numerical Delta_a/g.
        """
        return self.fh_modes.gap/self.g

    def resolve_dt(self,dt=None):
        """
        Requested step, or DEFAULT_DT capped by the kinetic phase limit and the accuracy guard when None.

        The kinetic cap scales as xi0^2 at a fixed n_grid and box/xi0, so every gap ratio is
        propagated with the same discretization in trap units.
        """
        if dt is None:
            return min(DEFAULT_DT,self.system.dt_kinetic(),self.system.dt_max())

        return dt

    def leakage_violations(self,tolerance=LEAKAGE_TOLERANCE):
        """
        Phase-mismatch entries below the gaps, see trapmod.coupling.leakage_bound_violations.
        """
        return leakage_bound_violations(self.tensors,self.fh_modes.gap,self.sh_modes.gap,tolerance)
