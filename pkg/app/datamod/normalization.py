"""
Conversion between physical waveguide parameters and the dimensionless trap problem.

The slow and fast time scales are

    t_c = (|beta2_a| / (r^4 beta1))^(1/3),   tau_c = (|beta2_a| / (r beta1))^(2/3),

after which the normalized Hamiltonian carries unit nonlinear coupling, a unit FH
kinetic prefactor, the GVD ratio ``rho`` and the phase mismatch ``delta``. For the
sech^2 trap of depth one the gap to coupling ratio only depends on the trap width.

Attributes:
    GAP_RATIO_UNIT (float): Delta/g at xi0 = 1 for the reference sech trap, 2*sqrt(2)/pi.
    DEFAULT_BOX_FACTOR (float): Default window extent in units of xi0.
    MIN_BOX_FACTOR (float): Smallest admissible window extent in units of xi0.
"""

# Import native packages
from dataclasses import dataclass
import logging

# Import pypi packages
import numpy as np

# Import custom packages
from datamod import Grid

logger = logging.getLogger(__name__)

GAP_RATIO_UNIT = 2*np.sqrt(2)/np.pi
DEFAULT_BOX_FACTOR = 40.
MIN_BOX_FACTOR = 20.
DEFAULT_N_GRID = 256

@dataclass(frozen=True)
class PhysicalWaveguide:
    """
    Physical description of the trapped chi(2) waveguide or resonator.

    Attributes:
        r (float): Parametric interaction strength (s^-1/2).
        beta1 (float): Inverse group velocity (s/m), only its ratio to beta2 matters.
        beta2_a (float): FH group-velocity dispersion (s^2/m), negative when anomalous.
        beta2_b (float): SH group-velocity dispersion (s^2/m).
        omega_a0 (float): FH carrier angular frequency (rad/s).
        omega_b0 (float): SH carrier angular frequency (rad/s).
        tau0 (float): Trap width (s).
    """
    r: float
    beta1: float
    beta2_a: float
    beta2_b: float
    omega_a0: float
    omega_b0: float
    tau0: float

    def __post_init__(self):
        if not self.r > 0:
            raise ValueError(f"Interaction strength r must be positive, got {self.r}")
        if not self.tau0 > 0:
            raise ValueError(f"Trap width tau0 must be positive, got {self.tau0}")
        if not self.beta1 > 0:
            raise ValueError(f"Inverse group velocity beta1 must be positive, got {self.beta1}")

@dataclass(frozen=True)
class NormalizedParams:
    """
    Dimensionless trap problem plus the scales mapping it back to physical units.

    Attributes:
        t_c (float): Slow-time scale (s).
        tau_c (float): Fast-time scale (s).
        xi0 (float): Normalized trap width.
        rho (float): GVD ratio beta2_b/beta2_a.
        delta (float): Normalized phase mismatch.
        box (float): Normalized fast-time window T/tau_c.
        n_grid (int): Number of fast-time samples.
    """
    t_c: float
    tau_c: float
    xi0: float
    rho: float
    delta: float
    box: float
    n_grid: int

    def __post_init__(self):
        check_grid_choice(self.xi0,self.box,self.n_grid)

    @property
    def grid(self):
        """
        datamod.Grid: The fast-time grid of the problem.
        """
        return Grid(self.n_grid,self.box)

    @property
    def r(self):
        """
        float: Interaction strength recovered from the two scales, sqrt(tau_c)/t_c.
        """
        return np.sqrt(self.tau_c)/self.t_c

    def to_physical_time(self,t):
        """
        Convert a normalized slow time to seconds.
        """
        return t*self.t_c

    def to_physical_rate(self,rate):
        """
        Convert a normalized rate (energy) to rad/s.
        """
        return rate/self.t_c

def check_grid_choice(xi0,box,n_grid):
    """
    Check the boundary-effect guard and the grid size.

    Args:
        xi0 (float): Normalized trap width.
        box (float): Normalized window.
        n_grid (int): Number of samples.

    Raises:
        ValueError: If the window is narrower than 20 trap widths or n_grid is not a power of two.
    """
    if not xi0 > 0:
        raise ValueError(f"Trap width xi0 must be positive, got {xi0}")
    if box < MIN_BOX_FACTOR*xi0:
        raise ValueError(f"Window box={box} is narrower than {MIN_BOX_FACTOR:g}*xi0={MIN_BOX_FACTOR*xi0}, bound-mode tails would wrap around")
    if int(n_grid) != n_grid or n_grid < 2 or (int(n_grid) & (int(n_grid)-1)) != 0:
        raise ValueError(f"n_grid must be a power of two, got {n_grid}")

def normalize(w,n_grid=DEFAULT_N_GRID,box=None):
    """
    Convert a physical waveguide description to the normalized problem.

    Args:
        w (PhysicalWaveguide): Physical parameters.
        n_grid (int): Number of fast-time samples.
        box (float/None): Normalized window, 40*xi0 when None.

    Returns:
        params (NormalizedParams): The normalized problem.

    Raises:
        ValueError: For normal FH dispersion (no bound mode) or an invalid grid.
    """
    if not w.beta2_a < 0:
        raise ValueError(f"FH dispersion beta2_a={w.beta2_a} is not anomalous, the trap has no bound mode (beta2_a < 0 required)")

    ratio = abs(w.beta2_a)/w.beta1
    t_c = (ratio/w.r**4)**(1/3)
    tau_c = (ratio/w.r)**(2/3)
    xi0 = w.tau0/tau_c
    if box is None:
        box = DEFAULT_BOX_FACTOR*xi0

    params = NormalizedParams(t_c=t_c,tau_c=tau_c,xi0=xi0,rho=w.beta2_b/w.beta2_a,
                              delta=(w.omega_b0-2*w.omega_a0)*t_c,box=box,n_grid=n_grid)
    logger.debug(f"Normalized: t_c={t_c:.6e} s, tau_c={tau_c:.6e} s, xi0={xi0:.6g}")

    return params

def denormalize(params,beta1,omega_a0):
    """
    Recover the physical description from a normalized problem.

    The normalized problem only fixes ratios, so the inverse group velocity and the FH
    carrier frequency have to be supplied.

    Args:
        params (NormalizedParams): Normalized problem.
        beta1 (float): Inverse group velocity (s/m).
        omega_a0 (float): FH carrier angular frequency (rad/s).

    Returns:
        w (PhysicalWaveguide): Physical parameters.
    """
    r = params.r
    beta2_a = -r*params.tau_c**1.5*beta1

    return PhysicalWaveguide(r=r,beta1=beta1,beta2_a=beta2_a,beta2_b=params.rho*beta2_a,
                             omega_a0=omega_a0,omega_b0=2*omega_a0+params.delta/params.t_c,
                             tau0=params.xi0*params.tau_c)

def gap_ratio(xi0):
    """
    Gap to coupling ratio Delta/g of the reference sech trap (alpha=1, rho=2).

    Args:
        xi0 (float): Normalized trap width.

    Returns:
        (float): (2*sqrt(2)/pi)*xi0^(-3/2).
    """
    if not np.all(np.asarray(xi0) > 0):
        raise ValueError(f"Trap width xi0 must be positive, got {xi0}")

    ratio = GAP_RATIO_UNIT*np.asarray(xi0,dtype=float)**-1.5

    return float(ratio) if ratio.ndim == 0 else ratio

def gap_ratio_inverse(dg_ratio):
    """
    Trap width realizing a given Delta/g for the reference sech trap.

    Args:
        dg_ratio (float): Gap to coupling ratio.

    Returns:
        (float): xi0.
    """
    if not np.all(np.asarray(dg_ratio) > 0):
        raise ValueError(f"Gap ratio must be positive, got {dg_ratio}")

    xi0 = (GAP_RATIO_UNIT/np.asarray(dg_ratio,dtype=float))**(2/3)

    return float(xi0) if xi0.ndim == 0 else xi0
