"""
Untrapped Gaussian-waveform baseline of the Kerr-phase gate.

Without trap the FH photons disperse freely. The waveform

    psi_g(xi, t) = (pi tau_g^2)^(-1/4) (1 + i t/tau_g^2)^(-1/2) exp(-xi^2 / (2 tau_g^2 (1 + i t/tau_g^2)))

solves the free FH equation and is shortest at t = 0. The input is psi_g(., -t_g) and
the linear output psi_g(., +t_g) with t_g = t_pi/2, so the nonlinear interaction is
centered on the focus.

Attributes:
    DEFAULT_BASELINE_BOX (float): Default window of the untrapped system.
"""

# Import native packages
from dataclasses import dataclass
from functools import partial
import logging

# Import pypi packages
import numpy as np

# Import custom packages
from core.model import TrapModel
from gatemod import parabolic_minimum
from propmod.propagator import propagate
from propmod.state import distance, init_two_photon_bound, inner_product

logger = logging.getLogger(__name__)

DEFAULT_BASELINE_BOX = 80.

@dataclass(frozen=True,eq=False)
class BaselineSurface:
    """
    Error surface of the Gaussian baseline.

    Attributes:
        t_pi_grid (np.array): Gate times.
        tau_g_grid (np.array): Waveform widths.
        dist (np.array): Distance to the target, one row per gate time.
        s2 (np.array): Two-photon overlap with the linear output, same layout.
        tau_g_opt (np.array): Grid argmin of dist over tau_g per gate time.
        tau_g_refined (np.array): Parabolic refinement of the argmin.
    """
    t_pi_grid: np.ndarray
    tau_g_grid: np.ndarray
    dist: np.ndarray
    s2: np.ndarray
    tau_g_opt: np.ndarray
    tau_g_refined: np.ndarray

def gaussian_waveform(xi,t,tau_g):
    """
    Freely dispersing Gaussian of waist tau_g, evaluated t after its focus.
    """
    spread = 1+1j*t/tau_g**2

    return (np.pi*tau_g**2)**-0.25/np.sqrt(spread)*np.exp(-np.asarray(xi)**2/(2*tau_g**2*spread))

def gaussian_point(t_pi,tau_g,dt=1e-3,n_grid=256,box=DEFAULT_BASELINE_BOX,rho=2.,r_norm=1.,workers=None):
    """
    Run the untrapped gate for one (t_pi, tau_g).

    Args:
        t_pi (float): Gate time.
        tau_g (float): Waveform width.
        dt (float): Time step.
        n_grid (int): Number of samples.
        box (float): Window.
        rho (float): GVD ratio.
        r_norm (float): Normalized interaction strength.
        workers (int/None): Threads used by scipy.fft.

    Returns:
        dist (float): ||psi_out + 2_out||.
        s2 (complex): <2_out|psi_out>.
    """
    model = TrapModel.untrapped(n_grid,box,rho,0.,r_norm)
    t_g = t_pi/2
    xi = model.grid.xi
    state = init_two_photon_bound(gaussian_waveform(xi,-t_g,tau_g),model.grid)
    propagate(state,model.system,t_pi,dt,workers=workers)

    target = init_two_photon_bound(gaussian_waveform(xi,t_g,tau_g),model.grid,t_pi)
    s2 = complex(inner_product(target,state))
    target.R *= -1
    dist = float(distance(state,target))
    logger.debug(f"t_pi = {t_pi:g}, tau_g = {tau_g:g}: dist = {dist:.4f}")

    return dist, s2

def gaussian_baseline(t_pi_grid,tau_g_grid,dt=1e-3,n_grid=256,box=DEFAULT_BASELINE_BOX,rho=2.,r_norm=1.,
                      executor_map=map):
    """
    Error surface of the untrapped gate over gate times and waveform widths.

    Args:
        t_pi_grid (list): Gate times.
        tau_g_grid (list): Waveform widths, ascending.
        dt (float): Time step.
        n_grid (int): Number of samples.
        box (float): Window.
        rho (float): GVD ratio.
        r_norm (float): Normalized interaction strength.
        executor_map (callable): Order-preserving map used to run the points, e.g. an executor's map.

    Returns:
        (BaselineSurface): The surface and its optimum per gate time.
    """
    t_pi_grid = np.asarray(t_pi_grid,dtype=float)
    tau_g_grid = np.asarray(tau_g_grid,dtype=float)
    points = [(t_pi,tau_g) for t_pi in t_pi_grid for tau_g in tau_g_grid]
    logger.info(f"###### Gaussian baseline, {len(points)} points ######")

    worker = partial(gaussian_point,dt=dt,n_grid=n_grid,box=box,rho=rho,r_norm=r_norm)
    results = list(executor_map(worker,*zip(*points)))
    shape = (t_pi_grid.size,tau_g_grid.size)
    dist = np.array([result[0] for result in results]).reshape(shape)
    s2 = np.array([result[1] for result in results]).reshape(shape)

    index = np.argmin(dist,axis=1)
    tau_g_opt = tau_g_grid[index]
    tau_g_refined = np.array([refine_on_grid(tau_g_grid,row,i) for row, i in zip(dist,index)])

    return BaselineSurface(t_pi_grid,tau_g_grid,dist,s2,tau_g_opt,tau_g_refined)

def refine_on_grid(x,values,index):
    """
    Parabolic vertex through the three samples around index, on a possibly uneven grid.
    """
    if index == 0 or index == len(values)-1:
        return x[index]
    if np.isclose(x[index]-x[index-1],x[index+1]-x[index]):
        return parabolic_minimum(x,values,index)
    coefficients = np.polyfit(x[index-1:index+2],values[index-1:index+2],2)
    if coefficients[0] <= 0:
        return x[index]

    return -coefficients[1]/(2*coefficients[0])
