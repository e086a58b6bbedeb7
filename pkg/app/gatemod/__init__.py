"""
Gate experiments module.

The aim of the gatemod package is to run the gate experiments on a trapped system:
Rabi traces of |2 0> <-> |0 1>, the Kerr-phase gate U_pi with a numerically located
gate time, the dual-rail CZ built from it (cz) and the untrapped Gaussian baseline
(baseline).

Attributes:
    T_PI_WINDOW (float): Relative half-width of the gate-time search window around the seed.
"""

# Import native packages
from dataclasses import dataclass
import logging

# Import pypi packages
import numpy as np

# Import custom packages
from core.model import TrapModel
from propmod.propagator import Trajectory, build_plan, propagate, step
from propmod.state import (distance, init_superposition, init_two_photon_bound, project_single_photon,
                           project_two_photon, sh_photon_number)

logger = logging.getLogger(__name__)

T_PI_WINDOW = 0.1

@dataclass(frozen=True,eq=False)
class GateRun:
    """
    Outcome of one U_pi run.

    Attributes:
        dg_ratio (float): Delta/g of the trap.
        t_pi (float): Located gate time in t_c units.
        s1 (complex): Single-photon channel amplitude, interaction picture.
        s2 (complex): Two-photon channel amplitude <2_out|U|2_in>.
        c01 (complex): Amplitude left in |0 1> at t_pi.
        leak2 (float): Two-photon probability outside |2 0> and |0 1>.
        dist (float): Distance ||psi_out + 2_out|| to the target output.
        traj (propmod.propagator.Trajectory): Sampled two-photon propagation.
    """
    dg_ratio: float
    t_pi: float
    s1: complex
    s2: complex
    c01: complex
    leak2: float
    dist: float
    traj: Trajectory

def two_level_amplitudes(g,t):
    """
    (c20, c01) of the ideal single-mode problem started in |2 0>.

    The two levels couple with g/sqrt(2), so c20 returns to -1 at t = sqrt(2)*pi/g.
    """
    omega = g*np.asarray(t)/np.sqrt(2)

    return np.cos(omega), -1j*np.sin(omega)

def parabolic_minimum(times,values,index):
    """
    Vertex of the parabola through three equally spaced samples around index.
    """
    if index == 0 or index == len(values)-1:
        return times[index]
    y0, y1, y2 = values[index-1], values[index], values[index+1]
    curvature = y0-2*y1+y2
    if curvature <= 0:
        return times[index]

    return times[index]+0.5*(y0-y2)/curvature*(times[index+1]-times[index])

def rabi_period(trajectory,t_seed,window=0.5):
    """
    Time of the first return of the SH photon number to its minimum.

    Args:
        trajectory (propmod.propagator.Trajectory): Sampled propagation started in |2 0>.
        t_seed (float): Expected period.
        window (float): Relative half-width of the search window.

    Returns:
        (float): The located period.
    """
    times = trajectory.sample_times
    n_sh = trajectory.series("n_sh")
    inside = np.flatnonzero(np.abs(times-t_seed) <= window*t_seed)
    if inside.size == 0:
        raise ValueError(f"Trajectory does not cover the window around t={t_seed}")
    index = inside[np.argmin(n_sh[inside])]

    return parabolic_minimum(times,n_sh,index)

def rabi_trace(dg_ratio,dt=None,oversample=10,periods=2.,model=None,workers=None,**model_kwargs):
    """
    Rabi oscillation of a trapped |2 0> state.

    Args:
        dg_ratio (float): Delta/g of the trap.
        dt (float/None): Time step, see core.model.TrapModel.resolve_dt.
        oversample (int): Sampling stride in steps.
        periods (float): Propagation time in units of the analytic gate time.
        model (core.model.TrapModel/None): Prebuilt model, built from dg_ratio when None.
        workers (int/None): Threads used by scipy.fft.
        **model_kwargs: Passed to TrapModel.from_gap_ratio.

    Returns:
        (propmod.propagator.Trajectory): Sampled n_sh and Bloch traces.
    """
    if not dg_ratio > 0:
        raise ValueError(f"Gap ratio must be positive, got {dg_ratio}")
    model = TrapModel.from_gap_ratio(dg_ratio,**model_kwargs) if model is None else model
    dt = model.resolve_dt(dt)

    logger.info(f"###### Rabi trace, Delta/g = {dg_ratio:g}, t_end = {periods*model.t_pi_seed:.4f} ######")
    state = init_two_photon_bound(model.fh_modes.ground,model.grid)

    return propagate(state,model.system,periods*model.t_pi_seed,dt,oversample,model.fh_modes,model.sh_modes,workers)

def locate_t_pi(model,state,dt,sample_every=0,window=T_PI_WINDOW,workers=None):
    """
    Propagate |2 0> to the return minimum of the SH photon number.

    The state is propagated to the start of the window around the seed, scanned step by
    step to its end, and the minimum refined by a parabola. The final state is then
    re-propagated from a copy of the window start to the refined time.

    Args:
        model (core.model.TrapModel): The system.
        state (propmod.state.TwoPhotonState): Initial state at t = 0, advanced in place.
        dt (float): Time step.
        sample_every (int): Sampling stride of the returned trajectory, 0 disables sampling.
        window (float): Relative half-width of the search window.
        workers (int/None): Threads used by scipy.fft.

    Returns:
        t_pi (float): The located gate time.
        trajectory (propmod.propagator.Trajectory): Samples from 0 to t_pi and the state at t_pi.
    """
    t_seed = model.t_pi_seed
    t_low = (1-window)*t_seed
    modes = (model.fh_modes,model.sh_modes)
    first = propagate(state,model.system,t_low,dt,sample_every,*modes,workers)
    start = state.copy()

    plan = build_plan(model.system,dt,workers)
    n_scan = int(np.ceil(2*window*t_seed/dt))
    times = [t_low]
    n_sh = [sh_photon_number(state)]
    for i in range(1,n_scan+1):
        step(state,plan)
        state.t = t_low+i*dt
        times.append(state.t)
        n_sh.append(sh_photon_number(state))
    index = int(np.argmin(n_sh))
    if index in (0,n_scan):
        logger.warning(f"SH photon number minimum at the edge of the gate-time window around {t_seed:.4f}")
    t_pi = parabolic_minimum(np.array(times),np.array(n_sh),index)
    logger.info(f"Located t_pi = {t_pi:.6f} (seed {t_seed:.6f}), min n_sh = {n_sh[index]:.3e}")

    state = start
    if t_pi != start.t:
        second = propagate(state,model.system,t_pi,dt,sample_every,*modes,workers)
    else:
        second = Trajectory(sample_times=np.array([]),records=[],final_state=state)
    records = first.records+[record for record in second.records if not first.records or record.t > first.records[-1].t]

    return t_pi, Trajectory(sample_times=np.array([record.t for record in records]),records=records,
                            final_state=state,steps=first.steps+second.steps)

def target_output(model,t):
    """
    Target of U_pi on |2 0>, minus the linearly evolved input, at time t.
    """
    target = init_two_photon_bound(model.fh_modes.ground,model.grid,t)
    target.R *= -np.exp(-2j*model.fh_modes.eigenvalues[0]*t)

    return target

def run_upi(dg_ratio,dt=None,sample_every=0,model=None,workers=None,**model_kwargs):
    """
    Kerr-phase gate U_pi on the one- and two-photon inputs.

    Args:
        dg_ratio (float): Delta/g of the trap.
        dt (float/None): Time step, see core.model.TrapModel.resolve_dt.
        sample_every (int): Sampling stride of the two-photon trajectory.
        model (core.model.TrapModel/None): Prebuilt model, built from dg_ratio when None.
        workers (int/None): Threads used by scipy.fft.
        **model_kwargs: Passed to TrapModel.from_gap_ratio.

    Returns:
        (GateRun): Channel amplitudes and errors, the ideal gate has s1 = 1 and s2 = -1.
    """
    if not dg_ratio > 0:
        raise ValueError(f"Gap ratio must be positive, got {dg_ratio}")
    model = TrapModel.from_gap_ratio(dg_ratio,**model_kwargs) if model is None else model
    dt = model.resolve_dt(dt)
    psi_a = model.fh_modes.ground
    lam_a = model.fh_modes.eigenvalues[0]

    logger.info(f"###### U_pi gate, Delta/g = {dg_ratio:g} ######")
    two_photon = init_two_photon_bound(psi_a,model.grid)
    t_pi, trajectory = locate_t_pi(model,two_photon,dt,sample_every,workers=workers)
    output = trajectory.final_state

    single = init_superposition(0,1,0,psi_a,model.grid)
    propagate(single,model.system,t_pi,dt,workers=workers)

    s1 = complex(project_single_photon(single.Q,psi_a,lam_a,t_pi,model.grid))
    s2 = complex(project_two_photon(output,psi_a,lam_a,t_pi))
    c01 = complex(project_single_photon(output.S,model.sh_modes.ground,model.sh_modes.eigenvalues[0],t_pi,model.grid))
    leak2 = float(1-abs(s2)**2-abs(c01)**2)
    dist = float(distance(output,target_output(model,t_pi)))
    logger.info(f"s1 = {s1:.6f}, s2 = {s2:.6f}, leak2 = {leak2:.3e}, dist = {dist:.4e}")

    return GateRun(dg_ratio=dg_ratio,t_pi=t_pi,s1=s1,s2=s2,c01=c01,leak2=leak2,dist=dist,traj=trajectory)
