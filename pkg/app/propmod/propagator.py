"""
Split-step Fourier integration of the two-photon equations of motion.

In normalized units the amplitudes obey

    i dP/dt = 0
    i dQ/dt = (-1/2 d^2 + U) Q
    i dS/dt = (delta - (rho/2) d^2 + 2U) S + r R(xi, xi)
    i dR/dt = (-1/2 (d1^2 + d2^2) + U1 + U2) R + (r/2) delta(xi1 - xi2) S(xi1)

One step is a Strang sandwich: half a linear step, the exact nonlinear step, half a
linear step. The linear half step is itself a symmetric sandwich of potential and
kinetic multipliers. With delta(xi1 - xi2) discretized as 1/dxi on the diagonal, the
nonlinear step couples every pair (R_ii, S_i) only, and in the orthonormal variables
u = sqrt(2) dxi R_ii, v = sqrt(dxi) S_i it is the rotation of angle r dt/sqrt(2 dxi).
Every sub-step is unitary, so the norm is conserved to round-off.

Attributes:
    STABILITY_FACTOR (float): dt_max = STABILITY_FACTOR/max_rate.
    KINETIC_PHASE_LIMIT (float): Largest kinetic phase per step of the default time step.
"""

# Import native packages
from dataclasses import dataclass, field
import logging

# Import pypi packages
import numpy as np
from scipy import fft

# Import custom packages
from core.errors import NumericalError
from propmod.state import TwoPhotonState, observables

logger = logging.getLogger(__name__)

STABILITY_FACTOR = 0.1
KINETIC_PHASE_LIMIT = 2.
UNIT_MODULUS_TOLERANCE = 1e-14

@dataclass(frozen=True,eq=False)
class PropagationSystem:
    """
    Everything the propagator needs to know about the physical system.

    Attributes:
        grid (datamod.Grid): The fast-time grid.
        potential (np.array): FH trap potential U on the grid.
        rho (float): GVD ratio.
        delta (float): Normalized phase mismatch.
        r_norm (float): Normalized interaction strength, 0 switches the nonlinearity off.
    """
    grid: object
    potential: np.ndarray
    rho: float = 2.
    delta: float = 0.
    r_norm: float = 1.

    @property
    def site_coupling(self):
        """
        float: Nonlinear coupling of the per-site two-level problem, r/sqrt(2 dxi).
        """
        return self.r_norm/np.sqrt(2*self.grid.dxi)

    def max_rate(self):
        """
        Largest position-space rate of the generator, it sets the accuracy guard.

        Notes:
            The kinetic multipliers are applied exactly and do not limit the step.
        """
        return max(np.max(np.abs(self.delta+2*self.potential)),np.max(np.abs(self.potential)),self.site_coupling,1e-300)

    def dt_max(self):
        """
        float: Largest accepted step.
        """
        return STABILITY_FACTOR/self.max_rate()

    def max_kinetic(self):
        """
        Largest kinetic multiplier of the grid, reached by R and S at the Nyquist wavenumber.
        """
        return max(1.,0.5*self.rho)*np.max(self.grid.k**2)

    def dt_kinetic(self):
        """
        Step whose largest kinetic phase is KINETIC_PHASE_LIMIT.

        Notes:
            Components of R near the Nyquist wavenumber are fed by the contact coupling on
            the diagonal. Above this step their splitting error no longer shrinks with the
            trap width, which puts a floor under the two-photon phase of deep traps.
        """
        return KINETIC_PHASE_LIMIT/self.max_kinetic()

@dataclass(frozen=True,eq=False)
class StepPlan:
    """
    Precomputed multipliers of one Strang step.

    Attributes:
        dt (float): Normalized time step, negative for backward propagation.
        scheme (str): Splitting scheme, "strang".
        fft_plans (dict): Forward and backward transforms of the 1D and 2D fields.
        kinetic_phases (dict): Kinetic multipliers for a half step of Q, R and S.
        potential_phases (dict): Potential multipliers for a quarter step of Q, R and S.
        mixing (tuple): cos and -i sin of the nonlinear rotation angle.
        dxi (float): Grid spacing.
    """
    dt: float
    scheme: str
    fft_plans: dict
    kinetic_phases: dict
    potential_phases: dict
    mixing: tuple
    dxi: float

def build_plan(system,dt,workers=None):
    """
    Precompute the multipliers of one step.

    Args:
        system (PropagationSystem): The system.
        dt (float): Normalized time step.
        workers (int/None): Threads used by scipy.fft.

    Returns:
        (StepPlan): The plan.

    Raises:
        ValueError: If dt is zero or exceeds the accuracy guard.
    """
    if dt == 0:
        raise ValueError("Time step must be nonzero")
    if abs(dt) > system.dt_max()*(1+1e-12):
        raise ValueError(f"Time step |dt|={abs(dt)} exceeds the accuracy guard dt_max={system.dt_max():.4e}")

    k2 = system.grid.k**2
    U = system.potential
    V_s = system.delta+2*U
    half = dt/2
    quarter = dt/4

    kinetic_phases = {"Q":np.exp(-0.5j*half*k2),
                      "R":np.exp(-0.5j*half*(k2[:,None]+k2[None,:])),
                      "S":np.exp(-0.5j*half*system.rho*k2)}
    potential_Q = np.exp(-1j*quarter*U)
    potential_phases = {"Q":potential_Q,
                        "R":np.outer(potential_Q,potential_Q),
                        "S":np.exp(-1j*quarter*V_s)}
    for phases in (kinetic_phases,potential_phases):
        for name, phase in phases.items():
            if np.max(np.abs(np.abs(phase)-1)) > UNIT_MODULUS_TOLERANCE:
                raise NumericalError(f"Multiplier of {name} is not unitary",stage="plan")

    angle = system.site_coupling*dt
    mixing = (np.cos(angle),-1j*np.sin(angle))
    fft_plans = {"1d":(lambda x: fft.fft(x,workers=workers),lambda x: fft.ifft(x,workers=workers)),
                 "2d":(lambda x: fft.fft2(x,workers=workers),lambda x: fft.ifft2(x,workers=workers))}

    return StepPlan(dt=dt,scheme="strang",fft_plans=fft_plans,kinetic_phases=kinetic_phases,
                    potential_phases=potential_phases,mixing=mixing,dxi=system.grid.dxi)

def _check_finite(state,stage):
    if not (np.isfinite(state.P) and np.all(np.isfinite(state.Q)) and np.all(np.isfinite(state.R)) and np.all(np.isfinite(state.S))):
        raise NumericalError(f"Non-finite amplitudes after the {stage} sub-step at t={state.t}",stage=stage)

def _linear_half(state,plan):
    forward_1d, backward_1d = plan.fft_plans["1d"]
    forward_2d, backward_2d = plan.fft_plans["2d"]
    potential = plan.potential_phases
    kinetic = plan.kinetic_phases

    state.Q = potential["Q"]*backward_1d(kinetic["Q"]*forward_1d(potential["Q"]*state.Q))
    state.R = potential["R"]*backward_2d(kinetic["R"]*forward_2d(potential["R"]*state.R))
    state.S = potential["S"]*backward_1d(kinetic["S"]*forward_1d(potential["S"]*state.S))

def _nonlinear(state,plan):
    cos, isin = plan.mixing
    dxi = plan.dxi
    diagonal = np.arange(state.grid.n)
    u = np.sqrt(2)*dxi*state.R[diagonal,diagonal]
    v = np.sqrt(dxi)*state.S
    u, v = cos*u+isin*v, isin*u+cos*v
    state.R[diagonal,diagonal] = u/(np.sqrt(2)*dxi)
    state.S = v/np.sqrt(dxi)

def step(state,plan):
    """
    Advance a state by one Strang step, in place.

    Args:
        state (propmod.state.TwoPhotonState): The state, owned by the caller.
        plan (StepPlan): Plan built for the state's grid.

    Returns:
        state (propmod.state.TwoPhotonState): The advanced state.

    Raises:
        NumericalError: If a sub-step produced non-finite amplitudes.
    """
    _linear_half(state,plan)
    _check_finite(state,"first linear")
    _nonlinear(state,plan)
    _check_finite(state,"nonlinear")
    _linear_half(state,plan)
    _check_finite(state,"second linear")
    state.R = 0.5*(state.R+state.R.T)
    state.t += plan.dt

    return state

@dataclass(eq=False)
class Trajectory:
    """
    Sampled propagation.

    Attributes:
        sample_times (np.array): Strictly monotonic sample times.
        records (list): Observables per sample.
        final_state (propmod.state.TwoPhotonState): State at the end time.
        steps (int): Number of steps taken.
    """
    sample_times: np.ndarray
    records: list = field(default_factory=list)
    final_state: TwoPhotonState = None
    steps: int = 0

    def series(self,name):
        """
        Time series of one scalar observable, e.g. "n_sh" or "c20".
        """
        return np.array([getattr(record,name) for record in self.records])

def step_count(span,dt):
    """
    Number of full steps and the residual step landing on the end time.
    """
    ratio = span/dt
    nearest = round(ratio)
    if abs(ratio-nearest) <= 1e-9*max(1.,abs(ratio)):
        return int(nearest), 0.

    n_full = int(np.floor(ratio))

    return n_full, span-n_full*dt

def propagate(state,system,t_end,dt,sample_every=0,fh_modes=None,sh_modes=None,workers=None):
    """
    Propagate a state from its own time to t_end.

    Args:
        state (propmod.state.TwoPhotonState): Initial state, advanced in place.
        system (PropagationSystem): The system.
        t_end (float): Target time, below the state time for backward propagation.
        dt (float): Step, with the sign of t_end - state.t.
        sample_every (int): Sampling stride in steps, 0 disables sampling.
        fh_modes (trapmod.EigenmodeSet/None): FH modes for the observables.
        sh_modes (trapmod.EigenmodeSet/None): SH modes for the observables.
        workers (int/None): Threads used by scipy.fft.

    Returns:
        (Trajectory): Samples and the final state.

    Raises:
        ValueError: On inconsistent times or a step above the accuracy guard.
        NumericalError: As step.

    Notes:
        The final partial step rebuilds the plan for the residual dt, which keeps the
        scheme symmetric.
    """
    span = t_end-state.t
    if span == 0 or dt == 0 or np.sign(span) != np.sign(dt):
        raise ValueError(f"Cannot propagate from t={state.t} to t={t_end} with dt={dt}")
    if sample_every and (fh_modes is None or sh_modes is None):
        raise ValueError("Sampling observables needs the FH and SH eigenmodes")
    if state.grid != system.grid:
        raise ValueError(f"State grid {state.grid} does not match the system grid {system.grid}")

    plan = build_plan(system,dt,workers)
    n_full, residual = step_count(span,dt)
    initial_norm = state.norm()
    t_start = state.t

    records = []
    def sample():
        records.append(observables(state,fh_modes,sh_modes))

    if sample_every:
        sample()
    for i in range(1,n_full+1):
        step(state,plan)
        state.t = t_end if (i == n_full and not residual) else t_start+i*dt
        if sample_every and i % sample_every == 0:
            sample()
        if i % 1000 == 0:
            logger.debug(f"step {i}/{n_full}, t={state.t:.4f}")
    if residual:
        step(state,build_plan(system,residual,workers))
    state.t = t_end
    if sample_every and (not records or records[-1].t != state.t):
        sample()

    drift = abs(state.norm()-initial_norm)
    if drift > 1e-8:
        raise NumericalError(f"Norm drifted by {drift:.3e} during propagation",stage="propagate")

    return Trajectory(sample_times=np.array([record.t for record in records]),records=records,
                      final_state=state,steps=n_full+bool(residual))
