"""
Dual-rail CZ gate composed from the Kerr-phase channel.

Rails 0 and 1 hold the |0~> and |1~> components of qubit A, rails 2 and 3 those of
qubit B. A 50:50 splitter mixes the two |1~> rails, each splitter output passes a U_pi
channel, and the inverse splitter closes the interferometer. Hong-Ou-Mandel bunching
sends |1~1~> as a two-photon state into one of the channels, which is the only
component acquiring s2. The channel is diag(s0, s1, s2) in the number basis of its
rail; the amplitude it leaks is not renormalized.

Attributes:
    RAIL_DIMENSION (int): Number states kept per rail.
    logical_rails (dict): Occupied rails of the four logical basis states.
"""

# Import native packages
from dataclasses import dataclass
import logging

# Import pypi packages
import numpy as np
import qutip

# Import custom packages
from gatemod import run_upi

logger = logging.getLogger(__name__)

RAIL_DIMENSION = 3
N_RAILS = 4

@dataclass(frozen=True)
class CZResult:
    """
    Attributes:
        dg_ratio (float): Delta/g of the trap.
        epsilon (float): 1 - |<psi_ideal|psi_out>|^2 on the reference state.
        amplitudes (tuple): Channel triple (s0, s1, s2).
        leakage (float): Probability lost from the four rails.
        t_pi (float/None): Located gate time of the underlying U_pi run.
    """
    dg_ratio: float
    epsilon: float
    amplitudes: tuple
    leakage: float
    t_pi: float = None

def rail_operator(operator,rail):
    """
    Embed a single-rail operator into the four-rail space.
    """
    factors = [qutip.qeye(RAIL_DIMENSION)]*N_RAILS
    factors[rail] = operator

    return qutip.tensor(factors)

def fock_state(occupations):
    """
    Four-rail number state.
    """
    return qutip.tensor([qutip.basis(RAIL_DIMENSION,n) for n in occupations])

def beam_splitter(first=1,second=3,theta=np.pi/4):
    """
    Splitter exp(theta (a_1^dag a_2 - a_1 a_2^dag)) between two rails, 50:50 for theta = pi/4.
    """
    a1 = rail_operator(qutip.destroy(RAIL_DIMENSION),first)
    a2 = rail_operator(qutip.destroy(RAIL_DIMENSION),second)

    return (theta*(a1.dag()*a2-a1*a2.dag())).expm()

def channel(s0,s1,s2,rails=(1,3)):
    """
    Number-selective channel diag(s0, s1, s2) on each of the given rails.
    """
    single = qutip.Qobj(np.diag([s0,s1,s2]).astype(complex))
    operator = qutip.tensor([qutip.qeye(RAIL_DIMENSION)]*N_RAILS)
    for rail in rails:
        operator = rail_operator(single,rail)*operator

    return operator

def interferometer(s0,s1,s2):
    """
    Full CZ circuit for the channel triple.
    """
    splitter = beam_splitter()

    return splitter.dag()*channel(s0,s1,s2)*splitter

def logical_state(qubit_a,qubit_b):
    """
    Logical basis state |qubit_a qubit_b>.
    """
    return fock_state(logical_rails[(qubit_a,qubit_b)])

def reference_state():
    """
    (|0~> + |1~>)(|0~> + |1~>)/2.
    """
    state = logical_state(0,0)
    for basis in ((0,1),(1,0),(1,1)):
        state = state+logical_state(*basis)

    return 0.5*state

def ideal_cz(state):
    """
    Apply the ideal CZ to a superposition of logical states.
    """
    out = 0*state
    for (a, b) in logical_rails:
        basis = logical_state(a,b)
        out = out+(-1 if a == b == 1 else 1)*basis.overlap(state)*basis

    return out

def hom_amplitude():
    """
    Amplitude of one photon in each splitter output for the input |1~1~>.
    """
    bunched = beam_splitter()*logical_state(1,1)

    return fock_state((0,1,0,1)).overlap(bunched)

def cz_error_from_channel(s0,s1,s2):
    """
    Gate error of the CZ built from a channel triple.

    Args:
        s0 (complex): Vacuum amplitude.
        s1 (complex): Single-photon amplitude.
        s2 (complex): Two-photon amplitude.

    Returns:
        epsilon (float): 1 - |<psi_ideal|psi_out>|^2 on the reference state.
        leakage (float): 1 - ||psi_out||^2.
    """
    reference = reference_state()
    output = interferometer(s0,s1,s2)*reference
    fidelity = abs(ideal_cz(reference).overlap(output))**2
    leakage = 1-output.norm()**2

    return float(min(max(1-fidelity,0.),1.)), float(leakage)

def cz_error(dg_ratio,dt=None,**model_kwargs):
    """
    CZ gate error of a trap, from the channel amplitudes of a full U_pi run.

    Args:
        dg_ratio (float): Delta/g of the trap.
        dt (float/None): Time step.
        **model_kwargs: Passed to core.model.TrapModel.from_gap_ratio.

    Returns:
        (CZResult): The gate error.
    """
    run = run_upi(dg_ratio,dt,**model_kwargs)
    epsilon, leakage = cz_error_from_channel(1,run.s1,run.s2)
    logger.info(f"Delta/g = {dg_ratio:g}: epsilon = {epsilon:.4e}")

    return CZResult(dg_ratio=dg_ratio,epsilon=epsilon,amplitudes=(1+0j,run.s1,run.s2),leakage=leakage,t_pi=run.t_pi)

logical_rails = {(0,0):(1,0,1,0), (0,1):(1,0,0,1), (1,0):(0,1,1,0), (1,1):(0,1,0,1)}
