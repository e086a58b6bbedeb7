"""
Dense matrix-exponential oracle for the two-photon dynamics on tiny grids.

The discretized fields are turned into bosonic site modes a_i = sqrt(dxi) a(xi_i),
b_i = sqrt(dxi) b(xi_i). The truncated number basis is ordered as

    [ |0> | |1_i> (n) | |1_i 1_j>, i <= j (n(n+1)/2) | |b_i> (n) ],

where |1_i 1_i> means |2_i>. The Hamiltonian uses the same Fourier kinetic operator,
potential samples and diagonal nonlinear kernel as the split-step propagator, so the
two agree up to the splitting error.

Attributes:
    MAX_ORACLE_GRID (int): Largest grid accepted by the oracle.
"""

# Import native packages
from itertools import combinations_with_replacement

# Import pypi packages
import numpy as np
from scipy import linalg

# Import custom packages
from propmod.state import TwoPhotonState
from trapmod import kinetic_matrix

MAX_ORACLE_GRID = 8

def pair_index(n):
    """
    Ordered pairs i <= j of the two-photon block and their positions.
    """
    pairs = list(combinations_with_replacement(range(n),2))

    return pairs, {pair:position for position, pair in enumerate(pairs)}

def fock_dimension(n):
    """
    Dimension 1 + n + n(n+1)/2 + n of the truncated basis.
    """
    return 1+n+n*(n+1)//2+n

def to_fock_vector(state):
    """
    Expand a state in the truncated number basis.

    The pair amplitude follows from int int R a^dag a^dag = sum_ij dxi R_ij a_i^dag a_j^dag
    with a_i^dag a_j^dag|0> = |1_i 1_j> for i != j and sqrt(2)|2_i> for i = j.

    Args:
        state (propmod.state.TwoPhotonState): The state.

    Returns:
        (np.array): Amplitudes in the number basis.
    """
    n = state.grid.n
    dxi = state.grid.dxi
    pairs, _ = pair_index(n)
    two_photon = np.array([np.sqrt(2)*dxi*state.R[i,i] if i == j else 2*dxi*state.R[i,j] for i, j in pairs],dtype=complex)

    return np.concatenate(([state.P],np.sqrt(dxi)*state.Q,two_photon,np.sqrt(dxi)*state.S))

def from_fock_vector(vector,grid,t=0.):
    """
    Inverse of to_fock_vector.
    """
    n = grid.n
    dxi = grid.dxi
    pairs, _ = pair_index(n)
    n_pairs = len(pairs)

    Q = vector[1:1+n]/np.sqrt(dxi)
    R = np.zeros((n,n),dtype=complex)
    for (i, j), amplitude in zip(pairs,vector[1+n:1+n+n_pairs]):
        if i == j:
            R[i,i] = amplitude/(np.sqrt(2)*dxi)
        else:
            R[i,j] = R[j,i] = amplitude/(2*dxi)
    S = vector[1+n+n_pairs:]/np.sqrt(dxi)

    return TwoPhotonState(vector[0],Q,R,S,grid,t)

def symmetric_isometry(n):
    """
    Isometry W mapping the pair basis into the n^2 product basis.

    Returns:
        (np.array): W of shape (n^2, n(n+1)/2), |2_i> -> e_ii, |1_i 1_j> -> (e_ij + e_ji)/sqrt(2).
    """
    pairs, _ = pair_index(n)
    W = np.zeros((n*n,len(pairs)))
    for position, (i, j) in enumerate(pairs):
        if i == j:
            W[i*n+i,position] = 1
        else:
            W[i*n+j,position] = W[j*n+i,position] = 1/np.sqrt(2)

    return W

def dense_hamiltonian(system):
    """
    Hamiltonian matrix of the normalized system in the truncated number basis.

    Args:
        system (propmod.propagator.PropagationSystem): The system.

    Returns:
        (np.array): Hermitian matrix of size fock_dimension(n).
    """
    grid = system.grid
    n = grid.n
    h_a = kinetic_matrix(grid,1.)+np.diag(system.potential)
    h_b = kinetic_matrix(grid,system.rho)+np.diag(system.delta+2*system.potential)
    W = symmetric_isometry(n)
    identity = np.eye(n)
    h_aa = W.T @ (np.kron(h_a,identity)+np.kron(identity,h_a)) @ W

    pairs, positions = pair_index(n)
    n_pairs = len(pairs)
    dimension = fock_dimension(n)
    H = np.zeros((dimension,dimension),dtype=complex)
    H[1:1+n,1:1+n] = h_a
    H[1+n:1+n+n_pairs,1+n:1+n+n_pairs] = h_aa
    H[1+n+n_pairs:,1+n+n_pairs:] = h_b
    for i in range(n):
        row = 1+n+positions[(i,i)]
        column = 1+n+n_pairs+i
        H[row,column] = H[column,row] = system.site_coupling

    return 0.5*(H+H.conj().T)

def exact_oracle(system,initial,t_end):
    """
    Propagate by exact matrix exponentiation.

    Args:
        system (propmod.propagator.PropagationSystem): The system.
        initial (propmod.state.TwoPhotonState): Initial state, left untouched.
        t_end (float): Target time.

    Returns:
        (propmod.state.TwoPhotonState): The state at t_end.

    Raises:
        ValueError: If the grid has more than MAX_ORACLE_GRID sites.
    """
    if system.grid.n > MAX_ORACLE_GRID:
        raise ValueError(f"Oracle grid of {system.grid.n} sites exceeds the limit of {MAX_ORACLE_GRID}")
    H = dense_hamiltonian(system)
    vector = linalg.expm(-1j*(t_end-initial.t)*H) @ to_fock_vector(initial)

    return from_fock_vector(vector,system.grid,t_end)
