"""
Trap potentials and the linear eigenmode problem.

The normalized linear operator of harmonic u is

    H_u = -(c_u/2) d^2/dxi^2 + V_u(xi),

with c_a = 1, V_a = U for the FH and c_b = rho, V_b = delta + 2U for the SH. It is
discretized on the periodic grid either spectrally (the same Fourier multipliers the
propagator uses) or with the second-order three-point stencil, and diagonalized densely.

Attributes:
    EDGE_TOLERANCE (float): Eigenvalues below edge - EDGE_TOLERANCE count as bound.
    HERMITICITY_TOLERANCE (float): Relative asymmetry accepted before the operator is rejected.
    harmonics (dict): Potential factor and phase-mismatch factor of each harmonic.
"""

# Import native packages
from dataclasses import dataclass
import logging

# Import pypi packages
import numpy as np
from scipy import fft, linalg, sparse
from scipy.sparse.linalg import eigsh

# Import custom packages
from core.errors import NumericalError
from datamod import Grid
from datamod.results import write_eigenmodes

logger = logging.getLogger(__name__)

EDGE_TOLERANCE = 1e-9
HERMITICITY_TOLERANCE = 1e-12

@dataclass(frozen=True,eq=False)
class TrapPotential:
    """
    Sampled FH trap potential U(xi).

    Attributes:
        kind (str): "sech_family" or "tabulated".
        alpha (float/None): Depth factor of a sech family trap.
        xi0 (float/None): Width of a sech family trap.
        samples (np.array): U on the grid.
        grid (datamod.Grid): The fast-time grid.
    """
    kind: str
    alpha: float
    xi0: float
    samples: np.ndarray
    grid: Grid

    def __post_init__(self):
        if self.kind not in ("sech_family","tabulated"):
            raise ValueError(f"Unknown potential kind {self.kind}")
        if self.samples.shape != (self.grid.n,):
            raise ValueError(f"Potential has {self.samples.size} samples for a grid of {self.grid.n}")
        if np.max(self.samples) > 0:
            raise ValueError("Trap potential must be attractive, max(U) <= 0")
        self.samples.setflags(write=False)

    def for_harmonic(self,harmonic,delta=0.):
        """
        Potential seen by one harmonic.

        Args:
            harmonic (str): "FH" or "SH".
            delta (float): Normalized phase mismatch, SH only.

        Returns:
            (np.array): U for the FH, delta + 2U for the SH.
        """
        factor, offset = harmonics[harmonic]

        return factor*self.samples + offset*delta

def sech_potential(grid,alpha,xi0):
    """
    Sech^2 trap U = -alpha*xi0^-2*sech^2(xi/xi0).

    Args:
        grid (datamod.Grid): The fast-time grid.
        alpha (float): Depth factor.
        xi0 (float): Trap width.

    Returns:
        (TrapPotential): The sampled potential.
    """
    if not (alpha > 0 and xi0 > 0):
        raise ValueError(f"Sech trap needs alpha > 0 and xi0 > 0, got alpha={alpha}, xi0={xi0}")
    samples = -alpha/xi0**2/np.cosh(grid.xi/xi0)**2

    return TrapPotential("sech_family",float(alpha),float(xi0),samples,grid)

def tabulated_potential(grid,samples):
    """
    Trap given by its samples.
    """
    return TrapPotential("tabulated",None,None,np.array(samples,dtype=float),grid)

def free_potential(grid):
    """
    Untrapped system, U = 0.
    """
    return tabulated_potential(grid,np.zeros(grid.n))

@dataclass(frozen=True,eq=False)
class EigenmodeSet:
    """
    Lowest eigenpairs of one harmonic.

    Attributes:
        harmonic (str): "FH" or "SH".
        eigenvalues (np.array): Ascending eigenvalues lambda_m.
        modes (np.array): Grid-sampled modes, one per row, normalized as sum |psi|^2 dxi = 1.
        n_bound (int): Number of eigenvalues below the continuum edge.
        edge (float): Continuum edge, 0 for the FH and delta for the SH.
        grid (datamod.Grid): The fast-time grid.
    """
    harmonic: str
    eigenvalues: np.ndarray
    modes: np.ndarray
    n_bound: int
    edge: float
    grid: Grid

    @property
    def ground(self):
        """
        np.array: The lowest mode.
        """
        return self.modes[0]

    @property
    def gap(self):
        """
        float: Binding energy of the ground mode below the continuum edge.
        """
        return self.edge-self.eigenvalues[0]

def kinetic_matrix(grid,prefactor=1.,scheme="spectral"):
    """
    Discrete -(prefactor/2) d^2/dxi^2 on the periodic grid.

    Args:
        grid (datamod.Grid): The fast-time grid.
        prefactor (float): Kinetic prefactor c_u.
        scheme (str): "spectral" (Fourier multipliers) or "finite_difference".

    Returns:
        (np.array/scipy.sparse matrix): Dense matrix for the spectral scheme, sparse for finite differences.
    """
    if scheme == "spectral":
        column = fft.ifft(0.5*prefactor*grid.k**2).real
        return linalg.circulant(column)
    elif scheme == "finite_difference":
        n = grid.n
        scale = 0.5*prefactor/grid.dxi**2
        if n < 3:
            raise ValueError("Finite differences need at least three samples")
        laplacian = sparse.diags([-1,2,-1],[-1,0,1],shape=(n,n),format="lil")
        laplacian[0,n-1] = -1
        laplacian[n-1,0] = -1
        return scale*laplacian.tocsr()
    else:
        raise NameError(f"Unknown discretization scheme {scheme}")

def hamiltonian_matrix(potential,harmonic,rho=2.,delta=0.,scheme="spectral"):
    """
    Linear operator of one harmonic.

    Args:
        potential (TrapPotential): FH trap potential.
        harmonic (str): "FH" or "SH".
        rho (float): GVD ratio.
        delta (float): Normalized phase mismatch.
        scheme (str): Discretization scheme.

    Returns:
        (np.array/scipy.sparse matrix): The operator.
    """
    prefactor = kinetic_prefactor(harmonic,rho)
    kinetic = kinetic_matrix(potential.grid,prefactor,scheme)
    diagonal = potential.for_harmonic(harmonic,delta)
    if sparse.issparse(kinetic):
        return (kinetic+sparse.diags(diagonal)).tocsr()

    return kinetic+np.diag(diagonal)

def kinetic_prefactor(harmonic,rho):
    """
    Kinetic prefactor, 1 for the FH and rho for the SH.
    """
    if harmonic not in harmonics:
        raise NameError(f"Unknown harmonic {harmonic}, use FH or SH")

    return rho if harmonic == "SH" else 1.

def check_hermitian(matrix):
    """
    Symmetry self-check of a discretized operator.

    Raises:
        NumericalError: If the relative asymmetry exceeds HERMITICITY_TOLERANCE.
    """
    dense = matrix.toarray() if sparse.issparse(matrix) else matrix
    asymmetry = np.max(np.abs(dense-dense.conj().T))
    scale = max(np.max(np.abs(dense)),1.)
    if asymmetry > HERMITICITY_TOLERANCE*scale:
        raise NumericalError(f"Discretized operator is not Hermitian, asymmetry {asymmetry:.3e}",stage="eigenmodes")

def solve_eigenmodes(potential,harmonic,rho=2.,delta=0.,n_modes=8,scheme="spectral"):
    """
    Solve the linear eigenmode problem of one harmonic.

    Args:
        potential (TrapPotential): FH trap potential.
        harmonic (str): "FH" or "SH".
        rho (float): GVD ratio.
        delta (float): Normalized phase mismatch.
        n_modes (int): Number of lowest eigenpairs to return.
        scheme (str): "spectral" or "finite_difference".

    Returns:
        (EigenmodeSet): The eigenpairs.

    Raises:
        ValueError: If n_modes exceeds the grid size.
        NumericalError: If the discretization fails the Hermiticity self-check.

    Notes:
        The ground mode is made positive at xi = 0, every other mode positive at its
        largest-magnitude sample.
    """
    grid = potential.grid
    if not 1 <= n_modes <= grid.n:
        raise ValueError(f"n_modes={n_modes} must be between 1 and n_grid={grid.n}")

    matrix = hamiltonian_matrix(potential,harmonic,rho,delta,scheme)
    check_hermitian(matrix)

    if sparse.issparse(matrix) and n_modes < grid.n-1:
        eigenvalues, vectors = eigsh(matrix,k=n_modes,which="SA")
        order = np.argsort(eigenvalues)
        eigenvalues, vectors = eigenvalues[order], vectors[:,order]
    else:
        dense = matrix.toarray() if sparse.issparse(matrix) else matrix
        dense = 0.5*(dense+dense.T)
        eigenvalues, vectors = linalg.eigh(dense,subset_by_index=[0,n_modes-1])

    modes = vectors.T/np.sqrt(grid.dxi)
    for m, mode in enumerate(modes):
        anchor = grid.center if m == 0 else np.argmax(np.abs(mode))
        if mode[anchor] < 0:
            modes[m] = -mode

    edge = delta if harmonic == "SH" else 0.
    n_bound = int(np.sum(eigenvalues < edge-EDGE_TOLERANCE))
    logger.debug(f"{harmonic}: lambda_0={eigenvalues[0]:.10f}, {n_bound} bound modes")

    return EigenmodeSet(harmonic,eigenvalues,modes.astype(complex),n_bound,edge,grid)

def export_eigenmodes(file,modeset):
    """
    Export the modes of one harmonic as CSV.
    """
    write_eigenmodes(file,modeset)

# (potential factor, delta factor)
harmonics = {"FH":(1.,0.), "SH":(2.,1.)}
