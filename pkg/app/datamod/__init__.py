"""
Data handling module.

The aim of the datamod package is to handle the data: the fast-time grid shared by all
fields, the physical to normalized unit conversion, platform records and result files.
"""

# Import pypi packages
import numpy as np

class Grid:
    """
    Periodic fast-time grid.

    The sample points are ``xi_i = -box/2 + i*dxi`` with ``dxi = box/n``, so that
    ``xi = 0`` is a grid point for even ``n``.

    Attributes:
        n (int): Number of samples.
        box (float): Normalized extent of the periodic window.
        dxi (float): Sample spacing.
        xi (np.array): Sample coordinates.
        k (np.array): Angular wavenumbers in FFT order.
    """

    def __init__(self,n,box):
        """
        Args:
            n (int): Number of samples.
            box (float): Normalized extent of the periodic window.

        Raises:
            ValueError: If n < 1 or box <= 0.
        """
        if int(n) != n or n < 1:
            raise ValueError(f"Grid size must be a positive integer, got {n}")
        if not box > 0:
            raise ValueError(f"Grid extent must be positive, got {box}")
        self.n = int(n)
        self.box = float(box)
        self.dxi = self.box/self.n
        self.xi = -self.box/2 + self.dxi*np.arange(self.n)
        self.k = 2*np.pi*np.fft.fftfreq(self.n,d=self.dxi)

    def __eq__(self,other):
        return isinstance(other,Grid) and self.n == other.n and self.box == other.box

    def __hash__(self):
        return hash((self.n,self.box))

    def __repr__(self):
        return f"Grid(n={self.n}, box={self.box})"

    @property
    def center(self):
        """
        int: Index of the sample closest to xi = 0.
        """
        return int(np.argmin(np.abs(self.xi)))

    def integrate(self,values):
        """
        Trapezoid rule on the periodic grid.

        Args:
            values (np.array): Samples, the last axis runs over the grid.

        Returns:
            (np.array/complex): Integral over the window.
        """
        return np.sum(values,axis=-1)*self.dxi

    def inner(self,f,g):
        """
        Grid inner product <f, g> with the first argument conjugated.
        """
        return np.vdot(f,g)*self.dxi

def check_same_grid(*grids):
    """
    Check that all given grids coincide.

    Raises:
        ValueError: On a grid mismatch.
    """
    first = grids[0]
    for grid in grids[1:]:
        if grid != first:
            raise ValueError(f"Grid mismatch: {first} and {grid}")
