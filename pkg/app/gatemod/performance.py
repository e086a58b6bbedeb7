"""
Module to assess the scaling of the gate error.
"""

# Import pypi packages
import numpy as np

def loglog_slope(x,y):
    """
    Least-squares slope of log y against log x.

    Args:
        x (np.array): Abscissae, positive.
        y (np.array): Ordinates, positive.

    Returns:
        slope (float): Fitted exponent.
        residual (float): Root mean square residual of the fit in log space.
    """
    log_x = np.log(np.asarray(x,dtype=float))
    log_y = np.log(np.asarray(y,dtype=float))
    if log_x.size < 2:
        raise ValueError("A slope needs at least two points")
    coefficients = np.polyfit(log_x,log_y,1)
    residual = np.sqrt(np.mean((np.polyval(coefficients,log_x)-log_y)**2))

    return float(coefficients[0]), float(residual)

def is_monotonic_decreasing(values,wiggle=0.05):
    """
    Check that every value is at most (1 + wiggle) times its predecessor.
    """
    values = np.asarray(values,dtype=float)

    return bool(np.all(values[1:] <= (1+wiggle)*values[:-1]))
