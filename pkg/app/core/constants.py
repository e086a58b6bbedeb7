"""
Physical constants table shared by every module.

Values are pinned to CODATA 2018 so that figure-of-merit outputs do not drift with the
installed scipy release; ``tests/test_constants.py`` cross-checks them against
``scipy.constants``.

Attributes:
    CONSTANTS_VERSION (str): Identifier of the pinned table, recorded in every manifest.
    hbar (float): Reduced Planck constant (J s).
    c (float): Speed of light in vacuum (m/s).
    epsilon_0 (float): Vacuum permittivity (F/m).
    Z0 (float): Vacuum impedance (Ohm).
    constants_table (dict): All of the above by name.
"""

# Import native packages
from math import pi

CONSTANTS_VERSION = "CODATA-2018"

h = 6.62607015e-34
hbar = h/(2*pi)
c = 299792458.0
epsilon_0 = 8.8541878128e-12
Z0 = 1/(epsilon_0*c)

constants_table = {"hbar":hbar, "c":c, "epsilon_0":epsilon_0, "Z0":Z0}
