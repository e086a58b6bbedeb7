import os
import sys
import unittest

import numpy as np

sys.path.insert(0,os.path.join(os.getcwd().split("tests")[0],"app"))

from gatemod.performance import is_monotonic_decreasing, loglog_slope

class PerformanceTest(unittest.TestCase):
    def test_slope(self):
        x = np.array([2.,3.,4.,6.,8.])
        slope, residual = loglog_slope(x,3*x**-2.)
        np.testing.assert_allclose(slope,-2.,rtol=1e-12)
        self.assertLess(residual,1e-12)
        self.assertRaises(ValueError,loglog_slope,[1.],[1.])

    def test_monotonic(self):
        self.assertTrue(is_monotonic_decreasing([1.,0.5,0.51,0.1]))
        self.assertFalse(is_monotonic_decreasing([1.,0.5,0.6]))
        self.assertTrue(is_monotonic_decreasing([0.3]))

if __name__ == '__main__':
    unittest.main()
