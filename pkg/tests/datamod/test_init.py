import os
import sys
import unittest

import numpy as np

sys.path.insert(0,os.path.join(os.getcwd().split("tests")[0],"app"))

from datamod import Grid, check_same_grid

class GridTest(unittest.TestCase):
    def setUp(self):
        self.grid = Grid(16,8.)

    def test_samples(self):
        self.assertEqual(self.grid.dxi,0.5)
        self.assertEqual(self.grid.xi[0],-4.)
        self.assertEqual(self.grid.xi[self.grid.center],0.)
        np.testing.assert_allclose(np.diff(self.grid.xi),0.5)

    def test_wavenumbers(self):
        k = self.grid.k
        self.assertEqual(k[0],0.)
        np.testing.assert_allclose(k[1],2*np.pi/8.)
        np.testing.assert_allclose(np.sort(np.abs(k))[-1],np.pi/0.5)

    def test_integrate(self):
        np.testing.assert_allclose(self.grid.integrate(np.ones(16)),8.)
        gaussian = np.exp(-Grid(256,40.).xi**2)
        np.testing.assert_allclose(Grid(256,40.).integrate(gaussian),np.sqrt(np.pi),rtol=1e-12)

    def test_inner(self):
        f = np.exp(1j*self.grid.xi)
        np.testing.assert_allclose(self.grid.inner(f,f),8.)

    def test_invalid(self):
        self.assertRaises(ValueError,Grid,0,1.)
        self.assertRaises(ValueError,Grid,8,-1.)
        self.assertRaises(ValueError,Grid,8.5,1.)

    def test_same_grid(self):
        check_same_grid(self.grid,Grid(16,8.))
        self.assertRaises(ValueError,check_same_grid,self.grid,Grid(32,8.))

if __name__ == '__main__':
    unittest.main()
