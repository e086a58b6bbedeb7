import os
import sys
import unittest

import numpy as np

sys.path.insert(0,os.path.join(os.getcwd().split("tests")[0],"app"))

from datamod import Grid
from trapmod import sech_potential, solve_eigenmodes
from trapmod.coupling import LEAKAGE_TOLERANCE, CouplingTensors, coupling_tensor, leakage_bound_violations

class CouplingTest(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        cls.grid = Grid(512,40.)
        potential = sech_potential(cls.grid,1.,1.)
        cls.fh = solve_eigenmodes(potential,"FH",n_modes=6)
        cls.sh = solve_eigenmodes(potential,"SH",rho=2.,n_modes=6)
        cls.tensors = coupling_tensor(cls.fh,cls.sh,1.)

    def test_ground_coupling(self):
        np.testing.assert_allclose(self.tensors.g,np.pi/(4*np.sqrt(2)),atol=1e-8)
        np.testing.assert_allclose(coupling_tensor(self.fh,self.sh,2.5).g,2.5*self.tensors.g,rtol=1e-14)

    def test_layout(self):
        self.assertEqual(self.tensors.g_lmn.shape,(6,6,6))
        np.testing.assert_allclose(self.tensors.g_lmn,np.swapaxes(self.tensors.g_lmn,1,2),atol=1e-15)
        self.assertEqual(coupling_tensor(self.fh,self.sh,n_fh=2,n_sh=3).g_lmn.shape,(3,2,2))

    def test_phase_mismatch(self):
        delta = self.tensors.delta_lmn
        np.testing.assert_allclose(delta[0,0,0],0.,atol=1e-8)
        np.testing.assert_allclose(delta[2,1,3],self.sh.eigenvalues[2]-self.fh.eigenvalues[1]-self.fh.eigenvalues[3])

    def test_no_violations(self):
        self.assertEqual(leakage_bound_violations(self.tensors,self.fh.gap,self.sh.gap),[])

    def test_violations(self):
        delta = np.ones((2,2,2))
        delta[1,0,0] = 0.2
        delta[0,1,1] = -0.1
        tensors = CouplingTensors(np.zeros((2,2,2)),delta)
        violations = leakage_bound_violations(tensors,0.5,1.)
        self.assertEqual([violation[:3] for violation in violations],[(1,0,0),(0,1,1)])
        np.testing.assert_allclose(violations[1][3],0.1)

    def test_tolerance(self):
        delta = np.ones((2,2,2))
        delta[1,0,0] = (1-LEAKAGE_TOLERANCE/2)*2.
        tensors = CouplingTensors(np.zeros((2,2,2)),delta)
        self.assertEqual(leakage_bound_violations(tensors,0.5,2.),[])
        self.assertEqual(leakage_bound_violations(tensors,0.5,2.,tolerance=LEAKAGE_TOLERANCE),[])
        self.assertEqual(len(leakage_bound_violations(tensors,0.5,2.,tolerance=0.)),1)
        self.assertEqual(len(leakage_bound_violations(tensors,0.5,2.*(1+LEAKAGE_TOLERANCE))),1)

    def test_grid_mismatch(self):
        other = solve_eigenmodes(sech_potential(Grid(256,40.),1.,1.),"SH",n_modes=2)
        self.assertRaises(ValueError,coupling_tensor,self.fh,other)

if __name__ == '__main__':
    unittest.main()
