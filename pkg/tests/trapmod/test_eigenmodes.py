import os
import sys
import tempfile
import unittest

import numpy as np

sys.path.insert(0,os.path.join(os.getcwd().split("tests")[0],"app"))

from core.errors import NumericalError
from datamod import Grid
from datamod.results import load_results
from trapmod import (check_hermitian, export_eigenmodes, free_potential, hamiltonian_matrix, kinetic_matrix,
                     sech_potential, solve_eigenmodes, tabulated_potential)

class EigenmodesTest(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        cls.grid = Grid(512,40.)
        cls.potential = sech_potential(cls.grid,1.,1.)
        cls.fh = solve_eigenmodes(cls.potential,"FH",n_modes=4)
        cls.sh = solve_eigenmodes(cls.potential,"SH",rho=2.,n_modes=4)

    def test_ground_eigenvalues(self):
        np.testing.assert_allclose(self.fh.eigenvalues[0],-0.5,atol=1e-6)
        np.testing.assert_allclose(self.sh.eigenvalues[0],-1.,atol=1e-6)
        np.testing.assert_allclose(self.sh.gap,2*self.fh.gap,atol=1e-6)

    def test_ground_profile(self):
        reference = 1/np.sqrt(2)/np.cosh(self.grid.xi)
        error = np.sqrt(self.grid.integrate(np.abs(self.fh.ground-reference)**2))
        self.assertLess(error,1e-6)
        error = np.sqrt(self.grid.integrate(np.abs(self.sh.ground-reference)**2))
        self.assertLess(error,1e-6)

    def test_normalization(self):
        norms = self.grid.integrate(np.abs(self.fh.modes)**2)
        np.testing.assert_allclose(norms,1.,atol=1e-12)
        self.assertGreater(self.fh.ground[self.grid.center].real,0)

    def test_bound_count(self):
        self.assertEqual(self.fh.n_bound,1)
        self.assertEqual(self.sh.n_bound,1)
        self.assertTrue(np.all(np.diff(self.fh.eigenvalues) >= 0))

    def test_deeper_trap(self):
        fh = solve_eigenmodes(sech_potential(self.grid,3.,1.),"FH",n_modes=4)
        np.testing.assert_allclose(fh.eigenvalues[:2],[-2.,-0.5],atol=1e-6)
        self.assertEqual(fh.n_bound,2)

    def test_phase_mismatch_shift(self):
        sh = solve_eigenmodes(self.potential,"SH",rho=2.,delta=0.3,n_modes=2)
        np.testing.assert_allclose(sh.eigenvalues[0],-0.7,atol=1e-6)
        np.testing.assert_allclose(sh.gap,1.,atol=1e-6)

    def test_finite_difference(self):
        fh = solve_eigenmodes(self.potential,"FH",n_modes=4,scheme="finite_difference")
        np.testing.assert_allclose(fh.eigenvalues[0],-0.5,atol=1e-2)
        self.assertLess(np.sqrt(self.grid.integrate(np.abs(fh.ground-self.fh.ground)**2)),1e-2)

    def test_free_spectrum(self):
        grid = Grid(64,2*np.pi)
        free = solve_eigenmodes(free_potential(grid),"FH",n_modes=3)
        np.testing.assert_allclose(free.eigenvalues,[0.,0.5,0.5],atol=1e-10)
        self.assertEqual(free.n_bound,0)

    def test_kinetic_symmetric(self):
        grid = Grid(32,10.)
        matrix = kinetic_matrix(grid,2.)
        np.testing.assert_allclose(matrix,matrix.T,atol=1e-14)
        np.testing.assert_allclose(matrix @ np.ones(32),0.,atol=1e-12)
        self.assertRaises(NameError,kinetic_matrix,grid,1.,"chebyshev")

    def test_operator_hermitian(self):
        potential = sech_potential(Grid(64,20.),1.,1.)
        rng = np.random.default_rng(3)
        u, v = rng.normal(size=(2,64))+1j*rng.normal(size=(2,64))
        u, v = u/np.linalg.norm(u), v/np.linalg.norm(v)
        for harmonic in ("FH","SH"):
            for scheme in ("spectral","finite_difference"):
                with self.subTest(harmonic=harmonic,scheme=scheme):
                    H = hamiltonian_matrix(potential,harmonic,rho=2.,delta=0.3,scheme=scheme)
                    self.assertLessEqual(abs(np.vdot(u,H @ v)-np.vdot(H @ u,v)),1e-12)

    def test_hermiticity_check(self):
        self.assertRaises(NumericalError,check_hermitian,np.array([[0.,1.],[0.,0.]]))

    def test_invalid(self):
        self.assertRaises(ValueError,solve_eigenmodes,self.potential,"FH",n_modes=513)
        self.assertRaises(NameError,solve_eigenmodes,self.potential,"TH")
        self.assertRaises(ValueError,tabulated_potential,self.grid,np.ones(512))
        self.assertRaises(ValueError,tabulated_potential,self.grid,np.zeros(16))

    def test_export(self):
        with tempfile.TemporaryDirectory() as folder:
            file = os.path.join(folder,"fh_modes.csv")
            export_eigenmodes(file,self.fh)
            names, data = load_results(file)
        self.assertEqual(list(names[:3]),["xi","re_psi_0","im_psi_0"])
        self.assertEqual(data.shape,(512,9))
        np.testing.assert_allclose(data[:,1],self.fh.ground.real,rtol=1e-11)

if __name__ == '__main__':
    unittest.main()
