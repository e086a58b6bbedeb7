import os
import sys
import unittest

import numpy as np

sys.path.insert(0,os.path.join(os.getcwd().split("tests")[0],"app"))

from datamod import Grid
from datamod.normalization import gap_ratio
from trapmod import sech_potential, solve_eigenmodes
from trapmod.analytic import (analytic_bound_modes, effective_g_general, gap_ratio_general, gate_time,
                              sech_exponent, sech_power_mode, xi0_for_gap_ratio)

class AnalyticTest(unittest.TestCase):
    def test_exponent(self):
        self.assertEqual(sech_exponent(1.),1.)
        self.assertEqual(sech_exponent(3.),2.)
        self.assertRaises(ValueError,sech_exponent,0.)

    def test_reference_trap(self):
        modes = analytic_bound_modes(1.,2.,1.)
        self.assertEqual((modes.q_a,modes.q_b),(1.,1.))
        self.assertEqual(modes.lambda_a(),-0.5)
        self.assertEqual(modes.matching_offset,0.)
        self.assertEqual(modes.lambda_b(),-1.)
        np.testing.assert_allclose(effective_g_general(1.,2.,1.),np.pi/(4*np.sqrt(2)),rtol=1e-14)
        np.testing.assert_allclose(effective_g_general(1.,2.,0.25,2.),np.pi*2/(4*np.sqrt(0.5)),rtol=1e-14)

    def test_mode_norm(self):
        xi = Grid(4096,60.).xi
        for q, xi0 in ((1.,1.),(2.,0.5),(0.6,1.)):
            with self.subTest(q=q,xi0=xi0):
                norm = np.sum(sech_power_mode(xi,q,xi0)**2)*(60./4096)
                np.testing.assert_allclose(norm,1.,rtol=1e-10)

    def test_coupling_quadrature(self):
        grid = Grid(4096,80.)
        for alpha, rho in ((1.,2.),(3.,2.),(1.5,1.),(0.8,3.)):
            with self.subTest(alpha=alpha,rho=rho):
                modes = analytic_bound_modes(alpha,rho,1.3)
                quadrature = grid.integrate(modes.psi_b(grid.xi)*modes.psi_a(grid.xi)**2)
                np.testing.assert_allclose(effective_g_general(alpha,rho,1.3),quadrature,rtol=1e-9)

    def test_against_numerical(self):
        grid = Grid(512,40.)
        potential = sech_potential(grid,3.,1.)
        modes = analytic_bound_modes(3.,2.,1.)
        fh = solve_eigenmodes(potential,"FH",n_modes=2)
        sh = solve_eigenmodes(potential,"SH",rho=2.,delta=modes.matching_offset,n_modes=2)
        np.testing.assert_allclose(fh.eigenvalues[0],modes.lambda_a(),atol=1e-6)
        np.testing.assert_allclose(sh.eigenvalues[0],modes.lambda_b(),atol=1e-6)
        self.assertLess(np.sqrt(grid.integrate(np.abs(fh.ground-modes.psi_a(grid.xi))**2)),1e-6)

    def test_gap_ratio(self):
        np.testing.assert_allclose(gap_ratio_general(1.,2.,0.7),gap_ratio(0.7),rtol=1e-13)
        for dg_ratio in (0.5,3.,20.):
            xi0 = xi0_for_gap_ratio(dg_ratio,2.,1.5)
            np.testing.assert_allclose(gap_ratio_general(2.,1.5,xi0),dg_ratio,rtol=1e-12)
        self.assertRaises(ValueError,xi0_for_gap_ratio,0.)

    def test_gate_time(self):
        np.testing.assert_allclose(gate_time(1.,2.,1.),8.,rtol=1e-14)
        np.testing.assert_allclose(gate_time(1.,2.,0.25),4.,rtol=1e-14)

if __name__ == '__main__':
    unittest.main()
