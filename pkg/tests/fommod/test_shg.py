import os
import sys
import unittest

import numpy as np

sys.path.insert(0,os.path.join(os.getcwd().split("tests")[0],"app"))

from core.constants import hbar
from fommod.shg import (Kappas, eta_norm_from_g, g_from_opo_threshold, g_from_shg, opo_threshold, p_sat,
                        resolve_kappas)

class KappasTest(unittest.TestCase):
    def test_geometric_mean(self):
        kappas = resolve_kappas(2.)
        np.testing.assert_allclose(kappas.kappa,2.,rtol=1e-15)
        np.testing.assert_allclose(kappas.kappa_b/kappas.kappa_a,2.,rtol=1e-15)
        np.testing.assert_allclose(kappas.kappa_a_oc,kappas.kappa_a/2)

    def test_partial(self):
        self.assertEqual(resolve_kappas(kappa_b=4.).kappa_a,2.)
        self.assertEqual(resolve_kappas(kappa_a=1.).kappa_b,2.)
        self.assertEqual(resolve_kappas(kappa_a=1.,kappa_a_oc=0.9).kappa_a_oc,0.9)

    def test_invalid(self):
        self.assertRaises(ValueError,resolve_kappas)
        self.assertRaises(ValueError,Kappas,1.,2.,1.5,1.)
        self.assertRaises(ValueError,Kappas,-1.,2.,0.5,1.)

class ConversionTest(unittest.TestCase):
    def setUp(self):
        self.omega_a0 = 1.2e15
        self.kappas = resolve_kappas(kappa_a=2*np.pi*50e6,kappa_b=2*np.pi*80e6,kappa_a_oc=2*np.pi*30e6)
        self.g = 2*np.pi*16e6

    def test_shg_inverse(self):
        eta_norm = eta_norm_from_g(self.g,self.omega_a0,self.kappas)
        np.testing.assert_allclose(g_from_shg(eta_norm,self.omega_a0,self.kappas),self.g,rtol=1e-12)
        self.assertRaises(ValueError,g_from_shg,0.,self.omega_a0,self.kappas)

    def test_threshold_inverse(self):
        p_th = opo_threshold(self.g,2*self.omega_a0,self.kappas)
        np.testing.assert_allclose(g_from_opo_threshold(p_th,2*self.omega_a0,self.kappas),self.g,rtol=1e-12)
        self.assertEqual(p_sat(p_th),4*p_th)
        self.assertRaises(ValueError,opo_threshold,0.,2*self.omega_a0,self.kappas)

    def test_critical_coupling(self):
        kappas = resolve_kappas(kappa_a=1e8,kappa_b=2e8)
        omega_b0 = 2*self.omega_a0
        np.testing.assert_allclose(opo_threshold(self.g,omega_b0,kappas),2*hbar*omega_b0*1e16*2e8/self.g**2,rtol=1e-12)

if __name__ == '__main__':
    unittest.main()
