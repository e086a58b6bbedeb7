import os
import sys
import unittest

import numpy as np

sys.path.insert(0,os.path.join(os.getcwd().split("tests")[0],"app"))

from datamod.platforms import MissingFieldError, Platform

class PlatformTest(unittest.TestCase):
    def test_record(self):
        p = Platform.from_record({"name":"tfln","lambda_fh":1.56e-6,"n_g":2.324,"eta0":40.})
        np.testing.assert_allclose(p.eta0,4e5)
        np.testing.assert_allclose(p.v_g,299792458.0/2.324)
        np.testing.assert_allclose(p.omega_b0,2*p.omega_a0)
        np.testing.assert_allclose(p.omega_a0,2*np.pi*299792458.0/1.56e-6)

    def test_unknown_key(self):
        self.assertRaisesRegex(ValueError,"Unknown platform keys",Platform.from_record,{"name":"x","Q":1e6})

    def test_positive(self):
        self.assertRaises(ValueError,Platform,name="x",Q_a=-1.)
        self.assertRaises(ValueError,Platform,name="x",n=0.)

    def test_outcoupling(self):
        self.assertRaises(ValueError,Platform,name="x",kappa_a=1.,kappa_a_oc=2.)
        Platform(name="x",kappa_a=2.,kappa_a_oc=1.)

    def test_require(self):
        p = Platform(name="x",lambda_fh=1.55e-6)
        p.require("lambda_fh")
        with self.assertRaisesRegex(MissingFieldError,"n_g, tau0"):
            p.require("lambda_fh","n_g","tau0")
        self.assertRaises(MissingFieldError,getattr,p,"v_g")

if __name__ == '__main__':
    unittest.main()
