import os
import sys
import tempfile
import unittest

import numpy as np

sys.path.insert(0,os.path.join(os.getcwd().split("tests")[0],"app"))

from datamod import Grid
from datamod.results import (format_cell, load_checkpoint, load_results, save_checkpoint, write_results,
                             write_table)
from propmod.state import TwoPhotonState

class ResultsTest(unittest.TestCase):
    def setUp(self):
        self.folder = tempfile.TemporaryDirectory()

    def tearDown(self):
        self.folder.cleanup()

    def path(self,name):
        return os.path.join(self.folder.name,name)

    def test_format_cell(self):
        self.assertEqual(format_cell(None),"")
        self.assertEqual(format_cell("ring"),"ring")
        self.assertEqual(format_cell(3),"3")
        self.assertEqual(format_cell(True),"1")
        self.assertEqual(format_cell(0.5),"5.000000000000e-01")

    def test_results(self):
        data = np.array([[0.,1.5],[1.,-2.25]])
        write_results(self.path("table.csv"),["t","n_sh"],data)
        names, loaded = load_results(self.path("table.csv"))
        self.assertEqual(list(names),["t","n_sh"])
        np.testing.assert_array_equal(loaded,data)
        with open(self.path("table.csv"),"rb") as f:
            raw = f.read()
        self.assertNotIn(b"\r",raw)
        self.assertTrue(raw.startswith(b"t,n_sh\n0.000000000000e+00,1.500000000000e+00\n"))

    def test_width_mismatch(self):
        self.assertRaises(ValueError,write_results,self.path("bad.csv"),["t"],np.zeros((2,2)))
        self.assertRaises(ValueError,write_table,self.path("bad.csv"),["name","x"],[["a"]])

    def test_table(self):
        write_table(self.path("fom.csv"),["name","g","kappa"],[["phc",0.03,None],["ring",None,2]])
        with open(self.path("fom.csv"),encoding="utf-8") as f:
            lines = f.read().splitlines()
        self.assertEqual(lines,["name,g,kappa","phc,3.000000000000e-02,","ring,,2"])

    def test_checkpoint(self):
        grid = Grid(4,2.)
        rng = np.random.default_rng(1)
        R = rng.normal(size=(4,4))+1j*rng.normal(size=(4,4))
        state = TwoPhotonState(0.5j,rng.normal(size=4),R,1j*rng.normal(size=4),grid)
        save_checkpoint(self.path("state.bin"),state)
        self.assertEqual(os.path.getsize(self.path("state.bin")),16+16*(1+4+16+4))
        n, P, Q, R, S = load_checkpoint(self.path("state.bin"))
        self.assertEqual(n,4)
        self.assertEqual(P,0.5j)
        np.testing.assert_array_equal(Q,state.Q)
        np.testing.assert_array_equal(R,state.R)
        np.testing.assert_array_equal(S,state.S)

    def test_bad_checkpoint(self):
        with open(self.path("junk.bin"),"wb") as f:
            f.write(b"NOTACHECKPOINT00"+bytes(16))
        self.assertRaisesRegex(ValueError,"magic",load_checkpoint,self.path("junk.bin"))

if __name__ == '__main__':
    unittest.main()
