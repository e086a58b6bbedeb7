import json
import os
import sys
import tempfile
import unittest

sys.path.insert(0,os.path.join(os.getcwd().split("tests")[0],"app"))

from core.errors import ConfigError
from core.settings import get_input_from_id, load_json, resolve_config, settings

INPUTS = os.path.join(settings["root"],"app","inputs")

class SettingsTest(unittest.TestCase):
    def setUp(self):
        self.folder = tempfile.TemporaryDirectory()

    def tearDown(self):
        self.folder.cleanup()

    def write(self,name,text):
        path = os.path.join(self.folder.name,name)
        with open(path,"w",encoding="utf-8") as f:
            f.write(text)
        return path

    def test_defaults(self):
        resolve_config(None,"eigenmodes")
        self.assertEqual(settings["experiment"],"eigenmodes")
        self.assertEqual(settings["params"]["dg_ratio"],3.0)
        self.assertEqual(settings["params"]["scheme"],"spectral")
        self.assertEqual(settings["output_dir"],os.path.join("data","eigenmodes"))

    def test_precedence(self):
        config = {"format_version":"1","experiment":"rabi","output_dir":"data/x","params":{"dg_ratio":2.0,"periods":1.0}}
        resolve_config(config,"rabi",{"dg_ratio":4.0,"dt":None})
        self.assertEqual(settings["params"]["dg_ratio"],4.0)
        self.assertEqual(settings["params"]["periods"],1.0)
        self.assertIsNone(settings["params"]["dt"])
        self.assertEqual(settings["output_dir"],"data/x")

    def test_output_dir_flag(self):
        config = {"format_version":"1","experiment":"fom","output_dir":"data/x","params":{}}
        resolve_config(config,None,None,"data/y")
        self.assertEqual(settings["output_dir"],"data/y")

    def test_unknown_param(self):
        with self.assertRaisesRegex(ConfigError,"params.oversample"):
            resolve_config({"format_version":"1","params":{"oversample":3}},"upi")

    def test_unknown_top_level(self):
        self.assertRaises(ConfigError,resolve_config,{"format_version":"1","experiment":"fom","extra":1})

    def test_format_version(self):
        self.assertRaises(ConfigError,resolve_config,{"format_version":"2","experiment":"fom"})

    def test_experiment_mismatch(self):
        self.assertRaises(ConfigError,resolve_config,{"format_version":"1","experiment":"fom"},"rabi")

    def test_missing_experiment(self):
        self.assertRaises(ConfigError,resolve_config,{"format_version":"1"})

    def test_invalid_choice(self):
        self.assertRaises(ConfigError,resolve_config,None,"eigenmodes",{"scheme":"chebyshev"})

    def test_invalid_experiment(self):
        self.assertRaises(ConfigError,resolve_config,None,"optimize")

    def test_duplicate_key(self):
        path = self.write("dup.json",'{"experiment": "fom", "experiment": "rabi"}')
        self.assertRaisesRegex(ConfigError,"Duplicate",load_json,path)

    def test_nan_rejected(self):
        path = self.write("nan.json",'{"params": {"dt": NaN}}')
        self.assertRaises(ConfigError,load_json,path)

    def test_malformed(self):
        path = self.write("bad.json",'{"params": ')
        self.assertRaises(ConfigError,load_json,path)

    def test_missing_file(self):
        self.assertRaises(ConfigError,load_json,os.path.join(self.folder.name,"absent"))

    def test_input_from_id(self):
        file = get_input_from_id(3,INPUTS)
        self.assertEqual(os.path.basename(file),"003-upi")
        self.assertRaises(ConfigError,get_input_from_id,999,INPUTS)

    def test_shipped_inputs(self):
        for name in sorted(os.listdir(INPUTS)):
            with self.subTest(input=name):
                config = load_json(os.path.join(INPUTS,name))
                resolve_config(config)
                self.assertEqual(settings["experiment"],config["experiment"])

    def test_round_trip_document(self):
        document = {"format_version":"1","experiment":"cz-sweep","params":{"dg_ratios":[2.0,4.0]}}
        path = self.write("cz.json",json.dumps(document))
        resolve_config(load_json(path))
        self.assertEqual(settings["params"]["dg_ratios"],[2.0,4.0])
        self.assertIn("n_grid",settings["params"])

if __name__ == '__main__':
    unittest.main()
