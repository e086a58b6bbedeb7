import os
import sys
import unittest

verbose = 2
tests_folder = os.path.dirname(os.path.abspath(__file__))

loader = unittest.TestLoader()
testSuite = loader.discover(tests_folder,pattern='test_*.py', top_level_dir=os.path.dirname(tests_folder))
testRunner = unittest.TextTestRunner(verbosity=verbose)
result = testRunner.run(testSuite)

sys.exit(not result.wasSuccessful())
