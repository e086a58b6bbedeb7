# so that unittests work from command line
# tests can be run from root using **python -m unittest discover -s tests -t .**
# or from tests using **python run_tests.py**
