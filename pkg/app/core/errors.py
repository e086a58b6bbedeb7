"""
Exceptions shared across the framework.

The command-line front end maps them onto exit codes: ``ConfigError`` to 2 and
``NumericalError`` to 3.
"""

class ConfigError(ValueError):
    """
    Invalid or inconsistent run configuration.
    """

class NumericalError(ArithmeticError):
    """
    A simulation produced non-finite values or failed an internal consistency check.

    Attributes:
        stage (str): Name of the computation stage that failed.
    """

    def __init__(self,message,stage=None):
        super().__init__(message)
        self.stage = stage
