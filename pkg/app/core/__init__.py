"""
Core package: shared settings, constants, exceptions, the trap model and the experiments.

Submodules are imported explicitly (``from core.model import TrapModel``) because the
library packages depend on ``core.errors`` and ``core.constants``.
"""
