"""
Propagation module.

The aim of the propmod package is to evolve the two-photon state: the state container
and its observables (state), the split-step integrator (propagator) and the dense
matrix-exponential oracle used to validate it (oracle).
"""
