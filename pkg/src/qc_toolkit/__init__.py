"""
q-congruence toolkit

Truncated q-series arithmetic over exact and modular integers, eta quotients,
mock theta functions and dissections, used to verify partition congruences
of Ramanujan type to a stated order.
"""

__version__ = "0.1.0"
__author__ = "qc-toolkit developers"
