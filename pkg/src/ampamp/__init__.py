"""
ampamp - amplitude amplification with cost oracles.

Collective-state simulation, closed-form Grover analysis, circuit compilation and
fidelity scoring of first-iteration measurement records.
"""

__version__ = "0.0.1"
