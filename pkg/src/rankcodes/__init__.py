"""Rank-metric coding workbench.

Gabidulin/MRD codes with erasure and combined error-erasure decoding,
q-cyclic and LCD rank-distance codes, integer rank-distance codes over
Z_2m, concatenated rank-metric codes, classical block codes for the
inner layer, and channel simulation.
"""

__version__ = "0.1.0"
