"""
Combinatorics of simultaneous core partitions.

Partitions and their cores, the extended abacus, lattice paths, the
bijections between them, closed counting formulas and a brute-force oracle.
"""

from src.combinatorics.bijections import core_to_path, path_to_core, phi, phi_inverse
from src.combinatorics.counting import count_main, evaluate
from src.combinatorics.oracle import enumerate_cores, enumerate_paths_exhaustive
from src.combinatorics.paths import canonicalize, enumerate_gen_dyck, enumerate_rational_motzkin

__all__ = [
    'core_to_path',
    'path_to_core',
    'phi',
    'phi_inverse',
    'count_main',
    'evaluate',
    'enumerate_cores',
    'enumerate_paths_exhaustive',
    'canonicalize',
    'enumerate_gen_dyck',
    'enumerate_rational_motzkin'
]
