"""Commutation geometry of generalized Pauli operators on prime-dimensional factors."""

from .geometry import (DualGeometry, IncidenceGeometry, anti_flag_connection_numbers,
                       build_geometry, dual_graph, find_grids, find_ovoids, is_hyperplane,
                       multi_line_hyperplanes, multi_line_pairs, mub_line_sets, perp_set)
from .graphs import (Graph, Spectrum, complete_bipartite, is_isomorphic, line_graph,
                     maximal_cliques, spectrum_exact, strongly_regular_parameters)
from .pauli import (PauliOperator, SystemSpec, build_matrix, commutes, enumerate_operators,
                    matrix_commutes, mub_classes_prime, symplectic_residue)

__version__ = "0.1.0"
