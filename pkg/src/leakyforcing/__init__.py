"""Exact zero forcing and leaky forcing on small simple graphs."""

from .graph import (Graph, GraphError, cartesian_product, complete_graph, connected_components,
                    cycle_graph, delete_edge, delete_vertex, emit_graph6, empty_graph,
                    from_edge_list, is_cycle, is_path, is_tree, members, parse_edge_list,
                    parse_graph6, path_graph, vset)
from .forcing import (Force, ForcingChain, ForcingProcess, chains, closure, forcers_of,
                      possible_forces, reversal, run_process, switch_processes, valid_forces)
from .leaky import (LeakyVerdict, StructuralReport, is_resilient, is_zero_forcing_set,
                    lemma_reversal_witness, structural_screen, verify_leaky_adversary,
                    verify_leaky_characterization)
from .solver import (SolveResult, all_minimum_leaky_sets, edge_deletion_delta,
                     extendability_experiment, leaky_forcing_number, resilience_classification,
                     vertex_deletion_delta, zero_forcing_number)

__version__ = "0.1.0"
