"""Edge-flipping puzzles on finite simple connected graphs."""

from .edgespace import (EdgeSet, VertexSet, coset_representative, delta_decompose,
                        edge_cut, simple_basis, simple_weight, sym_diff, vertex_cut)
from .flips import (Permutation, alpha, apply_move, compose, element_of_word,
                    generate_subgroup, generator, word_for_transposition)
from .graph import (Graph, SpanningTree, build_graph, has_induced_path_of_k_vertices,
                    has_path_of_k_edges, line_graph, load_graph, spanning_tree)
from .orbits import (OrbitDescriptor, classify, enumerate_orbit, orbit_count, orbit_size,
                     same_orbit, sw_update_predict)
from .solver import solve, verify_sequence
from .structure import (SemidirectElement, gamma, groups_isomorphic, semidirect_mul,
                        structure, theta_apply, verify_structure)
from .vertexflip import (YGraphSpec, build_Y, classify_Y, line_graph_transport, pi1,
                         vertex_group_order_bruteforce, vertex_move)
from .cayley import GroupElement

__all__ = [
    "EdgeSet", "VertexSet", "coset_representative", "delta_decompose", "edge_cut",
    "simple_basis", "simple_weight", "sym_diff", "vertex_cut",
    "Permutation", "alpha", "apply_move", "compose", "element_of_word",
    "generate_subgroup", "generator", "word_for_transposition",
    "Graph", "SpanningTree", "build_graph", "has_induced_path_of_k_vertices",
    "has_path_of_k_edges", "line_graph", "load_graph", "spanning_tree",
    "OrbitDescriptor", "classify", "enumerate_orbit", "orbit_count", "orbit_size",
    "same_orbit", "sw_update_predict",
    "solve", "verify_sequence",
    "SemidirectElement", "gamma", "groups_isomorphic", "semidirect_mul",
    "structure", "theta_apply", "verify_structure",
    "YGraphSpec", "build_Y", "classify_Y", "line_graph_transport", "pi1",
    "vertex_group_order_bruteforce", "vertex_move",
    "GroupElement",
]
