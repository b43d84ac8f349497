"""Contractible structures in 3-connected matroids: detection, bounds,
construction and verification.

The pieces: a rank-oracle matroid core with graph, linear, uniform and
table backends; minor search with witnesses; classification of elements by
how their removal interacts with 3-connectivity and a fixed minor; the
configuration detectors (vertbarriers, caramboles, triwebs, biwebs); free
families with an exhaustive maximizer and a constructive builder; and a
reporting CLI.
"""

from .budget import Deadline, NO_DEADLINE
from .errors import (BudgetError, CaramboleError, CounterexampleError,
                     DomainError, FormatError)
from .matroid import (Matroid, bond_matroid, emit_bases_text, graphic_matroid,
                      linear_matroid, matroid_from_rank_table,
                      parse_bases_text, sort_labels, uniform_matroid,
                      wheel_matroid, whirl_matroid)
from .graphs import (MinorWitnessGraph, SimpleGraph, are_isomorphic,
                     canonical_g6, complete_bipartite, complete_graph, corpus,
                     corpus_from_file, emit_graph6, find_minor,
                     k3n_triple_prime, named_graph, octahedron_graph,
                     parse_graph6, prism_graph, sharpness_instance,
                     wheel_graph)
from .contractibility import (ElementClassification, MinorWitnessMatroid,
                              classify_element, clear_minor_memo, has_minor,
                              has_minor_bool, is_replaceable,
                              is_vertically_contractible_set,
                              n_contractible_elements, n_deletable_elements,
                              vertically_contractible_elements)
from .structures import (Biweb, Carambole, Triweb, Vertbarrier, ThetaMatroid,
                         certify_filament, circuit_transfer, expand_circuit,
                         find_biwebs, find_caramboles, find_vertbarriers,
                         is_circuit, is_cocircuit, rank3_cocircuits,
                         reconstruct, small_structures, theta)
from .free_family import (BuildStep, BuildTrace, FamilyMember, FreeFamily,
                          build_free_family, candidate_members,
                          exhaustive_max_free_family, is_free_family,
                          lifter_step, verify_bounds)
from .report import (LineItem, RunConfig, VerificationReport, render_csv,
                     render_json, report_payload, strip_timing,
                     write_counterexample, write_report)

__all__ = [name for name in dir() if not name.startswith("_")]

__version__ = "0.1.0"
