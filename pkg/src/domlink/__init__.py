"""Connected domination, complement compliance, and small-graph topology.

Bitset graphs up to 32 vertices, exact gamma / gamma_c solvers,
k-compliance through both the domination and the contraction-minor
route, necessary-condition filters for the order 13/14/15
classifications, Petersen-family / intrinsic-linking machinery, and a
seeded search engine, all behind the `domlink` CLI.
"""

from .compliance import (ComplianceReport, FilterVerdict, TheoremFalsificationError,
                         ThreeWay, bound_fn_sqrt, check_nordhaus_product,
                         check_nordhaus_sum, compliance_by_minor, compute_f,
                         filter_basic, filter_order14, filter_order15,
                         is_k_compliant, min_k_of, verify_one_of_three)
from .constructions import (SrgParams, cone, family, k331, named, paley, petersen,
                            srg_check, triangular_prism, twin_add)
from .domination import INFINITE, DominationResult, gamma, gamma_c, three_set_witness
from .graph import (Graph, bits, common_neighbors, degree_stats, delta_star,
                    disjoint_union, join, mask_of, vertex_list)
from .graphio import (GraphParseError, emit_edgelist, emit_graph6, parse_edgelist,
                      parse_graph, parse_graph6)
from .iso import (CanonicalForm, are_isomorphic, canonical_form, canonical_graph,
                  canonical_ordering)
from .rng import XorShift64Star
from .search import (SearchResult, SearchSpec, nonisomorphic_graphs, random_gnp,
                     random_regular, search_non_compliant, unlabeled_graph_count)
from .topology import (UNKNOWN, IkStatus, MinorWitness, check_minor_witness,
                       delta_y, has_minor, il_witness, is_ik_sufficient, is_il,
                       is_max_nil, petersen_family, saturate_nil, y_delta)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
