"""Unicellular maps as boundary words, their surgery graphs, and checks of
the connectivity, matching and parity results on small genus."""
from .canon import (CanonicalClass, canonical_form, canonical_word, is_chiral,
                    is_isomorphic, mirror, symmetry_count)
from .enumeration import (EnumerationCursor, EnumerationSpec, collection_formula,
                          count_maps, cubic, enumerate_chunk, enumerate_maps,
                          enumerate_words, rooted_count, unicellular_collections)
from .errors import (CapExceeded, MapError, PartialGraph, PropertyFailure,
                     Unrealizable)
from .graph import (SurgeryGraph, build_graph, components, diameter, is_connected,
                    isolated_nodes)
from .homology import (InterlacementMatrix, ParityCertificate, genus_from_rank,
                       interlacement, is_even_partition, parity_certificate)
from .maps import (RotationSystem, UnicellularMap, collapse_edge, degree_partition,
                   genus, parse_word, partition_shape, read_umf, rotation_system,
                   split_vertex, subdivide_edge, to_umf, vertex_structure, write_umf)
from .structure import (bridge_elimination, bridges, is_cubic, is_virtual_collection,
                        perfect_matching, underlying_graph)
from .surgery import (SurgeryMove, involution_loop, is_intertwined, moves, neighborhood,
                      neighbors, normal_form, surgery)
from .verify import SUITES, VerificationReport, counting_report, run_suite

__version__ = "0.1.0"
