"""Weight-descent certificates for monochromatic odd cycles in edge-coloured
complete graphs."""
from .bfs import (BfsLayering, OddCycleCertificate, bfs_layers, extract_odd_cycle,
                  find_within_layer_edge, parity_partition)
from .bounds import BoundReport, RealBase, compute_bounds
from .chromatic import ProperColouring, chromatic_number, max_weight_class, proper_colouring
from .colouring import (EdgeColouring, generate_doubling, generate_random, load, loads, new_complete,
                        save, dumps)
from .descent import DescentTrace, Violation, descend, extract_theorem1, extract_theorem2
from .graph import Graph
from .oracle import efrs_check, find_mono_odd_cycle, has_cycle_of_length, verify_certificate
from .trace_check import verify_trace
from .weights import WeightContext, WeightValue, layer_threshold, scale_by_alpha, vertex_weight

__version__ = "0.1.0"
