"""DCell data-center topologies and their vertex symmetry."""
from .core import (
    BudgetExceeded,
    DCellError,
    InvalidLabelError,
    Params,
    ParameterError,
    Topology,
    build_graph,
    check_label,
    edge_between_copies,
    format_label,
    level0_neighbors,
    level_neighbor,
    neighbors,
    parse_label,
    suffix_of_uid,
    uid,
    validate_label,
    vertex_count,
)
from .cycles import blocked_extension_check, cycles_through, six_cycle_census, verify_cycle
from .symmetry import (
    HSpec,
    d1_wiring,
    flag_of,
    induced_automorphism,
    is_automorphism,
    paper_case,
    transitivity_map,
    vertex_of,
)
from .certify import Inconclusive, Verdict, decide, exhaustive_orbits, invariant_partition
from .claims import paper_check

__version__ = "0.1.0"
