"""Exact zero forcing, general position and induced path cover numbers of
small graphs, with tools to check the relations between them."""

__version__ = "0.1.0"

from .graph import (  # noqa: E402
    CapExceeded,
    ClassFlags,
    Graph,
    GraphError,
    build_graph,
    classify,
    components,
    delete_vertices,
    induced_subgraph,
    is_connected,
    leaves,
    simplicial_vertices,
)
from .metric import all_pairs_distances, interval  # noqa: E402
from .forcing import (  # noqa: E402
    ForcingChronicle,
    forcing_closure,
    is_zero_forcing_set,
    zero_forcing_number,
    zero_forcing_unicyclic_fast,
)
from .genpos import (  # noqa: E402
    conflict_triples,
    general_position_violation,
    gp_block_fast,
    gp_number,
    gp_tree_fast,
    is_general_position_set,
)
from .pathcover import (  # noqa: E402
    is_partial_sun,
    partial_sun_path_cover,
    path_cover_number,
    path_cover_via_trim,
    replay_trim,
    trimmed_form,
)
from .canon import canonical_graph, canonical_key  # noqa: E402
from .graph6 import decode_graph6, encode_graph6, read_graph6, write_graph6  # noqa: E402
from .families import FamilySpec, generate, validate_figure_family  # noqa: E402
from .harness import THEOREMS, hunt, invariant_record, verify_theorem  # noqa: E402
