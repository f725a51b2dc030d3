"""Sandpile groups of multigraphs, attached-cycle graphs and chains of cycles."""

__version__ = "0.1.0"

from .errors import (
    ArityMismatchError,
    DisconnectedError,
    EmptyArgsError,
    InvalidSpecError,
    NotSquareError,
    OutOfRangeError,
    ParseError,
    SandpileError,
    SelfLoopError,
    TooLargeError,
    TooSmallError,
)
from .families import (
    ChSpec,
    HSpec,
    build_ch_canonical,
    build_ch_member,
    build_h,
    canonical_plan,
    ch_vertex_count,
    h_edge_count,
    iter_plans,
)
from .formulas import (
    enumerate_C,
    eval_alpha,
    eval_beta,
    eval_beta_prime,
    eval_gamma,
    f_recursive,
    g_closed_form,
    split_AB,
)
from .graph import (
    Multigraph,
    add_edges,
    degree,
    format_graph,
    is_connected,
    laplacian,
    parse_graph,
    read_graph,
    reduced_laplacian,
    to_dot,
    write_graph,
)
from .linalg import IntMatrix, SmithForm, determinant, elementary_ops_fuzz, smith_normal_form
from .sandpile import (
    GroupStructure,
    group_order,
    groups_isomorphic,
    sandpile_group,
    spanning_tree_count_bruteforce,
)
