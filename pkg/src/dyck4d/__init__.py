"""Exact combinatorics on the four-coordinate lattice of balanced-parenthesis
paths: node algebra, path-count tables, closed-form Catalan identities, word
enumeration, and deterministic diagram rendering.

Every identity has two independent routes (recurrence tables vs binomial
closed forms vs brute-force scans), and the ``verify`` machinery runs them
against each other.
"""

from .coords import (
    AXES,
    MAX_COORD,
    PLANES_2D,
    PLANES_3D,
    Isoline,
    Node,
    Plane,
    is_reachable,
    isolines_through,
    iter_nodes,
    node_from,
    nodes_on_isoline,
    planarity_equation,
    planarity_residual,
    project,
)
from .dynamics import (
    DEFAULT_POSITION_CAP,
    TABLE_FORMAT,
    DynamicsTable,
    build_table,
    catalan,
    table_from_csv,
    table_from_json,
    table_to_csv,
    table_to_json,
)
from .errors import (
    DomainError,
    DyckError,
    InvalidCharacter,
    NotANode,
    OutOfRange,
    PrefixViolation,
    ResourceLimit,
    TableFormatError,
)
from .identities import (
    Decomposition,
    binomial,
    convolution,
    decompose_catalan,
    square_term,
    square_term_special,
)
from .paths import (
    COUNT_SCAN_CAP,
    ENUMERATION_CAP,
    DyckWord,
    PathMove,
    PathTrace,
    ProjectedPath,
    count_paths_to,
    enumerate_words,
    format_word,
    format_words,
    parse_word,
    parse_words,
    project_path,
    trace,
    trace_to_csv,
)
from .render import Diagram, DiagramSpec, emit, emit_svg, emit_text, layout
from .verify import CheckResult, run_checks

__version__ = "0.1.0"

__all__ = [
    "AXES",
    "MAX_COORD",
    "PLANES_2D",
    "PLANES_3D",
    "Isoline",
    "Node",
    "Plane",
    "is_reachable",
    "isolines_through",
    "iter_nodes",
    "node_from",
    "nodes_on_isoline",
    "planarity_equation",
    "planarity_residual",
    "project",
    "DEFAULT_POSITION_CAP",
    "TABLE_FORMAT",
    "DynamicsTable",
    "build_table",
    "catalan",
    "table_from_csv",
    "table_from_json",
    "table_to_csv",
    "table_to_json",
    "DomainError",
    "DyckError",
    "InvalidCharacter",
    "NotANode",
    "OutOfRange",
    "PrefixViolation",
    "ResourceLimit",
    "TableFormatError",
    "Decomposition",
    "binomial",
    "convolution",
    "decompose_catalan",
    "square_term",
    "square_term_special",
    "COUNT_SCAN_CAP",
    "ENUMERATION_CAP",
    "DyckWord",
    "PathMove",
    "PathTrace",
    "ProjectedPath",
    "count_paths_to",
    "enumerate_words",
    "format_word",
    "format_words",
    "parse_word",
    "parse_words",
    "project_path",
    "trace",
    "trace_to_csv",
    "Diagram",
    "DiagramSpec",
    "emit",
    "emit_svg",
    "emit_text",
    "layout",
    "CheckResult",
    "run_checks",
    "__version__",
]
